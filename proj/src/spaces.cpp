#include "qnull/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

namespace qnull {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) { // into [0, 2pi)
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    if (a == kTwoPi) a = 0.0;
    return a;
}

double wrap_pm_pi(double a) { // into (-pi, pi]
    a = std::fmod(a, kTwoPi);
    if (a > kPi) a -= kTwoPi;
    if (a <= -kPi) a += kTwoPi;
    return a;
}

// 3D coordinates of an S2/RP2 representative.
struct Vec3 {
    double x, y, z;
};

Vec3 to3(const SpacePoint& p) { return {p.alpha.real(), p.alpha.imag(), p.t}; }

double dot3(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 scale3(const Vec3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }

Vec3 add3(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }

Vec3 cross3(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm3(const Vec3& a) { return std::sqrt(dot3(a, a)); }

Vec3 normalize3(const Vec3& a) {
    const double n = norm3(a);
    if (n == 0.0) throw Error("cannot normalize the zero vector");
    return scale3(a, 1.0 / n);
}

SpacePoint from3(Space space, const Vec3& v) {
    SpacePoint p;
    p.space = space;
    p.alpha = Complex(v.x, v.y);
    p.t = v.z;
    if (space == Space::RP2) return SpacePoint::rp2(p.alpha, p.t);
    return p;
}

double sphere_angle(const Vec3& a, const Vec3& b) {
    // atan2 form: well conditioned at both ends, and exactly 0 for
    // bitwise-equal inputs (the cross product cancels identically).
    return std::atan2(norm3(cross3(a, b)), dot3(a, b));
}

// Distance from a wedge angle to the wedge point along its own circle.
double angle_to_base(double a) { return std::min(a, kTwoPi - a); }

} // namespace

std::string space_name(Space s) {
    switch (s) {
        case Space::S1: return "s1";
        case Space::S2: return "s2";
        case Space::RP2: return "rp2";
        case Space::Wedge: return "wedge";
    }
    return "?";
}

Space space_from_name(const std::string& name) {
    if (name == "s1") return Space::S1;
    if (name == "s2") return Space::S2;
    if (name == "rp2") return Space::RP2;
    if (name == "wedge") return Space::Wedge;
    throw InputError("unknown space tag: " + name);
}

SpacePoint SpacePoint::s1(Complex z) {
    SpacePoint p;
    p.space = Space::S1;
    p.alpha = z;
    return p;
}

SpacePoint SpacePoint::s2(Complex alpha, double t) {
    SpacePoint p;
    p.space = Space::S2;
    p.alpha = alpha;
    p.t = t;
    return p;
}

SpacePoint SpacePoint::rp2(Complex alpha, double t) {
    // Canonical hemisphere: t > 0, or t = 0 and (Re > 0, or Re = 0 and Im > 0).
    bool flip = false;
    if (t < 0.0) {
        flip = true;
    } else if (t == 0.0) {
        if (alpha.real() < 0.0) flip = true;
        else if (alpha.real() == 0.0 && alpha.imag() < 0.0) flip = true;
    }
    SpacePoint p;
    p.space = Space::RP2;
    p.alpha = flip ? -alpha : alpha;
    p.t = flip ? -t : t;
    // Clear signed zeros so representatives compare bitwise.
    if (p.t == 0.0) {
        p.t = 0.0;
        if (p.alpha.real() == 0.0) p.alpha = Complex(0.0, p.alpha.imag());
        if (p.alpha.imag() == 0.0) p.alpha = Complex(p.alpha.real(), 0.0);
    }
    return p;
}

SpacePoint SpacePoint::wedge(WedgeBranch b, double angle) {
    SpacePoint p;
    p.space = Space::Wedge;
    p.branch = b;
    p.angle = wrap_angle(angle);
    return p;
}

SpacePoint SpacePoint::antipode() const {
    if (space != Space::S2) throw InputError("antipode is defined on S2 points");
    return SpacePoint::s2(-alpha, -t);
}

SpacePoint basepoint(Space s) {
    switch (s) {
        case Space::S1: return SpacePoint::s1(Complex(1.0, 0.0));
        case Space::S2: return SpacePoint::s2(Complex(1.0, 0.0), 0.0);
        case Space::RP2: return SpacePoint::rp2(Complex(1.0, 0.0), 0.0);
        case Space::Wedge: return SpacePoint::wedge(WedgeBranch::A, 0.0);
    }
    throw InputError("bad space tag");
}

void validate_point(const SpacePoint& p, double tol) {
    switch (p.space) {
        case Space::S1: {
            const double r = std::abs(p.alpha);
            if (!std::isfinite(r) || std::abs(r - 1.0) > tol)
                throw InputError("S1 point off the unit circle");
            return;
        }
        case Space::S2:
        case Space::RP2: {
            const double r = std::norm(p.alpha) + p.t * p.t;
            if (!std::isfinite(r) || std::abs(r - 1.0) > tol)
                throw InputError("sphere point violates |alpha|^2 + t^2 = 1");
            return;
        }
        case Space::Wedge: {
            if (!std::isfinite(p.angle) || p.angle < 0.0 || p.angle >= kTwoPi)
                throw InputError("wedge angle outside [0, 2pi)");
            return;
        }
    }
    throw InputError("bad space tag");
}

double metric(const SpacePoint& p, const SpacePoint& q) {
    if (p.space != q.space) throw InputError("metric: space tag mismatch");
    switch (p.space) {
        case Space::S1:
            return std::abs(std::arg(q.alpha * std::conj(p.alpha)));
        case Space::S2:
            return sphere_angle(to3(p), to3(q));
        case Space::RP2: {
            const double d = sphere_angle(to3(p), to3(q));
            return std::min(d, kPi - d);
        }
        case Space::Wedge: {
            if (p.branch == q.branch) {
                const double d = std::abs(p.angle - q.angle);
                return std::min(d, kTwoPi - d);
            }
            return angle_to_base(p.angle) + angle_to_base(q.angle);
        }
    }
    throw InputError("bad space tag");
}

namespace {

SpacePoint slerp_s2(const SpacePoint& p, const SpacePoint& q, double u) {
    const Vec3 a = to3(p), b = to3(q);
    const double omega = sphere_angle(a, b);
    Vec3 r;
    if (omega < 1e-12) {
        r = add3(scale3(a, 1.0 - u), scale3(b, u));
    } else {
        const double s = std::sin(omega);
        r = add3(scale3(a, std::sin((1.0 - u) * omega) / s),
                 scale3(b, std::sin(u * omega) / s));
    }
    return from3(Space::S2, normalize3(r));
}

SpacePoint interp_wedge(const SpacePoint& p, const SpacePoint& q, double u) {
    if (p.branch == q.branch || angle_to_base(q.angle) == 0.0 ||
        angle_to_base(p.angle) == 0.0) {
        // Same circle (a point at the wedge point adopts the other branch).
        const WedgeBranch b =
            angle_to_base(p.angle) == 0.0 && p.branch != q.branch ? q.branch : p.branch;
        const double d = wrap_pm_pi(q.angle - p.angle);
        return SpacePoint::wedge(b, p.angle + u * d);
    }
    // Through the wedge point: walk p's shorter side to 0, then out to q.
    const double dp = angle_to_base(p.angle);
    const double dq = angle_to_base(q.angle);
    const double total = dp + dq;
    const double w = u * total;
    const auto along = [](const SpacePoint& x, double dist_from_x) {
        // Move from x toward the wedge point by dist_from_x along the
        // shorter side of its circle.
        const double dir = x.angle <= kPi ? -1.0 : 1.0;
        return SpacePoint::wedge(x.branch, x.angle + dir * dist_from_x);
    };
    if (w <= dp) return along(p, w);
    return along(q, total - w);
}

} // namespace

namespace {

bool same_point_bits(const SpacePoint& p, const SpacePoint& q) {
    switch (p.space) {
        case Space::S1: return p.alpha == q.alpha;
        case Space::S2:
        case Space::RP2: return p.alpha == q.alpha && p.t == q.t;
        case Space::Wedge:
            return p.angle == q.angle && (p.branch == q.branch || p.angle == 0.0);
    }
    return false;
}

} // namespace

SpacePoint interpolate(const SpacePoint& p, const SpacePoint& q, double u) {
    if (p.space != q.space) throw InputError("interpolate: space tag mismatch");
    if (u == 0.0 || same_point_bits(p, q)) return p;
    if (u == 1.0) return q;
    switch (p.space) {
        case Space::S1: {
            const double d = std::arg(q.alpha * std::conj(p.alpha));
            const Complex z = p.alpha * std::polar(1.0, u * d);
            return SpacePoint::s1(z / std::abs(z));
        }
        case Space::S2:
            return slerp_s2(p, q, u);
        case Space::RP2: {
            // Interpolate representatives on S2, picking the lift of q
            // nearest the lift of p, then re-canonicalize.
            const Vec3 a = to3(p);
            Vec3 b = to3(q);
            if (dot3(a, b) < 0.0) b = scale3(b, -1.0);
            SpacePoint pa = SpacePoint::s2(p.alpha, p.t);
            SpacePoint qb = from3(Space::S2, b);
            const SpacePoint r = slerp_s2(pa, qb, u);
            return SpacePoint::rp2(r.alpha, r.t);
        }
        case Space::Wedge:
            return interp_wedge(p, q, u);
    }
    throw InputError("bad space tag");
}

SampledLoop make_loop(Space space, std::vector<SpacePoint> samples, double tol) {
    if (samples.size() < 16) throw InputError("loops need at least 16 samples");
    for (const SpacePoint& p : samples) {
        if (p.space != space) throw InputError("loop sample has wrong space tag");
        validate_point(p, tol);
    }
    SampledLoop loop;
    loop.space = space;
    loop.samples = std::move(samples);
    double mesh = 0.0;
    const int n = loop.size();
    for (int k = 0; k < n; ++k)
        mesh = std::max(mesh, metric(loop.samples[static_cast<size_t>(k)],
                                     loop.samples[static_cast<size_t>((k + 1) % n)]));
    loop.mesh_bound = mesh;
    return loop;
}

SampledPath make_path(Space space, std::vector<SpacePoint> samples, double tol) {
    if (samples.size() < 2) throw InputError("paths need at least 2 samples");
    for (const SpacePoint& p : samples) {
        if (p.space != space) throw InputError("path sample has wrong space tag");
        validate_point(p, tol);
    }
    SampledPath path;
    path.space = space;
    path.samples = std::move(samples);
    return path;
}

double path_mesh(const SampledPath& p) {
    double mesh = 0.0;
    for (size_t k = 0; k + 1 < p.samples.size(); ++k)
        mesh = std::max(mesh, metric(p.samples[k], p.samples[k + 1]));
    return mesh;
}

SpacePoint loop_point(const SampledLoop& loop, double s) {
    const int n = loop.size();
    double x = (s - std::floor(s)) * n;
    int k = static_cast<int>(x);
    if (k >= n) k = 0, x = 0.0;
    const double frac = x - k;
    const SpacePoint& a = loop.samples[static_cast<size_t>(k)];
    if (frac == 0.0) return a;
    return interpolate(a, loop.samples[static_cast<size_t>((k + 1) % n)], frac);
}

SpacePoint path_point(const SampledPath& path, double s) {
    const int m = path.segments();
    if (s <= 0.0) return path.samples.front();
    if (s >= 1.0) return path.samples.back();
    const double x = s * m;
    const int k = std::min(static_cast<int>(x), m - 1);
    const double frac = x - k;
    const SpacePoint& a = path.samples[static_cast<size_t>(k)];
    if (frac == 0.0) return a;
    return interpolate(a, path.samples[static_cast<size_t>(k + 1)], frac);
}

SampledPath as_path(const SampledLoop& loop) {
    SampledPath p;
    p.space = loop.space;
    p.samples = loop.samples;
    p.samples.push_back(loop.samples.front());
    return p;
}

SampledLoop to_loop(const SampledPath& path, double tol) {
    if (metric(path.start(), path.end()) > tol)
        throw InputError("path is not closed; cannot form a loop");
    std::vector<SpacePoint> samples(path.samples.begin(), path.samples.end() - 1);
    return make_loop(path.space, std::move(samples));
}

SampledPath reverse(const SampledPath& p) {
    SampledPath r = p;
    std::reverse(r.samples.begin(), r.samples.end());
    return r;
}

SampledPath resample(const SampledPath& p, int segments) {
    if (segments < 1) throw InputError("resample needs at least one segment");
    SampledPath r;
    r.space = p.space;
    r.samples.reserve(static_cast<size_t>(segments) + 1);
    for (int i = 0; i <= segments; ++i)
        r.samples.push_back(path_point(p, static_cast<double>(i) / segments));
    return r;
}

SampledPath concat(const SampledPath& p, const SampledPath& q, double tol) {
    if (p.space != q.space) throw InputError("concat: space tag mismatch");
    if (metric(p.end(), q.start()) > tol)
        throw InputError("concat: p ends away from where q starts");
    const int half = std::max(p.segments(), q.segments());
    SampledPath r;
    r.space = p.space;
    r.samples.reserve(static_cast<size_t>(2 * half) + 1);
    for (int i = 0; i <= half; ++i)
        r.samples.push_back(path_point(p, static_cast<double>(i) / half));
    for (int i = 1; i <= half; ++i)
        r.samples.push_back(path_point(q, static_cast<double>(i) / half));
    return r;
}

SpacePoint sigma_point(double tau) {
    if (tau == 0.0) return SpacePoint::s2(Complex(1.0, 0.0), 0.0);
    if (tau == 1.0) return SpacePoint::s2(Complex(-1.0, 0.0), 0.0);
    if (tau == 0.5) return SpacePoint::s2(Complex(0.0, 1.0), 0.0);
    const double a = kPi * tau;
    Complex z(std::cos(a), std::sin(a));
    z /= std::abs(z);
    return SpacePoint::s2(z, 0.0);
}

SampledPath sigma_path(int n) {
    if (n < 16) throw InputError("sigma_path needs at least 16 segments");
    SampledPath p;
    p.space = Space::S2;
    p.samples.reserve(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) p.samples.push_back(sigma_point(static_cast<double>(i) / n));
    return p;
}

SampledLoop circle_loop(int n, int turns) {
    std::vector<SpacePoint> samples;
    samples.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double a = kTwoPi * turns * k / n;
        samples.push_back(k == 0 ? SpacePoint::s1(Complex(1.0, 0.0))
                                 : SpacePoint::s1(std::polar(1.0, a)));
    }
    return make_loop(Space::S1, std::move(samples));
}

SampledLoop rp2_generator_loop(int n) {
    std::vector<SpacePoint> samples;
    samples.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const SpacePoint s = sigma_point(static_cast<double>(k) / n);
        samples.push_back(SpacePoint::rp2(s.alpha, s.t));
    }
    return make_loop(Space::RP2, std::move(samples));
}

SampledLoop rp2_generator_squared_loop(int n) {
    if (n % 2 != 0) throw InputError("squared generator needs an even sample count");
    const SampledLoop g = rp2_generator_loop(n / 2);
    std::vector<SpacePoint> samples;
    samples.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        samples.push_back(g.samples[static_cast<size_t>(k % (n / 2))]);
    return make_loop(Space::RP2, std::move(samples));
}

SampledLoop wedge_branch_loop(WedgeBranch b, int turns, int n) {
    std::vector<SpacePoint> samples;
    samples.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        samples.push_back(SpacePoint::wedge(b, kTwoPi * turns * k / n));
    return make_loop(Space::Wedge, std::move(samples));
}

SampledLoop wedge_commutator_loop(int a_turns, int b_turns, int n) {
    if (n % 4 != 0) throw InputError("commutator loop needs a sample count divisible by 4");
    const int q = n / 4;
    std::vector<SpacePoint> samples;
    samples.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const int leg = k / q;
        const double tau = static_cast<double>(k % q) / q;
        switch (leg) {
            case 0: samples.push_back(SpacePoint::wedge(WedgeBranch::A, kTwoPi * a_turns * tau)); break;
            case 1: samples.push_back(SpacePoint::wedge(WedgeBranch::B, kTwoPi * b_turns * tau)); break;
            case 2: samples.push_back(SpacePoint::wedge(WedgeBranch::A, kTwoPi * a_turns * (1.0 - tau))); break;
            default: samples.push_back(SpacePoint::wedge(WedgeBranch::B, kTwoPi * b_turns * (1.0 - tau))); break;
        }
    }
    return make_loop(Space::Wedge, std::move(samples));
}

SampledLoop constant_loop(Space space, int n) {
    return make_loop(space, std::vector<SpacePoint>(static_cast<size_t>(n), basepoint(space)));
}

SampledPath rp2_lift(const SampledLoop& loop, const SpacePoint& start) {
    if (loop.space != Space::RP2) throw InputError("rp2_lift expects an RP2 loop");
    if (start.space != Space::S2) throw InputError("rp2_lift start must be an S2 point");
    if (loop.mesh_bound >= kPi / 4.0)
        throw MeshError("rp2_lift: loop mesh must stay below pi/4");
    if (metric(project_rp2(start), loop.samples.front()) > 1e-9)
        throw InputError("rp2_lift: start does not project to the first loop sample");

    SampledPath lift;
    lift.space = Space::S2;
    lift.samples.reserve(loop.samples.size() + 1);
    SpacePoint prev = start;
    lift.samples.push_back(prev);
    const int n = loop.size();
    for (int k = 1; k <= n; ++k) {
        const SpacePoint& rep = loop.samples[static_cast<size_t>(k % n)];
        const SpacePoint up = SpacePoint::s2(rep.alpha, rep.t);
        const SpacePoint down = up.antipode();
        const double du = metric(prev, up), dd = metric(prev, down);
        const SpacePoint next = du <= dd ? up : down;
        if (std::min(du, dd) >= kPi / 4.0)
            throw MeshError("rp2_lift: ambiguous step, both representatives too far");
        lift.samples.push_back(next);
        prev = next;
    }
    return lift;
}

SpacePoint project_rp2(const SpacePoint& p) {
    if (p.space != Space::S2) throw InputError("project_rp2 expects an S2 point");
    return SpacePoint::rp2(p.alpha, p.t);
}

std::uint64_t loop_hash(const SampledLoop& loop) {
    std::uint64_t h = 1469598103934665603ull;
    const auto mix = [&h](double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    for (const SpacePoint& p : loop.samples) {
        mix(p.alpha.real());
        mix(p.alpha.imag());
        mix(p.t);
        mix(p.angle);
        mix(p.branch == WedgeBranch::A ? 0.0 : 1.0);
    }
    return h;
}

namespace {

// Rotation taking `from` to the north pole (0,0,1), applied to v.
struct Rotation {
    Vec3 axis;
    double angle;

    Vec3 apply(const Vec3& v, double sign) const {
        if (angle == 0.0) return v;
        const double c = std::cos(sign * angle), s = std::sin(sign * angle);
        // Rodrigues.
        const Vec3 kxv = cross3(axis, v);
        const double kdv = dot3(axis, v);
        return add3(add3(scale3(v, c), scale3(kxv, s)), scale3(axis, kdv * (1.0 - c)));
    }
};

Rotation rotation_to_north(const Vec3& from) {
    const Vec3 north{0.0, 0.0, 1.0};
    const Vec3 ax = cross3(from, north);
    const double n = norm3(ax);
    if (n < 1e-12) {
        if (from.z > 0.0) return {north, 0.0};
        return {{1.0, 0.0, 0.0}, kPi}; // south pole: half turn about x
    }
    return {scale3(ax, 1.0 / n), sphere_angle(from, north)};
}

} // namespace

DiskGrid<SpacePoint> contract_sphere_loop(const SampledLoop& loop, const SpacePoint& base,
                                          int rings) {
    if (loop.space != Space::S2) throw InputError("contract_sphere_loop expects an S2 loop");
    if (rings < 2) throw InputError("contract_sphere_loop needs at least 2 rings");
    if (metric(loop.samples.front(), base) > 1e-9)
        throw InputError("contract_sphere_loop: loop is not based at the given point");

    const int n = loop.size();
    std::vector<SpacePoint> samples = loop.samples;

    // Avoided-direction search on a 32 x 64 latitude-longitude grid.
    const auto min_dist_to = [&samples](const Vec3& c) {
        double best = kPi;
        for (const SpacePoint& p : samples) best = std::min(best, sphere_angle(to3(p), c));
        return best;
    };
    Vec3 avoided{0.0, 0.0, 1.0};
    double avoided_dist = -1.0;
    for (int i = 0; i < 32; ++i) {
        const double lat = kPi * (i + 0.5) / 32.0 - kPi / 2.0;
        for (int j = 0; j < 64; ++j) {
            const double lon = kTwoPi * j / 64.0;
            const Vec3 c{std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon),
                         std::sin(lat)};
            const double d = min_dist_to(c);
            if (d > avoided_dist) {
                avoided_dist = d;
                avoided = c;
            }
        }
    }

    const double danger = kPi / (4.0 * n);
    if (avoided_dist < danger) {
        // Deterministic jitter away from the avoided point.
        std::mt19937_64 rng(loop_hash(loop));
        std::uniform_real_distribution<double> mag(0.5, 1.0);
        const double step = loop.mesh_bound / 10.0;
        for (size_t k = 1; k < samples.size(); ++k) {
            Vec3 v = to3(samples[k]);
            if (sphere_angle(v, avoided) < 2.0 * danger) {
                Vec3 away = add3(v, scale3(avoided, -dot3(v, avoided)));
                if (norm3(away) < 1e-9) continue;
                away = normalize3(away);
                v = normalize3(add3(v, scale3(away, mag(rng) * step)));
                samples[k] = from3(Space::S2, v);
            }
        }
        double after = kPi;
        for (const SpacePoint& p : samples) after = std::min(after, sphere_angle(to3(p), avoided));
        if (after < danger)
            throw Error("contract_sphere_loop: no avoided point even after jitter");
    }

    const Rotation rot = rotation_to_north(avoided);
    const auto project = [&rot](const SpacePoint& p) {
        const Vec3 v = rot.apply(to3(p), +1.0);
        const double denom = 1.0 - v.z;
        return Complex(v.x / denom, v.y / denom);
    };
    const auto unproject = [&rot](Complex w) {
        const double r2 = std::norm(w);
        const Vec3 v{2.0 * w.real() / (1.0 + r2), 2.0 * w.imag() / (1.0 + r2),
                     (r2 - 1.0) / (1.0 + r2)};
        return from3(Space::S2, normalize3(rot.apply(v, -1.0)));
    };

    const Complex cb = project(base);
    std::vector<Complex> plane(samples.size());
    for (size_t k = 0; k < samples.size(); ++k) plane[k] = project(samples[k]);

    DiskGrid<SpacePoint> grid;
    grid.rings = rings;
    grid.angles = n;
    grid.center = base;
    grid.cells.assign(static_cast<size_t>(rings), std::vector<SpacePoint>());
    for (int i = 1; i <= rings; ++i) {
        std::vector<SpacePoint>& row = grid.ring(i);
        row.resize(static_cast<size_t>(n));
        if (i == rings) {
            row = samples; // boundary ring is the (possibly jittered) loop verbatim
        } else {
            const double r = static_cast<double>(i) / rings;
            for (int k = 0; k < n; ++k) {
                const Complex w = cb + r * (plane[static_cast<size_t>(k)] - cb);
                // The ray through the basepoint image never leaves it; keep
                // those cells exact rather than round-tripping the charts.
                row[static_cast<size_t>(k)] = w == cb ? base : unproject(w);
            }
            row[0] = base; // the based column stays pinned
        }
    }
    return grid;
}

double PathReparam::operator()(double s) const {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const auto& [s0, v0] = breakpoints[i];
        const auto& [s1, v1] = breakpoints[i + 1];
        if (s <= s1) {
            if (s1 == s0) return v1;
            return v0 + (v1 - v0) * (s - s0) / (s1 - s0);
        }
    }
    return 1.0;
}

PathReparam make_reparam(std::vector<std::pair<double, double>> breakpoints) {
    if (breakpoints.size() < 2 || breakpoints.front() != std::pair<double, double>{0.0, 0.0} ||
        breakpoints.back() != std::pair<double, double>{1.0, 1.0})
        throw InputError("reparam breakpoints must run from (0,0) to (1,1)");
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i + 1].first <= breakpoints[i].first)
            throw InputError("reparam breakpoints must be strictly increasing in s");
        if (breakpoints[i + 1].second < breakpoints[i].second)
            throw InputError("reparam must be nondecreasing");
    }
    PathReparam psi;
    psi.breakpoints = std::move(breakpoints);
    return psi;
}

SampledPath apply_reparam(const SampledPath& p, const PathReparam& psi) {
    const int m = p.segments();
    SampledPath r;
    r.space = p.space;
    r.samples.reserve(p.samples.size());
    for (int i = 0; i <= m; ++i)
        r.samples.push_back(path_point(p, psi(static_cast<double>(i) / m)));
    return r;
}

std::vector<SampledPath> reparam_homotopy(const SampledPath& p, const PathReparam& psi,
                                          int rows) {
    if (rows < 2) throw InputError("reparam_homotopy needs at least 2 rows");
    const int m = p.segments();
    std::vector<SampledPath> strip;
    strip.reserve(static_cast<size_t>(rows));
    for (int j = 0; j < rows; ++j) {
        const double u = static_cast<double>(j) / (rows - 1);
        SampledPath row;
        row.space = p.space;
        row.samples.reserve(p.samples.size());
        for (int i = 0; i <= m; ++i) {
            const double s = static_cast<double>(i) / m;
            row.samples.push_back(path_point(p, (1.0 - u) * s + u * psi(s)));
        }
        strip.push_back(std::move(row));
    }
    return strip;
}

} // namespace qnull
