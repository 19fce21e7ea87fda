#include "qnull/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace qnull {

namespace {

bool cell_is_valid(const HomParam& p, Space space, double tol) {
    if (p.t1.space != space || p.t2.space != space || p.x.space != Space::S2) return false;
    try {
        validate_point(p.x, tol);
        validate_point(p.t1, tol);
        validate_point(p.t2, tol);
    } catch (const Error&) {
        return false;
    }
    return true;
}

SampledLoop resample_loop(const SampledLoop& loop, int n) {
    if (loop.size() == n) return loop;
    std::vector<SpacePoint> samples;
    samples.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        samples.push_back(loop_point(loop, static_cast<double>(k) / n));
    return make_loop(loop.space, std::move(samples));
}

} // namespace

std::string VerificationReport::summary() const {
    std::ostringstream os;
    os << (accepted ? "ACCEPT" : "REJECT") << " (tol " << tol << ")\n";
    os << "  boundary error      " << boundary_error << "\n";
    os << "  continuity modulus  " << continuity_modulus << " (declared bound "
       << declared_mesh_bound << ", ceiling " << kMeshCeiling << ")\n";
    os << "  basepoint drift     " << basepoint_drift << "\n";
    if (has_windings) {
        os << "  ring windings       [";
        const size_t show = std::min<size_t>(ring_windings.size(), 8);
        for (size_t i = 0; i < show; ++i) os << (i ? " " : "") << ring_windings[i];
        if (ring_windings.size() > show) os << " ...";
        os << "] (center contributes 0)\n";
    }
    if (!failures.empty()) {
        os << "  failed checks:";
        for (const std::string& f : failures) os << " " << f;
        os << "\n";
    }
    return os.str();
}

VerificationReport verify(const Certificate& cert, const SampledLoop& boundary, double tol) {
    VerificationReport report;
    report.tol = tol;
    report.declared_mesh_bound = cert.tolerances.mesh_bound;

    const DiskGrid<HomParam>& grid = cert.grid;
    grid.check_shape(); // ragged or empty grids are malformed, not rejectable
    if (boundary.space != cert.space)
        throw InputError("verify: boundary loop space does not match the certificate");

    const std::vector<TestFunction>& family = separating_family(cert.space);
    const double tol_point = cert.tolerances.tol_point;

    bool cells_ok = true;
    for (int i = 0; i <= grid.rings && cells_ok; ++i)
        for (int k = 0; k < (i == 0 ? 1 : grid.angles); ++k)
            if (!cell_is_valid(grid.at(i, k), cert.space, tol_point)) {
                cells_ok = false;
                break;
            }
    if (!cells_ok) report.failures.push_back("cell-validity");

    const SampledLoop f = resample_loop(boundary, grid.angles);

    if (cells_ok) {
        const std::vector<HomParam> expected = iota_ring(f);
        for (int k = 0; k < grid.angles; ++k)
            report.boundary_error =
                std::max(report.boundary_error,
                         eval_metric(grid.at(grid.rings, k), expected[static_cast<size_t>(k)], family));
        if (report.boundary_error > tol) report.failures.push_back("boundary");

        report.continuity_modulus = grid_continuity_modulus(
            grid, [&family](const HomParam& a, const HomParam& b) { return eval_metric(a, b, family); });
        if (report.declared_mesh_bound > kMeshCeiling) report.failures.push_back("mesh-ceiling");
        if (report.continuity_modulus > report.declared_mesh_bound)
            report.failures.push_back("continuity");

        const HomParam base = iota(basepoint(cert.space));
        for (int i = 0; i <= grid.rings; ++i)
            report.basepoint_drift =
                std::max(report.basepoint_drift, eval_metric(grid.at(i, 0), base, family));

        if (cert.space == Space::S1) {
            report.has_windings = true;
            try {
                report.ring_windings = ring_windings(grid, cert.tolerances.tol_unitary);
                // The center is a single point, winding 0; constancy then
                // forces every ring to 0.
                bool all_zero = true;
                for (int w : report.ring_windings)
                    if (w != 0) all_zero = false;
                if (!all_zero) report.failures.push_back("winding");
            } catch (const Error&) {
                report.failures.push_back("winding-mesh");
            }
        }
    }

    report.accepted = report.failures.empty();
    return report;
}

VerificationReport verify(const Certificate& cert, double tol) {
    return verify(cert, cert.boundary_loop, tol);
}

double check_hom_laws(const Certificate& cert, int trials, std::uint64_t seed) {
    cert.grid.check_shape();
    const std::vector<TestFunction>& family = separating_family(cert.space);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_ring(0, cert.grid.rings);
    std::uniform_int_distribution<int> pick_angle(0, cert.grid.angles - 1);
    std::uniform_int_distribution<size_t> pick_fn(0, family.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);

    const TestFunction one{cert.space, "1",
                           [](const SpacePoint&) { return Complex(1.0, 0.0); }};
    // Random element of the product-and-conjugation closure (depth 2).
    const auto random_fn = [&]() -> TestFunction {
        const TestFunction& f = family[pick_fn(rng)];
        const TestFunction& g = family[pick_fn(rng)];
        const bool take_product = coin(rng) == 1;
        const bool conjugate = coin(rng) == 1;
        return TestFunction{cert.space, "w",
                            [f, g, take_product, conjugate](const SpacePoint& p) {
                                Complex v = f.eval(p);
                                if (take_product) v *= g.eval(p);
                                return conjugate ? std::conj(v) : v;
                            }};
    };

    const ComplexMatrix eye = ComplexMatrix::identity(2);
    // Loose on-sphere gate: a corrupted cell should be measured, not thrown.
    const double loose = 1e100;
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const HomParam& cell = cert.grid.at(pick_ring(rng), pick_angle(rng));
        const TestFunction a = random_fn();
        const TestFunction b = random_fn();
        const TestFunction ab{cert.space, "ab", [&a, &b](const SpacePoint& p) {
                                  return a.eval(p) * b.eval(p);
                              }};
        const TestFunction abar{cert.space, "abar",
                                [&a](const SpacePoint& p) { return std::conj(a.eval(p)); }};
        const ComplexMatrix ra = q2_eval(cell, a, loose);
        worst = std::max(worst,
                         op_norm(q2_eval(cell, ab, loose) - mat_mul(ra, q2_eval(cell, b, loose))));
        worst = std::max(worst, op_norm(q2_eval(cell, abar, loose) - adjoint(ra)));
        worst = std::max(worst, op_norm(q2_eval(cell, one, loose) - eye));
    }
    return worst;
}

std::string AdversarialReport::summary() const {
    std::ostringstream os;
    for (const AdversarialCase& c : cases)
        os << (c.as_expected() ? "  ok   " : "  FAIL ") << c.name << ": "
           << (c.accepted ? "ACCEPT" : "REJECT") << " (expected "
           << (c.expect_accept ? "ACCEPT" : "REJECT") << ")\n";
    os << (all_as_expected ? "all negative controls behaved" : "suite FAILED");
    return os.str();
}

namespace {

// A point far from p in its own space (distance pi/2 or more), so
// substituting it into a fine grid always tears the continuity.
SpacePoint far_from(const SpacePoint& p) {
    switch (p.space) {
        case Space::S1: return SpacePoint::s1(-p.alpha);
        case Space::S2: return p.antipode();
        case Space::RP2: {
            // any direction orthogonal to the representative is at the
            // maximal RP2 distance pi/2
            const double x = p.alpha.real(), y = p.alpha.imag(), z = p.t;
            double vx = -y, vy = x, vz = 0.0; // cross with e3
            if (vx * vx + vy * vy < 0.25) {   // p too close to e3: cross with e1
                vx = 0.0;
                vy = -z;
                vz = y;
            }
            const double n = std::sqrt(vx * vx + vy * vy + vz * vz);
            return SpacePoint::rp2(Complex(vx / n, vy / n), vz / n);
        }
        case Space::Wedge:
            return SpacePoint::wedge(p.branch, p.angle + std::numbers::pi);
    }
    throw InputError("bad space tag");
}

void run_case(AdversarialReport& report, const std::string& name, bool expect_accept,
              const Certificate& cert) {
    AdversarialCase c;
    c.name = name;
    c.expect_accept = expect_accept;
    try {
        const VerificationReport r = verify(cert, cert.tolerances.tol);
        c.accepted = r.accepted;
        c.failures = r.failures;
    } catch (const Error& e) {
        c.accepted = false;
        c.failures = {std::string("error: ") + e.what()};
    }
    report.all_as_expected = report.all_as_expected && c.as_expected();
    report.cases.push_back(std::move(c));
}

// Fabricated wedge certificates claiming to certify the single-generator
// loop alpha; none can be valid, and each must be rejected.
std::vector<std::pair<std::string, Certificate>> wedge_alpha_fabrications(int n, int rings) {
    const SampledLoop alpha = wedge_branch_loop(WedgeBranch::A, 1, n);
    const SpacePoint t0 = basepoint(Space::Wedge);
    std::vector<std::pair<std::string, Certificate>> out;

    const auto blank = [&](const char* log) {
        Certificate cert;
        cert.space = Space::Wedge;
        cert.boundary_loop = alpha;
        cert.construction_log = {log};
        cert.tolerances.mesh_bound = kMeshCeiling; // claims the loosest legal mesh
        cert.grid.rings = rings;
        cert.grid.angles = n;
        cert.grid.center = iota(t0);
        cert.grid.cells.assign(static_cast<size_t>(rings),
                               std::vector<HomParam>(static_cast<size_t>(n), iota(t0)));
        return cert;
    };

    // (1) Radially reparameterized: rings shrink the angle range, tearing
    // the closing seam of every interior ring.
    Certificate shrink = blank("fabrication: radial shrink");
    for (int i = 1; i <= rings; ++i) {
        const double r = static_cast<double>(i) / rings;
        for (int k = 0; k < n; ++k) {
            const double s = static_cast<double>(k) / n;
            shrink.grid.at(i, k) = iota(loop_point(alpha, r * s));
        }
    }
    out.emplace_back("fabricated-alpha-radial-shrink", std::move(shrink));

    // (2) Slot-swapped strip whose outer ring is not iota(alpha) at all.
    Certificate swap = blank("fabrication: sigma strip with wrong boundary");
    for (int i = 1; i <= rings; ++i) {
        const double u = 1.0 - static_cast<double>(i) / rings;
        for (int k = 0; k < n; ++k)
            swap.grid.at(i, k) =
                HomParam{sigma_point(u), alpha.samples[static_cast<size_t>(k)], t0};
    }
    out.emplace_back("fabricated-alpha-wrong-boundary", std::move(swap));

    // (3) Constant radial extension: every ring repeats iota(alpha), so the
    // grid jumps at the center (and its collapse_B image carries winding 2
    // on every ring).
    Certificate extend = blank("fabrication: constant radial extension");
    for (int i = 1; i <= rings; ++i)
        for (int k = 0; k < n; ++k)
            extend.grid.at(i, k) = iota(alpha.samples[static_cast<size_t>(k)]);
    out.emplace_back("fabricated-alpha-constant-extension", std::move(extend));

    return out;
}

} // namespace

AdversarialReport adversarial_suite(const Certificate& base) {
    AdversarialReport report;
    run_case(report, "valid-certificate", true, base);

    // Torn ring: one interior cell replaced by iota of a far point.
    {
        Certificate torn = base;
        const int i = std::max(1, torn.grid.rings / 2);
        const int k = torn.grid.angles / 3;
        torn.grid.at(i, k) = iota(far_from(torn.grid.at(i, k).t1));
        run_case(report, "torn-ring", false, torn);
    }

    // Boundary loop rotated by one sample.
    {
        Certificate rotated = base;
        std::rotate(rotated.boundary_loop.samples.begin(),
                    rotated.boundary_loop.samples.begin() + 1,
                    rotated.boundary_loop.samples.end());
        run_case(report, "rotated-boundary", false, rotated);
    }

    // One cell pushed off the sphere by 1e-3.
    {
        Certificate off = base;
        const int i = std::max(1, off.grid.rings / 2);
        HomParam& cell = off.grid.at(i, 0);
        cell.x.alpha *= 1.001;
        cell.x.t *= 1.001;
        run_case(report, "off-sphere-cell", false, off);
    }

    // Winding-carrying insert (only expressible over S1): every ring is
    // iota of the identity loop.
    if (base.space == Space::S1) {
        Certificate insert = base;
        const SampledLoop id_loop = circle_loop(insert.grid.angles, 1);
        insert.boundary_loop = id_loop;
        for (int i = 1; i <= insert.grid.rings; ++i)
            for (int k = 0; k < insert.grid.angles; ++k)
                insert.grid.at(i, k) = iota(id_loop.samples[static_cast<size_t>(k)]);
        run_case(report, "winding-carrying-insert", false, insert);
    }

    return report;
}

AdversarialReport adversarial_suite(Space space) {
    Certificate base;
    switch (space) {
        case Space::S1: base = s1_retraction_certificate(1, 256); break;
        case Space::RP2: base = build_rp2_certificate(rp2_generator_loop(256)); break;
        case Space::Wedge: base = build_wedge_commutator_certificate(1, 1); break;
        case Space::S2: throw InputError("no adversarial battery is defined over S2");
    }
    AdversarialReport report = adversarial_suite(base);
    if (space == Space::Wedge) {
        for (auto& [name, cert] : wedge_alpha_fabrications(256, 32))
            run_case(report, name, false, cert);
    }
    return report;
}

} // namespace qnull
