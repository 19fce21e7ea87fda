#include "qnull/homspace.hpp"

#include <cmath>

namespace qnull {

ComplexMatrix q2_eval(const HomParam& p, const TestFunction& a, double tol_point) {
    if (a.space != p.space())
        throw InputError("q2_eval: test function lives on a different space");
    if (p.t1.space != p.t2.space)
        throw InputError("q2_eval: t1 and t2 live on different spaces");
    const Complex a1 = a(p.t1);
    const Complex a2 = a(p.t2);
    const Complex mean = (a1 + a2) / 2.0;
    const Complex delta = (a1 - a2) / 2.0;
    const ComplexMatrix h = h_matrix(p.x.alpha, p.x.t, tol_point);
    ComplexMatrix m(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            m.at(i, j) = delta * h.at(i, j);
            if (i == j) m.at(i, j) += mean;
        }
    return m;
}

HomParam iota(const SpacePoint& t) {
    return HomParam{SpacePoint::s2(Complex(1.0, 0.0), 0.0), t, t};
}

double eval_metric(const HomParam& p, const HomParam& q,
                   const std::vector<TestFunction>& family) {
    if (p.space() != q.space())
        throw InputError("eval_metric: parameters live over different spaces");
    if (family.empty()) throw InputError("eval_metric: empty test family");
    double worst = 0.0;
    for (const TestFunction& a : family) {
        const double d = op_norm(q2_eval(p, a) - q2_eval(q, a));
        if (d > worst) worst = d;
    }
    return worst;
}

const std::vector<TestFunction>& separating_family(Space space) {
    static const std::vector<TestFunction> s1 = {
        {Space::S1, "z", [](const SpacePoint& p) { return p.alpha; }},
    };
    static const std::vector<TestFunction> s2 = {
        {Space::S2, "re_alpha", [](const SpacePoint& p) { return Complex(p.alpha.real(), 0.0); }},
        {Space::S2, "im_alpha", [](const SpacePoint& p) { return Complex(p.alpha.imag(), 0.0); }},
        {Space::S2, "t", [](const SpacePoint& p) { return Complex(p.t, 0.0); }},
    };
    // Veronese monomials u_i u_j in (u1,u2,u3) = (Re a, Im a, t); the
    // mixed ones are doubled so every function has sup-norm 1 on the
    // sphere. All are even, hence well defined on RP2.
    static const std::vector<TestFunction> rp2 = {
        {Space::RP2, "u1u1", [](const SpacePoint& p) { return Complex(p.alpha.real() * p.alpha.real(), 0.0); }},
        {Space::RP2, "u2u2", [](const SpacePoint& p) { return Complex(p.alpha.imag() * p.alpha.imag(), 0.0); }},
        {Space::RP2, "u3u3", [](const SpacePoint& p) { return Complex(p.t * p.t, 0.0); }},
        {Space::RP2, "u1u2", [](const SpacePoint& p) { return Complex(2.0 * p.alpha.real() * p.alpha.imag(), 0.0); }},
        {Space::RP2, "u1u3", [](const SpacePoint& p) { return Complex(2.0 * p.alpha.real() * p.t, 0.0); }},
        {Space::RP2, "u2u3", [](const SpacePoint& p) { return Complex(2.0 * p.alpha.imag() * p.t, 0.0); }},
    };
    static const std::vector<TestFunction> wedge = {
        {Space::Wedge, "w1",
         [](const SpacePoint& p) {
             return p.branch == WedgeBranch::A ? std::polar(1.0, p.angle) : Complex(1.0, 0.0);
         }},
        {Space::Wedge, "w2",
         [](const SpacePoint& p) {
             return p.branch == WedgeBranch::B ? std::polar(1.0, p.angle) : Complex(1.0, 0.0);
         }},
    };
    switch (space) {
        case Space::S1: return s1;
        case Space::S2: return s2;
        case Space::RP2: return rp2;
        case Space::Wedge: return wedge;
    }
    throw InputError("bad space tag");
}

ComplexMatrix eval_z(const HomParam& p, double tol_unitary) {
    if (p.space() != Space::S1) throw InputError("eval_z needs parameters over S1");
    const ComplexMatrix u = q2_eval(p, separating_family(Space::S1)[0]);
    if (!is_unitary(u, tol_unitary))
        throw InputError("eval_z: result is not unitary; input parameter is corrupted");
    return u;
}

std::string space_map_name(SpaceMap m) {
    switch (m) {
        case SpaceMap::Identity: return "identity";
        case SpaceMap::CollapseA: return "collapseA";
        case SpaceMap::CollapseB: return "collapseB";
        case SpaceMap::SphereToRp2: return "sphere_to_rp2";
    }
    return "?";
}

SpaceMap space_map_from_name(const std::string& name) {
    if (name == "identity") return SpaceMap::Identity;
    if (name == "collapseA") return SpaceMap::CollapseA;
    if (name == "collapseB") return SpaceMap::CollapseB;
    if (name == "sphere_to_rp2") return SpaceMap::SphereToRp2;
    throw InputError("unknown map: " + name);
}

Space map_domain(SpaceMap m, Space source) {
    switch (m) {
        case SpaceMap::Identity: return source;
        case SpaceMap::CollapseA:
        case SpaceMap::CollapseB: return Space::Wedge;
        case SpaceMap::SphereToRp2: return Space::S2;
    }
    throw InputError("bad map");
}

Space map_codomain(SpaceMap m, Space source) {
    switch (m) {
        case SpaceMap::Identity: return source;
        case SpaceMap::CollapseA:
        case SpaceMap::CollapseB: return Space::S1;
        case SpaceMap::SphereToRp2: return Space::RP2;
    }
    throw InputError("bad map");
}

SpacePoint map_point(SpaceMap m, const SpacePoint& p) {
    switch (m) {
        case SpaceMap::Identity:
            return p;
        case SpaceMap::CollapseA:
            // Collapse branch A to the basepoint; branch B becomes the circle.
            if (p.space != Space::Wedge) throw InputError("collapseA expects wedge points");
            if (p.branch == WedgeBranch::A) return SpacePoint::s1(Complex(1.0, 0.0));
            return p.angle == 0.0 ? SpacePoint::s1(Complex(1.0, 0.0))
                                  : SpacePoint::s1(std::polar(1.0, p.angle));
        case SpaceMap::CollapseB:
            if (p.space != Space::Wedge) throw InputError("collapseB expects wedge points");
            if (p.branch == WedgeBranch::B) return SpacePoint::s1(Complex(1.0, 0.0));
            return p.angle == 0.0 ? SpacePoint::s1(Complex(1.0, 0.0))
                                  : SpacePoint::s1(std::polar(1.0, p.angle));
        case SpaceMap::SphereToRp2:
            return project_rp2(p);
    }
    throw InputError("bad map");
}

SampledLoop map_loop(SpaceMap m, const SampledLoop& loop) {
    if (loop.space != map_domain(m, loop.space))
        throw InputError("map_loop: loop space does not match the map domain");
    std::vector<SpacePoint> samples;
    samples.reserve(loop.samples.size());
    for (const SpacePoint& p : loop.samples) samples.push_back(map_point(m, p));
    return make_loop(map_codomain(m, loop.space), std::move(samples));
}

HomParam pushforward(const HomParam& p, SpaceMap m) {
    if (p.space() != map_domain(m, p.space()))
        throw InputError("pushforward: parameter space does not match the map domain");
    return HomParam{p.x, map_point(m, p.t1), map_point(m, p.t2)};
}

} // namespace qnull
