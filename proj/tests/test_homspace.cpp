#include "doctest.h"

#include <cmath>

#include "qnull/homspace.hpp"
#include "support/oracles.hpp"

using namespace qnull;
using qnull::testing::Rng;

namespace {

double dist(const ComplexMatrix& a, const ComplexMatrix& b) { return op_norm(a - b); }

HomParam random_param(Rng& rng, Space space) {
    return HomParam{rng.sphere_point(), rng.point_in(space), rng.point_in(space)};
}

} // namespace

TEST_CASE("q2_eval special shapes") {
    Rng rng(301);
    const TestFunction& z = separating_family(Space::S1)[0];

    SUBCASE("diagonal h gives diag(a(t1), a(t2))") {
        const HomParam p{SpacePoint::s2({0.0, 0.0}, 1.0), rng.point_in(Space::S1),
                         rng.point_in(Space::S1)};
        const ComplexMatrix m = q2_eval(p, z);
        CHECK(std::abs(m.at(0, 0) - p.t1.alpha) <= 1e-15);
        CHECK(std::abs(m.at(1, 1) - p.t2.alpha) <= 1e-15);
        CHECK(std::abs(m.at(0, 1)) <= 1e-16);
    }
    SUBCASE("equal slots give a(t) I2 exactly, for any x") {
        for (int trial = 0; trial < 50; ++trial) {
            const SpacePoint t = rng.point_in(Space::S1);
            const HomParam p{rng.sphere_point(), t, t};
            const ComplexMatrix m = q2_eval(p, z);
            CHECK(m.at(0, 0) == t.alpha);
            CHECK(m.at(1, 1) == t.alpha);
            CHECK(std::abs(m.at(0, 1)) == 0.0);
            CHECK(std::abs(m.at(1, 0)) == 0.0);
        }
    }
    SUBCASE("space mismatch is refused") {
        const HomParam p{rng.sphere_point(), rng.point_in(Space::RP2), rng.point_in(Space::RP2)};
        CHECK_THROWS_AS(q2_eval(p, z), InputError);
    }
}

TEST_CASE("orbit invariance is exact") {
    Rng rng(302);
    for (Space space : {Space::S1, Space::S2, Space::RP2, Space::Wedge}) {
        const std::vector<TestFunction>& family = separating_family(space);
        for (int trial = 0; trial < 100; ++trial) {
            const HomParam p = random_param(rng, space);
            const HomParam swapped{p.x.antipode(), p.t2, p.t1};
            for (const TestFunction& a : family) {
                const ComplexMatrix lhs = q2_eval(p, a);
                const ComplexMatrix rhs = q2_eval(swapped, a);
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        CHECK(std::abs(lhs.at(i, j) - rhs.at(i, j)) == 0.0);
            }
            CHECK(eval_metric(p, swapped, family) == 0.0);
        }
    }
}

TEST_CASE("diagonal collapse is exact") {
    Rng rng(303);
    for (Space space : {Space::S1, Space::RP2, Space::Wedge}) {
        const std::vector<TestFunction>& family = separating_family(space);
        for (int trial = 0; trial < 100; ++trial) {
            const SpacePoint t = rng.point_in(space);
            const HomParam p{rng.sphere_point(), t, t};
            const HomParam q{rng.sphere_point(), t, t};
            CHECK(eval_metric(p, q, family) == 0.0);
        }
    }
}

TEST_CASE("iota") {
    const SpacePoint t0 = basepoint(Space::RP2);
    const HomParam p = iota(t0);
    CHECK(p.x.alpha == Complex(1.0, 0.0));
    CHECK(p.x.t == 0.0);
    const std::vector<TestFunction>& family = separating_family(Space::RP2);
    for (const TestFunction& a : family) {
        const ComplexMatrix m = q2_eval(p, a);
        CHECK(m.at(0, 0) == a.eval(t0));
        CHECK(m.at(1, 1) == a.eval(t0));
    }
}

TEST_CASE("separating families separate") {
    Rng rng(304);
    CHECK(separating_family(Space::S1).size() == 1);
    CHECK(separating_family(Space::S2).size() == 3);
    CHECK(separating_family(Space::RP2).size() == 6);
    CHECK(separating_family(Space::Wedge).size() == 2);

    for (Space space : {Space::S1, Space::S2, Space::RP2, Space::Wedge}) {
        const std::vector<TestFunction>& family = separating_family(space);
        // all functions bounded by 1
        for (const TestFunction& a : family)
            for (int trial = 0; trial < 200; ++trial)
                CHECK(std::abs(a.eval(rng.point_in(space))) <= 1.0 + 1e-12);
        int pairs = 0;
        while (pairs < (space == Space::RP2 ? 1000 : 100)) {
            const SpacePoint t = rng.point_in(space);
            const SpacePoint u = rng.point_in(space);
            if (metric(t, u) < 1e-3) continue;
            ++pairs;
            CHECK(eval_metric(iota(t), iota(u), family) > 0.0);
        }
    }
}

TEST_CASE("wedge family distances") {
    const std::vector<TestFunction>& family = separating_family(Space::Wedge);
    const HomParam a = iota(SpacePoint::wedge(WedgeBranch::A, std::numbers::pi));
    const HomParam b = iota(SpacePoint::wedge(WedgeBranch::B, std::numbers::pi));
    CHECK(eval_metric(a, b, family) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("eval_metric basics") {
    Rng rng(305);
    const std::vector<TestFunction>& family = separating_family(Space::S1);
    const HomParam p = random_param(rng, Space::S1);
    CHECK(eval_metric(p, p, family) == 0.0);
    CHECK(eval_metric(iota(SpacePoint::s1({1.0, 0.0})), iota(SpacePoint::s1({-1.0, 0.0})),
                      family) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(eval_metric(p, p, std::vector<TestFunction>{}), InputError);
}

TEST_CASE("eval_z") {
    Rng rng(306);
    SUBCASE("iota gives s I2") {
        for (int trial = 0; trial < 20; ++trial) {
            const SpacePoint s = rng.point_in(Space::S1);
            const ComplexMatrix u = eval_z(iota(s));
            CHECK(u.at(0, 0) == s.alpha);
            CHECK(u.at(1, 1) == s.alpha);
        }
    }
    SUBCASE("diagonal parameter gives diag(s, conj s) with det 1") {
        const SpacePoint s = rng.point_in(Space::S1);
        const HomParam p{SpacePoint::s2({0.0, 0.0}, 1.0), s,
                         SpacePoint::s1(std::conj(s.alpha))};
        const ComplexMatrix u = eval_z(p);
        CHECK(std::abs(u.at(0, 0) - s.alpha) <= 1e-15);
        CHECK(std::abs(det(u) - Complex(1.0, 0.0)) <= 1e-14);
    }
    SUBCASE("always unitary on genuine parameters") {
        const ComplexMatrix eye = ComplexMatrix::identity(2);
        for (int trial = 0; trial < 100; ++trial) {
            const HomParam p = random_param(rng, Space::S1);
            const ComplexMatrix u = eval_z(p);
            CHECK(dist(mat_mul(adjoint(u), u), eye) <= 1e-12);
        }
    }
    SUBCASE("corrupted parameter is refused") {
        HomParam p = random_param(rng, Space::S1);
        p.t1.alpha *= 1.5; // far off the circle: q2_eval(z) is no longer unitary
        CHECK_THROWS_AS(eval_z(p), Error);
    }
}

TEST_CASE("hom laws on the product-closed family") {
    Rng rng(307);
    for (Space space : {Space::S1, Space::S2, Space::RP2, Space::Wedge}) {
        const std::vector<TestFunction>& family = separating_family(space);
        const TestFunction one{space, "1", [](const SpacePoint&) { return Complex(1.0, 0.0); }};
        const ComplexMatrix eye = ComplexMatrix::identity(2);
        std::uniform_int_distribution<size_t> pick(0, family.size() - 1);
        for (int trial = 0; trial < 250; ++trial) {
            const HomParam p = random_param(rng, space);
            const TestFunction& a = family[pick(rng.gen)];
            const TestFunction& b = family[pick(rng.gen)];
            const TestFunction ab{space, "ab", [&a, &b](const SpacePoint& t) {
                                      return a.eval(t) * b.eval(t);
                                  }};
            const TestFunction abar{space, "abar",
                                    [&a](const SpacePoint& t) { return std::conj(a.eval(t)); }};
            CHECK(dist(q2_eval(p, ab), mat_mul(q2_eval(p, a), q2_eval(p, b))) <= 1e-12);
            CHECK(dist(q2_eval(p, abar), adjoint(q2_eval(p, a))) <= 1e-12);
            CHECK(dist(q2_eval(p, one), eye) <= 1e-15);
        }
    }
}

TEST_CASE("pushforward") {
    Rng rng(308);
    SUBCASE("collapse_B on branch A winds the circle; on branch B collapses") {
        const double th = 1.25;
        const HomParam pa = iota(SpacePoint::wedge(WedgeBranch::A, th));
        const HomParam qa = pushforward(pa, SpaceMap::CollapseB);
        CHECK(qa.t1.space == Space::S1);
        CHECK(std::abs(qa.t1.alpha - std::polar(1.0, th)) <= 1e-15);

        const HomParam pb = iota(SpacePoint::wedge(WedgeBranch::B, th));
        const HomParam qb = pushforward(pb, SpaceMap::CollapseB);
        CHECK(qb.t1.alpha == Complex(1.0, 0.0));
        CHECK(qb.t2.alpha == Complex(1.0, 0.0));
    }
    SUBCASE("identity map is the identity") {
        const HomParam p = random_param(rng, Space::RP2);
        const HomParam q = pushforward(p, SpaceMap::Identity);
        CHECK(eval_metric(p, q, separating_family(Space::RP2)) == 0.0);
    }
    SUBCASE("naturality: q2_eval(g_* p, a) == q2_eval(p, a o g) bitwise") {
        const std::vector<TestFunction>& family = separating_family(Space::S1);
        for (int trial = 0; trial < 1000; ++trial) {
            const HomParam p = random_param(rng, Space::Wedge);
            for (SpaceMap m : {SpaceMap::CollapseA, SpaceMap::CollapseB}) {
                const HomParam image = pushforward(p, m);
                for (const TestFunction& a : family) {
                    const TestFunction pulled{Space::Wedge, "a.g",
                                              [&a, m](const SpacePoint& t) {
                                                  return a.eval(map_point(m, t));
                                              }};
                    const ComplexMatrix lhs = q2_eval(image, a);
                    const ComplexMatrix rhs = q2_eval(p, pulled);
                    for (int i = 0; i < 2; ++i)
                        for (int j = 0; j < 2; ++j)
                            CHECK(std::abs(lhs.at(i, j) - rhs.at(i, j)) == 0.0);
                }
            }
        }
    }
    SUBCASE("sphere projection pushforward") {
        const HomParam p = random_param(rng, Space::S2);
        const HomParam q = pushforward(p, SpaceMap::SphereToRp2);
        CHECK(q.t1.space == Space::RP2);
    }
    SUBCASE("domain mismatch is refused") {
        const HomParam p = random_param(rng, Space::S1);
        CHECK_THROWS_AS(pushforward(p, SpaceMap::CollapseA), InputError);
    }
}

TEST_CASE("iota composed with a loop keeps both slots equal") {
    const SampledLoop gen = rp2_generator_loop(64);
    for (const SpacePoint& p : gen.samples) {
        const HomParam h = iota(p);
        CHECK(h.t1.alpha == h.t2.alpha);
        CHECK(h.t1.t == h.t2.t);
    }
}
