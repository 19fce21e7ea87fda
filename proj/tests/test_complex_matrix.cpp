#include "doctest.h"

#include <cmath>

#include "qnull/complex_matrix.hpp"
#include "support/oracles.hpp"

using namespace qnull;
using qnull::testing::Rng;

namespace {
const Complex kI(0.0, 1.0);
double dist(const ComplexMatrix& a, const ComplexMatrix& b) { return op_norm(a - b); }
} // namespace

TEST_CASE("mat_mul identity and h((1,0)) involution") {
    const ComplexMatrix eye = ComplexMatrix::identity(2);
    CHECK(dist(mat_mul(eye, eye), eye) == 0.0);

    const ComplexMatrix h = h_matrix(Complex(1.0, 0.0), 0.0);
    CHECK(h.at(0, 0) == Complex(0.0, 0.0));
    CHECK(h.at(0, 1) == Complex(1.0, 0.0));
    CHECK(h.at(1, 0) == Complex(1.0, 0.0));
    CHECK(h.at(1, 1) == Complex(-0.0, 0.0));
    CHECK(dist(mat_mul(h, h), eye) == 0.0);
}

TEST_CASE("mat_mul matches the naive triple-loop oracle") {
    Rng rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = rng.gauss_matrix(3);
        const ComplexMatrix b = rng.gauss_matrix(3);
        CHECK(dist(mat_mul(a, b), qnull::testing::naive_mul(a, b)) < 1e-13);
    }
    CHECK_THROWS_AS(mat_mul(rng.gauss_matrix(2), rng.gauss_matrix(3)), InputError);
}

TEST_CASE("adjoint basics") {
    CHECK(dist(adjoint(ComplexMatrix::identity(2)), ComplexMatrix::identity(2)) == 0.0);

    const ComplexMatrix m = ComplexMatrix::m2(0.0, kI, 0.0, 0.0);
    const ComplexMatrix expected = ComplexMatrix::m2(0.0, 0.0, -kI, 0.0);
    CHECK(dist(adjoint(m), expected) == 0.0);

    Rng rng(102);
    for (int trial = 0; trial < 50; ++trial) {
        const SpacePoint x = rng.sphere_point();
        const ComplexMatrix h = h_matrix(x.alpha, x.t);
        CHECK(dist(adjoint(h), h) <= 1e-15);
    }
}

TEST_CASE("det: identity, h, and phase scaling") {
    for (int n = 1; n <= 8; ++n)
        CHECK(std::abs(det(ComplexMatrix::identity(n)) - Complex(1.0, 0.0)) == 0.0);

    Rng rng(103);
    for (int trial = 0; trial < 50; ++trial) {
        const SpacePoint x = rng.sphere_point();
        CHECK(std::abs(det(h_matrix(x.alpha, x.t)) - Complex(-1.0, 0.0)) < 1e-15);
    }

    // det(s I_3) = s^3 for s on the unit circle.
    for (int k = 0; k < 16; ++k) {
        const double theta = 2.0 * 3.141592653589793 * k / 16.0;
        const Complex s = std::polar(1.0, theta);
        const Complex expected = std::polar(1.0, 3.0 * theta);
        CHECK(std::abs(det(ComplexMatrix::identity(3) * s) - expected) < 1e-14);
    }
}

TEST_CASE("det is multiplicative on random unitaries") {
    Rng rng(104);
    for (int n : {2, 3}) {
        for (int trial = 0; trial < 40; ++trial) {
            const ComplexMatrix a = rng.random_unitary(n);
            const ComplexMatrix b = rng.random_unitary(n);
            const Complex lhs = det(mat_mul(a, b));
            const Complex rhs = det(a) * det(b);
            CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-9);
        }
    }
}

TEST_CASE("det LU path agrees with cofactor blocks") {
    Rng rng(105);
    for (int trial = 0; trial < 20; ++trial) {
        // Block-diagonal 4x4 built from two 2x2 blocks: LU result must equal
        // the product of the exact 2x2 cofactor determinants.
        const ComplexMatrix a = rng.gauss_matrix(2);
        const ComplexMatrix b = rng.gauss_matrix(2);
        ComplexMatrix blk(4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                blk.at(i, j) = a.at(i, j);
                blk.at(i + 2, j + 2) = b.at(i, j);
            }
        CHECK(std::abs(det(blk) - det(a) * det(b)) < 1e-12);
    }
}

TEST_CASE("op_norm: examples and the Jacobi oracle") {
    CHECK(op_norm(ComplexMatrix::identity(5)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(op_norm(ComplexMatrix::m2(3.0, 0.0, 0.0, 0.0)) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(op_norm(ComplexMatrix::zero(3)) == 0.0);

    Rng rng(106);
    for (int trial = 0; trial < 30; ++trial) {
        const ComplexMatrix m = rng.gauss_matrix(4);
        CHECK(op_norm(m) == doctest::Approx(qnull::testing::op_norm_oracle(m)).epsilon(1e-8));
    }
}

TEST_CASE("op_norm survives rank-one matrices whose range avoids all-ones") {
    // c * P with P the projection onto span(1,-1): the all-ones start
    // vector lies in the kernel, so a single-start power iteration would
    // report 0.
    const auto [p, q] = spectral_projections(Complex(-1.0, 0.0), 0.0);
    const ComplexMatrix m = p * Complex(0.7, 0.0);
    CHECK(op_norm(m) == doctest::Approx(0.7).epsilon(1e-9));
    CHECK(op_norm(m) == doctest::Approx(qnull::testing::op_norm_oracle(m)).epsilon(1e-9));
}

TEST_CASE("h_matrix identities on random sphere points") {
    Rng rng(107);
    const ComplexMatrix eye = ComplexMatrix::identity(2);
    for (int trial = 0; trial < 100; ++trial) {
        const SpacePoint x = rng.sphere_point();
        const ComplexMatrix h = h_matrix(x.alpha, x.t);
        CHECK(dist(mat_mul(h, h), eye) <= 1e-12);
        CHECK(dist(adjoint(h), h) <= 1e-12);
        CHECK(std::abs(det(h) + 1.0) <= 1e-12);
        const ComplexMatrix hneg = h_matrix(-x.alpha, -x.t);
        CHECK(dist(hneg + h, ComplexMatrix::zero(2)) == 0.0); // bitwise negation
    }
    CHECK_THROWS_AS(h_matrix(Complex(1.0, 0.0), 0.5), InputError);
}

TEST_CASE("h_matrix endpoint values") {
    const ComplexMatrix h10 = h_matrix(Complex(0.0, 0.0), 1.0);
    CHECK(h10.at(0, 0) == Complex(1.0, 0.0));
    CHECK(h10.at(1, 1) == Complex(-1.0, 0.0));
    CHECK(h10.at(0, 1) == Complex(0.0, 0.0));
}

TEST_CASE("spectral projections") {
    SUBCASE("diagonal case x = (0,1)") {
        const auto [p, q] = spectral_projections(Complex(0.0, 0.0), 1.0);
        CHECK(p.at(0, 0) == Complex(1.0, 0.0));
        CHECK(p.at(1, 1) == Complex(0.0, 0.0));
        CHECK(q.at(0, 0) == Complex(0.0, 0.0));
        CHECK(q.at(1, 1) == Complex(1.0, 0.0));
    }
    SUBCASE("x = (1,0) gives the half matrices") {
        const auto [p, q] = spectral_projections(Complex(1.0, 0.0), 0.0);
        CHECK(p.at(0, 0).real() == doctest::Approx(0.5));
        CHECK(p.at(0, 1).real() == doctest::Approx(0.5));
        CHECK(q.at(0, 1).real() == doctest::Approx(-0.5));
        CHECK(q.at(1, 1).real() == doctest::Approx(0.5));
    }
    SUBCASE("random points: projection laws, bitwise complement, traces") {
        Rng rng(108);
        const ComplexMatrix eye = ComplexMatrix::identity(2);
        for (int trial = 0; trial < 100; ++trial) {
            const SpacePoint x = rng.sphere_point();
            const auto [p, q] = spectral_projections(x.alpha, x.t);
            CHECK(is_projection(p, 1e-10));
            CHECK(is_projection(q, 1e-10));
            CHECK(dist(mat_mul(p, q), ComplexMatrix::zero(2)) <= 1e-14);
            CHECK(dist(mat_mul(q, p), ComplexMatrix::zero(2)) <= 1e-14);
            const ComplexMatrix sum = p + q;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) CHECK(sum.at(i, j) == eye.at(i, j)); // bitwise
            CHECK(std::abs(trace(p) - Complex(1.0, 0.0)) <= 1e-12);
            CHECK(std::abs(trace(q) - Complex(1.0, 0.0)) <= 1e-12);
        }
    }
}

TEST_CASE("dimension guardrails") {
    CHECK_THROWS_AS(ComplexMatrix(9), InputError);
    CHECK_THROWS_AS(ComplexMatrix(0), InputError);
}
