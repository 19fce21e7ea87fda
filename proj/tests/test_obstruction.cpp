#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qnull/constructor.hpp"
#include "qnull/obstruction.hpp"
#include "support/oracles.hpp"

using namespace qnull;
using qnull::testing::Rng;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<Complex> unit_samples(int n, const std::function<double(double)>& phase) {
    std::vector<Complex> v;
    v.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) v.push_back(std::polar(1.0, phase(static_cast<double>(k) / n)));
    return v;
}
} // namespace

TEST_CASE("det_loop examples") {
    SUBCASE("constant identity loop") {
        std::vector<ComplexMatrix> samples(64, ComplexMatrix::identity(2));
        const UnitaryLoop loop = make_unitary_loop(samples);
        for (const Complex& d : det_loop(loop)) CHECK(std::abs(d - Complex(1.0, 0.0)) == 0.0);
    }
    SUBCASE("s I3 gives samples of s^3") {
        const int n = 256;
        std::vector<ComplexMatrix> samples;
        for (int k = 0; k < n; ++k)
            samples.push_back(ComplexMatrix::identity(3) * std::polar(1.0, kTwoPi * k / n));
        const std::vector<Complex> dets = det_loop(make_unitary_loop(samples));
        for (int k = 0; k < n; ++k)
            CHECK(std::abs(dets[static_cast<size_t>(k)] - std::polar(1.0, 3.0 * kTwoPi * k / n)) <=
                  1e-13);
    }
    SUBCASE("diag(s, conj s) has constant determinant 1") {
        const int n = 128;
        std::vector<ComplexMatrix> samples;
        for (int k = 0; k < n; ++k) {
            const Complex s = std::polar(1.0, kTwoPi * k / n);
            samples.push_back(ComplexMatrix::m2(s, 0.0, 0.0, std::conj(s)));
        }
        for (const Complex& d : det_loop(make_unitary_loop(samples)))
            CHECK(std::abs(d - Complex(1.0, 0.0)) <= 1e-15);
    }
    SUBCASE("non-unitary sample is refused") {
        std::vector<ComplexMatrix> samples(64, ComplexMatrix::identity(2));
        samples[10] = ComplexMatrix::identity(2) * Complex(1.5, 0.0);
        CHECK_THROWS_AS(make_unitary_loop(samples), InputError);
    }
}

TEST_CASE("winding_number") {
    SUBCASE("constant sequence winds zero") {
        const std::vector<Complex> ones(64, Complex(1.0, 0.0));
        CHECK(winding_number(ones).winding == 0);
    }
    SUBCASE("s^3 at 256 samples winds 3") {
        const auto v = unit_samples(256, [](double s) { return 3.0 * kTwoPi * s; });
        const WindingResult r = winding_number(v);
        CHECK(r.winding == 3);
        CHECK(r.residue <= 1e-12);
    }
    SUBCASE("s^-1 winds -1") {
        const auto v = unit_samples(128, [](double s) { return -kTwoPi * s; });
        CHECK(winding_number(v).winding == -1);
    }
    SUBCASE("cyclic rotation invariance and reversal negation") {
        Rng rng(401);
        auto v = unit_samples(512, [](double s) { return 2.0 * kTwoPi * s; });
        const int w = winding_number(v).winding;
        std::rotate(v.begin(), v.begin() + 37, v.end());
        CHECK(winding_number(v).winding == w);
        std::reverse(v.begin(), v.end());
        CHECK(winding_number(v).winding == -w);
    }
    SUBCASE("winding of a pointwise product is the sum of windings") {
        Rng rng(402);
        for (int trial = 0; trial < 10; ++trial) {
            const int n = 512;
            const int w1 = static_cast<int>(rng.gen() % 7) - 3;
            const int w2 = static_cast<int>(rng.gen() % 7) - 3;
            // random Fourier phase riding on top of the winding
            const double a1 = rng.unit(rng.gen), a2 = rng.unit(rng.gen);
            const double b1 = rng.unit(rng.gen) * kTwoPi, b2 = rng.unit(rng.gen) * kTwoPi;
            const auto f = unit_samples(n, [&](double s) {
                return w1 * kTwoPi * s + 0.5 * a1 * std::sin(kTwoPi * s + b1);
            });
            const auto g = unit_samples(n, [&](double s) {
                return w2 * kTwoPi * s + 0.5 * a2 * std::sin(2.0 * kTwoPi * s + b2);
            });
            std::vector<Complex> prod(f.size());
            for (size_t k = 0; k < f.size(); ++k) prod[k] = f[k] * g[k];
            CHECK(winding_number(prod).winding ==
                  winding_number(f).winding + winding_number(g).winding);
        }
    }
    SUBCASE("coarse mesh is refused, not guessed") {
        const auto v = unit_samples(8, [](double s) { return 3.0 * kTwoPi * s; });
        CHECK_THROWS_AS(winding_number(v), MeshError);
    }
    SUBCASE("off-circle values are refused") {
        std::vector<Complex> v(64, Complex(0.1, 0.0));
        CHECK_THROWS_AS(winding_number(v), InputError);
    }
}

TEST_CASE("canonical obstruction equals the dimension") {
    CHECK(canonical_obstruction(1, 64) == 1);
    CHECK(canonical_obstruction(2, 256) == 2);
    CHECK(canonical_obstruction(4, 64) == 4);
    CHECK_THROWS_AS(canonical_obstruction(9, 256), InputError);
    CHECK_THROWS_AS(canonical_obstruction(3, 8), MeshError);
}

TEST_CASE("ring windings of iota loops") {
    const SampledLoop id_loop = circle_loop(256, 1);
    std::vector<HomParam> ring = iota_ring(id_loop);
    CHECK(ring_winding(ring) == 2); // det(s I2) = s^2

    const SampledLoop back_and_forth = to_loop(
        concat(as_path(circle_loop(128, 1)), reverse(as_path(circle_loop(128, 1)))), 1e-9);
    CHECK(ring_winding(iota_ring(back_and_forth)) == 0);
}

TEST_CASE("ring-winding constancy on smooth unitary grids") {
    // Conjugated diagonal grids: smooth in both directions, windings all 0.
    Rng rng(403);
    for (int trial = 0; trial < 3; ++trial) {
        const int n = 128, rings = 16;
        const double amp = 0.5 + rng.unit(rng.gen);
        const double shift = rng.unit(rng.gen) * kTwoPi;
        DiskGrid<ComplexMatrix> grid;
        grid.angles = n;
        grid.rings = rings;
        grid.center = ComplexMatrix::identity(2);
        grid.cells.assign(static_cast<size_t>(rings), {});
        for (int i = 1; i <= rings; ++i) {
            auto& row = grid.ring(i);
            const double u = static_cast<double>(i) / rings;
            for (int k = 0; k < n; ++k) {
                const double s = static_cast<double>(k) / n;
                const double theta = u * amp * std::sin(kTwoPi * s + shift);
                const double c = std::cos(u * std::numbers::pi / 3.0);
                const double sn = std::sin(u * std::numbers::pi / 3.0);
                const ComplexMatrix rot = ComplexMatrix::m2(c, -sn, sn, c);
                const ComplexMatrix rot_inv = ComplexMatrix::m2(c, sn, -sn, c);
                const ComplexMatrix diag =
                    ComplexMatrix::m2(std::polar(1.0, theta), 0.0, 0.0, std::polar(1.0, -theta));
                row.push_back(mat_mul(mat_mul(rot, diag), rot_inv));
            }
        }
        int expected = -999;
        for (int i = 1; i <= rings; ++i) {
            std::vector<Complex> dets;
            for (int k = 0; k < n; ++k) dets.push_back(det(grid.at(i, k)));
            const int w = winding_number(dets).winding;
            if (expected == -999) expected = w;
            CHECK(w == expected);
        }
        CHECK(expected == 0);
    }
}

TEST_CASE("boundary winding of certificate grids over S1") {
    const SampledLoop id_loop = circle_loop(256, 1);
    DiskGrid<HomParam> grid;
    grid.angles = 256;
    grid.rings = 4;
    grid.center = iota(basepoint(Space::S1));
    grid.cells.assign(4, iota_ring(id_loop));
    CHECK(boundary_winding_of_certificate(grid) == 2);

    DiskGrid<HomParam> constant;
    constant.angles = 64;
    constant.rings = 2;
    constant.center = iota(basepoint(Space::S1));
    constant.cells.assign(2, std::vector<HomParam>(64, iota(basepoint(Space::S1))));
    CHECK(boundary_winding_of_certificate(constant) == 0);
}
