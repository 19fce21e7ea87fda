#include "qnull/constructor.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <numbers>

namespace qnull {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using CellFn = std::function<HomParam(int k, double u)>;

HomotopyStrip sample_strip(const std::string& name, int angles, int rows, const CellFn& cell) {
    HomotopyStrip strip;
    strip.name = name;
    strip.angles = angles;
    strip.rows.reserve(static_cast<size_t>(rows));
    for (int j = 0; j < rows; ++j) {
        const double u = static_cast<double>(j) / (rows - 1);
        std::vector<HomParam> row;
        row.reserve(static_cast<size_t>(angles));
        for (int k = 0; k < angles; ++k) row.push_back(cell(k, u));
        strip.rows.push_back(std::move(row));
    }
    return strip;
}

// Max eval_metric between consecutive rows of a strip (the radial
// direction the row count controls).
double strip_radial_modulus(const HomotopyStrip& strip, const std::vector<TestFunction>& family) {
    double worst = 0.0;
    for (size_t j = 0; j + 1 < strip.rows.size(); ++j)
        for (int k = 0; k < strip.angles; ++k)
            worst = std::max(worst, eval_metric(strip.rows[j][static_cast<size_t>(k)],
                                                strip.rows[j + 1][static_cast<size_t>(k)], family));
    return worst;
}

// Resample a strip with doubled row counts until consecutive rows are
// within mesh_target of each other.
HomotopyStrip adaptive_strip(const std::string& name, int angles, const CellFn& cell,
                             const std::vector<TestFunction>& family, const BuildOptions& opts) {
    int rows = opts.min_rows | 1; // odd, so u = 1/2 is a row
    for (;;) {
        HomotopyStrip strip = sample_strip(name, angles, rows, cell);
        if (strip_radial_modulus(strip, family) <= opts.mesh_target) return strip;
        if (rows >= opts.max_rows)
            throw MeshError("strip '" + name + "' cannot meet the mesh target; input too wild");
        rows = 2 * rows - 1;
    }
}

void require_based(const SampledLoop& phi) {
    if (metric(phi.samples.front(), basepoint(phi.space)) > default_tolerances().tol_point)
        throw InputError("loop is not based at the declared basepoint");
}

// Exact position on a wedge branch loop with the given turn count; tau
// values that are dyadic rationals give exact basepoint hits.
SpacePoint wedge_word_point(WedgeBranch b, int turns, double tau) {
    const double x = turns * tau;
    double frac = x - std::floor(x);
    if (frac >= 1.0) frac = 0.0;
    return frac == 0.0 ? SpacePoint::wedge(b, 0.0) : SpacePoint::wedge(b, kTwoPi * frac);
}

const SpacePoint kSphereBase = SpacePoint::s2(Complex(1.0, 0.0), 0.0);

struct GridModulus {
    double angular = 0.0;
    double radial = 0.0;
};

GridModulus grid_modulus(const DiskGrid<HomParam>& grid, const std::vector<TestFunction>& family) {
    GridModulus m;
    for (int i = 1; i <= grid.rings; ++i)
        for (int k = 0; k < grid.angles; ++k) {
            m.angular = std::max(m.angular,
                                 eval_metric(grid.at(i, k), grid.at(i, (k + 1) % grid.angles), family));
            m.radial = std::max(m.radial, eval_metric(grid.at(i, k), grid.at(i - 1, k), family));
        }
    return m;
}

Certificate finalize_certificate(Space space, DiskGrid<HomParam> grid, SampledLoop boundary,
                                 std::vector<std::string> log, double tol) {
    grid.check_shape();
    const std::vector<TestFunction>& family = separating_family(space);

    double boundary_error = 0.0;
    const std::vector<HomParam> expected = iota_ring(boundary);
    for (int k = 0; k < grid.angles; ++k)
        boundary_error = std::max(
            boundary_error, eval_metric(grid.at(grid.rings, k), expected[static_cast<size_t>(k)], family));
    if (boundary_error > tol)
        throw Error("constructed grid does not match its boundary loop (error " +
                    std::to_string(boundary_error) + ")");

    const HomParam base = iota(basepoint(space));
    double drift = 0.0;
    for (int i = 0; i <= grid.rings; ++i)
        drift = std::max(drift, eval_metric(grid.at(i, 0), base, family));
    if (drift > tol)
        throw Error("constructed grid drifts off the basepoint column (drift " +
                    std::to_string(drift) + ")");

    const GridModulus m = grid_modulus(grid, family);
    const double mesh = std::max(m.angular, m.radial);
    if (mesh > kMeshCeiling)
        throw MeshError("constructed grid exceeds the continuity ceiling (" +
                        std::to_string(mesh) + " > " + std::to_string(kMeshCeiling) +
                        "); increase the sample count");

    Certificate cert;
    cert.space = space;
    cert.grid = std::move(grid);
    cert.boundary_loop = std::move(boundary);
    cert.construction_log = std::move(log);
    cert.tolerances.tol = tol;
    cert.tolerances.mesh_bound = mesh;
    return cert;
}

} // namespace

std::vector<HomParam> iota_ring(const SampledLoop& loop) {
    std::vector<HomParam> ring;
    ring.reserve(loop.samples.size());
    for (const SpacePoint& p : loop.samples) ring.push_back(iota(p));
    return ring;
}

HomotopyStrip sigma_swap_strip(const SampledLoop& phi, int rows) {
    require_based(phi);
    if (rows < 2) throw InputError("strips need at least 2 rows");
    const SpacePoint t0 = basepoint(phi.space);
    const int n = phi.size();
    return sample_strip("sigma-swap", n, rows, [&phi, &t0, n](int k, double u) {
        return HomParam{sigma_point(1.0 - u), t0, phi.samples[static_cast<size_t>(k % n)]};
    });
}

HomotopyStrip diag_split_strip(const SampledLoop& phi, int rows) {
    require_based(phi);
    if (rows < 2) throw InputError("strips need at least 2 rows");
    const int n = phi.size();
    return sample_strip("diag-split", n, rows, [&phi, n](int k, double u) {
        const double s = static_cast<double>(k) / n;
        const SpacePoint t1 = loop_point(phi, std::min((1.0 + u) * s, 1.0));
        const SpacePoint t2 = loop_point(phi, std::max((1.0 + u) * s - u, 0.0));
        return HomParam{kSphereBase, t1, t2};
    });
}

HomotopyStrip interchange_strip(const SampledLoop& phi1, const SampledLoop& phi2, int rows) {
    require_based(phi1);
    require_based(phi2);
    if (phi1.space != phi2.space) throw InputError("interchange needs loops in the same space");
    if (rows < 3) throw InputError("interchange needs at least 3 rows");
    rows |= 1; // middle row must exist
    const int n = std::max(phi1.size(), phi2.size());
    return sample_strip("interchange", n, rows, [&phi1, &phi2, n](int k, double v) {
        const double s = static_cast<double>(k) / n;
        // v < 1/2: from [phi1 slot1][phi2 slot2] down to the simultaneous
        // loop; v > 1/2: out to [phi2 slot2][phi1 slot1].
        if (v <= 0.5) {
            const double u = 1.0 - 2.0 * v;
            const SpacePoint t1 = loop_point(phi1, std::min((1.0 + u) * s, 1.0));
            const SpacePoint t2 = loop_point(phi2, std::max((1.0 + u) * s - u, 0.0));
            return HomParam{kSphereBase, t1, t2};
        }
        const double u = 2.0 * v - 1.0;
        const SpacePoint t1 = loop_point(phi1, std::max((1.0 + u) * s - u, 0.0));
        const SpacePoint t2 = loop_point(phi2, std::min((1.0 + u) * s, 1.0));
        return HomParam{kSphereBase, t1, t2};
    });
}

DiskGrid<HomParam> stack_strips(const std::vector<HomotopyStrip>& strips, const HomParam& center,
                                double glue_tol, double center_step) {
    if (strips.empty()) throw InputError("stack_strips needs at least one strip");
    const int n = strips.front().angles;
    const std::vector<TestFunction>& family = separating_family(center.space());
    for (const HomotopyStrip& s : strips) {
        if (s.angles != n) throw InputError("strips disagree on the angular sample count");
        if (s.rows.size() < 2) throw InputError("strip '" + s.name + "' has fewer than 2 rows");
    }

    // Edge agreement between consecutive strips.
    for (size_t i = 0; i + 1 < strips.size(); ++i) {
        double gap = 0.0;
        for (int k = 0; k < n; ++k)
            gap = std::max(gap, eval_metric(strips[i].rows.back()[static_cast<size_t>(k)],
                                            strips[i + 1].rows.front()[static_cast<size_t>(k)], family));
        if (gap > glue_tol)
            throw Error("strip edges mismatch between '" + strips[i].name + "' and '" +
                        strips[i + 1].name + "' (max gap " + std::to_string(gap) + ")");
    }

    // Concatenate rows, dropping each duplicated glue edge.
    std::vector<std::vector<HomParam>> rows;
    for (size_t i = 0; i < strips.size(); ++i) {
        const size_t from = i == 0 ? 0 : 1;
        for (size_t j = from; j < strips[i].rows.size(); ++j) rows.push_back(strips[i].rows[j]);
    }

    // The innermost row either collapses onto the center (dropped) or sits
    // within one mesh step of it.
    double center_gap = 0.0;
    for (int k = 0; k < n; ++k)
        center_gap = std::max(center_gap, eval_metric(rows.back()[static_cast<size_t>(k)], center, family));
    if (center_gap <= glue_tol) rows.pop_back();
    else if (center_gap > center_step)
        throw Error("final strip row of '" + strips.back().name +
                    "' does not contract to the center (gap " + std::to_string(center_gap) + ")");
    if (rows.empty()) throw Error("stacked grid has no rings");

    DiskGrid<HomParam> grid;
    grid.angles = n;
    grid.rings = static_cast<int>(rows.size());
    grid.center = center;
    grid.cells.reserve(rows.size());
    // rows run boundary-first; ring 1 is the innermost.
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) grid.cells.push_back(std::move(*it));
    return grid;
}

Certificate build_rp2_certificate(const SampledLoop& phi_in, const BuildOptions& opts) {
    if (phi_in.space != Space::RP2) throw InputError("build_rp2_certificate expects an RP2 loop");
    require_based(phi_in);

    int n = opts.samples > 0 ? opts.samples : (phi_in.size() > 256 ? phi_in.size() : 256);
    if (opts.samples == 0) n += n % 2;
    if (n % 2 != 0) throw InputError("sample count must be even");
    const SpacePoint t0 = basepoint(Space::RP2);

    // Resample to the working count and pin the basepoint sample exactly.
    SampledLoop phi = phi_in;
    if (phi.size() != n) {
        std::vector<SpacePoint> samples;
        samples.reserve(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k)
            samples.push_back(loop_point(phi_in, static_cast<double>(k) / n));
        phi = make_loop(Space::RP2, std::move(samples));
    }
    phi.samples[0] = t0;
    phi = make_loop(Space::RP2, phi.samples);

    const std::vector<TestFunction>& family = separating_family(Space::RP2);
    std::vector<HomotopyStrip> strips;
    std::vector<std::string> log;

    // L1: split the diagonal loop into the two one-slot factors.
    strips.push_back(adaptive_strip(
        "diag-split", n,
        [&phi, n](int k, double u) {
            const double s = static_cast<double>(k) / n;
            return HomParam{kSphereBase, loop_point(phi, std::min((1.0 + u) * s, 1.0)),
                            loop_point(phi, std::max((1.0 + u) * s - u, 0.0))};
        },
        family, opts));
    log.push_back("diag-split: iota(phi) ~ [phi slot1][phi slot2]");

    // L2: swap the second factor into slot 1 along sigma.
    strips.push_back(adaptive_strip(
        "sigma-swap(second-factor)", n,
        [&phi, &t0, n](int k, double u) {
            const double s = static_cast<double>(k) / n;
            if (s < 0.5)
                return HomParam{kSphereBase, loop_point(phi, 2.0 * s), t0};
            return HomParam{sigma_point(u), t0, loop_point(phi, 2.0 * s - 1.0)};
        },
        family, opts));
    log.push_back("sigma-swap: [phi slot1][phi slot2] ~ [phi slot1][phi slot1]");

    // L3: phi.phi lifts to a closed sphere loop; contract it and project.
    std::vector<SpacePoint> ff_samples;
    ff_samples.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        ff_samples.push_back(phi.samples[static_cast<size_t>((2 * k) % n)]);
    const SampledLoop ff = make_loop(Space::RP2, std::move(ff_samples));

    const SpacePoint lift_start = SpacePoint::s2(t0.alpha, t0.t);
    const SampledPath lift = rp2_lift(ff, lift_start);
    if (metric(lift.start(), lift.end()) > default_tolerances().tol_point * 10.0)
        throw Error("lift of phi.phi failed to close; the doubled loop must be trivial");
    std::vector<SpacePoint> sphere_samples(lift.samples.begin(), lift.samples.end() - 1);
    const SampledLoop sphere_loop = make_loop(Space::S2, std::move(sphere_samples));

    int rings = std::max(opts.min_rows, 65);
    for (;;) {
        const DiskGrid<SpacePoint> contraction = contract_sphere_loop(sphere_loop, lift_start, rings);
        HomotopyStrip strip;
        strip.name = "lift-contract-project";
        strip.angles = n;
        strip.rows.reserve(static_cast<size_t>(rings) + 1);
        for (int i = rings; i >= 0; --i) {
            std::vector<HomParam> row;
            row.reserve(static_cast<size_t>(n));
            for (int k = 0; k < n; ++k)
                row.push_back(HomParam{kSphereBase, project_rp2(contraction.at(i, k)), t0});
            strip.rows.push_back(std::move(row));
        }
        if (strip_radial_modulus(strip, family) <= opts.mesh_target || rings >= opts.max_rows) {
            strips.push_back(std::move(strip));
            break;
        }
        rings *= 2;
    }
    log.push_back("lift-contract-project: [phi.phi slot1] contracted through the double cover");

    DiskGrid<HomParam> grid = stack_strips(strips, iota(t0));
    log.push_back("stacked " + std::to_string(grid.rings) + " rings at " + std::to_string(n) +
                  " angles");
    return finalize_certificate(Space::RP2, std::move(grid), phi, std::move(log), kDefaultCertTol);
}

Certificate build_wedge_commutator_certificate(int a_turns, int b_turns,
                                               const BuildOptions& opts) {
    if (std::abs(a_turns) > 4 || std::abs(b_turns) > 4)
        throw InputError("turn counts are capped at |4|");
    int n = opts.samples;
    if (n == 0) {
        // The fastest angular material moves at 16 pi max(|a|,|b|) per unit s.
        const int t = std::max({std::abs(a_turns), std::abs(b_turns), 1});
        n = 512;
        while (16.0 * std::numbers::pi * t / n > 0.145) n *= 2;
    }
    if (n % 4 != 0) throw InputError("sample count must be divisible by 4");

    const SpacePoint t0 = basepoint(Space::Wedge);
    const SampledLoop boundary = wedge_commutator_loop(a_turns, b_turns, n);
    const std::vector<TestFunction>& family = separating_family(Space::Wedge);

    // Boundary legs: quarter q at local time tau.
    const auto leg = [a_turns, b_turns](int q, double tau) -> SpacePoint {
        switch (q) {
            case 0: return wedge_word_point(WedgeBranch::A, a_turns, tau);
            case 1: return wedge_word_point(WedgeBranch::B, b_turns, tau);
            case 2: return wedge_word_point(WedgeBranch::A, a_turns, 1.0 - tau);
            default: return wedge_word_point(WedgeBranch::B, b_turns, 1.0 - tau);
        }
    };
    // Slot-2 normal form: each quarter carries its leg traversed twice.
    const auto doubled = [&leg](int q, double tau) {
        return tau < 0.5 ? leg(q, 2.0 * tau) : leg(q, 2.0 * tau - 1.0);
    };
    // The two blocks the interchange reorders.
    const auto alpha_inv2 = [a_turns](double tau) {
        return wedge_word_point(WedgeBranch::A, -2 * a_turns, tau);
    };
    const auto beta2 = [b_turns](double tau) {
        return wedge_word_point(WedgeBranch::B, 2 * b_turns, tau);
    };

    const auto quarter = [n](int k) { return (4 * k) / n; };
    const auto local = [n](int k) { return 4.0 * k / n - (4 * k) / n; };

    std::vector<HomotopyStrip> strips;
    std::vector<std::string> log;

    strips.push_back(adaptive_strip(
        "diag-split", n,
        [&](int k, double u) {
            const int q = quarter(k);
            const double tau = local(k);
            return HomParam{kSphereBase, leg(q, std::min((1.0 + u) * tau, 1.0)),
                            leg(q, std::max((1.0 + u) * tau - u, 0.0))};
        },
        family, opts));
    log.push_back("diag-split on all four legs");

    strips.push_back(adaptive_strip(
        "swap-to-slot2", n,
        [&](int k, double u) {
            const int q = quarter(k);
            const double tau = local(k);
            if (tau < 0.5) return HomParam{sigma_point(u), leg(q, 2.0 * tau), t0};
            return HomParam{kSphereBase, t0, leg(q, 2.0 * tau - 1.0)};
        },
        family, opts));
    log.push_back("sigma-swap every slot-1 block into slot 2");

    strips.push_back(adaptive_strip(
        "swap-q2-to-slot1", n,
        [&](int k, double u) {
            const int q = quarter(k);
            const double tau = local(k);
            if (q == 2) return HomParam{sigma_point(1.0 - u), doubled(2, tau), t0};
            return HomParam{kSphereBase, t0, doubled(q, tau)};
        },
        family, opts));
    log.push_back("sigma-swap the alpha^-2a block back into slot 1");

    strips.push_back(adaptive_strip(
        "interchange-q1-q2", n,
        [&](int k, double v) {
            const int q = quarter(k);
            const double tau = local(k);
            if (q == 0 || q == 3) return HomParam{kSphereBase, t0, doubled(q, tau)};
            const double sl = (q - 1 + tau) / 2.0; // local parameter over quarters 1-2
            if (v <= 0.5) {
                const double u = 1.0 - 2.0 * v; // from [beta2 slot2][alpha_inv2 slot1]
                return HomParam{kSphereBase, alpha_inv2(std::max((1.0 + u) * sl - u, 0.0)),
                                beta2(std::min((1.0 + u) * sl, 1.0))};
            }
            const double u = 2.0 * v - 1.0; // out to [alpha_inv2 slot1][beta2 slot2]
            return HomParam{kSphereBase, alpha_inv2(std::min((1.0 + u) * sl, 1.0)),
                            beta2(std::max((1.0 + u) * sl - u, 0.0))};
        },
        family, opts));
    log.push_back("interchange the beta^2b and alpha^-2a blocks");

    strips.push_back(adaptive_strip(
        "swap-back-to-slot2", n,
        [&](int k, double u) {
            const int q = quarter(k);
            const double tau = local(k);
            switch (q) {
                case 0: return HomParam{kSphereBase, t0, doubled(0, tau)};
                case 1: return HomParam{sigma_point(u), alpha_inv2(tau), t0};
                case 2: return HomParam{kSphereBase, t0, beta2(tau)};
                default: return HomParam{kSphereBase, t0, doubled(3, tau)};
            }
        },
        family, opts));
    log.push_back("sigma-swap the moved block into slot 2");

    strips.push_back(adaptive_strip(
        "cancel-pairs", n,
        [&](int k, double u) {
            const double s = static_cast<double>(k) / n;
            const bool first_half = s < 0.5;
            const double th = first_half ? 2.0 * s : 2.0 * s - 1.0;
            const double arg = std::min({2.0 * th, 2.0 - 2.0 * th, 1.0 - u});
            const SpacePoint p = first_half
                                     ? wedge_word_point(WedgeBranch::A, 2 * a_turns, arg)
                                     : wedge_word_point(WedgeBranch::B, 2 * b_turns, arg);
            return HomParam{kSphereBase, t0, p};
        },
        family, opts));
    log.push_back("retract the cancelling pairs along themselves");

    DiskGrid<HomParam> grid = stack_strips(strips, iota(t0));
    log.push_back("stacked " + std::to_string(grid.rings) + " rings at " + std::to_string(n) +
                  " angles");
    log.push_back("boundary word: " +
                  (commutator_word(a_turns, b_turns).empty() ? std::string("e (trivial)")
                                                             : commutator_word(a_turns, b_turns)));
    return finalize_certificate(Space::Wedge, std::move(grid), boundary, std::move(log),
                                kDefaultCertTol);
}

Certificate s1_retraction_certificate(int turns, int samples, const BuildOptions& opts) {
    if (std::abs(turns) > 4) throw InputError("turn counts are capped at |4|");
    int n = samples;
    while (2.0 * kTwoPi * std::abs(turns) / n > 0.145) n *= 2;
    const auto point = [turns](double arg) -> SpacePoint {
        const double x = turns * arg;
        const double frac = x - std::floor(x);
        return frac == 0.0 ? SpacePoint::s1(Complex(1.0, 0.0))
                           : SpacePoint::s1(std::polar(1.0, kTwoPi * frac));
    };
    std::vector<SpacePoint> boundary_samples;
    boundary_samples.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double s = static_cast<double>(k) / n;
        boundary_samples.push_back(point(std::min(2.0 * s, 2.0 - 2.0 * s)));
    }
    const SampledLoop boundary = make_loop(Space::S1, std::move(boundary_samples));
    const std::vector<TestFunction>& family = separating_family(Space::S1);
    std::vector<HomotopyStrip> strips;
    strips.push_back(adaptive_strip(
        "retract-out-and-back", n,
        [&point, n](int k, double u) {
            const double s = static_cast<double>(k) / n;
            return iota(point(std::min({2.0 * s, 2.0 - 2.0 * s, 1.0 - u})));
        },
        family, opts));
    DiskGrid<HomParam> grid = stack_strips(strips, iota(basepoint(Space::S1)));
    return finalize_certificate(Space::S1, std::move(grid), boundary,
                                {"retract-out-and-back: cancel the alpha^t alpha^-t pair"},
                                kDefaultCertTol);
}

Certificate constant_certificate(Space space, int samples, int rings) {
    const SampledLoop loop = constant_loop(space, samples);
    const HomParam center = iota(basepoint(space));
    DiskGrid<HomParam> grid;
    grid.angles = samples;
    grid.rings = rings;
    grid.center = center;
    grid.cells.assign(static_cast<size_t>(rings),
                      std::vector<HomParam>(static_cast<size_t>(samples), center));
    return finalize_certificate(space, std::move(grid), loop,
                                {"constant certificate at the basepoint"}, kDefaultCertTol);
}

Certificate pushforward_certificate(const Certificate& cert, SpaceMap m) {
    if (cert.space != map_domain(m, cert.space))
        throw InputError("pushforward: certificate space does not match the map domain");
    Certificate out;
    out.space = map_codomain(m, cert.space);
    out.boundary_loop = map_loop(m, cert.boundary_loop);
    out.grid.rings = cert.grid.rings;
    out.grid.angles = cert.grid.angles;
    out.grid.center = pushforward(cert.grid.center, m);
    out.grid.cells.reserve(cert.grid.cells.size());
    for (const auto& ring : cert.grid.cells) {
        std::vector<HomParam> mapped;
        mapped.reserve(ring.size());
        for (const HomParam& p : ring) mapped.push_back(pushforward(p, m));
        out.grid.cells.push_back(std::move(mapped));
    }
    out.construction_log = cert.construction_log;
    out.construction_log.push_back("pushforward under " + space_map_name(m));
    out.tolerances = cert.tolerances; // the evaluation mesh can only shrink
    return out;
}

DiskGrid<ComplexMatrix> pairing_nullhomotopy_demo(int samples, int rings) {
    if (samples < 64) throw InputError("pairing demo needs at least 64 samples");
    if (rings < 2) throw InputError("pairing demo needs at least 2 rings");
    DiskGrid<ComplexMatrix> grid;
    grid.angles = samples;
    grid.rings = rings;
    grid.center = ComplexMatrix::identity(2);
    grid.cells.assign(static_cast<size_t>(rings), {});
    for (int i = 1; i <= rings; ++i) {
        std::vector<ComplexMatrix>& row = grid.ring(i);
        row.reserve(static_cast<size_t>(samples));
        const double u = 1.0 - static_cast<double>(i) / rings;
        const double c = std::cos(u * std::numbers::pi / 2.0);
        const double sn = std::sin(u * std::numbers::pi / 2.0);
        const ComplexMatrix rot = ComplexMatrix::m2(c, -sn, sn, c);
        const ComplexMatrix rot_inv = ComplexMatrix::m2(c, sn, -sn, c);
        for (int k = 0; k < samples; ++k) {
            const Complex s = k == 0 ? Complex(1.0, 0.0) : std::polar(1.0, kTwoPi * k / samples);
            const ComplexMatrix boundary = ComplexMatrix::m2(s, 0.0, 0.0, std::conj(s));
            if (u == 0.0) {
                row.push_back(boundary);
                continue;
            }
            const ComplexMatrix conj_block =
                mat_mul(mat_mul(rot, ComplexMatrix::m2(s, 0.0, 0.0, 1.0)), rot_inv);
            row.push_back(mat_mul(mat_mul(conj_block, ComplexMatrix::m2(std::conj(s), 0.0, 0.0, 1.0)),
                                   boundary));
        }
    }
    return grid;
}

std::string reduce_free_word(const std::string& word) {
    std::string out;
    const auto inverse = [](char c) -> char {
        switch (c) {
            case 'a': return 'A';
            case 'A': return 'a';
            case 'b': return 'B';
            case 'B': return 'b';
        }
        throw InputError("free words use letters a, A, b, B");
    };
    for (char c : word) {
        if (!out.empty() && out.back() == inverse(c)) out.pop_back();
        else out.push_back(c);
    }
    return out;
}

std::string commutator_word(int a_turns, int b_turns) {
    const auto power = [](char pos, char neg, int k) {
        return std::string(static_cast<size_t>(std::abs(k)), k >= 0 ? pos : neg);
    };
    const auto invert = [](std::string w) {
        std::reverse(w.begin(), w.end());
        for (char& c : w) c = std::isupper(static_cast<unsigned char>(c))
                                  ? static_cast<char>(std::tolower(c))
                                  : static_cast<char>(std::toupper(c));
        return w;
    };
    const std::string a = power('a', 'A', a_turns);
    const std::string b = power('b', 'B', b_turns);
    return reduce_free_word(a + b + invert(a) + invert(b));
}

std::string word_of_wedge_loop(const SampledLoop& loop) {
    if (loop.space != Space::Wedge) throw InputError("word tracing needs a wedge loop");
    require_based(loop);
    const double base_tol = 1e-9;
    const auto at_base = [base_tol](const SpacePoint& p) {
        return std::min(p.angle, kTwoPi - p.angle) <= base_tol;
    };
    const auto wrap_pm = [](double a) {
        a = std::fmod(a, kTwoPi);
        if (a > std::numbers::pi) a -= kTwoPi;
        if (a <= -std::numbers::pi) a += kTwoPi;
        return a;
    };

    std::string word;
    bool in_run = false;
    WedgeBranch cur = WedgeBranch::A;
    double pos = 0.0, prev_raw = 0.0;

    const auto close_run = [&](double& position) {
        const double snapped = kTwoPi * std::round(position / kTwoPi);
        if (std::abs(position - snapped) > std::numbers::pi / 2.0)
            throw MeshError("wedge loop leaves a branch away from the wedge point");
        const int m = static_cast<int>(std::lround(snapped / kTwoPi));
        word.append(static_cast<size_t>(std::abs(m)),
                    cur == WedgeBranch::A ? (m >= 0 ? 'a' : 'A') : (m >= 0 ? 'b' : 'B'));
        position = 0.0;
    };

    const int n = loop.size();
    for (int k = 1; k <= n; ++k) {
        const SpacePoint& p = loop.samples[static_cast<size_t>(k % n)];
        if (!in_run) {
            if (at_base(p)) continue;
            in_run = true;
            cur = p.branch;
            pos = wrap_pm(p.angle);
            prev_raw = p.angle;
            continue;
        }
        if (at_base(p)) {
            pos += wrap_pm(0.0 - prev_raw);
            close_run(pos);
            in_run = false;
            prev_raw = 0.0;
        } else if (p.branch == cur) {
            pos += wrap_pm(p.angle - prev_raw);
            prev_raw = p.angle;
        } else {
            // Crossed the wedge point between samples.
            pos += wrap_pm(0.0 - prev_raw);
            close_run(pos);
            cur = p.branch;
            pos = wrap_pm(p.angle);
            prev_raw = p.angle;
        }
    }
    if (in_run) {
        pos += wrap_pm(0.0 - prev_raw);
        close_run(pos);
    }
    return reduce_free_word(word);
}

} // namespace qnull
