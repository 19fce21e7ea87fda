#ifndef QNULL_SPACES_HPP
#define QNULL_SPACES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qnull/complex_matrix.hpp"
#include "qnull/disk_grid.hpp"
#include "qnull/errors.hpp"
#include "qnull/tolerances.hpp"

namespace qnull {

enum class Space { S1, S2, RP2, Wedge };
enum class WedgeBranch { A, B };

std::string space_name(Space s);
Space space_from_name(const std::string& name);

/// A point in one of the four model spaces.
///
/// S1 stores a unit complex number z. S2 and RP2 store (alpha, t) with
/// |alpha|^2 + t^2 = 1; RP2 keeps the canonical hemisphere representative
/// (t > 0, or t = 0 and (Re alpha > 0, or Re alpha = 0 and Im alpha > 0)).
/// Wedge stores a branch tag and an angle in [0, 2pi), with angle 0 on
/// either branch naming the wedge point.
struct SpacePoint {
    Space space = Space::S1;
    Complex alpha{1.0, 0.0}; // S1: z; S2/RP2: alpha
    double t = 0.0;          // S2/RP2 only
    WedgeBranch branch = WedgeBranch::A;
    double angle = 0.0;      // Wedge only

    static SpacePoint s1(Complex z);
    static SpacePoint s2(Complex alpha, double t);
    static SpacePoint rp2(Complex alpha, double t); // canonicalizes
    static SpacePoint wedge(WedgeBranch b, double angle);

    /// S2 only: the antipodal point (bitwise negation of coordinates).
    SpacePoint antipode() const;
};

SpacePoint basepoint(Space s);

/// Checks membership in the tagged space within tol; throws InputError.
void validate_point(const SpacePoint& p, double tol = default_tolerances().tol_point);

/// Intrinsic metric of each model space: arc length on S1, geodesic angle
/// on S2, the antipodal-min quotient metric on RP2, and the graph metric
/// through the wedge point on S1 v S1. Throws on space mismatch.
double metric(const SpacePoint& p, const SpacePoint& q);

/// Geodesic interpolation between nearby points of the same space;
/// u in [0,1], exact at the endpoints for u = 0 and u = 1.
SpacePoint interpolate(const SpacePoint& p, const SpacePoint& q, double u);

/// A path sampled at parameters i/M, i = 0..M (M+1 points, endpoints kept).
struct SampledPath {
    Space space = Space::S1;
    std::vector<SpacePoint> samples;

    int segments() const { return static_cast<int>(samples.size()) - 1; }
    const SpacePoint& start() const { return samples.front(); }
    const SpacePoint& end() const { return samples.back(); }
};

/// A closed loop sampled at parameters k/N, k = 0..N-1 (sample at s = 1
/// wraps to samples[0]). mesh_bound is the computed max adjacent distance.
struct SampledLoop {
    Space space = Space::S1;
    std::vector<SpacePoint> samples;
    double mesh_bound = 0.0;

    int size() const { return static_cast<int>(samples.size()); }
};

SampledLoop make_loop(Space space, std::vector<SpacePoint> samples,
                      double tol = default_tolerances().tol_point);
SampledPath make_path(Space space, std::vector<SpacePoint> samples,
                      double tol = default_tolerances().tol_point);

double path_mesh(const SampledPath& p);

/// Evaluate at an arbitrary parameter by piecewise-geodesic interpolation;
/// exact (no arithmetic) at the stored sample parameters.
SpacePoint loop_point(const SampledLoop& loop, double s);
SpacePoint path_point(const SampledPath& path, double s);

SampledPath as_path(const SampledLoop& loop);             // appends the closing point
SampledLoop to_loop(const SampledPath& path, double tol = 1e-9); // requires end == start
SampledPath reverse(const SampledPath& p);
SampledPath resample(const SampledPath& p, int segments);

/// Path concatenation: first half traverses p, second half q, resampled to
/// a common sample count. Requires metric(p.end, q.start) <= tol.
SampledPath concat(const SampledPath& p, const SampledPath& q,
                   double tol = default_tolerances().tol_point);

/// The half great circle sigma(tau) = (exp(i pi tau), 0) on S2, sampled at
/// N+1 points; endpoints are exactly (1,0) and (-1,0).
SampledPath sigma_path(int n);
SpacePoint sigma_point(double tau);

/// Built-in loops used throughout: the canonical S1 loop with a given
/// turn count, the RP2 generator (projected half great circle), a single
/// wedge branch loop, and the wedge commutator a^j b^k a^-j b^-k.
SampledLoop circle_loop(int n, int turns = 1);
SampledLoop rp2_generator_loop(int n);
SampledLoop rp2_generator_squared_loop(int n);
SampledLoop wedge_branch_loop(WedgeBranch b, int turns, int n);
SampledLoop wedge_commutator_loop(int a_turns, int b_turns, int n);
SampledLoop constant_loop(Space space, int n);

/// Unique-path lifting of an RP2 loop through the double cover: p[0] is
/// `start`, and each next point is the antipodal representative of the
/// next loop sample nearest to the previous lift. Returns N+1 points; the
/// last lifts loop.samples[0] again, so the lift is closed iff the loop's
/// class is trivial. Refuses ambiguous (too coarse) steps.
SampledPath rp2_lift(const SampledLoop& loop, const SpacePoint& start);

/// Projection S2 -> RP2 (canonical representative).
SpacePoint project_rp2(const SpacePoint& s2_point);

/// Contract a based loop on S2 to its basepoint: picks an avoided
/// direction on a 32x64 latitude-longitude grid, jitters samples away from
/// it if needed (deterministically, seeded by a loop hash), projects
/// stereographically, contracts along straight lines, and maps back.
/// Ring `rings` is the input loop verbatim; ring 0 collapses to the
/// basepoint; column 0 stays at the basepoint on every ring.
DiskGrid<SpacePoint> contract_sphere_loop(const SampledLoop& loop,
                                          const SpacePoint& base, int rings);

/// Piecewise-linear nondecreasing reparameterization of [0,1] fixing the
/// endpoints.
struct PathReparam {
    // (s, psi(s)) breakpoints, strictly increasing in s, nondecreasing in
    // psi, first (0,0), last (1,1).
    std::vector<std::pair<double, double>> breakpoints;

    double operator()(double s) const;
};

PathReparam make_reparam(std::vector<std::pair<double, double>> breakpoints);

SampledPath apply_reparam(const SampledPath& p, const PathReparam& psi);

/// The homotopy strip H(s, u) = path((1-u) s + u psi(s)) sampled on a
/// rows x (segments+1) grid; row 0 is the path, the last row is
/// path o psi.
std::vector<SampledPath> reparam_homotopy(const SampledPath& p, const PathReparam& psi,
                                          int rows);

/// FNV-1a hash over the coordinate bytes of a loop; seeds deterministic
/// jitter.
std::uint64_t loop_hash(const SampledLoop& loop);

} // namespace qnull

#endif
