#ifndef QNULL_CONSTRUCTOR_HPP
#define QNULL_CONSTRUCTOR_HPP

#include <string>
#include <vector>

#include "qnull/disk_grid.hpp"
#include "qnull/homspace.hpp"
#include "qnull/obstruction.hpp"

namespace qnull {

/// A sampled homotopy between two loops of homomorphism parameters: rows
/// of closed N-sample loops, every row based at iota(t0) in the
/// evaluation metric.
struct HomotopyStrip {
    std::string name;
    int angles = 0;
    std::vector<std::vector<HomParam>> rows;
};

struct CertTolerances {
    double tol = kDefaultCertTol;
    double tol_point = default_tolerances().tol_point;
    double tol_unitary = default_tolerances().tol_unitary;
    double mesh_bound = 0.0; // measured adjacent-cell eval_metric bound
};

/// A sampled disk of homomorphism parameters witnessing that the boundary
/// loop maps to a nullhomotopic loop under iota.
struct Certificate {
    Space space = Space::S1;
    DiskGrid<HomParam> grid;
    SampledLoop boundary_loop;
    std::vector<std::string> construction_log;
    CertTolerances tolerances;
};

struct BuildOptions {
    int samples = 0;          // 0 picks the per-space default
    double mesh_target = 0.15; // row refinement target, below the 0.2 ceiling
    int min_rows = 33;
    int max_rows = 4097;
};

/// iota applied samplewise.
std::vector<HomParam> iota_ring(const SampledLoop& loop);

/// The slot-swap homotopy K(s,u) = (sigma(1-u), t0, phi(s)). Row u = 0 is
/// the orbit-swapped form of ((1,0), phi(s), t0) with evaluation distance
/// exactly zero; row u = 1 is ((1,0), t0, phi(s)).
HomotopyStrip sigma_swap_strip(const SampledLoop& phi, int rows = 33);

/// From the diagonal loop ((1,0), phi(s), phi(s)) to the concatenation of
/// the two one-slot loops, via the slotwise reparameterizations
/// p_u(s) = phi(min((1+u)s, 1)), m_u(s) = phi(max((1+u)s - u, 0)).
HomotopyStrip diag_split_strip(const SampledLoop& phi, int rows = 33);

/// Between the two concatenation orders of ((1,0), phi1, cnst) and
/// ((1,0), cnst, phi2), passing through the simultaneous loop
/// ((1,0), phi1(s), phi2(s)). Row count is forced odd so the middle row
/// is the simultaneous loop exactly.
HomotopyStrip interchange_strip(const SampledLoop& phi1, const SampledLoop& phi2,
                                int rows = 33);

/// Radial composition of strips into a disk grid: ring R is the first
/// strip's first row, consecutive strips must agree on their shared edge
/// under eval_metric <= glue_tol (duplicates dropped), and the last row
/// must be constant at the center or within one mesh step of it.
DiskGrid<HomParam> stack_strips(const std::vector<HomotopyStrip>& strips,
                                const HomParam& center, double glue_tol = kDefaultCertTol,
                                double center_step = kMeshCeiling);

/// Certificate for any based loop in RP2 (every class is certifiable).
Certificate build_rp2_certificate(const SampledLoop& phi, const BuildOptions& opts = {});

/// Certificate for the wedge commutator a^j b^k a^-j b^-k, whose boundary
/// word is classically nontrivial whenever both turn counts are nonzero.
Certificate build_wedge_commutator_certificate(int a_turns, int b_turns,
                                               const BuildOptions& opts = {});

/// The all-center certificate for the constant loop.
Certificate constant_certificate(Space space, int samples = 64, int rings = 8);

/// Certificate over S1 for the out-and-back loop s |-> exp(2 pi i turns
/// min(2s, 2-2s)), via the straight-line cancellation homotopy. The only
/// S1 loops with certificates are the winding-zero ones; this is the
/// canonical example.
Certificate s1_retraction_certificate(int turns = 1, int samples = 256,
                                      const BuildOptions& opts = {});

/// Image certificate under a wedge collapse (functoriality at the level
/// of certificates).
Certificate pushforward_certificate(const Certificate& cert, SpaceMap m);

/// Explicit disk extension in U(2) of the winding-zero loop diag(s, conj s):
/// W(s,u) = [R(u) diag(s,1) R(u)^-1] diag(conj s, 1) diag(s, conj s) with
/// R(u) the real rotation by u pi/2. Every cell is unitary and every ring
/// determinant is identically 1.
DiskGrid<ComplexMatrix> pairing_nullhomotopy_demo(int samples = 256, int rings = 64);

/// Free group on {a, b}: words are strings over a, A, b, B (capital =
/// inverse). Exact, symbolic.
std::string reduce_free_word(const std::string& word);
std::string commutator_word(int a_turns, int b_turns);

/// Trace a based wedge loop and return its reduced fundamental-group word.
std::string word_of_wedge_loop(const SampledLoop& loop);

} // namespace qnull

#endif
