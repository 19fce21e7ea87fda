#ifndef QNULL_OBSTRUCTION_HPP
#define QNULL_OBSTRUCTION_HPP

#include <span>
#include <vector>

#include "qnull/complex_matrix.hpp"
#include "qnull/disk_grid.hpp"
#include "qnull/homspace.hpp"

namespace qnull {

/// A closed loop of unitary matrices sampled at k/N.
struct UnitaryLoop {
    int n = 0;
    std::vector<ComplexMatrix> samples;
    double mesh_bound = 0.0; // max adjacent op_norm distance
};

/// Validates unitarity of every sample and the mesh bound < sqrt(2)
/// (which keeps the loop's homotopy class unambiguous at this sampling).
UnitaryLoop make_unitary_loop(std::vector<ComplexMatrix> samples,
                              double tol_unitary = default_tolerances().tol_unitary);

/// Pointwise determinants; each must land on the unit circle within
/// n * tol_unitary.
std::vector<Complex> det_loop(const UnitaryLoop& u,
                              double tol_unitary = default_tolerances().tol_unitary);

struct WindingResult {
    int winding = 0;
    double residue = 0.0; // |raw sum/2pi - winding|, must stay below 0.01
};

/// Degree of a closed sequence of unit complex values via principal-branch
/// phase increments. Refuses (MeshError) when any step exceeds pi/2 or the
/// rounding residue reaches 0.01: on a coarse mesh we do not guess.
WindingResult winding_number(std::span<const Complex> values);

/// Builds the loop s |-> s * I_n at N samples and returns the winding of
/// its determinant; equals n whenever the sampling is fine enough.
int canonical_obstruction(int n, int samples);

/// The determinant trace behind canonical_obstruction, for plotting.
std::vector<Complex> canonical_det_trace(int n, int samples);

/// Winding of det(eval_z(.)) along one ring of homomorphism parameters
/// over T = S1.
int ring_winding(const std::vector<HomParam>& ring,
                 double tol_unitary = default_tolerances().tol_unitary);

/// Windings of every ring of the grid, outermost last; index 0 is ring 1.
std::vector<int> ring_windings(const DiskGrid<HomParam>& grid,
                               double tol_unitary = default_tolerances().tol_unitary);

/// Winding of det(eval_z(.)) along the boundary ring of a certificate
/// grid over T = S1. A nonzero value rules the certificate out.
int boundary_winding_of_certificate(const DiskGrid<HomParam>& grid,
                                    double tol_unitary = default_tolerances().tol_unitary);

} // namespace qnull

#endif
