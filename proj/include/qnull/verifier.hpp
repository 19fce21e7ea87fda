#ifndef QNULL_VERIFIER_HPP
#define QNULL_VERIFIER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qnull/constructor.hpp"

namespace qnull {

/// Outcome of checking a claimed certificate. The verifier recomputes
/// everything from the grid; it never trusts the constructor.
struct VerificationReport {
    bool accepted = false;
    double tol = kDefaultCertTol;
    double boundary_error = 0.0;     // grid ring R vs iota(boundary loop)
    double continuity_modulus = 0.0; // max adjacent-cell eval_metric
    double declared_mesh_bound = 0.0;
    double basepoint_drift = 0.0;    // column 0 vs iota(basepoint)
    bool has_windings = false;       // T = S1 only
    std::vector<int> ring_windings;  // ring 1 .. ring R
    std::vector<std::string> failures; // named failing checks, empty iff accepted

    std::string summary() const;
};

/// Verify a certificate against a boundary loop (resampled if its sample
/// count differs from the grid's). ACCEPT iff the boundary error is within
/// tol, the continuity modulus is within the declared mesh bound (itself
/// capped by the global ceiling), every cell is a genuine point of the
/// model spaces, and for T = S1 all ring windings exist and vanish.
VerificationReport verify(const Certificate& cert, const SampledLoop& boundary, double tol);

/// Verify against the certificate's own stored boundary loop.
VerificationReport verify(const Certificate& cert, double tol = kDefaultCertTol);

/// Spot-check that random grid cells name unital *-homomorphisms: over
/// `trials` random cells and pairs (a, b) drawn from the product-and-
/// conjugation closure of the separating family, the max of
/// |rho(ab) - rho(a)rho(b)|, |rho(conj a) - rho(a)*|, |rho(1) - I2|.
double check_hom_laws(const Certificate& cert, int trials, std::uint64_t seed = 0x5eed5eedULL);

struct AdversarialCase {
    std::string name;
    bool expect_accept = false;
    bool accepted = false;
    std::vector<std::string> failures;

    bool as_expected() const { return accepted == expect_accept; }
};

struct AdversarialReport {
    std::vector<AdversarialCase> cases;
    bool all_as_expected = true;

    std::string summary() const;
};

/// Run the negative-control battery against a base certificate: the valid
/// certificate must ACCEPT, and the torn-ring, rotated-boundary,
/// off-sphere-cell, and (over S1) winding-carrying fabrications must all
/// REJECT.
AdversarialReport adversarial_suite(const Certificate& base);

/// Convenience overload: builds a default base certificate for the space
/// (constant for S1, generator for RP2, commutator for the wedge).
AdversarialReport adversarial_suite(Space space);

} // namespace qnull

#endif
