#ifndef QNULL_TOLERANCES_HPP
#define QNULL_TOLERANCES_HPP

namespace qnull {

/// Numerical tolerances shared across the library. The defaults leave
/// several digits of headroom at the dimensions in use (n <= 8).
struct Tolerances {
    double tol_point = 1e-9;    // membership in a model space
    double tol_proj = 1e-10;    // projection property of (I +- h)/2
    double tol_unitary = 1e-10; // unitarity of evaluated matrices
};

inline const Tolerances& default_tolerances() {
    static const Tolerances t{};
    return t;
}

/// Hard ceiling on the adjacent-cell evaluation-metric distance any
/// certificate may declare; the discrete winding argument needs it.
inline constexpr double kMeshCeiling = 0.2;

/// Default acceptance tolerance for certificate verification.
inline constexpr double kDefaultCertTol = 1e-9;

} // namespace qnull

#endif
