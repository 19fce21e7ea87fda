#ifndef QNULL_COMPLEX_MATRIX_HPP
#define QNULL_COMPLEX_MATRIX_HPP

#include <complex>
#include <vector>

#include "qnull/errors.hpp"
#include "qnull/tolerances.hpp"

namespace qnull {

using Complex = std::complex<double>;

/// Dense n x n complex matrix, n <= 8, row-major storage.
///
/// Deliberately minimal: everything downstream needs 2x2 matrices plus
/// small-n demonstration loops, so no general linear-algebra backend is
/// pulled in.
class ComplexMatrix {
public:
    static constexpr int kMaxDim = 8;

    ComplexMatrix() = default;
    explicit ComplexMatrix(int n);
    ComplexMatrix(int n, std::vector<Complex> entries);

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int n) { return ComplexMatrix(n); }
    /// 2x2 convenience constructor.
    static ComplexMatrix m2(Complex a00, Complex a01, Complex a10, Complex a11);

    int dim() const { return n_; }
    Complex& at(int i, int j) { return entries_[static_cast<size_t>(i) * n_ + j]; }
    const Complex& at(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<Complex>& entries() const { return entries_; }

    ComplexMatrix operator+(const ComplexMatrix& o) const;
    ComplexMatrix operator-(const ComplexMatrix& o) const;
    ComplexMatrix operator*(const ComplexMatrix& o) const;
    ComplexMatrix operator*(Complex s) const;

    bool all_finite() const;

private:
    int n_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator*(Complex s, const ComplexMatrix& m);

/// Standard matrix product; throws InputError on dimension mismatch.
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Determinant: exact cofactor expansion for n <= 3, LU with partial
/// pivoting above.
Complex det(const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);

/// Largest singular value, by power iteration on M*M to relative
/// tolerance 1e-10. Two deterministic start vectors (normalized all-ones,
/// then a normalized index ramp) are tried and the larger estimate wins;
/// the all-ones vector alone can be exactly orthogonal to the top
/// singular subspace for rank-one differences that occur at x = (-1,0).
double op_norm(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol);
bool is_unitary(const ComplexMatrix& a, double tol);
bool is_projection(const ComplexMatrix& a, double tol);

/// The reflection matrix h(alpha, t) = [[t, conj(alpha)], [alpha, -t]]
/// for a point with |alpha|^2 + t^2 = 1 (checked within tol_point).
/// Self-adjoint, squares to I2, determinant -1, and h(-x) = -h(x) bitwise.
ComplexMatrix h_matrix(Complex alpha, double t,
                       double tol_point = default_tolerances().tol_point);

/// The rank-one spectral projections ((I2+h)/2, (I2-h)/2) of h(alpha, t).
/// The second is built as the exact entrywise complement of the first, so
/// the pair sums to I2 bitwise.
std::pair<ComplexMatrix, ComplexMatrix> spectral_projections(
    Complex alpha, double t,
    double tol_point = default_tolerances().tol_point);

} // namespace qnull

#endif
