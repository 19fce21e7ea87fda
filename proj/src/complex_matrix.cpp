#include "qnull/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qnull {

namespace {

void check_dim(int n) {
    if (n < 1 || n > ComplexMatrix::kMaxDim)
        throw InputError("matrix dimension must be in [1, 8], got " + std::to_string(n));
}

} // namespace

ComplexMatrix::ComplexMatrix(int n) : n_(n) {
    check_dim(n);
    entries_.assign(static_cast<size_t>(n) * n, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int n, std::vector<Complex> entries)
    : n_(n), entries_(std::move(entries)) {
    check_dim(n);
    if (entries_.size() != static_cast<size_t>(n) * n)
        throw InputError("entry count does not match dimension");
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::m2(Complex a00, Complex a01, Complex a10, Complex a11) {
    return ComplexMatrix(2, {a00, a01, a10, a11});
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
    if (n_ != o.n_) throw InputError("matrix dimension mismatch in +");
    ComplexMatrix r(n_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
    if (n_ != o.n_) throw InputError("matrix dimension mismatch in -");
    ComplexMatrix r(n_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
    return mat_mul(*this, o);
}

ComplexMatrix ComplexMatrix::operator*(Complex s) const {
    ComplexMatrix r(n_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = s * entries_[i];
    return r;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) { return m * s; }

bool ComplexMatrix::all_finite() const {
    for (const Complex& e : entries_)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    return true;
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw InputError("matrix dimension mismatch in mat_mul");
    const int n = a.dim();
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Complex aik = a.at(i, k);
            for (int j = 0; j < n; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    const int n = a.dim();
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = std::conj(a.at(j, i));
    return r;
}

Complex det(const ComplexMatrix& a) {
    const int n = a.dim();
    if (n == 1) return a.at(0, 0);
    if (n == 2) return a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
    if (n == 3) {
        return a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
               a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
               a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
    }
    // LU with partial pivoting.
    ComplexMatrix lu = a;
    Complex d = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(lu.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(lu.at(r, col));
            if (v > best) { best = v; pivot = r; }
        }
        if (best == 0.0) return Complex(0.0, 0.0);
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(lu.at(pivot, j), lu.at(col, j));
            d = -d;
        }
        d *= lu.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            const Complex f = lu.at(r, col) / lu.at(col, col);
            for (int j = col; j < n; ++j) lu.at(r, j) -= f * lu.at(col, j);
        }
    }
    return d;
}

Complex trace(const ComplexMatrix& a) {
    Complex t = 0.0;
    for (int i = 0; i < a.dim(); ++i) t += a.at(i, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const Complex& e : a.entries()) s += std::norm(e);
    return std::sqrt(s);
}

namespace {

// One power-iteration run on the Hermitian PSD matrix ata from the given
// start vector; returns the largest-eigenvalue estimate.
double power_iterate(const ComplexMatrix& ata, std::vector<Complex> v) {
    const int n = ata.dim();
    double nv = 0.0;
    for (const Complex& c : v) nv += std::norm(c);
    nv = std::sqrt(nv);
    if (nv == 0.0) return 0.0;
    for (Complex& c : v) c /= nv;

    double lambda = 0.0;
    std::vector<Complex> w(static_cast<size_t>(n));
    for (int iter = 0; iter < 2000; ++iter) {
        for (int i = 0; i < n; ++i) {
            Complex acc = 0.0;
            for (int j = 0; j < n; ++j) acc += ata.at(i, j) * v[static_cast<size_t>(j)];
            w[static_cast<size_t>(i)] = acc;
        }
        double nw = 0.0;
        for (const Complex& c : w) nw += std::norm(c);
        nw = std::sqrt(nw);
        if (nw == 0.0) return 0.0;
        const double prev = lambda;
        lambda = nw; // Rayleigh quotient of the normalized iterate
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = w[static_cast<size_t>(i)] / nw;
        if (iter > 0 && std::abs(lambda - prev) <= 1e-10 * std::max(lambda, 1e-300)) break;
    }
    return lambda;
}

} // namespace

double op_norm(const ComplexMatrix& a) {
    const int n = a.dim();
    if (frobenius_norm(a) == 0.0) return 0.0;
    const ComplexMatrix ata = mat_mul(adjoint(a), a);

    std::vector<Complex> ones(static_cast<size_t>(n), Complex(1.0, 0.0));
    std::vector<Complex> ramp(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ramp[static_cast<size_t>(i)] = Complex(1.0 + i, 0.0);

    const double lambda = std::max(power_iterate(ata, ones), power_iterate(ata, ramp));
    return std::sqrt(std::max(lambda, 0.0));
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    return op_norm(a - adjoint(a)) <= tol;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
    return op_norm(mat_mul(adjoint(a), a) - ComplexMatrix::identity(a.dim())) <= tol;
}

bool is_projection(const ComplexMatrix& a, double tol) {
    return op_norm(mat_mul(a, a) - a) <= tol && op_norm(adjoint(a) - a) <= tol;
}

ComplexMatrix h_matrix(Complex alpha, double t, double tol_point) {
    const double r = std::norm(alpha) + t * t;
    if (std::abs(r - 1.0) > tol_point || !std::isfinite(r))
        throw InputError("h_matrix: point is off the sphere (|alpha|^2 + t^2 = " +
                         std::to_string(r) + ")");
    return ComplexMatrix::m2(Complex(t, 0.0), std::conj(alpha), alpha, Complex(-t, 0.0));
}

std::pair<ComplexMatrix, ComplexMatrix> spectral_projections(Complex alpha, double t,
                                                             double tol_point) {
    const ComplexMatrix h = h_matrix(alpha, t, tol_point);
    ComplexMatrix p(2);
    p.at(0, 0) = (1.0 + h.at(0, 0).real()) / 2.0;
    p.at(1, 1) = (1.0 + h.at(1, 1).real()) / 2.0;
    p.at(0, 1) = h.at(0, 1) / 2.0;
    p.at(1, 0) = h.at(1, 0) / 2.0;
    // Exact complement: diagonal 1 - p, off-diagonal -p. Guarantees
    // P + Q == I2 bitwise (the rounded sum p + fl(1-p) is 1 for p in [0,1]).
    ComplexMatrix q(2);
    q.at(0, 0) = 1.0 - p.at(0, 0).real();
    q.at(1, 1) = 1.0 - p.at(1, 1).real();
    q.at(0, 1) = -p.at(0, 1);
    q.at(1, 0) = -p.at(1, 0);
    return {p, q};
}

} // namespace qnull
