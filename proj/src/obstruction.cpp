#include "qnull/obstruction.hpp"

#include <cmath>
#include <numbers>

namespace qnull {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
} // namespace

UnitaryLoop make_unitary_loop(std::vector<ComplexMatrix> samples, double tol_unitary) {
    if (samples.empty()) throw InputError("unitary loop needs samples");
    const int n = samples.front().dim();
    for (const ComplexMatrix& m : samples) {
        if (m.dim() != n) throw InputError("unitary loop samples have mixed dimensions");
        if (!is_unitary(m, tol_unitary))
            throw InputError("unitary loop sample fails the unitarity check");
    }
    UnitaryLoop loop;
    loop.n = n;
    double mesh = 0.0;
    const size_t count = samples.size();
    for (size_t k = 0; k < count; ++k)
        mesh = std::max(mesh, op_norm(samples[(k + 1) % count] - samples[k]));
    if (mesh >= std::sqrt(2.0))
        throw MeshError("unitary loop mesh reaches sqrt(2); winding would be ambiguous");
    loop.samples = std::move(samples);
    loop.mesh_bound = mesh;
    return loop;
}

std::vector<Complex> det_loop(const UnitaryLoop& u, double tol_unitary) {
    std::vector<Complex> dets;
    dets.reserve(u.samples.size());
    for (const ComplexMatrix& m : u.samples) {
        if (!is_unitary(m, tol_unitary))
            throw InputError("det_loop: sample fails the unitarity check");
        const Complex d = det(m);
        if (std::abs(std::abs(d) - 1.0) > u.n * tol_unitary)
            throw InputError("det_loop: determinant left the unit circle");
        dets.push_back(d);
    }
    return dets;
}

WindingResult winding_number(std::span<const Complex> values) {
    if (values.size() < 2) throw InputError("winding_number needs at least 2 values");
    double sum = 0.0;
    const size_t n = values.size();
    for (size_t k = 0; k < n; ++k) {
        const Complex a = values[k];
        const Complex b = values[(k + 1) % n];
        if (std::abs(a) < 0.5 || std::abs(b) < 0.5)
            throw InputError("winding_number: value is far from the unit circle");
        const double step = std::arg(b * std::conj(a));
        if (std::abs(step) > kPi / 2.0)
            throw MeshError("winding_number: phase step exceeds pi/2 (mesh too coarse)");
        sum += step;
    }
    const double raw = sum / kTwoPi;
    WindingResult r;
    r.winding = static_cast<int>(std::lround(raw));
    r.residue = std::abs(raw - r.winding);
    if (r.residue >= 0.01)
        throw MeshError("winding_number: rounding residue too large to trust");
    return r;
}

std::vector<Complex> canonical_det_trace(int n, int samples) {
    if (n < 1 || n > ComplexMatrix::kMaxDim)
        throw InputError("canonical obstruction dimension must be in [1, 8]");
    if (samples < 4) throw InputError("canonical obstruction needs at least 4 samples");
    std::vector<ComplexMatrix> loop;
    loop.reserve(static_cast<size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        const Complex s = k == 0 ? Complex(1.0, 0.0) : std::polar(1.0, kTwoPi * k / samples);
        loop.push_back(ComplexMatrix::identity(n) * s);
    }
    return det_loop(make_unitary_loop(std::move(loop)));
}

int canonical_obstruction(int n, int samples) {
    const std::vector<Complex> dets = canonical_det_trace(n, samples);
    return winding_number(dets).winding;
}

int ring_winding(const std::vector<HomParam>& ring, double tol_unitary) {
    std::vector<Complex> dets;
    dets.reserve(ring.size());
    for (const HomParam& p : ring) dets.push_back(det(eval_z(p, tol_unitary)));
    return winding_number(dets).winding;
}

std::vector<int> ring_windings(const DiskGrid<HomParam>& grid, double tol_unitary) {
    std::vector<int> windings;
    windings.reserve(static_cast<size_t>(grid.rings));
    for (int i = 1; i <= grid.rings; ++i) windings.push_back(ring_winding(grid.ring(i), tol_unitary));
    return windings;
}

int boundary_winding_of_certificate(const DiskGrid<HomParam>& grid, double tol_unitary) {
    grid.check_shape();
    if (grid.ring(grid.rings).front().space() != Space::S1)
        throw InputError("boundary winding is defined for certificates over S1");
    return ring_winding(grid.ring(grid.rings), tol_unitary);
}

} // namespace qnull
