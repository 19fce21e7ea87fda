#ifndef QNULL_DISK_GRID_HPP
#define QNULL_DISK_GRID_HPP

#include <vector>

#include "qnull/errors.hpp"

namespace qnull {

/// Polar grid on the unit disk: rings i = 1..R at radius i/R with N
/// angular samples each, plus a single center value at r = 0. Ring R is
/// the boundary.
template <class T>
struct DiskGrid {
    int rings = 0;  // R
    int angles = 0; // N
    T center{};
    std::vector<std::vector<T>> cells; // cells[i-1][k] is ring i, angle k

    const T& at(int ring, int k) const {
        if (ring == 0) return center;
        return cells[static_cast<size_t>(ring - 1)][static_cast<size_t>(k)];
    }
    T& at(int ring, int k) {
        if (ring == 0) return center;
        return cells[static_cast<size_t>(ring - 1)][static_cast<size_t>(k)];
    }

    const std::vector<T>& ring(int i) const { return cells[static_cast<size_t>(i - 1)]; }
    std::vector<T>& ring(int i) { return cells[static_cast<size_t>(i - 1)]; }

    void check_shape() const {
        if (rings < 1 || angles < 1 || cells.size() != static_cast<size_t>(rings))
            throw InputError("disk grid: ring count mismatch");
        for (const auto& row : cells)
            if (row.size() != static_cast<size_t>(angles))
                throw InputError("disk grid: ragged ring");
    }
};

/// Max adjacent-cell distance over the whole grid under `dist`: within
/// each ring (cyclically), between consecutive rings at equal angles, and
/// between ring 1 and the center.
template <class T, class Dist>
double grid_continuity_modulus(const DiskGrid<T>& g, Dist dist) {
    double worst = 0.0;
    for (int i = 1; i <= g.rings; ++i) {
        for (int k = 0; k < g.angles; ++k) {
            const double dring = dist(g.at(i, k), g.at(i, (k + 1) % g.angles));
            if (dring > worst) worst = dring;
            const double dradial = dist(g.at(i, k), g.at(i - 1, k));
            if (dradial > worst) worst = dradial;
        }
    }
    return worst;
}

} // namespace qnull

#endif
