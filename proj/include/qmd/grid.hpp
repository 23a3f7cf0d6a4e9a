#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qmd/field.hpp"

namespace qmd {

/// Execution policy for the grid kernels. Parallel uses OpenMP when the
/// build enables it; Serial is the reference implementation. Both produce
/// bit-identical results (pointwise kernels write disjoint outputs and the
/// max-norm reduction is order-independent).
enum class Exec { Serial, Parallel };

/// Axis-aligned box given by its low corner and per-axis extents.
struct GridBox {
    std::array<double, 3> corner{};
    std::array<double, 3> extent{};
};

/// Uniformly sampled 4-component complex field. `margin` counts boundary
/// layers whose values are not meaningful (grows with each finite
/// difference application); residual_max skips them.
class GridField {
public:
    GridField(GridBox box, double h, std::array<std::size_t, 3> npts, int margin = 0);

    const GridBox& box() const { return box_; }
    double spacing() const { return h_; }
    const std::array<std::size_t, 3>& npts() const { return n_; }
    int margin() const { return margin_; }
    void set_margin(int m) { margin_ = m; }

    std::size_t node_count() const { return n_[0] * n_[1] * n_[2]; }
    std::complex<double>* data() { return data_.data(); }
    const std::complex<double>* data() const { return data_.data(); }

    std::complex<double>& at(std::size_t i1, std::size_t i2, std::size_t i3, int comp) {
        return data_[(((i3 * n_[1]) + i2) * n_[0] + i1) * 4 + static_cast<std::size_t>(comp)];
    }
    const std::complex<double>& at(std::size_t i1, std::size_t i2, std::size_t i3, int comp) const {
        return data_[(((i3 * n_[1]) + i2) * n_[0] + i1) * 4 + static_cast<std::size_t>(comp)];
    }

    double node_coord(int axis, std::size_t index) const {
        return box_.corner[static_cast<std::size_t>(axis)] + h_ * static_cast<double>(index);
    }

    friend bool operator==(const GridField& a, const GridField& b);

private:
    GridBox box_;
    double h_;
    std::array<std::size_t, 3> n_;
    int margin_;
    std::vector<std::complex<double>> data_;
};

/// Node counts for a box/spacing pair. Requires each extent to be a
/// multiple of h (to roundoff) and at least 5 nodes per axis.
std::array<std::size_t, 3> grid_dims(const GridBox& box, double h);

/// Evaluate an analytic field at the grid nodes (exact scalars are
/// converted to doubles at this boundary).
GridField sample(const AnalyticField& f, const GridBox& box, double h,
                 Exec exec = Exec::Parallel);

/// Apply an operator with second-order central differences at interior
/// nodes. Requires total degree <= 2 per term; reflection terms require the
/// box to be symmetric about the reflected axis.
GridField fd_apply(const DiffOperator& op, const GridField& g, Exec exec = Exec::Parallel);

/// Max complex modulus over all components at nodes at least `margin`
/// layers away from the boundary.
double residual_max(const GridField& g, Exec exec = Exec::Parallel);

/// Pointwise difference; margins combine as max.
GridField grid_sub(const GridField& a, const GridField& b);

}  // namespace qmd
