#include "qmd/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qmd {

namespace {

using cplx = std::complex<double>;

struct FloatTerm {
    std::array<cplx, 4> amp;
    std::array<cplx, 3> wave;
};

std::vector<FloatTerm> to_float_terms(const AnalyticField& f) {
    std::vector<FloatTerm> out;
    for (const auto& t : f.terms()) {
        FloatTerm ft;
        for (int i = 0; i < 4; ++i) ft.amp[static_cast<size_t>(i)] = t.amp[static_cast<size_t>(i)].to_complex();
        for (int i = 0; i < 3; ++i) ft.wave[static_cast<size_t>(i)] = t.wave[static_cast<size_t>(i)].to_complex();
        out.push_back(ft);
    }
    return out;
}

// ---- kernels -------------------------------------------------------------
// Each kernel has a serial reference version and an OpenMP version over the
// flattened node index. Per-node work is independent, so the two are
// bit-identical.

void sample_node(const std::vector<FloatTerm>& terms, const GridField& g, std::size_t idx,
                 cplx* out) {
    const auto& n = g.npts();
    std::size_t i1 = idx % n[0];
    std::size_t i2 = (idx / n[0]) % n[1];
    std::size_t i3 = idx / (n[0] * n[1]);
    const double x1 = g.node_coord(0, i1), x2 = g.node_coord(1, i2), x3 = g.node_coord(2, i3);
    cplx acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (const auto& t : terms) {
        cplx phase = std::exp(cplx(0.0, 1.0) * (t.wave[0] * x1 + t.wave[1] * x2 + t.wave[2] * x3));
        for (int c = 0; c < 4; ++c) acc[c] += t.amp[static_cast<size_t>(c)] * phase;
    }
    for (int c = 0; c < 4; ++c) out[idx * 4 + static_cast<size_t>(c)] = acc[c];
}

void sample_serial(const std::vector<FloatTerm>& terms, GridField& g) {
    const std::size_t total = g.node_count();
    for (std::size_t idx = 0; idx < total; ++idx) sample_node(terms, g, idx, g.data());
}

void sample_parallel(const std::vector<FloatTerm>& terms, GridField& g) {
    const std::size_t total = g.node_count();
    cplx* out = g.data();
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < static_cast<long long>(total); ++idx)
        sample_node(terms, g, static_cast<std::size_t>(idx), out);
}

// central first difference along `axis`; boundary layer left at zero
void diff_node(const GridField& in, int axis, double inv2h, std::size_t idx, cplx* out) {
    const auto& n = in.npts();
    std::size_t i1 = idx % n[0];
    std::size_t i2 = (idx / n[0]) % n[1];
    std::size_t i3 = idx / (n[0] * n[1]);
    std::size_t ia = axis == 0 ? i1 : axis == 1 ? i2 : i3;
    if (ia == 0 || ia + 1 >= n[static_cast<size_t>(axis)]) {
        for (int c = 0; c < 4; ++c) out[idx * 4 + static_cast<size_t>(c)] = 0.0;
        return;
    }
    const std::size_t stride = axis == 0 ? 1 : axis == 1 ? n[0] : n[0] * n[1];
    const cplx* d = in.data();
    for (int c = 0; c < 4; ++c)
        out[idx * 4 + static_cast<size_t>(c)] =
            (d[(idx + stride) * 4 + static_cast<size_t>(c)] - d[(idx - stride) * 4 + static_cast<size_t>(c)]) * inv2h;
}

void diff_serial(const GridField& in, int axis, double inv2h, GridField& out) {
    const std::size_t total = in.node_count();
    for (std::size_t idx = 0; idx < total; ++idx) diff_node(in, axis, inv2h, idx, out.data());
}

void diff_parallel(const GridField& in, int axis, double inv2h, GridField& out) {
    const std::size_t total = in.node_count();
    cplx* o = out.data();
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < static_cast<long long>(total); ++idx)
        diff_node(in, axis, inv2h, static_cast<std::size_t>(idx), o);
}

void reflect_node(const GridField& in, int axis, std::size_t idx, cplx* out) {
    const auto& n = in.npts();
    std::size_t i[3];
    i[0] = idx % n[0];
    i[1] = (idx / n[0]) % n[1];
    i[2] = idx / (n[0] * n[1]);
    i[static_cast<size_t>(axis)] = n[static_cast<size_t>(axis)] - 1 - i[static_cast<size_t>(axis)];
    std::size_t src = ((i[2] * n[1]) + i[1]) * n[0] + i[0];
    for (int c = 0; c < 4; ++c)
        out[idx * 4 + static_cast<size_t>(c)] = in.data()[src * 4 + static_cast<size_t>(c)];
}

void reflect_serial(const GridField& in, int axis, GridField& out) {
    const std::size_t total = in.node_count();
    for (std::size_t idx = 0; idx < total; ++idx) reflect_node(in, axis, idx, out.data());
}

void reflect_parallel(const GridField& in, int axis, GridField& out) {
    const std::size_t total = in.node_count();
    cplx* o = out.data();
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < static_cast<long long>(total); ++idx)
        reflect_node(in, axis, static_cast<std::size_t>(idx), o);
}

void matrix_axpy_node(const std::array<cplx, 16>& m, const GridField& in, std::size_t idx,
                      cplx* out) {
    const cplx* v = in.data() + idx * 4;
    for (int r = 0; r < 4; ++r) {
        cplx acc = 0.0;
        for (int c = 0; c < 4; ++c) acc += m[static_cast<size_t>(r * 4 + c)] * v[c];
        out[idx * 4 + static_cast<size_t>(r)] += acc;
    }
}

void matrix_axpy_serial(const std::array<cplx, 16>& m, const GridField& in, GridField& out) {
    const std::size_t total = in.node_count();
    for (std::size_t idx = 0; idx < total; ++idx) matrix_axpy_node(m, in, idx, out.data());
}

void matrix_axpy_parallel(const std::array<cplx, 16>& m, const GridField& in, GridField& out) {
    const std::size_t total = in.node_count();
    cplx* o = out.data();
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < static_cast<long long>(total); ++idx)
        matrix_axpy_node(m, in, static_cast<std::size_t>(idx), o);
}

double max_abs_serial(const GridField& g) {
    const auto& n = g.npts();
    const std::size_t m = static_cast<std::size_t>(std::max(g.margin(), 0));
    double r = 0.0;
    for (std::size_t i3 = m; i3 + m < n[2]; ++i3)
        for (std::size_t i2 = m; i2 + m < n[1]; ++i2)
            for (std::size_t i1 = m; i1 + m < n[0]; ++i1)
                for (int c = 0; c < 4; ++c) r = std::max(r, std::abs(g.at(i1, i2, i3, c)));
    return r;
}

double max_abs_parallel(const GridField& g) {
    const auto& n = g.npts();
    const long long m = std::max(g.margin(), 0);
    double r = 0.0;
#pragma omp parallel for schedule(static) reduction(max : r)
    for (long long i3 = m; i3 < static_cast<long long>(n[2]) - m; ++i3)
        for (long long i2 = m; i2 < static_cast<long long>(n[1]) - m; ++i2)
            for (long long i1 = m; i1 < static_cast<long long>(n[0]) - m; ++i1)
                for (int c = 0; c < 4; ++c)
                    r = std::max(r, std::abs(g.at(static_cast<std::size_t>(i1),
                                                  static_cast<std::size_t>(i2),
                                                  static_cast<std::size_t>(i3), c)));
    return r;
}

}  // namespace

GridField::GridField(GridBox box, double h, std::array<std::size_t, 3> npts, int margin)
    : box_(box), h_(h), n_(npts), margin_(margin), data_(n_[0] * n_[1] * n_[2] * 4, cplx(0.0)) {}

bool operator==(const GridField& a, const GridField& b) {
    return a.n_ == b.n_ && a.margin_ == b.margin_ && a.data_ == b.data_;
}

std::array<std::size_t, 3> grid_dims(const GridBox& box, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("grid spacing must be positive");
    std::array<std::size_t, 3> n{};
    for (int ax = 0; ax < 3; ++ax) {
        double ext = box.extent[static_cast<size_t>(ax)];
        double steps = ext / h;
        double rounded = std::round(steps);
        if (std::abs(steps - rounded) > 1e-9 * std::max(1.0, std::abs(steps)))
            throw std::invalid_argument("box extent is not a multiple of the grid spacing");
        n[static_cast<size_t>(ax)] = static_cast<std::size_t>(rounded) + 1;
        if (n[static_cast<size_t>(ax)] < 5)
            throw std::invalid_argument("box too small: at least 5 nodes per axis required");
    }
    return n;
}

GridField sample(const AnalyticField& f, const GridBox& box, double h, Exec exec) {
    GridField g(box, h, grid_dims(box, h));
    auto terms = to_float_terms(f);
    if (exec == Exec::Parallel)
        sample_parallel(terms, g);
    else
        sample_serial(terms, g);
    return g;
}

GridField fd_apply(const DiffOperator& op, const GridField& g, Exec exec) {
    GridField out(g.box(), g.spacing(), g.npts(),
                  g.margin() + static_cast<int>(op.max_total_degree()));
    const double inv2h = 1.0 / (2.0 * g.spacing());
    for (const auto& [key, coeff] : op.terms()) {
        if (key.total_degree() > 2)
            throw std::invalid_argument("fd_apply supports operator terms of degree <= 2 only");
        GridField tmp = g;
        for (int ax = 0; ax < 3; ++ax) {
            if (!(key.mask & (1u << ax))) continue;
            double lo = g.box().corner[static_cast<size_t>(ax)];
            double hi = lo + g.box().extent[static_cast<size_t>(ax)];
            if (std::abs(lo + hi) > 1e-9 * std::max(1.0, std::abs(hi)))
                throw std::invalid_argument(
                    "reflection term requires a box symmetric about the reflection plane");
            GridField dst(tmp.box(), tmp.spacing(), tmp.npts(), tmp.margin());
            if (exec == Exec::Parallel)
                reflect_parallel(tmp, ax, dst);
            else
                reflect_serial(tmp, ax, dst);
            tmp = std::move(dst);
        }
        for (int ax = 0; ax < 3; ++ax) {
            for (unsigned d = 0; d < key.degree[static_cast<size_t>(ax)]; ++d) {
                GridField dst(tmp.box(), tmp.spacing(), tmp.npts(), tmp.margin() + 1);
                if (exec == Exec::Parallel)
                    diff_parallel(tmp, ax, inv2h, dst);
                else
                    diff_serial(tmp, ax, inv2h, dst);
                tmp = std::move(dst);
            }
        }
        std::array<cplx, 16> m;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m[static_cast<size_t>(r * 4 + c)] = coeff.at(r, c).to_complex();
        if (exec == Exec::Parallel)
            matrix_axpy_parallel(m, tmp, out);
        else
            matrix_axpy_serial(m, tmp, out);
    }
    return out;
}

double residual_max(const GridField& g, Exec exec) {
    const auto& n = g.npts();
    const std::size_t m = static_cast<std::size_t>(std::max(g.margin(), 0));
    for (int ax = 0; ax < 3; ++ax)
        if (n[static_cast<size_t>(ax)] <= 2 * m)
            throw std::invalid_argument("margin leaves no interior nodes");
    return exec == Exec::Parallel ? max_abs_parallel(g) : max_abs_serial(g);
}

GridField grid_sub(const GridField& a, const GridField& b) {
    if (a.npts() != b.npts()) throw std::invalid_argument("grid_sub: dimension mismatch");
    GridField out(a.box(), a.spacing(), a.npts(), std::max(a.margin(), b.margin()));
    const std::size_t total = a.node_count() * 4;
    for (std::size_t i = 0; i < total; ++i) out.data()[i] = a.data()[i] - b.data()[i];
    return out;
}

}  // namespace qmd
