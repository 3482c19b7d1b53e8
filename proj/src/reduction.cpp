#include "hwig/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include <Eigen/Cholesky>

namespace hwig {

GridAxis::GridAxis(double min_in, double max_in, int count_in)
    : min(min_in), max(max_in), count(count_in) {
    if (count < 2 || !(max > min)) {
        throw DomainError("grid axis requires max > min and count >= 2");
    }
}

double ReducedWignerGrid::cell_measure() const {
    double m = 1.0;
    for (std::size_t i = 0; i + 1 < axes.size(); i += 2) {
        m *= axes[i].step() * axes[i + 1].step() / M_PI;
    }
    return m;
}

double ReducedWignerGrid::quadrature() const {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum * cell_measure();
}

std::size_t ReducedWignerGrid::flat_index(const std::vector<int>& idx) const {
    std::size_t flat = 0;
    for (std::size_t d = 0; d < axes.size(); ++d) {
        flat = flat * axes[d].count + idx[d];
    }
    return flat;
}

namespace {

// Unitary whose first k columns are the subspace vectors, completed with
// canonical directions.
CMatrix completed_unitary(const std::vector<FieldVector>& subspace,
                          const BasisPtr& basis) {
    const int n = basis->n_modes();
    const int k = static_cast<int>(subspace.size());
    std::vector<FieldVector> gens = subspace;
    for (int i = 0; i < n; ++i) {
        gens.push_back(basis_vector(basis, i));
    }
    const auto gs = gram_schmidt(gens);
    if (static_cast<int>(gs.basis.size()) != n) {
        throw ReductionError("could not complete subspace to a full basis");
    }
    CMatrix omega(n, n);
    for (int j = 0; j < n; ++j) {
        omega.col(j) = gs.basis[j].amps();
    }
    // The first k columns must still span the given subspace exactly.
    for (int j = 0; j < k; ++j) {
        if ((omega.col(j) - subspace[j].amps()).norm() > 1e-8) {
            throw ReductionError("subspace vectors are not orthonormal");
        }
    }
    return omega;
}

double off_block_residual_quad(const CMatrix& m, int k) {
    const int n = static_cast<int>(m.rows());
    double r = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i >= k || j >= k) r = std::max(r, std::abs(m(i, j)));
        }
    }
    return r;
}

// Rebuilds (A, B) kernels from a real 2k x 2k quadratic form.
void kernels_from_quadratic_form(const RMatrix& s, CMatrix& a, CMatrix& b) {
    const Eigen::Index k = s.rows() / 2;
    const RMatrix sxx = s.topLeftCorner(k, k);
    const RMatrix syy = s.bottomRightCorner(k, k);
    const RMatrix sxy = s.topRightCorner(k, k);
    const RMatrix syx = s.bottomLeftCorner(k, k);
    const Complex i1(0.0, 1.0);
    a = ((sxx + syy) / 4.0).cast<Complex>() + i1 * ((syx - sxy) / 4.0).cast<Complex>();
    b = ((sxx - syy) / 4.0).cast<Complex>() + i1 * ((sxy + syx) / 4.0).cast<Complex>();
    // Symmetrize away round-off so the kernel validators stay happy.
    a = 0.5 * (a + a.adjoint()).eval();
    b = 0.5 * (b + b.transpose()).eval();
}

double log_det_spd(const RMatrix& s) {
    Eigen::LLT<RMatrix> llt(s);
    if (llt.info() != Eigen::Success) {
        throw DomainError("quadratic form is not positive definite");
    }
    return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

} // namespace

PolyGaussian marginalize(const PolyGaussian& p,
                         const std::vector<FieldVector>& subspace,
                         double tol) {
    const BasisPtr& basis = p.base.basis();
    const int n = basis->n_modes();
    const int k = static_cast<int>(subspace.size());
    if (k == 0) {
        throw DimensionError("marginalize requires a nonempty subspace");
    }
    if (k > n) {
        throw DimensionError("subspace larger than the full basis");
    }
    for (const auto& v : subspace) {
        require_same_basis(basis, v.basis(), "marginalize");
    }

    const CMatrix omega = completed_unitary(subspace, basis);
    const CMatrix omega_h = omega.adjoint();

    // Rotate so the subspace is coordinate-aligned. a*<>K<>a transforms
    // with Omega^dag K Omega, anomalous blocks with Omega^dag K conj(Omega).
    const CMatrix a_rot = omega_h * p.base.a().entries() * omega;
    const CMatrix b_rot = omega_h * p.base.b().entries() * omega.conjugate();
    const CVector mean_rot = omega_h * p.base.mean().amps();
    const CVector lin_rot = omega_h * p.lin.amps();
    const CMatrix quad_rot = omega_h * p.quad.entries() * omega;
    const CMatrix anom_rot = omega_h * p.anom.entries() * omega.conjugate();

    const double poly_scale = std::max(
        {1.0, lin_rot.cwiseAbs().maxCoeff(), quad_rot.cwiseAbs().maxCoeff(),
         anom_rot.cwiseAbs().maxCoeff()});
    double support = lin_rot.tail(n - k).cwiseAbs().maxCoeff();
    support = std::max(support, off_block_residual_quad(quad_rot, k));
    support = std::max(support, off_block_residual_quad(anom_rot, k));
    if (support > tol * poly_scale) {
        throw ReductionError(
            "polynomial prefactor has support outside the subspace");
    }

    // Exact Gaussian marginal: keep the subspace rows/columns of the real
    // covariance and convert back to kernel form.
    GaussianWigner rotated = GaussianWigner::make_with_log_prefactor(
        Kernel(basis, a_rot), Kernel(basis, b_rot),
        FieldVector(basis, mean_rot), p.base.log_prefactor());
    const RMatrix cov = rotated.real_covariance();

    Eigen::VectorXi keep(2 * k);
    for (int i = 0; i < k; ++i) {
        keep(i) = i;
        keep(k + i) = n + i;
    }
    RMatrix cov_red(2 * k, 2 * k);
    for (int i = 0; i < 2 * k; ++i) {
        for (int j = 0; j < 2 * k; ++j) {
            cov_red(i, j) = cov(keep(i), keep(j));
        }
    }
    Eigen::LLT<RMatrix> llt(cov_red);
    if (llt.info() != Eigen::Success) {
        throw DomainError("reduced covariance is not positive definite");
    }
    const RMatrix s_red =
        0.5 * llt.solve(RMatrix::Identity(2 * k, 2 * k));

    CMatrix a_red, b_red;
    kernels_from_quadratic_form(s_red, a_red, b_red);

    const double log_pref = p.base.log_prefactor() -
                            0.5 * log_det_spd(rotated.real_quadratic_form()) +
                            0.5 * log_det_spd(s_red);

    std::vector<std::string> labels;
    labels.reserve(k);
    for (int i = 0; i < k; ++i) {
        labels.push_back("g" + std::to_string(i));
    }
    BasisPtr red_basis = make_basis(k, labels);

    GaussianWigner base_red = GaussianWigner::make_with_log_prefactor(
        Kernel(red_basis, a_red), Kernel(red_basis, b_red),
        FieldVector(red_basis, mean_rot.head(k)), log_pref);

    return PolyGaussian{std::move(base_red), p.c,
                        FieldVector(red_basis, lin_rot.head(k)),
                        Kernel(red_basis, quad_rot.topLeftCorner(k, k)),
                        Kernel(red_basis, anom_rot.topLeftCorner(k, k))};
}

ReducedWignerGrid sample_grid(const PolyGaussian& reduced,
                              const std::vector<GridAxis>& axes) {
    const int n = reduced.base.basis()->n_modes();
    if (axes.size() != static_cast<std::size_t>(2 * n) ||
        (axes.size() != 2 && axes.size() != 4)) {
        throw DimensionError("sample_grid supports 2D or 4D grids matching the state");
    }

    ReducedWignerGrid grid;
    grid.axes = axes;
    grid.dims = static_cast<int>(axes.size());
    grid.mode_labels = reduced.base.basis()->labels();

    std::size_t total = 1;
    for (const auto& ax : axes) total *= ax.count;
    grid.values.resize(total);

    const auto eval_point = [&](std::size_t flat) {
        std::vector<int> idx(axes.size());
        std::size_t rem = flat;
        for (int d = static_cast<int>(axes.size()) - 1; d >= 0; --d) {
            idx[d] = static_cast<int>(rem % axes[d].count);
            rem /= axes[d].count;
        }
        CVector alpha(n);
        for (int m = 0; m < n; ++m) {
            alpha(m) = Complex(axes[2 * m].coord(idx[2 * m]),
                               axes[2 * m + 1].coord(idx[2 * m + 1]));
        }
        return eval_polygauss(reduced,
                              FieldVector(reduced.base.basis(), alpha));
    };

    // Disjoint chunks, deterministic result independent of the schedule.
    const std::size_t min_parallel = 200000;
    unsigned workers = std::thread::hardware_concurrency();
    if (total < min_parallel || workers < 2) {
        for (std::size_t i = 0; i < total; ++i) grid.values[i] = eval_point(i);
    } else {
        workers = std::min<unsigned>(workers, 8);
        std::vector<std::thread> pool;
        const std::size_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi]() {
                for (std::size_t i = lo; i < hi; ++i) {
                    grid.values[i] = eval_point(i);
                }
            });
        }
        for (auto& t : pool) t.join();
    }
    return grid;
}

ReducedWignerGrid section_2d(const ReducedWignerGrid& grid, int axis_q,
                             int axis_p, std::array<int, 2> fixed_indices) {
    if (grid.dims != 4) {
        throw DimensionError("section_2d requires a 4D grid");
    }
    if (axis_q == axis_p || axis_q < 0 || axis_q > 3 || axis_p < 0 || axis_p > 3) {
        throw DomainError("section_2d axes must be distinct and in [0, 3]");
    }
    std::vector<int> others;
    for (int d = 0; d < 4; ++d) {
        if (d != axis_q && d != axis_p) others.push_back(d);
    }

    ReducedWignerGrid out;
    out.axes = {grid.axes[axis_q], grid.axes[axis_p]};
    out.dims = 2;
    out.mode_labels = grid.mode_labels;
    out.values.resize(static_cast<std::size_t>(grid.axes[axis_q].count) *
                      grid.axes[axis_p].count);

    std::vector<int> idx(4);
    idx[others[0]] = fixed_indices[0];
    idx[others[1]] = fixed_indices[1];
    std::size_t pos = 0;
    for (int i = 0; i < grid.axes[axis_q].count; ++i) {
        for (int j = 0; j < grid.axes[axis_p].count; ++j) {
            idx[axis_q] = i;
            idx[axis_p] = j;
            out.values[pos++] = grid.values[grid.flat_index(idx)];
        }
    }
    return out;
}

NegativityMetrics negativity_metrics(const ReducedWignerGrid& grid) {
    NegativityMetrics metrics;
    metrics.min_value = std::numeric_limits<double>::infinity();
    std::size_t best = 0;
    double neg = 0.0;
    for (std::size_t i = 0; i < grid.values.size(); ++i) {
        const double v = grid.values[i];
        if (v < metrics.min_value) {
            metrics.min_value = v;
            best = i;
        }
        if (v < 0.0) neg -= v;
    }
    metrics.negative_volume = neg * grid.cell_measure();

    std::size_t rem = best;
    std::vector<int> idx(grid.axes.size());
    for (int d = static_cast<int>(grid.axes.size()) - 1; d >= 0; --d) {
        idx[d] = static_cast<int>(rem % grid.axes[d].count);
        rem /= grid.axes[d].count;
    }
    metrics.argmin.resize(grid.axes.size());
    for (std::size_t d = 0; d < grid.axes.size(); ++d) {
        metrics.argmin[d] = grid.axes[d].coord(idx[d]);
    }
    return metrics;
}

double mode_overlap(const FieldVector& a, const FieldVector& b) {
    const double na = a.norm();
    const double nb = b.norm();
    if (na < 1e-14 || nb < 1e-14) {
        throw DomainError("mode_overlap requires nonzero vectors");
    }
    const Complex ov = diamond_vv(a, b);
    return std::norm(ov) / (na * na * nb * nb);
}

std::vector<GridAxis> auto_axes(const PolyGaussian& reduced,
                                int points_per_axis_4d) {
    const int n = reduced.base.basis()->n_modes();
    const RMatrix cov = reduced.base.real_covariance();
    const double sigma = std::sqrt(cov.diagonal().maxCoeff());
    const double mean_max = reduced.base.mean().amps().cwiseAbs().maxCoeff();

    double qmax = std::max(4.0, mean_max + 5.5 * sigma);
    qmax = std::ceil(qmax / 0.5) * 0.5;

    std::vector<GridAxis> axes;
    if (n == 1) {
        const int count = static_cast<int>(std::lround(2.0 * qmax / 0.05)) + 1;
        axes.assign(2, GridAxis(-qmax, qmax, count));
    } else if (n == 2) {
        axes.assign(4, GridAxis(-qmax, qmax, points_per_axis_4d));
    } else {
        throw DimensionError("auto_axes supports one or two reduced modes");
    }
    return axes;
}

} // namespace hwig
