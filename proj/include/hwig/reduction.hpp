#ifndef HWIG_REDUCTION_HPP
#define HWIG_REDUCTION_HPP

#include <array>
#include <string>
#include <vector>

#include "hwig/states.hpp"

namespace hwig {

struct GridAxis {
    double min;
    double max;
    int count;

    GridAxis(double min, double max, int count);
    double step() const { return (max - min) / (count - 1); }
    double coord(int i) const { return min + step() * i; }
};

/// Sampled reduced Wigner function on a 2D or 4D phase-space grid.
/// Axes alternate (q, p) per complex dimension with a = q + i p; the cell
/// measure is dq dp / pi per complex dimension. values is row-major with
/// the last axis fastest.
struct ReducedWignerGrid {
    std::vector<GridAxis> axes;
    std::vector<double> values;
    int dims = 0;
    std::vector<std::string> mode_labels;

    double cell_measure() const;
    double quadrature() const;
    std::size_t flat_index(const std::vector<int>& idx) const;
};

/// Collapses a polynomial Gaussian onto the orthonormal subspace carrying
/// its polynomial. The polynomial is re-expressed in subspace coordinates;
/// the Gaussian is replaced by its exact marginal. Throws ReductionError
/// if the polynomial has support outside the subspace.
PolyGaussian marginalize(const PolyGaussian& p,
                         const std::vector<FieldVector>& subspace,
                         double tol = 1e-10);

/// Dense evaluation over a 2D (one complex mode) or 4D (two complex
/// modes) grid; axes.size() must equal 2 * n_modes of the reduced state.
ReducedWignerGrid sample_grid(const PolyGaussian& reduced,
                              const std::vector<GridAxis>& axes);

/// 2D section of a 4D grid along axes (axis_q, axis_p) with the other two
/// axes held at the given indices.
ReducedWignerGrid section_2d(const ReducedWignerGrid& grid, int axis_q,
                             int axis_p, std::array<int, 2> fixed_indices);

struct NegativityMetrics {
    double min_value = 0.0;
    std::vector<double> argmin;
    double negative_volume = 0.0;
};

NegativityMetrics negativity_metrics(const ReducedWignerGrid& grid);

/// |a*<>b|^2 / (|a|^2 |b|^2) in [0, 1]; quantifies local-oscillator
/// mismatch against a transformed detector mode.
double mode_overlap(const FieldVector& a, const FieldVector& b);

/// Square axes covering the reduced state out to ~5.5 sigma (never less
/// than [-4, 4]), snapped to a fixed 0.05 step so outputs are reproducible.
std::vector<GridAxis> auto_axes(const PolyGaussian& reduced,
                                int points_per_axis_4d = 41);

} // namespace hwig

#endif
