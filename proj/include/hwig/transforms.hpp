#ifndef HWIG_TRANSFORMS_HPP
#define HWIG_TRANSFORMS_HPP

#include <utility>
#include <vector>

#include "hwig/mode_algebra.hpp"
#include "hwig/states.hpp"

namespace hwig {

/// Homogeneous beamsplitter with amplitude reflectivity zeta in [0, 1]
/// (intensity reflectivity zeta^2).
struct BeamsplitterSpec {
    double zeta;

    explicit BeamsplitterSpec(double zeta);
};

/// Field-variable transform of the homogeneous beamsplitter:
///   a -> sqrt(1-z^2) a + i z b,  b -> sqrt(1-z^2) b + i z a.
std::pair<FieldVector, FieldVector>
beamsplitter_map(const BeamsplitterSpec& spec, const FieldVector& alpha,
                 const FieldVector& beta);

/// Weak-squeezing Bogoliubov kernels U -> 1 + xi^2 F, V -> xi V with the
/// subleading kernel fixed by F = V<>V*/2 (Hermitian). xi_strength is kept
/// symbolic in the heralded maps and only enters success-probability
/// reporting.
struct WeakBogoliubov {
    Kernel v;
    Kernel f;
    double xi_strength;

    WeakBogoliubov(Kernel v, Kernel f, double xi_strength);
};

/// Builds the pair from V alone via F = V<>V*/2.
WeakBogoliubov weak_bogoliubov_from_v(const Kernel& v, double xi_strength);

/// Twin-beam Bogoliubov transform of the field variables:
///   a -> (1 + xi^2 F)<>a + xi V<>b*,  b -> (1 + xi^2 F)<>b + xi V<>a*.
std::pair<FieldVector, FieldVector>
twin_beam_map(const WeakBogoliubov& wb, const FieldVector& alpha,
              const FieldVector& beta);

/// Squeezed-state kernels from Bogoliubov kernels:
///   A = U<>U + V<>V*,  B = U<>V + V<>U*.
/// Validates Hermiticity of A and symmetry of B.
std::pair<Kernel, Kernel> ab_from_uv(const Kernel& u, const Kernel& v);

struct BogoliubovPair {
    Kernel u;
    Kernel v;
};

struct SqueezeMode {
    double r;
    double phi;
    FieldVector mode; // unit norm
};

/// Canonical Bogoliubov pair squeezing the given orthonormal modes:
/// U = 1 + sum (cosh r - 1) P P*, V = sum e^{i phi} sinh r P P^T.
BogoliubovPair make_mode_squeezer(const BasisPtr& basis,
                                  const std::vector<SqueezeMode>& modes);

} // namespace hwig

#endif
