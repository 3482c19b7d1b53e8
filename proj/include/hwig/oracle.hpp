#ifndef HWIG_ORACLE_HPP
#define HWIG_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "hwig/heralding.hpp"
#include "hwig/reduction.hpp"
#include "hwig/states.hpp"
#include "hwig/transforms.hpp"

namespace hwig {

/// Brute-force verification backend: multidimensional quadrature over the
/// discretized phase space, independent of the closed-form machinery it
/// checks.
struct QuadratureSpec {
    enum class Scheme { GaussHermite, MonteCarlo };

    Scheme scheme = Scheme::GaussHermite;
    // Gauss-Hermite order per real dimension, or Monte-Carlo sample count.
    int order = 40;
    // Roughly sqrt(2) * sigma of the integrand per quadrature; 0.75
    // matches vacuum-width Gaussians.
    double domain_scale = 0.75;
    std::uint64_t seed = 1234;

    static QuadratureSpec gauss_hermite(int order, double scale = 0.75);
    static QuadratureSpec monte_carlo(int samples, double scale = 0.75,
                                      std::uint64_t seed = 1234);
};

struct IntegralResult {
    Complex value;
    double std_error; // MC standard error; GH order-halving estimate
};

using PhaseSpaceFn = std::function<Complex(const CVector&)>;

/// integral of f(a) prod_i d^2 a_i / pi. Gauss-Hermite supports up to two
/// modes (4 real dimensions), Monte-Carlo up to four modes.
IntegralResult integrate(const PhaseSpaceFn& f, const BasisPtr& basis,
                         const QuadratureSpec& spec);

/// Quadrature of a <> dW/da for a single-mode Gaussian state; the exact
/// value is -1 (the discrete delta on one mode), so the returned residual
/// is |result + 1|. The derivative is taken by central finite differences.
double verify_partial_integration(const GaussianWigner& g,
                                  const QuadratureSpec& spec =
                                      QuadratureSpec::gauss_hermite(60, 1.6));

enum class HeraldKind { Subtract, Add };

/// Independent reconstruction of the unnormalized heralded state on a
/// grid: second-order term of the transformed joint Wigner function by
/// Richardson-extrapolated finite differences in the coupling, multiplied
/// by the projector generating function of the idler/tap beam, integrated
/// over it by quadrature, and differentiated in J at 0. Single mode each
/// for signal and detector beam. Throws NumericalError if the Richardson
/// step-size check fails.
ReducedWignerGrid herald_oracle(HeraldKind kind, const GaussianWigner& input,
                                const DetectorKernel& det,
                                const std::optional<WeakBogoliubov>& wb,
                                const std::vector<GridAxis>& axes,
                                const QuadratureSpec& beta_spec =
                                    QuadratureSpec::gauss_hermite(30),
                                double fd_step = 1e-3);

} // namespace hwig

#endif
