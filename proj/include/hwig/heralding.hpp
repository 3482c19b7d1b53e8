#ifndef HWIG_HERALDING_HPP
#define HWIG_HERALDING_HPP

#include <variant>
#include <vector>

#include "hwig/states.hpp"
#include "hwig/transforms.hpp"

namespace hwig {

/// Single-mode number-resolving detector: rank-1 kernel D = M M* with a
/// unit-norm detector mode M, tr D = 1. Multimode kernels are rejected by
/// construction.
class DetectorKernel {
public:
    explicit DetectorKernel(FieldVector mode);

    const FieldVector& mode() const { return mode_; }
    Kernel d() const;

private:
    FieldVector mode_;
};

using ProjectorMoment = std::variant<Complex, Kernel>;

/// Moment integrals M_{m,n} of the projector generating function against
/// the vacuum: M_{0,0} = 1, M_{1,1} = 1/2 - (1-J) D / 4,
/// M_{2,0} = M_{0,2} = 0; odd m+n vanish. m+n > 2 (beyond single-photon
/// heralding) is unsupported.
ProjectorMoment projector_moments(const DetectorKernel& det, double j, int m,
                                  int n);

/// Heralded state: normalized polynomial Gaussian, the normalization
/// constant N (trace of the raw conditioned state is 1/N), and the
/// orthonormalized transformed detector modes that carry the polynomial.
struct HeraldedState {
    PolyGaussian state;
    double norm_constant;
    std::vector<FieldVector> subspace;
};

/// Trace of the raw single-photon-subtracted state,
/// 1/N = tr{D<>M11} - tr{D}/2, from the input's second moments.
/// For a squeezed vacuum this equals M*<>E<>M / 2 with E = A - 1.
double normalize_subtract(const GaussianWigner& w_in,
                          const DetectorKernel& det);

/// Heralded single-photon subtraction. Applies the subtraction map to the
/// Gaussian analytically (derivatives of a Gaussian are polynomials times
/// the Gaussian) and normalizes. Throws HeraldImpossibleError when the
/// heralding probability vanishes (e.g. vacuum input).
HeraldedState subtract_photon(const GaussianWigner& w_in,
                              const DetectorKernel& det);

/// Trace of the raw single-photon-added state,
/// 1/N = M_V*<>M11<>M_V + tr{D<>F}, with M_V = V<>M*.
double normalize_add(const GaussianWigner& w_in, const WeakBogoliubov& wb,
                     const DetectorKernel& det);

/// Heralded single-photon addition via weak stimulated down-conversion
/// with detection in the idler beam.
HeraldedState add_photon(const GaussianWigner& w_in, const WeakBogoliubov& wb,
                         const DetectorKernel& det);

/// Heralding probability estimate: the dropped coupling factor restored,
/// P = coupling^2 / N with coupling = zeta (subtraction) or xi (addition).
double success_probability(const HeraldedState& h, double coupling);

/// Value of the J-parametrized generating function of the subtracted
/// state at alpha; affine in J by construction of the heralding model.
double subtract_generating_value(const GaussianWigner& w_in,
                                 const DetectorKernel& det, double j,
                                 const FieldVector& alpha);

/// Same for photon addition.
double add_generating_value(const GaussianWigner& w_in,
                            const WeakBogoliubov& wb,
                            const DetectorKernel& det, double j,
                            const FieldVector& alpha);

} // namespace hwig

#endif
