#ifndef HWIG_STATES_HPP
#define HWIG_STATES_HPP

#include "hwig/mode_algebra.hpp"

namespace hwig {

/// Gaussian Wigner function over N modes:
///
///   W(a) = exp(log_prefactor) *
///          exp[-2 (a-m)*<>A<>(a-m) - (a-m)*<>B<>(a-m)* - (a-m)<>B*<>(a-m)]
///
/// with A Hermitian and B symmetric. The divergent functional-measure
/// constant is replaced by a finite prefactor under the fixed measure
/// prod_i d^2 a_i / pi; a normalized state integrates to 1 and a pure
/// N-mode Gaussian has prefactor 2^N.
class GaussianWigner {
public:
    /// Normalized Gaussian (prefactor sqrt(det Sigma) of the real
    /// quadratic form). Throws InvalidPairError if A is not Hermitian or
    /// B not symmetric, DomainError if the quadratic form is not positive
    /// definite (not integrable).
    static GaussianWigner make(Kernel a, Kernel b, FieldVector mean);

    /// Same shape with an explicit prefactor (used by marginals).
    static GaussianWigner make_with_log_prefactor(Kernel a, Kernel b,
                                                  FieldVector mean,
                                                  double log_prefactor);

    const BasisPtr& basis() const { return a_.basis(); }
    int n_modes() const { return a_.size(); }
    const Kernel& a() const { return a_; }
    const Kernel& b() const { return b_; }
    const FieldVector& mean() const { return mean_; }
    double log_prefactor() const { return log_prefactor_; }

    /// Real 2N x 2N quadratic form Sigma with E = z^T Sigma z,
    /// z = (x; y), a = x + i y.
    RMatrix real_quadratic_form() const;

    /// Real covariance C = <z z^T> = Sigma^{-1} / 2 of the normalized shape.
    RMatrix real_covariance() const;

private:
    GaussianWigner(Kernel a, Kernel b, FieldVector mean, double log_prefactor);

    Kernel a_;
    Kernel b_;
    FieldVector mean_;
    double log_prefactor_;
};

/// Degree-2 Hermitian polynomial prefactor times a Gaussian:
///
///   [ c + (lin*<>a + h.c.) + a*<>quad<>a + (a*<>anom<>a* + h.c.) ] * base(a)
///
/// quad Hermitian, anom symmetric, so the prefactor is real for all a.
/// Every heralded state produced here has this shape.
struct PolyGaussian {
    GaussianWigner base;
    double c = 0.0;
    FieldVector lin;
    Kernel quad;
    Kernel anom;

    static PolyGaussian constant(GaussianWigner base, double c);
};

/// Single-mode thermal state parameters: kernel
/// T = (1 + tau Theta Theta*)^{-1} = 1 - tau/(1+tau) Theta Theta*,
/// det T = (1+tau)^{-1}.
struct ThermalSpec {
    double tau;
    FieldVector theta;

    ThermalSpec(double tau, FieldVector theta);

    Kernel kernel() const;
};

GaussianWigner make_vacuum(const BasisPtr& basis);
GaussianWigner make_coherent(const BasisPtr& basis, const FieldVector& xi);
GaussianWigner make_thermal(const ThermalSpec& spec);

/// Squeezed vacuum from a Bogoliubov pair via A = U<>U + V<>V* and
/// B = U<>V + V<>U*. Throws InvalidPairError when the relations produce a
/// non-Hermitian A or non-symmetric B.
GaussianWigner make_squeezed_vacuum(const Kernel& u, const Kernel& v);

/// Max-norm residual of the purity identity A - B<>A*^-1<>B* = A^-1;
/// vanishes iff the Gaussian is pure.
double purity_check(const GaussianWigner& g);

struct SecondMoments {
    Kernel m11; // m11(i, j) = <a_i a_j^*>, mean contribution included
    Kernel m20; // m20(i, j) = <a_i a_j>
};

/// Second-moment kernels from the state's moment generating functional.
/// Closed forms: squeezed vacuum M11 = A/2, M20 = -A^-1<>B<>A*/2;
/// coherent M11 = xi xi* + 1/2, M20 = xi xi; thermal M11 = T^-1/2, M20 = 0.
SecondMoments mgf_moment2(const GaussianWigner& g);

double eval_gaussian(const GaussianWigner& g, const FieldVector& alpha);
double eval_polygauss(const PolyGaussian& p, const FieldVector& alpha);

/// Complex polynomial value before the real part is taken; its imaginary
/// part vanishes for Hermitian-consistent coefficients.
Complex poly_value(const PolyGaussian& p, const FieldVector& alpha);

} // namespace hwig

#endif
