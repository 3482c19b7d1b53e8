#include "hwig/states.hpp"

#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/LU>

namespace hwig {

namespace {

constexpr double kShapeTol = 1e-12;

void require_shapes(const Kernel& a, const Kernel& b) {
    if (!a.is_hermitian(kShapeTol)) {
        throw InvalidPairError("Gaussian kernel A is not Hermitian");
    }
    if (!b.is_symmetric(kShapeTol)) {
        throw InvalidPairError("Gaussian kernel B is not symmetric");
    }
}

// Real quadratic form of exp[-2 d*<>A<>d - d*<>B<>d* - d<>B*<>d] in
// z = (x; y) coordinates, d = x + i y:
//   Sxx = 2(AR + BR), Syy = 2(AR - BR), Sxy = 2(BI - AI), Syx = Sxy^T.
RMatrix quadratic_form(const CMatrix& a, const CMatrix& b) {
    const Eigen::Index n = a.rows();
    const RMatrix ar = a.real(), ai = a.imag();
    const RMatrix br = b.real(), bi = b.imag();
    RMatrix s(2 * n, 2 * n);
    s.topLeftCorner(n, n) = 2.0 * (ar + br);
    s.bottomRightCorner(n, n) = 2.0 * (ar - br);
    s.topRightCorner(n, n) = 2.0 * (bi - ai);
    s.bottomLeftCorner(n, n) = s.topRightCorner(n, n).transpose();
    return s;
}

double log_det_spd(const RMatrix& s) {
    Eigen::LLT<RMatrix> llt(s);
    if (llt.info() != Eigen::Success) {
        throw DomainError("Gaussian quadratic form is not positive definite");
    }
    return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

} // namespace

GaussianWigner::GaussianWigner(Kernel a, Kernel b, FieldVector mean,
                               double log_prefactor)
    : a_(std::move(a)), b_(std::move(b)), mean_(std::move(mean)),
      log_prefactor_(log_prefactor) {}

GaussianWigner GaussianWigner::make(Kernel a, Kernel b, FieldVector mean) {
    require_same_basis(a.basis(), b.basis(), "GaussianWigner");
    require_same_basis(a.basis(), mean.basis(), "GaussianWigner");
    require_shapes(a, b);
    const double log_pref =
        0.5 * log_det_spd(quadratic_form(a.entries(), b.entries()));
    return GaussianWigner(std::move(a), std::move(b), std::move(mean), log_pref);
}

GaussianWigner GaussianWigner::make_with_log_prefactor(Kernel a, Kernel b,
                                                       FieldVector mean,
                                                       double log_prefactor) {
    require_same_basis(a.basis(), b.basis(), "GaussianWigner");
    require_same_basis(a.basis(), mean.basis(), "GaussianWigner");
    require_shapes(a, b);
    log_det_spd(quadratic_form(a.entries(), b.entries())); // integrability
    return GaussianWigner(std::move(a), std::move(b), std::move(mean),
                          log_prefactor);
}

RMatrix GaussianWigner::real_quadratic_form() const {
    return quadratic_form(a_.entries(), b_.entries());
}

RMatrix GaussianWigner::real_covariance() const {
    const RMatrix s = real_quadratic_form();
    Eigen::LLT<RMatrix> llt(s);
    if (llt.info() != Eigen::Success) {
        throw DomainError("Gaussian quadratic form is not positive definite");
    }
    const Eigen::Index n2 = s.rows();
    return 0.5 * llt.solve(RMatrix::Identity(n2, n2));
}

PolyGaussian PolyGaussian::constant(GaussianWigner base, double c) {
    const BasisPtr basis = base.basis();
    return PolyGaussian{std::move(base), c, zero_vector(basis),
                        zero_kernel(basis), zero_kernel(basis)};
}

ThermalSpec::ThermalSpec(double tau_in, FieldVector theta_in)
    : tau(tau_in), theta(std::move(theta_in)) {
    if (tau < 0.0) {
        throw DomainError("thermal mean photon number tau must be >= 0");
    }
    const double n = theta.norm();
    if (n < 1e-14) {
        throw DomainError("thermal mode Theta must be nonzero");
    }
    if (std::abs(n - 1.0) > 1e-12) {
        theta = FieldVector(theta.basis(), theta.amps() / n);
    }
}

Kernel ThermalSpec::kernel() const {
    const CMatrix tt = theta.amps() * theta.amps().adjoint();
    const Eigen::Index n = tt.rows();
    return Kernel(theta.basis(),
                  CMatrix::Identity(n, n) - (tau / (1.0 + tau)) * tt);
}

GaussianWigner make_vacuum(const BasisPtr& basis) {
    return GaussianWigner::make(identity(basis), zero_kernel(basis),
                                zero_vector(basis));
}

GaussianWigner make_coherent(const BasisPtr& basis, const FieldVector& xi) {
    require_same_basis(basis, xi.basis(), "make_coherent");
    return GaussianWigner::make(identity(basis), zero_kernel(basis), xi);
}

GaussianWigner make_thermal(const ThermalSpec& spec) {
    const BasisPtr& basis = spec.theta.basis();
    return GaussianWigner::make(spec.kernel(), zero_kernel(basis),
                                zero_vector(basis));
}

GaussianWigner make_squeezed_vacuum(const Kernel& u, const Kernel& v) {
    require_same_basis(u.basis(), v.basis(), "make_squeezed_vacuum");
    const CMatrix a = u.entries() * u.entries() +
                      v.entries() * v.entries().conjugate();
    const CMatrix b = u.entries() * v.entries() +
                      v.entries() * u.entries().conjugate();
    Kernel ka(u.basis(), a);
    Kernel kb(u.basis(), b);
    if (!ka.is_hermitian(kShapeTol) || !kb.is_symmetric(kShapeTol)) {
        throw InvalidPairError("U, V do not form a valid Bogoliubov pair");
    }
    return GaussianWigner::make(std::move(ka), std::move(kb),
                                zero_vector(u.basis()));
}

double purity_check(const GaussianWigner& g) {
    const CMatrix& a = g.a().entries();
    const CMatrix& b = g.b().entries();
    Eigen::FullPivLU<CMatrix> lu(a);
    if (!lu.isInvertible()) {
        throw DomainError("purity_check: kernel A is singular");
    }
    const CMatrix a_inv = lu.inverse();
    // A*^-1 = conj(A^-1) and A Hermitian, so conj(A_inv) = A_inv^T.
    const CMatrix residual =
        a - b * a_inv.conjugate() * b.conjugate() - a_inv;
    return residual.cwiseAbs().maxCoeff();
}

SecondMoments mgf_moment2(const GaussianWigner& g) {
    const Eigen::Index n = g.n_modes();
    const RMatrix c = g.real_covariance();
    const RMatrix cxx = c.topLeftCorner(n, n);
    const RMatrix cxy = c.topRightCorner(n, n);
    const RMatrix cyx = c.bottomLeftCorner(n, n);
    const RMatrix cyy = c.bottomRightCorner(n, n);

    const Complex i1(0.0, 1.0);
    CMatrix m11 = (cxx + cyy).cast<Complex>() + i1 * (cyx - cxy).cast<Complex>();
    CMatrix m20 = (cxx - cyy).cast<Complex>() + i1 * (cxy + cyx).cast<Complex>();

    const CVector& mu = g.mean().amps();
    m11 += mu * mu.adjoint();
    m20 += mu * mu.transpose();
    return SecondMoments{Kernel(g.basis(), std::move(m11)),
                         Kernel(g.basis(), std::move(m20))};
}

namespace {

double exponent(const GaussianWigner& g, const CVector& alpha) {
    const CVector d = alpha - g.mean().amps();
    const double quad = (d.dot(g.a().entries() * d)).real();
    const double anom = (d.dot(g.b().entries() * d.conjugate())).real();
    return 2.0 * quad + 2.0 * anom;
}

} // namespace

double eval_gaussian(const GaussianWigner& g, const FieldVector& alpha) {
    require_same_basis(g.basis(), alpha.basis(), "eval_gaussian");
    return std::exp(g.log_prefactor() - exponent(g, alpha.amps()));
}

Complex poly_value(const PolyGaussian& p, const FieldVector& alpha) {
    require_same_basis(p.base.basis(), alpha.basis(), "poly_value");
    const CVector& a = alpha.amps();
    const Complex lin = p.lin.amps().dot(a);
    const Complex quad = a.dot(p.quad.entries() * a);
    const Complex anom = a.dot(p.anom.entries() * a.conjugate());
    return Complex(p.c, 0.0) + lin + std::conj(lin) + quad + anom +
           std::conj(anom);
}

double eval_polygauss(const PolyGaussian& p, const FieldVector& alpha) {
    return poly_value(p, alpha).real() * eval_gaussian(p.base, alpha);
}

} // namespace hwig
