#include "hwig/heralding.hpp"

#include <cmath>

namespace hwig {

namespace {

constexpr double kHeraldTol = 1e-12;

// Gradient kernel of the Gaussian exponent: dW/da_j = -conj(s)_j W and
// dW/da*_j = -s_j W with s = 2 (A d + B conj(d)), d = a - mean.
CVector gradient_s(const GaussianWigner& g, const CVector& alpha) {
    const CVector d = alpha - g.mean().amps();
    return 2.0 * (g.a().entries() * d + g.b().entries() * d.conjugate());
}

// Both heralded maps produce the polynomial
//   |e1*<>a + (e2*<>a)* - kappa|^2 + constant
// on top of the input Gaussian; they differ only in the transformed
// detector modes e1, e2 and the constants.
struct HeraldPolynomial {
    FieldVector e1;
    FieldVector e2;
    Complex kappa;
    double constant;
};

PolyGaussian assemble(const GaussianWigner& base, const HeraldPolynomial& hp) {
    const BasisPtr& basis = base.basis();
    const CVector& e1 = hp.e1.amps();
    const CVector& e2 = hp.e2.amps();

    const double c = std::norm(hp.kappa) + hp.constant;
    CVector lin = -(hp.kappa * e1 + std::conj(hp.kappa) * e2);
    CMatrix quad = e1 * e1.adjoint() + e2 * e2.adjoint();
    CMatrix anom = 0.5 * (e1 * e2.transpose() + e2 * e1.transpose());
    return PolyGaussian{base, c, FieldVector(basis, std::move(lin)),
                        Kernel(basis, std::move(quad)),
                        Kernel(basis, std::move(anom))};
}

HeraldPolynomial subtract_polynomial(const GaussianWigner& w_in,
                                     const DetectorKernel& det) {
    const CVector& m = det.mode().amps();
    const CMatrix& a = w_in.a().entries();
    const CMatrix& b = w_in.b().entries();
    const CVector& xi = w_in.mean().amps();

    CVector e1 = a * m - m; // (A - 1) M, A Hermitian
    CVector e2 = b * m.conjugate();
    const Complex kappa = m.dot(a * xi + b * xi.conjugate());
    const double eta_gen = (m.dot(a * m)).real() - 1.0; // M*<>(A-1)<>M
    return HeraldPolynomial{FieldVector(w_in.basis(), std::move(e1)),
                            FieldVector(w_in.basis(), std::move(e2)), kappa,
                            -0.5 * eta_gen};
}

HeraldPolynomial add_polynomial(const GaussianWigner& w_in,
                                const WeakBogoliubov& wb,
                                const DetectorKernel& det) {
    const CVector& m = det.mode().amps();
    const CMatrix& a = w_in.a().entries();
    const CMatrix& b = w_in.b().entries();
    const CVector& xi = w_in.mean().amps();

    const CVector mv = wb.v.entries() * m.conjugate(); // M_V = V<>M*
    CVector e1 = a * mv + mv; // (A + 1) M_V
    CVector e2 = b * mv.conjugate();
    const Complex kappa = mv.dot(a * xi + b * xi.conjugate());
    const double tr_df = (m.dot(wb.f.entries() * m)).real();
    const double constant = -0.5 * (mv.dot(a * mv)).real() - tr_df;
    return HeraldPolynomial{FieldVector(w_in.basis(), std::move(e1)),
                            FieldVector(w_in.basis(), std::move(e2)), kappa,
                            constant};
}

std::vector<FieldVector> polynomial_subspace(const HeraldPolynomial& hp) {
    const double n1 = hp.e1.norm();
    const double n2 = hp.e2.norm();
    const double scale = std::max({n1, n2, 1e-300});
    std::vector<FieldVector> raw;
    if (n1 > 1e-12 * scale) raw.push_back(hp.e1);
    if (n2 > 1e-12 * scale) raw.push_back(hp.e2);
    if (raw.empty()) return {};
    return gram_schmidt(raw).basis;
}

HeraldedState build_heralded(const GaussianWigner& w_in,
                             const HeraldPolynomial& hp, double norm_inverse,
                             const char* what) {
    if (norm_inverse < kHeraldTol) {
        throw HeraldImpossibleError(
            std::string(what) + ": heralding probability vanishes");
    }
    PolyGaussian pg = assemble(w_in, hp);
    const double inv = 1.0 / norm_inverse;
    pg.c *= inv;
    pg.lin = FieldVector(pg.lin.basis(), pg.lin.amps() * inv);
    pg.quad = Kernel(pg.quad.basis(), pg.quad.entries() * inv);
    pg.anom = Kernel(pg.anom.basis(), pg.anom.entries() * inv);
    return HeraldedState{std::move(pg), 1.0 / norm_inverse,
                         polynomial_subspace(hp)};
}

} // namespace

DetectorKernel::DetectorKernel(FieldVector mode) : mode_(std::move(mode)) {
    const double n = mode_.norm();
    if (n < 1e-14) {
        throw DomainError("detector mode must be nonzero");
    }
    if (std::abs(n - 1.0) > 1e-12) {
        mode_ = FieldVector(mode_.basis(), mode_.amps() / n);
    }
}

Kernel DetectorKernel::d() const { return outer(mode_, mode_); }

ProjectorMoment projector_moments(const DetectorKernel& det, double j, int m,
                                  int n) {
    if (j < 0.0) {
        throw DomainError("projector_moments requires J >= 0");
    }
    if (m < 0 || n < 0 || m > 2 || n > 2) {
        throw UnsupportedError("projector moments support m, n <= 2 only");
    }
    if (m + n > 2) {
        throw UnsupportedError(
            "projector moments beyond second order are out of scope");
    }
    const BasisPtr& basis = det.mode().basis();
    if (m == 0 && n == 0) {
        return ProjectorMoment(Complex(1.0, 0.0));
    }
    if ((m + n) % 2 == 1) {
        return ProjectorMoment(zero_kernel(basis));
    }
    if (m == 1 && n == 1) {
        const Eigen::Index nn = basis->n_modes();
        CMatrix k = 0.5 * CMatrix::Identity(nn, nn) -
                    0.25 * (1.0 - j) * det.d().entries();
        return ProjectorMoment(Kernel(basis, std::move(k)));
    }
    // M_{2,0} and M_{0,2}: no anomalous moments.
    return ProjectorMoment(zero_kernel(basis));
}

double normalize_subtract(const GaussianWigner& w_in,
                          const DetectorKernel& det) {
    require_same_basis(w_in.basis(), det.mode().basis(), "normalize_subtract");
    const SecondMoments mom = mgf_moment2(w_in);
    const CVector& m = det.mode().amps();
    const double value = (m.dot(mom.m11.entries() * m)).real() - 0.5;
    if (value < -kHeraldTol) {
        throw HeraldImpossibleError(
            "normalize_subtract: negative heralding trace");
    }
    return std::max(value, 0.0);
}

HeraldedState subtract_photon(const GaussianWigner& w_in,
                              const DetectorKernel& det) {
    require_same_basis(w_in.basis(), det.mode().basis(), "subtract_photon");
    const double norm_inverse = normalize_subtract(w_in, det);
    return build_heralded(w_in, subtract_polynomial(w_in, det), norm_inverse,
                          "subtract_photon");
}

double normalize_add(const GaussianWigner& w_in, const WeakBogoliubov& wb,
                     const DetectorKernel& det) {
    require_same_basis(w_in.basis(), wb.v.basis(), "normalize_add");
    require_same_basis(w_in.basis(), det.mode().basis(), "normalize_add");
    const SecondMoments mom = mgf_moment2(w_in);
    const CVector& m = det.mode().amps();
    const CVector mv = wb.v.entries() * m.conjugate();
    return (mv.dot(mom.m11.entries() * mv)).real() +
           (m.dot(wb.f.entries() * m)).real();
}

HeraldedState add_photon(const GaussianWigner& w_in, const WeakBogoliubov& wb,
                         const DetectorKernel& det) {
    const double norm_inverse = normalize_add(w_in, wb, det);
    return build_heralded(w_in, add_polynomial(w_in, wb, det), norm_inverse,
                          "add_photon");
}

double success_probability(const HeraldedState& h, double coupling) {
    return coupling * coupling / h.norm_constant;
}

double subtract_generating_value(const GaussianWigner& w_in,
                                 const DetectorKernel& det, double j,
                                 const FieldVector& alpha) {
    require_same_basis(w_in.basis(), alpha.basis(), "subtract_generating_value");
    const CVector& a = alpha.amps();
    const CVector s = gradient_s(w_in, a);
    const CVector& m = det.mode().amps();

    // J-independent part: tr{d2W/da*da}/2 + (dW/da)<>a/2 + a*<>(dW/da*)/2
    // + tr{1} W, all divided by W.
    const double g0 = 0.5 * s.squaredNorm() -
                      trace(w_in.a()).real() - (s.dot(a)).real() +
                      static_cast<double>(w_in.n_modes());

    const Complex ms = m.dot(s - 2.0 * a);
    const double eta_gen = (m.dot(w_in.a().entries() * m)).real() - 1.0;
    const double p = std::norm(ms) - 2.0 * eta_gen;

    return (g0 - 0.25 * (1.0 - j) * p) * eval_gaussian(w_in, alpha);
}

double add_generating_value(const GaussianWigner& w_in,
                            const WeakBogoliubov& wb,
                            const DetectorKernel& det, double j,
                            const FieldVector& alpha) {
    require_same_basis(w_in.basis(), alpha.basis(), "add_generating_value");
    const CVector& a = alpha.amps();
    const CVector s = gradient_s(w_in, a);
    const CMatrix& f = wb.f.entries();
    const CVector& m = det.mode().amps();

    // tr{F<>d2W/da*da} - (dW/da)<>F<>a - a*<>F<>(dW/da*) - 2 tr{F} W,
    // divided by W.
    const double g0 = (s.dot(f * s)).real() -
                      2.0 * (f * w_in.a().entries()).trace().real() +
                      2.0 * (s.dot(f * a)).real() - 2.0 * f.trace().real();

    const CVector mv = wb.v.entries() * m.conjugate();
    const Complex h = mv.dot(a + 0.5 * s);
    const double q = std::norm(h) - 0.5 * (mv.dot(w_in.a().entries() * mv)).real() -
                     (m.dot(f * m)).real();

    return (g0 - (1.0 - j) * q) * eval_gaussian(w_in, alpha);
}

} // namespace hwig
