#include "hwig/transforms.hpp"

#include <cmath>

namespace hwig {

namespace {
constexpr double kShapeTol = 1e-12;
}

BeamsplitterSpec::BeamsplitterSpec(double zeta_in) : zeta(zeta_in) {
    if (zeta < 0.0 || zeta > 1.0) {
        throw DomainError("beamsplitter amplitude reflectivity must be in [0, 1]");
    }
}

std::pair<FieldVector, FieldVector>
beamsplitter_map(const BeamsplitterSpec& spec, const FieldVector& alpha,
                 const FieldVector& beta) {
    require_same_basis(alpha.basis(), beta.basis(), "beamsplitter_map");
    const double t = std::sqrt(1.0 - spec.zeta * spec.zeta);
    const Complex iz(0.0, spec.zeta);
    CVector a_out = t * alpha.amps() + iz * beta.amps();
    CVector b_out = t * beta.amps() + iz * alpha.amps();
    return {FieldVector(alpha.basis(), std::move(a_out)),
            FieldVector(alpha.basis(), std::move(b_out))};
}

WeakBogoliubov::WeakBogoliubov(Kernel v_in, Kernel f_in, double xi)
    : v(std::move(v_in)), f(std::move(f_in)), xi_strength(xi) {
    require_same_basis(v.basis(), f.basis(), "WeakBogoliubov");
    if (xi_strength < 0.0) {
        throw DomainError("squeezing strength xi must be >= 0");
    }
    if (!f.is_hermitian(kShapeTol)) {
        throw InvalidPairError("weak Bogoliubov kernel F is not Hermitian");
    }
    const CMatrix expected = 0.5 * v.entries() * v.entries().conjugate();
    const double scale = std::max(1.0, expected.cwiseAbs().maxCoeff());
    if ((f.entries() - expected).cwiseAbs().maxCoeff() > kShapeTol * scale) {
        throw InvalidPairError("weak Bogoliubov kernels violate F = V<>V*/2");
    }
}

WeakBogoliubov weak_bogoliubov_from_v(const Kernel& v, double xi_strength) {
    Kernel f(v.basis(), 0.5 * v.entries() * v.entries().conjugate());
    return WeakBogoliubov(v, std::move(f), xi_strength);
}

std::pair<FieldVector, FieldVector>
twin_beam_map(const WeakBogoliubov& wb, const FieldVector& alpha,
              const FieldVector& beta) {
    require_same_basis(wb.v.basis(), alpha.basis(), "twin_beam_map");
    require_same_basis(alpha.basis(), beta.basis(), "twin_beam_map");
    const double xi = wb.xi_strength;
    const CMatrix u = CMatrix::Identity(wb.v.size(), wb.v.size()) +
                      xi * xi * wb.f.entries();
    CVector a_out = u * alpha.amps() + xi * wb.v.entries() * beta.amps().conjugate();
    CVector b_out = u * beta.amps() + xi * wb.v.entries() * alpha.amps().conjugate();
    return {FieldVector(alpha.basis(), std::move(a_out)),
            FieldVector(alpha.basis(), std::move(b_out))};
}

std::pair<Kernel, Kernel> ab_from_uv(const Kernel& u, const Kernel& v) {
    require_same_basis(u.basis(), v.basis(), "ab_from_uv");
    Kernel a(u.basis(), u.entries() * u.entries() +
                            v.entries() * v.entries().conjugate());
    Kernel b(u.basis(), u.entries() * v.entries() +
                            v.entries() * u.entries().conjugate());
    if (!a.is_hermitian(kShapeTol)) {
        throw InvalidPairError("ab_from_uv produced a non-Hermitian A");
    }
    if (!b.is_symmetric(kShapeTol)) {
        throw InvalidPairError("ab_from_uv produced a non-symmetric B");
    }
    return {std::move(a), std::move(b)};
}

BogoliubovPair make_mode_squeezer(const BasisPtr& basis,
                                  const std::vector<SqueezeMode>& modes) {
    const Eigen::Index n = basis->n_modes();
    CMatrix u = CMatrix::Identity(n, n);
    CMatrix v = CMatrix::Zero(n, n);
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const SqueezeMode& sm = modes[i];
        require_same_basis(basis, sm.mode.basis(), "make_mode_squeezer");
        if (std::abs(sm.mode.norm() - 1.0) > 1e-10) {
            throw DomainError("squeeze mode must have unit norm");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (std::abs(diamond_vv(modes[j].mode, sm.mode)) > 1e-10) {
                throw DomainError("squeeze modes must be orthonormal");
            }
        }
        const CVector& p = sm.mode.amps();
        const Complex phase = std::exp(Complex(0.0, sm.phi));
        u += (std::cosh(sm.r) - 1.0) * (p * p.adjoint());
        v += phase * std::sinh(sm.r) * (p * p.transpose());
    }
    return BogoliubovPair{Kernel(basis, std::move(u)), Kernel(basis, std::move(v))};
}

} // namespace hwig
