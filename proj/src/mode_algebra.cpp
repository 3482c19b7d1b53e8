#include "hwig/mode_algebra.hpp"

#include <utility>

namespace hwig {

ModeBasis::ModeBasis(int n_modes) : n_modes_(n_modes) {
    if (n_modes < 1) {
        throw DomainError("ModeBasis requires n_modes >= 1");
    }
    labels_.reserve(n_modes);
    for (int i = 0; i < n_modes; ++i) {
        labels_.push_back("m" + std::to_string(i));
    }
}

ModeBasis::ModeBasis(int n_modes, std::vector<std::string> labels)
    : n_modes_(n_modes), labels_(std::move(labels)) {
    if (n_modes < 1) {
        throw DomainError("ModeBasis requires n_modes >= 1");
    }
    if (static_cast<int>(labels_.size()) != n_modes) {
        throw DimensionError("ModeBasis label count does not match n_modes");
    }
}

bool ModeBasis::compatible_with(const ModeBasis& other) const {
    return n_modes_ == other.n_modes_ && labels_ == other.labels_;
}

BasisPtr make_basis(int n_modes) {
    return std::make_shared<const ModeBasis>(n_modes);
}

BasisPtr make_basis(int n_modes, std::vector<std::string> labels) {
    return std::make_shared<const ModeBasis>(n_modes, std::move(labels));
}

void require_same_basis(const BasisPtr& a, const BasisPtr& b, const char* where) {
    if (a == b) {
        return;
    }
    if (!a || !b || !a->compatible_with(*b)) {
        throw DimensionError(std::string("basis mismatch in ") + where);
    }
}

FieldVector::FieldVector(BasisPtr basis, CVector amps)
    : basis_(std::move(basis)), amps_(std::move(amps)) {
    if (!basis_) {
        throw DimensionError("FieldVector requires a basis");
    }
    if (amps_.size() != basis_->n_modes()) {
        throw DimensionError("FieldVector length does not match basis");
    }
}

Kernel::Kernel(BasisPtr basis, CMatrix entries)
    : basis_(std::move(basis)), entries_(std::move(entries)) {
    if (!basis_) {
        throw DimensionError("Kernel requires a basis");
    }
    if (entries_.rows() != entries_.cols() ||
        entries_.rows() != basis_->n_modes()) {
        throw DimensionError("Kernel shape does not match basis");
    }
}

bool Kernel::is_hermitian(double tol) const {
    const double scale = entries_.cwiseAbs().maxCoeff();
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <=
           tol * std::max(1.0, scale);
}

bool Kernel::is_symmetric(double tol) const {
    const double scale = entries_.cwiseAbs().maxCoeff();
    return (entries_ - entries_.transpose()).cwiseAbs().maxCoeff() <=
           tol * std::max(1.0, scale);
}

Complex diamond_vv(const FieldVector& x, const FieldVector& y) {
    require_same_basis(x.basis(), y.basis(), "diamond_vv");
    return x.amps().dot(y.amps()); // Eigen dot conjugates the left argument
}

FieldVector diamond_kv(const Kernel& k, const FieldVector& y) {
    require_same_basis(k.basis(), y.basis(), "diamond_kv");
    return FieldVector(k.basis(), k.entries() * y.amps());
}

Kernel diamond_kk(const Kernel& k, const Kernel& l) {
    require_same_basis(k.basis(), l.basis(), "diamond_kk");
    return Kernel(k.basis(), k.entries() * l.entries());
}

Complex trace(const Kernel& k) { return k.entries().trace(); }

Kernel adjoint(const Kernel& k) {
    return Kernel(k.basis(), k.entries().adjoint());
}

Kernel outer(const FieldVector& x, const FieldVector& y) {
    require_same_basis(x.basis(), y.basis(), "outer");
    return Kernel(x.basis(), x.amps() * y.amps().adjoint());
}

Kernel identity(const BasisPtr& basis) {
    return Kernel(basis, CMatrix::Identity(basis->n_modes(), basis->n_modes()));
}

Kernel zero_kernel(const BasisPtr& basis) {
    return Kernel(basis, CMatrix::Zero(basis->n_modes(), basis->n_modes()));
}

FieldVector zero_vector(const BasisPtr& basis) {
    return FieldVector(basis, CVector::Zero(basis->n_modes()));
}

FieldVector basis_vector(const BasisPtr& basis, int index) {
    if (index < 0 || index >= basis->n_modes()) {
        throw DimensionError("basis_vector index out of range");
    }
    CVector v = CVector::Zero(basis->n_modes());
    v(index) = 1.0;
    return FieldVector(basis, std::move(v));
}

GramSchmidtResult gram_schmidt(const std::vector<FieldVector>& vs, double tol) {
    if (vs.empty()) {
        throw DimensionError("gram_schmidt requires a nonempty input set");
    }
    const BasisPtr& basis = vs.front().basis();
    double max_norm = 0.0;
    for (const auto& v : vs) {
        require_same_basis(basis, v.basis(), "gram_schmidt");
        max_norm = std::max(max_norm, v.norm());
    }
    const double drop = tol * std::max(1.0, max_norm);

    GramSchmidtResult result;
    result.coefficients = CMatrix::Zero(vs.size(), vs.size());
    std::vector<CVector> ortho;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        CVector residual = vs[i].amps();
        for (std::size_t j = 0; j < ortho.size(); ++j) {
            const Complex coeff = ortho[j].dot(residual);
            result.coefficients(i, j) = coeff;
            residual -= coeff * ortho[j];
        }
        // One re-orthogonalization pass keeps the overlap matrix at
        // round-off even for nearly dependent inputs.
        for (std::size_t j = 0; j < ortho.size(); ++j) {
            const Complex coeff = ortho[j].dot(residual);
            result.coefficients(i, j) += coeff;
            residual -= coeff * ortho[j];
        }
        const double n = residual.norm();
        if (n > drop) {
            residual /= n;
            result.coefficients(i, ortho.size()) = n;
            ortho.push_back(std::move(residual));
        }
    }

    result.coefficients.conservativeResize(Eigen::NoChange,
                                           static_cast<Eigen::Index>(ortho.size()));
    result.basis.reserve(ortho.size());
    for (auto& v : ortho) {
        result.basis.emplace_back(basis, std::move(v));
    }
    return result;
}

} // namespace hwig
