#ifndef HWIG_MODE_ALGEBRA_HPP
#define HWIG_MODE_ALGEBRA_HPP

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hwig/errors.hpp"

namespace hwig {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;

/// Finite orthonormal mode basis. Every kernel and field vector holds
/// coordinates in such a basis; the continuous-mode measure is absorbed
/// into the orthonormality convention, so contractions are plain matrix
/// products.
class ModeBasis {
public:
    explicit ModeBasis(int n_modes);
    ModeBasis(int n_modes, std::vector<std::string> labels);

    int n_modes() const { return n_modes_; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool compatible_with(const ModeBasis& other) const;

private:
    int n_modes_;
    std::vector<std::string> labels_;
};

using BasisPtr = std::shared_ptr<const ModeBasis>;

BasisPtr make_basis(int n_modes);
BasisPtr make_basis(int n_modes, std::vector<std::string> labels);

/// N complex amplitudes: the discretization of a field variable or a mode
/// function. Immutable after construction.
class FieldVector {
public:
    FieldVector(BasisPtr basis, CVector amps);

    const BasisPtr& basis() const { return basis_; }
    const CVector& amps() const { return amps_; }
    int size() const { return static_cast<int>(amps_.size()); }
    Complex operator[](int i) const { return amps_(i); }
    double norm() const { return amps_.norm(); }

private:
    BasisPtr basis_;
    CVector amps_;
};

/// N x N complex matrix standing for a two-point kernel K(k1, k2) in the
/// basis modes. Immutable after construction.
class Kernel {
public:
    Kernel(BasisPtr basis, CMatrix entries);

    const BasisPtr& basis() const { return basis_; }
    const CMatrix& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.rows()); }

    // Relative to the largest entry magnitude.
    bool is_hermitian(double tol = 1e-12) const;
    bool is_symmetric(double tol = 1e-12) const;

private:
    BasisPtr basis_;
    CMatrix entries_;
};

void require_same_basis(const BasisPtr& a, const BasisPtr& b, const char* where);

/// x*<>y: inner product with the left operand conjugated.
Complex diamond_vv(const FieldVector& x, const FieldVector& y);

/// K<>y: kernel acting on a field vector.
FieldVector diamond_kv(const Kernel& k, const FieldVector& y);

/// K<>L: kernel composition.
Kernel diamond_kk(const Kernel& k, const Kernel& l);

Complex trace(const Kernel& k);

/// Conjugate transpose.
Kernel adjoint(const Kernel& k);

/// Rank-1 kernel x y*^T (right operand conjugated).
Kernel outer(const FieldVector& x, const FieldVector& y);

/// The kernel 1 with 1<>a = a.
Kernel identity(const BasisPtr& basis);

Kernel zero_kernel(const BasisPtr& basis);
FieldVector zero_vector(const BasisPtr& basis);
FieldVector basis_vector(const BasisPtr& basis, int index);

struct GramSchmidtResult {
    // Orthonormal spanning set; zero-norm residuals are dropped.
    std::vector<FieldVector> basis;
    // coefficients(i, j): expansion of input i in basis vector j.
    CMatrix coefficients;
};

/// Modified Gram-Schmidt with relative drop tolerance. An all-zero input
/// set yields an empty basis.
GramSchmidtResult gram_schmidt(const std::vector<FieldVector>& vs,
                               double tol = 1e-12);

} // namespace hwig

#endif
