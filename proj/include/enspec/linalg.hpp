#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "enspec/numeric.hpp"
#include "enspec/rng.hpp"

namespace enspec {

/// Unit-norm amplitude vector over n qubits. Qubit 0 is the most
/// significant bit of the basis-state index, so an n-bit string read
/// left to right is the index in binary.
struct StateVector {
  int n = 0;
  Eigen::VectorXcd amplitudes;

  long long dim() const { return amplitudes.size(); }

  static StateVector basis(int n, std::uint64_t index) {
    if (n < 1) throw validation_error("StateVector: need at least one qubit");
    const long long d = 1LL << n;
    if (static_cast<long long>(index) >= d)
      throw validation_error("StateVector: basis index out of range");
    StateVector s;
    s.n = n;
    s.amplitudes = Eigen::VectorXcd::Zero(d);
    s.amplitudes[static_cast<long long>(index)] = 1.0;
    return s;
  }

  static StateVector from_amplitudes(int n, Eigen::VectorXcd a) {
    if (a.size() != (1LL << n))
      throw validation_error("StateVector: amplitude count is not 2^n");
    if (std::abs(a.squaredNorm() - 1.0) > numeric_policy().normalization_tol)
      throw validation_error("StateVector: amplitudes are not normalized");
    StateVector s;
    s.n = n;
    s.amplitudes = std::move(a);
    return s;
  }
};

/// Bit of qubit q in basis index z (qubit 0 = most significant bit).
inline int qubit_bit(std::uint64_t z, int q, int n) {
  return static_cast<int>((z >> (n - 1 - q)) & 1ULL);
}

/// Hermitian matrix with dense or coordinate-list storage, chosen by
/// dimension. Validated against its conjugate transpose on construction.
class HermitianOperator {
 public:
  HermitianOperator() = default;

  static HermitianOperator from_dense(Eigen::MatrixXcd m) {
    if (m.rows() != m.cols())
      throw validation_error("HermitianOperator: matrix is not square");
    const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (dev > numeric_policy().hermiticity_tol)
      throw validation_error("HermitianOperator: matrix is not Hermitian");
    HermitianOperator h;
    h.dim_ = m.rows();
    h.dense_ = std::move(m);
    h.is_dense_ = true;
    return h;
  }

  static HermitianOperator from_triplets(long long dim,
                                         const std::vector<Eigen::Triplet<cplx>>& entries) {
    Eigen::SparseMatrix<cplx> sp(dim, dim);
    sp.setFromTriplets(entries.begin(), entries.end());
    if (dim < numeric_policy().dense_dim_limit)
      return from_dense(Eigen::MatrixXcd(sp));
    Eigen::SparseMatrix<cplx> dev = sp - Eigen::SparseMatrix<cplx>(sp.adjoint());
    double worst = 0.0;
    for (int k = 0; k < dev.outerSize(); ++k)
      for (Eigen::SparseMatrix<cplx>::InnerIterator it(dev, k); it; ++it)
        worst = std::max(worst, std::abs(it.value()));
    if (worst > numeric_policy().hermiticity_tol)
      throw validation_error("HermitianOperator: matrix is not Hermitian");
    HermitianOperator h;
    h.dim_ = dim;
    h.sparse_ = std::move(sp);
    h.is_dense_ = false;
    return h;
  }

  static HermitianOperator zero(long long dim) {
    return from_dense(Eigen::MatrixXcd::Zero(dim, dim));
  }

  static HermitianOperator identity(long long dim) {
    return from_dense(Eigen::MatrixXcd::Identity(dim, dim));
  }

  long long dim() const { return dim_; }
  bool dense_stored() const { return is_dense_; }

  Eigen::MatrixXcd to_dense() const {
    if (is_dense_) return dense_;
    return Eigen::MatrixXcd(sparse_);
  }

  const Eigen::SparseMatrix<cplx>& sparse() const { return sparse_; }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const {
    if (v.size() != dim_)
      throw validation_error("HermitianOperator::apply: dimension mismatch");
    if (is_dense_) return dense_ * v;
    return sparse_ * v;
  }

  HermitianOperator operator+(const HermitianOperator& other) const {
    if (dim_ != other.dim_)
      throw validation_error("HermitianOperator: dimension mismatch in sum");
    if (is_dense_ && other.is_dense_) return from_dense(dense_ + other.dense_);
    HermitianOperator h;
    h.dim_ = dim_;
    h.is_dense_ = false;
    h.sparse_ = (is_dense_ ? Eigen::SparseMatrix<cplx>(dense_.sparseView()) : sparse_) +
                (other.is_dense_ ? Eigen::SparseMatrix<cplx>(other.dense_.sparseView())
                                 : other.sparse_);
    return h;
  }

  HermitianOperator scaled(double factor) const {
    HermitianOperator h(*this);
    if (is_dense_)
      h.dense_ *= factor;
    else
      h.sparse_ *= factor;
    return h;
  }

 private:
  long long dim_ = 0;
  bool is_dense_ = true;
  Eigen::MatrixXcd dense_;
  Eigen::SparseMatrix<cplx> sparse_;
};

/// Eigenvalues ascending, eigenvectors the matching orthonormal columns.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
};

inline SpectralDecomposition eigendecompose(const HermitianOperator& h) {
  if (h.dim() > numeric_policy().eig_dim_guard)
    throw resource_error("eigendecompose: dimension exceeds the desk-scale guard");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.to_dense());
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecompose: solver failed to converge");
  SpectralDecomposition d;
  d.eigenvalues = solver.eigenvalues();
  d.eigenvectors = solver.eigenvectors();
  return d;
}

/// Largest singular value of a - b. Hermitian differences take the
/// eigenvalue route; anything else (e.g. unitaries) falls back to SVD.
inline double operator_norm_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw validation_error("operator_norm_distance: dimension mismatch");
  Eigen::MatrixXcd diff = a - b;
  if ((diff - diff.adjoint()).cwiseAbs().maxCoeff() <= numeric_policy().hermiticity_tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(diff, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
  }
  return diff.bdcSvd().singularValues()(0);
}

inline double operator_norm_distance(const HermitianOperator& a, const HermitianOperator& b) {
  return operator_norm_distance(a.to_dense(), b.to_dense());
}

/// Probabilities over a finite outcome set: nonnegative, summing to one.
struct DiscreteDistribution {
  Eigen::VectorXd p;

  long long size() const { return p.size(); }

  static DiscreteDistribution from_vector(Eigen::VectorXd v) {
    for (long long i = 0; i < v.size(); ++i)
      if (v[i] < -numeric_policy().normalization_tol)
        throw validation_error("DiscreteDistribution: negative entry");
    if (std::abs(v.sum() - 1.0) > numeric_policy().normalization_tol)
      throw validation_error("DiscreteDistribution: probabilities do not sum to 1");
    DiscreteDistribution d;
    d.p = std::move(v);
    return d;
  }
};

/// Un-halved ell-1 distance, the convention the bounds are stated in.
inline double l1_distance(const DiscreteDistribution& a, const DiscreteDistribution& b) {
  if (a.size() != b.size())
    throw validation_error("l1_distance: support sizes differ");
  return (a.p - b.p).cwiseAbs().sum();
}

/// Half the ell-1 distance; display convention.
inline double total_variation(const DiscreteDistribution& a, const DiscreteDistribution& b) {
  return 0.5 * l1_distance(a, b);
}

/// A few lowest eigenvalues of a large Hermitian operator via Lanczos with
/// full reorthogonalization. Returns ascending Ritz values (converged at the
/// spectrum ends; degenerate levels appear once, which suits gap queries).
inline std::vector<double> lanczos_lowest(
    const std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>& apply, long long dim,
    int count, int max_iter, std::uint64_t seed) {
  if (count < 1 || dim < 1) throw validation_error("lanczos_lowest: bad arguments");
  const int steps = static_cast<int>(std::min<long long>(dim, max_iter));
  Rng rng(seed);
  Eigen::VectorXcd v(dim);
  for (long long i = 0; i < dim; ++i)
    v[i] = cplx(rng.uniform() - 0.5, rng.uniform() - 0.5);
  v.normalize();

  std::vector<Eigen::VectorXcd> basis;
  basis.reserve(steps);
  std::vector<double> alpha, beta;
  basis.push_back(v);
  for (int j = 0; j < steps; ++j) {
    Eigen::VectorXcd w = apply(basis[j]);
    const double a = std::real(basis[j].dot(w));
    alpha.push_back(a);
    w -= a * basis[j];
    if (j > 0) w -= beta[j - 1] * basis[j - 1];
    for (const auto& q : basis) w -= q.dot(w) * q;
    const double b = w.norm();
    if (b < 1e-13 || j + 1 == steps) break;
    beta.push_back(b);
    basis.push_back(w / b);
  }

  const int m = static_cast<int>(alpha.size());
  Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    tri(i, i) = alpha[i];
    if (i + 1 < m) tri(i, i + 1) = tri(i + 1, i) = beta[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(tri, Eigen::EigenvaluesOnly);
  std::vector<double> ritz(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + m);
  if (static_cast<int>(ritz.size()) > count) ritz.resize(count);
  return ritz;
}

}  // namespace enspec
