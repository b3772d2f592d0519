#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "lrel/lrel.hpp"

namespace lrel::testing {

/// Seeded source of random complex matrices, subspaces and relations.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Complex complex_normal() {
    std::normal_distribution<double> nd(0.0, 1.0);
    const double re = nd(rng_);
    const double im = nd(rng_);
    return {re, im};
  }

  Matrix matrix(Index rows, Index cols) {
    Matrix m(rows, cols);
    for (Index j = 0; j < cols; ++j) {
      for (Index i = 0; i < rows; ++i) m(i, j) = complex_normal();
    }
    return m;
  }

  Matrix unitary(Index n) {
    if (n == 0) return Matrix(0, 0);
    Eigen::HouseholderQR<Matrix> qr(matrix(n, n));
    Matrix q = qr.householderQ();
    // Fix phases so the distribution is Haar.
    const Matrix r = qr.matrixQR();
    for (Index j = 0; j < n; ++j) {
      const Complex d = r(j, j);
      if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
    }
    return q;
  }

  Matrix hermitian(Index n) {
    const Matrix m = matrix(n, n);
    return 0.5 * (m + m.adjoint());
  }

  /// Positive semidefinite of the given rank.
  Matrix psd(Index n, Index rank) {
    const Matrix m = matrix(n, rank);
    return m * m.adjoint();
  }

  /// Matrix with spectral norm at most `bound`.
  Matrix contraction_matrix(Index n, double bound) {
    if (n == 0) return Matrix(0, 0);
    const Matrix m = matrix(n, n);
    Eigen::JacobiSVD<Matrix> svd(m);
    return m * (bound * uniform(0.2, 1.0) / svd.singularValues()(0));
  }

  Subspace subspace(Index d, Index r) {
    if (r == 0) return Subspace(d);
    return Subspace::from_orthonormal(unitary(d).leftCols(r));
  }

  Subspace subspace(Index d) { return subspace(d, uniform_int(0, static_cast<int>(d))); }

  Complex unit_phase() {
    const double t = uniform(0.0, 2.0 * M_PI);
    return {std::cos(t), std::sin(t)};
  }

  /// Arbitrary relation: a random subspace of C^{2n}, or a structured one
  /// (operator, partial operator, with a multivalued part).
  Relation relation(Index n) {
    switch (uniform_int(0, 3)) {
      case 0:
        return Relation(subspace(2 * n));
      case 1:
        return from_operator(matrix(n, n));
      case 2:
        return restrict_domain(from_operator(matrix(n, n)), subspace(n));
      default: {
        const Subspace mulpart = subspace(n, uniform_int(1, static_cast<int>(n)));
        const Subspace rest = complement(mulpart);
        const Relation op = restrict_domain(from_operator(matrix(n, n)), rest);
        return graph_sum(op, multivalued_on(mulpart));
      }
    }
  }

  /// Selfadjoint relation: Q (H (+) {0} x C^k) Q^H.
  Relation selfadjoint(Index n) {
    const Index k = uniform_int(0, static_cast<int>(n));
    return block_conjugated(n, k, [&](Index m) { return hermitian(m); }, true);
  }

  /// Maximal dissipative relation, possibly multivalued.
  Relation maximal_dissipative(Index n) {
    const Index k = coin(0.3) ? uniform_int(1, static_cast<int>(n)) : 0;
    return block_conjugated(
        n, k, [&](Index m) { return Matrix(hermitian(m) + Complex(0, 1) * psd(m, uniform_int(0, m))); },
        true);
  }

  /// Dissipative relation; half the time a domain restriction of a maximal one.
  Relation dissipative(Index n) {
    const Relation l = maximal_dissipative(n);
    if (coin()) return l;
    return restrict_domain(l, subspace(n));
  }

  /// Symmetric relation; half the time selfadjoint.
  Relation symmetric(Index n) {
    const Relation a = selfadjoint(n);
    if (coin()) return a;
    return restrict_domain(a, subspace(n));
  }

  /// Closed contraction: a strict or non-strict contraction matrix, possibly
  /// restricted to a subspace.
  Relation contraction(Index n) {
    const Relation v = from_operator(contraction_matrix(n, coin() ? 1.0 : 0.95));
    if (coin()) return v;
    return restrict_domain(v, subspace(n));
  }

  Relation isometry(Index n) {
    const Relation v = from_operator(unitary(n));
    if (coin()) return v;
    return restrict_domain(v, subspace(n));
  }

  /// Relation with a subspace K that reduces it, built as Q (T1 (+) T2) Q^H.
  struct ReducingPair {
    Relation t;
    Subspace k;
  };

  ReducingPair reducing_pair(Index n) {
    const Index k = uniform_int(0, static_cast<int>(n));
    const Relation t1 = relation_sized(k);
    const Relation t2 = relation_sized(n - k);
    const Matrix q = unitary(n);
    const Subspace kspace = Subspace::from_orthonormal(q.leftCols(k));
    const Subspace kperp = Subspace::from_orthonormal(q.rightCols(n - k));
    Relation t(n);
    if (k > 0) t = embed(t1, kspace);
    if (n - k > 0) t = graph_sum(t, embed(t2, kperp));
    return {t, kspace};
  }

 private:
  Relation relation_sized(Index m) {
    if (m == 0) return Relation(0);
    return relation(m);
  }

  template <typename Block>
  Relation block_conjugated(Index n, Index mul_dim, Block block, bool conjugate_it) {
    const Index m = n - mul_dim;
    Matrix f = Matrix::Zero(n, n);
    Matrix g = Matrix::Zero(n, n);
    if (m > 0) {
      f.topLeftCorner(m, m) = Matrix::Identity(m, m);
      g.topLeftCorner(m, m) = block(m);
    }
    if (mul_dim > 0) g.bottomRightCorner(mul_dim, mul_dim) = Matrix::Identity(mul_dim, mul_dim);
    Relation t = from_pairs(f, g);
    if (conjugate_it) t = conjugate(t, unitary(n));
    return t;
  }

  std::mt19937_64 rng_;
};

}  // namespace lrel::testing
