#pragma once

#include <complex>
#include <span>

#include <Eigen/Dense>

#include "lrel/tolerance.hpp"

namespace lrel {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// A linear subspace of C^d held as an orthonormal frame (d x r).
///
/// Frames are not canonical: two Subspace values describe the same set when
/// their orthogonal projectors agree, which is what gap() and equal() test.
class Subspace {
 public:
  Subspace() = default;

  /// The zero subspace of C^d.
  explicit Subspace(Index ambient_dim);

  static Subspace zero(Index ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(Index ambient_dim);

  /// Wraps a frame that is already orthonormal. Throws PreconditionError if
  /// frame^H frame deviates from the identity by more than `tol` entrywise.
  static Subspace from_orthonormal(Matrix frame, double tol = 1e-8);

  /// span{e_first, ..., e_last} (0-based, inclusive) in C^d.
  static Subspace coordinate_span(Index ambient_dim, Index first, Index last);

  Index ambient_dim() const { return ambient_dim_; }
  Index dim() const { return frame_.cols(); }
  bool is_zero() const { return frame_.cols() == 0; }
  bool is_full() const { return frame_.cols() == ambient_dim_; }

  const Matrix& frame() const { return frame_; }
  Matrix projector() const { return frame_ * frame_.adjoint(); }

 private:
  Index ambient_dim_ = 0;
  Matrix frame_;
};

/// Span of the given columns. Singular values below
/// rank_tol * (largest singular value) are discarded.
Subspace orthonormalize(const Matrix& columns, const ToleranceConfig& cfg = {});

/// Span of a family of vectors; all vectors must share the ambient dimension.
Subspace orthonormalize(Index ambient_dim, std::span<const Vector> vectors,
                        const ToleranceConfig& cfg = {});

Subspace intersect(const Subspace& a, const Subspace& b, const ToleranceConfig& cfg = {});
Subspace sum(const Subspace& a, const Subspace& b, const ToleranceConfig& cfg = {});
Subspace complement(const Subspace& a);
Vector project(const Subspace& a, const Vector& v);

/// ||P_a - P_b|| in the spectral norm.
double gap(const Subspace& a, const Subspace& b);

/// True when `inner` is contained in `outer` up to gap_tol.
bool contains(const Subspace& outer, const Subspace& inner, const ToleranceConfig& cfg = {});

bool equal(const Subspace& a, const Subspace& b, const ToleranceConfig& cfg = {});

/// Orthogonality plus trivial intersection.
bool direct_sum_check(const Subspace& a, const Subspace& b, const ToleranceConfig& cfg = {});

/// Image of a subspace under a d' x d matrix.
Subspace image(const Matrix& map, const Subspace& a, const ToleranceConfig& cfg = {});

namespace linalg {

/// Orthonormal basis of the null space of `m`. A singular value counts as
/// zero when it is at most tol * max(largest singular value, 1); the floor of
/// 1 matches matrices built from orthonormal frames.
Matrix null_space(const Matrix& m, double tol);

/// Column span of `m` with the same floored threshold as null_space. Used for
/// blocks of orthonormal frames, where an all-noise block must map to {0}.
Subspace range(const Matrix& m, double tol);

double spectral_norm(const Matrix& m);

/// Smallest eigenvalue of the Hermitian part of a square matrix
/// (+infinity for an empty matrix).
double min_hermitian_eigenvalue(const Matrix& h);

/// max |eigenvalue| of the Hermitian part (0 for an empty matrix).
double hermitian_abs_max(const Matrix& h);

}  // namespace linalg

}  // namespace lrel
