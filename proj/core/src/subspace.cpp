#include "lrel/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace lrel {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionError(std::string(op) + ": ambient dimensions differ (" +
                         std::to_string(a.ambient_dim()) + " vs " +
                         std::to_string(b.ambient_dim()) + ")");
  }
}

Index count_above(const Eigen::VectorXd& s, double threshold) {
  Index r = 0;
  while (r < s.size() && s(r) > threshold) ++r;
  return r;
}

struct SvdOut {
  Eigen::VectorXd s;
  Matrix u;
  Matrix v;
  const Eigen::VectorXd& singularValues() const { return s; }
  const Matrix& matrixU() const { return u; }
  const Matrix& matrixV() const { return v; }
};

template <typename Solver>
SvdOut unpack(const Solver& svd, unsigned options) {
  SvdOut out{svd.singularValues(), Matrix(), Matrix()};
  if (options & (Eigen::ComputeThinU | Eigen::ComputeFullU)) out.u = svd.matrixU();
  if (options & (Eigen::ComputeThinV | Eigen::ComputeFullV)) out.v = svd.matrixV();
  return out;
}

// Columns [first, first + count) of a singular basis that a caller uses.
struct Used {
  Index first = 0;
  Index count = 0;
};

// The squared singular values must add up to the squared Frobenius norm, the
// used columns must be orthonormal and m * v_j (or m^H * u_j) must have norm
// s_j, zero past the diagonal.
bool consistent(const Matrix& m, const SvdOut& r, const Used& used) {
  if (!r.s.allFinite()) return false;
  const double fro2 = m.squaredNorm();
  if (std::abs(fro2 - r.s.squaredNorm()) > 1e-10 * std::max(fro2, 1.0)) return false;
  const bool left = r.u.size() > 0;
  const Matrix& basis = left ? r.u : r.v;
  if (basis.size() == 0 || used.count == 0) return true;
  const auto cols = basis.middleCols(used.first, used.count);
  if (!cols.allFinite()) return false;
  if ((cols.adjoint() * cols - Matrix::Identity(used.count, used.count)).cwiseAbs().maxCoeff() > 1e-10) {
    return false;
  }
  const double smax = r.s.size() > 0 ? r.s(0) : 0.0;
  const double tol = 1e-11 * std::max(smax, 1.0) * std::sqrt(static_cast<double>(m.rows() + m.cols()));
  const Eigen::VectorXd norms =
      (left ? Matrix(m.adjoint() * cols) : Matrix(m * cols)).colwise().norm().transpose();
  for (Index j = 0; j < used.count; ++j) {
    const Index k = used.first + j;
    const double expected = k < r.s.size() ? r.s(k) : 0.0;
    if (std::abs(norms(j) - expected) > tol) return false;
  }
  return true;
}

// BDCSVD in Eigen 3.4 occasionally returns NaN, wrong singular values or a
// wrong basis when many singular values deflate to zero; Jacobi is the
// fallback. `pick` maps the
// singular values to the columns the caller will read.
template <typename Pick>
SvdOut make_svd(const Matrix& m, unsigned options, Pick pick) {
  SvdOut out = unpack(Eigen::BDCSVD<Matrix>(m, options), options);
  if (out.s.allFinite() && consistent(m, out, pick(out.s))) return out;
  return unpack(Eigen::JacobiSVD<Matrix>(m, options), options);
}

// Tall matrices are reduced to their square triangular factor first; the
// singular values and right singular vectors are unchanged.
struct Reduced {
  Matrix q;  // thin orthonormal factor, empty when no reduction happened
  Matrix r;
};

Reduced reduce_tall(const Matrix& m) {
  const Index k = m.cols();
  if (m.rows() <= 2 * k) return {Matrix(), m};
  Eigen::HouseholderQR<Matrix> qr(m);
  Reduced out;
  out.r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  out.q = qr.householderQ() * Matrix::Identity(m.rows(), k);
  return out;
}

// Left singular vectors for the leading `rank` singular values.
Subspace leading_left(const Matrix& m, double rel_tol, double floor) {
  const Index d = m.rows();
  const Reduced red = reduce_tall(m);
  const auto rank_of = [&](const Eigen::VectorXd& s) {
    return count_above(s, rel_tol * std::max(s(0), floor));
  };
  auto svd = make_svd(red.r, Eigen::ComputeThinU,
                      [&](const Eigen::VectorXd& s) { return Used{0, s(0) == 0.0 ? 0 : rank_of(s)}; });
  const double smax = svd.singularValues()(0);
  if (smax == 0.0) return Subspace(d);
  const Index r = rank_of(svd.singularValues());
  Matrix u = svd.matrixU().leftCols(r);
  if (red.q.size() > 0) u = red.q * u;
  return Subspace::from_orthonormal(std::move(u), 1e-6);
}

}  // namespace

Subspace::Subspace(Index ambient_dim) : ambient_dim_(ambient_dim), frame_(ambient_dim, 0) {
  if (ambient_dim < 0) throw DimensionError("Subspace: negative ambient dimension");
}

Subspace Subspace::full(Index ambient_dim) {
  Subspace s(ambient_dim);
  s.frame_ = Matrix::Identity(ambient_dim, ambient_dim);
  return s;
}

Subspace Subspace::from_orthonormal(Matrix frame, double tol) {
  const Index r = frame.cols();
  if (r > frame.rows()) {
    throw PreconditionError("Subspace: more frame columns than ambient dimension");
  }
  if (r > 0) {
    const Matrix defect = frame.adjoint() * frame - Matrix::Identity(r, r);
    if (defect.cwiseAbs().maxCoeff() > tol) {
      throw PreconditionError("Subspace: frame columns are not orthonormal");
    }
  }
  Subspace s(frame.rows());
  s.frame_ = std::move(frame);
  return s;
}

Subspace Subspace::coordinate_span(Index ambient_dim, Index first, Index last) {
  if (first < 0 || last >= ambient_dim) {
    throw DimensionError("coordinate_span: index outside the ambient space");
  }
  Subspace s(ambient_dim);
  if (last < first) return s;
  s.frame_ = Matrix::Zero(ambient_dim, last - first + 1);
  for (Index k = first; k <= last; ++k) s.frame_(k, k - first) = 1.0;
  return s;
}

Subspace orthonormalize(const Matrix& columns, const ToleranceConfig& cfg) {
  const Index d = columns.rows();
  if (columns.cols() == 0 || d == 0) return Subspace(d);
  if (!columns.allFinite()) throw std::invalid_argument("orthonormalize: non-finite entry");
  return leading_left(columns, cfg.rank_tol, 0.0);
}

Subspace orthonormalize(Index ambient_dim, std::span<const Vector> vectors,
                        const ToleranceConfig& cfg) {
  Matrix cols(ambient_dim, static_cast<Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != ambient_dim) {
      throw DimensionError("orthonormalize: vector " + std::to_string(j) + " has length " +
                           std::to_string(vectors[j].size()) + ", expected " +
                           std::to_string(ambient_dim));
    }
    cols.col(static_cast<Index>(j)) = vectors[j];
  }
  return orthonormalize(cols, cfg);
}

Subspace intersect(const Subspace& a, const Subspace& b, const ToleranceConfig& cfg) {
  require_same_ambient(a, b, "intersect");
  if (a.is_zero() || b.is_zero()) return Subspace(a.ambient_dim());
  if (b.is_full()) return a;
  if (a.is_full()) return b;
  // Directions of `a` whose sine of principal angle to `b` vanishes.
  const Matrix residual = a.frame() - b.frame() * (b.frame().adjoint() * a.frame());
  const Matrix coeffs = linalg::null_space(residual, cfg.rank_tol);
  if (coeffs.cols() == 0) return Subspace(a.ambient_dim());
  // Orthonormal frame times orthonormal coefficients.
  return Subspace::from_orthonormal(a.frame() * coeffs, 1e-6);
}

Subspace sum(const Subspace& a, const Subspace& b, const ToleranceConfig& cfg) {
  require_same_ambient(a, b, "sum");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Matrix cols(a.ambient_dim(), a.dim() + b.dim());
  cols << a.frame(), b.frame();
  return orthonormalize(cols, cfg);
}

Subspace complement(const Subspace& a) {
  const Index d = a.ambient_dim();
  if (a.is_zero()) return Subspace::full(d);
  if (a.is_full()) return Subspace(d);
  Eigen::HouseholderQR<Matrix> qr(a.frame());
  const Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  return Subspace::from_orthonormal(q.rightCols(d - a.dim()), 1e-6);
}

Vector project(const Subspace& a, const Vector& v) {
  if (v.size() != a.ambient_dim()) throw DimensionError("project: vector length mismatch");
  return a.frame() * (a.frame().adjoint() * v);
}

double gap(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "gap");
  // Projectors of different rank are at distance 1; for equal ranks
  // ||P_a - P_b|| = ||(I - P_b) P_a||, the sine of the largest principal angle.
  if (a.dim() != b.dim()) return 1.0;
  if (a.is_zero()) return 0.0;
  const Matrix r = a.frame() - b.frame() * (b.frame().adjoint() * a.frame());
  return std::min(1.0, linalg::spectral_norm(r));
}

bool contains(const Subspace& outer, const Subspace& inner, const ToleranceConfig& cfg) {
  require_same_ambient(outer, inner, "contains");
  if (inner.is_zero()) return true;
  const Matrix r = inner.frame() - outer.frame() * (outer.frame().adjoint() * inner.frame());
  return linalg::spectral_norm(r) < cfg.gap_tol;
}

bool equal(const Subspace& a, const Subspace& b, const ToleranceConfig& cfg) {
  return a.dim() == b.dim() && gap(a, b) < cfg.gap_tol;
}

bool direct_sum_check(const Subspace& a, const Subspace& b, const ToleranceConfig& cfg) {
  require_same_ambient(a, b, "direct_sum_check");
  if (a.is_zero() || b.is_zero()) return true;
  const double overlap = linalg::spectral_norm(a.frame().adjoint() * b.frame());
  return overlap < cfg.gap_tol && intersect(a, b, cfg).is_zero();
}

Subspace image(const Matrix& map, const Subspace& a, const ToleranceConfig& cfg) {
  if (map.cols() != a.ambient_dim()) throw DimensionError("image: map/subspace mismatch");
  if (a.is_zero()) return Subspace(map.rows());
  return orthonormalize(map * a.frame(), cfg);
}

namespace linalg {

Matrix null_space(const Matrix& m, double tol) {
  const Index r = m.cols();
  if (r == 0) return Matrix(0, 0);
  if (m.rows() == 0) return Matrix::Identity(r, r);
  const auto rank_of = [&](const Eigen::VectorXd& s) {
    return count_above(s, tol * std::max(s.size() > 0 ? s(0) : 0.0, 1.0));
  };
  auto svd = make_svd(reduce_tall(m).r, Eigen::ComputeFullV,
                      [&](const Eigen::VectorXd& s) { const Index k = rank_of(s); return Used{k, r - k}; });
  return svd.matrixV().rightCols(r - rank_of(svd.singularValues()));
}

Subspace range(const Matrix& m, double tol) {
  const Index d = m.rows();
  if (m.cols() == 0 || d == 0) return Subspace(d);
  if (!m.allFinite()) throw std::invalid_argument("range: non-finite entry");
  return leading_left(m, tol, 1.0);
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  auto svd = make_svd(reduce_tall(m).r, 0, [](const Eigen::VectorXd&) { return Used{}; });
  return svd.singularValues()(0);
}

double min_hermitian_eigenvalue(const Matrix& h) {
  if (h.size() == 0) return std::numeric_limits<double>::infinity();
  const Matrix herm = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double hermitian_abs_max(const Matrix& h) {
  if (h.size() == 0) return 0.0;
  const Matrix herm = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace linalg

}  // namespace lrel
