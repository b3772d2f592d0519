#include "lrel/relation.hpp"

#include <cmath>
#include <string>

namespace lrel {

namespace {

void require_same_space(const Relation& t, const Relation& s, const char* op) {
  if (t.space_dim() != s.space_dim()) {
    throw DimensionError(std::string(op) + ": relations act on spaces of different dimension");
  }
}

void require_ambient(const Relation& t, const Subspace& k, const char* op) {
  if (k.ambient_dim() != t.space_dim()) {
    throw DimensionError(std::string(op) + ": subspace ambient dimension does not match");
  }
}

Relation relation_from_pairs_matrix(const Matrix& top, const Matrix& bottom,
                                    const ToleranceConfig& cfg) {
  Matrix stacked(top.rows() + bottom.rows(), top.cols());
  stacked << top, bottom;
  return Relation(linalg::range(stacked, cfg.rank_tol));
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

Subspace block_subspace(const Subspace& top, const Subspace& bottom) {
  return Subspace::from_orthonormal(block_diag(top.frame(), bottom.frame()));
}

}  // namespace

Relation::Relation(Index space_dim) : space_dim_(space_dim), graph_(2 * space_dim) {}

Relation::Relation(Subspace graph) : space_dim_(graph.ambient_dim() / 2), graph_(std::move(graph)) {
  if (graph_.ambient_dim() % 2 != 0) {
    throw DimensionError("Relation: graph ambient dimension must be even");
  }
}

Relation from_operator(const Matrix& m, const ToleranceConfig& cfg) {
  if (m.rows() != m.cols()) throw DimensionError("from_operator: matrix must be square");
  return relation_from_pairs_matrix(Matrix::Identity(m.rows(), m.cols()), m, cfg);
}

Relation from_pairs(const Matrix& f, const Matrix& g, const ToleranceConfig& cfg) {
  if (f.rows() != g.rows() || f.cols() != g.cols()) {
    throw DimensionError("from_pairs: f and g blocks differ in shape");
  }
  Matrix stacked(2 * f.rows(), f.cols());
  stacked << f, g;
  return Relation(orthonormalize(stacked, cfg));
}

Relation from_pairs(Index space_dim, std::span<const std::pair<Vector, Vector>> pairs,
                    const ToleranceConfig& cfg) {
  Matrix f(space_dim, static_cast<Index>(pairs.size()));
  Matrix g(space_dim, static_cast<Index>(pairs.size()));
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    const auto& [fj, gj] = pairs[j];
    if (fj.size() != space_dim || gj.size() != space_dim) {
      throw DimensionError("from_pairs: pair " + std::to_string(j) + " has wrong length");
    }
    f.col(static_cast<Index>(j)) = fj;
    g.col(static_cast<Index>(j)) = gj;
  }
  return from_pairs(f, g, cfg);
}

Relation zero_on(const Subspace& k) {
  return Relation(block_subspace(k, Subspace(k.ambient_dim())));
}

Relation multivalued_on(const Subspace& k) {
  return Relation(block_subspace(Subspace(k.ambient_dim()), k));
}

Subspace dom(const Relation& t, const ToleranceConfig& cfg) {
  return linalg::range(t.F(), cfg.rank_tol);
}

Subspace ran(const Relation& t, const ToleranceConfig& cfg) {
  return linalg::range(t.G(), cfg.rank_tol);
}

Subspace ker(const Relation& t, const ToleranceConfig& cfg) {
  const Matrix coeffs = linalg::null_space(t.G(), cfg.rank_tol);
  if (coeffs.cols() == 0) return Subspace(t.space_dim());
  return linalg::range(t.F() * coeffs, cfg.rank_tol);
}

Subspace mul(const Relation& t, const ToleranceConfig& cfg) {
  const Matrix coeffs = linalg::null_space(t.F(), cfg.rank_tol);
  if (coeffs.cols() == 0) return Subspace(t.space_dim());
  return linalg::range(t.G() * coeffs, cfg.rank_tol);
}

GraphParts graph_parts(const Relation& t, const ToleranceConfig& cfg) {
  return {dom(t, cfg), ran(t, cfg), ker(t, cfg), mul(t, cfg)};
}

bool is_operator(const Relation& t, const ToleranceConfig& cfg) { return mul(t, cfg).is_zero(); }

Relation add(const Relation& t, const Relation& s, const ToleranceConfig& cfg) {
  require_same_space(t, s, "add");
  const Index n = t.space_dim();
  // Work in C^{3n} with coordinates (f, g, h).
  const Matrix id = Matrix::Identity(n, n);
  Matrix t_lift = Matrix::Zero(3 * n, t.dim() + n);
  t_lift.block(0, 0, n, t.dim()) = t.F();
  t_lift.block(n, 0, n, t.dim()) = t.G();
  t_lift.block(2 * n, t.dim(), n, n) = id;
  Matrix s_lift = Matrix::Zero(3 * n, s.dim() + n);
  s_lift.block(0, 0, n, s.dim()) = s.F();
  s_lift.block(2 * n, 0, n, s.dim()) = s.G();
  s_lift.block(n, s.dim(), n, n) = id;
  const Subspace joint = intersect(Subspace::from_orthonormal(t_lift),
                                   Subspace::from_orthonormal(s_lift), cfg);
  const Matrix& w = joint.frame();
  return relation_from_pairs_matrix(w.topRows(n), w.middleRows(n, n) + w.bottomRows(n), cfg);
}

Relation scale(Complex z, const Relation& t, const ToleranceConfig& cfg) {
  return relation_from_pairs_matrix(t.F(), z * t.G(), cfg);
}

Relation compose(const Relation& s, const Relation& t, const ToleranceConfig& cfg) {
  require_same_space(t, s, "compose");
  const Index n = t.space_dim();
  // Coordinates (f, g, k): (f, g) in T and (g, k) in S.
  const Matrix id = Matrix::Identity(n, n);
  Matrix t_lift = Matrix::Zero(3 * n, t.dim() + n);
  t_lift.block(0, 0, n, t.dim()) = t.F();
  t_lift.block(n, 0, n, t.dim()) = t.G();
  t_lift.block(2 * n, t.dim(), n, n) = id;
  Matrix s_lift = Matrix::Zero(3 * n, n + s.dim());
  s_lift.block(0, 0, n, n) = id;
  s_lift.block(n, n, n, s.dim()) = s.F();
  s_lift.block(2 * n, n, n, s.dim()) = s.G();
  const Subspace joint = intersect(Subspace::from_orthonormal(t_lift),
                                   Subspace::from_orthonormal(s_lift), cfg);
  const Matrix& w = joint.frame();
  return relation_from_pairs_matrix(w.topRows(n), w.bottomRows(n), cfg);
}

Relation inverse(const Relation& t) {
  Matrix swapped(2 * t.space_dim(), t.dim());
  swapped << t.G(), t.F();
  return Relation(Subspace::from_orthonormal(std::move(swapped)));
}

Relation shift(const Relation& t, Complex z, const ToleranceConfig& cfg) {
  return relation_from_pairs_matrix(t.F(), t.G() - z * t.F(), cfg);
}

Relation adjoint(const Relation& t) {
  Matrix minus_inverse(2 * t.space_dim(), t.dim());
  minus_inverse << t.G(), -t.F();
  return Relation(complement(Subspace::from_orthonormal(std::move(minus_inverse))));
}

Relation restrict(const Relation& t, const Subspace& k, const ToleranceConfig& cfg) {
  require_ambient(t, k, "restrict");
  return Relation(intersect(t.graph(), block_subspace(k, k), cfg));
}

Relation restrict_domain(const Relation& t, const Subspace& k, const ToleranceConfig& cfg) {
  require_ambient(t, k, "restrict_domain");
  return Relation(
      intersect(t.graph(), block_subspace(k, Subspace::full(t.space_dim())), cfg));
}

Relation deficiency(const Relation& t, Complex z, const ToleranceConfig& cfg) {
  const Index n = t.space_dim();
  Matrix diag(2 * n, n);
  diag << Matrix::Identity(n, n), z * Matrix::Identity(n, n);
  diag /= std::sqrt(1.0 + std::norm(z));
  return Relation(intersect(t.graph(), Subspace::from_orthonormal(std::move(diag)), cfg));
}

Relation graph_sum(const Relation& t, const Relation& s, const ToleranceConfig& cfg) {
  require_same_space(t, s, "graph_sum");
  return Relation(sum(t.graph(), s.graph(), cfg));
}

Relation orthogonal_sum(const Relation& t, const Relation& s, const ToleranceConfig& cfg) {
  require_same_space(t, s, "orthogonal_sum");
  if (t.dim() > 0 && s.dim() > 0) {
    const double overlap = linalg::spectral_norm(t.graph().frame().adjoint() * s.graph().frame());
    if (overlap >= cfg.gap_tol) {
      throw PreconditionError("orthogonal_sum: graphs are not orthogonal (overlap " +
                              std::to_string(overlap) + ")");
    }
  }
  return Relation(sum(t.graph(), s.graph(), cfg));
}

Subspace apply(const Relation& t, const Subspace& x, const ToleranceConfig& cfg) {
  require_ambient(t, x, "apply");
  const Index n = t.space_dim();
  if (t.dim() == 0 || x.is_zero()) return Subspace(n);
  if (x.is_full()) return ran(t, cfg);
  // Same coefficients as restrict_domain: the graph residual against X (+) H
  // is ((I - P_X) F ; 0).
  const Matrix f = t.F();
  const Matrix residual = f - x.frame() * (x.frame().adjoint() * f);
  const Matrix coeffs = linalg::null_space(residual, cfg.rank_tol);
  if (coeffs.cols() == 0) return Subspace(n);
  return linalg::range(t.G() * coeffs, cfg.rank_tol);
}

Relation conjugate(const Relation& t, const Matrix& q, const ToleranceConfig& cfg) {
  if (q.rows() != t.space_dim() || q.cols() != t.space_dim()) {
    throw DimensionError("conjugate: unitary has the wrong size");
  }
  return relation_from_pairs_matrix(q * t.F(), q * t.G(), cfg);
}

Relation compress(const Relation& t, const Subspace& k, const ToleranceConfig& cfg) {
  require_ambient(t, k, "compress");
  const Matrix qh = k.frame().adjoint();
  return relation_from_pairs_matrix(qh * t.F(), qh * t.G(), cfg);
}

Relation embed(const Relation& t, const Subspace& k, const ToleranceConfig& /*cfg*/) {
  if (t.space_dim() != k.dim()) {
    throw DimensionError("embed: relation dimension does not match the subspace");
  }
  if (t.dim() == 0) return Relation(k.ambient_dim());
  Matrix stacked(2 * k.ambient_dim(), t.dim());
  stacked << k.frame() * t.F(), k.frame() * t.G();
  return Relation(Subspace::from_orthonormal(std::move(stacked), 1e-6));
}

Matrix to_matrix(const Relation& t, const ToleranceConfig& cfg) {
  const Index n = t.space_dim();
  if (t.dim() != n || !dom(t, cfg).is_full() || !is_operator(t, cfg)) {
    throw PreconditionError("to_matrix: relation is not an operator defined on the whole space");
  }
  // M F = G  <=>  F^T M^T = G^T.
  const Matrix f = t.F();
  const Matrix g = t.G();
  return f.transpose().partialPivLu().solve(g.transpose()).transpose();
}

double gap(const Relation& t, const Relation& s) {
  require_same_space(t, s, "gap");
  return gap(t.graph(), s.graph());
}

bool equal(const Relation& t, const Relation& s, const ToleranceConfig& cfg) {
  require_same_space(t, s, "equal");
  return equal(t.graph(), s.graph(), cfg);
}

bool contains(const Relation& outer, const Relation& inner, const ToleranceConfig& cfg) {
  require_same_space(outer, inner, "contains");
  return contains(outer.graph(), inner.graph(), cfg);
}

}  // namespace lrel
