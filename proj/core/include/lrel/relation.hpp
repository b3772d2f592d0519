#pragma once

#include <utility>
#include <vector>

#include "lrel/subspace.hpp"

namespace lrel {

/// A closed linear relation in C^n (+) C^n, i.e. a subspace of C^{2n}.
///
/// The graph frame is split into F (top n rows) and G (bottom n rows), so the
/// relation is { (F x, G x) : x in C^r }. Being finite-dimensional, every
/// Relation is closed.
class Relation {
 public:
  Relation() = default;

  /// The zero relation {0} x {0} on C^n.
  explicit Relation(Index space_dim);

  /// Wraps a graph; its ambient dimension must be even.
  explicit Relation(Subspace graph);

  Index space_dim() const { return space_dim_; }
  Index dim() const { return graph_.dim(); }
  const Subspace& graph() const { return graph_; }

  auto F() const { return graph_.frame().topRows(space_dim_); }
  auto G() const { return graph_.frame().bottomRows(space_dim_); }

 private:
  Index space_dim_ = 0;
  Subspace graph_;
};

/// dom, ran, ker and mul of a relation.
struct GraphParts {
  Subspace dom;
  Subspace ran;
  Subspace ker;
  Subspace mul;
};

Relation from_operator(const Matrix& m, const ToleranceConfig& cfg = {});

/// Span of the pairs (f_j, g_j), given as the columns of `f` and `g`.
Relation from_pairs(const Matrix& f, const Matrix& g, const ToleranceConfig& cfg = {});
Relation from_pairs(Index space_dim, std::span<const std::pair<Vector, Vector>> pairs,
                    const ToleranceConfig& cfg = {});

/// {(f, 0) : f in K} and {(0, g) : g in K}.
Relation zero_on(const Subspace& k);
Relation multivalued_on(const Subspace& k);

Subspace dom(const Relation& t, const ToleranceConfig& cfg = {});
Subspace ran(const Relation& t, const ToleranceConfig& cfg = {});
Subspace ker(const Relation& t, const ToleranceConfig& cfg = {});
Subspace mul(const Relation& t, const ToleranceConfig& cfg = {});
GraphParts graph_parts(const Relation& t, const ToleranceConfig& cfg = {});

bool is_operator(const Relation& t, const ToleranceConfig& cfg = {});

// Relation algebra, following the set-theoretic definitions:
//   T + S = {(f, g + h) : (f, g) in T, (f, h) in S}
//   z T   = {(f, z g)}
//   S T   = {(f, k) : (f, g) in T, (g, k) in S}
//   T^-1  = {(g, f)}
Relation add(const Relation& t, const Relation& s, const ToleranceConfig& cfg = {});
Relation scale(Complex z, const Relation& t, const ToleranceConfig& cfg = {});
Relation compose(const Relation& s, const Relation& t, const ToleranceConfig& cfg = {});
Relation inverse(const Relation& t);

/// T - zI = {(f, g - z f)}.
Relation shift(const Relation& t, Complex z, const ToleranceConfig& cfg = {});

/// T* computed as the orthogonal complement of -T^{-1} in C^{2n}.
Relation adjoint(const Relation& t);

/// T_K = T intersected with K (+) K.
Relation restrict(const Relation& t, const Subspace& k, const ToleranceConfig& cfg = {});

/// T restricted to domain K: T intersected with K (+) H.
Relation restrict_domain(const Relation& t, const Subspace& k, const ToleranceConfig& cfg = {});

/// N_z(T) = {(f, z f) in T}; its domain is ker(T - zI).
Relation deficiency(const Relation& t, Complex z, const ToleranceConfig& cfg = {});

/// Sum of graphs (T + S as subspaces of C^{2n}).
Relation graph_sum(const Relation& t, const Relation& s, const ToleranceConfig& cfg = {});

/// Orthogonal sum of relations. Throws PreconditionError when the graphs are
/// not orthogonal within gap_tol.
Relation orthogonal_sum(const Relation& t, const Relation& s, const ToleranceConfig& cfg = {});

/// Image of a subspace: {g : (f, g) in T, f in X}.
Subspace apply(const Relation& t, const Subspace& x, const ToleranceConfig& cfg = {});

/// Graph of T transported by the unitary Q (+) Q, i.e. Q T Q^H.
Relation conjugate(const Relation& t, const Matrix& q, const ToleranceConfig& cfg = {});

/// Coordinates of T (assumed inside K (+) K) in the orthonormal frame of K:
/// a relation on C^{dim K}.
Relation compress(const Relation& t, const Subspace& k, const ToleranceConfig& cfg = {});

/// Inverse of compress: re-embeds a relation on C^{dim K} into C^n.
Relation embed(const Relation& t, const Subspace& k, const ToleranceConfig& cfg = {});

/// Matrix of an operator with full domain. Throws PreconditionError otherwise.
Matrix to_matrix(const Relation& t, const ToleranceConfig& cfg = {});

double gap(const Relation& t, const Relation& s);
bool equal(const Relation& t, const Relation& s, const ToleranceConfig& cfg = {});

/// True when `inner` is a subset of `outer`.
bool contains(const Relation& outer, const Relation& inner, const ToleranceConfig& cfg = {});

}  // namespace lrel
