#include "lrel/invariance.hpp"

#include <algorithm>

#include "lrel/ztransform.hpp"

namespace lrel {

namespace {

double split_residual(const Subspace& whole, const Subspace& k, const Subspace& kperp,
                      const ToleranceConfig& cfg) {
  const Subspace parts = sum(intersect(whole, k, cfg), intersect(whole, kperp, cfg), cfg);
  return gap(whole, parts);
}

InvarianceReport invariance_from(const GraphParts& whole, const Relation& tk, const Subspace& k,
                                 const Subspace& kperp, const ToleranceConfig& cfg) {
  InvarianceReport rep;
  rep.dom_residual = split_residual(whole.dom, k, kperp, cfg);
  rep.mul_residual = split_residual(whole.mul, k, kperp, cfg);
  rep.restricted_domain_residual = gap(dom(tk, cfg), intersect(whole.dom, k, cfg));
  rep.dom_splits = rep.dom_residual < cfg.gap_tol;
  rep.mul_splits = rep.mul_residual < cfg.gap_tol;
  rep.restricted_domain = rep.restricted_domain_residual < cfg.gap_tol;
  return rep;
}

}  // namespace

InvarianceReport check_invariance(const Relation& t, const Subspace& k,
                                  const ToleranceConfig& cfg) {
  if (k.ambient_dim() != t.space_dim()) {
    throw DimensionError("check_invariance: subspace ambient dimension does not match");
  }
  GraphParts whole;
  whole.dom = dom(t, cfg);
  whole.mul = mul(t, cfg);
  return invariance_from(whole, restrict(t, k, cfg), k, complement(k), cfg);
}

bool is_invariant(const Relation& t, const Subspace& k, const ToleranceConfig& cfg) {
  return check_invariance(t, k, cfg).invariant();
}

double reducing_residual(const Relation& t, const Subspace& k, const ToleranceConfig& cfg) {
  if (k.ambient_dim() != t.space_dim()) {
    throw DimensionError("is_reducing: subspace ambient dimension does not match");
  }
  const Relation split =
      orthogonal_sum(restrict(t, k, cfg), restrict(t, complement(k), cfg), cfg);
  return gap(t, split);
}

bool is_reducing(const Relation& t, const Subspace& k, const ToleranceConfig& cfg) {
  return reducing_residual(t, k, cfg) < cfg.gap_tol;
}

Relation adjoint_within(const Relation& t, const Subspace& k, const ToleranceConfig& cfg) {
  if (k.ambient_dim() != t.space_dim()) {
    throw DimensionError("adjoint_within: subspace ambient dimension does not match");
  }
  Matrix kk = Matrix::Zero(2 * k.ambient_dim(), 2 * k.dim());
  kk.topLeftCorner(k.ambient_dim(), k.dim()) = k.frame();
  kk.bottomRightCorner(k.ambient_dim(), k.dim()) = k.frame();
  if (!contains(Subspace::from_orthonormal(std::move(kk)), t.graph(), cfg)) {
    throw PreconditionError("adjoint_within: relation is not contained in K (+) K");
  }
  return embed(adjoint(compress(t, k, cfg)), k, cfg);
}

ReductionCertificates reduction_certificates(const Relation& t, const Subspace& k,
                                             const ToleranceConfig& cfg) {
  ReductionCertificates c;
  const Subspace kperp = complement(k);
  const Relation tk = restrict(t, k, cfg);
  const Relation tkp = restrict(t, kperp, cfg);

  c.reducing_residual = gap(t, graph_sum(tk, tkp, cfg));
  c.reducing = c.reducing_residual < cfg.gap_tol;
  const GraphParts whole = graph_parts(t, cfg);
  c.k_invariance = invariance_from(whole, tk, k, kperp, cfg);
  c.kperp_invariance = invariance_from(whole, tkp, kperp, k, cfg);

  const Relation ts = adjoint(t);
  c.reduces_adjoint = is_reducing(ts, k, cfg);
  c.reduces_z_plus_i = is_reducing(z_transform(t, Complex(0.0, 1.0), cfg), k, cfg);
  c.reduces_z_minus_i = is_reducing(z_transform(t, Complex(0.0, -1.0), cfg), k, cfg);

  const GraphParts pk = graph_parts(tk, cfg);
  const GraphParts pkp = graph_parts(tkp, cfg);
  c.parts_residual = std::max({gap(whole.dom, sum(pk.dom, pkp.dom, cfg)),
                               gap(whole.ran, sum(pk.ran, pkp.ran, cfg)),
                               gap(whole.ker, sum(pk.ker, pkp.ker, cfg)),
                               gap(whole.mul, sum(pk.mul, pkp.mul, cfg))});
  c.parts_split = c.parts_residual < cfg.gap_tol;

  // The within-K adjoints need T_K inside K (+) K, which restrict guarantees.
  const Relation tk_star = adjoint_within(tk, k, cfg);
  const Relation tkp_star = adjoint_within(tkp, kperp, cfg);
  c.adjoint_residual = gap(ts, graph_sum(tk_star, tkp_star, cfg));
  c.adjoint_distributes = c.adjoint_residual < cfg.gap_tol;
  c.adjoint_restrict_residual =
      std::max(gap(tk_star, restrict(ts, k, cfg)), gap(tkp_star, restrict(ts, kperp, cfg)));
  c.adjoint_restricts = c.adjoint_restrict_residual < cfg.gap_tol;
  return c;
}

}  // namespace lrel
