#pragma once

#include "lrel/relation.hpp"

namespace lrel {

/// The three conditions of T-invariance for a subspace K, kept apart so a
/// failure can be attributed:
///   (i)   dom T = (dom T n K) (+) (dom T n K^perp)
///   (ii)  mul T = (mul T n K) (+) (mul T n K^perp)
///   (iii) dom T_K = dom T n K
struct InvarianceReport {
  bool dom_splits = false;
  bool mul_splits = false;
  bool restricted_domain = false;
  double dom_residual = 0.0;
  double mul_residual = 0.0;
  double restricted_domain_residual = 0.0;

  bool invariant() const { return dom_splits && mul_splits && restricted_domain; }
};

InvarianceReport check_invariance(const Relation& t, const Subspace& k,
                                  const ToleranceConfig& cfg = {});
bool is_invariant(const Relation& t, const Subspace& k, const ToleranceConfig& cfg = {});

/// gap(T, T_K (+) T_{K^perp}).
double reducing_residual(const Relation& t, const Subspace& k, const ToleranceConfig& cfg = {});
bool is_reducing(const Relation& t, const Subspace& k, const ToleranceConfig& cfg = {});

/// Adjoint of T taken inside K as a Hilbert space. Requires T inside K (+) K.
Relation adjoint_within(const Relation& t, const Subspace& k, const ToleranceConfig& cfg = {});

/// Everything that must hold when K reduces T. Failures are reported, never
/// thrown.
struct ReductionCertificates {
  bool reducing = false;
  double reducing_residual = 0.0;

  InvarianceReport k_invariance;
  InvarianceReport kperp_invariance;

  bool reduces_adjoint = false;
  bool reduces_z_plus_i = false;
  bool reduces_z_minus_i = false;

  /// dom, ran, ker, mul of T split across K and K^perp.
  bool parts_split = false;
  double parts_residual = 0.0;

  /// T* = (T_K)* (+) (T_{K^perp})*, adjoints taken within K and K^perp.
  bool adjoint_distributes = false;
  double adjoint_residual = 0.0;

  /// (T_K)* = (T*)_K and likewise for K^perp.
  bool adjoint_restricts = false;
  double adjoint_restrict_residual = 0.0;

  bool all_pass() const {
    return reducing && k_invariance.invariant() && kperp_invariance.invariant() &&
           reduces_adjoint && reduces_z_plus_i && reduces_z_minus_i && parts_split &&
           adjoint_distributes && adjoint_restricts;
  }
};

ReductionCertificates reduction_certificates(const Relation& t, const Subspace& k,
                                             const ToleranceConfig& cfg = {});

}  // namespace lrel
