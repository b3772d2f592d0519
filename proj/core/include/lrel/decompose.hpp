#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrel/certificate.hpp"
#include "lrel/classify.hpp"
#include "lrel/invariance.hpp"

namespace lrel {

/// A stabilization loop (iterated intersection or sum) exceeded its 2n cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DecompositionResult {
  /// The distinguished reducing subspace. For nfl/wold the unitary part lives
  /// on K; for the symmetric decomposition the elementary maximal part does.
  Subspace k;
  Relation part_k;      // restrict(input, K)
  Relation part_kperp;  // restrict(input, K^perp)

  /// Wandering space for the wold and symmetric variants.
  std::optional<Subspace> wandering;

  ReductionCertificates reduction;
  /// Classifications of the parts, each taken inside its own subspace.
  ClassificationReport part_k_class;
  ClassificationReport part_kperp_class;

  std::vector<Certificate> certificates;
  int iterations = 0;

  bool all_certificates_pass() const;
  const Certificate* find(std::string_view name) const;
};

/// V (+) {(h, 0) : h in (dom V)^perp}; a contraction on the whole space.
Relation maximalize_contraction(const Relation& v, const ToleranceConfig& cfg = {});

struct StabilizedSubspace {
  Subspace space;
  int iterations = 0;
};

/// Largest reducing subspace on which the contraction matrix `m` is unitary:
/// the intersection over j >= 0 of ker(D m^j) and ker(D* (m^H)^j), with
/// D = I - m^H m and D* = I - m m^H.
StabilizedSubspace unitary_part(const Matrix& m, const ToleranceConfig& cfg = {});

/// unitary_part for a maximal contraction given as a relation.
Subspace unitary_part_subspace(const Relation& vhat, const ToleranceConfig& cfg = {});

/// Unitary (+) completely nonunitary split of a closed contraction.
DecompositionResult nfl_decompose(const Relation& v, const ToleranceConfig& cfg = {});

/// K = intersection of ran V^m, L = H - ran V for an isometry on the whole
/// space. In finite dimension such V is unitary, so K = H and L = {0}.
DecompositionResult wold_decompose(const Relation& v, const ToleranceConfig& cfg = {});

/// Selfadjoint (+) completely nonselfadjoint split of a closed dissipative
/// relation, obtained from the unitary part of Z_i(L).
DecompositionResult dissipative_decompose(const Relation& l, const ToleranceConfig& cfg = {});

struct SymmetricWoldOptions {
  /// Truncated models are symmetric but not maximal; they pass false here.
  bool require_maximal = true;
};

/// K = sum over m of (Z_i A)^m L with L = dom N_{-i}(A*): the elementary
/// maximal part lives on K, the selfadjoint part on K^perp.
DecompositionResult symmetric_wold_decompose(const Relation& a, const ToleranceConfig& cfg = {},
                                             SymmetricWoldOptions options = {});

struct VonNeumannReport {
  bool holds = false;
  double sum_residual = 0.0;           // gap(A*, A + N_i(A*) + N_{-i}(A*))
  Index adjoint_dim = 0;
  Index summand_dims = 0;              // dim A + dim N_i + dim N_{-i}
  double minus_i_orthogonality = 0.0;  // ||graph(A)^H graph(N_{-i}(A*))||
  Relation deficiency_plus_i;
  Relation deficiency_minus_i;
};

/// First von Neumann formula for a symmetric relation.
VonNeumannReport von_neumann_check(const Relation& a, const ToleranceConfig& cfg = {});

}  // namespace lrel
