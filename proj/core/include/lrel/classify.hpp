#pragma once

#include <optional>
#include <string_view>

#include "lrel/relation.hpp"

namespace lrel {

/// Structural flags of a relation together with the residuals they were
/// decided on.
struct ClassificationReport {
  bool is_operator = false;
  bool is_bounded = false;
  bool is_contraction = false;
  bool is_isometry = false;
  bool is_unitary = false;
  bool is_dissipative = false;
  bool is_symmetric = false;
  bool is_selfadjoint = false;
  bool is_maximal_dissipative = false;

  /// Smallest eigenvalue of (F^H G - G^H F) / 2i; >= -psd_tol means dissipative.
  double dissipativity_margin = 0.0;
  /// Largest |eigenvalue| of the same form; <= psd_tol means symmetric.
  double symmetry_defect = 0.0;
  /// Smallest eigenvalue of F^H F - G^H G; >= -psd_tol means contractive.
  double contraction_margin = 0.0;
  /// Largest |eigenvalue| of F^H F - G^H G.
  double isometry_defect = 0.0;
  /// gap(T, T*).
  double selfadjoint_gap = 0.0;

  /// A graph vector (f, g) in C^{2n} violating dissipativity, or contractivity
  /// when the relation is dissipative but not a contraction.
  std::optional<Vector> witness;
};

ClassificationReport classify(const Relation& t, const ToleranceConfig& cfg = {});

/// Pointwise spectral class. Finite-dimensional ranges are closed, so the
/// continuous spectrum is empty and QuasiRegularOnly is never produced here.
enum class SpectralPointClass { Regular, Point, Residual, QuasiRegularOnly };

SpectralPointClass classify_point(const Relation& t, Complex z, const ToleranceConfig& cfg = {});

std::string_view to_string(SpectralPointClass c);

}  // namespace lrel
