#pragma once

#include <array>
#include <string>

#include "lrel/relation.hpp"

namespace lrel {

/// Z_z(T) = {(g - conj(z) f, conj(z) g - |z|^2 f) : (f, g) in T}.
///
/// The substitution is invertible only for non-real, nonzero z; at real z the
/// graph dimension may drop.
Relation z_transform(const Relation& t, Complex z, const ToleranceConfig& cfg = {});

enum class CheckStatus { Pass, Fail, NotApplicable };

struct PropertyCheck {
  CheckStatus status = CheckStatus::NotApplicable;
  double residual = 0.0;  // largest gap compared against gap_tol
  std::string note;

  bool passed() const { return status == CheckStatus::Pass; }
  bool failed() const { return status == CheckStatus::Fail; }
};

/// Per-identity verdicts for the eight Z-transform properties, indexed 0..7
/// for properties (i)..(viii). Properties whose hypotheses on z (|z| = 1 for
/// (iv), non-real z for (i), (ii) and (v)-(viii), z = +-i for (vi)) or on
/// T, S (orthogonal graphs for (vi)) do not hold are reported NotApplicable.
struct ZPropertyReport {
  std::array<PropertyCheck, 8> properties;

  bool all_applicable_pass() const;
  double max_residual() const;
};

ZPropertyReport z_properties_check(const Relation& t, const Relation& s, Complex z,
                                   const ToleranceConfig& cfg = {});

/// The four range/kernel identities linking Z_z(T) with T - zI and T - conj(z)I.
struct ZRangeIdentities {
  double dom_residual = 0.0;  // dom Z = ran(T - conj(z))
  double ran_residual = 0.0;  // ran Z = ran(T - z)
  double mul_residual = 0.0;  // mul Z = ker(T - conj(z))
  double ker_residual = 0.0;  // ker Z = ker(T - z)

  double max_residual() const;
};

ZRangeIdentities z_range_identities(const Relation& t, Complex z, const ToleranceConfig& cfg = {});

/// Checks Z_z(K (+) K) = K (+) K.
bool subspace_fixed_point_check(const Subspace& k, Complex z, const ToleranceConfig& cfg = {});

std::string_view to_string(CheckStatus s);

}  // namespace lrel
