#pragma once

#include <string>
#include <vector>

#include "lrel/decompose.hpp"

namespace lrel::shift_model {

/// Truncation of l2(N) to span{delta_1, ..., delta_N}. Claims are only
/// asserted on the window delta_1 .. delta_{N - margin}, where the truncated
/// and infinite models agree.
struct WindowConfig {
  Index n = 64;
  Index margin = 4;

  Index window_size() const { return n - margin; }
  void validate() const;
};

// Basis vectors are 1-based in this module, matching delta_k.
Vector delta(const WindowConfig& w, Index k);

/// span{(delta_k, delta_{k+1}) : 1 <= k <= N-1}.
Relation build_shift(const WindowConfig& w, const ToleranceConfig& cfg = {});

/// span{(delta_k - i delta_{k+1}, i delta_k - delta_{k+1}) : 1 <= k <= N-1}.
Relation build_A(const WindowConfig& w, const ToleranceConfig& cfg = {});

/// span{delta_first .. delta_last} in C^N.
Subspace span_range(const WindowConfig& w, Index first, Index last);

/// K = span{delta_2 .. delta_N}.
Subspace k_space(const WindowConfig& w);

/// A restricted to the domain K.
Relation build_B(const WindowConfig& w, const ToleranceConfig& cfg = {});
/// span{(0, delta_1)}.
Relation build_Y(const WindowConfig& w, const ToleranceConfig& cfg = {});
/// B (+) Y.
Relation build_A_inf(const WindowConfig& w, const ToleranceConfig& cfg = {});

/// span{(delta_k, z delta_k)}.
Relation eigen_pair(const WindowConfig& w, Index k, Complex z, const ToleranceConfig& cfg = {});

/// span{delta_first .. delta_last} inside the window space C^{N - margin}.
/// Throws DimensionError when the span reaches past the window.
Subspace window_span(const WindowConfig& w, Index first, Index last);

/// Orthogonal compression onto the window coordinates, re-spanned.
Subspace compress_to_window(const Subspace& s, const WindowConfig& w, const ToleranceConfig& cfg = {});
Relation compress_to_window(const Relation& t, const WindowConfig& w, const ToleranceConfig& cfg = {});

struct WindowVerdict {
  bool passed = false;
  double residual = 0.0;
};

/// Compares two full-space objects after compression onto the window.
WindowVerdict window_assert(const Subspace& lhs, const Subspace& rhs, const WindowConfig& w,
                            const ToleranceConfig& cfg = {});
WindowVerdict window_assert(const Relation& lhs, const Relation& rhs, const WindowConfig& w,
                            const ToleranceConfig& cfg = {});

/// Compares a full-space subspace, compressed, with a subspace already given
/// in window coordinates (e.g. from window_span).
WindowVerdict window_assert_expected(const Subspace& full, const Subspace& expected_window,
                                     const WindowConfig& w, const ToleranceConfig& cfg = {});

struct SpectralSample {
  Complex z;
  Index dimension = 0;
};

struct SpectralProbeReport {
  /// dim ker(A - z) for z in {i, -i, 0, 1, 1+i}.
  std::vector<SpectralSample> point_samples;
  bool point_spectrum_empty = false;
  /// Distance of (delta_1, -i delta_1) / sqrt(2) from the graph of A*.
  double delta1_residual = 0.0;
  bool delta1_eigenvector = false;
  /// dim ker(A* - conj(z)) at further samples z in the lower half plane.
  /// Reported only: the truncation distorts these counts.
  std::vector<SpectralSample> lower_half_reported;
};

SpectralProbeReport spectral_window_probe(const WindowConfig& w, const ToleranceConfig& cfg = {});

struct ExampleCheck {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

struct ExampleReport {
  WindowConfig window;
  std::vector<ExampleCheck> checks;
  DecompositionResult decomposition;  // symmetric decomposition of A_inf
  SpectralProbeReport spectral;

  bool all_pass() const;
  const ExampleCheck* find(std::string_view name) const;
};

/// Runs the whole truncated-model pipeline: builds S, A, B, Y, A_inf, checks
/// every window identity and decomposes A_inf.
ExampleReport run_example(const WindowConfig& w, const ToleranceConfig& cfg = {});

}  // namespace lrel::shift_model
