#include "lrel/shift_model.hpp"

#include <algorithm>
#include <cmath>

#include "lrel/ztransform.hpp"

namespace lrel::shift_model {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_index(const WindowConfig& w, Index k) {
  if (k < 1 || k > w.n) throw DimensionError("shift_model: basis index out of range");
}

ExampleCheck make_check(std::string name, double residual, double tolerance) {
  return ExampleCheck{std::move(name), residual < tolerance, residual, tolerance};
}

ExampleCheck make_check(std::string name, const WindowVerdict& v, double tolerance) {
  return make_check(std::move(name), v.residual, tolerance);
}

ExampleCheck make_flag(std::string name, bool ok) {
  return ExampleCheck{std::move(name), ok, ok ? 0.0 : 1.0, 0.5};
}

}  // namespace

void WindowConfig::validate() const {
  if (n < 8) throw std::invalid_argument("WindowConfig: N must be at least 8");
  if (margin < 2) throw std::invalid_argument("WindowConfig: margin must be at least 2");
  if (window_size() < 1) throw std::invalid_argument("WindowConfig: empty window");
}

Vector delta(const WindowConfig& w, Index k) {
  require_index(w, k);
  Vector v = Vector::Zero(w.n);
  v(k - 1) = 1.0;
  return v;
}

Relation build_shift(const WindowConfig& w, const ToleranceConfig& cfg) {
  w.validate();
  Matrix f = Matrix::Zero(w.n, w.n - 1);
  Matrix g = Matrix::Zero(w.n, w.n - 1);
  for (Index k = 1; k < w.n; ++k) {
    f.col(k - 1) = delta(w, k);
    g.col(k - 1) = delta(w, k + 1);
  }
  return from_pairs(f, g, cfg);
}

Relation build_A(const WindowConfig& w, const ToleranceConfig& cfg) {
  w.validate();
  Matrix f = Matrix::Zero(w.n, w.n - 1);
  Matrix g = Matrix::Zero(w.n, w.n - 1);
  for (Index k = 1; k < w.n; ++k) {
    f.col(k - 1) = delta(w, k) - kI * delta(w, k + 1);
    g.col(k - 1) = kI * delta(w, k) - delta(w, k + 1);
  }
  return from_pairs(f, g, cfg);
}

Subspace span_range(const WindowConfig& w, Index first, Index last) {
  require_index(w, first);
  require_index(w, last);
  return Subspace::coordinate_span(w.n, first - 1, last - 1);
}

Subspace k_space(const WindowConfig& w) { return span_range(w, 2, w.n); }

Relation build_B(const WindowConfig& w, const ToleranceConfig& cfg) {
  return restrict_domain(build_A(w, cfg), k_space(w), cfg);
}

Relation build_Y(const WindowConfig& w, const ToleranceConfig& cfg) {
  w.validate();
  return from_pairs(Matrix::Zero(w.n, 1), delta(w, 1), cfg);
}

Relation build_A_inf(const WindowConfig& w, const ToleranceConfig& cfg) {
  return orthogonal_sum(build_B(w, cfg), build_Y(w, cfg), cfg);
}

Relation eigen_pair(const WindowConfig& w, Index k, Complex z, const ToleranceConfig& cfg) {
  return from_pairs(delta(w, k), z * delta(w, k), cfg);
}

Subspace window_span(const WindowConfig& w, Index first, Index last) {
  if (first < 1 || last > w.window_size()) {
    throw DimensionError("window_span: claim touches indices outside the window 1.." +
                         std::to_string(w.window_size()));
  }
  return Subspace::coordinate_span(w.window_size(), first - 1, last - 1);
}

Subspace compress_to_window(const Subspace& s, const WindowConfig& w, const ToleranceConfig& cfg) {
  if (s.ambient_dim() != w.n) throw DimensionError("compress_to_window: ambient mismatch");
  return linalg::range(s.frame().topRows(w.window_size()), cfg.rank_tol);
}

Relation compress_to_window(const Relation& t, const WindowConfig& w, const ToleranceConfig& cfg) {
  if (t.space_dim() != w.n) throw DimensionError("compress_to_window: dimension mismatch");
  const Index m = w.window_size();
  Matrix stacked(2 * m, t.dim());
  stacked << t.F().topRows(m), t.G().topRows(m);
  return Relation(linalg::range(stacked, cfg.rank_tol));
}

WindowVerdict window_assert(const Subspace& lhs, const Subspace& rhs, const WindowConfig& w,
                            const ToleranceConfig& cfg) {
  const double r = gap(compress_to_window(lhs, w, cfg), compress_to_window(rhs, w, cfg));
  return {r < cfg.gap_tol, r};
}

WindowVerdict window_assert(const Relation& lhs, const Relation& rhs, const WindowConfig& w,
                            const ToleranceConfig& cfg) {
  const double r = gap(compress_to_window(lhs, w, cfg), compress_to_window(rhs, w, cfg));
  return {r < cfg.gap_tol, r};
}

WindowVerdict window_assert_expected(const Subspace& full, const Subspace& expected_window,
                                     const WindowConfig& w, const ToleranceConfig& cfg) {
  if (expected_window.ambient_dim() != w.window_size()) {
    throw DimensionError("window_assert_expected: expected subspace is not in window coordinates");
  }
  const double r = gap(compress_to_window(full, w, cfg), expected_window);
  return {r < cfg.gap_tol, r};
}

SpectralProbeReport spectral_window_probe(const WindowConfig& w, const ToleranceConfig& cfg) {
  w.validate();
  SpectralProbeReport rep;
  const Relation a = build_A(w, cfg);
  const Relation as = adjoint(a);
  rep.point_spectrum_empty = true;
  for (Complex z : {kI, -kI, Complex(0.0), Complex(1.0), Complex(1.0, 1.0)}) {
    const Index d = dom(deficiency(a, z, cfg), cfg).dim();
    rep.point_samples.push_back({z, d});
    rep.point_spectrum_empty = rep.point_spectrum_empty && d == 0;
  }
  Vector pair(2 * w.n);
  pair << delta(w, 1), -kI * delta(w, 1);
  pair /= std::sqrt(2.0);
  const Matrix& q = as.graph().frame();
  rep.delta1_residual = (pair - q * (q.adjoint() * pair)).norm();
  rep.delta1_eigenvector = rep.delta1_residual < cfg.gap_tol;
  for (Complex z : {Complex(0.0, -2.0), Complex(1.0, -1.0), Complex(-0.5, -0.25)}) {
    rep.lower_half_reported.push_back({z, dom(deficiency(as, std::conj(z), cfg), cfg).dim()});
  }
  return rep;
}

bool ExampleReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ExampleCheck& c) { return c.passed; });
}

const ExampleCheck* ExampleReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ExampleReport run_example(const WindowConfig& w, const ToleranceConfig& cfg) {
  w.validate();
  ExampleReport rep;
  rep.window = w;
  auto& out = rep.checks;
  const double tol = cfg.gap_tol;
  const Index top = w.window_size();

  const Relation s = build_shift(w, cfg);
  const Relation a = build_A(w, cfg);
  const Relation b = build_B(w, cfg);
  const Relation y = build_Y(w, cfg);
  const Relation a_inf = build_A_inf(w, cfg);
  const Subspace k = k_space(w);
  const Relation a_star = adjoint(a);

  // The shift and its wandering space.
  {
    const ClassificationReport sc = classify(s, cfg);
    out.push_back(make_flag("shift_isometric_not_unitary",
                            sc.is_isometry && !sc.is_unitary && !dom(s, cfg).is_full()));
    out.push_back(make_check("shift_wandering_space_delta1",
                             gap(complement(ran(s, cfg)), span_range(w, 1, 1)), tol));
    // Interior orthogonality of S^m delta_1.
    // Earlier layers are checked orthogonal, so stacking their frames keeps
    // the stack orthonormal up to the reported overlap.
    double overlap = 0.0;
    Subspace layer = span_range(w, 1, 1);
    Matrix seen = layer.frame();
    for (Index m = 1; m <= top - 2; ++m) {
      layer = apply(s, layer, cfg);
      overlap = std::max(overlap, linalg::spectral_norm(seen.adjoint() * layer.frame()));
      Matrix grown(seen.rows(), seen.cols() + layer.dim());
      grown << seen, layer.frame();
      seen = std::move(grown);
    }
    out.push_back(make_check("shift_wandering_orthogonal", overlap, tol));
  }

  // A and its transform.
  {
    const ClassificationReport ac = classify(a, cfg);
    out.push_back(make_flag("A_symmetric_operator",
                            ac.is_symmetric && ac.is_operator && !dom(a, cfg).is_full()));
    const Relation za = z_transform(a, kI, cfg);
    out.push_back(make_check("Z_i(A)_is_shift", window_assert(za, s, w, cfg), tol));
    out.push_back(make_check("Z_i(A)_is_shift_full_space", gap(za, s), tol));
    out.push_back(make_check(
        "ker(A*+i)_window_delta1",
        window_assert_expected(dom(deficiency(a_star, -kI, cfg), cfg), window_span(w, 1, 1), w, cfg),
        tol));
    out.push_back(make_check(
        "A*_equals_A_plus_delta1_pair",
        window_assert(a_star, orthogonal_sum(a, eigen_pair(w, 1, -kI, cfg), cfg), w, cfg), tol));
  }

  // B, Y, A_inf.
  {
    out.push_back(make_flag("ran_B_inside_K", contains(k, ran(b, cfg), cfg)));
    const Relation b_star_k = adjoint_within(b, k, cfg);
    out.push_back(make_check(
        "B*_in_K_equals_B_plus_delta2_pair",
        window_assert(b_star_k, orthogonal_sum(b, eigen_pair(w, 2, -kI, cfg), cfg), w, cfg), tol));
    out.push_back(make_check("B*_equals_A*_plus_Y",
                             window_assert(adjoint(b), graph_sum(a_star, y, cfg), w, cfg), tol));
    const ClassificationReport ic = classify(a_inf, cfg);
    out.push_back(make_flag("A_inf_symmetric_multivalued", ic.is_symmetric && !ic.is_operator));
    out.push_back(make_check("mul_A_inf_delta1", gap(mul(a_inf, cfg), span_range(w, 1, 1)), tol));
    out.push_back(make_check("K_reduces_A_inf", reducing_residual(a_inf, k, cfg), tol));
    const Relation expected =
        orthogonal_sum(orthogonal_sum(b, eigen_pair(w, 2, -kI, cfg), cfg), y, cfg);
    out.push_back(make_check("A_inf*_decomposed", window_assert(adjoint(a_inf), expected, w, cfg), tol));
  }

  // The truncated A carries no selfadjoint part.
  {
    const DecompositionResult dd = dissipative_decompose(a, cfg);
    out.push_back(make_check("A_completely_nonselfadjoint_window",
                             static_cast<double>(compress_to_window(dd.k, w, cfg).dim()), 0.5));
  }

  // Symmetric decomposition of A_inf.
  rep.decomposition = symmetric_wold_decompose(a_inf, cfg, {.require_maximal = false});
  {
    const DecompositionResult& d = rep.decomposition;
    out.push_back(make_check("wandering_window_delta2",
                             window_assert_expected(*d.wandering, window_span(w, 2, 2), w, cfg), tol));
    out.push_back(make_check("K_window_delta2_to_edge",
                             window_assert_expected(d.k, window_span(w, 2, top), w, cfg), tol));
    out.push_back(make_check("K_perp_is_delta1", gap(complement(d.k), span_range(w, 1, 1)), tol));
    out.push_back(make_check("K_perp_part_equals_Y", gap(d.part_kperp, y), tol));
    out.push_back(make_flag("K_perp_part_selfadjoint", d.part_kperp_class.is_selfadjoint));
    out.push_back(make_check("K_part_equals_B", gap(d.part_k, b), tol));
    out.push_back(make_flag("decomposition_certificates", d.all_certificates_pass()));
  }

  rep.spectral = spectral_window_probe(w, cfg);
  out.push_back(make_flag("point_spectrum_empty", rep.spectral.point_spectrum_empty));
  out.push_back(make_check("delta1_eigenvector_of_A*", rep.spectral.delta1_residual, tol));
  return rep;
}

}  // namespace lrel::shift_model
