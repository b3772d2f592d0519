#include "lrel/decompose.hpp"

#include <algorithm>
#include <string>

#include "lrel/ztransform.hpp"

namespace lrel {

namespace {

constexpr Complex kI{0.0, 1.0};

Certificate certify(std::string name, double residual, double tolerance) {
  return Certificate{std::move(name), residual < tolerance, residual, tolerance};
}

// Passes when `value` is exactly zero; used for dimension counts.
Certificate certify_zero(std::string name, Index value) {
  return Certificate{std::move(name), value == 0, static_cast<double>(value), 0.5};
}

int iteration_cap(Index n) { return static_cast<int>(std::max<Index>(2 * n, 2)); }

// Intersection over m of ran V^m for a relation V (ran V^0 = H).
StabilizedSubspace iterated_range(const Relation& v, const ToleranceConfig& cfg) {
  const Index n = v.space_dim();
  Matrix power;
  if (is_operator(v, cfg) && dom(v, cfg).is_full()) power = to_matrix(v, cfg);
  if (power.size() > 0 && linalg::hermitian_abs_max(power.adjoint() * power -
                                                    Matrix::Identity(n, n)) < cfg.psd_tol) {
    // Isometric powers stay well conditioned. ran V^m decreases in m, so
    // ran V^(2m) = ran V^m means it has stabilized.
    Subspace current = linalg::range(power, cfg.rank_tol);
    int it = 1;
    while (!current.is_zero()) {
      if (++it > iteration_cap(n)) throw ConvergenceError("iterated_range: no stabilization");
      power = power * power;
      Subspace next = linalg::range(power, cfg.rank_tol);
      const bool stable = next.dim() == current.dim();
      current = std::move(next);
      if (stable) break;
    }
    return {current, it};
  }
  if (classify(v, cfg).is_isometry) {
    // Same doubling on graphs: powers of an isometric relation are isometric.
    Relation graph_power = v;
    Subspace current = ran(v, cfg);
    int it = 1;
    while (!current.is_zero()) {
      if (++it > iteration_cap(n)) throw ConvergenceError("iterated_range: no stabilization");
      graph_power = compose(graph_power, graph_power, cfg);
      Subspace next = ran(graph_power, cfg);
      const bool stable = next.dim() == current.dim();
      current = std::move(next);
      if (stable) break;
    }
    return {current, it};
  }
  Subspace current = Subspace::full(n);
  int it = 0;
  while (true) {
    if (++it > iteration_cap(n)) throw ConvergenceError("iterated_range: no stabilization");
    // ran V^(m+1) = V(ran V^m) is contained in ran V^m.
    Subspace next = apply(v, current, cfg);
    const bool stable = next.dim() == current.dim();
    current = std::move(next);
    if (stable || current.is_zero()) break;
  }
  return {current, it};
}

// span + layer where span is built up layer by layer; only the part of
// layer orthogonal to span is factorized (two Gram-Schmidt passes).
Subspace extend(const Subspace& span, const Subspace& layer, const ToleranceConfig& cfg) {
  if (layer.is_zero()) return span;
  const Matrix& q = span.frame();
  Matrix rest = layer.frame() - q * (q.adjoint() * layer.frame());
  rest -= q * (q.adjoint() * rest);
  const Subspace fresh = linalg::range(rest, cfg.rank_tol);
  if (fresh.is_zero()) return span;
  Matrix u = fresh.frame() - q * (q.adjoint() * fresh.frame());
  u = Eigen::HouseholderQR<Matrix>(u).householderQ() * Matrix::Identity(u.rows(), u.cols());
  Matrix cols(q.rows(), q.cols() + u.cols());
  cols << q, u;
  return Subspace::from_orthonormal(std::move(cols), 1e-6);
}

void fill_common(DecompositionResult& r, const Relation& input, const ToleranceConfig& cfg) {
  const Subspace kperp = complement(r.k);
  r.part_k = restrict(input, r.k, cfg);
  r.part_kperp = restrict(input, kperp, cfg);
  r.reduction = reduction_certificates(input, r.k, cfg);
  r.part_k_class = classify(compress(r.part_k, r.k, cfg), cfg);
  r.part_kperp_class = classify(compress(r.part_kperp, kperp, cfg), cfg);
  r.certificates.push_back(certify("reducing", r.reduction.reducing_residual, cfg.gap_tol));
}

}  // namespace

bool DecompositionResult::all_certificates_pass() const {
  return std::all_of(certificates.begin(), certificates.end(),
                     [](const Certificate& c) { return c.passed; });
}

const Certificate* DecompositionResult::find(std::string_view name) const {
  for (const auto& c : certificates) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Relation maximalize_contraction(const Relation& v, const ToleranceConfig& cfg) {
  if (!classify(v, cfg).is_contraction) {
    throw PreconditionError("maximalize_contraction: input is not a contraction");
  }
  // dom V is re-spanned before padding so near-degenerate frames give a clean
  // orthogonal complement.
  const Subspace pad = complement(dom(v, cfg));
  if (pad.is_zero()) return v;
  return Relation(sum(v.graph(), zero_on(pad).graph(), cfg));
}

StabilizedSubspace unitary_part(const Matrix& m, const ToleranceConfig& cfg) {
  const Index n = m.rows();
  if (m.cols() != n) throw DimensionError("unitary_part: matrix must be square");
  const Matrix id = Matrix::Identity(n, n);
  const Matrix defect = id - m.adjoint() * m;
  const Matrix defect_star = id - m * m.adjoint();

  Matrix frame = id;
  Matrix moved = id;       // m^j frame
  Matrix moved_star = id;  // (m^H)^j frame
  int it = 0;
  while (frame.cols() > 0) {
    if (++it > iteration_cap(n)) throw ConvergenceError("unitary_part: no stabilization");
    Matrix constraints(2 * n, frame.cols());
    constraints << defect * moved, defect_star * moved_star;
    const Matrix coeffs = linalg::null_space(constraints, cfg.rank_tol);
    const bool stable = it > 1 && coeffs.cols() == frame.cols();
    frame = (frame * coeffs).eval();
    if (stable) break;
    moved = (m * (moved * coeffs)).eval();
    moved_star = (m.adjoint() * (moved_star * coeffs)).eval();
  }
  if (frame.cols() == 0) return {Subspace(n), it};
  return {orthonormalize(frame, cfg), it};
}

Subspace unitary_part_subspace(const Relation& vhat, const ToleranceConfig& cfg) {
  if (!classify(vhat, cfg).is_contraction) {
    throw PreconditionError("unitary_part_subspace: input is not a contraction");
  }
  return unitary_part(to_matrix(vhat, cfg), cfg).space;
}

DecompositionResult nfl_decompose(const Relation& v, const ToleranceConfig& cfg) {
  if (!classify(v, cfg).is_contraction) {
    throw PreconditionError("nfl_decompose: input is not a contraction");
  }
  const Relation vhat = maximalize_contraction(v, cfg);
  const StabilizedSubspace up = unitary_part(to_matrix(vhat, cfg), cfg);

  DecompositionResult r;
  r.k = up.space;
  r.iterations = up.iterations;
  fill_common(r, v, cfg);

  r.certificates.push_back(
      certify("part_k_unitary", r.part_k_class.is_unitary ? r.part_k_class.isometry_defect : 1.0,
              cfg.psd_tol));
  {
    // K sits inside dom V, hence the padded and original parts agree on K.
    const Subspace d = dom(v, cfg);
    double outside = 0.0;
    if (!r.k.is_zero()) {
      outside = linalg::spectral_norm(r.k.frame() - d.frame() * (d.frame().adjoint() * r.k.frame()));
    }
    r.certificates.push_back(certify("k_inside_dom", outside, cfg.gap_tol));
    r.certificates.push_back(
        certify("padded_part_matches", gap(restrict(vhat, r.k, cfg), r.part_k), cfg.gap_tol));
  }
  {
    const Subspace kperp = complement(r.k);
    const Relation rest = compress(r.part_kperp, kperp, cfg);
    const Subspace again = unitary_part(to_matrix(maximalize_contraction(rest, cfg), cfg), cfg).space;
    r.certificates.push_back(certify_zero("part_kperp_completely_nonunitary", again.dim()));
  }
  return r;
}

DecompositionResult wold_decompose(const Relation& v, const ToleranceConfig& cfg) {
  const ClassificationReport cls = classify(v, cfg);
  const Index n = v.space_dim();
  if (!cls.is_isometry || !dom(v, cfg).is_full()) {
    throw PreconditionError("wold_decompose: input is not an isometry on the whole space");
  }
  const Matrix m = to_matrix(v, cfg);

  DecompositionResult r;
  const StabilizedSubspace ranges = iterated_range(v, cfg);
  r.k = ranges.space;
  r.iterations = ranges.iterations;
  const Subspace l = complement(ran(v, cfg));
  r.wandering = l;
  fill_common(r, v, cfg);

  // K^perp = L (+) V L (+) V^2 L (+) ...
  Subspace shifted = l;
  Subspace span = l;
  double wandering_overlap = 0.0;
  for (int it = 0; it < iteration_cap(n) && !shifted.is_zero(); ++it) {
    shifted = image(m, shifted, cfg);
    if (!shifted.is_zero()) {
      wandering_overlap = std::max(wandering_overlap,
                                   linalg::spectral_norm(span.frame().adjoint() * shifted.frame()));
    }
    const Subspace next = extend(span, shifted, cfg);
    if (next.dim() == span.dim()) break;
    span = next;
  }
  r.certificates.push_back(certify("kperp_is_wandering_sum", gap(complement(r.k), span), cfg.gap_tol));
  r.certificates.push_back(certify("wandering_orthogonal", wandering_overlap, cfg.gap_tol));
  r.certificates.push_back(
      certify("part_k_unitary", r.part_k_class.is_unitary ? r.part_k_class.isometry_defect : 1.0,
              cfg.psd_tol));
  // Every isometry on C^n is unitary.
  r.certificates.push_back(certify_zero("finite_dimension_k_is_whole_space", n - r.k.dim()));
  r.certificates.push_back(certify_zero("finite_dimension_wandering_trivial", l.dim()));
  return r;
}

DecompositionResult dissipative_decompose(const Relation& l, const ToleranceConfig& cfg) {
  if (!classify(l, cfg).is_dissipative) {
    throw PreconditionError("dissipative_decompose: input is not dissipative");
  }
  // Same K as nfl_decompose(Z_i L) without re-running its certificates.
  const Relation v = z_transform(l, kI, cfg);
  const StabilizedSubspace up = unitary_part(to_matrix(maximalize_contraction(v, cfg), cfg), cfg);

  DecompositionResult r;
  r.k = up.space;
  r.iterations = up.iterations;
  fill_common(r, l, cfg);

  const Subspace kperp = complement(r.k);
  r.certificates.push_back(certify(
      "part_k_selfadjoint",
      r.part_k_class.is_symmetric ? r.part_k_class.selfadjoint_gap : 1.0, cfg.gap_tol));
  const Relation rest = compress(r.part_kperp, kperp, cfg);
  const Relation rest_z = z_transform(rest, kI, cfg);
  const Subspace again =
      unitary_part(to_matrix(maximalize_contraction(rest_z, cfg), cfg), cfg).space;
  r.certificates.push_back(certify_zero("part_kperp_completely_nonselfadjoint", again.dim()));
  r.certificates.push_back(certify_zero("part_kperp_is_operator", mul(r.part_kperp, cfg).dim()));
  return r;
}

DecompositionResult symmetric_wold_decompose(const Relation& a, const ToleranceConfig& cfg,
                                             SymmetricWoldOptions options) {
  const ClassificationReport cls = classify(a, cfg);
  if (!cls.is_symmetric) {
    throw PreconditionError("symmetric_wold_decompose: input is not symmetric");
  }
  if (options.require_maximal && !cls.is_maximal_dissipative) {
    throw PreconditionError("symmetric_wold_decompose: input is not maximal symmetric");
  }
  const Index n = a.space_dim();
  const Subspace l = dom(deficiency(adjoint(a), -kI, cfg), cfg);
  const Relation za = z_transform(a, kI, cfg);

  DecompositionResult r;
  r.wandering = l;
  Subspace layer = l;
  Subspace k = l;
  double wandering_overlap = 0.0;
  int it = 0;
  while (!layer.is_zero()) {
    if (++it > iteration_cap(n)) throw ConvergenceError("symmetric_wold_decompose: no stabilization");
    layer = apply(za, layer, cfg);
    if (!layer.is_zero()) {
      // k is the span of all earlier layers.
      wandering_overlap =
          std::max(wandering_overlap, linalg::spectral_norm(k.frame().adjoint() * layer.frame()));
    }
    Subspace next = extend(k, layer, cfg);
    const bool stable = next.dim() == k.dim();
    k = std::move(next);
    if (stable) break;
  }
  r.k = k;
  r.iterations = it;
  fill_common(r, a, cfg);

  r.certificates.push_back(certify("wandering_orthogonal", wandering_overlap, cfg.gap_tol));
  r.certificates.push_back(certify(
      "part_kperp_selfadjoint",
      r.part_kperp_class.is_symmetric ? r.part_kperp_class.selfadjoint_gap : 1.0, cfg.gap_tol));
  r.certificates.push_back(
      certify("part_k_symmetric", r.part_k_class.symmetry_defect, cfg.psd_tol));
  {
    // Z_i of the K-part is isometric with trivial unitary (Wold) part.
    const Relation shift_part = z_transform(compress(r.part_k, r.k, cfg), kI, cfg);
    const ClassificationReport sc = classify(shift_part, cfg);
    r.certificates.push_back(
        certify("part_k_transform_isometric", sc.is_isometry ? sc.isometry_defect : 1.0, cfg.psd_tol));
    r.certificates.push_back(
        certify_zero("part_k_transform_no_unitary_part", iterated_range(shift_part, cfg).space.dim()));
  }
  if (options.require_maximal) {
    // Maximal symmetric on C^n is selfadjoint.
    r.certificates.push_back(certify_zero("finite_dimension_k_trivial", r.k.dim()));
  }
  return r;
}

VonNeumannReport von_neumann_check(const Relation& a, const ToleranceConfig& cfg) {
  const ClassificationReport cls = classify(a, cfg);
  if (!cls.is_symmetric) throw PreconditionError("von_neumann_check: input is not symmetric");
  VonNeumannReport rep;
  const Relation as = adjoint(a);
  rep.deficiency_plus_i = deficiency(as, kI, cfg);
  rep.deficiency_minus_i = deficiency(as, -kI, cfg);
  const Relation total =
      graph_sum(graph_sum(a, rep.deficiency_plus_i, cfg), rep.deficiency_minus_i, cfg);
  rep.sum_residual = gap(as, total);
  rep.adjoint_dim = as.dim();
  rep.summand_dims = a.dim() + rep.deficiency_plus_i.dim() + rep.deficiency_minus_i.dim();
  if (a.dim() > 0 && rep.deficiency_minus_i.dim() > 0) {
    rep.minus_i_orthogonality = linalg::spectral_norm(
        a.graph().frame().adjoint() * rep.deficiency_minus_i.graph().frame());
  }
  rep.holds = rep.sum_residual < cfg.gap_tol && rep.adjoint_dim == rep.summand_dims &&
              (!cls.is_maximal_dissipative || rep.minus_i_orthogonality < cfg.gap_tol);
  return rep;
}

}  // namespace lrel
