#include "lrel/ztransform.hpp"

#include <algorithm>
#include <cmath>

namespace lrel {

namespace {

bool is_non_real(Complex z) { return z.imag() != 0.0; }

PropertyCheck gap_check(double residual, const ToleranceConfig& cfg) {
  PropertyCheck c;
  c.residual = residual;
  c.status = residual < cfg.gap_tol ? CheckStatus::Pass : CheckStatus::Fail;
  return c;
}

PropertyCheck not_applicable(std::string why) {
  PropertyCheck c;
  c.note = std::move(why);
  return c;
}

// Residual of "a subset of b": ||(I - P_b) Q_a||.
double containment_residual(const Relation& a, const Relation& b) {
  if (a.dim() == 0) return 0.0;
  const Matrix& qa = a.graph().frame();
  const Matrix& qb = b.graph().frame();
  return linalg::spectral_norm(qa - qb * (qb.adjoint() * qa));
}

}  // namespace

Relation z_transform(const Relation& t, Complex z, const ToleranceConfig& cfg) {
  const Complex zc = std::conj(z);
  const double z2 = std::norm(z);
  const Matrix f = t.F();
  const Matrix g = t.G();
  Matrix stacked(2 * t.space_dim(), t.dim());
  stacked << g - zc * f, zc * g - z2 * f;
  return Relation(linalg::range(stacked, cfg.rank_tol));
}

bool ZPropertyReport::all_applicable_pass() const {
  return std::none_of(properties.begin(), properties.end(),
                      [](const PropertyCheck& c) { return c.failed(); });
}

double ZPropertyReport::max_residual() const {
  double r = 0.0;
  for (const auto& c : properties) {
    if (c.status != CheckStatus::NotApplicable) r = std::max(r, c.residual);
  }
  return r;
}

ZPropertyReport z_properties_check(const Relation& t, const Relation& s, Complex z,
                                   const ToleranceConfig& cfg) {
  if (t.space_dim() != s.space_dim()) {
    throw DimensionError("z_properties_check: relations act on different spaces");
  }
  ZPropertyReport rep;
  auto& p = rep.properties;
  const Relation zt = z_transform(t, z, cfg);

  // (i) and (ii) rely on the substitution being invertible, which fails for
  // real z (Z_z T then collapses onto the graph of z I).
  if (!is_non_real(z)) {
    p[0] = not_applicable("substitution is singular for real z");
    p[1] = not_applicable("substitution is singular for real z");
  } else {
    // (i) involution
    p[0] = gap_check(gap(z_transform(zt, z, cfg), t), cfg);

    // (ii) T subset S <=> Z T subset Z S. Checked on the given pair and on
    // the guaranteed inclusion T subset T + S.
    const Relation zs = z_transform(s, z, cfg);
    const bool lhs = contains(s, t, cfg);
    const bool rhs = contains(zs, zt, cfg);
    const Relation ts = graph_sum(t, s, cfg);
    const double inclusion = containment_residual(zt, z_transform(ts, z, cfg));
    PropertyCheck c = gap_check(inclusion, cfg);
    if (lhs != rhs) {
      c.status = CheckStatus::Fail;
      c.note = "inclusion verdicts disagree";
    }
    p[1] = c;
  }

  // (iii) Z_{-z}(T) = -Z_z(-T)
  p[2] = gap_check(
      gap(z_transform(t, -z, cfg), scale(-1.0, z_transform(scale(-1.0, t, cfg), z, cfg), cfg)),
      cfg);

  // (iv) |z| = 1: Z_z(T^-1) = Z_conj(z)(T) = (Z_z T)^-1
  if (std::abs(std::abs(z) - 1.0) <= 1e-12) {
    const Relation lhs = z_transform(inverse(t), z, cfg);
    const double r = std::max(gap(lhs, z_transform(t, std::conj(z), cfg)),
                              gap(lhs, inverse(zt)));
    p[3] = gap_check(r, cfg);
  } else {
    p[3] = not_applicable("requires |z| = 1");
  }

  if (!is_non_real(z)) {
    for (std::size_t k = 4; k < 8; ++k) p[k] = not_applicable("requires non-real z");
    return rep;
  }

  // (v) Z(T + S) = Z T + Z S for graph sums
  p[4] = gap_check(gap(z_transform(graph_sum(t, s, cfg), z, cfg),
                       graph_sum(zt, z_transform(s, z, cfg), cfg)),
                   cfg);

  // (vi) z = +-i: Z(T (+) S) = Z T (+) Z S for orthogonal graphs
  const bool unit_imag = std::abs(z.real()) <= 1e-12 && std::abs(std::abs(z.imag()) - 1.0) <= 1e-12;
  if (!unit_imag) {
    p[5] = not_applicable("requires z = +-i");
  } else if (t.dim() > 0 && s.dim() > 0 &&
             linalg::spectral_norm(t.graph().frame().adjoint() * s.graph().frame()) >=
                 cfg.gap_tol) {
    p[5] = not_applicable("requires orthogonal graphs");
  } else {
    const Relation lhs = z_transform(orthogonal_sum(t, s, cfg), z, cfg);
    const Relation zs = z_transform(s, z, cfg);
    PropertyCheck c = gap_check(gap(lhs, graph_sum(zt, zs, cfg)), cfg);
    const double ortho = (zt.dim() > 0 && zs.dim() > 0)
                             ? linalg::spectral_norm(zt.graph().frame().adjoint() *
                                                     zs.graph().frame())
                             : 0.0;
    c.residual = std::max(c.residual, ortho);
    if (ortho >= cfg.gap_tol) c.status = CheckStatus::Fail;
    p[5] = c;
  }

  // (vii) Z_z(T*) = (Z_conj(z) T)*
  p[6] = gap_check(gap(z_transform(adjoint(t), z, cfg), adjoint(z_transform(t, std::conj(z), cfg))),
                   cfg);

  // (viii) closures: every finite-dimensional relation is closed, so this
  // compares Z of the re-spanned graph with Z itself.
  p[7] = gap_check(gap(z_transform(Relation(orthonormalize(t.graph().frame(), cfg)), z, cfg), zt),
                   cfg);
  return rep;
}

double ZRangeIdentities::max_residual() const {
  return std::max({dom_residual, ran_residual, mul_residual, ker_residual});
}

ZRangeIdentities z_range_identities(const Relation& t, Complex z, const ToleranceConfig& cfg) {
  const Relation zt = z_transform(t, z, cfg);
  const Complex zc = std::conj(z);
  ZRangeIdentities r;
  r.dom_residual = gap(dom(zt, cfg), ran(shift(t, zc, cfg), cfg));
  r.ran_residual = gap(ran(zt, cfg), ran(shift(t, z, cfg), cfg));
  r.mul_residual = gap(mul(zt, cfg), dom(deficiency(t, zc, cfg), cfg));
  r.ker_residual = gap(ker(zt, cfg), dom(deficiency(t, z, cfg), cfg));
  return r;
}

bool subspace_fixed_point_check(const Subspace& k, Complex z, const ToleranceConfig& cfg) {
  const Relation kk(Subspace::from_orthonormal([&] {
    Matrix m = Matrix::Zero(2 * k.ambient_dim(), 2 * k.dim());
    m.topLeftCorner(k.ambient_dim(), k.dim()) = k.frame();
    m.bottomRightCorner(k.ambient_dim(), k.dim()) = k.frame();
    return m;
  }()));
  return equal(z_transform(kk, z, cfg), kk, cfg);
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "n/a";
  }
  return "unknown";
}

}  // namespace lrel
