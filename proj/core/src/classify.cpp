#include "lrel/classify.hpp"

#include <cmath>

namespace lrel {

namespace {

Vector graph_vector(const Relation& t, const Vector& coeffs) {
  return t.graph().frame() * coeffs;
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Vector min_eigenvector(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()));
  return es.eigenvectors().col(0);
}

}  // namespace

ClassificationReport classify(const Relation& t, const ToleranceConfig& cfg) {
  ClassificationReport rep;
  const Index n = t.space_dim();
  const Matrix f = t.F();
  const Matrix g = t.G();

  rep.is_operator = is_operator(t, cfg);
  rep.is_bounded = rep.is_operator;

  const Matrix form = (f.adjoint() * g - g.adjoint() * f) / Complex(0.0, 2.0);
  const Matrix defect = f.adjoint() * f - g.adjoint() * g;

  if (t.dim() > 0) {
    const Eigen::VectorXd form_eigs = hermitian_eigenvalues(form);
    const Eigen::VectorXd defect_eigs = hermitian_eigenvalues(defect);
    rep.dissipativity_margin = form_eigs(0);
    rep.contraction_margin = defect_eigs(0);
    rep.symmetry_defect = form_eigs.cwiseAbs().maxCoeff();
    rep.isometry_defect = defect_eigs.cwiseAbs().maxCoeff();
  }

  rep.is_dissipative = rep.dissipativity_margin >= -cfg.psd_tol;
  rep.is_symmetric = rep.symmetry_defect <= cfg.psd_tol;
  // dim T* = 2n - dim T, so only a graph of dimension n can be selfadjoint.
  rep.selfadjoint_gap = t.dim() == n ? gap(t, adjoint(t)) : 1.0;
  rep.is_selfadjoint = rep.is_symmetric && rep.selfadjoint_gap < cfg.gap_tol;

  rep.is_contraction = rep.is_operator && rep.contraction_margin >= -cfg.psd_tol;
  rep.is_isometry = rep.is_contraction && rep.isometry_defect <= cfg.psd_tol;
  rep.is_unitary = rep.is_isometry && dom(t, cfg).is_full() && ran(t, cfg).is_full();

  // ran(T + iI) = H.
  rep.is_maximal_dissipative =
      rep.is_dissipative && ran(shift(t, Complex(0.0, -1.0), cfg), cfg).dim() == n;

  if (!rep.is_dissipative) {
    rep.witness = graph_vector(t, min_eigenvector(form));
  } else if (!rep.is_contraction && t.dim() > 0) {
    rep.witness = graph_vector(t, min_eigenvector(defect));
  }
  return rep;
}

SpectralPointClass classify_point(const Relation& t, Complex z, const ToleranceConfig& cfg) {
  if (!dom(deficiency(t, z, cfg), cfg).is_zero()) return SpectralPointClass::Point;
  const Relation shifted = shift(t, z, cfg);
  if (ran(shifted, cfg).is_full()) return SpectralPointClass::Regular;
  return SpectralPointClass::Residual;
}

std::string_view to_string(SpectralPointClass c) {
  switch (c) {
    case SpectralPointClass::Regular: return "regular";
    case SpectralPointClass::Point: return "point";
    case SpectralPointClass::Residual: return "residual";
    case SpectralPointClass::QuasiRegularOnly: return "quasi-regular-only";
  }
  return "unknown";
}

}  // namespace lrel
