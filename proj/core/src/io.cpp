#include "lrel/io.hpp"

#include <cmath>

#include <json.hpp>

namespace lrel::io {

using nlohmann::json;

namespace {

std::string ptr(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

Complex parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(where, "complex entry must be a two-element array [re, im]");
  }
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError(where, "non-finite entry");
  return {re, im};
}

// rows x cols complex matrix; `cols` < 0 means infer from the first row.
Matrix parse_matrix(const json& j, Index rows, Index cols, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of rows");
  if (j.empty() && (rows == 0 || cols <= 0)) return Matrix(rows, 0);
  if (static_cast<Index>(j.size()) != rows) {
    throw ParseError(where, "expected " + std::to_string(rows) + " rows, found " +
                                std::to_string(j.size()));
  }
  if (cols < 0) {
    if (!j[0].is_array()) throw ParseError(ptr(where, 0), "expected a row array");
    cols = static_cast<Index>(j[0].size());
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const json& row = j[r];
    if (!row.is_array()) throw ParseError(ptr(where, r), "expected a row array");
    if (static_cast<Index>(row.size()) != cols) {
      throw ParseError(ptr(where, r), "row has " + std::to_string(row.size()) +
                                          " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      m(static_cast<Index>(r), static_cast<Index>(c)) = parse_complex(row[c], ptr(ptr(where, r), c));
    }
  }
  return m;
}

json emit_matrix(const Matrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  } catch (const json::out_of_range& e) {
    throw ParseError("/", std::string("non-finite entry: ") + e.what());
  }
}

Index parse_dim(const json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("/", "document must be a JSON object");
  if (!doc.contains(key)) throw ParseError("/", std::string("missing field '") + key + "'");
  const json& d = doc[key];
  if (!d.is_number_integer() || d.get<long long>() < 0) {
    throw ParseError(std::string("/") + key, "must be a nonnegative integer");
  }
  return static_cast<Index>(d.get<long long>());
}

json tolerances_json(const ToleranceConfig& cfg) {
  return {{"rank_tol", cfg.rank_tol}, {"psd_tol", cfg.psd_tol}, {"gap_tol", cfg.gap_tol}};
}

json parts_json(const Relation& t, const ToleranceConfig& cfg) {
  const GraphParts p = graph_parts(t, cfg);
  return {{"graph", t.dim()}, {"dom", p.dom.dim()}, {"ran", p.ran.dim()},
          {"ker", p.ker.dim()}, {"mul", p.mul.dim()}};
}

json subspace_json(const Subspace& s) {
  return {{"dim", s.ambient_dim()}, {"rank", s.dim()}, {"basis", emit_matrix(s.frame())}};
}

json certificates_json(const std::vector<Certificate>& certs) {
  json arr = json::array();
  for (const auto& c : certs) {
    arr.push_back({{"name", c.name},
                   {"passed", c.passed},
                   {"residual", c.residual},
                   {"tolerance", c.tolerance}});
  }
  return arr;
}

json classification_json(const ClassificationReport& r) {
  json j = {{"is_operator", r.is_operator},
            {"is_bounded", r.is_bounded},
            {"is_contraction", r.is_contraction},
            {"is_isometry", r.is_isometry},
            {"is_unitary", r.is_unitary},
            {"is_dissipative", r.is_dissipative},
            {"is_symmetric", r.is_symmetric},
            {"is_selfadjoint", r.is_selfadjoint},
            {"is_maximal_dissipative", r.is_maximal_dissipative},
            {"residuals",
             {{"dissipativity_margin", r.dissipativity_margin},
              {"symmetry_defect", r.symmetry_defect},
              {"contraction_margin", r.contraction_margin},
              {"isometry_defect", r.isometry_defect},
              {"selfadjoint_gap", r.selfadjoint_gap}}}};
  if (r.witness) {
    json w = json::array();
    for (Index i = 0; i < r.witness->size(); ++i) w.push_back({(*r.witness)(i).real(), (*r.witness)(i).imag()});
    j["witness"] = std::move(w);
  }
  return j;
}

ToleranceConfig parse_tolerances(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "tolerances must be an object");
  ToleranceConfig cfg;
  auto read = [&](const char* key, double& slot) {
    if (!j.contains(key)) return;
    if (!j[key].is_number()) throw ParseError(where + "/" + key, "must be a number");
    slot = j[key].get<double>();
    if (!(slot >= 0.0) || !std::isfinite(slot)) {
      throw ParseError(where + "/" + key, "must be finite and nonnegative");
    }
  };
  read("rank_tol", cfg.rank_tol);
  read("psd_tol", cfg.psd_tol);
  read("gap_tol", cfg.gap_tol);
  return cfg;
}

}  // namespace

RelationDocument parse_relation_document(std::string_view text) {
  const json doc = parse_text(text);
  RelationDocument out;
  out.dim = parse_dim(doc, "dim");
  for (const char* key : {"F", "G"}) {
    if (!doc.contains(key)) throw ParseError("/", std::string("missing field '") + key + "'");
  }
  out.f = parse_matrix(doc["F"], out.dim, -1, "/F");
  out.g = parse_matrix(doc["G"], out.dim, out.f.cols(), "/G");
  if (out.g.cols() != out.f.cols()) throw ParseError("/G", "F and G differ in shape");
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("/name", "must be a string");
    out.name = doc["name"].get<std::string>();
  }
  if (doc.contains("tolerances")) out.tolerances = parse_tolerances(doc["tolerances"], "/tolerances");
  return out;
}

std::string emit_relation_document(const RelationDocument& doc) {
  json j = {{"dim", doc.dim}, {"F", emit_matrix(doc.f)}, {"G", emit_matrix(doc.g)}};
  if (!doc.name.empty()) j["name"] = doc.name;
  if (doc.tolerances) j["tolerances"] = tolerances_json(*doc.tolerances);
  return j.dump(2) + "\n";
}

Relation parse_relation(std::string_view text, const ToleranceConfig& cfg) {
  const RelationDocument doc = parse_relation_document(text);
  return from_pairs(doc.f, doc.g, doc.tolerances.value_or(cfg));
}

std::string emit_relation(const Relation& t, std::string_view name) {
  RelationDocument doc;
  doc.dim = t.space_dim();
  doc.f = t.F();
  doc.g = t.G();
  doc.name = std::string(name);
  return emit_relation_document(doc);
}

Subspace parse_subspace(std::string_view text, const ToleranceConfig& cfg) {
  const json doc = parse_text(text);
  const Index d = parse_dim(doc, "dim");
  if (!doc.contains("basis")) throw ParseError("/", "missing field 'basis'");
  return orthonormalize(parse_matrix(doc["basis"], d, -1, "/basis"), cfg);
}

std::string emit_subspace(const Subspace& s) {
  json j = {{"dim", s.ambient_dim()}, {"basis", emit_matrix(s.frame())}};
  return j.dump(2) + "\n";
}

std::vector<Certificate> as_certificates(const ReductionCertificates& c, const ToleranceConfig& cfg) {
  auto flag = [](std::string name, bool ok) {
    return Certificate{std::move(name), ok, ok ? 0.0 : 1.0, 0.5};
  };
  const double tol = cfg.gap_tol;
  const auto& ki = c.k_invariance;
  const auto& pi = c.kperp_invariance;
  return {
      Certificate{"reducing", c.reducing, c.reducing_residual, tol},
      Certificate{"K_invariant_dom", ki.dom_splits, ki.dom_residual, tol},
      Certificate{"K_invariant_mul", ki.mul_splits, ki.mul_residual, tol},
      Certificate{"K_invariant_restricted_domain", ki.restricted_domain,
                  ki.restricted_domain_residual, tol},
      Certificate{"Kperp_invariant_dom", pi.dom_splits, pi.dom_residual, tol},
      Certificate{"Kperp_invariant_mul", pi.mul_splits, pi.mul_residual, tol},
      Certificate{"Kperp_invariant_restricted_domain", pi.restricted_domain,
                  pi.restricted_domain_residual, tol},
      flag("reduces_adjoint", c.reduces_adjoint),
      flag("reduces_Z_plus_i", c.reduces_z_plus_i),
      flag("reduces_Z_minus_i", c.reduces_z_minus_i),
      Certificate{"parts_split", c.parts_split, c.parts_residual, tol},
      Certificate{"adjoint_distributes", c.adjoint_distributes, c.adjoint_residual, tol},
      Certificate{"adjoint_restricts", c.adjoint_restricts, c.adjoint_restrict_residual, tol},
  };
}

std::string classification_report(const ClassificationReport& rep, const ToleranceConfig& cfg,
                                   std::string_view name) {
  json j = {{"kind", "classification"},
            {"name", std::string(name)},
            {"tolerances", tolerances_json(cfg)},
            {"classification", classification_json(rep)}};
  return j.dump(2) + "\n";
}

std::string decomposition_report(std::string_view mode, const Relation& input,
                                 const DecompositionResult& r, const ToleranceConfig& cfg,
                                 std::string_view name) {
  const Subspace kperp = complement(r.k);
  json parts = {{"K", parts_json(r.part_k, cfg)}, {"K_perp", parts_json(r.part_kperp, cfg)}};
  json decomposition = {{"K", subspace_json(r.k)},
                        {"iterations", r.iterations},
                        {"parts", parts},
                        {"part_K_classification", classification_json(r.part_k_class)},
                        {"part_K_perp_classification", classification_json(r.part_kperp_class)}};
  if (r.wandering) decomposition["wandering"] = subspace_json(*r.wandering);

  std::vector<Certificate> certs = r.certificates;
  for (auto& c : as_certificates(r.reduction, cfg)) {
    c.name = "reduction." + c.name;
    certs.push_back(std::move(c));
  }
  bool ok = true;
  for (const auto& c : certs) ok = ok && c.passed;
  json j = {{"kind", "decomposition"},
            {"mode", std::string(mode)},
            {"name", std::string(name)},
            {"input", parts_json(input, cfg)},
            {"tolerances", tolerances_json(cfg)},
            {"classification", classification_json(classify(input, cfg))},
            {"decomposition", decomposition},
            {"certificates", certificates_json(certs)},
            {"passed", ok}};
  return j.dump(2) + "\n";
}

std::string certification_report(const Relation& t, const Subspace& k,
                                  const ReductionCertificates& certs, const ToleranceConfig& cfg,
                                  std::string_view name) {
  json j = {{"kind", "certification"},
            {"name", std::string(name)},
            {"input", parts_json(t, cfg)},
            {"subspace", subspace_json(k)},
            {"tolerances", tolerances_json(cfg)},
            {"certificates", certificates_json(as_certificates(certs, cfg))},
            {"passed", certs.all_pass()}};
  return j.dump(2) + "\n";
}

std::string example_report(const shift_model::ExampleReport& rep, const ToleranceConfig& cfg) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"residual", c.residual},
                      {"tolerance", c.tolerance}});
  }
  json samples = json::array();
  for (const auto& s : rep.spectral.point_samples) {
    samples.push_back({{"z", {s.z.real(), s.z.imag()}}, {"dim_ker_A_minus_z", s.dimension}});
  }
  json lower = json::array();
  for (const auto& s : rep.spectral.lower_half_reported) {
    lower.push_back({{"z", {s.z.real(), s.z.imag()}}, {"dim_ker_A_star_minus_conj_z", s.dimension}});
  }
  json j = {{"kind", "example"},
            {"example", "shift"},
            {"window", {{"N", rep.window.n}, {"margin", rep.window.margin}}},
            {"tolerances", tolerances_json(cfg)},
            {"checks", checks},
            {"decomposition",
             {{"K_rank", rep.decomposition.k.dim()},
              {"wandering_rank", rep.decomposition.wandering ? rep.decomposition.wandering->dim() : 0},
              {"iterations", rep.decomposition.iterations},
              {"certificates", certificates_json(rep.decomposition.certificates)}}},
            {"spectral_probe",
             {{"point_samples", samples},
              {"delta1_residual", rep.spectral.delta1_residual},
              {"lower_half_reported", lower}}},
            {"passed", rep.all_pass()}};
  return j.dump(2) + "\n";
}

}  // namespace lrel::io
