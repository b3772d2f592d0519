#include "cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "lrel/lrel.hpp"

namespace lrel::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Complex parse_zeta(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--zeta expects RE,IM");
  std::size_t used_re = 0;
  std::size_t used_im = 0;
  const std::string re = text.substr(0, comma);
  const std::string im = text.substr(comma + 1);
  const double r = std::stod(re, &used_re);
  const double i = std::stod(im, &used_im);
  if (used_re != re.size() || used_im != im.size()) {
    throw std::invalid_argument("--zeta expects RE,IM");
  }
  return {r, i};
}

struct Overrides {
  std::optional<double> rank_tol;
  std::optional<double> psd_tol;
  std::optional<double> gap_tol;

  ToleranceConfig apply(ToleranceConfig cfg) const {
    if (rank_tol) cfg.rank_tol = *rank_tol;
    if (psd_tol) cfg.psd_tol = *psd_tol;
    if (gap_tol) cfg.gap_tol = *gap_tol;
    cfg.validate();
    return cfg;
  }
};

struct Loaded {
  Relation relation;
  ToleranceConfig cfg;
  std::string name;
};

Loaded load_relation(const std::string& path, const Overrides& overrides) {
  const io::RelationDocument doc = io::parse_relation_document(read_file(path));
  Loaded l;
  l.cfg = overrides.apply(doc.tolerances.value_or(ToleranceConfig{}));
  l.relation = from_pairs(doc.f, doc.g, l.cfg);
  l.name = doc.name.empty() ? path : doc.name;
  return l;
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + output + "'");
  file << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear relations: classification, Z transform and canonical decompositions", "lrel"};
  app.require_subcommand(1);

  Overrides overrides;
  app.add_option("--rank-tol", overrides.rank_tol, "Relative singular-value cutoff");
  app.add_option("--psd-tol", overrides.psd_tol, "Eigenvalue floor for semidefiniteness");
  app.add_option("--gap-tol", overrides.gap_tol, "Projector distance for subspace equality");

  std::string input;
  std::string output;

  auto* classify_cmd = app.add_subcommand("classify", "Print the classification report of a relation");
  classify_cmd->add_option("file", input, "Relation document")->required();
  classify_cmd->add_option("-o,--output", output, "Write the report here instead of stdout");

  std::string zeta_text;
  auto* z_cmd = app.add_subcommand("ztransform", "Write the Z transform of a relation");
  z_cmd->add_option("--zeta", zeta_text, "Transform parameter as RE,IM")->required();
  z_cmd->add_option("file", input, "Relation document")->required();
  z_cmd->add_option("-o,--output", output, "Write the relation here instead of stdout");

  std::string mode;
  auto* dec_cmd = app.add_subcommand("decompose", "Decompose a relation and certify the result");
  dec_cmd->add_option("--mode", mode, "nfl | wold | dissipative | symmetric")
      ->required()
      ->check(CLI::IsMember({"nfl", "wold", "dissipative", "symmetric"}));
  dec_cmd->add_option("file", input, "Relation document")->required();
  dec_cmd->add_option("-o,--output", output, "Write the report here instead of stdout");

  std::string subspace_path;
  auto* cert_cmd = app.add_subcommand("certify", "Run invariance and reduction certificates");
  cert_cmd->add_option("--subspace", subspace_path, "Subspace document")->required();
  cert_cmd->add_option("file", input, "Relation document")->required();
  cert_cmd->add_option("-o,--output", output, "Write the report here instead of stdout");

  std::string example_name;
  shift_model::WindowConfig window;
  auto* ex_cmd = app.add_subcommand("example", "Run a built-in worked example");
  ex_cmd->add_option("name", example_name, "Example name")
      ->required()
      ->check(CLI::IsMember({"shift"}));
  ex_cmd->add_option("--n", window.n, "Truncation dimension N")->capture_default_str();
  ex_cmd->add_option("--margin", window.margin, "Edge indices excluded from assertions")
      ->capture_default_str();
  ex_cmd->add_option("--report", output, "Write the report here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitInputError;
  }

  try {
    if (classify_cmd->parsed()) {
      const Loaded l = load_relation(input, overrides);
      emit(io::classification_report(classify(l.relation, l.cfg), l.cfg, l.name), output, out);
      return kExitOk;
    }
    if (z_cmd->parsed()) {
      const Complex zeta = parse_zeta(zeta_text);
      const Loaded l = load_relation(input, overrides);
      emit(io::emit_relation(z_transform(l.relation, zeta, l.cfg), l.name), output, out);
      return kExitOk;
    }
    if (dec_cmd->parsed()) {
      const Loaded l = load_relation(input, overrides);
      DecompositionResult r;
      if (mode == "nfl") {
        r = nfl_decompose(l.relation, l.cfg);
      } else if (mode == "wold") {
        r = wold_decompose(l.relation, l.cfg);
      } else if (mode == "dissipative") {
        r = dissipative_decompose(l.relation, l.cfg);
      } else {
        r = symmetric_wold_decompose(l.relation, l.cfg);
      }
      emit(io::decomposition_report(mode, l.relation, r, l.cfg, l.name), output, out);
      bool ok = r.all_certificates_pass();
      for (const auto& c : io::as_certificates(r.reduction, l.cfg)) ok = ok && c.passed;
      return ok ? kExitOk : kExitCertificateFailed;
    }
    if (cert_cmd->parsed()) {
      const Loaded l = load_relation(input, overrides);
      const Subspace k = io::parse_subspace(read_file(subspace_path), l.cfg);
      if (k.ambient_dim() != l.relation.space_dim()) {
        throw DimensionError("subspace and relation live in different spaces");
      }
      const ReductionCertificates certs = reduction_certificates(l.relation, k, l.cfg);
      emit(io::certification_report(l.relation, k, certs, l.cfg, l.name), output, out);
      return certs.all_pass() ? kExitOk : kExitCertificateFailed;
    }
    if (ex_cmd->parsed()) {
      window.validate();
      const ToleranceConfig cfg = overrides.apply({});
      const shift_model::ExampleReport rep = shift_model::run_example(window, cfg);
      emit(io::example_report(rep, cfg), output, out);
      return rep.all_pass() ? kExitOk : kExitCertificateFailed;
    }
  } catch (const io::ParseError& e) {
    err << "lrel: malformed document at " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "lrel: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace lrel::cli
