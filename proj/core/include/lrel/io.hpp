#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lrel/decompose.hpp"
#include "lrel/shift_model.hpp"

namespace lrel::io {

/// Malformed or inconsistent document. `where` is a byte offset for syntax
/// errors or a JSON pointer for structural ones.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// On-disk form of a relation: generator blocks F and G (n x r, complex
/// entries as [re, im]) plus optional metadata.
struct RelationDocument {
  Index dim = 0;
  Matrix f;
  Matrix g;
  std::string name;
  std::optional<ToleranceConfig> tolerances;
};

RelationDocument parse_relation_document(std::string_view text);
std::string emit_relation_document(const RelationDocument& doc);

Relation parse_relation(std::string_view text, const ToleranceConfig& cfg = {});
std::string emit_relation(const Relation& t, std::string_view name = {});

/// Subspace documents: {"dim": d, "basis": [[[re, im], ...], ...]} (d x r).
Subspace parse_subspace(std::string_view text, const ToleranceConfig& cfg = {});
std::string emit_subspace(const Subspace& s);

std::string classification_report(const ClassificationReport& rep, const ToleranceConfig& cfg,
                                   std::string_view name = {});
std::string decomposition_report(std::string_view mode, const Relation& input,
                                 const DecompositionResult& result, const ToleranceConfig& cfg,
                                 std::string_view name = {});
std::string certification_report(const Relation& t, const Subspace& k,
                                 const ReductionCertificates& certs, const ToleranceConfig& cfg,
                                 std::string_view name = {});
std::string example_report(const shift_model::ExampleReport& rep, const ToleranceConfig& cfg);

/// Reduction certificates flattened into named pass/fail entries.
std::vector<Certificate> as_certificates(const ReductionCertificates& certs,
                                         const ToleranceConfig& cfg);

}  // namespace lrel::io
