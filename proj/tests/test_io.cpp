#include <gtest/gtest.h>

#include <json.hpp>

#include "generators.hpp"
#include "lrel/io.hpp"

namespace lrel {
namespace {

using nlohmann::json;

const Complex kI(0.0, 1.0);

TEST(Io, ParsesImaginaryScalar) {
  const Relation t = io::parse_relation(R"({"dim": 1, "F": [[[1, 0]]], "G": [[[0, 1]]]})");
  EXPECT_LT(gap(t, from_operator(Matrix::Constant(1, 1, kI))), 1e-15);
}

TEST(Io, EmptyGeneratorsGiveZeroRelation) {
  const Relation t = io::parse_relation(R"({"dim": 3, "F": [], "G": []})");
  EXPECT_EQ(t.space_dim(), 3);
  EXPECT_EQ(t.dim(), 0);
}

TEST(Io, DocumentKeepsMetadata) {
  const io::RelationDocument doc = io::parse_relation_document(
      R"({"dim": 1, "F": [[[1, 0]]], "G": [[[2, 0]]], "name": "two",
          "tolerances": {"rank_tol": 1e-9, "psd_tol": 1e-9, "gap_tol": 1e-7}})");
  EXPECT_EQ(doc.name, "two");
  ASSERT_TRUE(doc.tolerances.has_value());
  EXPECT_DOUBLE_EQ(doc.tolerances->gap_tol, 1e-7);
  const io::RelationDocument again = io::parse_relation_document(io::emit_relation_document(doc));
  EXPECT_EQ(again.name, "two");
  EXPECT_EQ(again.f, doc.f);
  EXPECT_EQ(again.g, doc.g);
  EXPECT_DOUBLE_EQ(again.tolerances->rank_tol, 1e-9);
}

TEST(Io, RandomRoundTrips) {
  testing::Gen gen(601);
  for (int trial = 0; trial < 100; ++trial) {
    const Relation t = gen.relation(gen.uniform_int(1, 6));
    const Relation back = io::parse_relation(io::emit_relation(t, "r"));
    EXPECT_LT(gap(t, back), 1e-12) << "trial " << trial;
  }
}

TEST(Io, SubspaceRoundTrip) {
  testing::Gen gen(602);
  for (int trial = 0; trial < 30; ++trial) {
    const Subspace s = gen.subspace(gen.uniform_int(1, 7));
    EXPECT_LT(gap(io::parse_subspace(io::emit_subspace(s)), s), 1e-12);
  }
}

TEST(Io, MalformedJsonReportsByteOffset) {
  try {
    io::parse_relation(R"({"dim": 1, "F": [[[1, 0]]] "G": []})");
    FAIL() << "expected ParseError";
  } catch (const io::ParseError& e) {
    EXPECT_EQ(e.where().rfind("byte ", 0), 0u) << e.where();
  }
}

TEST(Io, DimensionMismatchReportsPointer) {
  try {
    io::parse_relation(R"({"dim": 2, "F": [[[1, 0]]], "G": [[[0, 0]]]})");
    FAIL() << "expected ParseError";
  } catch (const io::ParseError& e) {
    EXPECT_EQ(e.where(), "/F");
  }
}

TEST(Io, ShapeMismatchBetweenBlocks) {
  EXPECT_THROW(io::parse_relation(R"({"dim": 1, "F": [[[1, 0], [0, 0]]], "G": [[[0, 0]]]})"),
               io::ParseError);
}

TEST(Io, NonFiniteEntryRejected) {
  EXPECT_THROW(io::parse_relation(R"({"dim": 1, "F": [[[1e999, 0]]], "G": [[[0, 0]]]})"),
               io::ParseError);
}

TEST(Io, BadComplexEncodingRejected) {
  try {
    io::parse_relation(R"({"dim": 1, "F": [[1]], "G": [[[0, 0]]]})");
    FAIL() << "expected ParseError";
  } catch (const io::ParseError& e) {
    EXPECT_EQ(e.where(), "/F/0/0");
  }
}

TEST(Io, MissingFieldAndBadTolerances) {
  EXPECT_THROW(io::parse_relation(R"({"dim": 1, "F": [[[1, 0]]]})"), io::ParseError);
  EXPECT_THROW(io::parse_relation(R"([1, 2])"), io::ParseError);
  EXPECT_THROW(io::parse_relation_document(
                   R"({"dim": 1, "F": [], "G": [], "tolerances": {"gap_tol": -1}})"),
               io::ParseError);
}

TEST(Io, ReportsAreDeterministicAndParse) {
  const Relation t = from_operator((Matrix(2, 2) << 0, 0, 0, kI).finished());
  const ToleranceConfig cfg;
  const DecompositionResult r = dissipative_decompose(t, cfg);
  const std::string a = io::decomposition_report("dissipative", t, r, cfg, "diag");
  const std::string b = io::decomposition_report("dissipative", t, dissipative_decompose(t, cfg), cfg, "diag");
  EXPECT_EQ(a, b);
  const json j = json::parse(a);
  EXPECT_EQ(j["mode"], "dissipative");
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["decomposition"]["K"]["rank"], 1);
  for (const json& c : j["certificates"]) {
    EXPECT_TRUE(c.contains("residual"));
    EXPECT_TRUE(c.contains("tolerance"));
  }
  EXPECT_DOUBLE_EQ(j["tolerances"]["gap_tol"].get<double>(), cfg.gap_tol);
}

TEST(Io, ClassificationAndCertificationReports) {
  const ToleranceConfig cfg;
  const Relation t = from_pairs(Matrix::Zero(1, 1), Matrix::Ones(1, 1));
  const json c = json::parse(io::classification_report(classify(t, cfg), cfg, "line"));
  EXPECT_TRUE(c["classification"]["is_selfadjoint"].get<bool>());
  EXPECT_FALSE(c["classification"]["is_operator"].get<bool>());

  Matrix m(2, 2);
  m << 0, 1, 0, 0;
  const Relation jordan = from_operator(m);
  const Subspace k = Subspace::coordinate_span(2, 0, 0);
  const json cert = json::parse(io::certification_report(jordan, k, reduction_certificates(jordan, k, cfg), cfg));
  EXPECT_FALSE(cert["passed"].get<bool>());
  EXPECT_FALSE(io::as_certificates(reduction_certificates(jordan, k, cfg), cfg).empty());
}

}  // namespace
}  // namespace lrel
