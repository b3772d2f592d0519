#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"

namespace lrel::shift_model {
namespace {

const Complex kI(0.0, 1.0);

WindowConfig window(Index n, Index margin = 4) {
  WindowConfig w;
  w.n = n;
  w.margin = margin;
  return w;
}

TEST(WindowConfigTest, Validation) {
  EXPECT_NO_THROW(window(8, 2).validate());
  EXPECT_THROW(window(7, 2).validate(), std::invalid_argument);
  EXPECT_THROW(window(16, 1).validate(), std::invalid_argument);
  EXPECT_THROW(window(8, 8).validate(), std::invalid_argument);
  EXPECT_EQ(window(64).window_size(), 60);
}

TEST(Builders, DeltaIsOneBased) {
  const WindowConfig w = window(10);
  EXPECT_EQ(delta(w, 1)(0), Complex(1.0));
  EXPECT_EQ(delta(w, 10)(9), Complex(1.0));
  EXPECT_THROW(delta(w, 0), DimensionError);
  EXPECT_THROW(delta(w, 11), DimensionError);
}

TEST(Builders, ShiftIsIsometricNotUnitary) {
  const WindowConfig w = window(16);
  const Relation s = build_shift(w);
  const ClassificationReport c = classify(s);
  EXPECT_TRUE(c.is_isometry);
  EXPECT_FALSE(c.is_unitary);
  EXPECT_FALSE(dom(s).is_full());
  EXPECT_TRUE(ker(s).is_zero());
  EXPECT_LT(gap(ran(s), span_range(w, 2, 16)), 1e-14);
  EXPECT_LT(gap(complement(ran(s)), span_range(w, 1, 1)), 1e-14);
}

TEST(Builders, AIsSymmetricOperator) {
  const WindowConfig w = window(16);
  const Relation a = build_A(w);
  const ClassificationReport c = classify(a);
  EXPECT_TRUE(c.is_symmetric);
  EXPECT_TRUE(c.is_operator);
  EXPECT_FALSE(dom(a).is_full());
}

TEST(Builders, TransformOfAIsShift) {
  for (Index n : {8, 16, 64}) {
    const WindowConfig w = window(n, 2);
    const Relation za = z_transform(build_A(w), kI);
    EXPECT_LT(gap(za, build_shift(w)), 1e-12) << n;
    EXPECT_LT(window_assert(za, build_shift(w), w).residual, 1e-12) << n;
  }
}

TEST(Builders, DeficiencyWindowIsDeltaOne) {
  const WindowConfig w = window(32);
  const Subspace d = dom(deficiency(adjoint(build_A(w)), -kI));
  const WindowVerdict v = window_assert_expected(d, window_span(w, 1, 1), w);
  EXPECT_TRUE(v.passed);
  EXPECT_LT(v.residual, 1e-12);
}

TEST(Builders, BYAndAInfinity) {
  const WindowConfig w = window(24);
  const Relation b = build_B(w);
  const Relation y = build_Y(w);
  const Relation a_inf = build_A_inf(w);
  EXPECT_TRUE(contains(k_space(w), ran(b)));
  EXPECT_LT(gap(dom(b), intersect(dom(build_A(w)), k_space(w))), 1e-12);
  EXPECT_EQ(y.dim(), 1);
  EXPECT_LT(gap(mul(y), span_range(w, 1, 1)), 1e-14);
  const ClassificationReport c = classify(a_inf);
  EXPECT_TRUE(c.is_symmetric);
  EXPECT_FALSE(c.is_operator);
  EXPECT_LT(gap(mul(a_inf), span_range(w, 1, 1)), 1e-12);
  EXPECT_LT(gap(a_inf, graph_sum(b, y)), 1e-14);
}

TEST(Builders, AdjointOfBWithinK) {
  const WindowConfig w = window(24);
  const Relation b = build_B(w);
  const Relation lhs = adjoint_within(b, k_space(w));
  const Relation rhs = orthogonal_sum(b, eigen_pair(w, 2, -kI));
  EXPECT_LT(window_assert(lhs, rhs, w).residual, 1e-10);
}

TEST(Builders, AdjointOfBIsAdjointOfAPlusY) {
  const WindowConfig w = window(24);
  const WindowVerdict v = window_assert(adjoint(build_B(w)), graph_sum(adjoint(build_A(w)), build_Y(w)), w);
  EXPECT_TRUE(v.passed);
  EXPECT_LT(v.residual, 1e-10);
}

TEST(Window, SpanPastWindowThrows) {
  const WindowConfig w = window(16);
  EXPECT_NO_THROW(window_span(w, 1, 12));
  EXPECT_THROW(window_span(w, 1, 13), DimensionError);
  EXPECT_EQ(window_span(w, 2, 5).ambient_dim(), 12);
  EXPECT_EQ(window_span(w, 2, 5).dim(), 4);
}

TEST(Window, CompressionDropsEdgeCoordinates) {
  const WindowConfig w = window(16);
  EXPECT_TRUE(compress_to_window(span_range(w, 13, 16), w).is_zero());
  EXPECT_LT(gap(compress_to_window(span_range(w, 1, 3), w), window_span(w, 1, 3)), 1e-14);
}

// The stacked window rows of A* have a cluster of unit singular values that
// some SVD back ends split wrongly.
TEST(Window, CompressedAdjointSpansEveryPair) {
  const WindowConfig w = window(16);
  const Relation as = adjoint(build_A(w));
  const Index m = w.window_size();
  Matrix stacked(2 * m, as.dim());
  stacked << as.F().topRows(m), as.G().topRows(m);
  const Relation c = compress_to_window(as, w);
  EXPECT_EQ(c.dim(), oracle::rank(stacked));
  const Matrix& q = c.graph().frame();
  EXPECT_LT(oracle::norm2(stacked - q * (q.adjoint() * stacked)), 1e-12);
}

TEST(Window, AssertDetectsInteriorDifference) {
  const WindowConfig w = window(16);
  EXPECT_FALSE(window_assert(span_range(w, 1, 2), span_range(w, 1, 3), w).passed);
  EXPECT_TRUE(window_assert(span_range(w, 1, 14), span_range(w, 1, 16), w).passed);
}

TEST(Probe, PointSpectrumEmptyAndDeltaOne) {
  const SpectralProbeReport r = spectral_window_probe(window(64));
  EXPECT_TRUE(r.point_spectrum_empty);
  EXPECT_EQ(r.point_samples.size(), 5u);
  for (const SpectralSample& s : r.point_samples) EXPECT_EQ(s.dimension, 0);
  EXPECT_TRUE(r.delta1_eigenvector);
  EXPECT_LT(r.delta1_residual, 1e-12);
  EXPECT_FALSE(r.lower_half_reported.empty());
}

TEST(Probe, KernelAtIMatchesRankOracle) {
  const WindowConfig w = window(64);
  const Relation shifted = shift(build_A(w), kI);
  const Matrix f = shifted.F();
  const Matrix g = shifted.G();
  // ker(A - i) is nonzero iff some nonzero graph combination has F c != 0, G c = 0.
  const Index rank_g = oracle::rank(g);
  const Index rank_fg = oracle::rank([&] {
    Matrix m(2 * w.n, f.cols());
    m << f, g;
    return m;
  }());
  EXPECT_EQ(rank_g, rank_fg);
}

TEST(Example, PassesForGrowingN) {
  for (Index n : {16, 32, 64}) {
    const ExampleReport r = run_example(window(n));
    for (const ExampleCheck& c : r.checks) {
      EXPECT_TRUE(c.passed) << "N=" << n << " " << c.name << " residual " << c.residual;
    }
    EXPECT_TRUE(r.all_pass());
    ASSERT_NE(r.find("Z_i(A)_is_shift"), nullptr);
    EXPECT_LT(r.find("Z_i(A)_is_shift")->residual, 1e-12);
    EXPECT_LT(r.find("A_inf*_decomposed")->residual, 1e-10);
    EXPECT_EQ(r.find("no_such_check"), nullptr);
  }
}

TEST(Example, DecompositionWindows) {
  const WindowConfig w = window(32);
  const ExampleReport r = run_example(w);
  const DecompositionResult& d = r.decomposition;
  ASSERT_TRUE(d.wandering.has_value());
  EXPECT_TRUE(window_assert_expected(*d.wandering, window_span(w, 2, 2), w).passed);
  EXPECT_TRUE(window_assert_expected(d.k, window_span(w, 2, w.window_size()), w).passed);
  EXPECT_LT(gap(complement(d.k), span_range(w, 1, 1)), 1e-10);
  EXPECT_LT(gap(d.part_kperp, build_Y(w)), 1e-10);
  EXPECT_TRUE(d.part_kperp_class.is_selfadjoint);
}

}  // namespace
}  // namespace lrel::shift_model
