#include <gtest/gtest.h>

#include <array>

#include "generators.hpp"
#include "oracles.hpp"

namespace lrel {
namespace {

const Complex kI(0.0, 1.0);

Relation scalar(Complex a) { return from_operator(Matrix::Constant(1, 1, a)); }

Relation truncated_shift(Index n) {
  Matrix f = Matrix::Zero(n, n - 1);
  Matrix g = Matrix::Zero(n, n - 1);
  for (Index k = 0; k + 1 < n; ++k) {
    f(k, k) = 1;
    g(k + 1, k) = 1;
  }
  return from_pairs(f, g);
}

TEST(Classify, ImaginaryScalarIsDissipativeNotSymmetric) {
  const ClassificationReport r = classify(scalar(kI));
  EXPECT_TRUE(r.is_dissipative);
  EXPECT_FALSE(r.is_symmetric);
  EXPECT_TRUE(r.is_maximal_dissipative);
  EXPECT_NEAR(r.dissipativity_margin, 0.5, 1e-14);
}

TEST(Classify, PurelyMultivaluedLineIsSelfadjoint) {
  const ClassificationReport r = classify(from_pairs(Matrix::Zero(1, 1), Matrix::Ones(1, 1)));
  EXPECT_TRUE(r.is_selfadjoint);
  EXPECT_FALSE(r.is_operator);
  EXPECT_FALSE(r.is_bounded);
  EXPECT_FALSE(r.is_contraction);
}

TEST(Classify, UnitaryPlusStrictContraction) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = std::polar(1.0, 0.7);
  m(1, 1) = 0.4;
  const ClassificationReport r = classify(from_operator(m));
  EXPECT_TRUE(r.is_contraction);
  EXPECT_FALSE(r.is_isometry);
  EXPECT_FALSE(r.is_unitary);
  EXPECT_NEAR(r.contraction_margin, 0.0, 1e-14);
}

TEST(Classify, NonDissipativeHasWitness) {
  const ClassificationReport r = classify(scalar(-kI));
  ASSERT_FALSE(r.is_dissipative);
  ASSERT_TRUE(r.witness.has_value());
  const Vector w = *r.witness;
  EXPECT_LT(std::imag(std::conj(w(0)) * w(1)), 0.0);
}

TEST(Classify, TruncatedShiftIsIsometricNotUnitary) {
  const ClassificationReport r = classify(truncated_shift(6));
  EXPECT_TRUE(r.is_isometry);
  EXPECT_FALSE(r.is_unitary);
}

TEST(Classify, ImplicationsHoldOnRandomRelations) {
  testing::Gen gen(201);
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = gen.uniform_int(1, 6);
    Relation t;
    switch (trial % 6) {
      case 0: t = gen.relation(n); break;
      case 1: t = gen.dissipative(n); break;
      case 2: t = gen.symmetric(n); break;
      case 3: t = gen.selfadjoint(n); break;
      case 4: t = gen.contraction(n); break;
      default: t = gen.isometry(n); break;
    }
    const ClassificationReport r = classify(t);
    if (r.is_unitary) {
      EXPECT_TRUE(r.is_isometry);
    }
    if (r.is_isometry) {
      EXPECT_TRUE(r.is_contraction);
    }
    if (r.is_selfadjoint) {
      EXPECT_TRUE(r.is_symmetric);
    }
    if (r.is_symmetric) {
      EXPECT_TRUE(r.is_dissipative);
    }
    if (r.is_maximal_dissipative) {
      EXPECT_TRUE(r.is_dissipative);
    }
    EXPECT_EQ(r.is_bounded, r.is_operator);
    EXPECT_EQ(r.is_dissipative, oracle::dissipativity(t) >= -1e-10);
  }
}

TEST(Classify, GeneratorsProduceTheirClasses) {
  testing::Gen gen(202);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = gen.uniform_int(1, 6);
    EXPECT_TRUE(classify(gen.selfadjoint(n)).is_selfadjoint);
    EXPECT_TRUE(classify(gen.maximal_dissipative(n)).is_maximal_dissipative);
    EXPECT_TRUE(classify(gen.symmetric(n)).is_symmetric);
    EXPECT_TRUE(classify(gen.contraction(n)).is_contraction);
    EXPECT_TRUE(classify(gen.isometry(n)).is_isometry);
    EXPECT_TRUE(classify(from_operator(gen.unitary(n))).is_unitary);
  }
}

TEST(Classify, MaximalDissipativeDomainIsMulComplement) {
  testing::Gen gen(203);
  for (int trial = 0; trial < 100; ++trial) {
    const Relation t = gen.maximal_dissipative(gen.uniform_int(1, 7));
    ASSERT_TRUE(classify(t).is_maximal_dissipative);
    EXPECT_LT(gap(dom(t), complement(mul(t))), 1e-8);
  }
}

TEST(ClassifyPoint, NilpotentAtZeroIsPoint) {
  Matrix m(2, 2);
  m << 0, 1, 0, 0;
  EXPECT_EQ(classify_point(from_operator(m), 0.0), SpectralPointClass::Point);
}

TEST(ClassifyPoint, IdentityAtTwoIsRegular) {
  EXPECT_EQ(classify_point(from_operator(Matrix::Identity(3, 3)), 2.0), SpectralPointClass::Regular);
}

TEST(ClassifyPoint, TruncatedShiftAtZeroIsResidual) {
  EXPECT_EQ(classify_point(truncated_shift(8), 0.0), SpectralPointClass::Residual);
}

TEST(ClassifyPoint, Names) {
  EXPECT_EQ(to_string(SpectralPointClass::Residual), "residual");
  EXPECT_EQ(to_string(SpectralPointClass::QuasiRegularOnly), "quasi-regular-only");
}

// A residual point of T is an eigenvalue of T* at the conjugate point.
TEST(ClassifyPoint, ResidualPointsConjugateToAdjointEigenvalues) {
  testing::Gen gen(211);
  int residual_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = gen.uniform_int(1, 6);
    const Relation t = trial % 2 == 0 ? gen.relation(n) : gen.isometry(n);
    const std::array<Complex, 4> zs{0.0, kI, gen.complex_normal(), 1.0};
    for (Complex z : zs) {
      if (classify_point(t, z) != SpectralPointClass::Residual) continue;
      ++residual_seen;
      EXPECT_FALSE(dom(deficiency(adjoint(t), std::conj(z))).is_zero());
      EXPECT_EQ(classify_point(adjoint(t), std::conj(z)), SpectralPointClass::Point);
    }
  }
  EXPECT_GT(residual_seen, 20);
}

TEST(ClassifyPoint, RegularityIsConjugateSymmetric) {
  testing::Gen gen(212);
  for (int trial = 0; trial < 100; ++trial) {
    const Relation t = gen.relation(gen.uniform_int(1, 6));
    const Complex z = gen.complex_normal();
    const bool regular = classify_point(t, z) == SpectralPointClass::Regular;
    const bool conj_regular = classify_point(adjoint(t), std::conj(z)) == SpectralPointClass::Regular;
    EXPECT_EQ(regular, conj_regular);
  }
}

// Deficiency dimensions of a closed symmetric relation are constant on each
// half plane (sampled).
TEST(ClassifyPoint, DeficiencyDimensionConstantPerHalfPlane) {
  testing::Gen gen(213);
  const std::array<Complex, 3> upper{kI, 2.0 * kI, Complex(1, 1)};
  const std::array<Complex, 3> lower{-kI, -2.0 * kI, Complex(1, -1)};
  for (int trial = 0; trial < 100; ++trial) {
    const Relation t = gen.symmetric(gen.uniform_int(1, 7));
    const Relation ts = adjoint(t);
    auto defect = [&](Complex z) { return dom(deficiency(ts, std::conj(z))).dim(); };
    for (Complex z : upper) EXPECT_EQ(defect(z), defect(upper[0]));
    for (Complex z : lower) EXPECT_EQ(defect(z), defect(lower[0]));
  }
}

}  // namespace
}  // namespace lrel
