#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "reference.hpp"
#include "rqc/errors.hpp"
#include "rqc/families.hpp"
#include "rqc/xstate.hpp"

using namespace rqc;

namespace {

bool has_violation(const ValidationReport& rep, const std::string& name) {
  for (const auto& v : rep.violations)
    if (v.constraint == name) return true;
  return false;
}

XStateParams werner(double z) { return make_state({Family::Werner, z}); }

}  // namespace

TEST(Validate, MaximallyMixedIsValid) {
  EXPECT_TRUE(validate_xstate(XStateParams{}).valid());
  EXPECT_EQ(validate_xstate(XStateParams{}).describe(), "valid");
}

TEST(Validate, CoherenceAboveBoundIsRejected) {
  const XStateParams p{0.5, 0, 0, 0.5, 0.6, 0};
  const auto rep = validate_xstate(p);
  ASSERT_FALSE(rep.valid());
  ASSERT_EQ(rep.violations.size(), 1u);
  EXPECT_EQ(rep.violations[0].constraint, "coherence_r");
  EXPECT_NEAR(rep.violations[0].magnitude, 0.1, 1e-15);
}

TEST(Validate, WernerHalfIsValid) { EXPECT_TRUE(validate_xstate(werner(0.5)).valid()); }

TEST(Validate, ReportsEveryBrokenConstraint) {
  const XStateParams p{-0.1, 0.3, 0.3, 0.3, 0, 0.5};
  const auto rep = validate_xstate(p);
  EXPECT_TRUE(has_violation(rep, "a_nonnegative"));
  EXPECT_TRUE(has_violation(rep, "normalization"));
  EXPECT_TRUE(has_violation(rep, "coherence_s"));
  EXPECT_FALSE(has_violation(rep, "coherence_r"));
}

TEST(Validate, ToleranceIsOneEMinus12) {
  XStateParams p{0.25 + 5e-13, 0.25, 0.25, 0.25, 0, 0};
  EXPECT_TRUE(validate_xstate(p).valid());
  p.a = 0.25 + 5e-12;
  EXPECT_TRUE(has_violation(validate_xstate(p), "normalization"));
}

TEST(Validate, NanIsNeverValid) {
  XStateParams p;
  p.r = std::numeric_limits<double>::quiet_NaN();
  EXPECT_FALSE(validate_xstate(p).valid());
}

TEST(Validate, BlochRange) {
  EXPECT_TRUE(validate_bloch({}).valid());
  EXPECT_TRUE(has_violation(validate_bloch({1.5, 0, 0, 0, 0}), "t30_range"));
  // every field in range but the reconstructed state is not positive
  EXPECT_FALSE(validate_bloch({0, 0, 1, 1, 1}).valid());
}

TEST(Validate, RequireValidThrowsWithReport) {
  try {
    require_valid(XStateParams{0.5, 0, 0, 0.5, 0.6, 0});
    FAIL() << "expected InvalidState";
  } catch (const InvalidState& e) {
    EXPECT_FALSE(e.report().valid());
    EXPECT_NE(std::string(e.what()).find("coherence_r"), std::string::npos);
  }
}

TEST(Validate, DensityChecks) {
  EXPECT_TRUE(validate_density(DensityMatrix{}).valid());
  Matrix4c m = Matrix4c::Identity() / 4.0;
  m(0, 1) = Complex(0.1, 0.0);
  EXPECT_TRUE(has_violation(validate_density(DensityMatrix(m)), "hermitian"));
  m = Matrix4c::Identity() / 2.0;
  EXPECT_TRUE(has_violation(validate_density(DensityMatrix(m)), "trace"));
  m = Matrix4c::Zero();
  m(0, 0) = 1.2;
  m(1, 1) = -0.2;
  EXPECT_TRUE(has_violation(validate_density(DensityMatrix(m)), "positive_semidefinite"));
}

TEST(Bloch, MaximallyMixedIsZero) {
  const BlochX b = xstate_to_bloch(XStateParams{});
  EXPECT_EQ(test::max_bloch_diff(b, BlochX{}), 0.0);
}

TEST(Bloch, MnmsCoefficients) {
  for (double x : {0.0, 0.3, 0.7, 1.0}) {
    const BlochX b = xstate_to_bloch(make_state({Family::Mnms, x}));
    EXPECT_NEAR(test::max_bloch_diff(b, BlochX{0, 0, x, -x, 1}), 0.0, 1e-15) << x;
  }
}

TEST(Bloch, MemsIsAntisymmetric) {
  for (double x : {0.0, 0.2, 0.5, 2.0 / 3.0, 0.8, 1.0}) {
    const BlochX b = xstate_to_bloch(make_state({Family::Mems, x}));
    EXPECT_NEAR(b.t30, 1 - 2 * mems_chi(x), 1e-15);
    EXPECT_NEAR(b.t03, -(1 - 2 * mems_chi(x)), 1e-15);
  }
}

TEST(Bloch, ZerosGiveMaximallyMixed) {
  EXPECT_EQ(test::max_param_diff(bloch_to_xstate({}), XStateParams{}), 0.0);
}

TEST(Bloch, WernerFromBloch) {
  const double z = 0.37;
  const XStateParams p = bloch_to_xstate({0, 0, -z, -z, -z});
  EXPECT_LT(test::max_param_diff(p, werner(z)), 1e-16);
}

TEST(Bloch, InvalidInputsThrow) {
  EXPECT_THROW(xstate_to_bloch(XStateParams{0.5, 0, 0, 0.5, 0.6, 0}), InvalidState);
  EXPECT_THROW(bloch_to_xstate({2, 0, 0, 0, 0}), InvalidState);
}

TEST(BlochProperty, RoundTripBothWays) {
  test::XStateGen gen(11);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const XStateParams p = gen.next();
    const BlochX b = xstate_to_bloch(p);
    worst = std::max(worst, test::max_param_diff(bloch_to_xstate(b), p));
    worst = std::max(worst, test::max_bloch_diff(xstate_to_bloch(bloch_to_xstate(b)), b));
  }
  EXPECT_LT(worst, 1e-14);
}

TEST(Matrix, MaximallyMixed) {
  const Matrix4c m = xstate_to_matrix(XStateParams{}).matrix();
  EXPECT_LT((m - Matrix4c::Identity() / 4.0).norm(), 1e-16);
}

TEST(Matrix, BellStateIsProjector) {
  const Matrix4c m = xstate_to_matrix({0.5, 0, 0, 0.5, 0.5, 0}).matrix();
  EXPECT_LT((m * m - m).norm(), 1e-15);
}

TEST(Matrix, MemsPoint8) {
  const Matrix4c m = xstate_to_matrix(make_state({Family::Mems, 0.8})).matrix();
  Matrix4c ref = Matrix4c::Zero();
  ref(0, 0) = 0.4;
  ref(1, 1) = 0.2;
  ref(3, 3) = 0.4;
  ref(0, 3) = ref(3, 0) = 0.4;
  EXPECT_LT((m - ref).norm(), 1e-15);
}

TEST(Matrix, RoundTripThroughMatrix) {
  test::XStateGen gen(12);
  for (int i = 0; i < 500; ++i) {
    XStateParams p = gen.next();
    p.r = std::abs(p.r);
    p.s = std::abs(p.s);
    EXPECT_LT(test::max_param_diff(matrix_to_xstate(xstate_to_matrix(p)), p), 1e-15);
  }
}

TEST(Matrix, ComplexCoherencesReduceToModulus) {
  Matrix4c m = xstate_to_matrix({0.3, 0.2, 0.2, 0.3, 0, 0}).matrix();
  m(0, 3) = Complex(0.0, 0.25);
  m(3, 0) = Complex(0.0, -0.25);
  m(1, 2) = Complex(-0.1, 0.1);
  m(2, 1) = Complex(-0.1, -0.1);
  const XStateParams p = matrix_to_xstate(DensityMatrix(m));
  EXPECT_NEAR(p.r, 0.25, 1e-16);
  EXPECT_NEAR(p.s, std::sqrt(0.02), 1e-16);
}

TEST(Matrix, NonXMatrixIsRejected) {
  Matrix4c m = Matrix4c::Identity() / 4.0;
  m(0, 1) = m(1, 0) = 0.1;
  EXPECT_THROW(matrix_to_xstate(DensityMatrix(m)), InvalidInput);
}

TEST(MatrixProperty, OutputsPassDensityInvariants) {
  test::XStateGen gen(13);
  for (int i = 0; i < 2000; ++i) {
    const auto rep = validate_density(xstate_to_matrix(gen.next()));
    ASSERT_TRUE(rep.valid()) << rep.describe();
  }
}

TEST(Fano, MaximallyMixed) {
  const FanoTable t = fano_coefficients(DensityMatrix{});
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) EXPECT_NEAR(t[mu][nu], mu == 0 && nu == 0 ? 1.0 : 0.0, 1e-16);
}

TEST(Fano, BellPhiPlus) {
  const FanoTable t = fano_coefficients(xstate_to_matrix({0.5, 0, 0, 0.5, 0.5, 0}));
  EXPECT_NEAR(t[1][1], 1.0, 1e-15);
  EXPECT_NEAR(t[2][2], -1.0, 1e-15);
  EXPECT_NEAR(t[3][3], 1.0, 1e-15);
  EXPECT_NEAR(t[1][2], 0.0, 1e-15);
  EXPECT_NEAR(t[3][0], 0.0, 1e-15);
}

TEST(FanoProperty, AgreesWithBlochOnXSlots) {
  test::XStateGen gen(14);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const XStateParams p = gen.next();
    const FanoTable t = fano_coefficients(xstate_to_matrix(p));
    const BlochX b = xstate_to_bloch(p);
    worst = std::max(worst, test::max_bloch_diff(b, {t[3][0], t[0][3], t[1][1], t[2][2], t[3][3]}));
  }
  EXPECT_LT(worst, 1e-14);
}

TEST(Classical, Examples) {
  EXPECT_TRUE(is_classical({0.2, -0.2, 0, 0, 0.5}));
  EXPECT_FALSE(is_classical(xstate_to_bloch(werner(0.5))));
  EXPECT_TRUE(is_classical({0, 0, 1e-13, -1e-13, 0}));
  EXPECT_FALSE(is_classical({0, 0, 1e-13, 0, 0}, 1e-14));
}

TEST(Pauli, Algebra) {
  for (int i = 1; i <= 3; ++i) EXPECT_LT((pauli(i) * pauli(i) - Matrix2c::Identity()).norm(), 1e-16);
  EXPECT_LT((pauli(1) * pauli(2) - Complex(0, 1) * pauli(3)).norm(), 1e-16);
  EXPECT_THROW(pauli(4), InvalidInput);
}
