#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "reference.hpp"
#include "rqc/correlations.hpp"
#include "rqc/errors.hpp"
#include "rqc/families.hpp"
#include "rqc/noise.hpp"

using namespace rqc;

namespace {

const double kOmega4 = 7.93725393319377177;  // 3 sqrt 7
const double kZeros4[] = {0.213691557840896738, 0.609495028415472055, 1.00529849899004737,
                          1.40110196956462269};

double off_x_max(const Matrix4c& m) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && i + j != 3) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

}  // namespace

TEST(Noise, Names) {
  EXPECT_EQ(noise_name(RtnNoise{}), "rtn");
  EXPECT_EQ(noise_name(MounNoise{}), "moun");
  EXPECT_EQ(noise_name(MarkovNoise{}), "markov");
}

TEST(Noise, ValidationRejectsBadRates) {
  EXPECT_THROW(validate_noise(RtnNoise{0.5}), InvalidInput);
  EXPECT_THROW(validate_noise(RtnNoise{0.3}), InvalidInput);
  EXPECT_THROW(validate_noise(MounNoise{0.0}), InvalidInput);
  EXPECT_THROW(validate_noise(MarkovNoise{-1.0}), InvalidInput);
  EXPECT_THROW(validate_noise(RtnNoise{std::nan("")}), InvalidInput);
  EXPECT_NO_THROW(validate_noise(RtnNoise{0.51}));
}

TEST(Lambda, StartsAtOne) {
  for (const NoiseModel& n : {NoiseModel{RtnNoise{}}, NoiseModel{MounNoise{3.0}}, NoiseModel{MarkovNoise{}}})
    EXPECT_EQ(lambda_of_t(n, 0.0), 1.0);
}

TEST(Lambda, NegativeTimeThrows) { EXPECT_THROW(lambda_of_t(RtnNoise{}, -0.1), InvalidInput); }

TEST(Lambda, RtnFrequency) {
  EXPECT_NEAR(rtn_frequency(RtnNoise{4.0}), 3 * std::sqrt(7.0), 1e-12);
  EXPECT_NEAR(rtn_frequency(RtnNoise{4.0}), kOmega4, 1e-14);
}

TEST(Lambda, MatchesReferenceForms) {
  for (int i = 0; i <= 500; ++i) {
    const double t = i * 0.01;
    EXPECT_NEAR(lambda_of_t(RtnNoise{4.0}, t), test::rtn_lambda_ref(4.0, t), 1e-15);
    EXPECT_NEAR(lambda_of_t(RtnNoise{1.3}, t), test::rtn_lambda_ref(1.3, t), 1e-15);
    EXPECT_NEAR(lambda_of_t(MounNoise{2.0}, t), test::moun_lambda_ref(2.0, t), 1e-14);
    EXPECT_NEAR(lambda_of_t(MarkovNoise{0.7}, t), std::exp(-0.7 * t), 1e-15);
  }
}

TEST(Lambda, MounPositiveAndDecreasing) {
  double prev = 1.0;
  for (int i = 1; i <= 5000; ++i) {
    const double l = lambda_of_t(MounNoise{1.0}, i * 0.01);
    ASSERT_GT(l, 0.0);
    ASSERT_LT(l, prev);
    prev = l;
  }
}

TEST(Lambda, RtnBounded) {
  for (int i = 0; i <= 50000; ++i) ASSERT_LE(std::abs(lambda_of_t(RtnNoise{4.0}, i * 1e-3)), 1.0);
}

TEST(Zeros, RtnFrozen) {
  const auto z = lambda_zeros(RtnNoise{4.0}, 1.5);
  ASSERT_EQ(z.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(z[k], kZeros4[k], 1e-14);
  EXPECT_NEAR(z[0], (std::numbers::pi - std::atan(kOmega4)) / kOmega4, 1e-14);
  EXPECT_LT(std::abs(lambda_of_t(RtnNoise{4.0}, z[0])), 1e-12);
}

TEST(Zeros, SpacingIsHalfPeriod) {
  const auto z = lambda_zeros(RtnNoise{4.0}, 3.0);
  ASSERT_EQ(z.size(), 8u);
  for (std::size_t k = 1; k < z.size(); ++k) EXPECT_NEAR(z[k] - z[k - 1], std::numbers::pi / kOmega4, 1e-13);
}

TEST(Zeros, AgreesWithIndependentBisection) {
  for (double a : {0.8, 2.0, 4.0, 10.0}) {
    const double w = std::sqrt(4 * a * a - 1);
    const auto z = lambda_zeros(RtnNoise{a}, 3.0);
    ASSERT_FALSE(z.empty());
    for (std::size_t k = 0; k < z.size(); ++k) {
      const double lo = k * std::numbers::pi / w, hi = lo + std::numbers::pi / w;
      const double ref = test::bisect_ref([&](double t) { return test::rtn_lambda_ref(a, t); },
                                          std::max(lo, 1e-12), hi);
      EXPECT_NEAR(z[k], ref, 1e-13) << a << " " << k;
    }
  }
}

TEST(Zeros, NoneForMonotoneNoise) {
  EXPECT_TRUE(lambda_zeros(MounNoise{}, 50.0).empty());
  EXPECT_TRUE(lambda_zeros(MounNoise{10.0}, 50.0).empty());
  EXPECT_TRUE(lambda_zeros(MarkovNoise{}, 50.0).empty());
}

TEST(Zeros, HorizonBeforeFirstZero) { EXPECT_TRUE(lambda_zeros(RtnNoise{4.0}, 0.2).empty()); }

TEST(Zeros, BadHorizonThrows) { EXPECT_THROW(lambda_zeros(RtnNoise{}, 0.0), InvalidInput); }

TEST(ZerosProperty, SignChangesOnlyAtZeros) {
  for (double a : {1.0, 4.0, 7.5}) {
    const auto z = lambda_zeros(RtnNoise{a}, 5.0);
    std::vector<double> edges{0.0};
    edges.insert(edges.end(), z.begin(), z.end());
    edges.push_back(5.0);
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
      const double sign = k % 2 == 0 ? 1.0 : -1.0;
      for (int i = 1; i < 50; ++i) {
        const double t = edges[k] + (edges[k + 1] - edges[k]) * i / 50.0;
        ASSERT_GT(sign * lambda_of_t(RtnNoise{a}, t), 0.0) << a << " t=" << t;
      }
    }
  }
}

TEST(Kraus, Limits) {
  const KrausPair id = kraus_pair(1.0);
  EXPECT_LT((id.k0 - Matrix2c::Identity()).norm(), 1e-16);
  EXPECT_LT(id.k1.norm(), 1e-16);
  const KrausPair flip = kraus_pair(-1.0);
  EXPECT_LT(flip.k0.norm(), 1e-16);
  EXPECT_LT((flip.k1 - pauli(3)).norm(), 1e-16);
  const KrausPair half = kraus_pair(0.0);
  EXPECT_NEAR(half.k0.norm(), half.k1.norm(), 1e-16);
  EXPECT_THROW(kraus_pair(1.01), InvalidInput);
}

TEST(KrausProperty, Completeness) {
  for (int i = 0; i <= 200; ++i) {
    const KrausPair k = kraus_pair(-1.0 + i / 100.0);
    EXPECT_LT((k.k0.adjoint() * k.k0 + k.k1.adjoint() * k.k1 - Matrix2c::Identity()).norm(), 1e-12);
  }
}

TEST(Channel, IdentityAtOne) {
  const DensityMatrix rho = xstate_to_matrix(make_state({Family::Mems, 0.4}));
  EXPECT_LT((apply_common_bath(rho, 1.0).matrix() - rho.matrix()).norm(), 1e-16);
}

TEST(Channel, FullDephasingKeepsDiagonal) {
  const DensityMatrix rho = xstate_to_matrix(make_state({Family::Werner, 0.9}));
  const Matrix4c out = apply_common_bath(rho, 0.0).matrix();
  Matrix4c diag = rho.matrix().diagonal().asDiagonal();
  EXPECT_LT((out - diag).norm(), 1e-15);
}

TEST(Channel, ActsOnGeneralStates) {
  // |+>|+>: coherences between |00> and |01> survive with weight Lambda
  Eigen::Vector4cd psi = Eigen::Vector4cd::Constant(0.5);
  const DensityMatrix rho(psi * psi.adjoint());
  const Matrix4c out = apply_common_bath(rho, 0.6).matrix();
  EXPECT_NEAR(out(0, 1).real(), 0.25 * 0.6, 1e-15);
  EXPECT_NEAR(out(0, 3).real(), 0.25 * 0.36, 1e-15);
  EXPECT_NEAR(out(1, 2).real(), 0.25 * 0.36, 1e-15);
  EXPECT_NEAR(out(0, 0).real(), 0.25, 1e-15);
}

TEST(Evolve, Limits) {
  const BlochX b = xstate_to_bloch(make_state({Family::Werner, 0.7}));
  EXPECT_EQ(test::max_bloch_diff(evolve_bloch(b, 1.0), b), 0.0);
  EXPECT_TRUE(is_classical(evolve_bloch(b, 0.0)));
  EXPECT_THROW(evolve_bloch(b, -1.5), InvalidInput);
}

TEST(Evolve, WernerConcurrenceAtHalfSquare) {
  const BlochX b = evolve_bloch(xstate_to_bloch(make_state({Family::Werner, 2.0 / 3.0})), std::sqrt(0.5));
  EXPECT_NEAR(concurrence_x(bloch_to_xstate(b)), 1.0 / 6.0, 1e-15);
}

TEST(ChannelProperty, MatchesClosedForm) {
  test::XStateGen gen(41);
  double worst = 0.0, worst_off = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const XStateParams p = gen.next();
    for (int k = 0; k < 10; ++k) {
      const double l = -1.0 + 2.0 * k / 9.0;
      const DensityMatrix out = apply_common_bath(xstate_to_matrix(p), l);
      ASSERT_TRUE(validate_density(out).valid());
      const FanoTable t = fano_coefficients(out);
      const BlochX ref = evolve_bloch(xstate_to_bloch(p), l);
      worst = std::max(worst, test::max_bloch_diff(ref, {t[3][0], t[0][3], t[1][1], t[2][2], t[3][3]}));
      worst_off = std::max(worst_off, off_x_max(out.matrix()));
    }
  }
  EXPECT_LT(worst, 1e-13);
  EXPECT_LT(worst_off, 1e-14);
}
