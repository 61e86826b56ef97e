#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "rqc/xstate.hpp"

namespace rqc {

// Rates are expressed relative to the noise fluctuation rate gamma and all
// times are dimensionless gamma*t.

/// Random telegraph noise. Requires 2a/gamma > 1 (oscillatory regime).
struct RtnNoise {
  double a_over_gamma = 4.0;
};

/// Modified Ornstein-Uhlenbeck noise.
struct MounNoise {
  double Gamma_over_gamma = 1.0;
};

/// Memoryless dephasing baseline, Lambda = exp(-lambda t).
struct MarkovNoise {
  double lambda_over_gamma = 1.0;
};

using NoiseModel = std::variant<RtnNoise, MounNoise, MarkovNoise>;

std::string_view noise_name(const NoiseModel& n);

/// Throws InvalidInput for nonpositive rates or an overdamped RTN.
void validate_noise(const NoiseModel& n);

/// omega = sqrt((2a/gamma)^2 - 1).
double rtn_frequency(const RtnNoise& n);

double lambda_of_t(const NoiseModel& n, double t);

struct KrausPair {
  Matrix2c k0;
  Matrix2c k1;
};

/// Phase-flip pair K0 = sqrt((1+L)/2) I, K1 = sqrt((1-L)/2) sigma_z.
KrausPair kraus_pair(double lambda);

/// Both qubits dephased by the same bath: sum_ij (Ki (x) Kj) rho (Ki (x) Kj)^dagger.
DensityMatrix apply_common_bath(const DensityMatrix& rho, double lambda);

/// Closed-form effect of the common bath on an X state: the coherence
/// coefficients scale by lambda^2, the rest is untouched.
BlochX evolve_bloch(const BlochX& b, double lambda);

/// Zeros of Lambda in (0, t_max]. Only RTN has any; each is bisection-polished.
std::vector<double> lambda_zeros(const NoiseModel& n, double t_max);

}  // namespace rqc
