#include "rqc/noise.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace rqc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void check_lambda(double lambda) {
  if (!(std::abs(lambda) <= 1.0 + kStructuralTol)) {
    throw InvalidInput("channel parameter must satisfy |Lambda| <= 1, got " + std::to_string(lambda));
  }
}

double rtn_lambda(double omega, double t) {
  return std::exp(-t) * (std::cos(omega * t) + std::sin(omega * t) / omega);
}

// Bisection on a bracket with a sign change; stops when the bracket is below
// 1e-15 or the midpoint is an exact zero.
double bisect(double omega, double lo, double hi) {
  double flo = rtn_lambda(omega, lo);
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = rtn_lambda(omega, mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  const double flo_abs = std::abs(rtn_lambda(omega, lo));
  return flo_abs <= std::abs(rtn_lambda(omega, hi)) ? lo : hi;
}

}  // namespace

std::string_view noise_name(const NoiseModel& n) {
  return std::visit(overloaded{[](const RtnNoise&) { return std::string_view("rtn"); },
                               [](const MounNoise&) { return std::string_view("moun"); },
                               [](const MarkovNoise&) { return std::string_view("markov"); }},
                    n);
}

void validate_noise(const NoiseModel& n) {
  std::visit(overloaded{
                 [](const RtnNoise& r) {
                   if (!(r.a_over_gamma > 0.5)) {
                     throw InvalidInput("RTN requires 2a/gamma > 1 (oscillatory regime)");
                   }
                 },
                 [](const MounNoise& m) {
                   if (!(m.Gamma_over_gamma > 0)) throw InvalidInput("MOUN requires Gamma > 0");
                 },
                 [](const MarkovNoise& m) {
                   if (!(m.lambda_over_gamma > 0)) throw InvalidInput("Markov noise requires lambda > 0");
                 }},
             n);
}

double rtn_frequency(const RtnNoise& n) {
  validate_noise(n);
  const double ratio = 2.0 * n.a_over_gamma;
  return std::sqrt(ratio * ratio - 1.0);
}

double lambda_of_t(const NoiseModel& n, double t) {
  if (!(t >= 0.0)) throw InvalidInput("time must be >= 0");
  validate_noise(n);
  return std::visit(
      overloaded{[t](const RtnNoise& r) { return rtn_lambda(rtn_frequency(r), t); },
                 [t](const MounNoise& m) {
                   return std::exp(-0.5 * m.Gamma_over_gamma * (t + std::expm1(-t)));
                 },
                 [t](const MarkovNoise& m) { return std::exp(-m.lambda_over_gamma * t); }},
      n);
}

KrausPair kraus_pair(double lambda) {
  check_lambda(lambda);
  const double l = std::clamp(lambda, -1.0, 1.0);
  return {std::sqrt((1 + l) / 2) * pauli(0), std::sqrt((1 - l) / 2) * pauli(3)};
}

DensityMatrix apply_common_bath(const DensityMatrix& rho, double lambda) {
  require_valid(rho);
  const KrausPair k = kraus_pair(lambda);
  const std::array<const Matrix2c*, 2> ops{&k.k0, &k.k1};
  Matrix4c out = Matrix4c::Zero();
  for (const Matrix2c* ki : ops)
    for (const Matrix2c* kj : ops) {
      const Matrix4c kk = kron(*ki, *kj);
      out += kk * rho.matrix() * kk.adjoint();
    }
  return DensityMatrix(out);
}

BlochX evolve_bloch(const BlochX& b, double lambda) {
  require_valid(b);
  check_lambda(lambda);
  const double l2 = std::min(1.0, lambda * lambda);
  return {b.t30, b.t03, l2 * b.t11, l2 * b.t22, b.t33};
}

std::vector<double> lambda_zeros(const NoiseModel& n, double t_max) {
  if (!(t_max > 0.0)) throw InvalidInput("t_max must be > 0");
  validate_noise(n);
  std::vector<double> zeros;
  const auto* rtn = std::get_if<RtnNoise>(&n);
  if (rtn == nullptr) return zeros;

  // Lambda = 0  <=>  tan(omega t) = -omega  <=>  omega t = k pi - atan(omega), k >= 1.
  const double omega = rtn_frequency(*rtn);
  const double half_spacing = 0.5 * std::numbers::pi / omega;
  for (int k = 1;; ++k) {
    const double guess = (k * std::numbers::pi - std::atan(omega)) / omega;
    if (guess > t_max + half_spacing) break;
    const double root = bisect(omega, guess - half_spacing, guess + half_spacing);
    if (root > 0.0 && root <= t_max) zeros.push_back(root);
  }
  return zeros;
}

}  // namespace rqc
