#include "rqc/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace rqc {

namespace {

// x log2 x with the 0 log 0 = 0 convention; arguments down to -kPsdSlack are
// treated as zero.
double xlog2x(double x) {
  if (x < -kPsdSlack) throw InvalidInput("negative probability weight " + std::to_string(x));
  if (x <= 0.0) return 0.0;
  return x * std::log2(x);
}

std::array<double, 3> all_branches(const BlochX& b) {
  require_valid(b);
  return {g_branch(1, b), g_branch(2, b), g_branch(3, b)};
}

}  // namespace

double u_func(double x) {
  if (!(std::abs(x) <= 1.0 + kStructuralTol)) {
    throw InvalidInput("u(x) requires |x| <= 1, got " + std::to_string(x));
  }
  x = std::clamp(x, -1.0, 1.0);
  const auto term = [](double y) { return y == -1.0 ? 0.0 : (1.0 + y) * std::log1p(y); };
  return (term(x) + term(-x)) / std::log(2.0);
}

GBranchValues branch_values(int branch, const BlochX& b) {
  double ti0 = 0.0, t0i = 0.0, tii = 0.0;
  switch (branch) {
    case 1: tii = b.t11; break;
    case 2: tii = b.t22; break;
    case 3: ti0 = b.t30; t0i = b.t03; tii = b.t33; break;
    default: throw InvalidInput("branch index must be 1, 2 or 3");
  }
  return {1 + ti0 + t0i + tii, 1 + ti0 - t0i - tii, 1 - ti0 + t0i - tii, 1 - ti0 - t0i + tii,
          branch};
}

double g_branch(int branch, const BlochX& b) {
  const auto v = branch_values(branch, b);
  const double ti0 = branch == 3 ? b.t30 : 0.0;
  const double t0i = branch == 3 ? b.t03 : 0.0;
  const double joint = xlog2x(v.alpha) + xlog2x(v.beta) + xlog2x(v.gamma) + xlog2x(v.delta);
  // Mutual information is nonnegative; clamp round-off from the cancellation.
  return std::max(0.0, joint / 4.0 - (u_func(t0i) + u_func(ti0)) / 2.0);
}

double laqc(const BlochX& b) {
  const auto g = all_branches(b);
  return std::max(g[0], g[1]);
}

double cs(const BlochX& b) {
  const auto g = all_branches(b);
  return *std::max_element(g.begin(), g.end());
}

double qs(const BlochX& b) {
  auto g = all_branches(b);
  std::sort(g.begin(), g.end(), std::greater<>());
  return g[1];
}

double concurrence_margin(const XStateParams& p) {
  require_valid(p);
  const double c1 = 2.0 * (std::abs(p.r) - std::sqrt(std::max(0.0, p.b * p.c)));
  const double c2 = 2.0 * (std::abs(p.s) - std::sqrt(std::max(0.0, p.a * p.d)));
  return std::max(c1, c2);
}

double concurrence_x(const XStateParams& p) { return std::max(0.0, concurrence_margin(p)); }

double concurrence_general(const DensityMatrix& rho) {
  require_valid(rho);
  const Matrix4c herm = (rho.matrix() + rho.matrix().adjoint()) / 2.0;

  Eigen::SelfAdjointEigenSolver<Matrix4c> es(herm);
  if (es.info() != Eigen::Success) throw NumericError("eigensolver failed on rho");
  // Eigenvalues at round-off level are zeroed: their square roots (~1e-8)
  // would otherwise leak into the result on rank-deficient states.
  const double floor = 64 * std::numeric_limits<double>::epsilon() * es.eigenvalues().cwiseAbs().maxCoeff();
  Eigen::Vector4d roots;
  for (int i = 0; i < 4; ++i) {
    const double v = es.eigenvalues()(i);
    roots(i) = v > floor ? std::sqrt(v) : 0.0;
  }
  const Matrix4c sqrt_rho = es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();

  // The square roots of the eigenvalues of sqrt(rho) rho~ sqrt(rho) are the
  // singular values of sqrt(rho) (Y x Y) sqrt(rho)^*.
  const Matrix4c yy = kron(pauli(2), pauli(2));
  const Matrix4c a = sqrt_rho * yy * sqrt_rho.conjugate();
  Eigen::JacobiSVD<Matrix4c> svd(a);
  if (svd.info() != Eigen::Success) throw NumericError("SVD failed on spin-flipped product");
  const Eigen::Vector4d lam = svd.singularValues();  // descending
  return std::max(0.0, lam(0) - lam(1) - lam(2) - lam(3));
}

MeasureSet measures(const XStateParams& p) {
  const BlochX b = xstate_to_bloch(p);
  const auto g = all_branches(b);
  auto sorted = g;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return {concurrence_x(p), std::max(g[0], g[1]), sorted[1], sorted[0]};
}

}  // namespace rqc
