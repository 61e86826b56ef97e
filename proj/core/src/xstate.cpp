#include "rqc/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace rqc {

std::string ValidationReport::describe() const {
  if (valid()) return "valid";
  std::ostringstream os;
  os << "invalid:";
  for (const auto& v : violations) os << ' ' << v.constraint << '=' << v.magnitude;
  return os.str();
}

InvalidState::InvalidState(ValidationReport report)
    : InvalidInput(report.describe()), report_(std::move(report)) {}

const Matrix2c& pauli(int index) {
  static const std::array<Matrix2c, 4> table = [] {
    std::array<Matrix2c, 4> s;
    const Complex i(0.0, 1.0);
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -i, i, 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  if (index < 0 || index > 3) throw InvalidInput("pauli index out of range");
  return table[static_cast<std::size_t>(index)];
}

namespace {

void check_nonnegative(ValidationReport& rep, const char* name, double v) {
  if (v < -kStructuralTol) rep.violations.push_back({name, -v});
}

}  // namespace

Matrix4c kron(const Matrix2c& x, const Matrix2c& y) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = x(i, j) * y;
  return out;
}

ValidationReport validate_xstate(const XStateParams& p) {
  ValidationReport rep;
  for (double v : {p.a, p.b, p.c, p.d, p.r, p.s}) {
    if (!std::isfinite(v)) {
      rep.violations.push_back({"finite", std::numeric_limits<double>::infinity()});
      return rep;
    }
  }
  check_nonnegative(rep, "a_nonnegative", p.a);
  check_nonnegative(rep, "b_nonnegative", p.b);
  check_nonnegative(rep, "c_nonnegative", p.c);
  check_nonnegative(rep, "d_nonnegative", p.d);
  const double trace_err = std::abs(p.a + p.b + p.c + p.d - 1.0);
  if (trace_err > kStructuralTol) rep.violations.push_back({"normalization", trace_err});
  const double r_excess = std::abs(p.r) - std::sqrt(std::max(0.0, p.a * p.d));
  if (r_excess > kStructuralTol) rep.violations.push_back({"coherence_r", r_excess});
  const double s_excess = std::abs(p.s) - std::sqrt(std::max(0.0, p.b * p.c));
  if (s_excess > kStructuralTol) rep.violations.push_back({"coherence_s", s_excess});
  return rep;
}

ValidationReport validate_bloch(const BlochX& b) {
  ValidationReport rep;
  const std::array<std::pair<const char*, double>, 5> fields{{
      {"t30_range", b.t30}, {"t03_range", b.t03}, {"t11_range", b.t11},
      {"t22_range", b.t22}, {"t33_range", b.t33}}};
  for (const auto& [name, v] : fields) {
    const double excess = std::abs(v) - 1.0;
    if (excess > kStructuralTol) rep.violations.push_back({name, excess});
  }
  const XStateParams p{(1 + b.t30 + b.t03 + b.t33) / 4, (1 + b.t30 - b.t03 - b.t33) / 4,
                       (1 - b.t30 + b.t03 - b.t33) / 4, (1 - b.t30 - b.t03 + b.t33) / 4,
                       (b.t11 - b.t22) / 4,             (b.t11 + b.t22) / 4};
  auto inner = validate_xstate(p);
  rep.violations.insert(rep.violations.end(), inner.violations.begin(), inner.violations.end());
  return rep;
}

ValidationReport validate_density(const DensityMatrix& rho) {
  ValidationReport rep;
  const Matrix4c& m = rho.matrix();
  if (!m.allFinite()) {
    rep.violations.push_back({"finite", std::numeric_limits<double>::infinity()});
    return rep;
  }
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kStructuralTol) rep.violations.push_back({"hermitian", herm});
  const double trace_err = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_err > kStructuralTol) rep.violations.push_back({"trace", trace_err});
  const Matrix4c sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(sym, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -kPsdSlack) rep.violations.push_back({"positive_semidefinite", -min_eig});
  return rep;
}

void require_valid(const XStateParams& p) {
  auto rep = validate_xstate(p);
  if (!rep.valid()) throw InvalidState(std::move(rep));
}

void require_valid(const BlochX& b) {
  auto rep = validate_bloch(b);
  if (!rep.valid()) throw InvalidState(std::move(rep));
}

void require_valid(const DensityMatrix& rho) {
  auto rep = validate_density(rho);
  if (!rep.valid()) throw InvalidState(std::move(rep));
}

BlochX xstate_to_bloch(const XStateParams& p) {
  require_valid(p);
  return {p.a + p.b - p.c - p.d, p.a - p.b + p.c - p.d, 2 * (p.s + p.r), 2 * (p.s - p.r),
          p.a - p.b - p.c + p.d};
}

XStateParams bloch_to_xstate(const BlochX& b) {
  require_valid(b);
  return {(1 + b.t30 + b.t03 + b.t33) / 4, (1 + b.t30 - b.t03 - b.t33) / 4,
          (1 - b.t30 + b.t03 - b.t33) / 4, (1 - b.t30 - b.t03 + b.t33) / 4,
          (b.t11 - b.t22) / 4,             (b.t11 + b.t22) / 4};
}

DensityMatrix xstate_to_matrix(const XStateParams& p) {
  require_valid(p);
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = p.a;
  m(1, 1) = p.b;
  m(2, 2) = p.c;
  m(3, 3) = p.d;
  m(0, 3) = m(3, 0) = p.r;
  m(1, 2) = m(2, 1) = p.s;
  return DensityMatrix(m);
}

XStateParams matrix_to_xstate(const DensityMatrix& rho) {
  require_valid(rho);
  const Matrix4c& m = rho.matrix();
  double off_x = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && i + j != 3) off_x = std::max(off_x, std::abs(m(i, j)));
  if (off_x > kStructuralTol) {
    throw InvalidInput("matrix is not an X state: largest off-X entry " + std::to_string(off_x));
  }
  XStateParams p{m(0, 0).real(), m(1, 1).real(), m(2, 2).real(), m(3, 3).real(),
                 std::abs(m(0, 3)), std::abs(m(1, 2))};
  // Rounding in |rho_14| can push a pure-state coherence past sqrt(ad) by an ulp.
  p.r = std::min(p.r, std::sqrt(std::max(0.0, p.a * p.d)));
  p.s = std::min(p.s, std::sqrt(std::max(0.0, p.b * p.c)));
  require_valid(p);
  return p;
}

FanoTable fano_coefficients(const DensityMatrix& rho) {
  FanoTable t{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      t[mu][nu] = (kron(pauli(mu), pauli(nu)) * rho.matrix()).trace().real();
  return t;
}

bool is_classical(const BlochX& b, double tol) {
  return std::abs(b.t11) <= tol && std::abs(b.t22) <= tol;
}

}  // namespace rqc
