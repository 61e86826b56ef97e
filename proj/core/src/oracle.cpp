#include "rqc/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace rqc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegenerateTol = 1e-9;
// Improvements smaller than this are treated as ties during pattern search.
constexpr double kImproveTol = 1e-15;

double entropy_term(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

Eigen::Vector3d direction(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

// Classical mutual information evaluated straight from the Fano table:
// p_ij = (1 + s_i a + s_j b + s_i s_j c) / 4 with s = +-1.
class CmiObjective {
 public:
  explicit CmiObjective(const DensityMatrix& rho) : t_(fano_coefficients(rho)) {}

  ProbabilityTable table(const Eigen::Vector3d& na, const Eigen::Vector3d& nb) const {
    double a = 0.0, b = 0.0, c = 0.0;
    for (int k = 1; k <= 3; ++k) {
      a += t_[k][0] * na(k - 1);
      b += t_[0][k] * nb(k - 1);
      for (int l = 1; l <= 3; ++l) c += t_[k][l] * na(k - 1) * nb(l - 1);
    }
    const auto clip = [](double p) { return p < 0.0 && p > -kPsdSlack ? 0.0 : p; };
    return {clip((1 + a + b + c) / 4), clip((1 + a - b - c) / 4), clip((1 - a + b - c) / 4),
            clip((1 - a - b + c) / 4)};
  }

  double operator()(const Eigen::Vector3d& na, const Eigen::Vector3d& nb) const {
    return classical_mutual_info(table(na, nb));
  }

 private:
  FanoTable t_;
};

bool better(double candidate, double incumbent, Extremum mode) {
  return mode == Extremum::Maximize ? candidate > incumbent + kImproveTol
                                    : candidate < incumbent - kImproveTol;
}

void canonicalize(double& theta, double& phi) {
  theta = std::fmod(theta, 2 * kPi);
  if (theta < 0) theta += 2 * kPi;
  if (theta > kPi) {
    theta = 2 * kPi - theta;
    phi += kPi;
  }
  phi = std::fmod(phi, 2 * kPi);
  if (phi < 0) phi += 2 * kPi;
}

// One representative per measurement basis: the upper hemisphere, with only
// half of the equator (n and -n define the same projector pair).
std::vector<std::array<double, 2>> hemisphere_grid(int grid) {
  std::vector<std::array<double, 2>> pts;
  const double dtheta = kPi / grid;
  const double dphi = 2 * kPi / grid;
  for (int k = 0; 2 * k <= grid; ++k) {
    const double theta = k * dtheta;
    if (k == 0) {
      pts.push_back({0.0, 0.0});
      continue;
    }
    const bool equator = 2 * k == grid;
    for (int l = 0; l < (equator ? grid / 2 : grid); ++l) pts.push_back({theta, l * dphi});
  }
  return pts;
}

double fold(double theta) { return std::min(theta, kPi - theta); }

struct Scored {
  LocalMeasurement m;
  double value;
};

double evaluate(const CmiObjective& f, const LocalMeasurement& m) {
  return f(direction(m.theta_a, m.phi_a), direction(m.theta_b, m.phi_b));
}

std::vector<Scored> coarse_scan(const CmiObjective& f, int grid) {
  const auto pts = hemisphere_grid(grid);
  std::vector<Eigen::Vector3d> dirs;
  dirs.reserve(pts.size());
  for (const auto& p : pts) dirs.push_back(direction(p[0], p[1]));
  std::vector<Scored> out;
  out.reserve(pts.size() * pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      out.push_back({{pts[i][0], pts[i][1], pts[j][0], pts[j][1]}, f(dirs[i], dirs[j])});
  return out;
}

double extreme_value(const std::vector<Scored>& xs, Extremum mode) {
  double best = xs.front().value;
  for (const auto& x : xs)
    if (better(x.value, best, mode)) best = x.value;
  return best;
}

std::vector<Scored> near_extreme(const std::vector<Scored>& xs, Extremum mode) {
  const double best = extreme_value(xs, mode);
  std::vector<Scored> out;
  for (const auto& x : xs)
    if (std::abs(x.value - best) <= kDegenerateTol) out.push_back(x);
  return out;
}

Scored refine_local(const CmiObjective& f, Scored cur, Extremum mode, int grid, int refine) {
  double dtheta = kPi / grid;
  double dphi = 2 * kPi / grid;
  for (int round = 0; round < refine; ++round) {
    dtheta /= 2;
    dphi /= 2;
    bool improved = true;
    for (int iter = 0; improved && iter < 256; ++iter) {
      improved = false;
      for (int coord = 0; coord < 4; ++coord) {
        for (double sign : {1.0, -1.0}) {
          LocalMeasurement trial = cur.m;
          double* angles[] = {&trial.theta_a, &trial.phi_a, &trial.theta_b, &trial.phi_b};
          *angles[coord] += sign * (coord % 2 == 0 ? dtheta : dphi);
          canonicalize(trial.theta_a, trial.phi_a);
          canonicalize(trial.theta_b, trial.phi_b);
          const double v = evaluate(f, trial);
          if (better(v, cur.value, mode)) {
            cur = {trial, v};
            improved = true;
          }
        }
      }
    }
  }
  return cur;
}

struct PhaseResult {
  double value;
  double phase_a;
  double phase_b;
};

// Maximizes classical mutual information over the Hadamard phases of the bases
// complementary to `base`. Phases are taken in [0, pi): phase + pi only swaps
// the two basis vectors.
PhaseResult maximize_complementary(const CmiObjective& f, const LocalMeasurement& base, int grid,
                                   int refine) {
  const QubitBasis ba = bloch_basis(base.theta_a, base.phi_a);
  const QubitBasis bb = bloch_basis(base.theta_b, base.phi_b);
  const auto eval = [&](double pa, double pb) {
    return f(bloch_direction(complementary_basis(ba, pa)),
             bloch_direction(complementary_basis(bb, pb)));
  };
  const double step0 = kPi / grid;
  std::vector<Eigen::Vector3d> da, db;
  for (int k = 0; k < grid; ++k) {
    da.push_back(bloch_direction(complementary_basis(ba, k * step0)));
    db.push_back(bloch_direction(complementary_basis(bb, k * step0)));
  }
  PhaseResult best{-1.0, 0.0, 0.0};
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      const double v = f(da[i], db[j]);
      if (v > best.value + kImproveTol) best = {v, i * step0, j * step0};
    }
  double step = step0;
  for (int round = 0; round < refine; ++round) {
    step /= 2;
    bool improved = true;
    for (int iter = 0; improved && iter < 256; ++iter) {
      improved = false;
      for (int coord = 0; coord < 2; ++coord)
        for (double sign : {1.0, -1.0}) {
          PhaseResult trial = best;
          (coord == 0 ? trial.phase_a : trial.phase_b) += sign * step;
          trial.value = eval(trial.phase_a, trial.phase_b);
          if (trial.value > best.value + kImproveTol) {
            best = trial;
            improved = true;
          }
        }
    }
  }
  const auto wrap = [](double p) {
    p = std::fmod(p, 2 * kPi);
    return p < 0 ? p + 2 * kPi : p;
  };
  best.phase_a = wrap(best.phase_a);
  best.phase_b = wrap(best.phase_b);
  return best;
}

void check_grid(int grid, int refine) {
  if (grid < 8) throw InvalidInput("oracle grid must be >= 8");
  if (refine < 0) throw InvalidInput("oracle refinement depth must be >= 0");
}

OptimizationResult two_stage(const DensityMatrix& rho, Extremum stage1, bool anchor, int grid,
                             int refine) {
  require_valid(rho);
  check_grid(grid, refine);
  const CmiObjective f(rho);

  auto candidates = near_extreme(coarse_scan(f, grid), stage1);
  if (anchor) {
    double closest = kPi;
    for (const auto& c : candidates)
      closest = std::min(closest, std::min(fold(c.m.theta_a), fold(c.m.theta_b)));
    std::erase_if(candidates, [&](const Scored& c) {
      return std::min(fold(c.m.theta_a), fold(c.m.theta_b)) > closest + kStructuralTol;
    });
  }
  for (auto& c : candidates) c = refine_local(f, c, stage1, grid, refine);
  candidates = near_extreme(candidates, stage1);

  OptimizationResult out{-1.0, ComplementarySetting{}, grid, refine};
  for (const auto& c : candidates) {
    const auto r = maximize_complementary(f, c.m, grid, refine);
    if (r.value > out.value + kImproveTol) {
      out.value = r.value;
      out.setting = ComplementarySetting{c.m, r.phase_a, r.phase_b};
    }
  }
  out.value = std::max(0.0, out.value);
  return out;
}

}  // namespace

QubitBasis bloch_basis(double theta, double phi) {
  const Complex e(std::cos(phi), std::sin(phi));
  QubitBasis u;
  u << std::cos(theta / 2), -std::conj(e) * std::sin(theta / 2),
       e * std::sin(theta / 2), std::cos(theta / 2);
  return u;
}

Eigen::Vector3d bloch_direction(const QubitBasis& basis) {
  const Complex x = basis(0, 0);
  const Complex y = basis(1, 0);
  const Complex cross = std::conj(x) * y;
  return {2 * cross.real(), 2 * cross.imag(), std::norm(x) - std::norm(y)};
}

QubitBasis complementary_basis(const QubitBasis& basis, double phase) {
  const double err = (basis.adjoint() * basis - Matrix2c::Identity()).cwiseAbs().maxCoeff();
  if (err > kStructuralTol) throw InvalidInput("complementary_basis: input basis is not orthonormal");
  const Complex e(std::cos(phase), std::sin(phase));
  QubitBasis h;
  h << 1, 1, e, -e;
  return basis * h / std::sqrt(2.0);
}

double mub_deviation(const QubitBasis& e, const QubitBasis& f) {
  return ((e.adjoint() * f).cwiseAbs2().array() - 0.5).abs().maxCoeff();
}

ProbabilityTable post_measurement_probs(const DensityMatrix& rho, const QubitBasis& basis_a,
                                        const QubitBasis& basis_b) {
  std::array<double, 4> p{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Matrix2c pa = basis_a.col(i) * basis_a.col(i).adjoint();
      const Matrix2c pb = basis_b.col(j) * basis_b.col(j).adjoint();
      p[static_cast<std::size_t>(2 * i + j)] = (kron(pa, pb) * rho.matrix()).trace().real();
    }
  return {p[0], p[1], p[2], p[3]};
}

ProbabilityTable post_measurement_probs(const DensityMatrix& rho, const LocalMeasurement& m) {
  return post_measurement_probs(rho, bloch_basis(m.theta_a, m.phi_a),
                                bloch_basis(m.theta_b, m.phi_b));
}

ProbabilityTable post_measurement_probs(const DensityMatrix& rho, const ComplementarySetting& m) {
  return post_measurement_probs(
      rho, complementary_basis(bloch_basis(m.base.theta_a, m.base.phi_a), m.phase_a),
      complementary_basis(bloch_basis(m.base.theta_b, m.base.phi_b), m.phase_b));
}

double classical_mutual_info(const ProbabilityTable& p) {
  const double ha = entropy_term(p.marginal_a(0)) + entropy_term(p.marginal_a(1));
  const double hb = entropy_term(p.marginal_b(0)) + entropy_term(p.marginal_b(1));
  const double hj = entropy_term(p.p00) + entropy_term(p.p01) + entropy_term(p.p10) +
                    entropy_term(p.p11);
  return std::max(0.0, ha + hb - hj);
}

OptimizationResult optimize_cmi(const DensityMatrix& rho, Extremum mode, int grid, int refine) {
  require_valid(rho);
  check_grid(grid, refine);
  const CmiObjective f(rho);
  const auto scan = coarse_scan(f, grid);
  Scored best = scan.front();
  for (const auto& s : scan)
    if (better(s.value, best.value, mode)) best = s;
  best = refine_local(f, best, mode, grid, refine);
  return {std::max(0.0, best.value), best.m, grid, refine};
}

OptimizationResult laqc_oracle(const DensityMatrix& rho, int grid, int refine) {
  return two_stage(rho, Extremum::Minimize, /*anchor=*/true, grid, refine);
}

OptimizationResult qs_oracle(const DensityMatrix& rho, int grid, int refine) {
  return two_stage(rho, Extremum::Maximize, /*anchor=*/false, grid, refine);
}

}  // namespace rqc
