#pragma once

#include <variant>

#include "rqc/xstate.hpp"

namespace rqc {

/// Product projective measurement; each party measures along the Bloch
/// direction (theta, phi), theta in [0, pi], phi in [0, 2 pi).
struct LocalMeasurement {
  double theta_a = 0.0;
  double phi_a = 0.0;
  double theta_b = 0.0;
  double phi_b = 0.0;
};

/// Bases mutually unbiased to `base`, obtained per party with the complex
/// Hadamard of phase phase_a / phase_b.
struct ComplementarySetting {
  LocalMeasurement base;
  double phase_a = 0.0;
  double phase_b = 0.0;
};

struct ProbabilityTable {
  double p00 = 0.25;
  double p01 = 0.25;
  double p10 = 0.25;
  double p11 = 0.25;

  double total() const { return p00 + p01 + p10 + p11; }
  double marginal_a(int i) const { return i == 0 ? p00 + p01 : p10 + p11; }
  double marginal_b(int j) const { return j == 0 ? p00 + p10 : p01 + p11; }
};

using MeasurementSetting = std::variant<LocalMeasurement, ComplementarySetting>;

struct OptimizationResult {
  double value = 0.0;  // bits
  MeasurementSetting setting;
  int grid_resolution = 0;
  int refinement_depth = 0;
};

enum class Extremum { Minimize, Maximize };

/// A single-qubit orthonormal basis, stored as the columns of a 2x2 unitary.
using QubitBasis = Matrix2c;

QubitBasis bloch_basis(double theta, double phi);

/// Bloch vector of the basis' first column.
Eigen::Vector3d bloch_direction(const QubitBasis& basis);

/// basis * H(phase), H = [[1, 1], [e^{i phase}, -e^{i phase}]] / sqrt(2).
/// Throws InvalidInput if `basis` is not orthonormal within kStructuralTol.
QubitBasis complementary_basis(const QubitBasis& basis, double phase);

/// max_{ij} | |<e_i|f_j>|^2 - 1/2 |; zero for mutually unbiased qubit bases.
double mub_deviation(const QubitBasis& e, const QubitBasis& f);

ProbabilityTable post_measurement_probs(const DensityMatrix& rho, const QubitBasis& basis_a,
                                        const QubitBasis& basis_b);
ProbabilityTable post_measurement_probs(const DensityMatrix& rho, const LocalMeasurement& m);
ProbabilityTable post_measurement_probs(const DensityMatrix& rho, const ComplementarySetting& m);

/// H(p^A) + H(p^B) - H(p) in bits.
double classical_mutual_info(const ProbabilityTable& p);

/// Coarse grid over both parties' measurement directions followed by `refine`
/// rounds of coordinate pattern search, the step halving every round.
/// Deterministic; ties resolve to the lexicographically smallest angle tuple.
OptimizationResult optimize_cmi(const DensityMatrix& rho, Extremum mode, int grid = 32,
                                int refine = 4);

/// Two-stage LAQC estimate: find the bases minimizing classical mutual
/// information, then maximize it over Hadamard phases of the complementary
/// bases. Degenerate minimizers are narrowed to those where one party measures
/// closest to the computational basis; each survivor goes through stage two
/// and the largest value is kept.
OptimizationResult laqc_oracle(const DensityMatrix& rho, int grid = 32, int refine = 4);

/// Two-stage Qs estimate: maximize classical mutual information, then maximize
/// over the complementary bases of every (near-)degenerate maximizer.
OptimizationResult qs_oracle(const DensityMatrix& rho, int grid = 32, int refine = 4);

}  // namespace rqc
