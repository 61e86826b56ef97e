#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "rqc/errors.hpp"

namespace rqc {

// Slack for structural equalities (normalization, hermiticity, coherence bounds).
inline constexpr double kStructuralTol = 1e-12;
// Slack for eigenvalue positivity; covers round-off accumulated by channel application.
inline constexpr double kPsdSlack = 1e-10;

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

/// Real-coherence X state in the computational basis |00>,|01>,|10>,|11>:
///
///     | a 0 0 r |
///     | 0 b s 0 |
///     | 0 s c 0 |
///     | r 0 0 d |
struct XStateParams {
  double a = 0.25;
  double b = 0.25;
  double c = 0.25;
  double d = 0.25;
  double r = 0.0;
  double s = 0.0;
};

/// The five Fano coefficients T30, T03, T11, T22, T33 that can be nonzero for an X state.
struct BlochX {
  double t30 = 0.0;
  double t03 = 0.0;
  double t11 = 0.0;
  double t22 = 0.0;
  double t33 = 0.0;
};

/// Two-qubit density matrix, row-major in the computational basis.
/// Construction does not validate; use validate_density() or require_valid().
class DensityMatrix {
 public:
  DensityMatrix() : m_(Matrix4c::Identity() / 4.0) {}
  explicit DensityMatrix(const Matrix4c& m) : m_(m) {}

  const Matrix4c& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

 private:
  Matrix4c m_;
};

/// T[mu][nu] = Tr[(sigma_mu (x) sigma_nu) rho], sigma_0 = identity.
using FanoTable = std::array<std::array<double, 4>, 4>;

const Matrix2c& pauli(int index);
Matrix4c kron(const Matrix2c& x, const Matrix2c& y);

ValidationReport validate_xstate(const XStateParams& p);
ValidationReport validate_bloch(const BlochX& b);
ValidationReport validate_density(const DensityMatrix& rho);

// Throw InvalidState carrying the report when validation fails.
void require_valid(const XStateParams& p);
void require_valid(const BlochX& b);
void require_valid(const DensityMatrix& rho);

BlochX xstate_to_bloch(const XStateParams& p);
XStateParams bloch_to_xstate(const BlochX& b);
DensityMatrix xstate_to_matrix(const XStateParams& p);

/// Reduces a density matrix with X-shaped support to the real-coherence form.
/// Complex coherences are made real by local phase rotations, which leave every
/// measure in this library unchanged. Throws InvalidInput when entries outside
/// the X pattern exceed kStructuralTol.
XStateParams matrix_to_xstate(const DensityMatrix& rho);

FanoTable fano_coefficients(const DensityMatrix& rho);

/// True when both coherence coefficients vanish within tol (state diagonal in
/// the computational basis).
bool is_classical(const BlochX& b, double tol = kStructuralTol);

}  // namespace rqc
