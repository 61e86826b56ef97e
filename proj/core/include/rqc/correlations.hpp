#pragma once

#include "rqc/xstate.hpp"

namespace rqc {

/// u(x) = (1+x) log2(1+x) + (1-x) log2(1-x), with 0 log 0 = 0. Range [0, 2].
double u_func(double x);

/// Joint-outcome weights (times 4) when both parties measure along axis `branch`.
/// They always sum to 4.
struct GBranchValues {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  int branch = 1;
};

GBranchValues branch_values(int branch, const BlochX& b);

/// Classical mutual information (bits) of the axis-`branch` product measurement.
/// Throws InvalidInput if any branch weight is below -kPsdSlack.
double g_branch(int branch, const BlochX& b);

/// Local available quantum correlations. Only the transverse branches 1 and 2
/// contribute, so the measure vanishes on diagonal (classical) states.
double laqc(const BlochX& b);

/// Symmetric classical correlations: the largest of the three branches.
double cs(const BlochX& b);

/// Symmetric quantum correlations: the second-largest branch, counted with
/// multiplicity (a tie at the top returns the top value).
double qs(const BlochX& b);

/// max{2(|r| - sqrt(bc)), 2(|s| - sqrt(ad))}; positive exactly when entangled.
double concurrence_margin(const XStateParams& p);
double concurrence_x(const XStateParams& p);

/// Wootters concurrence from the eigenvalues of sqrt(rho) rho~ sqrt(rho).
double concurrence_general(const DensityMatrix& rho);

struct MeasureSet {
  double concurrence = 0.0;
  double laqc = 0.0;
  double qs = 0.0;
  double cs = 0.0;
};

MeasureSet measures(const XStateParams& p);

}  // namespace rqc
