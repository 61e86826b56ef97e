#include "rqc/families.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rqc/correlations.hpp"

namespace rqc {

namespace {

void check_param(const FamilySpec& f) {
  if (!(f.param >= 0.0 && f.param <= 1.0)) {
    throw InvalidInput(std::string(family_name(f.kind)) + " parameter must lie in [0, 1], got " +
                       std::to_string(f.param));
  }
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Werner: return "werner";
    case Family::Mnms: return "mnms";
    case Family::Mems: return "mems";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "werner") return Family::Werner;
  if (name == "mnms") return Family::Mnms;
  if (name == "mems") return Family::Mems;
  return std::nullopt;
}

double mems_chi(double x) { return x < 2.0 / 3.0 ? 1.0 / 3.0 : x / 2.0; }

XStateParams make_state(const FamilySpec& f) {
  check_param(f);
  const double p = f.param;
  XStateParams s;
  switch (f.kind) {
    case Family::Werner:
      s = {(1 - p) / 4, (1 + p) / 4, (1 + p) / 4, (1 - p) / 4, 0.0, -p / 2};
      break;
    case Family::Mnms:
      s = {0.5, 0.0, 0.0, 0.5, p / 2, 0.0};
      break;
    case Family::Mems: {
      const double chi = mems_chi(p);
      s = {chi, 1 - 2 * chi, 0.0, chi, p / 2, 0.0};
      break;
    }
  }
  require_valid(s);
  return s;
}

double family_laqc_closed(const FamilySpec& f) {
  check_param(f);
  return 0.5 * u_func(f.param);
}

double family_concurrence_closed(const FamilySpec& f) {
  check_param(f);
  if (f.kind == Family::Werner) return std::max(0.0, (3 * f.param - 1) / 2);
  return f.param;
}

double werner_concurrence_rtn(double z, double lambda) {
  if (!(z >= 0.0 && z <= 1.0)) throw InvalidInput("Werner parameter must lie in [0, 1]");
  if (!(std::abs(lambda) <= 1.0 + kStructuralTol)) throw InvalidInput("|Lambda| must be <= 1");
  return 0.5 * std::max(0.0, (1 + 2 * lambda * lambda) * z - 1);
}

double crossover_z() {
  // f(1/3) > 0 and f(0.9) < 0; the other root of f sits at z = 1.
  const auto f = [](double z) { return 0.5 * u_func(z) - (3 * z - 1) / 2; };
  double lo = 1.0 / 3.0;
  double hi = 0.9;
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace rqc
