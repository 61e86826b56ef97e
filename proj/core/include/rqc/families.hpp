#pragma once

#include <optional>
#include <string_view>

#include "rqc/xstate.hpp"

namespace rqc {

enum class Family { Werner, Mnms, Mems };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Werner: z in [0, 1]. MNMS: x in [0, 1] (x = 0 is the classical limit).
/// MEMS: x in [0, 1].
struct FamilySpec {
  Family kind = Family::Werner;
  double param = 0.0;
};

/// chi(x): 1/3 below x = 2/3, x/2 above.
double mems_chi(double x);

/// Werner states are generated in singlet form.
XStateParams make_state(const FamilySpec& f);

/// u(param)/2 for every family.
double family_laqc_closed(const FamilySpec& f);

/// Werner: max{0, (3z-1)/2}; MNMS and MEMS: x.
double family_concurrence_closed(const FamilySpec& f);

/// Concurrence of a dephased Werner state: max{0, (1 + 2 Lambda^2) z - 1} / 2.
double werner_concurrence_rtn(double z, double lambda);

/// The Werner parameter in (1/3, 1) where u(z)/2 equals the concurrence.
double crossover_z();

}  // namespace rqc
