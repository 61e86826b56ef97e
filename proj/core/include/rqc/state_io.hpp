#pragma once

#include <filesystem>
#include <string_view>
#include <variant>

#include "rqc/noise.hpp"
#include "rqc/xstate.hpp"

namespace rqc {

/// A state as read from a file: exactly one of the three representations.
using StateInput = std::variant<XStateParams, BlochX, DensityMatrix>;

/// JSON object with exactly one of
///   "abcdrs": [a, b, c, d, r, s]
///   "bloch":  {"t30": .., "t03": .., "t11": .., "t22": .., "t33": ..}
///   "matrix": 4x4 array of [re, im] pairs
/// The state is validated; violations raise InvalidState, format errors InvalidInput.
StateInput parse_state(std::string_view json_text);
StateInput read_state_file(const std::filesystem::path& path);

/// Matrix inputs must have X-shaped support.
XStateParams to_xstate(const StateInput& s);
DensityMatrix to_density(const StateInput& s);

/// {"kind": "rtn"|"moun"|"markov", "a_over_gamma": .., "Gamma_over_gamma": ..,
///  "lambda_over_gamma": ..}; only the field belonging to `kind` is read and a
/// missing field falls back to the NoiseModel default.
NoiseModel parse_noise(std::string_view json_text);

}  // namespace rqc
