#include "rqc/state_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rqc {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw InvalidInput(std::string("expected a number for ") + what);
  return j.get<double>();
}

StateInput from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidInput("state document must be a JSON object");
  const int keys = static_cast<int>(doc.contains("abcdrs")) +
                   static_cast<int>(doc.contains("bloch")) +
                   static_cast<int>(doc.contains("matrix"));
  if (keys != 1) {
    throw InvalidInput("state document needs exactly one of 'abcdrs', 'bloch', 'matrix'");
  }

  if (doc.contains("abcdrs")) {
    const json& v = doc["abcdrs"];
    if (!v.is_array() || v.size() != 6) throw InvalidInput("'abcdrs' must be an array of 6 reals");
    XStateParams p{number(v[0], "a"), number(v[1], "b"), number(v[2], "c"),
                   number(v[3], "d"), number(v[4], "r"), number(v[5], "s")};
    require_valid(p);
    return p;
  }

  if (doc.contains("bloch")) {
    const json& v = doc["bloch"];
    if (!v.is_object()) throw InvalidInput("'bloch' must be an object");
    const auto field = [&](const char* k) {
      if (!v.contains(k)) throw InvalidInput(std::string("'bloch' is missing ") + k);
      return number(v[k], k);
    };
    BlochX b{field("t30"), field("t03"), field("t11"), field("t22"), field("t33")};
    require_valid(b);
    return b;
  }

  const json& v = doc["matrix"];
  if (!v.is_array() || v.size() != 4) throw InvalidInput("'matrix' must have 4 rows");
  Matrix4c m;
  for (int i = 0; i < 4; ++i) {
    const json& row = v[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != 4) throw InvalidInput("'matrix' rows must have 4 entries");
    for (int j = 0; j < 4; ++j) {
      const json& e = row[static_cast<std::size_t>(j)];
      if (!e.is_array() || e.size() != 2) throw InvalidInput("matrix entries must be [re, im]");
      m(i, j) = Complex(number(e[0], "re"), number(e[1], "im"));
    }
  }
  DensityMatrix rho(m);
  require_valid(rho);
  return rho;
}

}  // namespace

StateInput parse_state(std::string_view json_text) { return from_json(parse_json(json_text)); }

StateInput read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open state file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str());
}

XStateParams to_xstate(const StateInput& s) {
  if (const auto* p = std::get_if<XStateParams>(&s)) return *p;
  if (const auto* b = std::get_if<BlochX>(&s)) return bloch_to_xstate(*b);
  return matrix_to_xstate(std::get<DensityMatrix>(s));
}

DensityMatrix to_density(const StateInput& s) {
  if (const auto* rho = std::get_if<DensityMatrix>(&s)) return *rho;
  return xstate_to_matrix(to_xstate(s));
}

NoiseModel parse_noise(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw InvalidInput("noise spec needs a string 'kind'");
  }
  const auto kind = doc["kind"].get<std::string>();
  const auto get = [&](const char* key, double fallback) {
    return doc.contains(key) ? number(doc[key], key) : fallback;
  };
  NoiseModel n;
  if (kind == "rtn") {
    n = RtnNoise{get("a_over_gamma", RtnNoise{}.a_over_gamma)};
  } else if (kind == "moun") {
    n = MounNoise{get("Gamma_over_gamma", MounNoise{}.Gamma_over_gamma)};
  } else if (kind == "markov") {
    n = MarkovNoise{get("lambda_over_gamma", MarkovNoise{}.lambda_over_gamma)};
  } else {
    throw InvalidInput("unknown noise kind '" + kind + "'");
  }
  validate_noise(n);
  return n;
}

}  // namespace rqc
