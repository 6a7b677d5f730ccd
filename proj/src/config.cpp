#include "kmconv/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kmconv/errors.hpp"

namespace kmconv {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string const& path, std::string const& what) {
  throw ConfigError(path + ": " + what);
}

void check_fields(json const& obj, std::string const& path,
                  std::set<std::string> const& allowed) {
  for (auto const& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.contains(key)) {
      fail(path.empty() ? key : path + "." + key, "unknown field");
    }
  }
}

json const& require(json const& obj, std::string const& path, char const* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    fail(path + key, "missing required field");
  }
  return *it;
}

long as_integer(json const& v, std::string const& path) {
  if (!v.is_number_integer()) {
    fail(path, "expected an integer");
  }
  return v.get<long>();
}

Rat as_rational(json const& v, std::string const& path) {
  if (!v.is_string()) {
    fail(path, "expected a rational as a string, e.g. \"3/2\"");
  }
  try {
    return parse_rational(v.get<std::string>());
  } catch (std::invalid_argument const& e) {
    fail(path, e.what());
  }
}

RatVec as_rational_vector(json const& v, std::string const& path) {
  if (!v.is_array() || v.empty()) {
    fail(path, "expected a nonempty array of rational strings");
  }
  RatVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_rational(v[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

CartanMatrix parse_cartan(json const& v, std::string const& path) {
  if (!v.is_array() || v.empty()) {
    fail(path, "expected an array of integer rows");
  }
  IntMat entries;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto const& row = v[i];
    std::string row_path = path + "[" + std::to_string(i) + "]";
    if (!row.is_array()) {
      fail(row_path, "expected an array of integers");
    }
    IntVec r;
    for (std::size_t j = 0; j < row.size(); ++j) {
      r.push_back(Int(as_integer(row[j], row_path + "[" + std::to_string(j) + "]")));
    }
    entries.push_back(std::move(r));
  }
  try {
    return CartanMatrix::validate(std::move(entries));
  } catch (Error const& e) {
    // Structural matrix problems surface as config problems with the path.
    fail(path, std::string(e.name()) + ": " + e.what());
  }
}

}  // namespace

JobConfig parse_job_config(std::string const& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (json::parse_error const& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw ConfigError("top level: expected an object");
  }
  check_fields(root, "", {"cartan", "lambda", "point", "mu", "precision_digits",
                          "max_length", "M", "N", "caps"});

  JobConfig cfg{parse_cartan(require(root, "", "cartan"), "cartan")};
  int const r = cfg.cartan.rank();

  auto sized = [&](RatVec v, std::string const& path) {
    if (static_cast<int>(v.size()) != r) {
      fail(path, "expected " + std::to_string(r) + " entries to match the matrix rank");
    }
    return v;
  };

  if (auto it = root.find("lambda"); it != root.end()) {
    check_fields(*it, "lambda", {"coroot_pairings"});
    cfg.lambda = WeightVector{sized(
        as_rational_vector(require(*it, "lambda.", "coroot_pairings"),
                           "lambda.coroot_pairings"),
        "lambda.coroot_pairings")};
  }
  if (auto it = root.find("mu"); it != root.end()) {
    check_fields(*it, "mu", {"coroot_pairings"});
    cfg.mu = WeightVector{sized(
        as_rational_vector(require(*it, "mu.", "coroot_pairings"),
                           "mu.coroot_pairings"),
        "mu.coroot_pairings")};
  }
  if (auto it = root.find("point"); it != root.end()) {
    check_fields(*it, "point", {"alpha_values"});
    cfg.point = PointH{sized(
        as_rational_vector(require(*it, "point.", "alpha_values"),
                           "point.alpha_values"),
        "point.alpha_values")};
  }
  if (auto it = root.find("precision_digits"); it != root.end()) {
    long d = as_integer(*it, "precision_digits");
    if (d < 10) {
      fail("precision_digits", "must be at least 10");
    }
    if (d > 100000) {
      fail("precision_digits", "unreasonably large");
    }
    cfg.precision_digits = static_cast<unsigned>(d);
  }
  if (auto it = root.find("max_length"); it != root.end()) {
    long l = as_integer(*it, "max_length");
    if (l < 0) {
      fail("max_length", "must be nonnegative");
    }
    cfg.max_length = static_cast<int>(l);
  }
  if (auto it = root.find("M"); it != root.end()) {
    if (!it->is_string()) {
      fail("M", "expected a decimal string");
    }
    try {
      real_from_decimal(it->get<std::string>());
    } catch (std::invalid_argument const& e) {
      fail("M", e.what());
    }
    cfg.big_m = it->get<std::string>();
  }
  if (auto it = root.find("N"); it != root.end()) {
    cfg.big_n = as_rational(*it, "N");
  }
  if (auto it = root.find("caps"); it != root.end()) {
    check_fields(*it, "caps", {"tits_cap", "string_cap"});
    if (auto c = it->find("tits_cap"); c != it->end()) {
      long v = as_integer(*c, "caps.tits_cap");
      if (v <= 0) {
        fail("caps.tits_cap", "must be positive");
      }
      cfg.caps.tits_cap = v;
    }
    if (auto c = it->find("string_cap"); c != it->end()) {
      long v = as_integer(*c, "caps.string_cap");
      if (v <= 0) {
        fail("caps.string_cap", "must be positive");
      }
      cfg.caps.string_cap = v;
    }
  }
  return cfg;
}

JobConfig load_job_config(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_job_config(buf.str());
}

}  // namespace kmconv
