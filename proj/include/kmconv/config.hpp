#pragma once

#include <optional>
#include <string>
#include <utility>

#include "kmconv/cartan.hpp"
#include "kmconv/lattice.hpp"
#include "kmconv/numeric.hpp"

namespace kmconv {

struct JobCaps {
  long tits_cap = 10000;
  long string_cap = 64;
};

// A parsed and validated job description.  Parsing is strict: unknown fields
// are rejected with their full path, rationals must be exact "p/q" strings,
// and precision_digits must be at least 10.
struct JobConfig {
  explicit JobConfig(CartanMatrix cm) : cartan(std::move(cm)) {}

  CartanMatrix cartan;
  std::optional<WeightVector> lambda;
  std::optional<PointH> point;
  std::optional<WeightVector> mu;
  unsigned precision_digits = 30;
  std::optional<int> max_length;
  std::optional<std::string> big_m;  // decimal literal, parsed at use site
  std::optional<Rat> big_n;
  JobCaps caps;
};

// Both throw ConfigError with a field-path diagnostic.
JobConfig parse_job_config(std::string const& json_text);
JobConfig load_job_config(std::string const& path);

}  // namespace kmconv
