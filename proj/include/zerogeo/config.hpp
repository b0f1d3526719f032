#pragma once

#include <cstdint>
#include <string>

#include "zerogeo/classes.hpp"
#include "zerogeo/harness.hpp"

namespace zerogeo {

struct Config {
  double circle_tol = 1e-7;
  double coeff_tol = 1e-10;
  double margin_tol = 1e-6;
  int zeta_count = 64;
  int x_grid = 181;
  int boundary_samples = 512;
  std::uint64_t rng_seed = 20240229;
  std::string output_format = "json";  // json or csv
  bool format_explicit = false;        // set by a config file or flag; otherwise each subcommand uses its natural format
  // verify subcommand
  int trials = 100;
  double max_indeterminate = 0.05;
  int threads = 0;

  void validate() const;
  ClassOptions class_options() const;
  HarnessOptions harness_options() const;
};

// key = value lines, '#' comments, strings optionally quoted; unknown keys are errors
Config parse_config(const std::string& text, Config base = {});
Config load_config(const std::string& path, Config base = {});
// applies one key = value pair
void set_config_value(Config& c, const std::string& key, const std::string& value);
std::string config_to_text(const Config& c);

}  // namespace zerogeo
