#include "zerogeo/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "zerogeo/error.hpp"

namespace zerogeo {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) return s.substr(1, s.size() - 2);
  return s;
}

template <class T>
T parse_number(const std::string& key, const std::string& v) {
  T out{};
  const char* end = v.data() + v.size();
  auto [p, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || p != end) fail(ErrorCode::ParseError, "bad value for " + key + ": '" + v + "'");
  return out;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void Config::validate() const {
  if (!(circle_tol > 0) || !(coeff_tol > 0) || !(margin_tol > 0) || !(max_indeterminate >= 0))
    fail(ErrorCode::BadParams, "tolerances must be positive");
  if (zeta_count < 8 || x_grid < 8 || boundary_samples < 8) fail(ErrorCode::BadParams, "grids must have at least 8 points");
  if (output_format != "json" && output_format != "csv") fail(ErrorCode::BadParams, "output_format must be json or csv");
  if (trials < 1) fail(ErrorCode::BadParams, "trials must be positive");
  if (threads < 0) fail(ErrorCode::BadParams, "threads must be non-negative");
}

ClassOptions Config::class_options() const {
  ClassOptions o;
  o.roots.circle_tol = circle_tol;
  o.coeff_tol = coeff_tol;
  o.margin_tol = margin_tol;
  o.zeta_count = zeta_count;
  o.theta_grid = x_grid;
  return o;
}

HarnessOptions Config::harness_options() const {
  HarnessOptions h;
  h.classes = class_options();
  h.indeterminate_margin = margin_tol;
  h.threads = threads;
  return h;
}

void set_config_value(Config& c, const std::string& key, const std::string& raw) {
  const std::string v = unquote(trim(raw));
  if (key == "circle_tol") c.circle_tol = parse_number<double>(key, v);
  else if (key == "coeff_tol") c.coeff_tol = parse_number<double>(key, v);
  else if (key == "margin_tol") c.margin_tol = parse_number<double>(key, v);
  else if (key == "zeta_count") c.zeta_count = parse_number<int>(key, v);
  else if (key == "x_grid") c.x_grid = parse_number<int>(key, v);
  else if (key == "boundary_samples") c.boundary_samples = parse_number<int>(key, v);
  else if (key == "rng_seed") c.rng_seed = parse_number<std::uint64_t>(key, v);
  else if (key == "output_format") {
    c.output_format = v;
    c.format_explicit = true;
  }
  else if (key == "trials") c.trials = parse_number<int>(key, v);
  else if (key == "max_indeterminate") c.max_indeterminate = parse_number<double>(key, v);
  else if (key == "threads") c.threads = parse_number<int>(key, v);
  else fail(ErrorCode::ParseError, "unknown config key '" + key + "'");
}

Config parse_config(const std::string& text, Config base) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected key = value");
    set_config_value(base, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  base.validate();
  return base;
}

Config load_config(const std::string& path, Config base) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::ParseError, "cannot open config file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), base);
}

std::string config_to_text(const Config& c) {
  std::ostringstream o;
  o << "circle_tol = " << fmt(c.circle_tol) << "\n";
  o << "coeff_tol = " << fmt(c.coeff_tol) << "\n";
  o << "margin_tol = " << fmt(c.margin_tol) << "\n";
  o << "zeta_count = " << c.zeta_count << "\n";
  o << "x_grid = " << c.x_grid << "\n";
  o << "boundary_samples = " << c.boundary_samples << "\n";
  o << "rng_seed = " << c.rng_seed << "\n";
  // left commented when unset so each subcommand keeps its natural format
  o << (c.format_explicit ? "" : "# ") << "output_format = \"" << c.output_format << "\"\n";
  o << "trials = " << c.trials << "\n";
  o << "max_indeterminate = " << fmt(c.max_indeterminate) << "\n";
  o << "threads = " << c.threads << "\n";
  return o.str();
}

}  // namespace zerogeo
