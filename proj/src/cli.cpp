#include "zerogeo/cli.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "zerogeo/classes.hpp"
#include "zerogeo/config.hpp"
#include "zerogeo/error.hpp"
#include "zerogeo/harness.hpp"
#include "zerogeo/herglotz.hpp"
#include "zerogeo/json_io.hpp"
#include "zerogeo/qconv.hpp"
#include "zerogeo/rootfind.hpp"

namespace zerogeo {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

double to_double(const std::string& s) {
  try {
    size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "not a number: '" + s + "'");
  }
}

std::string csv_polynomial(const Polynomial& p) {
  std::ostringstream o;
  o << "k,re,im\n";
  for (int k = 0; k <= p.nominal_degree(); ++k) o << k << "," << num(p[k].real()) << "," << num(p[k].imag()) << "\n";
  return o.str();
}

std::string csv_roots(const RootSet& rs) {
  std::ostringstream o;
  for (const auto& r : rs.roots)
    o << num(r.z.real()) << "," << num(r.z.imag()) << "," << r.multiplicity << "," << to_string(r.tag) << "\n";
  return o.str();
}

std::string dump(const json& j) { return j.dump() + "\n"; }

// flags that override the config file
struct Overrides {
  std::optional<double> circle_tol, coeff_tol, margin_tol, max_indeterminate;
  std::optional<int> zeta_count, x_grid, boundary_samples, trials, threads;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;

  void apply(Config& c) const {
    if (circle_tol) c.circle_tol = *circle_tol;
    if (coeff_tol) c.coeff_tol = *coeff_tol;
    if (margin_tol) c.margin_tol = *margin_tol;
    if (max_indeterminate) c.max_indeterminate = *max_indeterminate;
    if (zeta_count) c.zeta_count = *zeta_count;
    if (x_grid) c.x_grid = *x_grid;
    if (boundary_samples) c.boundary_samples = *boundary_samples;
    if (trials) c.trials = *trials;
    if (threads) c.threads = *threads;
    if (seed) c.rng_seed = *seed;
    if (format) {
      c.output_format = *format;
      c.format_explicit = true;
    }
  }
};

struct Result {
  std::string text;
  int code = EXIT_OK;
};

bool want_csv(const Config& c, bool natural_csv) { return c.format_explicit ? c.output_format == "csv" : natural_csv; }

Polynomial load_poly(const std::string& path) { return read_polynomial_file(path); }

std::vector<cplx> load_coefficients(const std::string& path) {
  const json j = read_json_file(path);
  if (j.is_array()) {
    std::vector<cplx> c;
    for (const auto& x : j) c.push_back(complex_from_json(x));
    return c;
  }
  const Polynomial p = polynomial_from_json(j);
  return p.coeffs();
}

}  // namespace

cplx parse_complex(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {to_double(parts[0]), 0.0};
  if (parts.size() == 2) return {to_double(parts[0]), to_double(parts[1])};
  fail(ErrorCode::ParseError, "expected re,im: '" + text + "'");
}

DomainSpec parse_domain_spec(const std::string& text) {
  if (text.rfind("not:", 0) == 0) return DomainSpec::complement(parse_domain_spec(text.substr(4)));
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::vector<std::string> args = colon == std::string::npos ? std::vector<std::string>{} : split(text.substr(colon + 1), ',');
  auto need = [&](size_t k) {
    if (args.size() != k) fail(ErrorCode::ParseError, "domain '" + head + "' takes " + std::to_string(k) + " parameters");
  };
  if (head == "disk" || head == "closed-disk") {
    need(0);
    return DomainSpec::disk(head == "closed-disk");
  }
  if (head == "circle") {
    need(0);
    return DomainSpec::circle();
  }
  if (head == "omega" || head == "closed-omega") {
    need(3);
    return DomainSpec::omega({to_double(args[0]), to_double(args[1])}, to_double(args[2]), head == "closed-omega");
  }
  if (head == "inner" || head == "closed-inner") {
    need(1);
    return DomainSpec::limacon_inner(to_double(args[0]), head == "closed-inner");
  }
  if (head == "outer" || head == "closed-outer") {
    need(1);
    return DomainSpec::limacon_outer(to_double(args[0]), head == "closed-outer");
  }
  fail(ErrorCode::ParseError, "unknown domain '" + text + "'");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Suffridge-type convolutions, polynomial classes and zero domains"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string config_path, out_path;
  bool show_config = false;
  Overrides ov;
  app.add_option("--config", config_path, "key = value config file")->check(CLI::ExistingFile);
  app.add_flag("--show-config", show_config, "print the effective configuration and exit");
  app.add_option("--out", out_path, "write output to this file instead of stdout");
  app.add_option("--format", ov.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--circle-tol", ov.circle_tol);
  app.add_option("--coeff-tol", ov.coeff_tol);
  app.add_option("--margin-tol", ov.margin_tol);
  app.add_option("--max-indeterminate", ov.max_indeterminate);
  app.add_option("--zeta-count", ov.zeta_count);
  app.add_option("--x-grid", ov.x_grid);
  app.add_option("--boundary-samples", ov.boundary_samples);
  app.add_option("--trials", ov.trials);
  app.add_option("--threads", ov.threads);
  app.add_option("--seed", ov.seed);

  Config cfg;
  std::function<Result()> action;

  // qcoef
  int qn = 0, qk = 0;
  double qlam = 0.0;
  auto* qcoef = app.add_subcommand("qcoef", "print C_k^(n)(lambda)");
  qcoef->add_option("n", qn)->required();
  qcoef->add_option("k", qk)->required();
  qcoef->add_option("lambda", qlam)->required();
  qcoef->callback([&] { action = [&] { return Result{num(q_coefficient(qn, qk, qlam)) + "\n"}; }; });

  // qpoly
  auto* qpoly = app.add_subcommand("qpoly", "print Q_n(lambda; z)");
  qpoly->add_option("n", qn)->required();
  qpoly->add_option("lambda", qlam)->required();
  qpoly->callback([&] {
    action = [&] {
      const Polynomial q = q_extremal(qn, qlam);
      return Result{want_csv(cfg, false) ? csv_polynomial(q) : dump(to_json(q))};
    };
  });

  // convolve
  std::string mode = "gs", file_a, file_b;
  std::optional<double> conv_lambda;
  auto* convolve = app.add_subcommand("convolve", "Grace-Szego or lambda convolution of two polynomial files");
  convolve->add_option("--mode", mode)->check(CLI::IsMember({"gs", "lambda"}));
  convolve->add_option("--lambda", conv_lambda);
  convolve->add_option("a", file_a)->required()->check(CLI::ExistingFile);
  convolve->add_option("b", file_b)->required()->check(CLI::ExistingFile);
  convolve->callback([&] {
    action = [&] {
      const Polynomial a = load_poly(file_a), b = load_poly(file_b);
      Polynomial r;
      if (mode == "gs") {
        r = grace_szego(a, b);
      } else {
        if (!conv_lambda) fail(ErrorCode::BadParams, "--mode lambda needs --lambda");
        r = lambda_convolve(a, b, LambdaParam(a.nominal_degree(), *conv_lambda));
      }
      return Result{want_csv(cfg, false) ? csv_polynomial(r) : dump(to_json(r))};
    };
  });

  // roots
  std::string file_p;
  auto* roots = app.add_subcommand("roots", "roots as re,im,multiplicity,tag");
  roots->add_option("poly", file_p)->required()->check(CLI::ExistingFile);
  roots->callback([&] {
    action = [&] {
      RootOptions ro;
      ro.circle_tol = cfg.circle_tol;
      const RootSet rs = find_roots(load_poly(file_p), ro);
      return Result{want_csv(cfg, true) ? csv_roots(rs) : dump(to_json(rs))};
    };
  });

  // inverse
  auto* inverse = app.add_subcommand("inverse", "n-inverse z^n conj(p(1/conj z))");
  inverse->add_option("poly", file_p)->required()->check(CLI::ExistingFile);
  inverse->callback([&] {
    action = [&] {
      const Polynomial r = n_inverse(load_poly(file_p));
      return Result{want_csv(cfg, false) ? csv_polynomial(r) : dump(to_json(r))};
    };
  });

  // delta
  double lam = 0.0;
  auto* deltacmd = app.add_subcommand("delta", "the lambda-difference operator");
  deltacmd->add_option("poly", file_p)->required()->check(CLI::ExistingFile);
  deltacmd->add_option("--lambda", lam)->required();
  deltacmd->callback([&] {
    action = [&] {
      const Polynomial p = load_poly(file_p);
      const Polynomial r = delta(p, LambdaParam(p.nominal_degree(), lam));
      return Result{want_csv(cfg, false) ? csv_polynomial(r) : dump(to_json(r))};
    };
  });

  // classify
  std::string cls, method = "third";
  auto* classify = app.add_subcommand("classify", "class membership verdict");
  classify->add_option("poly", file_p)->required()->check(CLI::ExistingFile);
  classify->add_option("--class", cls)->required()->check(CLI::IsMember({"T", "Tbar", "D", "Dbar", "PT", "PTbar", "PD", "PDbar"}));
  classify->add_option("--lambda", lam)->required();
  classify->add_option("--method", method)->check(CLI::IsMember({"first", "second", "third", "oracle", "all"}));
  classify->callback([&] {
    action = [&] {
      const Polynomial p = load_poly(file_p);
      const LambdaParam lp(p.nominal_degree(), lam);
      const ClassOptions opts = cfg.class_options();
      json j;
      bool member = false;
      if (cls == "T" || cls == "Tbar") {
        const MembershipVerdict v = in_T(p, lp, cls == "Tbar", opts);
        j = to_json(v);
        member = v.member;
      } else if (cls[0] == 'P') {
        const PreClass which = cls == "PT" ? PreClass::PT : cls == "PTbar" ? PreClass::PTbar : cls == "PD" ? PreClass::PD : PreClass::PDbar;
        const MembershipVerdict v = pre_class_test(p, lp, which, opts);
        j = to_json(v);
        member = v.member;
      } else {
        const bool closed = cls == "Dbar";
        auto run = [&](const std::string& m) {
          if (m == "first") return in_D_first(p, lp, closed, cfg.zeta_count, opts);
          if (m == "second") {
            const PQSplit pq = split_pq(p);
            return in_D_second(pq.P, pq.Q, lp, closed, opts);
          }
          if (m == "oracle") return in_D_oracle(p, lp, closed, opts);
          return in_D_third(p, lp, closed, opts);
        };
        if (method == "all") {
          j = json::object();
          member = true;
          std::optional<bool> first_seen;
          bool agree = true;
          for (const char* m : {"first", "second", "third", "oracle"}) {
            try {
              const MembershipVerdict v = run(m);
              j[m] = to_json(v);
              if (first_seen && *first_seen != v.member) agree = false;
              first_seen = v.member;
              member = member && v.member;
            } catch (const Error& e) {
              if (e.code() == ErrorCode::NoConvergence) throw;
              j[m] = json{{"error", e.what()}};
            }
          }
          j["agree"] = agree;
          member = member && agree;
        } else {
          const MembershipVerdict v = run(method);
          j = to_json(v);
          member = v.member;
        }
      }
      return Result{dump(j), member ? EXIT_OK : EXIT_VERDICT};
    };
  });

  // domain
  auto* domain = app.add_subcommand("domain", "zero-domain queries");
  domain->require_subcommand(1);
  std::string spec;
  int samples = 0;
  auto* boundary = domain->add_subcommand("boundary", "boundary polyline as re,im rows");
  boundary->add_option("--spec", spec)->required();
  boundary->add_option("--samples", samples);
  boundary->callback([&] {
    action = [&] {
      const auto pts = domain_boundary(parse_domain_spec(spec), samples > 0 ? samples : cfg.boundary_samples);
      if (!want_csv(cfg, true)) {
        json j = json::array();
        for (const cplx& z : pts) j.push_back(to_json(z));
        return Result{dump(j)};
      }
      std::ostringstream o;
      for (const cplx& z : pts) o << num(z.real()) << "," << num(z.imag()) << "\n";
      return Result{o.str()};
    };
  });
  std::string point;
  auto* contains_cmd = domain->add_subcommand("contains", "IN, OUT or BOUNDARY for a point");
  contains_cmd->add_option("--spec", spec)->required();
  contains_cmd->add_option("point", point)->required();
  contains_cmd->callback([&] {
    action = [&] {
      const DomainSpec d = parse_domain_spec(spec);
      const cplx z = parse_complex(point);
      const Containment c = contains(d, z);
      return Result{std::string(to_string(c)) + "\n", accepts(d, z) ? EXIT_OK : EXIT_VERDICT};
    };
  });
  auto* roots_in = domain->add_subcommand("roots-in", "whether all roots of a polynomial lie in the domain");
  roots_in->add_option("--spec", spec)->required();
  roots_in->add_option("poly", file_p)->required()->check(CLI::ExistingFile);
  roots_in->callback([&] {
    action = [&] {
      RootOptions ro;
      ro.circle_tol = cfg.circle_tol;
      const RootSetCheck r = root_set_in(load_poly(file_p), parse_domain_spec(spec), 1e-9, ro);
      json j{{"inside", r.inside}, {"where", to_string(r.where)}};
      if (r.witness) j["witness"] = to_json(*r.witness);
      else if (!r.inside) j["witness"] = "infinity";
      return Result{dump(j), r.inside ? EXIT_OK : EXIT_VERDICT};
    };
  });

  // herglotz
  std::string coeff_file;
  int hk = 8, cayley = 0;
  double hr = 0.9;
  auto* herg = app.add_subcommand("herglotz", "positive-weight boundary approximant; csv gives error against radius");
  herg->add_option("--coeffs", coeff_file)->check(CLI::ExistingFile);
  herg->add_option("--cayley", cayley, "use this many Taylor coefficients of (1+z)/(1-z) instead of a file");
  herg->add_option("--k", hk);
  herg->add_option("--r", hr);
  herg->callback([&] {
    action = [&] {
      std::vector<cplx> a;
      if (!coeff_file.empty()) a = load_coefficients(coeff_file);
      else if (cayley > 0) a = cayley_coefficients(cayley);
      else fail(ErrorCode::BadParams, "herglotz needs --coeffs or --cayley");
      const HerglotzApproximant h = build_approximant(a, hk, hr);
      if (!want_csv(cfg, false)) return Result{dump(to_json(h))};
      // compare against the power series given by the coefficients
      const bool closed_form = coeff_file.empty();
      auto f = [&](cplx z) {
        if (closed_form) return (1.0 + z) / (1.0 - z);
        cplx s = 0.0;
        for (size_t j = a.size(); j-- > 0;) s = s * z + a[j];
        return s;
      };
      std::ostringstream o;
      o << "radius,error\n";
      for (int i = 1; i <= 19; ++i) {
        const double rho = 0.05 * i;
        o << num(rho) << "," << num(sup_error(h, f, rho)) << "\n";
      }
      return Result{o.str()};
    };
  });

  // verify
  std::string theorem;
  std::optional<int> vn;
  std::optional<double> vlam;
  double gamma = 0.5;
  std::string tau = "1";
  int part = 0, steps = 4, per_side = 0;
  auto* verify = app.add_subcommand("verify", "randomized theorem check; prints a trial report");
  verify->add_option("--theorem", theorem)
      ->required()
      ->check(CLI::IsMember({"suffridge", "main", "preclass", "halfplane", "limacon", "limacon-negative", "gausslucas", "st",
                             "dichotomy", "monotonicity", "herglotz"}));
  verify->add_option("--n", vn, "degree; the standard grid when omitted");
  verify->add_option("--lambda", vlam);
  verify->add_option("--gamma", gamma);
  verify->add_option("--tau", tau, "re,im");
  verify->add_option("--part", part, "limacon part 1..6, 0 for all");
  verify->add_option("--steps", steps, "herglotz schedule steps");
  verify->add_option("--per-side", per_side, "halfplane instances per side (defaults to trials)");
  verify->callback([&] {
    action = [&] {
      const HarnessOptions ho = cfg.harness_options();
      const std::uint64_t seed = cfg.rng_seed;
      const int trials = cfg.trials;
      TrialReport rep;
      rep.theorem_id = theorem;
      rep.seed = seed;
      auto grid = [&](bool interior) {
        std::vector<std::pair<int, double>> g;
        if (vn && vlam) g.emplace_back(*vn, *vlam);
        else
          for (const auto& [n, l] : standard_grid())
            if ((!vn || n == *vn) && (!interior || l > 0.0)) g.emplace_back(n, l);
        return g;
      };
      using Runner = TrialReport (*)(int, double, int, std::uint64_t, const HarnessOptions&);
      const std::map<std::string, Runner> per_point{{"suffridge", run_suffridge_trial}, {"main", run_main_trial},
                                                    {"preclass", run_preclass_trial},   {"gausslucas", run_gauss_lucas_trial},
                                                    {"st", run_st_biconditional_trial}, {"dichotomy", run_dichotomy_trial}};
      if (auto it = per_point.find(theorem); it != per_point.end()) {
        const bool interior = theorem == "dichotomy";
        for (const auto& [n, l] : grid(interior)) accumulate(rep, it->second(n, l, trials, seed, ho));
      } else if (theorem == "halfplane") {
        accumulate(rep, run_halfplane_trial(per_side > 0 ? per_side : trials, seed, ho));
      } else if (theorem == "monotonicity") {
        for (int n = vn.value_or(2); n <= vn.value_or(8); ++n) accumulate(rep, run_monotonicity_trial(n, trials, seed, ho));
      } else if (theorem == "limacon") {
        const cplx t = parse_complex(tau);
        for (int p = part > 0 ? part : 1; p <= (part > 0 ? part : 6); ++p)
          accumulate(rep, run_limacon_trial(t, gamma, vn.value_or(0), p, trials, seed, ho));
      } else if (theorem == "limacon-negative") {
        accumulate(rep, run_limacon_negative(parse_complex(tau), gamma, vn.value_or(0), trials, seed, ho));
      } else {
        accumulate(rep, run_herglotz_trial(steps, seed));
      }
      rep.theorem_id = theorem;
      rep.seed = seed;
      return Result{dump(to_json(rep)), rep.passed(cfg.max_indeterminate) ? EXIT_OK : EXIT_VERDICT};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return EXIT_USAGE;
  }

  try {
    if (!config_path.empty()) cfg = load_config(config_path);
    ov.apply(cfg);
    cfg.validate();
    if (show_config) {
      out << config_to_text(cfg);
      return EXIT_OK;
    }
    if (!action) {
      err << app.help();
      return EXIT_USAGE;
    }
    const Result r = action();
    if (out_path.empty()) {
      out << r.text;
    } else {
      std::ofstream f(out_path);
      if (!f) fail(ErrorCode::BadParams, "cannot write " + out_path);
      f << r.text;
    }
    return r.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::NoConvergence: return EXIT_NO_CONVERGENCE;
      case ErrorCode::InternalInconsistency:
      case ErrorCode::PositivityLost: return EXIT_VERDICT;
      default: return EXIT_USAGE;
    }
  }
}

}  // namespace zerogeo
