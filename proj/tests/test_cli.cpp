#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "zerogeo/cli.hpp"
#include "zerogeo/config.hpp"
#include "zerogeo/error.hpp"
#include "zerogeo/json_io.hpp"
#include "zerogeo/qconv.hpp"

using namespace zerogeo;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "zerogeo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct ScratchDir {
  fs::path path = fs::temp_directory_path() / ("zerogeo_cli_" + std::to_string(::getpid()));
  ScratchDir() { fs::create_directories(path); }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

fs::path scratch() {
  static const ScratchDir dir;
  return dir.path;
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string write_poly(const std::string& name, const Polynomial& p) { return write_file(name, to_json(p).dump()); }

}  // namespace

TEST_CASE("qcoef prints the binomial at lambda zero") {
  const Run r = cli({"qcoef", "5", "2", "0"});
  CHECK(r.code == EXIT_OK);
  CHECK(r.out == "10\n");
  CHECK(cli({"qcoef", "4", "2", "0.5"}).out.size() > 10);  // 17 significant digits
}

TEST_CASE("qpoly round-trips through the polynomial reader") {
  const Run r = cli({"qpoly", "4", "0.7"});
  REQUIRE(r.code == EXIT_OK);
  const Polynomial p = polynomial_from_json(json::parse(r.out));
  CHECK(rel_diff(p, q_extremal(4, 0.7)) == 0.0);
  const Run c = cli({"qpoly", "2", "0", "--format", "csv"});
  CHECK(c.out == "k,re,im\n0,1,0\n1,2,0\n2,1,0\n");
}

TEST_CASE("lambda convolution at zero equals the Grace-Szego convolution") {
  const std::string a = write_poly("a.json", Polynomial({cplx(1, 2), cplx(0.5, -1), cplx(3), cplx(-1, 0.25)}));
  const std::string b = write_poly("b.json", Polynomial({cplx(2), cplx(-1, 1), cplx(0.3, 0.1), cplx(1)}));
  const Run gs = cli({"convolve", "--mode", "gs", a, b});
  const Run l0 = cli({"convolve", "--mode", "lambda", "--lambda", "0", a, b});
  CHECK(gs.code == EXIT_OK);
  CHECK(gs.out == l0.out);
  CHECK(cli({"convolve", "--mode", "lambda", a, b}).code == EXIT_USAGE);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({"--bogus"}).code == EXIT_USAGE);
  CHECK(cli({"qcoef", "5"}).code == EXIT_USAGE);
  CHECK(cli({}).code == EXIT_USAGE);
  CHECK(cli({"classify", write_poly("c.json", q_extremal(3, 0.5)), "--class", "X", "--lambda", "0.5"}).code == EXIT_USAGE);
  CHECK(cli({"roots", write_file("bad.json", "{\"n\": 3, \"coeffs\": [[1,0]]}")}).code == EXIT_USAGE);
  CHECK(cli({"qcoef", "3", "1", "5"}).code == EXIT_USAGE);  // lambda beyond 2pi/n
}

TEST_CASE("roots csv") {
  const std::string p = write_poly("r.json", Polynomial::from_roots({cplx(0.5), cplx(0, 1), cplx(2)}));
  const Run r = cli({"roots", p});
  CHECK(r.code == EXIT_OK);
  std::istringstream in(r.out);
  std::string line;
  int inside = 0, on = 0, outside = 0;
  while (std::getline(in, line)) {
    CHECK(std::count(line.begin(), line.end(), ',') == 3);
    inside += line.ends_with(",INSIDE");
    on += line.ends_with(",ON");
    outside += line.ends_with(",OUTSIDE");
  }
  CHECK(inside == 1);
  CHECK(on == 1);
  CHECK(outside == 1);
  const Run j = cli({"roots", p, "--format", "json"});
  CHECK(rootset_from_json(json::parse(j.out)).degree == 3);
}

TEST_CASE("classify verdicts and exit codes") {
  const std::string q = write_poly("q.json", q_extremal(4, 0.9));
  const Run closed = cli({"classify", q, "--class", "Tbar", "--lambda", "0.9"});
  CHECK(closed.code == EXIT_OK);
  CHECK(verdict_from_json(json::parse(closed.out)).member);
  const Run open = cli({"classify", q, "--class", "T", "--lambda", "0.9"});
  CHECK(open.code == EXIT_VERDICT);
  CHECK(!verdict_from_json(json::parse(open.out)).member);
  const std::string inner = write_poly("in.json", scale_argument(q_extremal(4, 0.9), 1.5));
  const Run all = cli({"classify", inner, "--class", "D", "--lambda", "0.9", "--method", "all"});
  CHECK(all.code == EXIT_OK);
  const json j = json::parse(all.out);
  CHECK(j["agree"] == true);
  for (const char* m : {"first", "second", "third", "oracle"}) CHECK(verdict_from_json(j[m]).member);
  const std::string pe = write_poly("pe.json", pre_extremal(4, 1.0, 1.0));
  CHECK(cli({"classify", pe, "--class", "PDbar", "--lambda", "0.5"}).code == EXIT_OK);
  CHECK(cli({"classify", pe, "--class", "PD", "--lambda", "0.5"}).code == EXIT_VERDICT);
}

TEST_CASE("inverse and delta") {
  const std::string p = write_poly("p.json", Polynomial({cplx(1, 1), cplx(2), cplx(0, 3)}));
  const Polynomial inv = polynomial_from_json(json::parse(cli({"inverse", p}).out));
  CHECK(inv[0] == cplx(0, -3));
  CHECK(inv[2] == cplx(1, -1));
  const Polynomial d = polynomial_from_json(json::parse(cli({"delta", p, "--lambda", "0.4"}).out));
  CHECK(d.nominal_degree() == 1);
  const std::string q = write_poly("q3.json", q_extremal(3, 0.4));
  const Polynomial dq = polynomial_from_json(json::parse(cli({"delta", q, "--lambda", "0.4"}).out));
  CHECK(rel_diff(dq, q_extremal(2, 0.4)) < 1e-13);
}

TEST_CASE("domain subcommands") {
  const Run b = cli({"domain", "boundary", "--spec", "closed-inner:0.5", "--samples", "16"});
  CHECK(b.code == EXIT_OK);
  CHECK(std::count(b.out.begin(), b.out.end(), '\n') == 16);
  CHECK(cli({"domain", "contains", "--spec", "omega:1,0,1", "0.4"}).out == "IN\n");
  CHECK(cli({"domain", "contains", "--spec", "omega:1,0,1", "0.6"}).code == EXIT_VERDICT);
  CHECK(cli({"domain", "contains", "--spec", "not:disk", "2,1"}).code == EXIT_OK);
  CHECK(cli({"domain", "contains", "--spec", "bogus", "0"}).code == EXIT_USAGE);
  const std::string p = write_poly("d.json", Polynomial::from_roots({cplx(0.2), cplx(-0.3, 0.1)}));
  CHECK(cli({"domain", "roots-in", "--spec", "disk", p}).code == EXIT_OK);
  CHECK(cli({"domain", "roots-in", "--spec", "outer:0.5", p}).code == EXIT_VERDICT);
  CHECK(parse_domain_spec("not:closed-omega:2,1,0.3").describe() == DomainSpec::complement(DomainSpec::omega(cplx(2, 1), 0.3, true)).describe());
  CHECK(parse_complex("1.5,-2") == cplx(1.5, -2));
  CHECK_THROWS_AS(parse_complex("1,2,3"), Error);
}

TEST_CASE("herglotz output") {
  const Run j = cli({"herglotz", "--cayley", "17", "--k", "4", "--r", "0.5"});
  REQUIRE(j.code == EXIT_OK);
  const HerglotzApproximant h = approximant_from_json(json::parse(j.out));
  CHECK(h.m == 8);
  CHECK(h.weight_sum == doctest::Approx(1.0).epsilon(1e-12));
  const std::string cf = write_file("coef.json", "[[1,0],[2,0],[2,0],[2,0],[2,0],[2,0]]");
  const Run c = cli({"herglotz", "--coeffs", cf, "--k", "4", "--r", "0.5", "--format", "csv"});
  CHECK(c.code == EXIT_OK);
  CHECK(c.out.rfind("radius,error\n", 0) == 0);
  CHECK(cli({"herglotz", "--cayley", "129", "--k", "64", "--r", "0.95"}).code == EXIT_VERDICT);  // positivity lost
  CHECK(cli({"herglotz", "--k", "4"}).code == EXIT_USAGE);
}

TEST_CASE("config file, flag overrides and show-config") {
  const std::string cfg = write_file("z.cfg", "# test\nzeta_count = 32\noutput_format = \"csv\"\ntrials = 5\n");
  const Run s = cli({"--config", cfg, "--show-config", "--trials", "7"});
  CHECK(s.code == EXIT_OK);
  CHECK(s.out.find("zeta_count = 32\n") != std::string::npos);
  CHECK(s.out.find("trials = 7\n") != std::string::npos);
  // the printed configuration is itself a valid config file
  const Config back = parse_config(s.out);
  CHECK(back.zeta_count == 32);
  CHECK(back.output_format == "csv");
  // an explicit format in the config file applies to every subcommand
  CHECK(cli({"--config", cfg, "qpoly", "2", "0"}).out == "k,re,im\n0,1,0\n1,2,0\n2,1,0\n");
  CHECK(cli({"--config", write_file("bad.cfg", "nonsense = 1\n"), "--show-config"}).code == EXIT_USAGE);
  CHECK(cli({"--show-config", "--zeta-count", "4"}).code == EXIT_USAGE);
  CHECK_THROWS_AS(parse_config("margin_tol = -1\n"), Error);
  CHECK_THROWS_AS(parse_config("x_grid = 4\n"), Error);
}

TEST_CASE("verify emits a trial report and exits by its outcome") {
  const Run r = cli({"verify", "--theorem", "suffridge", "--n", "3", "--lambda", "0.8", "--trials", "10"});
  CHECK(r.code == EXIT_OK);
  const TrialReport rep = report_from_json(json::parse(r.out));
  CHECK(rep.trials == 10);
  CHECK(rep.failures == 0);
  // same seed, same report apart from timing
  const TrialReport again = report_from_json(json::parse(cli({"verify", "--theorem", "suffridge", "--n", "3", "--lambda", "0.8", "--trials", "10"}).out));
  CHECK(again.worst_margin == rep.worst_margin);
  CHECK(cli({"verify", "--theorem", "herglotz", "--steps", "3"}).code == EXIT_OK);
  CHECK(cli({"verify", "--theorem", "nope"}).code == EXIT_USAGE);
}

TEST_CASE("--out writes the file and nothing to stdout") {
  const std::string path = (scratch() / "out.json").string();
  const Run r = cli({"qpoly", "3", "0.2", "--out", path});
  CHECK(r.code == EXIT_OK);
  CHECK(r.out.empty());
  CHECK(polynomial_from_json(read_json_file(path)).nominal_degree() == 3);
}

TEST_CASE("installed binary") {
  const char* bin = std::getenv("ZEROGEO_BIN");
  if (!bin) {
    MESSAGE("ZEROGEO_BIN not set; skipping");
    return;
  }
  auto run = [&](const std::string& args, std::string& out) {
    FILE* p = popen((std::string("\"") + bin + "\" " + args + " 2>/dev/null").c_str(), "r");
    REQUIRE(p);
    std::array<char, 256> buf{};
    out.clear();
    while (fgets(buf.data(), buf.size(), p)) out += buf.data();
    const int status = pclose(p);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  std::string out;
  CHECK(run("qcoef 5 2 0", out) == 0);
  CHECK(out == "10\n");
  CHECK(run("--definitely-unknown", out) == 2);
  CHECK(run("qpoly --help", out) == 0);
  CHECK(out.find("lambda") != std::string::npos);
}
