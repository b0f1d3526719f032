#include "zerogeo/json_io.hpp"

#include <fstream>
#include <sstream>

#include "zerogeo/error.hpp"

namespace zerogeo {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

ClassLabel label_from_string(const std::string& s) {
  for (ClassLabel l : {ClassLabel::T_closed, ClassLabel::T_open, ClassLabel::D_closed, ClassLabel::D_open, ClassLabel::PT,
                       ClassLabel::PD, ClassLabel::pi_of_domain})
    if (s == to_string(l)) return l;
  fail(ErrorCode::ParseError, "unknown class label " + s);
}

Method method_from_string(const std::string& s) {
  for (Method m : {Method::DEFINITION, Method::ENDPOINT_DEFINITION, Method::FIRST_CHAR_SAMPLED, Method::SECOND_CHAR_GRID,
                   Method::THIRD_CHAR, Method::GRID_ORACLE})
    if (s == to_string(m)) return m;
  fail(ErrorCode::ParseError, "unknown method " + s);
}

CircleTag tag_from_string(const std::string& s) {
  for (CircleTag t : {CircleTag::INSIDE, CircleTag::ON, CircleTag::OUTSIDE})
    if (s == to_string(t)) return t;
  fail(ErrorCode::ParseError, "unknown circle tag " + s);
}

}  // namespace

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  return guarded("complex", [&]() -> cplx {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2) return cplx(j.at(0).get<double>(), j.at(1).get<double>());
    if (j.is_object()) return cplx(j.value("re", 0.0), j.value("im", 0.0));
    fail(ErrorCode::ParseError, "complex number must be a number, [re, im] or {re, im}");
  });
}

json to_json(const Polynomial& p) {
  json c = json::array();
  for (const cplx& a : p.coeffs()) c.push_back(to_json(a));
  return json{{"n", p.nominal_degree()}, {"coeffs", c}};
}

Polynomial polynomial_from_json(const json& j) {
  return guarded("polynomial", [&]() -> Polynomial {
    const json& arr = j.is_array() ? j : j.at("coeffs");
    if (!arr.is_array() || arr.empty()) fail(ErrorCode::ParseError, "coefficient array must be non-empty");
    std::vector<cplx> c;
    for (const auto& x : arr) c.push_back(complex_from_json(x));
    if (j.is_object() && j.contains("n")) return Polynomial(std::move(c), j.at("n").get<int>());
    return Polynomial(std::move(c));
  });
}

json to_json(const RootSet& rs) {
  json roots = json::array();
  for (const auto& r : rs.roots)
    roots.push_back({{"z", to_json(r.z)}, {"multiplicity", r.multiplicity}, {"tag", to_string(r.tag)}});
  return json{{"roots", roots},
              {"residual", rs.residual},
              {"circle_tol", rs.circle_tol},
              {"degree", rs.degree},
              {"nominal_degree", rs.nominal_degree}};
}

RootSet rootset_from_json(const json& j) {
  return guarded("roots", [&] {
    RootSet rs;
    for (const auto& r : j.at("roots"))
      rs.roots.push_back(Root{complex_from_json(r.at("z")), r.at("multiplicity").get<int>(), tag_from_string(r.at("tag"))});
    rs.residual = j.at("residual").get<double>();
    rs.circle_tol = j.at("circle_tol").get<double>();
    rs.degree = j.at("degree").get<int>();
    rs.nominal_degree = j.at("nominal_degree").get<int>();
    return rs;
  });
}

json to_json(const MembershipVerdict& v) {
  json w = json::array();
  for (const auto& x : v.witnesses) w.push_back({{"kind", x.kind}, {"value", to_json(x.value)}, {"parameter", x.parameter}});
  return json{{"class", to_string(v.class_label)}, {"member", v.member}, {"method", to_string(v.method)},
              {"margin", v.margin}, {"indeterminate", v.indeterminate}, {"witnesses", w}};
}

MembershipVerdict verdict_from_json(const json& j) {
  return guarded("verdict", [&] {
    MembershipVerdict v;
    v.class_label = label_from_string(j.at("class").get<std::string>());
    v.member = j.at("member").get<bool>();
    v.method = method_from_string(j.at("method").get<std::string>());
    v.margin = j.at("margin").get<double>();
    v.indeterminate = j.at("indeterminate").get<bool>();
    for (const auto& x : j.at("witnesses"))
      v.witnesses.push_back({x.at("kind").get<std::string>(), complex_from_json(x.at("value")), x.at("parameter").get<double>()});
    return v;
  });
}

json to_json(const TrialReport& r) {
  json w = json::array();
  for (const auto& s : r.witnesses) {
    json parsed = json::parse(s, nullptr, false);
    w.push_back(parsed.is_discarded() ? json(s) : parsed);
  }
  return json{{"theorem_id", r.theorem_id}, {"trials", r.trials},       {"failures", r.failures},
              {"indeterminate", r.indeterminate}, {"skipped", r.skipped}, {"worst_margin", r.worst_margin},
              {"seed", r.seed},               {"seconds", r.seconds},     {"witnesses", w}};
}

TrialReport report_from_json(const json& j) {
  return guarded("report", [&] {
    TrialReport r;
    r.theorem_id = j.at("theorem_id").get<std::string>();
    r.trials = j.at("trials").get<int>();
    r.failures = j.at("failures").get<int>();
    r.indeterminate = j.at("indeterminate").get<int>();
    r.skipped = j.value("skipped", 0);
    r.worst_margin = j.at("worst_margin").get<double>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.seconds = j.value("seconds", 0.0);
    for (const auto& w : j.at("witnesses")) r.witnesses.push_back(w.is_string() ? w.get<std::string>() : w.dump());
    if (static_cast<int>(r.witnesses.size()) != r.failures) fail(ErrorCode::ParseError, "failures must equal the witness count");
    return r;
  });
}

json to_json(const HerglotzApproximant& h) {
  return json{{"m", h.m},
              {"weights", h.weights},
              {"P", to_json(h.P)},
              {"boundary_sum", h.boundary_sum},
              {"weight_sum", h.weight_sum},
              {"min_real_part", h.min_real_part}};
}

HerglotzApproximant approximant_from_json(const json& j) {
  return guarded("approximant", [&] {
    HerglotzApproximant h;
    h.m = j.at("m").get<int>();
    h.weights = j.at("weights").get<std::vector<double>>();
    if (static_cast<int>(h.weights.size()) != h.m) fail(ErrorCode::ParseError, "weight count differs from m");
    for (double w : h.weights)
      if (!(w > 0)) fail(ErrorCode::ParseError, "weights must be positive");
    h.P = polynomial_from_json(j.at("P"));
    h.boundary_sum = j.value("boundary_sum", 0.0);
    h.weight_sum = j.value("weight_sum", 0.0);
    h.min_real_part = j.value("min_real_part", 0.0);
    return h;
  });
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::ParseError, "invalid JSON in " + path);
  return j;
}

Polynomial read_polynomial_file(const std::string& path) { return polynomial_from_json(read_json_file(path)); }

}  // namespace zerogeo
