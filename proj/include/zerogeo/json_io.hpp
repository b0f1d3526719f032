#pragma once

#include <string>

#include "json.hpp"
#include "zerogeo/classes.hpp"
#include "zerogeo/harness.hpp"
#include "zerogeo/herglotz.hpp"
#include "zerogeo/polynomial.hpp"
#include "zerogeo/rootfind.hpp"

namespace zerogeo {

using json = nlohmann::json;

// complex numbers are [re, im]; plain numbers are read as real
json to_json(cplx z);
cplx complex_from_json(const json& j);

// {"n": n, "coeffs": [[re, im], ...]}; a bare coefficient array is also accepted
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json to_json(const RootSet& rs);
RootSet rootset_from_json(const json& j);

json to_json(const MembershipVerdict& v);
MembershipVerdict verdict_from_json(const json& j);

json to_json(const TrialReport& r);
TrialReport report_from_json(const json& j);

json to_json(const HerglotzApproximant& h);
HerglotzApproximant approximant_from_json(const json& j);

json read_json_file(const std::string& path);
Polynomial read_polynomial_file(const std::string& path);

}  // namespace zerogeo
