#pragma once

#include <iosfwd>
#include <string>

#include "zerogeo/domains.hpp"

namespace zerogeo {

enum ExitCode { EXIT_OK = 0, EXIT_VERDICT = 1, EXIT_USAGE = 2, EXIT_NO_CONVERGENCE = 3 };

// disk, closed-disk, circle, omega:RE,IM,GAMMA, closed-omega:RE,IM,GAMMA, inner:GAMMA, closed-inner:GAMMA,
// outer:GAMMA, closed-outer:GAMMA, not:<spec>
DomainSpec parse_domain_spec(const std::string& text);
// "re,im" or "re"
cplx parse_complex(const std::string& text);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zerogeo
