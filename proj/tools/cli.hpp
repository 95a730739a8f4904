#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tetra/mp.hpp"

namespace tetra::cli {

/// Runs one invocation (program name excluded). Exit codes: 0 success,
/// 1 a verification failed, 2 usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Number grammar: decimal literals, "p/q", and products/quotients with pi
/// or e ("2pi/3", "-pi/4", "1/pi", "e"). Throws ParseError otherwise.
Real parse_number(std::string_view text, const PrecisionCtx& ctx);

/// One decimal per line; blank lines and '#' comments ignored.
std::vector<Real> read_values(std::istream& in, const PrecisionCtx& ctx);

}  // namespace tetra::cli
