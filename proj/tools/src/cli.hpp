#pragma once

#include "mocklab/arith.hpp"
#include "mocklab/identities.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace mocklab::cli {

/// Process exit codes.
enum Exit : int {
  ok = 0,
  verify_failed = 1,
  domain = 2,
  convergence = 3,
};

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "1.5", "-2e-3", "pi", "2pi", "pi/2", "3pi/4" at the current precision.
Real parse_real(const std::string& text);
/// "a+bi", "a-bi", "bi", "i", "-i", or any real form above.
Complex parse_complex(const std::string& text);
/// Comma-separated reals.
std::vector<Real> parse_real_list(const std::string& text);
/// JSON list of {"re", "im", "as": "tau"|"alpha"}; numbers or strings.
std::vector<GridPoint> parse_grid(const std::string& json_text);

}  // namespace mocklab::cli
