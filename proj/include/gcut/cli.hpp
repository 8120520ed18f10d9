#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gcut/complex.hpp"

namespace gcut {

/// Exit codes: 0 success, 1 internal failure, 2 validation error, 3 TooLarge.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A complex given as a JSON file path, inline JSON, or a family spec such as
/// "turtle:4,2", "simplex:3", "boundary:3", "dmn:2,2", "disjoint:1,2",
/// "lawrence:1,1".
SimplicialComplex load_complex(const std::string& spec);

}  // namespace gcut
