#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gonil/io.hpp"

namespace gonil {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 ok / PASS, 1 property failure or counterexample, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "1,0,-1/2", "[1, 0, -1/2]" or a combination of basis names such as
/// "v1 + 2*z - 1/2*w".
Vector parse_vector_arg(const std::string& text, const LieAlgebra& g);
/// Inverse of the above for display: "v1 + z".
std::string vector_expression(std::span<const Rational> v, const LieAlgebra& g);

}  // namespace gonil
