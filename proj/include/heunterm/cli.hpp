#ifndef HEUNTERM_CLI_HPP_
#define HEUNTERM_CLI_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "heunterm/sweep.hpp"

namespace heunterm::cli {

/// Parses "re" or "re+imj" (also bare "imj") into a complex number.
/// Throws DomainError on malformed input.
Complex parse_complex(const std::string& text);

/// A fully resolved solve/eval request: equation, order, parameters with the
/// constrained ones (epsilon resp. delta, and the exponent-sum bound delta)
/// filled in, plus evaluation policy.
struct SolveRequest {
  Equation equation = Equation::general;
  int order = 0;
  GeneralHeunParams general{};
  ConfluentHeunParams confluent{};
  SeriesWindow window{};
  std::uint64_t seed = 0;
  std::vector<std::string> notes;  // e.g. defaulted parameters
};

/// Exit codes: 0 success / all checks pass, 1 verification failure,
/// 2 malformed input. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heunterm::cli

#endif  // HEUNTERM_CLI_HPP_
