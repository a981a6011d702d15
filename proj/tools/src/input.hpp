#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricred/lattice.hpp"
#include "toricred/mpoly.hpp"

namespace toricred::cli {

struct SystemFile {
  std::vector<std::string> variables;
  std::vector<std::string> polynomial_text;
  std::vector<MPoly> polynomials;
  std::optional<Point> direction;
  std::optional<double> tolerance;
  std::optional<std::uint64_t> seed;
};

/// Either a polynomial system or a bare tuple of supports.
struct Input {
  std::optional<SystemFile> system;
  SupportTuple supports;
};

SystemFile parse_system_file(const std::string& text);
SupportTuple parse_supports_json(const std::string& text);
Input parse_input(const std::string& text);

Point parse_direction(const std::string& text);

}  // namespace toricred::cli
