#include "input.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "toricred/errors.hpp"
#include "toricred/lamination.hpp"

namespace toricred::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

Point json_point(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("a support point must be a nonempty array of integers", 0);
  Point p;
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw ParseError("support coordinates must be integers", 0);
    p.push_back(c.get<std::int64_t>());
  }
  return p;
}

Support json_support(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("a support must be a nonempty array of points", 0);
  std::vector<Point> pts;
  for (const auto& p : j) pts.push_back(json_point(p));
  try {
    return Support(std::move(pts));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace

Point parse_direction(const std::string& text) {
  Point a;
  for (const auto& part : split(text, ',')) {
    try {
      std::size_t used = 0;
      a.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ParseError("direction entries must be integers, got '" + part + "'", 0);
    }
  }
  if (a.empty()) throw ParseError("empty direction", 0);
  return a;
}

SystemFile parse_system_file(const std::string& text) {
  SystemFile sys;
  std::stringstream ss(text);
  std::string raw;
  std::size_t offset = 0;
  std::size_t line_no = 0;
  while (std::getline(ss, raw)) {
    ++line_no;
    const std::size_t line_start = offset;
    offset += raw.size() + 1;
    std::string line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon != std::string::npos) {
      const std::string key = trim(line.substr(0, colon));
      const std::string value = trim(line.substr(colon + 1));
      if (key == "vars") {
        sys.variables = split(value, ',');
        if (sys.variables.empty() || std::any_of(sys.variables.begin(), sys.variables.end(),
                                                 [](const std::string& v) { return v.empty(); })) {
          throw ParseError("line " + std::to_string(line_no) + ": bad variable list", line_start);
        }
      } else if (key == "direction") {
        sys.direction = parse_direction(value);
      } else if (key == "tolerance") {
        try {
          sys.tolerance = std::stod(value);
        } catch (const std::exception&) {
          throw ParseError("line " + std::to_string(line_no) + ": bad tolerance", line_start);
        }
      } else if (key == "seed") {
        try {
          sys.seed = std::stoull(value);
        } catch (const std::exception&) {
          throw ParseError("line " + std::to_string(line_no) + ": bad seed", line_start);
        }
      } else {
        throw ParseError("line " + std::to_string(line_no) + ": unknown header '" + key + "'", line_start);
      }
      continue;
    }
    if (sys.variables.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": polynomial before the 'vars:' header", line_start);
    }
    try {
      sys.polynomials.push_back(parse_polynomial(line, sys.variables));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.message(), line_start + e.position());
    }
    sys.polynomial_text.push_back(line);
  }
  if (sys.variables.empty()) throw ParseError("missing 'vars:' header", 0);
  if (sys.polynomials.empty()) throw ParseError("no polynomials in the system file", offset);
  return sys;
}

SupportTuple parse_supports_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (j.is_object()) {
    if (!j.contains("supports")) throw ParseError("JSON object input needs a 'supports' key", 0);
    j = j["supports"];
  }
  if (!j.is_array() || j.empty()) throw ParseError("supports must be a nonempty array", 0);
  SupportTuple out;
  // A single support is an array of points; a tuple is an array of supports.
  if (!j[0].empty() && j[0].is_array() && j[0][0].is_number()) {
    out.push_back(json_support(j));
  } else {
    for (const auto& s : j) out.push_back(json_support(s));
  }
  for (const auto& s : out) {
    if (s.dim() != out.front().dim()) throw ParseError("supports of mixed dimension", 0);
  }
  return out;
}

Input parse_input(const std::string& text) {
  Input in;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    in.supports = parse_supports_json(text);
    return in;
  }
  in.system = parse_system_file(text);
  in.supports = supports_of(in.system->polynomials);
  return in;
}

}  // namespace toricred::cli
