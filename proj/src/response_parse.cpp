#include "flocksim/response_parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <regex>

namespace flocksim {

std::string to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MissingPositionMarker: return "missing-position-marker";
    case ParseErrorKind::MalformedCoordinates: return "malformed-coordinates";
    case ParseErrorKind::MultipleAmbiguousPositions: return "multiple-ambiguous-positions";
  }
  return "unknown";
}

namespace {

const std::regex kMarker("position\\s*:", std::regex::icase);
const std::regex kPair(
    "\\[\\s*([+-]?(?:\\d+\\.?\\d*|\\.\\d+)(?:[eE][+-]?\\d+)?)\\s*,\\s*"
    "([+-]?(?:\\d+\\.?\\d*|\\.\\d+)(?:[eE][+-]?\\d+)?)\\s*\\]");
const std::regex kReasoning("reasoning\\s*:", std::regex::icase);

// True when the literal carries more than two digits after the decimal point.
bool more_than_two_decimals(const std::string& literal) {
  const size_t dot = literal.find('.');
  if (dot == std::string::npos) return false;
  size_t digits = 0;
  for (size_t i = dot + 1; i < literal.size() && std::isdigit((unsigned char)literal[i]); ++i)
    ++digits;
  return digits > 2;
}

}  // namespace

ParseResult parse_response(const std::string& raw) {
  // Last "Position:" marker wins: models often restate the format before
  // committing to an answer.
  std::optional<std::smatch> last_marker;
  for (auto it = std::sregex_iterator(raw.begin(), raw.end(), kMarker);
       it != std::sregex_iterator(); ++it)
    last_marker = *it;
  if (!last_marker) return {std::nullopt, ParseErrorKind::MissingPositionMarker};

  const size_t tail_start = last_marker->position(0) + last_marker->length(0);
  const std::string tail = raw.substr(tail_start);

  std::vector<std::smatch> pairs;
  for (auto it = std::sregex_iterator(tail.begin(), tail.end(), kPair);
       it != std::sregex_iterator(); ++it)
    pairs.push_back(*it);
  if (pairs.empty()) return {std::nullopt, ParseErrorKind::MalformedCoordinates};
  if (pairs.size() > 1) return {std::nullopt, ParseErrorKind::MultipleAmbiguousPositions};

  const std::string xs = pairs[0][1].str();
  const std::string ys = pairs[0][2].str();
  const double x = std::strtod(xs.c_str(), nullptr);
  const double y = std::strtod(ys.c_str(), nullptr);
  if (!std::isfinite(x) || !std::isfinite(y))
    return {std::nullopt, ParseErrorKind::MalformedCoordinates};

  ParsedResponse out;
  out.target = Vec2(x, y);
  out.excess_precision = more_than_two_decimals(xs) || more_than_two_decimals(ys);

  // Reasoning: everything between the first "Reasoning:" marker (or the text
  // start) and the winning position marker.
  std::smatch rm;
  size_t begin = 0;
  if (std::regex_search(raw, rm, kReasoning)) {
    out.has_reasoning = true;
    begin = rm.position(0) + rm.length(0);
  }
  const size_t end = last_marker->position(0);
  std::string reasoning = begin < end ? raw.substr(begin, end - begin) : "";
  const auto first = reasoning.find_first_not_of(" \t\r\n");
  const auto last = reasoning.find_last_not_of(" \t\r\n,");
  out.reasoning =
      first == std::string::npos ? "" : reasoning.substr(first, last - first + 1);
  return {out, std::nullopt};
}

}  // namespace flocksim
