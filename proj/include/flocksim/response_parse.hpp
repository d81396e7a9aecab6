#pragma once

#include <optional>
#include <string>

#include "flocksim/vec.hpp"

namespace flocksim {

enum class ParseErrorKind {
  MissingPositionMarker,      // no "Position:" marker anywhere
  MalformedCoordinates,       // marker present, no usable "[x, y]" after it
  MultipleAmbiguousPositions  // more than one "[x, y]" after the last marker
};

std::string to_string(ParseErrorKind kind);

struct ParsedResponse {
  Vec2 target = Vec2::Zero();
  std::string reasoning;
  bool has_reasoning = false;     // a "Reasoning:" marker was present
  bool excess_precision = false;  // a coordinate carried more than 2 decimals
};

struct ParseResult {
  std::optional<ParsedResponse> value;
  std::optional<ParseErrorKind> error;

  bool ok() const { return value.has_value(); }
};

// Extract the target coordinates from free-form assistant text: the LAST
// "Position:" marker wins; exactly one bracketed "[x, y]" pair must follow
// it. Tolerates surrounding prose, markdown fences, and line breaks. Never
// throws on any input byte sequence.
ParseResult parse_response(const std::string& raw);

}  // namespace flocksim
