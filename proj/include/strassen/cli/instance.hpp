#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "strassen/measure.hpp"
#include "strassen/poset.hpp"
#include "strassen/rational.hpp"

namespace strassen::cli {

// A problem instance as read from a JSON document:
//   {"order": {"kind": "explicit-pairs", "pairs": [[0, 1]]}
//             | {"kind": "total"} | {"kind": "divisibility"},
//    "mu": {"kind": "explicit", "values": ["1/2", "1/2"]}
//          | {"kind": "geometric", "ratio": "1/2"},
//    "nu": ...,
//    "ground_hint": 8}            // optional prefix size
struct Instance {
  Order order;
  MeasureSource mu;
  MeasureSource nu;
  std::optional<Index> ground_hint;
};

// ParseError for malformed JSON or rationals and for missing or mistyped
// fields; ValidationError (with a field path) when a well-formed document
// describes an invalid order or measure.
Instance parse_instance(std::string_view text);

nlohmann::json serialize_instance(const Instance& instance);

// Reads "p/q" (or an integer "p"); ParseError names `path` on failure.
Rational parse_rational(const nlohmann::json& value, const std::string& path);

// Reads a whole file; ParseError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace strassen::cli
