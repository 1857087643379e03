#pragma once

// Line-oriented quadruple records:
//
//   {"A":["10","0"],"B":["16","4"],"C":["4","6"],"D":["0","0"]}
//
// Coordinates are strings in the scalar grammar so exact values survive the
// round trip.

#include "quadid/identities.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quadid {

class RecordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coordinates kept as text until a backend is chosen.
struct QuadRecord {
  std::array<std::array<std::string, 2>, 4> coords;  // A, B, C, D

  template <Scalar S>
  QuadConfig<S> to_config() const {
    auto pt = [&](int i) {
      return Point2<S>{ScalarTraits<S>::parse(coords[i][0]), ScalarTraits<S>::parse(coords[i][1])};
    };
    return {pt(0), pt(1), pt(2), pt(3)};
  }
};

/// Throws RecordError (structure) or ParseError / DivisionByZero (scalars).
/// Scalars are validated against the exact grammar.
QuadRecord parse_record(std::string_view line);

std::string format_record(const QuadConfig<Rational>& q);

/// Parses "x,y" into a point.
template <Scalar S>
Point2<S> parse_point_arg(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw RecordError("expected a point as x,y but got '" + std::string(text) + "'");
  }
  return {ScalarTraits<S>::parse(text.substr(0, comma)),
          ScalarTraits<S>::parse(text.substr(comma + 1))};
}

}  // namespace quadid
