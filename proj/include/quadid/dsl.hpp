#pragma once

// A small language for stating identities over planar points and signed-area
// atoms, e.g.
//
//   K[BCD]*A - K[ACD]*B + K[ABD]*C - K[ABC]*D == 0
//
// Grammar (whitespace insignificant):
//   identity := expr ("==" | "=") expr
//   expr     := term (("+" | "-") term)*
//   term     := factor ("*" factor)* | "-" term
//   factor   := "K[" L L L "]" | literal | L | "(" expr ")"
//   literal  := digits ["." digits] | digits "/" digits
//   L        := "A" .. "Z"
//
// There is no division operator, so both sides are polynomials in the point
// coordinates. Evaluation and verification are exact.

#include "quadid/geometry.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace quadid::dsl {

enum class Type { Scalar, Vector };
enum class Op { Literal, Point, Area, Neg, Add, Sub, Mul };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  Op op;
  Type type;
  Rational value;                 // Literal
  std::array<char, 3> letters{};  // Point uses letters[0]; Area uses all three
  NodePtr lhs, rhs;               // Neg uses lhs only
};

bool structurally_equal(const Node& a, const Node& b);

enum class IdentityKind { Vector, Scalar };

struct IdentityAst {
  IdentityKind kind;
  NodePtr lhs, rhs;

  friend bool operator==(const IdentityAst& a, const IdentityAst& b) {
    return a.kind == b.kind && structurally_equal(*a.lhs, *b.lhs) &&
           structurally_equal(*a.rhs, *b.rhs);
  }
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class TypeError : public std::runtime_error {
 public:
  TypeError(const std::string& msg, std::string subterm)
      : std::runtime_error(msg + ": " + subterm), subterm_(std::move(subterm)) {}
  const std::string& subterm() const noexcept { return subterm_; }

 private:
  std::string subterm_;
};

class MissingAssignment : public std::out_of_range {
 public:
  explicit MissingAssignment(char letter)
      : std::out_of_range(std::string("no coordinates assigned to point ") + letter),
        letter_(letter) {}
  char letter() const noexcept { return letter_; }

 private:
  char letter_;
};

IdentityAst parse_identity(std::string_view text);

// Canonical text; parse_identity(print(ast)) == ast.
std::string print(const IdentityAst& ast);
std::string print(const Node& node);

std::set<char> point_letters(const IdentityAst& ast);

using Assignment = std::map<char, Point2<Rational>>;
using Residual = std::variant<Rational, Vec2<Rational>>;

bool is_zero(const Residual& r);
std::string format_residual(const Residual& r);

/// lhs - rhs under the assignment.
Residual eval_identity(const IdentityAst& ast, const Assignment& assignment);

/// For a vector identity, the difference between the total point weight of
/// the two sides under the assignment (zero when the identity is affinely
/// well formed). Scalar identities always give zero.
Rational weight_imbalance(const IdentityAst& ast, const Assignment& assignment);

struct VerifyOptions {
  std::uint64_t samples = 256;
  std::uint64_t seed = 0;
  std::int64_t range = 1'000'000;
};

struct Refutation {
  std::uint64_t sample;  // zero-based index of the refuting draw
  Assignment counterexample;
  Residual residual;
};

struct VerifyReport {
  std::string identity;
  std::uint64_t samples;
  std::uint64_t seed;
  std::int64_t range;
  std::optional<Refutation> refutation;  // empty means verified
  std::vector<std::string> warnings;

  bool verified() const { return !refutation.has_value(); }
  // Line-oriented "key: value" record.
  std::string to_text() const;
};

/// The assignment used for draw `sample`: integer coordinates uniform in
/// [-range, range], a pure function of (seed, sample, letter).
Assignment draw_assignment(const std::set<char>& letters, std::uint64_t seed,
                           std::uint64_t sample, std::int64_t range);

/// Randomized exact identity test. Evaluates at `samples` independent integer
/// points and reports the first nonzero residual, if any.
VerifyReport verify_identity(const IdentityAst& ast, const VerifyOptions& options = {});

}  // namespace quadid::dsl
