#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quadid {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string token)
      : std::runtime_error(what), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Arbitrary-precision rational, always reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  const mpq_class& raw() const noexcept { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const noexcept { return sgn(q_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  // Correctly rounded (round-to-nearest-even) conversion.
  double to_double() const;

  // Reduced "p/q", denominator omitted when 1.
  std::string str() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_), Raw{}); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  struct Raw {};
  // Results of GMP arithmetic are already canonical.
  Rational(mpq_class q, Raw) : q_(std::move(q)) {}

  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Parses an optionally signed decimal ("-3", "0.125") or fraction ("7/14").
// Decimals are converted exactly; no binary intermediate is involved.
Rational parse_rational(std::string_view text);

// Nearest double to the value denoted by the same grammar.
double parse_double(std::string_view text);

// Shortest decimal that round-trips through parse_double.
std::string format_double(double v);

/// Compile-time backend selection. Every geometric routine is a template over
/// a type satisfying `Scalar`; the two supported backends are `Rational`
/// (exact) and `double` (IEEE binary64). Backends never mix in one computation.
template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "exact";
  static Rational parse(std::string_view t) { return parse_rational(t); }
  static std::string format(const Rational& v) { return v.str(); }
  static Rational abs(const Rational& v) { return quadid::abs(v); }
  static int sign(const Rational& v) { return v.sign(); }
  static double to_double(const Rational& v) { return v.to_double(); }
  static Rational from_int(std::int64_t v) { return Rational(static_cast<long>(v)); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr std::string_view name = "float";
  static double parse(std::string_view t) { return parse_double(t); }
  static std::string format(double v) { return format_double(v); }
  static double abs(double v) { return v < 0 ? -v : v; }
  static int sign(double v) { return (v > 0) - (v < 0); }
  static double to_double(double v) { return v; }
  static double from_int(std::int64_t v) { return static_cast<double>(v); }
};

template <typename S>
concept Scalar = requires(const S& a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { ScalarTraits<S>::exact } -> std::convertible_to<bool>;
};

template <Scalar S>
S divide(const S& a, const S& b) {
  if constexpr (ScalarTraits<S>::exact) {
    return a / b;
  } else {
    if (b == 0.0) throw DivisionByZero();
    return a / b;
  }
}

/// Relative tolerance used by float-backend residual checks: a residual r
/// passes iff |r| <= relative_epsilon * scale, where scale is the largest
/// |coefficient| * |coordinate| product of the particular expression.
struct ToleranceSpec {
  double relative_epsilon = 1e-9;

  bool accepts(double residual, double scale) const {
    return (residual < 0 ? -residual : residual) <= relative_epsilon * scale;
  }
};

}  // namespace quadid
