#include "quadid/numeric.hpp"

#include <mpfr.h>

#include <cctype>
#include <charconv>
#include <system_error>

namespace quadid {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void malformed(std::string_view text) {
  throw ParseError("malformed scalar '" + std::string(text) + "'", std::string(text));
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

double Rational::to_double() const {
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  mpfr_set_q(tmp, q_.get_mpq_t(), MPFR_RNDN);
  const double d = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return d;
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  mpz_class num;
  mpz_class den = 1;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto p = body.substr(0, slash);
    const auto q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) malformed(text);
    num.set_str(std::string(p), 10);
    den.set_str(std::string(q), 10);
    if (den == 0) throw DivisionByZero();
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) malformed(text);
    num.set_str(std::string(whole) + std::string(frac), 10);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  } else {
    if (!all_digits(body)) malformed(text);
    num.set_str(std::string(body), 10);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

double parse_double(std::string_view text) { return parse_rational(text).to_double(); }

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  if (res.ec != std::errc{}) throw std::runtime_error("format_double: buffer too small");
  return std::string(buf, res.ptr);
}

}  // namespace quadid
