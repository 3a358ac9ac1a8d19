#include "setorbits/enclosure.hpp"

#include <stdexcept>
#include <utility>

namespace setorbits {
namespace {

BigCount power_of_ten(int digits) {
  BigCount out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return out;
}

// Integer z printed as z / 10^digits in fixed notation.
std::string fixed_point(const BigCount& scaled, int digits) {
  BigCount magnitude = abs(scaled);
  std::string text = magnitude.get_str();
  if (text.size() <= static_cast<std::size_t>(digits)) {
    text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
  }
  if (digits > 0) text.insert(text.size() - static_cast<std::size_t>(digits), ".");
  return (scaled < 0 ? "-" : "") + text;
}

std::string rounded_decimal(const __mpfr_struct* value, int digits, mpfr_rnd_t mode) {
  if (digits < 0) throw std::invalid_argument("digits must be >= 0");
  mpfr_t scaled;
  mpfr_init2(scaled, mpfr_get_prec(value) + 8);
  mpfr_mul_z(scaled, value, power_of_ten(digits).get_mpz_t(), mode);
  BigCount integer;
  mpfr_get_z(integer.get_mpz_t(), scaled, mode);
  mpfr_clear(scaled);
  return fixed_point(integer, digits);
}

}  // namespace

Enclosure::Enclosure(mpfr_prec_t precision) {
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Enclosure::Enclosure(const Enclosure& other) {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Enclosure::Enclosure(Enclosure&& other) noexcept : Enclosure(other.precision()) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Enclosure& Enclosure::operator=(Enclosure other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Enclosure::~Enclosure() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Enclosure Enclosure::exact(const BigCount& value, mpfr_prec_t precision) {
  Enclosure out(precision);
  mpfr_set_z(out.lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(out.hi_, value.get_mpz_t(), MPFR_RNDU);
  return out;
}

Enclosure Enclosure::rational(const BigCount& numerator, const BigCount& denominator,
                              mpfr_prec_t precision) {
  if (denominator == 0) throw std::invalid_argument("rational: zero denominator");
  mpq_class q(numerator, denominator);
  q.canonicalize();
  Enclosure out(precision);
  mpfr_set_q(out.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, q.get_mpq_t(), MPFR_RNDU);
  return out;
}

Enclosure Enclosure::decimal(std::string_view text, mpfr_prec_t precision) {
  const std::string s(text);
  Enclosure out(precision);
  char* end = nullptr;
  mpfr_strtofr(out.lo_, s.c_str(), &end, 10, MPFR_RNDD);
  if (end == s.c_str() || *end != '\0') throw std::invalid_argument("bad decimal '" + s + "'");
  mpfr_strtofr(out.hi_, s.c_str(), &end, 10, MPFR_RNDU);
  return out;
}

Enclosure Enclosure::log2(const BigCount& value, mpfr_prec_t precision) {
  if (value <= 0) throw std::domain_error("log2 of a non-positive integer");
  return exact(value, precision).log2();
}

Enclosure Enclosure::log2() const {
  if (mpfr_sgn(lo_) <= 0) throw std::domain_error("log2 of an enclosure reaching zero");
  Enclosure out(precision());
  mpfr_log2(out.lo_, lo_, MPFR_RNDD);
  mpfr_log2(out.hi_, hi_, MPFR_RNDU);
  return out;
}

Enclosure Enclosure::pow2() const {
  Enclosure out(precision());
  mpfr_exp2(out.lo_, lo_, MPFR_RNDD);
  mpfr_exp2(out.hi_, hi_, MPFR_RNDU);
  return out;
}

Enclosure Enclosure::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw std::domain_error("sqrt of an enclosure below zero");
  Enclosure out(precision());
  mpfr_sqrt(out.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(out.hi_, hi_, MPFR_RNDU);
  return out;
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  Enclosure out(std::max(a.precision(), b.precision()));
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  Enclosure out(std::max(a.precision(), b.precision()));
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  const mpfr_prec_t precision = std::max(a.precision(), b.precision());
  Enclosure out(precision);
  mpfr_t down, up;
  mpfr_init2(down, precision);
  mpfr_init2(up, precision);
  bool first = true;
  for (const auto* x : {a.lo_, a.hi_}) {
    for (const auto* y : {b.lo_, b.hi_}) {
      mpfr_mul(down, x, y, MPFR_RNDD);
      mpfr_mul(up, x, y, MPFR_RNDU);
      if (first || mpfr_less_p(down, out.lo_)) mpfr_set(out.lo_, down, MPFR_RNDD);
      if (first || mpfr_greater_p(up, out.hi_)) mpfr_set(out.hi_, up, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(down);
  mpfr_clear(up);
  return out;
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) {
    throw std::domain_error("division by an enclosure containing zero");
  }
  const mpfr_prec_t precision = std::max(a.precision(), b.precision());
  Enclosure reciprocal(precision);
  mpfr_ui_div(reciprocal.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(reciprocal.hi_, 1, b.lo_, MPFR_RNDU);
  return a * reciprocal;
}

Enclosure Enclosure::width() const {
  Enclosure out(precision());
  mpfr_sub(out.lo_, hi_, lo_, MPFR_RNDD);
  mpfr_sub(out.hi_, hi_, lo_, MPFR_RNDU);
  return out;
}

bool Enclosure::certainly_ge(const Enclosure& other) const {
  return mpfr_greaterequal_p(lo_, other.hi_) != 0;
}

bool Enclosure::certainly_gt(const Enclosure& other) const {
  return mpfr_greater_p(lo_, other.hi_) != 0;
}

bool Enclosure::contains(const Enclosure& other) const {
  return mpfr_lessequal_p(lo_, other.lo_) && mpfr_lessequal_p(other.hi_, hi_);
}

bool Enclosure::strictly_inside(const Enclosure& lower, const Enclosure& upper) const {
  return certainly_gt(lower) && certainly_lt(upper);
}

bool Enclosure::intersects(const Enclosure& other) const {
  return mpfr_lessequal_p(lo_, other.hi_) && mpfr_lessequal_p(other.lo_, hi_);
}

std::string Enclosure::lo_string(int digits) const { return rounded_decimal(lo_, digits, MPFR_RNDD); }

std::string Enclosure::hi_string(int digits) const { return rounded_decimal(hi_, digits, MPFR_RNDU); }

std::string Enclosure::str(int digits) const {
  return "[" + lo_string(digits) + ", " + hi_string(digits) + "]";
}

Enclosure decimal_rounding_interval(std::string_view text, mpfr_prec_t precision) {
  std::string digits;
  int fraction_digits = -1;
  bool negative = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (i == 0 && (c == '-' || c == '+')) {
      negative = c == '-';
    } else if (c == '.' && fraction_digits < 0) {
      fraction_digits = 0;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (fraction_digits >= 0) ++fraction_digits;
    } else {
      throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
  fraction_digits = std::max(fraction_digits, 0);
  BigCount integer(digits, 10);
  if (negative) integer = -integer;
  const BigCount denominator = 2 * power_of_ten(fraction_digits);
  return hull(Enclosure::rational(2 * integer - 1, denominator, precision),
              Enclosure::rational(2 * integer + 1, denominator, precision));
}

Enclosure hull(const Enclosure& a, const Enclosure& b) {
  Enclosure out(std::max(a.precision(), b.precision()));
  mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Enclosure min(const Enclosure& a, const Enclosure& b) {
  Enclosure out(std::max(a.precision(), b.precision()));
  mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

}  // namespace setorbits
