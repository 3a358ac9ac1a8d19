#include "setorbits/bigcount.hpp"

#include <string>

namespace setorbits {

BigCount exact_div(const BigCount& numerator, const BigCount& denominator,
                   std::string_view what) {
  if (denominator == 0) {
    throw InconsistencyError(std::string(what) + ": division by zero");
  }
  BigCount quotient;
  BigCount remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
              denominator.get_mpz_t());
  if (remainder != 0) {
    throw InconsistencyError(std::string(what) + ": " + numerator.get_str() +
                             " is not divisible by " + denominator.get_str());
  }
  return quotient;
}

BigCount binomial(const BigCount& n, unsigned long k) {
  BigCount out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

BigCount falling_factorial(const BigCount& s, unsigned long k) {
  BigCount out = 1;
  for (unsigned long i = 0; i < k; ++i) {
    BigCount factor = s - i;
    if (factor <= 0) return 0;
    out *= factor;
  }
  return out;
}

BigCount factorial(unsigned long n) {
  BigCount out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigCount pow2(unsigned long e) {
  BigCount out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

std::string to_string(const BigCount& value) { return value.get_str(); }

BigCount parse_count(std::string_view text) {
  std::string digits;
  for (char c : text) {
    if (c == ',' || c == '_') continue;
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a non-negative integer: '" + std::string(text) + "'");
    }
    digits.push_back(c);
  }
  if (digits.empty()) throw std::invalid_argument("empty integer");
  return BigCount(digits, 10);
}

}  // namespace setorbits
