#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace setorbits {

/// Arbitrary-precision non-negative count.
using BigCount = mpz_class;

/// Raised when an identity that must hold exactly (a Burnside division, a
/// binomial term) does not. Always indicates a bug or corrupt input.
class InconsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Raised when a brute-force oracle would exceed its work budget.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// numerator / denominator, throwing InconsistencyError unless exact.
BigCount exact_div(const BigCount& numerator, const BigCount& denominator,
                   std::string_view what);

BigCount binomial(const BigCount& n, unsigned long k);
BigCount falling_factorial(const BigCount& s, unsigned long k);
BigCount factorial(unsigned long n);
BigCount pow2(unsigned long e);

std::string to_string(const BigCount& value);
BigCount parse_count(std::string_view text);

}  // namespace setorbits
