#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "setorbits/bigcount.hpp"

namespace setorbits {

inline constexpr mpfr_prec_t kDefaultPrecisionBits = 256;

/// Certified real interval [lo, hi] with MPFR endpoints.
///
/// Every operation rounds lo toward -inf and hi toward +inf, so the exact
/// result of the same expression on exact inputs always lies inside.
class Enclosure {
public:
  explicit Enclosure(mpfr_prec_t precision = kDefaultPrecisionBits);
  Enclosure(const Enclosure& other);
  Enclosure(Enclosure&& other) noexcept;
  Enclosure& operator=(Enclosure other) noexcept;
  ~Enclosure();

  static Enclosure exact(const BigCount& value, mpfr_prec_t precision = kDefaultPrecisionBits);
  static Enclosure rational(const BigCount& numerator, const BigCount& denominator,
                            mpfr_prec_t precision = kDefaultPrecisionBits);
  /// Exact decimal literal such as "0.1712268716679245433".
  static Enclosure decimal(std::string_view text, mpfr_prec_t precision = kDefaultPrecisionBits);
  /// log2 of an exact positive integer.
  static Enclosure log2(const BigCount& value, mpfr_prec_t precision = kDefaultPrecisionBits);

  Enclosure log2() const;  // requires lo > 0
  Enclosure pow2() const;  // 2^x, monotone
  Enclosure sqrt() const;  // requires lo >= 0
  friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  /// Division by an enclosure that excludes zero.
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b);
  /// Smallest enclosure containing both.
  friend Enclosure hull(const Enclosure& a, const Enclosure& b);
  /// Enclosure of min(x, y) over x ∈ a, y ∈ b.
  friend Enclosure min(const Enclosure& a, const Enclosure& b);

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  const __mpfr_struct* lo() const { return lo_; }
  const __mpfr_struct* hi() const { return hi_; }
  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  /// Upper bound on hi - lo.
  Enclosure width() const;

  /// lo ≥ other.hi: the inequality this ≥ other holds for every pair of points.
  bool certainly_ge(const Enclosure& other) const;
  bool certainly_gt(const Enclosure& other) const;
  bool certainly_le(const Enclosure& other) const { return other.certainly_ge(*this); }
  bool certainly_lt(const Enclosure& other) const { return other.certainly_gt(*this); }
  /// other ⊆ this.
  bool contains(const Enclosure& other) const;
  /// this ⊆ (other.lo, other.hi) with strict inequalities.
  bool strictly_inside(const Enclosure& lower, const Enclosure& upper) const;
  bool intersects(const Enclosure& other) const;

  /// Outward-rounded fixed-point decimals: lo rounded down and hi rounded up
  /// to `digits` places after the point.
  std::string lo_string(int digits) const;
  std::string hi_string(int digits) const;
  std::string str(int digits) const;  // "[lo, hi]"

private:
  mpfr_t lo_;
  mpfr_t hi_;
};

/// Interval of all reals that round to the decimal `text` at its last digit:
/// [text - ½ulp, text + ½ulp].
Enclosure decimal_rounding_interval(std::string_view text,
                                    mpfr_prec_t precision = kDefaultPrecisionBits);

}  // namespace setorbits
