#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nwt {

// Exact rational held as a reduced int64 fraction with positive denominator.
// Addition and comparison go through 128-bit intermediates, so they are exact
// for every representable value; results that no longer fit int64 throw
// instead of silently losing precision.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    num_ = g ? num / g : num;
    den_ = g ? den / g : 1;
  }

  static Rational integer(std::int64_t n) { return Rational(n, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    using I128 = __int128;
    const I128 num = I128(a.num_) * b.den_ + I128(b.num_) * a.den_;
    const I128 den = I128(a.den_) * b.den_;
    return from_i128(num, den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    using I128 = __int128;
    const I128 lhs = I128(a.num_) * b.den_;
    const I128 rhs = I128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
      s += '/';
      s += std::to_string(den_);
    }
    return s;
  }

 private:
  static Rational from_i128(__int128 num, __int128 den) {
    const __int128 anum = num < 0 ? -num : num;
    __int128 g = gcd128(anum, den);
    if (g == 0) g = 1;
    num /= g;
    den /= g;
    constexpr __int128 kMax = INT64_MAX;
    constexpr __int128 kMin = INT64_MIN;
    if (num > kMax || num < kMin || den > kMax)
      throw std::overflow_error("Rational: result does not fit in int64");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace nwt
