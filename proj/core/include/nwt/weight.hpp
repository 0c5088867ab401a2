#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "nwt/random.hpp"
#include "nwt/rational.hpp"

namespace nwt {

enum class WeightParseStatus { ok, malformed, overflow };

// Weight domain: an exact, totally ordered group under addition. The two
// shipped instantiations are signed 64-bit integers and exact rationals.
// Floating point is deliberately unsupported; equality on sums is load-bearing
// throughout, so every operation must be exact.
template <class W>
struct WeightTraits;

template <>
struct WeightTraits<std::int64_t> {
  static constexpr bool kIntegral = true;
  static constexpr const char* kName = "int";
  // Keeps any sum of three weights, and targets shifted by two weights,
  // exactly representable in int64.
  static constexpr std::int64_t kMaxAbs = std::int64_t{1} << 60;

  static WeightParseStatus parse(std::string_view token, std::int64_t& out) {
    std::int64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) return WeightParseStatus::overflow;
    if (ec != std::errc() || ptr != last) return WeightParseStatus::malformed;
    if (value > kMaxAbs || value < -kMaxAbs) return WeightParseStatus::overflow;
    out = value;
    return WeightParseStatus::ok;
  }

  static std::string format(std::int64_t w) { return std::to_string(w); }

  static std::int64_t sample(detail::SplitMix64& rng, std::int64_t lo,
                             std::int64_t hi, WeightDistribution dist) {
    switch (dist) {
      case WeightDistribution::constant:
        return lo;
      case WeightDistribution::uniform: {
        const std::uint64_t span =
            static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
        return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) +
                                         rng.bounded(span + 1));
      }
      case WeightDistribution::zipf: {
        const std::uint64_t span =
            static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
        const detail::ZipfSampler zipf(span + 1);
        return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) +
                                         zipf.draw(rng));
      }
    }
    return lo;
  }
};

template <>
struct WeightTraits<Rational> {
  static constexpr bool kIntegral = false;
  static constexpr const char* kName = "rational";
  static constexpr std::int64_t kMaxAbs = std::int64_t{1} << 60;
  // Denominator grid used when sampling random rational weights.
  static constexpr std::int64_t kSampleDenominatorBound = 7;

  static WeightParseStatus parse(std::string_view token, Rational& out) {
    const std::size_t slash = token.find('/');
    std::string_view num_part = token.substr(0, slash);
    std::int64_t num = 0;
    const WeightParseStatus ns = WeightTraits<std::int64_t>::parse(num_part, num);
    if (ns != WeightParseStatus::ok) return ns;
    std::int64_t den = 1;
    if (slash != std::string_view::npos) {
      std::string_view den_part = token.substr(slash + 1);
      if (den_part.empty() || den_part.find('/') != std::string_view::npos)
        return WeightParseStatus::malformed;
      const WeightParseStatus ds =
          WeightTraits<std::int64_t>::parse(den_part, den);
      if (ds != WeightParseStatus::ok) return ds;
      if (den <= 0) return WeightParseStatus::malformed;
    }
    out = Rational(num, den);
    return WeightParseStatus::ok;
  }

  static std::string format(const Rational& w) { return w.str(); }

  static Rational sample(detail::SplitMix64& rng, const Rational& lo,
                         const Rational& hi, WeightDistribution dist) {
    switch (dist) {
      case WeightDistribution::constant:
        return lo;
      case WeightDistribution::uniform: {
        // Pick a denominator, then a numerator on the induced integer grid.
        // Redraw denominators whose grid misses [lo, hi] entirely.
        bool feasible = false;
        for (std::int64_t q = 1; q <= kSampleDenominatorBound; ++q)
          if (ceil_mul(lo, q) <= floor_mul(hi, q)) feasible = true;
        if (!feasible)
          throw std::invalid_argument(
              "rational sample: no value with bounded denominator in range");
        for (;;) {
          const std::int64_t q = 1 + static_cast<std::int64_t>(rng.bounded(
                                         kSampleDenominatorBound));
          const std::int64_t p_lo = ceil_mul(lo, q);
          const std::int64_t p_hi = floor_mul(hi, q);
          if (p_lo > p_hi) continue;
          const std::uint64_t span = static_cast<std::uint64_t>(p_hi) -
                                     static_cast<std::uint64_t>(p_lo);
          const std::int64_t p = static_cast<std::int64_t>(
              static_cast<std::uint64_t>(p_lo) + rng.bounded(span + 1));
          return Rational(p, q);
        }
      }
      case WeightDistribution::zipf: {
        // Integer-valued zipf over the integers inside [lo, hi].
        const std::int64_t ilo = ceil_mul(lo, 1);
        const std::int64_t ihi = floor_mul(hi, 1);
        if (ilo > ihi)
          throw std::invalid_argument("rational zipf: no integer in range");
        const std::uint64_t span = static_cast<std::uint64_t>(ihi) -
                                   static_cast<std::uint64_t>(ilo);
        const detail::ZipfSampler zipf(span + 1);
        return Rational::integer(static_cast<std::int64_t>(
            static_cast<std::uint64_t>(ilo) + zipf.draw(rng)));
      }
    }
    return lo;
  }

 private:
  // ceil(r * q) and floor(r * q) in exact integer arithmetic.
  static std::int64_t ceil_mul(const Rational& r, std::int64_t q) {
    const __int128 num = __int128(r.num()) * q;
    const __int128 den = r.den();
    __int128 quot = num / den;
    if (num % den != 0 && num > 0) ++quot;
    return static_cast<std::int64_t>(quot);
  }
  static std::int64_t floor_mul(const Rational& r, std::int64_t q) {
    const __int128 num = __int128(r.num()) * q;
    const __int128 den = r.den();
    __int128 quot = num / den;
    if (num % den != 0 && num < 0) --quot;
    return static_cast<std::int64_t>(quot);
  }
};

}  // namespace nwt
