#include <doctest.h>

#include "nwt/count.hpp"
#include "nwt/detect.hpp"
#include "nwt/oracle.hpp"
#include "test_support.hpp"

using namespace nwt;
using testsupport::complete_graph;
using testsupport::valid_witness;

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(4, 2) == Rational(2, 1));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0, 1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 3) > Rational(-1, 2));
  CHECK((-Rational(3, 7)).num() == -3);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);

  // 1/10 + 2/10 == 3/10 exactly; the float analogue famously is not
  CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
}

TEST_CASE("rational parse and format") {
  Rational r;
  CHECK(WeightTraits<Rational>::parse("3/4", r) == WeightParseStatus::ok);
  CHECK(r == Rational(3, 4));
  CHECK(WeightTraits<Rational>::parse("-6/4", r) == WeightParseStatus::ok);
  CHECK(r == Rational(-3, 2));
  CHECK(WeightTraits<Rational>::parse("5", r) == WeightParseStatus::ok);
  CHECK(r == Rational(5, 1));
  CHECK(WeightTraits<Rational>::parse("1/0", r) == WeightParseStatus::malformed);
  CHECK(WeightTraits<Rational>::parse("1/2/3", r) == WeightParseStatus::malformed);
  CHECK(WeightTraits<Rational>::parse("a/2", r) == WeightParseStatus::malformed);
  CHECK(WeightTraits<Rational>::format(Rational(-3, 2)) == "-3/2");
  CHECK(WeightTraits<Rational>::format(Rational(8, 4)) == "2");
}

TEST_CASE("detection is generic over the rational weight domain") {
  const auto k3 =
      complete_graph<Rational>({Rational(1, 2), Rational(1, 3), Rational(-5, 6)});
  CostLedger ledger;
  const auto w = detect<Rational>(k3, Rational(0, 1), ledger);
  REQUIRE(w.has_value());
  CHECK(valid_witness(k3, *w, Rational(0, 1)));
  CHECK_FALSE(detect<Rational>(k3, Rational(1, 7), ledger).has_value());
}

TEST_CASE("rational detect and count agree with the oracle") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 4 + static_cast<int>(seed % 40);
    const auto g = generate_random<Rational>(
        n, 0.3, Rational(-3, 1), Rational(3, 1), seed,
        WeightDistribution::uniform);
    detail::SplitMix64 rng(seed * 31 + 7);
    const Rational target(static_cast<std::int64_t>(rng.bounded(9)) - 4,
                          1 + static_cast<std::int64_t>(rng.bounded(7)));
    CostLedger ledger;
    const auto fast = detect<Rational>(g, target, ledger);
    const auto slow = oracle::brute_detect(g, target);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) CHECK(valid_witness(g, *fast, target));
    CHECK(count(g, target, ledger).total ==
          oracle::brute_count(g, target).total);
  }
}

TEST_CASE("sparse detection works over rationals") {
  for (std::uint64_t seed = 100; seed < 115; ++seed) {
    const auto g = generate_random<Rational>(60, 0.08, Rational(-2, 1),
                                             Rational(2, 1), seed,
                                             WeightDistribution::uniform);
    const Rational target(1, 2);
    const bool brute = oracle::brute_detect(g, target).has_value();
    CostLedger ledger;
    CHECK(detect_sparse(g, target, std::nullopt, ledger).has_value() == brute);
  }
}

TEST_CASE("sampled rational weights respect the denominator grid") {
  const auto g = generate_random<Rational>(200, 0.0, Rational(-2, 1),
                                           Rational(2, 1), 5,
                                           WeightDistribution::uniform);
  for (int v = 0; v < g.vertex_count(); ++v) {
    CHECK(g.weight(v).den() <= WeightTraits<Rational>::kSampleDenominatorBound);
    CHECK(Rational(-2, 1) <= g.weight(v));
    CHECK(g.weight(v) <= Rational(2, 1));
  }
}
