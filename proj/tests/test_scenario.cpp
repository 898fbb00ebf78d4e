#include <doctest.h>

#include <cmath>
#include <limits>

#include "fxagg/errors.hpp"
#include "fxagg/rational.hpp"
#include "fxagg/scenario.hpp"

using namespace fxagg;

TEST_CASE("rates must be strictly positive finite") {
  CHECK_NOTHROW(validate_rate(1e-300));
  CHECK_NOTHROW(validate_rate(1e300));
  CHECK_THROWS_AS(validate_rate(0.0), ValidationError);
  CHECK_THROWS_AS(validate_rate(-1.5), ValidationError);
  CHECK_THROWS_AS(validate_rate(std::numeric_limits<double>::infinity()), ValidationError);
  CHECK_THROWS_AS(validate_rate(std::nan("")), ValidationError);
}

TEST_CASE("scenario construction enforces invariants") {
  CHECK_THROWS_AS(RateScenario(std::vector<double>{}), ValidationError);
  CHECK_THROWS_AS(RateScenario({1.0, -4.0}), ValidationError);

  const RateScenario s({1.0, 4.0});
  CHECK(s.size() == 2);
  CHECK_FALSE(s.has_probabilities());
  CHECK(s.is_uniform());
  CHECK_THROWS_AS(s.probabilities(), ProbabilityError);
}

TEST_CASE("probabilities must sum to one exactly") {
  CHECK_NOTHROW(RateScenario({2.0, 16.0}, {Rational(1, 3), Rational(2, 3)}));
  CHECK_NOTHROW(RateScenario({1.0, 2.0, 3.0},
                             {Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
  // 1/3 + 1/3 misses 1
  CHECK_THROWS_AS(RateScenario({1.0, 2.0}, {Rational(1, 3), Rational(1, 3)}),
                  ProbabilityError);
  // over-unit probability
  CHECK_THROWS_AS(RateScenario({1.0, 2.0}, {Rational(3, 2), Rational(1, 2)}),
                  ProbabilityError);
  // length mismatch
  CHECK_THROWS_AS(RateScenario({1.0, 2.0}, {Rational(1, 1)}), ProbabilityError);
}

TEST_CASE("explicit uniform probabilities count as uniform") {
  const RateScenario uniform({1.0, 2.0}, {Rational(1, 2), Rational(1, 2)});
  CHECK(uniform.is_uniform());
  const RateScenario weighted({1.0, 2.0}, {Rational(1, 3), Rational(2, 3)});
  CHECK_FALSE(weighted.is_uniform());
}

TEST_CASE("scenario transforms") {
  const RateScenario s({1.0, 4.0, 0.5});

  const RateScenario flipped = s.reciprocal();
  CHECK(flipped.rate(0) == 1.0);
  CHECK(flipped.rate(1) == 0.25);
  CHECK(flipped.rate(2) == 2.0);

  const RateScenario doubled = s.scaled(2.0);
  CHECK(doubled.rate(1) == 8.0);
  CHECK_THROWS_AS(s.scaled(-1.0), DomainError);
  CHECK_THROWS_AS(s.scaled(0.0), DomainError);

  const std::size_t sigma[] = {2, 0, 1};
  const RateScenario shuffled = s.permuted(sigma);
  CHECK(shuffled.rate(0) == 0.5);
  CHECK(shuffled.rate(1) == 1.0);
  CHECK(shuffled.rate(2) == 4.0);

  const std::size_t bad[] = {0, 1};
  CHECK_THROWS_AS(s.permuted(bad), ArityError);
}

TEST_CASE("rationals normalize and print") {
  const Rational half(2, 4);
  CHECK(half.num() == 1);
  CHECK(half.den() == 2);
  CHECK(half.to_string() == "1/2");
  CHECK((half == Rational(1, 2)));
  CHECK(half.to_double() == 0.5);

  CHECK(((Rational(1, 6) + Rational(1, 3)) == Rational(1, 2)));
  CHECK(Rational(5, 5).is_one());
  CHECK_THROWS_AS(Rational(0, 2), ProbabilityError);
  CHECK_THROWS_AS(Rational(1, 0), ProbabilityError);
}

TEST_CASE("rational parsing is strict") {
  CHECK((Rational::parse("1/3") == Rational(1, 3)));
  CHECK((Rational::parse("10/30") == Rational(1, 3)));
  CHECK_THROWS_AS(Rational::parse("1"), ProbabilityError);
  CHECK_THROWS_AS(Rational::parse("1/"), ProbabilityError);
  CHECK_THROWS_AS(Rational::parse("/3"), ProbabilityError);
  CHECK_THROWS_AS(Rational::parse("a/b"), ProbabilityError);
  CHECK_THROWS_AS(Rational::parse("1/3 "), ProbabilityError);
  CHECK_THROWS_AS(Rational::parse("-1/3"), ProbabilityError);
  CHECK_THROWS_AS(Rational::parse("1.5/3"), ProbabilityError);
}

TEST_CASE("rational arithmetic reports overflow instead of wrapping") {
  const std::int64_t big = (std::int64_t{1} << 62) - 1;
  const Rational a(1, big);
  const Rational b(1, big - 2);
  CHECK_THROWS_AS(a + b, ProbabilityError);
}

TEST_CASE("common denominator is the exact lcm") {
  const Rational probs[] = {Rational(1, 4), Rational(1, 6), Rational(7, 12)};
  CHECK(common_denominator(probs) == 12);
}
