#ifndef FXAGG_RATIONAL_HPP
#define FXAGG_RATIONAL_HPP

#include <cstdint>
#include <span>
#include <string>

namespace fxagg {

// Exact positive rational. Probabilities never pass through floats; the
// expansion argument needs exact lcm arithmetic to be deterministic.
//
// Stored normalized (gcd(num, den) == 1). Arithmetic goes through 128-bit
// intermediates and throws ProbabilityError if a reduced result would not
// fit in 64 bits, rather than overflowing silently.
class Rational {
 public:
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  Rational operator+(const Rational& other) const;
  bool operator==(const Rational& other) const noexcept = default;

  bool is_one() const noexcept { return num_ == 1 && den_ == 1; }
  // num/den <= 1
  bool at_most_one() const noexcept { return num_ <= den_; }

  double to_double() const noexcept;

  // "num/den"
  std::string to_string() const;
  // Strict inverse of to_string: two positive integers separated by '/'.
  static Rational parse(const std::string& text);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

// Least common multiple of all denominators; throws ProbabilityError on
// 64-bit overflow.
std::int64_t common_denominator(std::span<const Rational> values);

}  // namespace fxagg

#endif  // FXAGG_RATIONAL_HPP
