#include "fxagg/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "fxagg/errors.hpp"

namespace fxagg {

namespace {

using int128 = __int128;

constexpr std::int64_t kMax64 = std::numeric_limits<std::int64_t>::max();

std::int64_t narrow_checked(int128 v, const char* what) {
  if (v > static_cast<int128>(kMax64)) {
    throw ProbabilityError(std::string(what) + " overflows 64-bit rational arithmetic");
  }
  return static_cast<std::int64_t>(v);
}

int128 gcd128(int128 a, int128 b) {
  while (b != 0) {
    const int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (num <= 0 || den <= 0) {
    throw ProbabilityError("rational must have positive numerator and denominator");
  }
  const std::int64_t g = std::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::operator+(const Rational& other) const {
  int128 num = static_cast<int128>(num_) * other.den_ +
               static_cast<int128>(other.num_) * den_;
  int128 den = static_cast<int128>(den_) * other.den_;
  const int128 g = gcd128(num, den);
  num /= g;
  den /= g;
  return Rational(narrow_checked(num, "rational sum numerator"),
                  narrow_checked(den, "rational sum denominator"));
}

double Rational::to_double() const noexcept {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == text.size()) {
    throw ProbabilityError("probability must be written as \"num/den\", got \"" + text + "\"");
  }
  const auto parse_int = [&](const char* first, const char* last) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw ProbabilityError("invalid integer in probability \"" + text + "\"");
    }
    return value;
  };
  const char* data = text.data();
  const std::int64_t num = parse_int(data, data + slash);
  const std::int64_t den = parse_int(data + slash + 1, data + text.size());
  return Rational(num, den);
}

std::int64_t common_denominator(std::span<const Rational> values) {
  int128 lcm = 1;
  for (const Rational& v : values) {
    const int128 den = v.den();
    lcm = lcm / gcd128(lcm, den) * den;
    if (lcm > static_cast<int128>(kMax64)) {
      throw ProbabilityError("common denominator overflows 64 bits");
    }
  }
  return static_cast<std::int64_t>(lcm);
}

}  // namespace fxagg
