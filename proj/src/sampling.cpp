#include "fxagg/sampling.hpp"

#include <cmath>
#include <numeric>

#include "fxagg/errors.hpp"

namespace fxagg {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t x = seed ^ (tag * 0x9E3779B97F4A7C15ULL);
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double SampleStream::log_uniform(double lo, double hi) {
  if (!(lo > 0.0) || !(hi >= lo)) {
    throw DomainError("log-uniform range must satisfy 0 < lo <= hi");
  }
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

std::size_t SampleStream::below(std::size_t n) {
  if (n == 0) throw DomainError("below(0) is empty");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

std::vector<std::size_t> SampleStream::permutation(std::size_t n) {
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(sigma[i - 1], sigma[below(i)]);
  }
  return sigma;
}

std::vector<double> SampleStream::rates(std::size_t n, double lo, double hi) {
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(log_uniform(lo, hi));
  return out;
}

}  // namespace fxagg
