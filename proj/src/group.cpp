#include "fxagg/group.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "fxagg/errors.hpp"
#include "fxagg/numeric.hpp"

namespace fxagg {

namespace {

void validate_perm(std::span<const std::size_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p]) {
      throw ValidationError("permutation is not a bijection on {0..n-1}");
    }
    seen[p] = true;
  }
}

void validate_point(const LogPoint& x) {
  for (double v : x) {
    if (!std::isfinite(v)) {
      throw ValidationError("log-point coordinates must be finite");
    }
  }
}

std::vector<std::size_t> identity_perm(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return perm;
}

void require_same_arity(std::size_t a, std::size_t b) {
  if (a != b) {
    throw ArityError("group arity mismatch: " + std::to_string(a) + " vs " +
                     std::to_string(b));
  }
}

}  // namespace

GroupElement identity_element(std::size_t n) { return {1, identity_perm(n), 0.0}; }

GroupElement reflection_element(std::size_t n) { return {-1, identity_perm(n), 0.0}; }

GroupElement translation_element(std::size_t n, double shift) {
  return group_element(1, identity_perm(n), shift);
}

GroupElement permutation_element(std::vector<std::size_t> perm) {
  return group_element(1, std::move(perm), 0.0);
}

GroupElement group_element(int sign, std::vector<std::size_t> perm, double shift) {
  if (sign != 1 && sign != -1) {
    throw ValidationError("group element sign must be +1 or -1");
  }
  if (perm.empty()) {
    throw ValidationError("group element needs arity at least 1");
  }
  if (!std::isfinite(shift)) {
    throw ValidationError("group element shift must be finite");
  }
  validate_perm(perm);
  return {sign, std::move(perm), shift};
}

LogPoint act(const GroupElement& g, const LogPoint& x) {
  require_same_arity(g.arity(), x.size());
  validate_point(x);
  LogPoint y(x.size());
  const double s = static_cast<double>(g.sign);
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = s * x[g.perm[i]] + g.shift;
  }
  return y;
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
  require_same_arity(g1.arity(), g2.arity());
  // (g1 g2)(x) = s1 s2 x_{p2(p1(i))} + s1 shift2 + shift1
  GroupElement out;
  out.sign = g1.sign * g2.sign;
  out.perm.resize(g1.arity());
  for (std::size_t i = 0; i < g1.arity(); ++i) {
    out.perm[i] = g2.perm[g1.perm[i]];
  }
  out.shift = static_cast<double>(g1.sign) * g2.shift + g1.shift;
  return out;
}

GroupElement inverse(const GroupElement& g) {
  GroupElement out;
  out.sign = g.sign;
  out.perm.resize(g.arity());
  for (std::size_t i = 0; i < g.arity(); ++i) {
    out.perm[g.perm[i]] = i;
  }
  out.shift = -static_cast<double>(g.sign) * g.shift;
  return out;
}

int character(const GroupElement& g) { return g.sign; }

GroupElement reversing_stabilizer(const LogPoint& x) {
  if (x.size() != 2) {
    throw ArityError("the reversing stabilizer construction is specific to n = 2");
  }
  validate_point(x);
  return group_element(-1, {1, 0}, x[0] + x[1]);
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw ArityError("matrix dimension mismatch");
  SquareMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const double aik = at(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        out.at(i, j) += aik * rhs.at(k, j);
      }
    }
  }
  return out;
}

std::vector<double> SquareMatrix::operator*(std::span<const double> v) const {
  if (v.size() != dim_) throw ArityError("matrix-vector dimension mismatch");
  std::vector<double> out(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) sum += at(i, j) * v[j];
    out[i] = sum;
  }
  return out;
}

double SquareMatrix::max_abs_difference(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim() != b.dim()) throw ArityError("matrix dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
    }
  }
  return worst;
}

SquareMatrix to_matrix(const GroupElement& g) {
  const std::size_t n = g.arity();
  SquareMatrix m(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, g.perm[i]) = static_cast<double>(g.sign);
    m.at(i, n) = g.shift;
  }
  m.at(n, n) = 1.0;
  return m;
}

double residual_h(const Aggregator& agg, const LogPoint& x) {
  validate_point(x);
  std::vector<double> rates;
  rates.reserve(x.size());
  for (double v : x) rates.push_back(std::exp(v));
  const double mean = numeric::kahan_sum(x) / static_cast<double>(x.size());
  return std::log(agg.eval(rates)) - mean;
}

EquivarianceResult check_equivariance(const Aggregator& agg, const GroupElement& g,
                                      const LogPoint& x, double tolerance) {
  const double mapped = residual_h(agg, act(g, x));
  const double expected = static_cast<double>(character(g)) * residual_h(agg, x);
  const double deviation = std::abs(mapped - expected);
  return {deviation <= tolerance, deviation};
}

}  // namespace fxagg
