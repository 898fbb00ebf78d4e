#ifndef FXAGG_GROUP_HPP
#define FXAGG_GROUP_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "fxagg/aggregators.hpp"

namespace fxagg {

// A point in log-rate coordinates, x_i = log e_i. Coordinates must be
// finite wherever a point enters an operation.
using LogPoint = std::vector<double>;

// One element of the transformation group acting on log-rate space:
//   (gamma x)_i = sign * x_{perm(i)} + shift
// generated by coordinate permutations, diagonal translations, and the
// reflection through the origin. Stored in this normal form so composition
// is exact in the permutation and sign parts.
struct GroupElement {
  int sign = 1;                    // +1 or -1; this is the character value
  std::vector<std::size_t> perm;   // bijection on {0..n-1}
  double shift = 0.0;

  std::size_t arity() const noexcept { return perm.size(); }
};

GroupElement identity_element(std::size_t n);
GroupElement reflection_element(std::size_t n);
GroupElement translation_element(std::size_t n, double shift);
// Throws ValidationError unless perm is a bijection.
GroupElement permutation_element(std::vector<std::size_t> perm);
// General constructor with full validation.
GroupElement group_element(int sign, std::vector<std::size_t> perm, double shift);

// Coordinate i of the result is sign * x[perm[i]] + shift.
LogPoint act(const GroupElement& g, const LogPoint& x);

// act(compose(g1, g2), x) == act(g1, act(g2, x)).
GroupElement compose(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);

// The sign homomorphism into {+1, -1}; multiplicative under compose.
int character(const GroupElement& g);

// For n = 2 every point is fixed by a sign-reversing element:
// swap + reflection + translation by x_0 + x_1. Its existence forces the
// odd residual of any axiom-satisfying arity-2 aggregator to vanish.
GroupElement reversing_stabilizer(const LogPoint& x);

// Dense square matrix, just enough for the homogeneous representation.
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0.0) {}

  std::size_t dim() const noexcept { return dim_; }
  double& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  double at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  SquareMatrix operator*(const SquareMatrix& rhs) const;
  std::vector<double> operator*(std::span<const double> v) const;

  static double max_abs_difference(const SquareMatrix& a, const SquareMatrix& b);

 private:
  std::size_t dim_;
  std::vector<double> a_;
};

// Homogeneous (n+1)x(n+1) form: signed permutation block, the shift in the
// last column, and a final row (0,...,0,1). Matrix multiplication mirrors
// compose(), and M * (x, 1) reproduces act().
SquareMatrix to_matrix(const GroupElement& g);

// h(x) = log A(e^{x_1}, ..., e^{x_n}) - mean(x): the log-residual of the
// aggregator against the geometric mean. Identically zero for the
// geometric mean itself.
double residual_h(const Aggregator& agg, const LogPoint& x);

struct EquivarianceResult {
  bool pass = false;
  double deviation = 0.0;
};

// The axioms are equivalent to h(gamma x) = character(gamma) * h(x); this
// measures |h(gamma x) - character(gamma) h(x)| at one (gamma, x).
EquivarianceResult check_equivariance(const Aggregator& agg, const GroupElement& g,
                                      const LogPoint& x, double tolerance);

}  // namespace fxagg

#endif  // FXAGG_GROUP_HPP
