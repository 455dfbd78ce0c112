#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "lforge/polynomial.hpp"

namespace lforge {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Incremental row-echelon form of a set of polynomials viewed as coefficient
/// vectors over the monomial basis. Rows are kept primitive over the integers
/// and reduced fraction-free, one per distinct leading monomial.
class LinearSpan {
 public:
  explicit LinearSpan(std::size_t dimension) : dimension_(dimension) {}

  /// Adds `p` when it is independent of the current rows. Returns whether it was added.
  bool insert(const Polynomial& p);
  bool contains(const Polynomial& p) const;
  std::size_t rank() const { return rows_.size(); }

  /// Remainder of `p` after elimination, up to a nonzero scalar.
  Polynomial reduce(const Polynomial& p) const;

 private:
  std::size_t dimension_;
  std::map<Monomial, Polynomial, GradedLexFirst> rows_;
};

/// Solves a nonsingular square system by fraction-free (Bareiss) elimination with
/// largest-magnitude pivoting. Throws lforge::Error on a singular matrix.
std::vector<Rational> solve_linear_system(const RationalMatrix& a, const std::vector<Rational>& b);

std::size_t matrix_rank(const RationalMatrix& a);

}  // namespace lforge
