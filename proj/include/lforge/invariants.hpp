#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lforge/graded_algebra.hpp"

namespace lforge {

using DoubleMatrix = std::vector<std::vector<double>>;

/// Finite subgroup of O(n) given by its full element list.
///
/// Exact groups carry rational matrices and support averaging. Groups with
/// irrational entries are stored in float mode and only support queries that
/// do not need exact output.
class FiniteOrthogonalGroup {
 public:
  /// Verifies orthogonality, identity, and closure; throws GroupError.
  static FiniteOrthogonalGroup exact(std::size_t dimension, std::vector<RationalMatrix> elements);
  static FiniteOrthogonalGroup floating(std::size_t dimension, std::vector<DoubleMatrix> elements);

  std::size_t dimension() const { return dimension_; }
  std::size_t order() const { return is_exact() ? exact_.size() : float_.size(); }
  bool is_exact() const { return !float_mode_; }

  /// Throws FloatModeError in float mode.
  const std::vector<RationalMatrix>& elements() const;
  /// Float copies of the elements; available in both modes.
  std::vector<DoubleMatrix> float_elements() const;

 private:
  FiniteOrthogonalGroup() = default;

  std::size_t dimension_ = 0;
  bool float_mode_ = false;
  std::vector<RationalMatrix> exact_;
  std::vector<DoubleMatrix> float_;
};

FiniteOrthogonalGroup neg_id_group(std::size_t n);
FiniteOrthogonalGroup signed_permutation_group(std::size_t n);
/// {I, reflection x_axis -> -x_axis}, with 1-based axis.
FiniteOrthogonalGroup cyclic_sign_group(std::size_t n, std::size_t axis);
/// Dihedral group of order 2g on R^2; exact for g in {1, 2, 4}, float mode otherwise.
FiniteOrthogonalGroup dihedral_group(unsigned g);

/// (M . f)(x) = f(M^T x) for orthogonal M.
Polynomial act(const RationalMatrix& m, const Polynomial& f);

/// (1/|G|) sum_g g.f, summed in element-list order.
Polynomial group_average(const FiniteOrthogonalGroup& group, const Polynomial& f);

/// Generators of R[V]^G up to `max_degree`, built by averaging monomials degree by
/// degree and keeping only what the lower-degree generators do not already produce.
GradedSubalgebra invariant_ring(const FiniteOrthogonalGroup& group, unsigned max_degree);

/// Default completion degree: the group order (Noether bound).
inline unsigned noether_bound(const FiniteOrthogonalGroup& group) { return static_cast<unsigned>(group.order()); }

/// Re((x1 + i x2)^g) with integer coefficients.
Polynomial dihedral_form(unsigned g);

/// <x1^2 + x2^2, Re((x1 + i x2)^g)>, the invariants of the dihedral group of order 2g.
GradedSubalgebra dihedral_invariants(unsigned g);

struct ReynoldsAverageReport {
  bool agree = true;
  std::size_t trials = 0;
  std::optional<Polynomial> counterexample;
};

/// Compares the apolar projection onto invariant_ring(G, D) with group averaging
/// on `trials` random polynomials of degree <= D.
ReynoldsAverageReport verify_reynolds_equals_average(const FiniteOrthogonalGroup& group, unsigned max_degree,
                                                     std::size_t trials, std::uint64_t seed = 1);

}  // namespace lforge
