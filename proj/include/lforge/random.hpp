#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lforge/graded_algebra.hpp"
#include "lforge/polynomial.hpp"

namespace lforge {

using Rng = std::mt19937_64;

/// Dense-ish random polynomial: each monomial of degree in [min_degree, max_degree]
/// is kept with probability `density`, with an integer coefficient in [-coeff_bound, coeff_bound].
Polynomial random_polynomial(Rng& rng, std::size_t n, unsigned min_degree, unsigned max_degree,
                             double density = 0.5, int coeff_bound = 5);

inline Polynomial random_form(Rng& rng, std::size_t n, unsigned degree, double density = 0.6) {
  return random_polynomial(rng, n, degree, degree, density);
}

/// Random element of A of degree <= max_degree: a combination of degree-basis elements.
Polynomial random_algebra_element(Rng& rng, const GradedSubalgebra& algebra, unsigned max_degree,
                                  int coeff_bound = 4);

}  // namespace lforge
