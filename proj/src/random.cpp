#include "lforge/random.hpp"

#include "lforge/apolar.hpp"

namespace lforge {

Polynomial random_polynomial(Rng& rng, std::size_t n, unsigned min_degree, unsigned max_degree, double density,
                             int coeff_bound) {
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  Polynomial p(n);
  for (unsigned d = min_degree; d <= max_degree; ++d)
    for_each_multi_index(n, d, [&](const Monomial& m) {
      if (keep(rng)) p.add_term(m, coeff(rng));
    });
  return p;
}

Polynomial random_algebra_element(Rng& rng, const GradedSubalgebra& algebra, unsigned max_degree, int coeff_bound) {
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  Polynomial a(algebra.dimension());
  for (unsigned d = 0; d <= max_degree; ++d)
    for (const auto& b : algebra.degree_basis(d)) a += b * Rational(coeff(rng));
  return a;
}

}  // namespace lforge
