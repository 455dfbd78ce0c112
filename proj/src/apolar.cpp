#include "lforge/apolar.hpp"

#include "lforge/errors.hpp"

namespace lforge {

namespace {

void multi_index_rec(std::vector<unsigned>& exps, std::size_t var, unsigned remaining,
                     const std::function<void(const Monomial&)>& visit) {
  if (var + 1 == exps.size()) {
    exps[var] = remaining;
    visit(Monomial(exps));
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    exps[var] = e;
    multi_index_rec(exps, var + 1, remaining - e, visit);
  }
}

void check_dims(const Polynomial& f, const Polynomial& g) {
  if (f.dimension() != g.dimension())
    throw DimensionError("dimension mismatch: " + std::to_string(f.dimension()) + " vs " +
                         std::to_string(g.dimension()));
}

}  // namespace

void for_each_multi_index(std::size_t n, unsigned k, const std::function<void(const Monomial&)>& visit) {
  std::vector<unsigned> exps(n, 0);
  multi_index_rec(exps, 0, k, visit);
}

Integer multinomial(const Monomial& alpha) { return factorial(alpha.degree()) / alpha.factorial(); }

Polynomial bullet(const Polynomial& f, const Polynomial& g, unsigned k) {
  check_dims(f, g);
  Polynomial result(f.dimension());
  if (f.is_zero() || g.is_zero() || static_cast<int>(k) > std::min(f.degree(), g.degree())) return result;
  for_each_multi_index(f.dimension(), k, [&](const Monomial& alpha) {
    Polynomial df = partial(f, alpha);
    if (df.is_zero()) return;
    Polynomial dg = partial(g, alpha);
    if (dg.is_zero()) return;
    result += (df * dg) * Rational(multinomial(alpha));
  });
  return result;
}

Polynomial bullet_inductive(const Polynomial& f, const Polynomial& g, unsigned k) {
  check_dims(f, g);
  if (k == 0) return f * g;
  Polynomial lhs = laplacian(bullet_inductive(f, g, k - 1));
  lhs -= bullet_inductive(laplacian(f), g, k - 1);
  lhs -= bullet_inductive(f, laplacian(g), k - 1);
  return lhs * make_rational(1, 2);
}

Polynomial dual_apply(const Polynomial& f, const Polynomial& g) {
  check_dims(f, g);
  Polynomial result(f.dimension());
  for (const auto& [alpha, c] : f.terms()) result += partial(g, alpha) * c;
  return result;
}

Rational inner_product(const Polynomial& f, const Polynomial& g) {
  check_dims(f, g);
  if (f.is_zero() || g.is_zero()) return 0;
  if (!f.is_homogeneous() || !g.is_homogeneous())
    throw GradingError("inner product is defined on homogeneous polynomials only");
  if (f.degree() != g.degree())
    throw GradingError("inner product of degree " + std::to_string(f.degree()) + " and degree " +
                       std::to_string(g.degree()) + " forms");
  // monomials are orthogonal with <x^a, x^a> = a!
  Rational sum = 0;
  const auto& small = f.size() <= g.size() ? f : g;
  const auto& large = f.size() <= g.size() ? g : f;
  for (const auto& [m, c] : small.terms()) {
    auto it = large.terms().find(m);
    if (it != large.terms().end()) sum += c * it->second * Rational(m.factorial());
  }
  return sum;
}

}  // namespace lforge
