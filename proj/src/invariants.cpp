#include "lforge/invariants.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "lforge/apolar.hpp"
#include "lforge/errors.hpp"
#include "lforge/linalg.hpp"
#include "lforge/random.hpp"

namespace lforge {

namespace {

RationalMatrix identity(std::size_t n) {
  RationalMatrix m(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

template <typename T>
std::vector<std::vector<T>> multiply(const std::vector<std::vector<T>>& a, const std::vector<std::vector<T>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<T>> c(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

template <typename T>
std::vector<std::vector<T>> transpose(const std::vector<std::vector<T>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<T>> t(n, std::vector<T>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[j][i];
  return t;
}

double max_abs_diff(const DoubleMatrix& a, const DoubleMatrix& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

template <typename T>
void check_square(const std::vector<std::vector<T>>& m, std::size_t n) {
  if (m.size() != n) throw DimensionError("group element has wrong number of rows");
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("group element has wrong number of columns");
}

}  // namespace

FiniteOrthogonalGroup FiniteOrthogonalGroup::exact(std::size_t dimension, std::vector<RationalMatrix> elements) {
  if (dimension == 0) throw DimensionError("group dimension must be positive");
  if (elements.empty()) throw GroupError("group has no elements");
  std::set<RationalMatrix> table;
  const RationalMatrix id = identity(dimension);
  for (const auto& m : elements) {
    check_square(m, dimension);
    if (multiply(transpose(m), m) != id) throw GroupError("group element is not orthogonal");
    if (!table.insert(m).second) throw GroupError("duplicate group element");
  }
  if (!table.contains(id)) throw GroupError("group does not contain the identity");
  for (const auto& a : elements) {
    if (!table.contains(transpose(a))) throw GroupError("group is not closed under inverses");
    for (const auto& b : elements)
      if (!table.contains(multiply(a, b))) throw GroupError("group is not closed under products");
  }
  FiniteOrthogonalGroup g;
  g.dimension_ = dimension;
  g.exact_ = std::move(elements);
  return g;
}

FiniteOrthogonalGroup FiniteOrthogonalGroup::floating(std::size_t dimension, std::vector<DoubleMatrix> elements) {
  constexpr double kOrthoTol = 1e-12;
  constexpr double kClosureTol = 1e-9;
  if (dimension == 0) throw DimensionError("group dimension must be positive");
  if (elements.empty()) throw GroupError("group has no elements");
  DoubleMatrix id(dimension, std::vector<double>(dimension, 0.0));
  for (std::size_t i = 0; i < dimension; ++i) id[i][i] = 1.0;
  auto find = [&](const DoubleMatrix& m) {
    for (const auto& e : elements)
      if (max_abs_diff(e, m) < kClosureTol) return true;
    return false;
  };
  for (const auto& m : elements) {
    check_square(m, dimension);
    if (max_abs_diff(multiply(transpose(m), m), id) > kOrthoTol) throw GroupError("group element is not orthogonal");
  }
  if (!find(id)) throw GroupError("group does not contain the identity");
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (!find(multiply(a, b))) throw GroupError("group is not closed under products");
  FiniteOrthogonalGroup g;
  g.dimension_ = dimension;
  g.float_mode_ = true;
  g.float_ = std::move(elements);
  return g;
}

const std::vector<RationalMatrix>& FiniteOrthogonalGroup::elements() const {
  if (float_mode_) throw FloatModeError("group has irrational entries; exact elements unavailable");
  return exact_;
}

std::vector<DoubleMatrix> FiniteOrthogonalGroup::float_elements() const {
  if (float_mode_) return float_;
  std::vector<DoubleMatrix> out;
  for (const auto& m : exact_) {
    DoubleMatrix d(dimension_, std::vector<double>(dimension_));
    for (std::size_t i = 0; i < dimension_; ++i)
      for (std::size_t j = 0; j < dimension_; ++j) d[i][j] = m[i][j].get_d();
    out.push_back(std::move(d));
  }
  return out;
}

FiniteOrthogonalGroup neg_id_group(std::size_t n) {
  RationalMatrix neg = identity(n);
  for (std::size_t i = 0; i < n; ++i) neg[i][i] = -1;
  return FiniteOrthogonalGroup::exact(n, {identity(n), neg});
}

FiniteOrthogonalGroup signed_permutation_group(std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<RationalMatrix> elements;
  do {
    for (std::size_t signs = 0; signs < (std::size_t{1} << n); ++signs) {
      RationalMatrix m(n, std::vector<Rational>(n, 0));
      for (std::size_t i = 0; i < n; ++i) m[i][perm[i]] = (signs >> i) & 1u ? -1 : 1;
      elements.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return FiniteOrthogonalGroup::exact(n, std::move(elements));
}

FiniteOrthogonalGroup cyclic_sign_group(std::size_t n, std::size_t axis) {
  if (axis < 1 || axis > n) throw DimensionError("cyclic_sign: axis out of range");
  RationalMatrix flip = identity(n);
  flip[axis - 1][axis - 1] = -1;
  return FiniteOrthogonalGroup::exact(n, {identity(n), flip});
}

FiniteOrthogonalGroup dihedral_group(unsigned g) {
  if (g == 0) throw Error("dihedral group needs g >= 1");
  std::vector<DoubleMatrix> elements;
  for (unsigned k = 0; k < g; ++k) {
    double t = 2.0 * std::numbers::pi * k / g;
    double c = std::cos(t), s = std::sin(t);
    elements.push_back({{c, -s}, {s, c}});
  }
  for (unsigned k = 0; k < g; ++k) {
    double t = 2.0 * std::numbers::pi * k / g;
    double c = std::cos(t), s = std::sin(t);
    elements.push_back({{c, s}, {s, -c}});
  }
  if (g == 1 || g == 2 || g == 4) {
    std::vector<RationalMatrix> exact;
    for (const auto& m : elements) {
      RationalMatrix r(2, std::vector<Rational>(2));
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = static_cast<long>(std::lround(m[i][j]));
      exact.push_back(std::move(r));
    }
    return FiniteOrthogonalGroup::exact(2, std::move(exact));
  }
  return FiniteOrthogonalGroup::floating(2, std::move(elements));
}

Polynomial act(const RationalMatrix& m, const Polynomial& f) {
  const std::size_t n = f.dimension();
  check_square(m, n);
  // x_i -> (M^T x)_i = sum_j M[j][i] x_j
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial l(n);
    for (std::size_t j = 0; j < n; ++j) l.add_term(Monomial::unit(n, j), m[j][i]);
    images.push_back(std::move(l));
  }
  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t i = 0; i < n; ++i) powers[i].push_back(Polynomial::constant(n, 1));
  Polynomial out(n);
  for (const auto& [mono, c] : f.terms()) {
    Polynomial t = Polynomial::constant(n, c);
    for (std::size_t i = 0; i < n; ++i) {
      auto& p = powers[i];
      while (p.size() <= mono[i]) p.push_back(p.back() * images[i]);
      if (mono[i] > 0) t = t * p[mono[i]];
    }
    out += t;
  }
  return out;
}

Polynomial group_average(const FiniteOrthogonalGroup& group, const Polynomial& f) {
  if (!group.is_exact()) throw FloatModeError("group averaging requires an exact group");
  if (f.dimension() != group.dimension()) throw DimensionError("group_average: dimension mismatch");
  Polynomial sum(f.dimension());
  for (const auto& m : group.elements()) sum += act(m, f);
  return sum * Rational(1, static_cast<unsigned long>(group.order()));
}

GradedSubalgebra invariant_ring(const FiniteOrthogonalGroup& group, unsigned max_degree) {
  if (!group.is_exact()) throw FloatModeError("invariant_ring requires an exact group; use a closed form");
  const std::size_t n = group.dimension();
  std::vector<Polynomial> gens;
  std::map<unsigned, std::vector<Polynomial>> bases;
  bases[0] = {Polynomial::constant(n, 1)};
  for (unsigned d = 1; d <= max_degree; ++d) {
    std::vector<Polynomial> basis = product_basis(n, gens, d, bases);
    LinearSpan span(n);
    for (const auto& b : basis) span.insert(b);
    for_each_multi_index(n, d, [&](const Monomial& m) {
      Polynomial avg = group_average(group, Polynomial::term(m, 1));
      if (avg.is_zero() || !span.insert(avg)) return;
      Polynomial g = primitive_part(avg);
      gens.push_back(g);
      basis.push_back(std::move(g));
    });
    bases[d] = std::move(basis);
  }
  if (gens.empty())
    throw Error("no invariants of positive degree up to " + std::to_string(max_degree));
  return GradedSubalgebra(n, std::move(gens));
}

Polynomial dihedral_form(unsigned g) {
  if (g == 0) throw Error("dihedral_form needs g >= 1");
  Polynomial f(2);
  // Re (x + iy)^g = sum_{k even} C(g,k) (-1)^{k/2} x^{g-k} y^k
  Integer binom = 1;
  for (unsigned k = 0; k <= g; ++k) {
    if (k > 0) binom = binom * (g - k + 1) / k;
    if (k % 2 == 1) continue;
    Rational c(binom);
    if ((k / 2) % 2 == 1) c = -c;
    f.add_term(Monomial({g - k, k}), c);
  }
  return f;
}

GradedSubalgebra dihedral_invariants(unsigned g) { return GradedSubalgebra(2, {r_squared(2), dihedral_form(g)}); }

ReynoldsAverageReport verify_reynolds_equals_average(const FiniteOrthogonalGroup& group, unsigned max_degree,
                                                     std::size_t trials, std::uint64_t seed) {
  if (!group.is_exact()) throw FloatModeError("verify_reynolds_equals_average requires an exact group");
  GradedSubalgebra ring = invariant_ring(group, max_degree);
  Rng rng(seed);
  ReynoldsAverageReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    Polynomial f = random_polynomial(rng, group.dimension(), 0, max_degree, 0.4);
    ++report.trials;
    if (ring.reynolds(f).projection != group_average(group, f)) {
      report.agree = false;
      report.counterexample = f;
      break;
    }
  }
  return report;
}

}  // namespace lforge
