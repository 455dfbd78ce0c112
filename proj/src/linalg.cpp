#include "lforge/linalg.hpp"

#include <algorithm>

#include "lforge/errors.hpp"

namespace lforge {

namespace {

// Clears denominators and divides out the content so every entry is a coprime integer.
void make_primitive_row(std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& v : row) g = gcd(g, v);
  if (g > 1)
    for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

std::vector<Integer> integer_row(const std::vector<Rational>& row) {
  Integer l = 1;
  for (const auto& q : row) l = lcm(l, Integer(q.get_den()));
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& q : row) out.push_back(Integer(q.get_num() * (l / q.get_den())));
  return out;
}

}  // namespace

Polynomial LinearSpan::reduce(const Polynomial& p) const {
  if (p.dimension() != dimension_) throw DimensionError("LinearSpan: dimension mismatch");
  Polynomial v = primitive_part(p);
  auto it = v.terms().begin();
  while (it != v.terms().end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    Monomial m = it->first;
    Rational c = it->second;
    const Rational& lead = row->second.leading().second;
    // v <- lead * v - c * row; only monomials after m change
    v *= lead;
    v -= row->second * c;
    v = primitive_part(v);
    it = v.terms().upper_bound(m);
  }
  return v;
}

bool LinearSpan::insert(const Polynomial& p) {
  Polynomial r = reduce(p);
  if (r.is_zero()) return false;
  Monomial lead = r.leading().first;
  rows_.emplace(std::move(lead), std::move(r));
  return true;
}

bool LinearSpan::contains(const Polynomial& p) const { return reduce(p).is_zero(); }

std::vector<Rational> solve_linear_system(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionError("solve_linear_system: rhs size mismatch");
  std::vector<std::vector<Integer>> m;
  m.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw DimensionError("solve_linear_system: matrix is not square");
    std::vector<Rational> aug(a[i]);
    aug.push_back(b[i]);
    m.push_back(integer_row(aug));
  }

  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (abs(m[i][k]) > abs(m[pivot][k])) pivot = i;
    if (m[pivot][k] == 0) throw Error("solve_linear_system: singular matrix");
    std::swap(m[k], m[pivot]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        Integer t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(t);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }

  std::vector<Rational> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational s = Rational(m[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) s -= Rational(m[ii][j]) * x[j];
    x[ii] = s / Rational(m[ii][ii]);
  }
  return x;
}

std::size_t matrix_rank(const RationalMatrix& a) {
  std::vector<std::vector<Integer>> m;
  for (const auto& row : a) m.push_back(integer_row(row));
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    for (std::size_t i = rank; i < m.size(); ++i)
      if (abs(m[i][c]) > abs(m[pivot][c])) pivot = i;
    if (m[pivot][c] == 0) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Integer f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[rank][c] * m[i][j] - f * m[rank][j];
      make_primitive_row(m[i]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace lforge
