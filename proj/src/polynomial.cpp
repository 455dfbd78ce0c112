#include "lforge/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "lforge/errors.hpp"

namespace lforge {

Monomial::Monomial(std::vector<unsigned> exps)
    : exps_(std::move(exps)), degree_(std::accumulate(exps_.begin(), exps_.end(), 0u)) {}

Monomial Monomial::unit(std::size_t dimension, std::size_t var, unsigned power) {
  std::vector<unsigned> e(dimension, 0);
  e.at(var) = power;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<unsigned> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

Integer Monomial::factorial() const {
  Integer r = 1;
  for (unsigned a : exps_) r *= lforge::factorial(a);
  return r;
}

Polynomial::Polynomial(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw DimensionError("polynomial dimension must be positive");
}

Polynomial Polynomial::constant(std::size_t dimension, const Rational& c) {
  Polynomial p(dimension);
  p.add_term(Monomial(dimension), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t dimension, std::size_t var) {
  if (var >= dimension) throw DimensionError("variable index out of range");
  Polynomial p(dimension);
  p.add_term(Monomial::unit(dimension, var), 1);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.dimension());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.dimension() != dimension_) throw DimensionError("monomial dimension mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

void Polynomial::check_same_dimension(const Polynomial& other) const {
  if (dimension_ != other.dimension_)
    throw DimensionError("dimension mismatch: " + std::to_string(dimension_) + " vs " +
                         std::to_string(other.dimension_));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_dimension(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_dimension(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_dimension(b);
  Polynomial r(a.dimension_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial pow(const Polynomial& f, unsigned e) {
  Polynomial result = Polynomial::constant(f.dimension(), 1);
  Polynomial base = f;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial partial(const Polynomial& f, std::size_t var) {
  if (var >= f.dimension())
    throw DimensionError("partial: variable x" + std::to_string(var + 1) + " out of range for n=" +
                         std::to_string(f.dimension()));
  Polynomial r(f.dimension());
  for (const auto& [m, c] : f.terms()) {
    unsigned e = m[var];
    if (e == 0) continue;
    std::vector<unsigned> exps(m.exponents().begin(), m.exponents().end());
    exps[var] = e - 1;
    r.add_term(Monomial(std::move(exps)), c * e);
  }
  return r;
}

Polynomial partial(const Polynomial& f, const Monomial& alpha) {
  if (alpha.dimension() != f.dimension()) throw DimensionError("multi-index dimension mismatch");
  Polynomial r(f.dimension());
  for (const auto& [m, c] : f.terms()) {
    Integer scale = 1;
    std::vector<unsigned> exps(m.exponents().begin(), m.exponents().end());
    bool vanishes = false;
    for (std::size_t i = 0; i < exps.size() && !vanishes; ++i) {
      if (alpha[i] > exps[i]) {
        vanishes = true;
        break;
      }
      for (unsigned j = 0; j < alpha[i]; ++j) scale *= exps[i] - j;
      exps[i] -= alpha[i];
    }
    if (!vanishes) r.add_term(Monomial(std::move(exps)), c * Rational(scale));
  }
  return r;
}

Polynomial laplacian(const Polynomial& f) {
  Polynomial r(f.dimension());
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < f.dimension(); ++i) {
      unsigned e = m[i];
      if (e < 2) continue;
      std::vector<unsigned> exps(m.exponents().begin(), m.exponents().end());
      exps[i] = e - 2;
      r.add_term(Monomial(std::move(exps)), c * (e * (e - 1)));
    }
  }
  return r;
}

Polynomial r_squared(std::size_t dimension) {
  Polynomial r(dimension);
  for (std::size_t i = 0; i < dimension; ++i) r.add_term(Monomial::unit(dimension, i, 2), 1);
  return r;
}

std::map<unsigned, Polynomial> homogeneous_components(const Polynomial& f) {
  std::map<unsigned, Polynomial> parts;
  for (const auto& [m, c] : f.terms()) {
    auto it = parts.try_emplace(m.degree(), f.dimension()).first;
    it->second.add_term(m, c);
  }
  return parts;
}

namespace {

template <typename T>
T evaluate_impl(const Polynomial& f, std::span<const T> point) {
  if (point.size() != f.dimension())
    throw DimensionError("evaluation point has " + std::to_string(point.size()) +
                         " coordinates, expected " + std::to_string(f.dimension()));
  // powers[i][e] = x_i^e, built up to the largest exponent in use
  std::vector<std::vector<T>> powers(f.dimension(), std::vector<T>{T(1)});
  T sum(0);
  for (const auto& [m, c] : f.terms()) {
    T t;
    if constexpr (std::is_same_v<T, double>)
      t = c.get_d();
    else
      t = c;
    for (std::size_t i = 0; i < f.dimension(); ++i) {
      auto& p = powers[i];
      while (p.size() <= m[i]) p.push_back(p.back() * point[i]);
      if (m[i] > 0) t *= p[m[i]];
    }
    sum += t;
  }
  return sum;
}

}  // namespace

Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
  return evaluate_impl<Rational>(f, point);
}

double evaluate(const Polynomial& f, std::span<const double> point) {
  return evaluate_impl<double>(f, point);
}

Polynomial primitive_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : f.terms()) {
    num_gcd = gcd(num_gcd, Integer(c.get_num()));
    den_lcm = lcm(den_lcm, Integer(c.get_den()));
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(f.leading().second) < 0) scale = -scale;
  return f * scale;
}

namespace {

void append_monomial(std::ostringstream& os, const Monomial& m) {
  bool first = true;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (m[i] > 1) os << '^' << m[i];
  }
}

}  // namespace

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (m.degree() == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      append_monomial(os, m);
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }

}  // namespace lforge
