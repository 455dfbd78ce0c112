#pragma once

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "lforge/rational.hpp"

namespace lforge {

/// Exponent vector x^alpha over a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t dimension) : exps_(dimension, 0) {}
  explicit Monomial(std::vector<unsigned> exps);
  Monomial(std::initializer_list<unsigned> exps) : Monomial(std::vector<unsigned>(exps)) {}

  static Monomial unit(std::size_t dimension, std::size_t var, unsigned power = 1);

  std::size_t dimension() const { return exps_.size(); }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  std::span<const unsigned> exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;

  /// alpha! = prod_i alpha_i!
  Integer factorial() const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

/// Graded lexicographic, largest first: higher degree precedes, then larger x1 exponent, ...
struct GradedLexFirst {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    auto ea = a.exponents(), eb = b.exponents();
    for (std::size_t i = 0; i < ea.size(); ++i)
      if (ea[i] != eb[i]) return ea[i] > eb[i];
    return false;
  }
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// The term map never stores a zero coefficient, so structural equality is
/// polynomial equality. The dimension is explicit and never inferred from the
/// variables that happen to occur.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexFirst>;

  explicit Polynomial(std::size_t dimension = 1);

  static Polynomial constant(std::size_t dimension, const Rational& c);
  /// The coordinate function x_{var+1} (0-based `var`).
  static Polynomial variable(std::size_t dimension, std::size_t var);
  static Polynomial term(const Monomial& m, const Rational& c);

  std::size_t dimension() const { return dimension_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Zero counts as homogeneous.
  bool is_homogeneous() const;

  Rational coefficient(const Monomial& m) const;
  /// Leading term in graded-lex order. Requires a nonzero polynomial.
  const TermMap::value_type& leading() const { return *terms_.begin(); }

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  bool operator==(const Polynomial& other) const {
    return dimension_ == other.dimension_ && terms_ == other.terms_;
  }

 private:
  void check_same_dimension(const Polynomial& other) const;

  std::size_t dimension_;
  TermMap terms_;
};

Polynomial pow(const Polynomial& f, unsigned e);

/// d f / d x_{var+1}. Throws DimensionError when var >= dimension.
Polynomial partial(const Polynomial& f, std::size_t var);

/// d^alpha f.
Polynomial partial(const Polynomial& f, const Monomial& alpha);

Polynomial laplacian(const Polynomial& f);

/// r^2 = x1^2 + ... + xn^2
Polynomial r_squared(std::size_t dimension);

/// Degree-wise split f = sum_j f_j; the zero polynomial maps to an empty map.
std::map<unsigned, Polynomial> homogeneous_components(const Polynomial& f);

Rational evaluate(const Polynomial& f, std::span<const Rational> point);
double evaluate(const Polynomial& f, std::span<const double> point);

/// Scales to a primitive integer polynomial with positive leading coefficient.
Polynomial primitive_part(const Polynomial& f);

/// Canonical text: graded-lex order, explicit '*', no '^1', "0" for zero.
std::string to_string(const Polynomial& f);
std::ostream& operator<<(std::ostream& os, const Polynomial& f);

/// Parses the grammar
///   poly   := term (("+"|"-") term)*
///   term   := coeff ("*" factor)* | factor ("*" factor)*
///   factor := "x" INDEX ("^" EXPONENT)?
///   coeff  := INT ("/" POSINT)?
/// with 1-based INDEX. A single leading sign is accepted.
Polynomial parse_polynomial(const std::string& text, std::size_t dimension);

}  // namespace lforge
