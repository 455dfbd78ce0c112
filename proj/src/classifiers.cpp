#include "lforge/classifiers.hpp"

#include "lforge/apolar.hpp"
#include "lforge/errors.hpp"
#include "lforge/linalg.hpp"

namespace lforge {

namespace {

// (r^2)^k
Polynomial r_power(std::size_t n, unsigned k) { return pow(r_squared(n), k); }

// c with p = c * q when one exists; q nonzero.
std::optional<Rational> proportionality(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) return Rational(0);
  const auto& [m, qc] = q.leading();
  Rational c = p.coefficient(m) / qc;
  if (p == q * c) return c;
  return std::nullopt;
}

bool is_radial(const Polynomial& f) {
  int g = f.degree();
  if (g <= 0 || g % 2 != 0) return false;
  auto c = proportionality(f, r_power(f.dimension(), static_cast<unsigned>(g / 2)));
  return c.has_value() && sgn(*c) != 0;
}

}  // namespace

MunznerReport munzner_check(const Polynomial& f) {
  if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1)
    throw GradingError("munzner_check needs a homogeneous polynomial of positive degree");
  const std::size_t n = f.dimension();
  MunznerReport report;
  report.degree = static_cast<unsigned>(f.degree());
  const unsigned g = report.degree;

  Polynomial lap = laplacian(f);
  if (lap.is_zero())
    report.laplacian_constant = Rational(0);
  else if (g >= 2 && g % 2 == 0)
    report.laplacian_constant = proportionality(lap, r_power(n, (g - 2) / 2));

  Polynomial target = r_power(n, g - 1) * Rational(g * g);
  report.norm_identity_holds = gradient_pairing(f, f) == target;
  report.passes = report.laplacian_constant.has_value() && report.norm_identity_holds;
  report.radial = is_radial(f);
  return report;
}

std::optional<Polynomial> munzner_normalize(const Polynomial& rho) {
  if (rho.is_zero() || !rho.is_homogeneous() || rho.degree() < 1) return std::nullopt;
  if (is_radial(rho)) return std::nullopt;
  const std::size_t n = rho.dimension();
  const unsigned g = static_cast<unsigned>(rho.degree());
  const Rational g2 = g * g;
  const Polynomial norm = gradient_pairing(rho, rho);
  const Polynomial top = r_power(n, g - 1);  // r^(2g-2)

  std::optional<Polynomial> candidate;
  if (g % 2 == 1) {
    if (!laplacian(rho).is_zero()) return std::nullopt;
    auto alpha = proportionality(norm, top);
    if (!alpha || sgn(*alpha) <= 0) return std::nullopt;
    Rational a;
    if (!rational_sqrt(g2 / *alpha, a)) return std::nullopt;
    candidate = rho * a;
  } else {
    const Polynomial lower = r_power(n, (g - 2) / 2);  // r^(g-2)
    if (!proportionality(laplacian(rho), lower)) return std::nullopt;
    // |grad rho|^2 = alpha r^(2g-2) + beta rho r^(g-2)
    const Polynomial mixed = rho * lower;
    RationalMatrix gram = {{inner_product(top, top), inner_product(top, mixed)},
                           {inner_product(mixed, top), inner_product(mixed, mixed)}};
    auto ab = solve_linear_system(gram, {inner_product(top, norm), inner_product(mixed, norm)});
    const Rational& alpha = ab[0];
    const Rational& beta = ab[1];
    if (top * alpha + mixed * beta != norm) return std::nullopt;
    Rational denom = 4 * g2 * alpha + beta * beta;
    if (sgn(denom) <= 0) return std::nullopt;
    Rational a;
    if (!rational_sqrt(4 * g2 * g2 / denom, a)) return std::nullopt;
    Rational b = -a * beta / (2 * g2);
    candidate = rho * a + r_power(n, g / 2) * b;
  }
  if (!munzner_check(*candidate).passes) return std::nullopt;
  return candidate;
}

JordanReport jordan_closure_check(const std::vector<Polynomial>& quadratics) {
  if (quadratics.empty()) throw GradingError("jordan_closure_check needs at least one quadratic");
  const std::size_t n = quadratics.front().dimension();
  JordanReport report;
  LinearSpan span(n);
  for (const auto& q : quadratics) {
    if (q.dimension() != n) throw DimensionError("jordan_closure_check: dimension mismatch");
    if (q.is_zero() || !q.is_homogeneous() || q.degree() != 2)
      throw GradingError("jordan_closure_check: " + to_string(q) + " is not a quadratic form");
    if (span.insert(q)) ++report.dimension_of_span;
  }
  span.insert(Polynomial::constant(n, 1));
  report.r_squared_in_span = span.contains(r_squared(n));
  for (std::size_t i = 0; i < quadratics.size() && !report.failing_pair; ++i)
    for (std::size_t j = i; j < quadratics.size(); ++j) {
      Polynomial p = gradient_pairing(quadratics[i], quadratics[j]);
      if (!span.contains(p)) {
        report.failing_pair = std::make_pair(i, j);
        report.escaping_product = std::move(p);
        break;
      }
    }
  report.closed = report.r_squared_in_span && !report.failing_pair;
  return report;
}

}  // namespace lforge
