#include "lforge/graded_algebra.hpp"

#include <algorithm>

#include "lforge/apolar.hpp"
#include "lforge/errors.hpp"

namespace lforge {

std::vector<Polynomial> product_basis(std::size_t dimension, const std::vector<Polynomial>& gens, unsigned d,
                                      const std::map<unsigned, std::vector<Polynomial>>& lower) {
  if (d == 0) return {Polynomial::constant(dimension, 1)};
  LinearSpan span(dimension);
  std::vector<Polynomial> basis;
  for (const auto& g : gens) {
    auto gd = static_cast<unsigned>(g.degree());
    if (gd > d) continue;
    auto it = lower.find(d - gd);
    if (it == lower.end()) throw Error("product_basis: lower degree " + std::to_string(d - gd) + " missing");
    for (const auto& b : it->second) {
      Polynomial candidate = g * b;
      if (span.insert(candidate)) basis.push_back(std::move(candidate));
    }
  }
  return basis;
}

GradedSubalgebra::GradedSubalgebra(std::size_t dimension, std::vector<Polynomial> generators)
    : dimension_(dimension), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (generators_.empty()) throw Error("a graded subalgebra needs at least one generator");
  for (const auto& g : generators_) {
    if (g.dimension() != dimension_) throw DimensionError("generator dimension mismatch");
    if (!g.is_homogeneous() || g.degree() < 1)
      throw GradingError("generator " + to_string(g) + " is not homogeneous of positive degree");
  }
}

unsigned GradedSubalgebra::max_generator_degree() const {
  int m = 0;
  for (const auto& g : generators_) m = std::max(m, g.degree());
  return static_cast<unsigned>(m);
}

const GradedSubalgebra::Piece& GradedSubalgebra::piece(unsigned d) const {
  std::lock_guard lock(cache_->mutex);
  return piece_locked(d);
}

const GradedSubalgebra::Piece& GradedSubalgebra::piece_locked(unsigned d) const {
  auto& pieces = cache_->pieces;
  if (auto it = pieces.find(d); it != pieces.end()) return it->second;
  std::map<unsigned, std::vector<Polynomial>> lower;
  for (const auto& g : generators_) {
    auto gd = static_cast<unsigned>(g.degree());
    if (gd <= d && !lower.contains(d - gd)) lower.emplace(d - gd, piece_locked(d - gd).basis);
  }
  Piece p;
  p.basis = product_basis(dimension_, generators_, d, lower);
  p.gram.assign(p.basis.size(), std::vector<Rational>(p.basis.size()));
  for (std::size_t i = 0; i < p.basis.size(); ++i)
    for (std::size_t j = i; j < p.basis.size(); ++j) {
      p.gram[i][j] = inner_product(p.basis[i], p.basis[j]);
      p.gram[j][i] = p.gram[i][j];
    }
  return pieces.emplace(d, std::move(p)).first->second;
}

std::vector<std::size_t> GradedSubalgebra::hilbert_dims(unsigned max_degree) const {
  std::vector<std::size_t> dims;
  for (unsigned d = 0; d <= max_degree; ++d) dims.push_back(piece(d).basis.size());
  return dims;
}

ProjectionResult GradedSubalgebra::reynolds(const Polynomial& f) const {
  if (f.dimension() != dimension_) throw DimensionError("reynolds: dimension mismatch");
  ProjectionResult r{Polynomial(dimension_), Polynomial(dimension_), false};
  for (const auto& [d, fd] : homogeneous_components(f)) {
    const Piece& p = piece(d);
    if (p.basis.empty()) continue;
    std::vector<Rational> rhs;
    rhs.reserve(p.basis.size());
    for (const auto& b : p.basis) rhs.push_back(inner_product(b, fd));
    auto coeffs = solve_linear_system(p.gram, rhs);
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.projection += p.basis[i] * coeffs[i];
  }
  r.residual = f - r.projection;
  r.member = r.residual.is_zero();
  return r;
}

std::vector<Polynomial> GradedSubalgebra::minimal_generators(unsigned max_degree) const {
  std::vector<Polynomial> minimal;
  for (unsigned d = 1; d <= max_degree; ++d) {
    bool any = std::any_of(generators_.begin(), generators_.end(),
                           [d](const Polynomial& g) { return g.degree() == static_cast<int>(d); });
    if (!any) continue;
    LinearSpan decomposable(dimension_);
    for (unsigned i = 1; 2 * i <= d; ++i) {
      const auto& left = degree_basis(i);
      const auto& right = degree_basis(d - i);
      for (const auto& a : left)
        for (const auto& b : right) decomposable.insert(a * b);
    }
    for (const auto& g : generators_)
      if (g.degree() == static_cast<int>(d) && decomposable.insert(g)) minimal.push_back(g);
  }
  return minimal;
}

}  // namespace lforge
