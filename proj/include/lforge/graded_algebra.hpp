#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "lforge/linalg.hpp"
#include "lforge/polynomial.hpp"

namespace lforge {

/// Apolar-orthogonal projection of a polynomial onto an algebra, degree by degree.
struct ProjectionResult {
  Polynomial projection;
  Polynomial residual;  // input minus projection
  bool member = false;  // residual is zero
};

/// Subalgebra of R[V] generated by finitely many homogeneous polynomials of
/// positive degree.
///
/// Degree pieces A_d are computed on demand and cached. The cache is shared
/// between copies and guarded by a mutex; once a degree is cached it never
/// changes. All degree caps are supplied by the caller.
class GradedSubalgebra {
 public:
  /// One cached graded piece A_d: an independent spanning set and its apolar Gram matrix.
  struct Piece {
    std::vector<Polynomial> basis;
    RationalMatrix gram;
  };

  GradedSubalgebra(std::size_t dimension, std::vector<Polynomial> generators);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  unsigned max_generator_degree() const;

  /// Independent products of generators spanning A_d, in deterministic order.
  /// A_0 is {1}.
  const std::vector<Polynomial>& degree_basis(unsigned d) const { return piece(d).basis; }
  std::vector<std::size_t> hilbert_dims(unsigned max_degree) const;

  ProjectionResult reynolds(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return reynolds(f).member; }

  /// A basis of a complement of (A+ A+)_d inside A_d for each d <= max_degree,
  /// chosen among the generators. Only claims minimality up to `max_degree`.
  std::vector<Polynomial> minimal_generators(unsigned max_degree) const;

  const Piece& piece(unsigned d) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<unsigned, Piece> pieces;
  };

  const Piece& piece_locked(unsigned d) const;

  std::size_t dimension_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Spanning set of the degree-d part of the algebra generated by `gens`,
/// reusing `lower` for smaller degrees. Shared by GradedSubalgebra and the
/// invariant-ring builder, which grows its generator list degree by degree.
std::vector<Polynomial> product_basis(std::size_t dimension, const std::vector<Polynomial>& gens, unsigned d,
                                      const std::map<unsigned, std::vector<Polynomial>>& lower);

}  // namespace lforge
