#pragma once

#include <string>
#include <vector>

#include "lforge/errors.hpp"
#include "lforge/graded_algebra.hpp"

namespace lforge {

enum class WitnessReason { r2_missing, laplacian_escapes, gradient_pairing_escapes };

std::string to_string(WitnessReason reason);

struct LaplacianWitness {
  Polynomial polynomial;
  WitnessReason reason;
  std::string source;  // e.g. "laplacian(g2)" or "g1 .1 g2", 1-based generator labels
};

struct LaplacianReport {
  bool is_laplacian = false;
  std::vector<LaplacianWitness> witnesses;
  std::size_t checked_pairs = 0;
};

/// Finite certificate for the Laplacian property of A = <g_1..g_k>: r^2 in A,
/// and Laplacian(g_i), g_i .1 g_j in A for all generators. Requires
/// `degree_cap` >= 2 max deg g_i - 2, otherwise throws DegreeCapError.
LaplacianReport is_laplacian(const GradedSubalgebra& algebra, unsigned degree_cap);

struct ClosureResult {
  GradedSubalgebra algebra;
  bool saturated = false;
  unsigned rounds = 0;
};

/// Thrown by laplacian_closure when the generator count exceeds its cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, GradedSubalgebra partial) : Error(what), partial_(std::move(partial)) {}
  const GradedSubalgebra& partial() const { return partial_; }

 private:
  GradedSubalgebra partial_;
};

/// Adjoins r^2, then Laplacians, then .1 products of generators that escape the
/// current algebra, re-minimalizing after every round, until nothing escapes.
/// Candidates above `max_degree` are not adjoined; if one escapes, the result
/// is reported as not saturated.
ClosureResult laplacian_closure(const std::vector<Polynomial>& gens, unsigned max_degree,
                                std::size_t max_generators);

}  // namespace lforge
