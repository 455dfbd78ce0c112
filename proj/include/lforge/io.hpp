#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lforge/errors.hpp"
#include "lforge/graded_algebra.hpp"
#include "lforge/invariants.hpp"

namespace lforge {

/// Malformed input file or specification string.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Algebra file (JSON):
///   {"dimension": 2, "generators": ["x1^2 + x2^2", "x1^2 - x2^2"], "degree_cap": 6}
/// "degree_cap" is optional.
struct AlgebraSpec {
  std::size_t dimension = 0;
  std::vector<Polynomial> generators;
  std::optional<unsigned> degree_cap;
};

AlgebraSpec parse_algebra_spec(const std::string& text);
AlgebraSpec load_algebra_file(const std::string& path);

/// Group file (JSON), either explicit matrices with integer or "p/q" string entries
///   {"dimension": 2, "matrices": [[[1, 0], [0, 1]], [[-1, 0], [0, -1]]]}
/// or a named built-in
///   {"builtin": "signed_permutations(2)"}
FiniteOrthogonalGroup parse_group_spec(const std::string& text);
FiniteOrthogonalGroup load_group_file(const std::string& path);

/// Named built-ins: neg_id(n), signed_permutations(n), cyclic_sign(n, axis), dihedral(g).
/// The colon form "dihedral:3", "cyclic_sign:2:2" is accepted too.
struct Builtin {
  std::string name;
  FiniteOrthogonalGroup group;
  /// Closed-form invariant algebra, when one is known (dihedral groups).
  std::optional<GradedSubalgebra> closed_form;
};

Builtin parse_builtin(const std::string& spec);

/// Polynomials listed in a comma-free argument list, each in the text grammar.
std::vector<Polynomial> parse_polynomials(const std::vector<std::string>& texts, std::size_t dimension);

std::string read_file(const std::string& path);

}  // namespace lforge
