#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lforge/polynomial.hpp"

namespace lforge {

struct MunznerReport {
  unsigned degree = 0;
  std::optional<Rational> laplacian_constant;  // c with Laplacian(F) = c r^(g-2); empty on failure
  bool norm_identity_holds = false;            // |grad F|^2 = g^2 r^(2g-2)
  bool passes = false;
  bool radial = false;  // F is a multiple of a power of r^2: trivial level sets on the sphere
};

/// Exact check of the Cartan-Munzner equations. Throws GradingError unless F is
/// homogeneous of positive degree.
MunznerReport munzner_check(const Polynomial& f);

/// Rescales rho (odd degree) or solves for a rho + b r^g (even degree) so that the
/// result satisfies the Cartan-Munzner equations. Only rational a, b are found.
/// Returns nothing when no such polynomial exists or rho is radial.
std::optional<Polynomial> munzner_normalize(const Polynomial& rho);

struct JordanReport {
  bool closed = false;
  bool r_squared_in_span = false;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;  // 0-based indices
  std::optional<Polynomial> escaping_product;
  std::size_t dimension_of_span = 0;  // of span{q_i}, constants not counted
};

/// Closure of span{q_i} (with constants adjoined) under f .1 g = <grad f, grad g>,
/// plus membership of r^2. Throws GradingError on input that is not a nonzero quadratic form.
JordanReport jordan_closure_check(const std::vector<Polynomial>& quadratics);

}  // namespace lforge
