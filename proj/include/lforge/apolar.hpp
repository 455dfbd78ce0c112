#pragma once

#include <functional>

#include "lforge/polynomial.hpp"

namespace lforge {

/// Calls `visit` on every multi-index alpha of dimension n with |alpha| = k.
void for_each_multi_index(std::size_t n, unsigned k, const std::function<void(const Monomial&)>& visit);

/// k! / alpha!
Integer multinomial(const Monomial& alpha);

/// Higher product f .k g = sum_{|alpha|=k} (k choose alpha) (d^alpha f)(d^alpha g).
/// Total on inhomogeneous input; lowers degree by 2k on homogeneous input.
Polynomial bullet(const Polynomial& f, const Polynomial& g, unsigned k);

/// The same product through the Laplacian recursion
///   f .0 g = fg,  f .(k+1) g = (D(f .k g) - (Df) .k g - f .k (Dg)) / 2.
Polynomial bullet_inductive(const Polynomial& f, const Polynomial& g, unsigned k);

/// f^(g): f read as a constant-coefficient differential operator (x_i -> d/dx_i) applied to g.
Polynomial dual_apply(const Polynomial& f, const Polynomial& g);

/// Apolar inner product <f, g>_d on degree-d forms. Throws GradingError unless
/// both are homogeneous of one degree (zero is allowed on either side).
Rational inner_product(const Polynomial& f, const Polynomial& g);

/// <grad f, grad g> = f .1 g
inline Polynomial gradient_pairing(const Polynomial& f, const Polynomial& g) { return bullet(f, g, 1); }

}  // namespace lforge
