#include "doctest.h"
#include "lforge/errors.hpp"
#include "lforge/invariants.hpp"
#include "lforge/laplacian.hpp"
#include "lforge/random.hpp"

using namespace lforge;

namespace {
Polynomial P(const char* s, std::size_t n) { return parse_polynomial(s, n); }
GradedSubalgebra A(std::size_t n, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (auto s : gens) g.push_back(parse_polynomial(s, n));
  return GradedSubalgebra(n, g);
}
bool has_witness(const LaplacianReport& r, const Polynomial& p, WitnessReason why) {
  for (const auto& w : r.witnesses)
    if (w.polynomial == p && w.reason == why) return true;
  return false;
}
}  // namespace

TEST_CASE("is_laplacian examples") {
  auto jordan = is_laplacian(A(2, {"x1^2 + x2^2", "x1^2 - x2^2", "2*x1*x2"}), 2);
  CHECK(jordan.is_laplacian);
  CHECK(jordan.witnesses.empty());
  CHECK(jordan.checked_pairs == 6);

  auto cubic = is_laplacian(A(2, {"x1^2 + x2^2", "x1^3"}), 4);
  CHECK(!cubic.is_laplacian);
  CHECK(has_witness(cubic, P("6*x1", 2), WitnessReason::laplacian_escapes));

  auto traceless = is_laplacian(A(2, {"x1^2 - x2^2"}), 2);
  CHECK(!traceless.is_laplacian);
  CHECK(has_witness(traceless, r_squared(2), WitnessReason::r2_missing));
}

TEST_CASE("is_laplacian enforces the degree cap") {
  CHECK_THROWS_AS(is_laplacian(A(2, {"x1^2 + x2^2", "x1^3"}), 3), DegreeCapError);
  CHECK_NOTHROW(is_laplacian(A(2, {"x1^2 + x2^2", "x1^3"}), 4));
  CHECK_NOTHROW(is_laplacian(A(1, {"x1"}), 2));
}

TEST_CASE("laplacian_closure examples") {
  auto c1 = laplacian_closure({P("x1^2 - x2^2", 2)}, 8, 16);
  CHECK(c1.saturated);
  CHECK(c1.algebra.generators() == std::vector<Polynomial>{r_squared(2), P("x1^2 - x2^2", 2)});

  auto c2 = laplacian_closure({r_squared(3)}, 8, 16);
  CHECK(c2.saturated);
  CHECK(c2.rounds == 1);
  CHECK(c2.algebra.generators() == std::vector<Polynomial>{r_squared(3)});

  auto c3 = laplacian_closure({P("x1^3 - 3*x1*x2^2", 2)}, 8, 16);
  CHECK(c3.saturated);
  CHECK(c3.algebra.generators() == std::vector<Polynomial>{r_squared(2), P("x1^3 - 3*x1*x2^2", 2)});
}

TEST_CASE("laplacian_closure caps") {
  // x1^3 forces x1 (Laplacian) and then the whole ring in 2 variables
  auto full = laplacian_closure({P("x1^3", 2)}, 8, 16);
  CHECK(full.saturated);
  CHECK(full.algebra.contains(P("x1", 2)));
  CHECK(full.algebra.contains(P("x2^2", 2)));

  // x1*x2*x3 .1 x1*x2*x3 has degree 4 > cap 3 and is not in <r^2, x1*x2*x3>
  auto capped = laplacian_closure({P("x1*x2*x3", 3)}, 3, 16);
  CHECK(!capped.saturated);

  try {
    laplacian_closure({P("x1^2*x2*x3", 3)}, 10, 1);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.partial().generators().size() > 1);
  }
}

TEST_CASE("property: closure is monotone and a fixed point") {
  std::vector<std::vector<Polynomial>> inputs = {
      {P("x1^2 - x2^2", 2)},
      {P("x1^4 - 6*x1^2*x2^2 + x2^4", 2)},
      {P("x1^2", 3), P("x2^2 + x3^2", 3)},
      {P("x1*x2", 2)},
  };
  for (const auto& gens : inputs) {
    auto c = laplacian_closure(gens, 8, 16);
    REQUIRE(c.saturated);
    for (const auto& g : gens) CHECK(c.algebra.contains(g));
    CHECK(is_laplacian(c.algebra, 2 * c.algebra.max_generator_degree()).is_laplacian);
    auto again = laplacian_closure(c.algebra.generators(), 8, 16);
    CHECK(again.rounds == 1);
    CHECK(again.algebra.generators() == c.algebra.generators());
  }
}

TEST_CASE("property: certified algebras are closed under the Laplacian") {
  Rng rng(4);
  std::vector<GradedSubalgebra> algebras = {dihedral_invariants(3), dihedral_invariants(4),
                                            A(3, {"x1^2 + x2^2 + x3^2", "x1^2"})};
  for (const auto& alg : algebras) {
    const unsigned cap = 10;
    REQUIRE(is_laplacian(alg, cap).is_laplacian);
    for (int t = 0; t < 10; ++t) {
      Polynomial a = random_algebra_element(rng, alg, cap - 2);
      CHECK(alg.contains(laplacian(a)));
      // homogeneous parts of members are members
      for (const auto& [d, part] : homogeneous_components(a)) CHECK(alg.contains(part));
    }
  }
}
