#include <thread>

#include "doctest.h"
#include "lforge/apolar.hpp"
#include "lforge/errors.hpp"
#include "lforge/graded_algebra.hpp"
#include "lforge/invariants.hpp"
#include "lforge/random.hpp"
#include "oracles.hpp"

using namespace lforge;

namespace {
Polynomial P(const char* s, std::size_t n) { return parse_polynomial(s, n); }
GradedSubalgebra A(std::size_t n, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (auto s : gens) g.push_back(parse_polynomial(s, n));
  return GradedSubalgebra(n, g);
}
}  // namespace

TEST_CASE("construction rejects bad generators") {
  CHECK_THROWS_AS(GradedSubalgebra(2, {P("x1 + x2^2", 2)}), GradingError);
  CHECK_THROWS_AS(GradedSubalgebra(2, {P("3", 2)}), GradingError);
  CHECK_THROWS_AS(GradedSubalgebra(2, {P("x1", 3)}), DimensionError);
  CHECK_THROWS_AS(GradedSubalgebra(2, {}), Error);
}

TEST_CASE("degree bases") {
  auto radial = A(2, {"x1^2 + x2^2"});
  REQUIRE(radial.degree_basis(4).size() == 1);
  CHECK(radial.degree_basis(4)[0] == pow(r_squared(2), 2));
  CHECK(radial.degree_basis(3).empty());
  CHECK(radial.degree_basis(0) == std::vector<Polynomial>{P("1", 2)});

  auto two = A(2, {"x1^2 + x2^2", "x1^2 - x2^2"});
  const auto& b2 = two.degree_basis(2);
  CHECK(b2.size() == 2);
  LinearSpan span(2);
  for (const auto& b : b2) span.insert(b);
  CHECK(span.contains(P("x1^2", 2)));
  CHECK(span.contains(P("x2^2", 2)));
}

TEST_CASE("hilbert dimensions") {
  CHECK(A(2, {"x1^2 + x2^2"}).hilbert_dims(4) == std::vector<std::size_t>{1, 0, 1, 0, 1});
  CHECK(A(1, {"x1"}).hilbert_dims(3) == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(A(2, {"x1^2 + x2^2", "x1^2 - x2^2"}).hilbert_dims(4) == std::vector<std::size_t>{1, 0, 2, 0, 3});

  // brute-force: rank of all generator monomials of weighted degree 4
  Polynomial r2 = r_squared(2), q = P("x1^2 - x2^2", 2);
  CHECK(oracle::dense_rank({r2 * r2, r2 * q, q * q}) == 3);
}

TEST_CASE("reynolds projection examples") {
  auto even = A(1, {"x1^2"});
  auto r = even.reynolds(P("x1^3", 1));
  CHECK(r.projection.is_zero());
  CHECK(!r.member);
  r = even.reynolds(P("x1^4", 1));
  CHECK(r.projection == P("x1^4", 1));
  CHECK(r.member);

  auto two = A(2, {"x1^2 + x2^2", "x1^2 - x2^2"});
  CHECK(two.reynolds(P("x1*x2", 2)).projection.is_zero());
}

TEST_CASE("membership") {
  auto radial = A(2, {"x1^2 + x2^2"});
  CHECK(radial.contains(P("x1^2 + x2^2", 2)));
  auto r = radial.reynolds(P("x1^2", 2));
  CHECK(!r.member);
  CHECK(r.projection == r_squared(2) * make_rational(1, 2));
  CHECK(A(2, {"x1^2 + x2^2", "x1^2 - x2^2"}).contains(P("x1^4 + x2^4", 2)));
  CHECK(radial.contains(P("7", 2)));
}

TEST_CASE("minimal generators") {
  CHECK(A(2, {"x1^2 + x2^2", "x1^4 + 2*x1^2*x2^2 + x2^4"}).minimal_generators(4) ==
        std::vector<Polynomial>{r_squared(2)});
  auto quad = A(2, {"x1^2", "x1*x2", "x2^2"});
  CHECK(quad.minimal_generators(4).size() == 3);
  CHECK(A(3, {"x1^2 + x2^2 + x3^2"}).minimal_generators(6) == std::vector<Polynomial>{r_squared(3)});
}

TEST_CASE("property: Reynolds identity, idempotence, orthogonality on Laplacian algebras") {
  std::vector<GradedSubalgebra> algebras = {A(2, {"x1^2 + x2^2"}), A(2, {"x1^2 + x2^2", "x1^2 - x2^2"}),
                                            dihedral_invariants(3), A(3, {"x1^2 + x2^2 + x3^2"})};
  Rng rng(99);
  for (const auto& alg : algebras) {
    for (int t = 0; t < 12; ++t) {
      Polynomial a = random_algebra_element(rng, alg, 5);
      Polynomial f = random_polynomial(rng, alg.dimension(), 0, 4, 0.4);
      ProjectionResult pf = alg.reynolds(f);
      CHECK(alg.reynolds(a * f).projection == a * pf.projection);
      CHECK(alg.reynolds(pf.projection).projection == pf.projection);
      CHECK(alg.reynolds(pf.projection).member);
      for (const auto& [d, part] : homogeneous_components(pf.residual))
        for (const auto& b : alg.degree_basis(d)) CHECK(inner_product(part, b) == 0);
    }
  }
}

TEST_CASE("property: generators and their products are members") {
  auto alg = dihedral_invariants(4);
  Polynomial r2 = alg.generators()[0], f = alg.generators()[1];
  CHECK(alg.contains(r2));
  CHECK(alg.contains(f));
  CHECK(alg.contains(r2 * f));
  CHECK(alg.contains(f * f * r2));
  CHECK(alg.contains(pow(r2, 5)));
}

TEST_CASE("property: minimal generators regenerate the hilbert series") {
  std::vector<GradedSubalgebra> algebras = {
      A(2, {"x1^2 + x2^2", "x1^4 + x2^4", "x1^2*x2^2", "x1^4 - x2^4"}),
      A(2, {"x1^2", "x1*x2", "x2^2", "x1^4"}),
      A(3, {"x1^2 + x2^2", "x3^2", "x1^2*x3^2 + x2^2*x3^2"}),
  };
  for (const auto& alg : algebras) {
    GradedSubalgebra minimal(alg.dimension(), alg.minimal_generators(6));
    CHECK(minimal.generators().size() <= alg.generators().size());
    CHECK(minimal.hilbert_dims(6) == alg.hilbert_dims(6));
  }
}

TEST_CASE("degree bases agree with a dense rank oracle") {
  auto alg = A(3, {"x1^2 + x2^2 + x3^2", "x1*x2*x3", "x1^2*x2^2 + x2^2*x3^2 + x3^2*x1^2"});
  for (unsigned d = 0; d <= 8; ++d) CHECK(alg.degree_basis(d).size() == oracle::dense_rank(alg.degree_basis(d)));
}

TEST_CASE("concurrent queries share one cache") {
  auto alg = dihedral_invariants(5);
  std::vector<std::vector<std::size_t>> dims(4);
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i) threads.emplace_back([&, i] { dims[i] = alg.hilbert_dims(14); });
  for (auto& t : threads) t.join();
  for (int i = 1; i < 4; ++i) CHECK(dims[i] == dims[0]);
}
