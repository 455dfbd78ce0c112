#include "doctest.h"
#include "lforge/apolar.hpp"
#include "lforge/errors.hpp"
#include "lforge/invariants.hpp"
#include "lforge/laplacian.hpp"
#include "lforge/random.hpp"
#include "oracles.hpp"

using namespace lforge;

namespace {
Polynomial P(const char* s, std::size_t n) { return parse_polynomial(s, n); }
RationalMatrix swap2() { return {{0, 1}, {1, 0}}; }
RationalMatrix neg2() { return {{-1, 0}, {0, -1}}; }
}  // namespace

TEST_CASE("group construction validates") {
  CHECK(neg_id_group(3).order() == 2);
  CHECK(signed_permutation_group(2).order() == 8);
  CHECK(signed_permutation_group(3).order() == 48);
  CHECK(cyclic_sign_group(2, 2).order() == 2);
  CHECK(dihedral_group(4).is_exact());
  CHECK(dihedral_group(4).order() == 8);
  CHECK(!dihedral_group(3).is_exact());
  CHECK(dihedral_group(3).order() == 6);

  RationalMatrix id = {{1, 0}, {0, 1}};
  CHECK_THROWS_AS(FiniteOrthogonalGroup::exact(2, {id, {{0, 1}, {-1, 0}}}), GroupError);  // not closed
  CHECK_THROWS_AS(FiniteOrthogonalGroup::exact(2, {neg2()}), GroupError);                 // no identity
  CHECK_THROWS_AS(FiniteOrthogonalGroup::exact(2, {id, {{2, 0}, {0, 1}}}), GroupError);   // not orthogonal
  CHECK_THROWS_AS(FiniteOrthogonalGroup::exact(2, {id, {{1, 0}}}), DimensionError);
}

TEST_CASE("action by substitution") {
  CHECK(act(neg2(), P("x1*x2", 2)) == P("x1*x2", 2));
  CHECK(act(neg2(), P("x1", 2)) == P("-x1", 2));
  CHECK(act(swap2(), P("x1^2", 2)) == P("x2^2", 2));
  // (g.f)(x) = f(g^-1 x): a rotation by 90 degrees sends x1 to -x2 under f(g^T x)
  RationalMatrix rot = {{0, -1}, {1, 0}};
  CHECK(act(rot, P("x1", 2)) == P("x2", 2));
}

TEST_CASE("action matches pointwise substitution and commutes with the Laplacian") {
  Rng rng(17);
  auto g = signed_permutation_group(3);
  for (int t = 0; t < 10; ++t) {
    Polynomial f = random_polynomial(rng, 3, 0, 4, 0.3);
    std::vector<Rational> p = {make_rational(1, 2), -3, make_rational(5, 7)};
    for (const auto& m : g.elements()) {
      Polynomial gf = act(m, f);
      CHECK(evaluate(gf, p) == oracle::acted_value(m, f, p));
      CHECK(laplacian(gf) == act(m, laplacian(f)));
    }
  }
}

TEST_CASE("group averaging") {
  CHECK(group_average(neg_id_group(2), P("x1", 2)).is_zero());
  CHECK(group_average(neg_id_group(2), P("x1*x2", 2)) == P("x1*x2", 2));
  CHECK(group_average(signed_permutation_group(2), P("x1^2", 2)) == P("1/2*x1^2 + 1/2*x2^2", 2));
  CHECK_THROWS_AS(group_average(dihedral_group(5), P("x1", 2)), FloatModeError);
}

TEST_CASE("property: averaging is equivariant, idempotent, invariant") {
  Rng rng(23);
  auto g = signed_permutation_group(2);
  for (int t = 0; t < 15; ++t) {
    Polynomial f = random_polynomial(rng, 2, 0, 5, 0.5);
    Polynomial avg = group_average(g, f);
    CHECK(group_average(g, avg) == avg);
    for (const auto& m : g.elements()) {
      CHECK(group_average(g, act(m, f)) == avg);
      CHECK(act(m, avg) == avg);
    }
  }
}

TEST_CASE("invariant rings") {
  CHECK(invariant_ring(neg_id_group(1), 2).generators() == std::vector<Polynomial>{P("x1^2", 1)});
  CHECK(invariant_ring(neg_id_group(2), 2).generators() ==
        std::vector<Polynomial>{P("x1^2", 2), P("x1*x2", 2), P("x2^2", 2)});
  // nothing new appears in degree 4
  CHECK(invariant_ring(neg_id_group(2), 4).generators().size() == 3);
  CHECK(invariant_ring(cyclic_sign_group(2, 2), 2).generators() == std::vector<Polynomial>{P("x1", 2), P("x2^2", 2)});
  CHECK_THROWS_AS(invariant_ring(dihedral_group(3), 6), FloatModeError);
  CHECK_THROWS(invariant_ring(neg_id_group(2), 1));
}

TEST_CASE("invariant rings agree with averaged monomial spans") {
  auto g = signed_permutation_group(2);
  auto ring = invariant_ring(g, noether_bound(g));
  for (unsigned d = 0; d <= 8; ++d) {
    std::vector<Polynomial> averages;
    for_each_multi_index(2, d,
                         [&](const Monomial& m) { averages.push_back(group_average(g, Polynomial::term(m, 1))); });
    CHECK(ring.degree_basis(d).size() == oracle::dense_rank(averages));
  }
}

TEST_CASE("dihedral closed forms") {
  CHECK(dihedral_invariants(2).generators() == std::vector<Polynomial>{r_squared(2), P("x1^2 - x2^2", 2)});
  CHECK(dihedral_invariants(3).generators()[1] == P("x1^3 - 3*x1*x2^2", 2));
  CHECK(dihedral_invariants(4).generators()[1] == P("x1^4 - 6*x1^2*x2^2 + x2^4", 2));
  CHECK(dihedral_form(1) == P("x1", 2));
  for (unsigned g = 1; g <= 8; ++g) CHECK(laplacian(dihedral_form(g)).is_zero());
  // for the rational dihedral groups the closed form matches averaging
  for (unsigned g : {2u, 4u}) {
    auto grp = dihedral_group(g);
    auto ring = invariant_ring(grp, noether_bound(grp));
    auto closed = dihedral_invariants(g);
    CHECK(ring.hilbert_dims(10) == closed.hilbert_dims(10));
    for (const auto& gen : ring.generators()) CHECK(closed.contains(gen));
  }
}

TEST_CASE("Reynolds projection equals averaging") {
  CHECK(invariant_ring(neg_id_group(1), 2).reynolds(P("x1^3", 1)).projection.is_zero());
  CHECK(group_average(neg_id_group(1), P("x1^3", 1)).is_zero());
  CHECK(invariant_ring(neg_id_group(2), 2).reynolds(P("x1^2", 2)).projection == P("x1^2", 2));
  auto ys = cyclic_sign_group(2, 2);
  CHECK(invariant_ring(ys, 3).reynolds(P("x2^3", 2)).projection.is_zero());
  CHECK(group_average(ys, P("x2^3", 2)).is_zero());

  CHECK(verify_reynolds_equals_average(cyclic_sign_group(3, 1), 4, 10).agree);
  CHECK(verify_reynolds_equals_average(neg_id_group(2), 2, 10).agree);
}

TEST_CASE("invariant rings are Laplacian") {
  for (const auto& g : {neg_id_group(1), neg_id_group(2), neg_id_group(3), cyclic_sign_group(2, 1),
                        signed_permutation_group(2), dihedral_group(4)}) {
    auto ring = invariant_ring(g, noether_bound(g));
    CHECK(is_laplacian(ring, std::max(noether_bound(g), 2 * ring.max_generator_degree() - 2)).is_laplacian);
  }
}
