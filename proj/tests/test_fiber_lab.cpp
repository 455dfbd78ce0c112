#include <cmath>

#include "doctest.h"
#include "lforge/errors.hpp"
#include "lforge/fiber_lab.hpp"
#include "lforge/invariants.hpp"

using namespace lforge;

namespace {
Polynomial P(const char* s, std::size_t n) { return parse_polynomial(s, n); }

std::size_t components(const std::vector<Polynomial>& gens, std::vector<std::vector<double>> base, double eps,
                       std::size_t samples = 2000, std::uint64_t seed = 1) {
  SamplingOptions opt;
  opt.n_samples = samples;
  opt.seed = seed;
  auto fib = sample_fibers(gens, std::move(base), opt);
  REQUIRE(fib.empty_clusters().empty());
  return connectivity_report(fib, eps).front();
}
}  // namespace

TEST_CASE("B matrix and determinant") {
  auto gens = dihedral_invariants(2).generators();
  auto b = b_matrix(gens);
  REQUIRE(b.size() == 2);
  CHECK(b.entries[0][0] == P("4*x1^2 + 4*x2^2", 2));
  CHECK(b.entries[0][1] == P("4*x1^2 - 4*x2^2", 2));
  CHECK(b.entries[1][0] == b.entries[0][1]);
  CHECK(determinant(b.entries) == P("64*x1^2*x2^2", 2));
  CHECK(determinant({{P("x1", 2)}}) == P("x1", 2));
}

TEST_CASE("transcendence degree") {
  CHECK(transcendence_degree(dihedral_invariants(2).generators(), 5, 1) == 2);
  CHECK(transcendence_degree({r_squared(3)}, 5, 1) == 1);
  CHECK(transcendence_degree({P("x1^2", 2), P("x1^4", 2)}, 5, 1) == 1);
  CHECK(transcendence_degree({P("x1", 3), P("x2", 3), P("x3", 3)}, 3, 2) == 3);
  CHECK_THROWS(transcendence_degree({}, 3, 1));
}

TEST_CASE("sphere sampling is seeded and normalized") {
  auto a = sample_sphere(3, 50, 9), b = sample_sphere(3, 50, 9), c = sample_sphere(3, 50, 10);
  CHECK(a == b);
  CHECK(a != c);
  for (const auto& p : a) CHECK(std::abs(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] - 1.0) < 1e-12);
}

TEST_CASE("stratification") {
  auto gens = dihedral_invariants(2).generators();
  CHECK(jacobian_rank(gens, std::vector<double>{1.0, 0.0}) == 1);
  CHECK(jacobian_rank(gens, std::vector<double>{0.6, 0.8}) == 2);

  auto s = stratify_points(gens, {{1.0, 0.0}, {0.0, 1.0}, {0.6, 0.8}});
  CHECK(s.generic_rank == 2);
  CHECK(s.sample_ranks == std::vector<unsigned>{1, 1, 2});
  CHECK(s.singular_witness == P("64*x1^2*x2^2", 2));
  CHECK(s.witness_consistent);

  auto r = stratify(dihedral_invariants(4).generators(), 200, 3);
  CHECK(r.generic_rank == 2);
  CHECK(r.seed == 3);
  CHECK(r.witness_consistent);
  CHECK(r.sample_ranks.size() == 200);
}

TEST_CASE("fiber component counts") {
  auto d4 = dihedral_invariants(4).generators();
  CHECK(components(d4, {{1.0, 0.3}}, 0.1) == 8);
  auto d3 = dihedral_invariants(3).generators();
  CHECK(components(d3, {{1.0, 0.2}}, 0.1) == 6);
  CHECK(components({r_squared(3), P("x1", 3)}, {{1.0, 0.5}}, 0.3) == 1);
  CHECK(components({r_squared(3), P("x1^2", 3)}, {{1.0, 0.25}}, 0.3) == 2);
  CHECK(components({r_squared(3)}, {{1.0}}, 0.3) == 1);
  // the singular fiber x1^2 - x2^2 = 1 on the circle is {(1, 0), (-1, 0)}
  CHECK(components(dihedral_invariants(2).generators(), {{1.0, 1.0}}, 0.1) == 2);
}

TEST_CASE("sampling respects tolerances and seeds") {
  auto d4 = dihedral_invariants(4).generators();
  SamplingOptions opt;
  opt.n_samples = 300;
  auto f1 = sample_fibers(d4, {}, opt);
  auto f2 = sample_fibers(d4, {}, opt);
  CHECK(f1.base_values.size() == 2);
  CHECK(f1.samples == f2.samples);
  CHECK(f1.attempts == 600);
  for (std::size_t c = 0; c < f1.clusters.size(); ++c)
    for (auto idx : f1.clusters[c])
      for (std::size_t i = 0; i < d4.size(); ++i)
        CHECK(std::abs(f1.values[idx][i] - f1.base_values[c][i]) <= opt.tol_value);

  // unreachable level: r^2 = 2 on the unit sphere
  auto none = sample_fibers({r_squared(2)}, {{2.0}}, opt);
  CHECK(none.empty_clusters() == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(sample_fibers(d4, {{1.0}}, opt), DimensionError);
}

TEST_CASE("D4 fibers are equidistant") {
  SamplingOptions opt;
  opt.n_samples = 2000;
  auto fib = sample_fibers(dihedral_invariants(4).generators(), {{1.0, 0.5}, {1.0, -0.2}}, opt);
  auto rep = equidistance_report(fib, 0, 1);
  CHECK(rep.points == fib.clusters[0].size());
  CHECK(rep.max_dev < 1e-2);
  // cos(4t) = 0.5 and cos(4t) = -0.2 sit (acos(-0.2) - acos(0.5)) / 4 apart
  CHECK(std::abs(rep.mean - (std::acos(-0.2) - std::acos(0.5)) / 4.0) < 1e-2);
}
