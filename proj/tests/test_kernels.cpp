#include <cstring>
#include <random>

#include "doctest.h"
#include "lforge/invariants.hpp"
#include "lforge/kernels.hpp"
#include "lforge/random.hpp"

using namespace lforge;

namespace {

std::vector<double> random_soa(std::mt19937_64& rng, std::size_t n, std::size_t count) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::vector<double> soa(n * count);
  for (auto& x : soa) x = u(rng);
  return soa;
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("scalar evaluate matches exact evaluation") {
  Polynomial f = parse_polynomial("3*x1^2*x2 - 1/2*x2^3 + x1 - 7", 2);
  auto c = kernels::compile(f);
  std::vector<double> soa = {0.5, -1.0, 2.0, /* x2 */ 0.25, 3.0, -0.5};
  std::vector<double> out(3);
  kernels::scalar_kernels().evaluate(c, soa.data(), 3, out.data());
  for (std::size_t p = 0; p < 3; ++p) {
    std::vector<double> pt = {soa[p], soa[3 + p]};
    CHECK(out[p] == doctest::Approx(evaluate(f, pt)).epsilon(1e-14));
  }
}

TEST_CASE("AVX2 kernels are bit-identical to scalar") {
  const auto* simd = kernels::avx2_kernels();
  if (!simd || !kernels::cpu_has_avx2()) {
    MESSAGE("AVX2 kernels unavailable; skipping");
    return;
  }
  const auto& ref = kernels::scalar_kernels();
  std::mt19937_64 rng(5);
  Rng prng(6);
  std::vector<Polynomial> polys = {dihedral_form(4), dihedral_form(7), r_squared(3),
                                   parse_polynomial("0", 3), parse_polynomial("-2", 2)};
  for (int t = 0; t < 10; ++t) polys.push_back(random_polynomial(prng, 3, 0, 6, 0.4, 9));

  for (const auto& f : polys) {
    auto c = kernels::compile(f);
    for (std::size_t count : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 13u, 64u, 1001u}) {
      auto soa = random_soa(rng, f.dimension(), count);
      std::vector<double> a(count), b(count);
      ref.evaluate(c, soa.data(), count, a.data());
      simd->evaluate(c, soa.data(), count, b.data());
      CHECK(bit_equal(a, b));
    }
  }

  for (std::size_t n : {1u, 2u, 3u, 5u}) {
    for (std::size_t count : {1u, 3u, 4u, 6u, 17u, 500u}) {
      auto soa = random_soa(rng, n, count);
      auto q = random_soa(rng, n, 1);
      std::vector<double> a(count), b(count);
      ref.dot_rows(soa.data(), count, n, q.data(), a.data());
      simd->dot_rows(soa.data(), count, n, q.data(), b.data());
      CHECK(bit_equal(a, b));
    }
  }
}

TEST_CASE("active kernel table is one of the known variants") {
  auto name = kernels::active().name;
  CHECK((name == "scalar" || name == "avx2"));
}
