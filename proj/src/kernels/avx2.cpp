// Compiled with -mavx2 (no FMA) so lanes round exactly like the scalar path.
#include <immintrin.h>

#include "kernels_impl.hpp"

namespace lforge::kernels {

void evaluate_avx2(const CompiledPolynomial& f, const double* soa, std::size_t count, double* out) {
  const std::size_t n = f.dimension;
  std::size_t p = 0;
  for (; p + 4 <= count; p += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t t = 0; t < f.terms(); ++t) {
      __m256d v = _mm256_set1_pd(f.coeffs[t]);
      const unsigned* e = &f.exps[t * n];
      for (std::size_t i = 0; i < n; ++i) {
        if (e[i] == 0) continue;
        const __m256d x = _mm256_loadu_pd(soa + i * count + p);
        for (unsigned k = 0; k < e[i]; ++k) v = _mm256_mul_pd(v, x);
      }
      acc = _mm256_add_pd(acc, v);
    }
    _mm256_storeu_pd(out + p, acc);
  }
  if (p < count) {
    // tail: gather the remaining points into a contiguous scratch block
    const std::size_t rest = count - p;
    std::vector<double> tail(n * rest);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t q = 0; q < rest; ++q) tail[i * rest + q] = soa[i * count + p + q];
    evaluate_scalar(f, tail.data(), rest, out + p);
  }
}

void dot_rows_avx2(const double* soa, std::size_t count, std::size_t dimension, const double* query, double* out) {
  std::size_t p = 0;
  for (; p + 4 <= count; p += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < dimension; ++i) {
      const __m256d q = _mm256_set1_pd(query[i]);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(q, _mm256_loadu_pd(soa + i * count + p)));
    }
    _mm256_storeu_pd(out + p, acc);
  }
  for (; p < count; ++p) {
    double acc = 0.0;
    for (std::size_t i = 0; i < dimension; ++i) acc += query[i] * soa[i * count + p];
    out[p] = acc;
  }
}

}  // namespace lforge::kernels
