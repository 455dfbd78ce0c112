#include "kernels_impl.hpp"

namespace lforge::kernels {

void evaluate_scalar(const CompiledPolynomial& f, const double* soa, std::size_t count, double* out) {
  const std::size_t n = f.dimension;
  for (std::size_t p = 0; p < count; ++p) {
    double acc = 0.0;
    for (std::size_t t = 0; t < f.terms(); ++t) {
      double v = f.coeffs[t];
      const unsigned* e = &f.exps[t * n];
      for (std::size_t i = 0; i < n; ++i) {
        const double x = soa[i * count + p];
        for (unsigned k = 0; k < e[i]; ++k) v *= x;
      }
      acc += v;
    }
    out[p] = acc;
  }
}

void dot_rows_scalar(const double* soa, std::size_t count, std::size_t dimension, const double* query,
                     double* out) {
  for (std::size_t p = 0; p < count; ++p) {
    double acc = 0.0;
    for (std::size_t i = 0; i < dimension; ++i) acc += query[i] * soa[i * count + p];
    out[p] = acc;
  }
}

}  // namespace lforge::kernels
