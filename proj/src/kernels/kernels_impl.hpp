#pragma once

#include "lforge/kernels.hpp"

namespace lforge::kernels {

void evaluate_scalar(const CompiledPolynomial& f, const double* soa, std::size_t count, double* out);
void dot_rows_scalar(const double* soa, std::size_t count, std::size_t dimension, const double* query,
                     double* out);

#if defined(LFORGE_HAVE_AVX2)
void evaluate_avx2(const CompiledPolynomial& f, const double* soa, std::size_t count, double* out);
void dot_rows_avx2(const double* soa, std::size_t count, std::size_t dimension, const double* query, double* out);
#endif

}  // namespace lforge::kernels
