#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "lforge/polynomial.hpp"

namespace lforge::kernels {

/// Float image of a Polynomial for batched evaluation: term t has coefficient
/// coeffs[t] and exponents exps[t * dimension + i].
struct CompiledPolynomial {
  std::size_t dimension = 0;
  std::vector<double> coeffs;
  std::vector<unsigned> exps;

  std::size_t terms() const { return coeffs.size(); }
};

CompiledPolynomial compile(const Polynomial& f);

/// Points are stored structure-of-arrays: coordinate i of point p is soa[i * count + p].
///
/// out[p] = f(point p). Each term is formed as coeff * x_1 * ... (repeated
/// multiplication in variable order) and terms are summed in order, so every
/// implementation produces bit-identical results.
using EvaluateFn = void (*)(const CompiledPolynomial& f, const double* soa, std::size_t count, double* out);

/// out[p] = sum_i query[i] * soa[i * count + p], accumulated in coordinate order.
using DotRowsFn = void (*)(const double* soa, std::size_t count, std::size_t dimension, const double* query,
                           double* out);

struct KernelTable {
  std::string_view name;
  EvaluateFn evaluate;
  DotRowsFn dot_rows;
};

const KernelTable& scalar_kernels();
/// Null when the build has no AVX2 variant.
const KernelTable* avx2_kernels();
bool cpu_has_avx2();

/// Kernel table picked at first use: AVX2 when built and supported by the CPU,
/// scalar otherwise. LFORGE_KERNELS=scalar forces the reference path.
const KernelTable& active();

}  // namespace lforge::kernels
