#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace lforge::kernels {

CompiledPolynomial compile(const Polynomial& f) {
  CompiledPolynomial c;
  c.dimension = f.dimension();
  for (const auto& [m, coeff] : f.terms()) {
    c.coeffs.push_back(coeff.get_d());
    c.exps.insert(c.exps.end(), m.exponents().begin(), m.exponents().end());
  }
  return c;
}

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", &evaluate_scalar, &dot_rows_scalar};
  return table;
}

const KernelTable* avx2_kernels() {
#if defined(LFORGE_HAVE_AVX2)
  static const KernelTable table{"avx2", &evaluate_avx2, &dot_rows_avx2};
  return &table;
#else
  return nullptr;
#endif
}

bool cpu_has_avx2() {
#if defined(LFORGE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& active() {
  static const KernelTable& table = [] () -> const KernelTable& {
    const char* forced = std::getenv("LFORGE_KERNELS");
    if (forced && std::string_view(forced) == "scalar") return scalar_kernels();
    if (avx2_kernels() && cpu_has_avx2()) return *avx2_kernels();
    return scalar_kernels();
  }();
  return table;
}

}  // namespace lforge::kernels
