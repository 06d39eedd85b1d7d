#pragma once

#include <cstddef>
#include <cstdint>

namespace scf::kernels {

/// Inner loops of the shift recursions. Every table computes the same maths;
/// vector variants may differ from the scalar reference only by rounding.
struct KernelTable {
  const char* name;
  /// y += a * x
  void (*axpy)(std::size_t n, double a, const double* x, double* y);
  double (*dot)(std::size_t n, const double* x, const double* y);
  /// y = A x for a CSR matrix with `rows` rows.
  void (*spmv)(std::int32_t rows, const std::int32_t* row_ptr, const std::int32_t* col_idx,
               const double* values, const double* x, double* y);
  /// out = c * t - 2 * w - wprev, the affine part of one shifted-Chebyshev step
  /// after t = A w has been formed.
  void (*cheb_step)(std::size_t n, double c, const double* t, const double* w, const double* wprev,
                    double* out);
};

const KernelTable& scalar();
/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2();
/// The table used by the library. AVX2 when available unless the environment
/// variable SCF_KERNELS is set to "scalar".
const KernelTable& active();

}  // namespace scf::kernels
