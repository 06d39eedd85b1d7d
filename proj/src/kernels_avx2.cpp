#include <immintrin.h>

#include "scf/kernels.hpp"

namespace scf::kernels {

namespace {

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

void axpy(std::size_t n, double a, const double* x, double* y) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double dot(std::size_t n, const double* x, const double* y) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

// Rows of Hodge Laplacians are short (degree-sized), so gather four entries at
// a time and finish the row tail in scalar code.
void spmv(std::int32_t rows, const std::int32_t* row_ptr, const std::int32_t* col_idx,
          const double* values, const double* x, double* y) {
  for (std::int32_t r = 0; r < rows; ++r) {
    std::int32_t k = row_ptr[r];
    const std::int32_t end = row_ptr[r + 1];
    __m256d acc = _mm256_setzero_pd();
    for (; k + 4 <= end; k += 4) {
      const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(col_idx + k));
      const __m256d xv = _mm256_i32gather_pd(x, idx, 8);
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(values + k), xv, acc);
    }
    double s = hsum(acc);
    for (; k < end; ++k) s += values[k] * x[col_idx[k]];
    y[r] = s;
  }
}

void cheb_step(std::size_t n, double c, const double* t, const double* w, const double* wprev,
               double* out) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d rhs = _mm256_fmadd_pd(two, _mm256_loadu_pd(w + i), _mm256_loadu_pd(wprev + i));
    _mm256_storeu_pd(out + i, _mm256_fmsub_pd(vc, _mm256_loadu_pd(t + i), rhs));
  }
  for (; i < n; ++i) out[i] = c * t[i] - 2.0 * w[i] - wprev[i];
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", axpy, dot, spmv, cheb_step};
  return table;
}

}  // namespace scf::kernels
