#include "scf/kernels.hpp"

namespace scf::kernels {

namespace {

void axpy(std::size_t n, double a, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double dot(std::size_t n, const double* x, const double* y) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void spmv(std::int32_t rows, const std::int32_t* row_ptr, const std::int32_t* col_idx,
          const double* values, const double* x, double* y) {
  for (std::int32_t r = 0; r < rows; ++r) {
    double s = 0.0;
    for (std::int32_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) s += values[k] * x[col_idx[k]];
    y[r] = s;
  }
}

void cheb_step(std::size_t n, double c, const double* t, const double* w, const double* wprev,
               double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = c * t[i] - 2.0 * w[i] - wprev[i];
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{"scalar", axpy, dot, spmv, cheb_step};
  return table;
}

}  // namespace scf::kernels
