#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace scf {

/// Compressed sparse row matrix used by the shift kernels.
struct CsrMatrix {
  std::int32_t rows = 0;
  std::int32_t cols = 0;
  std::vector<std::int32_t> row_ptr;  // size rows + 1
  std::vector<std::int32_t> col_idx;
  std::vector<double> values;

  std::size_t nonzeros() const noexcept { return values.size(); }

  static CsrMatrix from_eigen(const Eigen::SparseMatrix<double>& m);
  /// Drops entries with |value| <= drop_tol.
  static CsrMatrix from_dense(const Eigen::MatrixXd& m, double drop_tol = 0.0);

  Eigen::MatrixXd to_dense() const;

  /// y = A x through the active kernel table.
  void multiply(std::span<const double> x, std::span<double> y) const;
  Eigen::VectorXd multiply(const Eigen::VectorXd& x) const;
};

}  // namespace scf
