#include "scf/sparse.hpp"

#include <cmath>

#include "scf/error.hpp"
#include "scf/kernels.hpp"

namespace scf {

CsrMatrix CsrMatrix::from_eigen(const Eigen::SparseMatrix<double>& m) {
  Eigen::SparseMatrix<double, Eigen::RowMajor> r = m;
  r.makeCompressed();
  CsrMatrix out;
  out.rows = static_cast<std::int32_t>(r.rows());
  out.cols = static_cast<std::int32_t>(r.cols());
  out.row_ptr.assign(r.outerIndexPtr(), r.outerIndexPtr() + r.rows() + 1);
  out.col_idx.assign(r.innerIndexPtr(), r.innerIndexPtr() + r.nonZeros());
  out.values.assign(r.valuePtr(), r.valuePtr() + r.nonZeros());
  return out;
}

CsrMatrix CsrMatrix::from_dense(const Eigen::MatrixXd& m, double drop_tol) {
  CsrMatrix out;
  out.rows = static_cast<std::int32_t>(m.rows());
  out.cols = static_cast<std::int32_t>(m.cols());
  out.row_ptr.reserve(m.rows() + 1);
  out.row_ptr.push_back(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (std::abs(m(i, j)) > drop_tol) {
        out.col_idx.push_back(static_cast<std::int32_t>(j));
        out.values.push_back(m(i, j));
      }
    }
    out.row_ptr.push_back(static_cast<std::int32_t>(out.values.size()));
  }
  return out;
}

Eigen::MatrixXd CsrMatrix::to_dense() const {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(rows, cols);
  for (std::int32_t r = 0; r < rows; ++r) {
    for (std::int32_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) d(r, col_idx[k]) += values[k];
  }
  return d;
}

void CsrMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  if (x.size() != static_cast<std::size_t>(cols) || y.size() != static_cast<std::size_t>(rows)) {
    throw Error(ErrorCode::DimensionMismatch, "sparse product with mismatched vector length");
  }
  kernels::active().spmv(rows, row_ptr.data(), col_idx.data(), values.data(), x.data(), y.data());
}

Eigen::VectorXd CsrMatrix::multiply(const Eigen::VectorXd& x) const {
  Eigen::VectorXd y(rows);
  multiply(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())),
           std::span<double>(y.data(), static_cast<std::size_t>(y.size())));
  return y;
}

}  // namespace scf
