#include "scf/design.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "scf/error.hpp"

namespace scf {

namespace {

double condition_number(const Eigen::MatrixXd& a) {
  if (a.size() == 0) return 1.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  const double smin = s[s.size() - 1];
  if (a.rows() < a.cols() || smin <= 0.0) return std::numeric_limits<double>::infinity();
  return s[0] / smin;
}

// Least squares with unit-norm column scaling; minimum-norm in scaled coordinates.
Eigen::VectorXd scaled_solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  if (a.cols() == 0) return Eigen::VectorXd();
  Eigen::VectorXd scale = a.colwise().norm().transpose();
  for (Eigen::Index j = 0; j < scale.size(); ++j) {
    if (scale[j] == 0.0) scale[j] = 1.0;
  }
  const Eigen::MatrixXd as = a * scale.cwiseInverse().asDiagonal();
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(as);
  return cod.solve(b).cwiseQuotient(scale);
}

void fill_powers(Eigen::MatrixXd& a, Eigen::Index row, Eigen::Index col, double lambda,
                 std::size_t order) {
  double p = 1.0;
  for (std::size_t j = 0; j < order; ++j) {
    p *= lambda;
    a(row, col + static_cast<Eigen::Index>(j)) = p;
  }
}

void check_targets(const std::vector<double>& qg, const std::vector<double>& qc,
                   const TabulatedTargets& t) {
  if (qg.size() != t.gradient.size() || qc.size() != t.curl.size()) {
    throw Error(ErrorCode::DimensionMismatch, "target count does not match frequency count");
  }
  if (qg.empty() && qc.empty()) {
    throw Error(ErrorCode::EmptySpec, "no gradient or curl frequencies to design for");
  }
}

void order_warnings(std::vector<std::string>& w, std::size_t order, std::size_t distinct,
                    const char* side) {
  if (order > distinct) {
    std::ostringstream os;
    os << "OrderExceedsDistinct: " << side << " order " << order << " exceeds the "
       << distinct << " distinct frequencies";
    w.push_back(os.str());
  }
}

void finish(DesignResult& r, const Eigen::MatrixXd& a, const Eigen::VectorXd& x,
            const Eigen::VectorXd& g) {
  r.residual = (a * x - g).norm();
  r.condition_number = condition_number(a);
  if (!(r.condition_number <= kIllConditioned)) {
    std::ostringstream os;
    os << "IllConditioned: condition number " << r.condition_number;
    r.warnings.push_back(os.str());
  }
}

Eigen::VectorXd target_vector(const TabulatedTargets& t) {
  Eigen::VectorXd g(1 + t.gradient.size() + t.curl.size());
  g[0] = t.g0;
  for (std::size_t i = 0; i < t.gradient.size(); ++i) g[1 + static_cast<Eigen::Index>(i)] = t.gradient[i];
  for (std::size_t i = 0; i < t.curl.size(); ++i) {
    g[1 + static_cast<Eigen::Index>(t.gradient.size() + i)] = t.curl[i];
  }
  return g;
}

std::uint64_t mix(std::uint64_t seed) { return seed ^ 0x9e3779b97f4a7c15ULL; }

Eigen::VectorXd random_start(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 gen(mix(seed));
  Eigen::VectorXd x(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    x[i] = 2.0 * static_cast<double>(gen() >> 11) * 0x1.0p-53 - 1.0;
  }
  return x;
}

template <class Mul>
double power_iteration(Eigen::Index n, int iterations, std::uint64_t seed, Mul mul) {
  if (iterations < 1) throw Error(ErrorCode::InvalidArgument, "iterations must be >= 1");
  if (n == 0) return 0.0;
  Eigen::VectorXd x = random_start(n, seed);
  x.normalize();
  double rq = 0.0;
  for (int it = 0; it < iterations; ++it) {
    const Eigen::VectorXd y = mul(x);
    rq = x.dot(y);
    const double ny = y.norm();
    if (ny == 0.0) return 0.0;
    x = y / ny;
  }
  return rq;
}

}  // namespace

DesignResult ls_joint(const std::vector<double>& qg, const std::vector<double>& qc,
                      const TabulatedTargets& targets, std::size_t l1, std::size_t l2) {
  check_targets(qg, qc, targets);
  const auto ng = static_cast<Eigen::Index>(qg.size());
  const auto nc = static_cast<Eigen::Index>(qc.size());
  const auto c1 = static_cast<Eigen::Index>(l1);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(1 + ng + nc, static_cast<Eigen::Index>(1 + l1 + l2));
  a.col(0).setOnes();
  for (Eigen::Index i = 0; i < ng; ++i) fill_powers(a, 1 + i, 1, qg[i], l1);
  for (Eigen::Index i = 0; i < nc; ++i) fill_powers(a, 1 + ng + i, 1 + c1, qc[i], l2);
  const Eigen::VectorXd g = target_vector(targets);
  const Eigen::VectorXd x = scaled_solve(a, g);

  DesignResult r;
  r.coefficients.h0 = x[0];
  r.coefficients.alpha.assign(x.data() + 1, x.data() + 1 + l1);
  r.coefficients.beta.assign(x.data() + 1 + l1, x.data() + 1 + l1 + l2);
  order_warnings(r.warnings, l1, qg.size(), "lower");
  order_warnings(r.warnings, l2, qc.size(), "upper");
  finish(r, a, x, g);
  return r;
}

DesignResult ls_decoupled(const std::vector<double>& qg, const std::vector<double>& qc,
                          const TabulatedTargets& targets, std::size_t l1, std::size_t l2) {
  check_targets(qg, qc, targets);
  auto side = [&](const std::vector<double>& q, const std::vector<double>& t, std::size_t order) {
    Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(q.size()),
                                                static_cast<Eigen::Index>(order));
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(q.size()));
    for (std::size_t i = 0; i < q.size(); ++i) {
      fill_powers(phi, static_cast<Eigen::Index>(i), 0, q[i], order);
      rhs[static_cast<Eigen::Index>(i)] = t[i] - targets.g0;
    }
    Eigen::VectorXd x = order == 0 || q.empty() ? Eigen::VectorXd::Zero(static_cast<Eigen::Index>(order))
                                                : scaled_solve(phi, rhs);
    return x;
  };
  const Eigen::VectorXd alpha = side(qg, targets.gradient, l1);
  const Eigen::VectorXd beta = side(qc, targets.curl, l2);

  DesignResult r;
  r.coefficients.h0 = targets.g0;
  r.coefficients.alpha.assign(alpha.data(), alpha.data() + alpha.size());
  r.coefficients.beta.assign(beta.data(), beta.data() + beta.size());
  order_warnings(r.warnings, l1, qg.size(), "lower");
  order_warnings(r.warnings, l2, qc.size(), "upper");

  // Residual and conditioning are reported against the joint system so that
  // the two designs are directly comparable.
  const auto ng = static_cast<Eigen::Index>(qg.size());
  const auto nc = static_cast<Eigen::Index>(qc.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(1 + ng + nc, static_cast<Eigen::Index>(1 + l1 + l2));
  a.col(0).setOnes();
  for (Eigen::Index i = 0; i < ng; ++i) fill_powers(a, 1 + i, 1, qg[i], l1);
  for (Eigen::Index i = 0; i < nc; ++i) fill_powers(a, 1 + ng + i, 1 + static_cast<Eigen::Index>(l1), qc[i], l2);
  Eigen::VectorXd x(a.cols());
  x << targets.g0, alpha, beta;
  finish(r, a, x, target_vector(targets));
  return r;
}

DesignResult ls_tied(const std::vector<double>& qg, const std::vector<double>& qc,
                     const TabulatedTargets& targets, std::size_t order) {
  check_targets(qg, qc, targets);
  const auto ng = static_cast<Eigen::Index>(qg.size());
  const auto nc = static_cast<Eigen::Index>(qc.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(1 + ng + nc, static_cast<Eigen::Index>(1 + order));
  a.col(0).setOnes();
  for (Eigen::Index i = 0; i < ng; ++i) fill_powers(a, 1 + i, 1, qg[i], order);
  for (Eigen::Index i = 0; i < nc; ++i) fill_powers(a, 1 + ng + i, 1, qc[i], order);
  const Eigen::VectorXd g = target_vector(targets);
  const Eigen::VectorXd x = scaled_solve(a, g);

  DesignResult r;
  r.coefficients.h0 = x[0];
  r.coefficients.alpha.assign(x.data() + 1, x.data() + 1 + order);
  r.coefficients.beta = r.coefficients.alpha;
  finish(r, a, x, g);
  return r;
}

DesignResult ls_one_sided(const std::vector<double>& q, const std::vector<double>& targets,
                          std::size_t order, bool curl) {
  if (q.size() != targets.size()) {
    throw Error(ErrorCode::DimensionMismatch, "target count does not match frequency count");
  }
  if (q.empty()) throw Error(ErrorCode::EmptySpec, "no frequencies to design for");
  Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(q.size()),
                                              static_cast<Eigen::Index>(order));
  const Eigen::VectorXd g = Eigen::Map<const Eigen::VectorXd>(targets.data(), static_cast<Eigen::Index>(targets.size()));
  for (std::size_t i = 0; i < q.size(); ++i) fill_powers(phi, static_cast<Eigen::Index>(i), 0, q[i], order);
  const Eigen::VectorXd x = scaled_solve(phi, g);

  DesignResult r;
  std::vector<double> c(x.data(), x.data() + x.size());
  (curl ? r.coefficients.beta : r.coefficients.alpha) = std::move(c);
  order_warnings(r.warnings, order, q.size(), curl ? "upper" : "lower");
  finish(r, phi, x, g);
  return r;
}

double estimate_lambda_max(const Eigen::MatrixXd& m, int iterations, std::uint64_t seed) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
  return power_iteration(m.rows(), iterations, seed,
                         [&](const Eigen::VectorXd& x) -> Eigen::VectorXd { return m * x; });
}

double estimate_lambda_max(const CsrMatrix& m, int iterations, std::uint64_t seed) {
  if (m.rows != m.cols) throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
  return power_iteration(m.rows, iterations, seed,
                         [&](const Eigen::VectorXd& x) { return m.multiply(x); });
}

std::vector<double> uniform_samples(double lo, double hi, std::size_t count) {
  std::vector<double> s;
  if (count == 0) return s;
  if (count == 1) return {lo};
  s.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    s.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  return s;
}

DesignResult grid_design(const ResponseSpec& spec, std::size_t m1, std::size_t m2,
                         std::size_t l1, std::size_t l2, DesignMode mode) {
  auto samples = [](const std::optional<ResponseFunction>& f, std::size_t m, std::size_t order,
                    const char* side) {
    if (!f) return std::vector<double>{};
    if (m < order) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string(side) + " sample count is smaller than the filter order");
    }
    const double lo = f->has_lambda_min() ? f->lambda_min() : 1e-8 * f->lambda_max();
    return uniform_samples(lo, f->lambda_max(), m);
  };
  const std::vector<double> qg = samples(spec.gradient, m1, l1, "gradient");
  const std::vector<double> qc = samples(spec.curl, m2, l2, "curl");
  if (!spec.gradient) l1 = 0;
  if (!spec.curl) l2 = 0;
  const TabulatedTargets t = tabulate(spec, qg, qc);
  DesignResult r = mode == DesignMode::Joint ? ls_joint(qg, qc, t, l1, l2)
                                             : ls_decoupled(qg, qc, t, l1, l2);
  // Sample counts bound the order, not the number of distinct eigenvalues.
  std::erase_if(r.warnings, [](const std::string& w) { return w.rfind("OrderExceeds", 0) == 0; });
  return r;
}

}  // namespace scf
