#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "scf/design.hpp"
#include "scf/error.hpp"
#include "scf/kernels.hpp"

namespace scf {

namespace {

bool close(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)); }

void check_omega(double omega, const char* side) {
  if (!(omega > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, std::string(side) + " Chebyshev domain must be positive");
  }
}

// y += (0.5 c_0 I + sum_l c_l P_l(A)) x
void accumulate_series(const CsrMatrix& a, const std::vector<double>& c, double omega,
                       const Eigen::VectorXd& x, Eigen::VectorXd& y) {
  if (c.empty()) return;
  const auto& k = kernels::active();
  const auto n = static_cast<std::size_t>(x.size());
  k.axpy(n, 0.5 * c[0], x.data(), y.data());
  if (c.size() == 1) return;

  Eigen::VectorXd prev = x;
  Eigen::VectorXd cur(x.size());
  Eigen::VectorXd t(x.size());
  Eigen::VectorXd next(x.size());
  k.spmv(a.rows, a.row_ptr.data(), a.col_idx.data(), a.values.data(), x.data(), t.data());
  cur = t / omega - x;
  k.axpy(n, c[1], cur.data(), y.data());
  for (std::size_t l = 2; l < c.size(); ++l) {
    k.spmv(a.rows, a.row_ptr.data(), a.col_idx.data(), a.values.data(), cur.data(), t.data());
    k.cheb_step(n, 2.0 / omega, t.data(), cur.data(), prev.data(), next.data());
    k.axpy(n, c[l], next.data(), y.data());
    prev.swap(cur);
    cur.swap(next);
  }
}

Eigen::MatrixXd dense_series(const Eigen::MatrixXd& a, const std::vector<double>& c, double omega) {
  const Eigen::Index n = a.rows();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd h = 0.5 * c[0] * id;
  if (c.size() == 1) return h;
  const Eigen::MatrixXd p1 = a / omega - id;
  Eigen::MatrixXd prev = id;
  Eigen::MatrixXd cur = p1;
  h += c[1] * cur;
  for (std::size_t l = 2; l < c.size(); ++l) {
    Eigen::MatrixXd next = 2.0 * p1 * cur - prev;
    h += c[l] * next;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return h;
}

}  // namespace

double ChebyshevFilter::identity_weight(const std::vector<double>& c) {
  if (c.empty()) return 0.0;
  double p = 0.5 * c[0];
  for (std::size_t l = 1; l < c.size(); ++l) p += (l % 2 == 0 ? 1.0 : -1.0) * c[l];
  return p;
}

std::vector<double> chebyshev_coefficients(const ResponseFunction& g, double omega,
                                           std::size_t order, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "quadrature needs at least one node");
  std::vector<double> samples(m), phis(m);
  for (std::size_t j = 0; j < m; ++j) {
    phis[j] = (static_cast<double>(j) + 0.5) * std::numbers::pi / static_cast<double>(m);
    samples[j] = g(omega * (std::cos(phis[j]) + 1.0));
  }
  std::vector<double> c(order + 1, 0.0);
  for (std::size_t l = 0; l <= order; ++l) {
    double s = 0.0;
    for (std::size_t j = 0; j < m; ++j) s += std::cos(static_cast<double>(l) * phis[j]) * samples[j];
    c[l] = 2.0 * s / static_cast<double>(m);
  }
  return c;
}

double chebyshev_series(const std::vector<double>& c, double omega, double lambda) {
  if (c.empty()) return 0.0;
  const double x = lambda / omega - 1.0;
  double sum = 0.5 * c[0];
  double prev = 1.0, cur = x;
  if (c.size() > 1) sum += c[1] * cur;
  for (std::size_t l = 2; l < c.size(); ++l) {
    const double next = 2.0 * x * cur - prev;
    sum += c[l] * next;
    prev = cur;
    cur = next;
  }
  return sum;
}

ChebyshevFilter chebyshev_design(const ResponseSpec& spec, double lambda_max_lower,
                                 double lambda_max_upper, std::size_t l1, std::size_t l2,
                                 std::size_t quadrature_points) {
  if (!spec.gradient && !spec.curl) {
    throw Error(ErrorCode::EmptySpec, "Chebyshev design needs a gradient or curl response");
  }
  if (spec.gradient && spec.curl) {
    const double a = (*spec.gradient)(0.0);
    const double b = (*spec.curl)(0.0);
    if (!close(a, b) || !close(a, spec.g0)) {
      throw Error(ErrorCode::DomainMismatch, "gradient and curl responses at 0 must both equal g0");
    }
  }
  const std::size_t m =
      quadrature_points > 0 ? quadrature_points : std::max<std::size_t>(256, 8 * std::max(l1, l2));
  ChebyshevFilter f;
  f.g0 = spec.g0;
  if (spec.gradient) {
    check_omega(lambda_max_lower, "lower");
    f.omega_lower = lambda_max_lower / 2.0;
    f.c_lower = chebyshev_coefficients(*spec.gradient, f.omega_lower, l1, m);
  }
  if (spec.curl) {
    check_omega(lambda_max_upper, "upper");
    f.omega_upper = lambda_max_upper / 2.0;
    f.c_upper = chebyshev_coefficients(*spec.curl, f.omega_upper, l2, m);
  }
  return f;
}

Eigen::VectorXd chebyshev_apply(const ChebyshevFilter& filter, const EdgeShifts& shifts,
                                const Eigen::VectorXd& flow) {
  if (static_cast<std::size_t>(flow.size()) != shifts.size()) {
    throw Error(ErrorCode::DimensionMismatch, "flow has length " + std::to_string(flow.size()) +
                                                  ", expected " + std::to_string(shifts.size()));
  }
  Eigen::VectorXd y = -filter.correction() * flow;
  accumulate_series(shifts.lower, filter.c_lower, filter.omega_lower, flow, y);
  accumulate_series(shifts.upper, filter.c_upper, filter.omega_upper, flow, y);
  return y;
}

Eigen::VectorXd chebyshev_apply(const ChebyshevFilter& filter, const SimplicialComplex& sc,
                                const Eigen::VectorXd& flow) {
  if (static_cast<std::size_t>(flow.size()) != sc.edge_count()) {
    throw Error(ErrorCode::DimensionMismatch, "flow has length " + std::to_string(flow.size()) +
                                                  ", expected " +
                                                  std::to_string(sc.edge_count()));
  }
  return chebyshev_apply(filter, EdgeShifts::combinatorial(sc), flow);
}

double chebyshev_response(const ChebyshevFilter& filter, double lambda, FrequencyType type) {
  const double pl = filter.p_lower();
  const double pu = filter.p_upper();
  const double corr = filter.correction();
  switch (type) {
    case FrequencyType::Harmonic: return pl + pu - corr;
    case FrequencyType::Gradient:
      return (filter.has_lower() ? chebyshev_series(filter.c_lower, filter.omega_lower, lambda) : 0.0) +
             pu - corr;
    case FrequencyType::Curl:
      return (filter.has_upper() ? chebyshev_series(filter.c_upper, filter.omega_upper, lambda) : 0.0) +
             pl - corr;
  }
  return 0.0;
}

ChebyshevBound chebyshev_error_bound(const ChebyshevFilter& filter, const ResponseSpec& spec,
                                     std::size_t sample_count, const HodgeSpectrum* spectrum,
                                     const HodgeLaplacians* laplacians) {
  if (sample_count < 100) throw Error(ErrorCode::InvalidArgument, "sample_count must be >= 100");
  auto side_sup = [&](const std::optional<ResponseFunction>& g, double omega, FrequencyType t) {
    if (!g || omega <= 0.0) return 0.0;
    double sup = 0.0;
    for (double l : uniform_samples(0.0, 2.0 * omega, sample_count)) {
      sup = std::max(sup, std::abs(chebyshev_response(filter, l, t) - (*g)(l)));
    }
    return sup;
  };
  ChebyshevBound b;
  b.b_lower = filter.has_lower() ? side_sup(spec.gradient, filter.omega_lower, FrequencyType::Gradient) : 0.0;
  b.b_upper = filter.has_upper() ? side_sup(spec.curl, filter.omega_upper, FrequencyType::Curl) : 0.0;
  b.bound = std::max(b.b_lower, b.b_upper);

  if (spectrum != nullptr && laplacians != nullptr) {
    const Eigen::Index n = spectrum->size();
    Eigen::VectorXd gdiag(n);
    Eigen::Index i = 0;
    for (Eigen::Index j = 0; j < spectrum->harmonic_dim(); ++j) gdiag[i++] = spec.g0;
    for (double l : spectrum->gradient_eigenvalues) gdiag[i++] = spec.gradient ? (*spec.gradient)(l) : spec.g0;
    for (double l : spectrum->curl_eigenvalues) gdiag[i++] = spec.curl ? (*spec.curl)(l) : spec.g0;
    const Eigen::MatrixXd u = spectrum->full_basis();
    const Eigen::MatrixXd g = u * gdiag.asDiagonal() * u.transpose();

    Eigen::MatrixXd h = -filter.correction() * Eigen::MatrixXd::Identity(n, n);
    if (filter.has_lower()) h += dense_series(laplacians->lower, filter.c_lower, filter.omega_lower);
    if (filter.has_upper()) h += dense_series(laplacians->upper, filter.c_upper, filter.omega_upper);
    const Eigen::MatrixXd d = g - h;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (d + d.transpose()), Eigen::EigenvaluesOnly);
    b.operator_error = es.eigenvalues().cwiseAbs().maxCoeff();
  }
  return b;
}

}  // namespace scf
