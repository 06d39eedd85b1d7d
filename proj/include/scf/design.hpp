#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "scf/filter.hpp"
#include "scf/sparse.hpp"

namespace scf {

/// A desired frequency response g(lambda) on [lambda_min, lambda_max].
class ResponseFunction {
public:
  enum class Family { Table, Constant, Step, Logistic, InverseShift, OneMinusLogistic };

  static ResponseFunction constant(double value, double lambda_max);
  /// low for lambda < cutoff, high otherwise.
  static ResponseFunction step(double cutoff, double low, double high, double lambda_max);
  /// 1 / (1 + exp(-k (lambda - lambda0)))
  static ResponseFunction logistic(double k, double lambda0, double lambda_max);
  /// 1 - logistic(k, lambda0)
  static ResponseFunction one_minus_logistic(double k, double lambda0, double lambda_max);
  /// 1 / (gamma + scale * lambda)
  static ResponseFunction inverse_shift(double gamma, double lambda_max, double scale = 1.0);
  /// Piecewise-linear through the points, constant beyond the end points.
  static ResponseFunction table(std::vector<std::pair<double, double>> points);

  double operator()(double lambda) const;

  Family family() const noexcept { return family_; }
  const char* family_name() const;
  double lambda_min() const noexcept { return lambda_min_; }
  double lambda_max() const noexcept { return lambda_max_; }
  bool has_lambda_min() const noexcept { return has_min_; }
  ResponseFunction& set_domain(double lo, double hi);
  ResponseFunction& set_lambda_max(double hi);

  /// Family parameters, in the order documented for each factory.
  const std::vector<double>& params() const noexcept { return params_; }
  const std::vector<std::pair<double, double>>& points() const noexcept { return points_; }

private:
  Family family_ = Family::Constant;
  std::vector<double> params_;
  std::vector<std::pair<double, double>> points_;
  double lambda_min_ = 0.0;
  double lambda_max_ = 0.0;
  bool has_min_ = false;
};

/// Harmonic response plus optional gradient and curl response functions.
/// A missing side means the corresponding shift is not used.
struct ResponseSpec {
  double g0 = 0.0;
  std::optional<ResponseFunction> gradient;
  std::optional<ResponseFunction> curl;
};

/// Desired responses at given frequencies.
struct TabulatedTargets {
  double g0 = 0.0;
  std::vector<double> gradient;
  std::vector<double> curl;
};

TabulatedTargets tabulate(const ResponseSpec& spec, const std::vector<double>& q_gradient,
                          const std::vector<double>& q_curl);

struct DesignResult {
  FilterCoefficients coefficients;
  double residual = 0.0;          // ||A x - g||_2
  double condition_number = 0.0;  // of the unscaled system matrix
  std::vector<std::string> warnings;
};

/// Condition numbers above this produce an IllConditioned warning.
inline constexpr double kIllConditioned = 1e10;

/// Joint least squares on [1 | blkdiag(Phi_G, Phi_C)] [h0; alpha; beta] = [g0; g_G; g_C].
DesignResult ls_joint(const std::vector<double>& q_gradient, const std::vector<double>& q_curl,
                      const TabulatedTargets& targets, std::size_t order_lower,
                      std::size_t order_upper);

/// h0 = g0, alpha = Phi_G^+ (g_G - g0), beta = Phi_C^+ (g_C - g0).
DesignResult ls_decoupled(const std::vector<double>& q_gradient, const std::vector<double>& q_curl,
                          const TabulatedTargets& targets, std::size_t order_lower,
                          std::size_t order_upper);

/// Joint least squares with alpha = beta (the same polynomial in L1).
DesignResult ls_tied(const std::vector<double>& q_gradient, const std::vector<double>& q_curl,
                     const TabulatedTargets& targets, std::size_t order);

/// h0 = 0 and alpha fitted to g_G on the gradient frequencies only (beta empty);
/// with curl = true the roles swap.
DesignResult ls_one_sided(const std::vector<double>& q, const std::vector<double>& targets,
                          std::size_t order, bool curl);

/// Power-iteration Rayleigh quotient from a seeded random start. 0 for a zero matrix.
double estimate_lambda_max(const Eigen::MatrixXd& m, int iterations, std::uint64_t seed);
double estimate_lambda_max(const CsrMatrix& m, int iterations, std::uint64_t seed);

enum class DesignMode { Joint, Decoupled };

/// `count` uniformly spaced points on [lo, hi], end points included.
std::vector<double> uniform_samples(double lo, double hi, std::size_t count);

/// Samples the continuous responses uniformly and solves the LS problem on the
/// samples. A side whose function has no explicit lower bound starts at
/// 1e-8 * lambda_max. Missing sides get order 0.
DesignResult grid_design(const ResponseSpec& spec, std::size_t samples_lower,
                         std::size_t samples_upper, std::size_t order_lower,
                         std::size_t order_upper, DesignMode mode);

/// Shifted-Chebyshev series per side; an empty coefficient vector means the
/// side is absent.
struct ChebyshevFilter {
  std::vector<double> c_lower;
  std::vector<double> c_upper;
  double omega_lower = 0.0;
  double omega_upper = 0.0;
  double g0 = 0.0;

  bool has_lower() const noexcept { return !c_lower.empty(); }
  bool has_upper() const noexcept { return !c_upper.empty(); }
  /// Identity weight of one series: its value at lambda = 0.
  static double identity_weight(const std::vector<double>& c);
  double p_lower() const { return identity_weight(c_lower); }
  double p_upper() const { return identity_weight(c_upper); }
  /// The -g0 I correction applies only when both series are present.
  double correction() const { return has_lower() && has_upper() ? g0 : 0.0; }
};

/// c_l = (2/pi) int_0^pi cos(l phi) g(omega (cos phi + 1)) dphi by the midpoint rule.
std::vector<double> chebyshev_coefficients(const ResponseFunction& g, double omega,
                                           std::size_t order, std::size_t quadrature_points);

/// Value of 0.5 c_0 + sum_l c_l P_l(lambda) with P_l(lambda) = T_l(lambda / omega - 1).
double chebyshev_series(const std::vector<double>& c, double omega, double lambda);

/// quadrature_points = 0 selects max(256, 8 * max order). Throws DomainMismatch
/// when both sides are present and g_G(0) != g_C(0) or g0 differs from them.
ChebyshevFilter chebyshev_design(const ResponseSpec& spec, double lambda_max_lower,
                                 double lambda_max_upper, std::size_t order_lower,
                                 std::size_t order_upper, std::size_t quadrature_points = 0);

/// H_lower f + H_upper f - g0 f by the three-term vector recursion.
Eigen::VectorXd chebyshev_apply(const ChebyshevFilter& filter, const EdgeShifts& shifts,
                                const Eigen::VectorXd& flow);
Eigen::VectorXd chebyshev_apply(const ChebyshevFilter& filter, const SimplicialComplex& sc,
                                const Eigen::VectorXd& flow);

double chebyshev_response(const ChebyshevFilter& filter, double lambda, FrequencyType type);

struct ChebyshevBound {
  double bound = 0.0;  // max(b_lower, b_upper)
  double b_lower = 0.0;
  double b_upper = 0.0;
  std::optional<double> operator_error;  // dense ||G - H||_2 when requested
};

/// Grid supremum of the total response error per side. If `spectrum` is given,
/// the dense operator error on that spectrum is also computed.
ChebyshevBound chebyshev_error_bound(const ChebyshevFilter& filter, const ResponseSpec& spec,
                                     std::size_t sample_count,
                                     const HodgeSpectrum* spectrum = nullptr,
                                     const HodgeLaplacians* laplacians = nullptr);

}  // namespace scf
