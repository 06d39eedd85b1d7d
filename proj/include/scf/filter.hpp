#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "scf/complex.hpp"
#include "scf/sparse.hpp"
#include "scf/spectral.hpp"

namespace scf {

/// H = h0 I + sum_l alpha_l L_lower^l + sum_l beta_l L_upper^l
struct FilterCoefficients {
  double h0 = 0.0;
  std::vector<double> alpha;
  std::vector<double> beta;

  std::size_t order_lower() const noexcept { return alpha.size(); }
  std::size_t order_upper() const noexcept { return beta.size(); }
};

/// The two edge shift operators in sparse form.
struct EdgeShifts {
  CsrMatrix lower;
  CsrMatrix upper;

  std::size_t size() const noexcept { return static_cast<std::size_t>(lower.rows); }

  /// B1^T B1 and B2 B2^T
  static EdgeShifts combinatorial(const SimplicialComplex& sc);
  /// Parts of the normalized Hodge Laplacian.
  static EdgeShifts normalized(const SimplicialComplex& sc);
  static EdgeShifts from_dense(const Eigen::MatrixXd& lower, const Eigen::MatrixXd& upper);
};

Eigen::VectorXd shift_lower(const SimplicialComplex& sc, const Eigen::VectorXd& flow);
Eigen::VectorXd shift_upper(const SimplicialComplex& sc, const Eigen::VectorXd& flow);

Eigen::VectorXd apply(const EdgeShifts& shifts, const FilterCoefficients& coeffs,
                      const Eigen::VectorXd& flow);
Eigen::VectorXd apply(const SimplicialComplex& sc, const FilterCoefficients& coeffs,
                      const Eigen::VectorXd& flow);

/// Result of a synchronous message-passing simulation of the two shifts.
struct DistributedShiftTrace {
  Eigen::VectorXd lower;  // L_lower^rounds_lower f
  Eigen::VectorXd upper;  // L_upper^rounds_upper f
  std::size_t messages = 0;
  /// messages_lower[r][i]: values edge i received in lower round r.
  std::vector<std::vector<std::size_t>> messages_lower;
  std::vector<std::vector<std::size_t>> messages_upper;
};

/// Each edge keeps its own value and, per round, reads the current values of
/// its lower (or upper) neighbours and combines them with locally known
/// orientation weights. No Laplacian matrix is formed.
DistributedShiftTrace distributed_shift(const SimplicialComplex& sc, const Eigen::VectorXd& flow,
                                        std::size_t rounds_lower, std::size_t rounds_upper);

enum class FrequencyType { Harmonic, Gradient, Curl };

const char* to_string(FrequencyType t);

/// Response of an LS-type filter at one frequency.
double response_at(const FilterCoefficients& coeffs, double lambda, FrequencyType type);

struct FrequencyResponse {
  double at_harmonic = 0.0;
  std::vector<std::pair<double, double>> at_gradient;  // (lambda, response)
  std::vector<std::pair<double, double>> at_curl;
};

/// Evaluates the response at every gradient and curl eigenvalue of the spectrum.
FrequencyResponse frequency_response(const FilterCoefficients& coeffs,
                                     const HodgeSpectrum& spectrum);

}  // namespace scf
