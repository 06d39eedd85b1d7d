#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "scf/complex.hpp"

namespace scf {

/// Dense Hodge Laplacian of order k split into its lower and upper parts.
struct HodgeLaplacians {
  int order = 1;
  Eigen::MatrixXd lower;
  Eigen::MatrixXd upper;
  Eigen::MatrixXd total;
};

/// k in {0, 1, 2}. For k = 0 the lower part is zero, for k = 2 the upper part.
HodgeLaplacians hodge_laplacian(const SimplicialComplex& sc, int k);

/// Parts of the normalized 1-Hodge Laplacian
///   L1n = D2 B1^T D1^-1 B1 + B2 D3 B2^T D2^-1
/// with D2 = max(diag(|B2| 1), I), D1 = 2 diag(|B1| D2 1) and D3 = I / 3.
struct NormalizedHodgeParts {
  Eigen::MatrixXd lower;  // D2 B1^T D1^-1 B1
  Eigen::MatrixXd upper;  // B2 D3 B2^T D2^-1
  Eigen::VectorXd d2;     // diagonal of D2

  Eigen::MatrixXd total() const { return lower + upper; }
  /// D2^{-1/2} (.) D2^{1/2}; both results are symmetric and similar to the parts.
  Eigen::MatrixXd symmetric_lower() const;
  Eigen::MatrixXd symmetric_upper() const;
};

NormalizedHodgeParts normalized_hodge_parts(const SimplicialComplex& sc);
Eigen::MatrixXd normalized_hodge_laplacian(const SimplicialComplex& sc);

/// Eigenbasis of a pair (lower, upper) of symmetric PSD matrices with
/// lower * upper = 0, split into harmonic, gradient and curl blocks.
struct HodgeSpectrum {
  Eigen::MatrixXd harmonic;  // N1 x N_H
  Eigen::MatrixXd gradient;  // N1 x N_G
  Eigen::MatrixXd curl;      // N1 x N_C
  Eigen::VectorXd gradient_eigenvalues;  // ascending
  Eigen::VectorXd curl_eigenvalues;      // ascending
  double zero_tol = 0.0;
  double lambda_max = 0.0;

  Eigen::Index size() const { return harmonic.rows(); }
  Eigen::Index harmonic_dim() const { return harmonic.cols(); }
  Eigen::Index gradient_dim() const { return gradient.cols(); }
  Eigen::Index curl_dim() const { return curl.cols(); }

  /// [U_H U_G U_C]
  Eigen::MatrixXd full_basis() const;
  /// Eigenvalues of L1 aligned with full_basis().
  Eigen::VectorXd full_eigenvalues() const;
};

/// Spectrum of the 1-Hodge Laplacian; zero_tol = 1e-8 * lambda_max(L1).
HodgeSpectrum hodge_spectrum(const SimplicialComplex& sc);
HodgeSpectrum hodge_spectrum(const Eigen::MatrixXd& lower, const Eigen::MatrixXd& upper);

/// Simplicial Fourier coefficients per block.
struct Embeddings {
  Eigen::VectorXd harmonic;
  Eigen::VectorXd gradient;
  Eigen::VectorXd curl;
};

Embeddings sft(const HodgeSpectrum& spectrum, const Eigen::VectorXd& flow);
Eigen::VectorXd inverse_sft(const HodgeSpectrum& spectrum, const Embeddings& embeddings);

struct HodgeComponents {
  Eigen::VectorXd gradient;
  Eigen::VectorXd curl;
  Eigen::VectorXd harmonic;
};

HodgeComponents hodge_decompose(const HodgeSpectrum& spectrum, const Eigen::VectorXd& flow);
HodgeComponents hodge_decompose(const SimplicialComplex& sc, const Eigen::VectorXd& flow);

/// B1 f
Eigen::VectorXd divergence(const SimplicialComplex& sc, const Eigen::VectorXd& flow);
/// B2^T f
Eigen::VectorXd curl(const SimplicialComplex& sc, const Eigen::VectorXd& flow);

/// Single-linkage grouping of sorted values: a new group starts when the gap to
/// the previous value exceeds grouping_tol. Returns group means. The tolerance
/// is floored at 1e-9 times the largest magnitude so that repeated eigenvalues
/// that differ only by rounding are merged.
std::vector<double> distinct_values(std::vector<double> values, double grouping_tol);

struct DistinctFrequencies {
  std::vector<double> gradient;
  std::vector<double> curl;
};
DistinctFrequencies distinct_frequencies(const HodgeSpectrum& spectrum, double grouping_tol);

}  // namespace scf
