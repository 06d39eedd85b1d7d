#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>

#include "scf/complex.hpp"
#include "scf/design.hpp"
#include "scf/filter.hpp"
#include "scf/spectral.hpp"

namespace scf {

/// ||estimate - truth|| / ||truth||; throws ZeroReference for a zero truth.
double nrmse(const Eigen::VectorXd& estimate, const Eigen::VectorXd& truth);

// ---------------------------------------------------------------------------
// Subcomponent extraction

enum class Component { Harmonic, Gradient, Curl };
enum class ExtractionMethod { Spectral, FilterLs, FilterOneSided, FilterCheb };

struct ExtractionOptions {
  ExtractionMethod method = ExtractionMethod::Spectral;
  /// LS orders; 0 selects the number of distinct frequencies of that type.
  std::size_t order_lower = 0;
  std::size_t order_upper = 0;
  bool tied = false;           // alpha = beta, order = order_lower
  DesignMode mode = DesignMode::Joint;
  double group_tol = 0.0;
  // Chebyshev parameters.
  std::size_t cheb_order = 39;
  double logistic_k = 100.0;
  double logistic_lambda0 = 0.01;
  int power_steps = 50;
  std::uint64_t seed = 1;
};

struct ExtractionResult {
  Eigen::VectorXd flow;
  double nrmse = 0.0;  // against the spectral projection
  std::optional<FilterCoefficients> coefficients;
  std::optional<ChebyshevFilter> chebyshev;
  std::vector<std::string> warnings;
};

ExtractionResult extract_component(const SimplicialComplex& sc, const HodgeSpectrum& spectrum,
                                   const Eigen::VectorXd& flow, Component which,
                                   const ExtractionOptions& options);

/// Inflated power-iteration estimate used as a Chebyshev domain bound.
double chebyshev_domain(const CsrMatrix& m, int power_steps, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Denoising

enum class Regularizer { EdgeLaplacian, HodgeLaplacian };
enum class DenoiseMethod { Exact, Grid, Cheb };

struct DenoiseOptions {
  double mu = 0.5;
  Regularizer regularizer = Regularizer::HodgeLaplacian;
  DenoiseMethod method = DenoiseMethod::Exact;
  std::size_t order = 4;
  std::size_t samples = 10;
  int power_steps = 50;
  std::uint64_t seed = 1;
};

/// Low-pass response 1 / (1 + mu lambda) of (I + mu P)^-1 as a ResponseSpec.
ResponseSpec denoise_spec(Regularizer regularizer, double mu, double lambda_max_lower,
                          double lambda_max_upper);

Eigen::VectorXd denoise(const SimplicialComplex& sc, const Eigen::VectorXd& noisy,
                        const DenoiseOptions& options);

// ---------------------------------------------------------------------------
// Exchange markets

struct ExchangeMarket {
  std::vector<std::string> currencies;
  Eigen::MatrixXd rate;  // rate(i, j): units of j per unit of i; NaN marks a missing quote
};

/// How the two quotes of a pair become one edge flow value.
enum class QuoteConvention {
  Upper,      // f_ij = log r[i][j] for i < j
  Symmetric,  // f_ij = (log r[i][j] - log r[j][i]) / 2
};

struct MarketFlow {
  SimplicialComplex sc;
  Eigen::VectorXd flow;
  bool complete = true;
};

/// Complete graph with every triple filled (or the quoted pairs only when
/// quotes are missing). Throws NonPositiveRate.
MarketFlow market_flow(const ExchangeMarket& market, QuoteConvention convention);

struct ArbitrageTriangle {
  Triangle currencies;     // ascending indices
  double curl = 0.0;       // log r_ij + log r_jk - log r_ik
  double roundtrip = 1.0;  // exp(|curl|)
  double gain = 0.0;       // roundtrip - 1
};

std::vector<ArbitrageTriangle> arbitrage_check(const ExchangeMarket& market, double threshold,
                                               QuoteConvention convention = QuoteConvention::Upper);

struct CorrectionResult {
  ExchangeMarket market;
  std::vector<std::string> warnings;
};

/// Gradient extraction by H = L_lower / N0, exponentiated back to rates.
CorrectionResult arbitrage_correct(const ExchangeMarket& market,
                                   QuoteConvention convention = QuoteConvention::Upper);

// ---------------------------------------------------------------------------
// Edge PageRank

enum class PageRankMethod { Exact, Grid, Cheb };

struct PageRankOptions {
  double gamma = 0.01;
  PageRankMethod method = PageRankMethod::Exact;
  std::size_t order = 61;   // Chebyshev order, or grid order
  std::size_t samples = 200;
};

struct PageRankResult {
  Index edge = 0;
  Eigen::VectorXd pi;
  double norm_total = 0.0;
  double norm_harmonic = 0.0;
  double norm_gradient = 0.0;
  double norm_curl = 0.0;
  double rel_harmonic() const { return norm_total > 0 ? norm_harmonic / norm_total : 0.0; }
  double rel_gradient() const { return norm_total > 0 ? norm_gradient / norm_total : 0.0; }
  double rel_curl() const { return norm_total > 0 ? norm_curl / norm_total : 0.0; }
};

/// Shared state for PageRank queries on one complex.
class EdgePageRank {
public:
  EdgePageRank(const SimplicialComplex& sc, const PageRankOptions& options);

  PageRankResult solve(Index edge) const;
  std::vector<PageRankResult> solve_all() const;

  const Eigen::MatrixXd& operator_matrix() const { return l1n_; }
  const HodgeSpectrum& subspaces() const { return subspaces_; }
  const std::optional<FilterCoefficients>& grid_filter() const { return grid_; }
  const std::optional<ChebyshevFilter>& chebyshev_filter() const { return cheb_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  double residual(const PageRankResult& r) const;

private:
  PageRankResult finish(Index edge, Eigen::VectorXd pi) const;

  PageRankOptions options_;
  std::size_t n1_ = 0;
  Eigen::MatrixXd l1n_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  EdgeShifts shifts_;
  HodgeSpectrum subspaces_;
  std::optional<FilterCoefficients> grid_;
  std::optional<ChebyshevFilter> cheb_;
  std::vector<std::string> warnings_;
};

/// PageRank response 1 / (gamma + lambda) on [0, 1] for both parts.
ResponseSpec pagerank_spec(double gamma);

PageRankResult edge_pagerank(const SimplicialComplex& sc, Index edge,
                             const PageRankOptions& options);

}  // namespace scf
