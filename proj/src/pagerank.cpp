#include <string>

#include "scf/apps.hpp"
#include "scf/error.hpp"

namespace scf {

ResponseSpec pagerank_spec(double gamma) {
  ResponseSpec spec;
  spec.g0 = 1.0 / gamma;
  spec.gradient = ResponseFunction::inverse_shift(gamma, 1.0).set_domain(0.0, 1.0);
  spec.curl = ResponseFunction::inverse_shift(gamma, 1.0).set_domain(0.0, 1.0);
  return spec;
}

EdgePageRank::EdgePageRank(const SimplicialComplex& sc, const PageRankOptions& options)
    : options_(options), n1_(sc.edge_count()) {
  if (!(options.gamma > 0.0)) throw Error(ErrorCode::InvalidArgument, "gamma must be > 0");
  const NormalizedHodgeParts parts = normalized_hodge_parts(sc);
  l1n_ = parts.total();
  subspaces_ = hodge_spectrum(parts.symmetric_lower(), parts.symmetric_upper());

  switch (options.method) {
    case PageRankMethod::Exact: {
      const auto n = static_cast<Eigen::Index>(n1_);
      lu_.compute(options.gamma * Eigen::MatrixXd::Identity(n, n) + l1n_);
      break;
    }
    case PageRankMethod::Grid: {
      shifts_ = EdgeShifts::from_dense(parts.lower, parts.upper);
      DesignResult d = grid_design(pagerank_spec(options.gamma), options.samples, options.samples,
                                   options.order, options.order, DesignMode::Joint);
      grid_ = d.coefficients;
      warnings_ = std::move(d.warnings);
      break;
    }
    case PageRankMethod::Cheb:
      shifts_ = EdgeShifts::from_dense(parts.lower, parts.upper);
      // Both parts of the normalized operator have spectrum in [0, 1].
      cheb_ = chebyshev_design(pagerank_spec(options.gamma), 1.0, 1.0, options.order, options.order);
      break;
  }
}

PageRankResult EdgePageRank::finish(Index edge, Eigen::VectorXd pi) const {
  PageRankResult r;
  r.edge = edge;
  r.norm_total = pi.norm();
  r.norm_harmonic = (subspaces_.harmonic.transpose() * pi).norm();
  r.norm_gradient = (subspaces_.gradient.transpose() * pi).norm();
  r.norm_curl = (subspaces_.curl.transpose() * pi).norm();
  r.pi = std::move(pi);
  return r;
}

PageRankResult EdgePageRank::solve(Index edge) const {
  if (edge >= n1_) {
    throw Error(ErrorCode::IndexOutOfRange, "edge " + std::to_string(edge) + " outside [0, " +
                                                std::to_string(n1_) + ")");
  }
  Eigen::VectorXd f = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n1_));
  f[static_cast<Eigen::Index>(edge)] = 1.0;
  switch (options_.method) {
    case PageRankMethod::Exact: return finish(edge, lu_.solve(f));
    case PageRankMethod::Grid: return finish(edge, apply(shifts_, *grid_, f));
    case PageRankMethod::Cheb: return finish(edge, chebyshev_apply(*cheb_, shifts_, f));
  }
  return {};
}

std::vector<PageRankResult> EdgePageRank::solve_all() const {
  std::vector<PageRankResult> out;
  out.reserve(n1_);
  if (options_.method == PageRankMethod::Exact) {
    const auto n = static_cast<Eigen::Index>(n1_);
    const Eigen::MatrixXd inv = lu_.solve(Eigen::MatrixXd::Identity(n, n));
    for (Index e = 0; e < n1_; ++e) out.push_back(finish(e, inv.col(static_cast<Eigen::Index>(e))));
    return out;
  }
  for (Index e = 0; e < n1_; ++e) out.push_back(solve(e));
  return out;
}

double EdgePageRank::residual(const PageRankResult& r) const {
  Eigen::VectorXd f = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n1_));
  f[static_cast<Eigen::Index>(r.edge)] = 1.0;
  return (options_.gamma * r.pi + l1n_ * r.pi - f).norm();
}

PageRankResult edge_pagerank(const SimplicialComplex& sc, Index edge,
                             const PageRankOptions& options) {
  return EdgePageRank(sc, options).solve(edge);
}

}  // namespace scf
