#include "scf/apps.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Cholesky>

#include "scf/error.hpp"

namespace scf {

double nrmse(const Eigen::VectorXd& estimate, const Eigen::VectorXd& truth) {
  if (estimate.size() != truth.size()) {
    throw Error(ErrorCode::DimensionMismatch, "estimate and truth differ in length");
  }
  const double ref = truth.norm();
  if (ref == 0.0) throw Error(ErrorCode::ZeroReference, "truth has zero norm");
  return (estimate - truth).norm() / ref;
}

double chebyshev_domain(const CsrMatrix& m, int power_steps, std::uint64_t seed) {
  // Power iteration approaches lambda_max from below; pad so the top
  // eigenvalue stays inside the approximation interval.
  return 1.01 * estimate_lambda_max(m, power_steps, seed);
}

namespace {

Eigen::VectorXd project(const Eigen::MatrixXd& u, const Eigen::VectorXd& f) {
  return u * (u.transpose() * f);
}

Eigen::VectorXd spectral_component(const HodgeSpectrum& s, const Eigen::VectorXd& f,
                                   Component which) {
  switch (which) {
    case Component::Harmonic: return project(s.harmonic, f);
    case Component::Gradient: return project(s.gradient, f);
    case Component::Curl: return project(s.curl, f);
  }
  return f;
}

double indicator(Component which, Component block) { return which == block ? 1.0 : 0.0; }

}  // namespace

ExtractionResult extract_component(const SimplicialComplex& sc, const HodgeSpectrum& spectrum,
                                   const Eigen::VectorXd& flow, Component which,
                                   const ExtractionOptions& opt) {
  if (static_cast<std::size_t>(flow.size()) != sc.edge_count() ||
      spectrum.size() != flow.size()) {
    throw Error(ErrorCode::DimensionMismatch, "flow length does not match the complex");
  }
  ExtractionResult res;
  const Eigen::VectorXd reference = spectral_component(spectrum, flow, which);

  switch (opt.method) {
    case ExtractionMethod::Spectral: res.flow = reference; break;

    case ExtractionMethod::FilterLs: {
      const DistinctFrequencies q = distinct_frequencies(spectrum, opt.group_tol);
      TabulatedTargets t;
      t.g0 = indicator(which, Component::Harmonic);
      t.gradient.assign(q.gradient.size(), indicator(which, Component::Gradient));
      t.curl.assign(q.curl.size(), indicator(which, Component::Curl));
      const std::size_t l1 = opt.order_lower > 0 ? opt.order_lower : q.gradient.size();
      const std::size_t l2 = opt.order_upper > 0 ? opt.order_upper : q.curl.size();
      DesignResult d;
      if (opt.tied) {
        d = ls_tied(q.gradient, q.curl, t, opt.order_lower > 0 ? opt.order_lower : std::max(l1, l2));
      } else if (opt.mode == DesignMode::Joint) {
        d = ls_joint(q.gradient, q.curl, t, l1, l2);
      } else {
        d = ls_decoupled(q.gradient, q.curl, t, l1, l2);
      }
      res.flow = apply(sc, d.coefficients, flow);
      res.coefficients = d.coefficients;
      res.warnings = d.warnings;
      break;
    }

    case ExtractionMethod::FilterOneSided: {
      if (which == Component::Harmonic) {
        throw Error(ErrorCode::UnsupportedCombination,
                    "one-sided design cannot extract the harmonic component");
      }
      const DistinctFrequencies q = distinct_frequencies(spectrum, opt.group_tol);
      const bool is_curl = which == Component::Curl;
      const std::vector<double>& freqs = is_curl ? q.curl : q.gradient;
      if (freqs.empty()) {
        res.flow = Eigen::VectorXd::Zero(flow.size());
        res.coefficients = FilterCoefficients{};
        break;
      }
      std::size_t order = is_curl ? opt.order_upper : opt.order_lower;
      if (order == 0) order = freqs.size();
      const DesignResult d =
          ls_one_sided(freqs, std::vector<double>(freqs.size(), 1.0), order, is_curl);
      res.flow = apply(sc, d.coefficients, flow);
      res.coefficients = d.coefficients;
      res.warnings = d.warnings;
      break;
    }

    case ExtractionMethod::FilterCheb: {
      const EdgeShifts shifts = EdgeShifts::combinatorial(sc);
      const double lmax_l = chebyshev_domain(shifts.lower, opt.power_steps, opt.seed);
      const double lmax_u = chebyshev_domain(shifts.upper, opt.power_steps, opt.seed + 1);
      ResponseSpec spec;
      const auto up = ResponseFunction::logistic(opt.logistic_k, opt.logistic_lambda0, lmax_l);
      if (which == Component::Gradient) {
        spec.g0 = up(0.0);
        if (lmax_l > 0.0) spec.gradient = up;
      } else if (which == Component::Curl) {
        const auto upc = ResponseFunction::logistic(opt.logistic_k, opt.logistic_lambda0, lmax_u);
        spec.g0 = upc(0.0);
        if (lmax_u > 0.0) spec.curl = upc;
      } else {
        const auto dl = ResponseFunction::one_minus_logistic(opt.logistic_k, opt.logistic_lambda0, lmax_l);
        const auto du = ResponseFunction::one_minus_logistic(opt.logistic_k, opt.logistic_lambda0, lmax_u);
        spec.g0 = dl(0.0);
        if (lmax_l > 0.0) spec.gradient = dl;
        if (lmax_u > 0.0) spec.curl = du;
      }
      if (!spec.gradient && !spec.curl) {
        // No shift has a nonzero spectrum: every flow is harmonic.
        res.flow = which == Component::Harmonic ? flow : Eigen::VectorXd::Zero(flow.size());
        break;
      }
      const ChebyshevFilter f =
          chebyshev_design(spec, lmax_l, lmax_u, opt.cheb_order, opt.cheb_order);
      res.flow = chebyshev_apply(f, shifts, flow);
      res.chebyshev = f;
      break;
    }
  }
  // With a zero reference the relative error is undefined; report the
  // absolute error instead.
  const double ref = reference.norm();
  res.nrmse = ref > 0.0 ? (res.flow - reference).norm() / ref : res.flow.norm();
  return res;
}

ResponseSpec denoise_spec(Regularizer regularizer, double mu, double lambda_max_lower,
                          double lambda_max_upper) {
  ResponseSpec spec;
  spec.g0 = 1.0;
  spec.gradient = ResponseFunction::inverse_shift(1.0, lambda_max_lower, mu).set_domain(0.0, lambda_max_lower);
  if (regularizer == Regularizer::HodgeLaplacian) {
    spec.curl = ResponseFunction::inverse_shift(1.0, lambda_max_upper, mu).set_domain(0.0, lambda_max_upper);
  } else {
    spec.curl = ResponseFunction::constant(1.0, lambda_max_upper).set_domain(0.0, lambda_max_upper);
  }
  return spec;
}

Eigen::VectorXd denoise(const SimplicialComplex& sc, const Eigen::VectorXd& noisy,
                        const DenoiseOptions& opt) {
  if (static_cast<std::size_t>(noisy.size()) != sc.edge_count()) {
    throw Error(ErrorCode::DimensionMismatch, "flow length does not match the complex");
  }
  if (!(opt.mu > 0.0)) throw Error(ErrorCode::InvalidArgument, "mu must be > 0");

  if (opt.method == DenoiseMethod::Exact) {
    const HodgeLaplacians l = hodge_laplacian(sc, 1);
    const Eigen::MatrixXd& p = opt.regularizer == Regularizer::HodgeLaplacian ? l.total : l.lower;
    const Eigen::Index n = p.rows();
    Eigen::LLT<Eigen::MatrixXd> llt(Eigen::MatrixXd::Identity(n, n) + opt.mu * p);
    if (llt.info() != Eigen::Success) {
      throw Error(ErrorCode::SingularSystem, "I + mu P is not positive definite");
    }
    return llt.solve(noisy);
  }

  const EdgeShifts shifts = EdgeShifts::combinatorial(sc);
  const double lmax_l = chebyshev_domain(shifts.lower, opt.power_steps, opt.seed);
  const double lmax_u = chebyshev_domain(shifts.upper, opt.power_steps, opt.seed + 1);
  ResponseSpec spec = denoise_spec(opt.regularizer, opt.mu, lmax_l, lmax_u);
  if (lmax_l <= 0.0) spec.gradient.reset();
  if (lmax_u <= 0.0) spec.curl.reset();
  if (!spec.gradient && !spec.curl) return noisy;

  if (opt.method == DenoiseMethod::Grid) {
    const DesignResult d =
        grid_design(spec, opt.samples, opt.samples, opt.order, opt.order, DesignMode::Joint);
    return apply(shifts, d.coefficients, noisy);
  }
  const ChebyshevFilter f = chebyshev_design(spec, lmax_l, lmax_u, opt.order, opt.order);
  return chebyshev_apply(f, shifts, noisy);
}

// ---------------------------------------------------------------------------

MarketFlow market_flow(const ExchangeMarket& market, QuoteConvention convention) {
  const auto n = static_cast<std::size_t>(market.rate.rows());
  if (market.rate.cols() != market.rate.rows() || market.currencies.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "rate matrix must be square and match the currency list");
  }
  auto quoted = [&](std::size_t i, std::size_t j) {
    const double r = market.rate(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    if (std::isnan(r)) return false;
    if (!(r > 0.0)) {
      throw Error(ErrorCode::NonPositiveRate, market.currencies[i] + "->" + market.currencies[j] +
                                                  " rate must be positive");
    }
    return true;
  };

  MarketFlow mf;
  std::vector<Edge> edges;
  std::vector<double> values;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool fwd = quoted(i, j);
      const bool bwd = quoted(j, i);
      if (!fwd || !bwd) mf.complete = false;
      if (!fwd && !bwd) continue;
      const double lf = fwd ? std::log(market.rate(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) : 0.0;
      const double lb = bwd ? std::log(market.rate(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i))) : 0.0;
      double v = 0.0;
      if (convention == QuoteConvention::Upper) {
        v = fwd ? lf : -lb;
      } else {
        v = fwd && bwd ? 0.5 * (lf - lb) : (fwd ? lf : -lb);
      }
      edges.push_back({i, j});
      values.push_back(v);
    }
  }
  std::vector<Triangle> tris = infer_triangles(n, edges);
  mf.sc = build_complex(n, edges, std::move(tris));
  // build_complex keeps lexicographic order, which is the order generated above.
  mf.flow = Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
  return mf;
}

std::vector<ArbitrageTriangle> arbitrage_check(const ExchangeMarket& market, double threshold,
                                               QuoteConvention convention) {
  const MarketFlow mf = market_flow(market, convention);
  const Eigen::VectorXd c = curl(mf.sc, mf.flow);
  std::vector<ArbitrageTriangle> out;
  for (Index t = 0; t < mf.sc.triangle_count(); ++t) {
    ArbitrageTriangle a;
    a.currencies = mf.sc.triangles()[t];
    a.curl = c[static_cast<Eigen::Index>(t)];
    a.roundtrip = std::exp(std::abs(a.curl));
    a.gain = a.roundtrip - 1.0;
    if (a.gain > threshold) out.push_back(a);
  }
  return out;
}

CorrectionResult arbitrage_correct(const ExchangeMarket& market, QuoteConvention convention) {
  const MarketFlow mf = market_flow(market, convention);
  CorrectionResult res;
  Eigen::VectorXd fixed;
  if (mf.complete) {
    FilterCoefficients h;
    h.alpha = {1.0 / static_cast<double>(market.currencies.size())};
    fixed = apply(mf.sc, h, mf.flow);
  } else {
    res.warnings.push_back(
        "IncompleteMarket: missing quotes, using the spectral gradient projector");
    fixed = hodge_decompose(mf.sc, mf.flow).gradient;
  }
  const auto n = market.rate.rows();
  res.market.currencies = market.currencies;
  res.market.rate = Eigen::MatrixXd::Constant(n, n, std::numeric_limits<double>::quiet_NaN());
  res.market.rate.diagonal().setOnes();
  for (Index e = 0; e < mf.sc.edge_count(); ++e) {
    const auto [i, j] = mf.sc.edges()[e];
    const double r = std::exp(fixed[static_cast<Eigen::Index>(e)]);
    res.market.rate(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = r;
    res.market.rate(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = 1.0 / r;
  }
  return res;
}

}  // namespace scf
