#include "doctest.h"

#include <Eigen/Cholesky>

#include "scf/apps.hpp"
#include "scf/error.hpp"
#include "scf/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/tables.hpp"

using namespace scf;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

ExchangeMarket consistent_market(std::size_t n, std::uint64_t seed) {
  ExchangeMarket m;
  const VectorXd p = oracle::gaussian(n, seed).array().exp();
  m.rate.resize(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.currencies.push_back("C" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) m.rate(i, j) = p(i) / p(j);
  }
  return m;
}

}  // namespace

TEST_CASE("nrmse") {
  const VectorXd t = oracle::gaussian(5, 1);
  CHECK(nrmse(t, t) == 0.0);
  CHECK(nrmse(VectorXd::Zero(5), t) == doctest::Approx(1.0));
  CHECK(nrmse(2.0 * t, t) == doctest::Approx(1.0));
  CHECK_THROWS_AS(nrmse(t, VectorXd::Zero(5)), Error);
}

TEST_CASE("component extraction") {
  const auto sc = fixtures::toy_complex();
  const auto s = hodge_spectrum(sc);
  const VectorXd flat = s.full_basis() * VectorXd::Ones(10);

  ExtractionOptions one;
  one.method = ExtractionMethod::FilterOneSided;
  const auto r = extract_component(sc, s, flat, Component::Gradient, one);
  CHECK(nrmse(r.flow, s.gradient * VectorXd::Ones(6)) <= 1e-6);

  ExtractionOptions spectral;
  const VectorXd pure_curl = s.curl * VectorXd::Ones(3);
  CHECK(extract_component(sc, s, pure_curl, Component::Gradient, one).flow.norm() <= 1e-8);
  const VectorXd f = oracle::gaussian(10, 4);
  const VectorXd sum = extract_component(sc, s, f, Component::Gradient, spectral).flow +
                       extract_component(sc, s, f, Component::Curl, spectral).flow +
                       extract_component(sc, s, f, Component::Harmonic, spectral).flow;
  CHECK((sum - f).norm() <= 1e-8 * f.norm());

  ExtractionOptions tied;
  tied.method = ExtractionMethod::FilterLs;
  tied.tied = true;
  tied.order_lower = tied.order_upper = 4;
  ExtractionOptions untied = tied;
  untied.tied = false;
  CHECK(extract_component(sc, s, flat, Component::Gradient, tied).nrmse >
        extract_component(sc, s, flat, Component::Gradient, untied).nrmse);

  ExtractionOptions full;
  full.method = ExtractionMethod::FilterLs;
  for (auto c : {Component::Gradient, Component::Curl, Component::Harmonic}) {
    CHECK(extract_component(sc, s, flat, c, full).nrmse <= 1e-6);
  }

  ExtractionOptions cheb;
  cheb.method = ExtractionMethod::FilterCheb;
  cheb.cheb_order = 20;
  const auto c20 = extract_component(sc, s, flat, Component::Gradient, cheb);
  CHECK(c20.chebyshev.has_value());
  cheb.cheb_order = 80;
  const auto c80 = extract_component(sc, s, flat, Component::Gradient, cheb);
  CHECK(c80.nrmse < c20.nrmse);
}

TEST_CASE("denoising") {
  const auto sc = fixtures::toy_complex();
  const auto s = hodge_spectrum(sc);
  DenoiseOptions exact;
  const VectorXd uh = s.harmonic.col(0);
  CHECK((denoise(sc, uh, exact) - uh).norm() <= 1e-12);

  const VectorXd f = oracle::gaussian(10, 8);
  const VectorXd y = denoise(sc, f, exact);
  const MatrixXd l1 = oracle::lower(sc) + oracle::upper(sc);
  CHECK(((MatrixXd::Identity(10, 10) + 0.5 * l1) * y - f).norm() <= 1e-10);
  CHECK((s.harmonic.transpose() * (y - f)).norm() <= 1e-10);

  DenoiseOptions edge;
  edge.regularizer = Regularizer::EdgeLaplacian;
  const VectorXd ye = denoise(sc, f, edge);
  CHECK(((MatrixXd::Identity(10, 10) + 0.5 * oracle::lower(sc)) * ye - f).norm() <= 1e-10);

  auto grid_err = [&](std::size_t order) {
    DenoiseOptions g;
    g.method = DenoiseMethod::Grid;
    g.order = order;
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      VectorXd e = VectorXd::Zero(10);
      e(i) = 1.0;
      worst = std::max(worst, (denoise(sc, e, g) - denoise(sc, e, exact)).norm());
    }
    return worst;
  };
  CHECK(grid_err(4) < grid_err(1));

  DenoiseOptions cheb;
  cheb.method = DenoiseMethod::Cheb;
  cheb.order = 30;
  CHECK(oracle::rel(denoise(sc, f, cheb), y) <= 1e-3);
  DenoiseOptions bad;
  bad.mu = 0.0;
  CHECK_THROWS_AS(denoise(sc, f, bad), Error);
}

TEST_CASE("arbitrage") {
  const auto cm = consistent_market(5, 3);
  CHECK(arbitrage_check(cm, 1e-12).empty());
  const auto same = arbitrage_correct(cm);
  CHECK((same.market.rate - cm.rate).cwiseAbs().maxCoeff() <= 1e-10 * cm.rate.cwiseAbs().maxCoeff());

  // Perturbing one quote flags exactly the triangles through that pair.
  ExchangeMarket p = cm;
  p.rate(1, 3) *= 1.01;
  p.rate(3, 1) /= 1.01;
  const auto flagged = arbitrage_check(p, 0.005);
  CHECK(flagged.size() == 3);
  for (const auto& t : flagged) {
    const bool has1 = std::count(t.currencies.begin(), t.currencies.end(), 1) == 1;
    const bool has3 = std::count(t.currencies.begin(), t.currencies.end(), 3) == 1;
    CHECK((has1 && has3));
  }

  const auto m = fixtures::seven_currency_market();
  const auto hits = arbitrage_check(m, 0.003);
  bool found = false;
  for (const auto& t : hits) {
    if (t.currencies == Triangle{0, 5, 6}) {
      found = true;
      CHECK(t.roundtrip == doctest::Approx(1.0041).epsilon(5e-4));
    }
  }
  CHECK(found);

  const auto fixed = arbitrage_correct(m);
  CHECK(arbitrage_check(fixed.market, 1e-9).empty());
  CHECK(std::abs(fixed.market.rate(0, 5) - 110.0171) <= 0.005);
  CHECK((fixed.market.rate - tables::corrected_market()).cwiseAbs().maxCoeff() <= 0.005);
  const auto twice = arbitrage_correct(fixed.market);
  CHECK((twice.market.rate - fixed.market.rate).cwiseAbs().maxCoeff() <= 1e-10 * 200);

  // Projector oracle on the complete graph.
  const auto mf = market_flow(m, QuoteConvention::Upper);
  const MatrixXd b1 = oracle::b1(mf.sc);
  const VectorXd g = oracle::range_projector(b1.transpose()) * mf.flow;
  const auto mf2 = market_flow(fixed.market, QuoteConvention::Upper);
  CHECK((mf2.flow - g).norm() <= 1e-10 * g.norm());

  ExchangeMarket bad = m;
  bad.rate(0, 1) = -1.0;
  CHECK_THROWS_AS(arbitrage_check(bad, 0.003), Error);

  ExchangeMarket missing = m;
  missing.rate(0, 1) = missing.rate(1, 0) = std::nan("");
  const auto partial = arbitrage_correct(missing);
  CHECK_FALSE(partial.warnings.empty());
}

TEST_CASE("edge PageRank") {
  const auto sc = fixtures::road_network(fixtures::kLondonShape, 1);
  const EdgePageRank exact(sc, PageRankOptions{});
  const auto r = exact.solve(7);
  CHECK(exact.residual(r) <= 1e-8);
  CHECK(r.norm_total * r.norm_total ==
        doctest::Approx(r.norm_harmonic * r.norm_harmonic + r.norm_gradient * r.norm_gradient +
                        r.norm_curl * r.norm_curl).epsilon(1e-8));
  CHECK_THROWS_AS(exact.solve(sc.edge_count()), Error);

  PageRankOptions big;
  big.gamma = 1e6;
  const auto rb = edge_pagerank(sc, 3, big);
  CHECK(rb.norm_total == doctest::Approx(1e-6).epsilon(1e-5));
  CHECK(rb.pi(3) == doctest::Approx(1e-6).epsilon(1e-5));

  PageRankOptions cheb;
  cheb.method = PageRankMethod::Cheb;
  PageRankOptions grid;
  grid.method = PageRankMethod::Grid;
  grid.order = 9;
  const EdgePageRank pc(sc, cheb), pg(sc, grid);
  for (Index e : {0, 17, 64, 129}) {
    const VectorXd x = exact.solve(e).pi;
    const double ec = oracle::rel(pc.solve(e).pi, x);
    CHECK(ec <= 1e-3);
    CHECK(oracle::rel(pg.solve(e).pi, x) > ec);
  }
}
