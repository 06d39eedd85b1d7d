#include "doctest.h"

#include <Eigen/Eigenvalues>

#include "scf/apps.hpp"
#include "scf/design.hpp"
#include "scf/error.hpp"
#include "scf/fixtures.hpp"
#include "support/oracles.hpp"

using namespace scf;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

struct Toy {
  SimplicialComplex sc = fixtures::toy_complex();
  HodgeSpectrum s = hodge_spectrum(sc);
  DistinctFrequencies q = distinct_frequencies(s, 0.0);
  MatrixXd ll = oracle::lower(sc);
  MatrixXd lu = oracle::upper(sc);
  MatrixXd dense(const FilterCoefficients& h) const { return oracle::polynomial(ll, lu, h.h0, h.alpha, h.beta); }
};

ResponseSpec projector_spec(double g0, double gg, double gc, double lmax) {
  return ResponseSpec{g0, ResponseFunction::constant(gg, lmax), ResponseFunction::constant(gc, lmax)};
}

}  // namespace

TEST_CASE("response functions") {
  CHECK(ResponseFunction::constant(2.5, 1.0)(0.3) == 2.5);
  const auto st = ResponseFunction::step(1.0, 0.0, 1.0, 3.0);
  CHECK(st(0.5) == 0.0);
  CHECK(st(1.5) == 1.0);
  const auto lg = ResponseFunction::logistic(100.0, 0.01, 5.0);
  CHECK(lg(0.01) == doctest::Approx(0.5));
  CHECK(ResponseFunction::one_minus_logistic(100.0, 0.01, 5.0)(0.01) == doctest::Approx(0.5));
  CHECK(ResponseFunction::inverse_shift(0.01, 1.0)(0.99) == doctest::Approx(1.0));
  CHECK(ResponseFunction::inverse_shift(1.0, 5.0, 0.5)(2.0) == doctest::Approx(0.5));
  const auto tb = ResponseFunction::table({{0.0, 0.0}, {2.0, 1.0}});
  CHECK(tb(1.0) == doctest::Approx(0.5));
  CHECK(tb(3.0) == 1.0);
  CHECK(tb.lambda_max() == 2.0);
}

TEST_CASE("joint LS reproduces the gradient projector at full order") {
  Toy t;
  const auto targets = tabulate(projector_spec(0.0, 1.0, 0.0, t.s.lambda_max), t.q.gradient, t.q.curl);
  const auto d = ls_joint(t.q.gradient, t.q.curl, targets, 6, 3);
  CHECK(d.residual <= 1e-8);
  const MatrixXd pg = t.s.gradient * t.s.gradient.transpose();
  CHECK((t.dense(d.coefficients) - pg).norm() <= 1e-6);

  // Constant targets give a pure h0.
  const auto c = ls_joint(t.q.gradient, t.q.curl, tabulate(projector_spec(0.7, 0.7, 0.7, 6.0), t.q.gradient, t.q.curl), 3, 2);
  CHECK(c.coefficients.h0 == doctest::Approx(0.7));
  for (double a : c.coefficients.alpha) CHECK(std::abs(a) <= 1e-8);
  for (double b : c.coefficients.beta) CHECK(std::abs(b) <= 1e-8);
  CHECK(c.residual <= 1e-10);

  // Random targets at full order leave no residual.
  TabulatedTargets r{0.3, oracle::gaussian_vec(6, 1), oracle::gaussian_vec(3, 2)};
  CHECK(ls_joint(t.q.gradient, t.q.curl, r, 6, 3).residual <= 1e-8);
}

TEST_CASE("decoupled LS") {
  Toy t;
  TabulatedTargets r{0.3, oracle::gaussian_vec(6, 3), oracle::gaussian_vec(3, 4)};
  const auto j = ls_joint(t.q.gradient, t.q.curl, r, 6, 3);
  const auto d = ls_decoupled(t.q.gradient, t.q.curl, r, 6, 3);
  CHECK(std::abs(d.coefficients.h0 - j.coefficients.h0) <= 1e-8);
  for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(d.coefficients.alpha[i] - j.coefficients.alpha[i]) <= 1e-8);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(d.coefficients.beta[i] - j.coefficients.beta[i]) <= 1e-8);

  const auto c = ls_decoupled(t.q.gradient, t.q.curl, TabulatedTargets{2.0, std::vector<double>(6, 2.0), std::vector<double>(3, 2.0)}, 2, 2);
  CHECK(c.coefficients.h0 == 2.0);
  for (double a : c.coefficients.alpha) CHECK(std::abs(a) <= 1e-10);

  for (std::size_t l = 1; l < 6; ++l) {
    CHECK(ls_decoupled(t.q.gradient, t.q.curl, r, l, std::min<std::size_t>(l, 3)).residual >=
          ls_joint(t.q.gradient, t.q.curl, r, l, std::min<std::size_t>(l, 3)).residual - 1e-12);
  }
}

TEST_CASE("tied and one-sided LS") {
  Toy t;
  const auto targets = tabulate(projector_spec(0.0, 1.0, 0.0, t.s.lambda_max), t.q.gradient, t.q.curl);
  const auto tied = ls_tied(t.q.gradient, t.q.curl, targets, 4);
  CHECK(tied.coefficients.alpha == tied.coefficients.beta);
  CHECK(tied.residual > ls_joint(t.q.gradient, t.q.curl, targets, 4, 3).residual);

  const auto one = ls_one_sided(t.q.gradient, std::vector<double>(6, 1.0), 6, false);
  CHECK(one.coefficients.h0 == 0.0);
  CHECK(one.coefficients.beta.empty());
  const MatrixXd pg = t.s.gradient * t.s.gradient.transpose();
  CHECK((t.dense(one.coefficients) - pg).norm() <= 1e-6);
  const auto onec = ls_one_sided(t.q.curl, std::vector<double>(3, 1.0), 3, true);
  CHECK(onec.coefficients.alpha.empty());
  CHECK((t.dense(onec.coefficients) - t.s.curl * t.s.curl.transpose()).norm() <= 1e-6);
  CHECK_THROWS_AS(ls_one_sided(t.q.curl, std::vector<double>(2, 1.0), 3, true), Error);
}

TEST_CASE("power iteration") {
  CHECK(estimate_lambda_max(MatrixXd::Identity(4, 4), 3, 1) == doctest::Approx(1.0));
  MatrixXd d = MatrixXd::Zero(3, 3);
  d.diagonal() << 1, 2, 5;
  CHECK(estimate_lambda_max(d, 100, 1) == doctest::Approx(5.0).epsilon(1e-6));
  CHECK(estimate_lambda_max(MatrixXd::Zero(3, 3), 10, 1) == 0.0);
  Toy t;
  const MatrixXd l1 = t.ll + t.lu;
  CHECK(estimate_lambda_max(l1, 50, 1) == doctest::Approx(t.s.lambda_max).epsilon(0.01));
  CHECK(estimate_lambda_max(CsrMatrix::from_dense(l1), 50, 1) == doctest::Approx(estimate_lambda_max(l1, 50, 1)));
}

TEST_CASE("grid design") {
  const auto c = grid_design(projector_spec(1.5, 1.5, 1.5, 4.0), 10, 10, 3, 3, DesignMode::Joint);
  CHECK(c.coefficients.h0 == doctest::Approx(1.5));
  for (double a : c.coefficients.alpha) CHECK(std::abs(a) <= 1e-8);

  Toy t;
  const ResponseSpec spec = denoise_spec(Regularizer::HodgeLaplacian, 0.5, 5.488, 5.488);
  auto sup_err = [&](std::size_t order) {
    const auto d = grid_design(spec, 10, 10, order, order, DesignMode::Joint);
    double e = 0.0;
    for (Eigen::Index i = 0; i < t.s.gradient_dim(); ++i) {
      const double l = t.s.gradient_eigenvalues(i);
      e = std::max(e, std::abs(response_at(d.coefficients, l, FrequencyType::Gradient) - 1.0 / (1.0 + 0.5 * l)));
    }
    return e;
  };
  CHECK(sup_err(4) < sup_err(1));

  const auto pr = grid_design(pagerank_spec(0.01), 200, 200, 9, 9, DesignMode::Joint);
  for (double a : pr.coefficients.alpha) CHECK(std::isfinite(a));
  CHECK(std::isfinite(pr.residual));
}

TEST_CASE("Chebyshev coefficients and series") {
  const auto cc = chebyshev_coefficients(ResponseFunction::constant(3.0, 4.0), 2.0, 6, 256);
  CHECK(cc[0] == doctest::Approx(6.0));
  for (std::size_t l = 1; l < cc.size(); ++l) CHECK(std::abs(cc[l]) <= 1e-12);

  const auto lin = chebyshev_coefficients(ResponseFunction::table({{0.0, 0.0}, {4.0, 4.0}}), 2.0, 5, 512);
  CHECK(lin[0] == doctest::Approx(4.0));
  CHECK(lin[1] == doctest::Approx(2.0));
  for (std::size_t l = 2; l < lin.size(); ++l) CHECK(std::abs(lin[l]) <= 1e-10);
  CHECK(chebyshev_series(lin, 2.0, 1.3) == doctest::Approx(1.3));
  CHECK(ChebyshevFilter::identity_weight(lin) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("Chebyshev filters") {
  Toy t;
  const auto sc = t.sc;
  const VectorXd f = oracle::gaussian(10, 5);

  const ResponseSpec cs = projector_spec(2.0, 2.0, 2.0, 6.0);
  const auto cf = chebyshev_design(cs, 6.0, 6.0, 5, 5);
  CHECK((chebyshev_apply(cf, sc, f) - 2.0 * f).norm() <= 1e-10);
  for (double l : {0.0, 1.0, 4.5}) CHECK(chebyshev_response(cf, l, FrequencyType::Gradient) == doctest::Approx(2.0));
  CHECK(chebyshev_error_bound(cf, cs, 100).bound <= 1e-10);

  const ResponseSpec ds = denoise_spec(Regularizer::HodgeLaplacian, 0.5, 5.6, 4.2);
  for (std::size_t order : {1, 4, 10}) {
    const auto h = chebyshev_design(ds, 5.6, 4.2, order, order);
    const MatrixXd dense = oracle::chebyshev_matrix(t.ll, h.c_lower, h.omega_lower) +
                           oracle::chebyshev_matrix(t.lu, h.c_upper, h.omega_upper) -
                           h.g0 * MatrixXd::Identity(10, 10);
    CHECK((chebyshev_apply(h, sc, f) - dense * f).norm() <= 1e-9 * f.norm());
    const VectorXd uh = t.s.harmonic.col(0);
    CHECK((chebyshev_apply(h, sc, uh) - (h.p_lower() + h.p_upper() - h.g0) * uh).norm() <= 1e-10);
    CHECK(chebyshev_response(h, 0.0, FrequencyType::Harmonic) == doctest::Approx(h.p_lower() + h.p_upper() - h.g0));
    const VectorXd diag = (t.s.full_basis().transpose() * dense * t.s.full_basis()).diagonal();
    for (Eigen::Index i = 0; i < 6; ++i)
      CHECK(chebyshev_response(h, t.s.gradient_eigenvalues(i), FrequencyType::Gradient) == doctest::Approx(diag(1 + i)));
    for (Eigen::Index i = 0; i < 3; ++i)
      CHECK(chebyshev_response(h, t.s.curl_eigenvalues(i), FrequencyType::Curl) == doctest::Approx(diag(7 + i)));
  }
  const auto h10 = chebyshev_design(ds, 5.6, 4.2, 10, 10);
  CHECK(chebyshev_response(h10, 0.0, FrequencyType::Harmonic) == doctest::Approx(1.0).epsilon(1e-3));

  ResponseSpec mismatch = ds;
  mismatch.curl = ResponseFunction::constant(3.0, 4.0);
  CHECK_THROWS_AS(chebyshev_design(mismatch, 5.6, 4.2, 3, 3), Error);
}

TEST_CASE("Chebyshev error bound") {
  const auto sc = fixtures::road_network(fixtures::kLondonShape, 1);
  const auto lap = hodge_laplacian(sc, 1);
  const auto s = hodge_spectrum(sc);
  const double lmax = 1.01 * s.lambda_max;
  const auto g = ResponseFunction::logistic(100.0, 0.01, lmax);
  const ResponseSpec spec{g(0.0), g, g};
  double prev = 1e300;
  for (std::size_t order : {10, 20, 40, 80}) {
    const auto h = chebyshev_design(spec, lmax, lmax, order, order);
    const auto b = chebyshev_error_bound(h, spec, 400, &s, &lap);
    REQUIRE(b.operator_error.has_value());
    CHECK(*b.operator_error <= b.bound + 1e-3);
    CHECK(b.bound < prev);
    prev = b.bound;
  }
}
