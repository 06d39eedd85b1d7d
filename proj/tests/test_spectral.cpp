#include "doctest.h"

#include <Eigen/Eigenvalues>

#include "scf/error.hpp"
#include "scf/fixtures.hpp"
#include "scf/spectral.hpp"
#include "support/oracles.hpp"

using namespace scf;
using Eigen::MatrixXd;
using Eigen::VectorXd;

TEST_CASE("Hodge Laplacians are PSD and their parts annihilate") {
  const auto k3 = build_complex(3, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}});
  const auto h = hodge_laplacian(k3, 1);
  CHECK(h.upper.diagonal().isApprox(VectorXd::Ones(3)));
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(h.upper);
  CHECK(es.eigenvalues()(0) == doctest::Approx(0.0));
  CHECK(es.eigenvalues()(1) == doctest::Approx(0.0));
  CHECK(es.eigenvalues()(2) == doctest::Approx(3.0));

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto sc = fixtures::random_clique_complex(25, 0.35, seed);
    const auto l = hodge_laplacian(sc, 1);
    CHECK(l.lower.isApprox(oracle::lower(sc)));
    CHECK(l.upper.isApprox(oracle::upper(sc)));
    CHECK((l.lower * l.upper).norm() <= 1e-10);
    CHECK((l.upper * l.lower).norm() <= 1e-10);
    for (int k = 0; k <= 2; ++k) {
      const auto lk = hodge_laplacian(sc, k);
      CHECK(lk.total.isApprox(lk.total.transpose()));
      if (lk.total.size() > 0) {
        CHECK(Eigen::SelfAdjointEigenSolver<MatrixXd>(lk.total).eigenvalues().minCoeff() >= -1e-9);
      }
    }
  }
  CHECK(hodge_laplacian(k3, 0).lower.isZero());
  CHECK(hodge_laplacian(k3, 2).upper.isZero());
}

TEST_CASE("normalized Hodge Laplacian") {
  const auto path = build_complex(3, {{0, 1}, {1, 2}}, {});
  const auto np = normalized_hodge_parts(path);
  CHECK(np.d2.isApprox(VectorXd::Ones(2)));
  CHECK(np.upper.isZero());

  const auto k3 = build_complex(3, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}});
  // Filled K3 has no harmonic flow: D1 = 4I, D2 = I gives B1^T B1 / 4 with
  // eigenvalues {0, 3/4, 3/4} and B2 B2^T / 3 with {0, 0, 1} on complementary spaces.
  Eigen::EigenSolver<MatrixXd> es(normalized_hodge_laplacian(k3));
  CHECK(es.eigenvalues().imag().cwiseAbs().maxCoeff() <= 1e-12);
  std::vector<double> k3ev{es.eigenvalues().real()(0), es.eigenvalues().real()(1), es.eigenvalues().real()(2)};
  std::sort(k3ev.begin(), k3ev.end());
  CHECK(k3ev[0] == doctest::Approx(0.75));
  CHECK(k3ev[1] == doctest::Approx(0.75));
  CHECK(k3ev[2] == doctest::Approx(1.0));

  const auto london = fixtures::road_network(fixtures::kLondonShape, 1);
  const auto parts = normalized_hodge_parts(london);
  const MatrixXd s = parts.symmetric_lower() + parts.symmetric_upper();
  CHECK(s.isApprox(s.transpose()));
  const VectorXd ev = Eigen::SelfAdjointEigenSolver<MatrixXd>(s).eigenvalues();
  CHECK(ev.minCoeff() >= -1e-10);
  CHECK(ev.maxCoeff() <= 1.0 + 1e-10);
  // The symmetrized parts are similar to the original ones.
  const VectorXd d = parts.d2.cwiseSqrt();
  CHECK((d.cwiseInverse().asDiagonal() * parts.lower * d.asDiagonal()).isApprox(parts.symmetric_lower()));
}

TEST_CASE("Hodge spectrum of the toy complex") {
  const auto sc = fixtures::toy_complex();
  const auto s = hodge_spectrum(sc);
  CHECK(s.harmonic_dim() == 1);
  CHECK(s.gradient_dim() == 6);
  CHECK(s.curl_dim() == 3);
  CHECK(s.lambda_max == doctest::Approx(5.488).epsilon(1e-3));
  CHECK(s.gradient_eigenvalues(0) == doctest::Approx(0.81).epsilon(0.01));
  CHECK(s.gradient_eigenvalues(5) == doctest::Approx(5.49).epsilon(0.001));
  CHECK(s.curl_eigenvalues(0) == doctest::Approx(2.0));
  CHECK(s.curl_eigenvalues(2) == doctest::Approx(4.0));

  const MatrixXd u = s.full_basis();
  CHECK((u.transpose() * u - MatrixXd::Identity(10, 10)).norm() <= 1e-8);
  const auto l = hodge_laplacian(sc, 1);
  for (Eigen::Index i = 0; i < s.gradient_dim(); ++i) {
    CHECK((l.lower * s.gradient.col(i) - s.gradient_eigenvalues(i) * s.gradient.col(i)).norm() <= 1e-8 * s.lambda_max);
    CHECK(divergence(sc, s.gradient.col(i)).squaredNorm() == doctest::Approx(s.gradient_eigenvalues(i)));
  }
  for (Eigen::Index i = 0; i < s.curl_dim(); ++i) {
    CHECK((l.upper * s.curl.col(i) - s.curl_eigenvalues(i) * s.curl.col(i)).norm() <= 1e-8 * s.lambda_max);
    CHECK(curl(sc, s.curl.col(i)).squaredNorm() == doctest::Approx(s.curl_eigenvalues(i)));
  }
  CHECK(divergence(sc, s.harmonic.col(0)).norm() <= 1e-10);
  CHECK(curl(sc, s.harmonic.col(0)).norm() <= 1e-10);
  CHECK((u * s.full_eigenvalues().asDiagonal() * u.transpose()).isApprox(l.total, 1e-10));

  const auto k3 = hodge_spectrum(build_complex(3, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}}));
  CHECK(k3.harmonic_dim() == 0);
  CHECK(k3.gradient_dim() == 2);
  CHECK(k3.curl_dim() == 1);
}

TEST_CASE("SFT and Hodge decomposition") {
  const auto sc = fixtures::toy_complex();
  const auto s = hodge_spectrum(sc);
  const auto e1 = sft(s, s.gradient.col(0));
  CHECK(e1.gradient(0) == doctest::Approx(1.0));
  CHECK(e1.gradient.tail(5).norm() <= 1e-12);
  CHECK(e1.curl.norm() <= 1e-12);

  const VectorXd flat = s.full_basis() * VectorXd::Ones(10);
  const auto e = sft(s, flat);
  CHECK((e.gradient - VectorXd::Ones(6)).norm() <= 1e-12);
  CHECK((e.curl - VectorXd::Ones(3)).norm() <= 1e-12);
  CHECK(e.harmonic(0) == doctest::Approx(1.0));
  CHECK((inverse_sft(s, e) - flat).norm() <= 1e-12);

  const MatrixXd b1 = oracle::b1(sc);
  const MatrixXd b2 = oracle::b2(sc);
  const VectorXd g = b1.transpose() * oracle::gaussian(7, 1);
  const auto hg = hodge_decompose(s, g);
  CHECK(hg.curl.norm() <= 1e-10);
  CHECK(hg.harmonic.norm() <= 1e-10);
  const VectorXd c = b2 * oracle::gaussian(3, 2);
  const auto hc = hodge_decompose(sc, c);
  CHECK(hc.gradient.norm() <= 1e-10);
  CHECK(hc.harmonic.norm() <= 1e-10);

  // Projector oracle: im(B1^T), im(B2), and the rest.
  const VectorXd f = oracle::gaussian(10, 3);
  const auto h = hodge_decompose(s, f);
  CHECK((h.gradient - oracle::range_projector(b1.transpose()) * f).norm() <= 1e-10);
  CHECK((h.curl - oracle::range_projector(b2) * f).norm() <= 1e-10);
  CHECK((h.gradient + h.curl + h.harmonic - f).norm() <= 1e-12);
  CHECK(std::abs(h.gradient.dot(h.curl)) <= 1e-8 * f.squaredNorm());
  CHECK(std::abs(h.gradient.dot(h.harmonic)) <= 1e-8 * f.squaredNorm());
}

TEST_CASE("distinct frequencies") {
  const auto q = distinct_values({1.0, 1.2, 2.0}, 0.3);
  REQUIRE(q.size() == 2);
  CHECK(q[0] == doctest::Approx(1.1));
  CHECK(q[1] == doctest::Approx(2.0));
  CHECK(distinct_values({}, 0.1).empty());

  const auto toy = distinct_frequencies(hodge_spectrum(fixtures::toy_complex()), 0.0);
  CHECK(toy.gradient.size() == 6);
  CHECK(toy.curl.size() == 3);

  const auto chicago = hodge_spectrum(fixtures::road_network(fixtures::kChicagoShape, 3));
  const auto d = distinct_frequencies(chicago, 0.3);
  const std::vector<double> g(chicago.gradient_eigenvalues.data(),
                              chicago.gradient_eigenvalues.data() + chicago.gradient_eigenvalues.size());
  const std::vector<double> c(chicago.curl_eigenvalues.data(),
                              chicago.curl_eigenvalues.data() + chicago.curl_eigenvalues.size());
  CHECK(d.gradient.size() == oracle::count_distinct(g, 0.3));
  CHECK(d.curl.size() == oracle::count_distinct(c, 0.3));
}
