// Independent reference computations for the tests. Nothing here calls into
// the library beyond reading simplex lists from a complex.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "scf/complex.hpp"

namespace oracle {

using Eigen::MatrixXd;
using Eigen::VectorXd;

inline std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_map(const scf::SimplicialComplex& sc) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> m;
  const auto e = sc.edges();
  for (std::size_t i = 0; i < e.size(); ++i) m[{e[i][0], e[i][1]}] = i;
  return m;
}

// B1 from the definition: an edge [u, v] has boundary v - u, times its sign.
inline MatrixXd b1(const scf::SimplicialComplex& sc) {
  MatrixXd b = MatrixXd::Zero(sc.vertex_count(), sc.edge_count());
  const auto e = sc.edges();
  const auto s = sc.edge_signs();
  for (std::size_t i = 0; i < e.size(); ++i) {
    b(e[i][0], i) -= s[i];
    b(e[i][1], i) += s[i];
  }
  return b;
}

// B2 from the definition: [a, b, c] has boundary [b, c] - [a, c] + [a, b].
inline MatrixXd b2(const scf::SimplicialComplex& sc) {
  const auto em = edge_map(sc);
  const auto es = sc.edge_signs();
  MatrixXd b = MatrixXd::Zero(sc.edge_count(), sc.triangle_count());
  const auto t = sc.triangles();
  const auto ts = sc.triangle_signs();
  for (std::size_t j = 0; j < t.size(); ++j) {
    const auto [a, bb, c] = t[j];
    const std::size_t ab = em.at({a, bb}), ac = em.at({a, c}), bc = em.at({bb, c});
    b(bc, j) += ts[j] * es[bc];
    b(ac, j) -= ts[j] * es[ac];
    b(ab, j) += ts[j] * es[ab];
  }
  return b;
}

inline MatrixXd lower(const scf::SimplicialComplex& sc) {
  const MatrixXd b = b1(sc);
  return b.transpose() * b;
}

inline MatrixXd upper(const scf::SimplicialComplex& sc) {
  const MatrixXd b = b2(sc);
  return b * b.transpose();
}

// Matrix polynomial with explicit powers.
inline MatrixXd polynomial(const MatrixXd& ll, const MatrixXd& lu, double h0,
                           const std::vector<double>& alpha, const std::vector<double>& beta) {
  const auto n = ll.rows();
  MatrixXd h = h0 * MatrixXd::Identity(n, n);
  MatrixXd p = MatrixXd::Identity(n, n);
  for (double a : alpha) {
    p = p * ll;
    h += a * p;
  }
  p.setIdentity();
  for (double b : beta) {
    p = p * lu;
    h += b * p;
  }
  return h;
}

// 0.5 c0 I + sum c_l T_l(L / omega - I), with T_l from cos(l acos x) on the
// eigenvalues of the symmetric matrix L.
inline MatrixXd chebyshev_matrix(const MatrixXd& l, const std::vector<double>& c, double omega) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(l);
  VectorXd d(l.rows());
  for (Eigen::Index i = 0; i < l.rows(); ++i) {
    const double x = std::clamp(es.eigenvalues()(i) / omega - 1.0, -1.0, 1.0);
    double s = 0.5 * c[0];
    for (std::size_t k = 1; k < c.size(); ++k) s += c[k] * std::cos(static_cast<double>(k) * std::acos(x));
    d(i) = s;
  }
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

// All 3-cliques by triple loop.
inline std::vector<scf::Triangle> cliques(std::size_t n, const std::vector<scf::Edge>& edges) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : edges) adj[e[0]][e[1]] = adj[e[1]][e[0]] = true;
  std::vector<scf::Triangle> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (adj[a][b] && adj[a][c] && adj[b][c]) out.push_back({a, b, c});
  return out;
}

// Distinct values by comparing every pair against a tolerance (O(n^2)).
inline std::size_t count_distinct(std::vector<double> v, double tol) {
  std::sort(v.begin(), v.end());
  std::size_t groups = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i == 0 || std::abs(v[i] - v[i - 1]) > tol) ++groups;
  }
  return groups;
}

// Orthogonal projector onto the column space of m via SVD.
inline MatrixXd range_projector(const MatrixXd& m, double rel_tol = 1e-9) {
  if (m.cols() == 0) return MatrixXd::Zero(m.rows(), m.rows());
  Eigen::JacobiSVD<MatrixXd> svd(m, Eigen::ComputeThinU);
  const double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  Eigen::Index r = 0;
  while (r < svd.singularValues().size() && svd.singularValues()(r) > rel_tol * std::max(smax, 1.0)) ++r;
  const MatrixXd u = svd.matrixU().leftCols(r);
  return u * u.transpose();
}

inline VectorXd gaussian(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::normal_distribution<double> d;
  VectorXd v(n);
  for (auto& x : v) x = d(g);
  return v;
}

inline std::vector<double> gaussian_vec(std::size_t n, std::uint64_t seed) {
  const VectorXd v = gaussian(n, seed);
  return {v.data(), v.data() + v.size()};
}

inline double rel(const VectorXd& a, const VectorXd& b) {
  return (a - b).norm() / std::max(b.norm(), 1e-300);
}

}  // namespace oracle
