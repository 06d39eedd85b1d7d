#include "scf/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "scf/error.hpp"

namespace scf {

namespace {

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigh(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::EigenFailure, "symmetric eigensolver did not converge");
  }
  return es;
}

// Largest-magnitude entry of every column made positive.
void fix_signs(Eigen::MatrixXd& u) {
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    Eigen::Index arg = 0;
    u.col(j).cwiseAbs().maxCoeff(&arg);
    if (u(arg, j) < 0) u.col(j) = -u.col(j);
  }
}

void select_columns(const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& es, double tol,
                    bool above, Eigen::MatrixXd& basis, Eigen::VectorXd* values) {
  const Eigen::VectorXd& lam = es.eigenvalues();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if ((lam[i] > tol) == above) keep.push_back(i);
  }
  basis.resize(es.eigenvectors().rows(), static_cast<Eigen::Index>(keep.size()));
  if (values != nullptr) values->resize(static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    basis.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(keep[c]);
    if (values != nullptr) (*values)[static_cast<Eigen::Index>(c)] = lam[keep[c]];
  }
  fix_signs(basis);
}

void check_length(const HodgeSpectrum& s, const Eigen::VectorXd& flow) {
  if (flow.size() != s.size()) {
    throw Error(ErrorCode::DimensionMismatch, "flow has length " + std::to_string(flow.size()) +
                                                  ", expected " + std::to_string(s.size()));
  }
}

void check_length(const SimplicialComplex& sc, const Eigen::VectorXd& flow) {
  if (static_cast<std::size_t>(flow.size()) != sc.edge_count()) {
    throw Error(ErrorCode::DimensionMismatch, "flow has length " + std::to_string(flow.size()) +
                                                  ", expected " +
                                                  std::to_string(sc.edge_count()));
  }
}

}  // namespace

HodgeLaplacians hodge_laplacian(const SimplicialComplex& sc, int k) {
  HodgeLaplacians l;
  l.order = k;
  switch (k) {
    case 0: {
      const Eigen::MatrixXd b1 = to_dense(incidence_matrix(sc, 1));
      l.upper = b1 * b1.transpose();
      l.lower = Eigen::MatrixXd::Zero(l.upper.rows(), l.upper.cols());
      break;
    }
    case 1: {
      const Eigen::MatrixXd b1 = to_dense(incidence_matrix(sc, 1));
      const Eigen::MatrixXd b2 = to_dense(incidence_matrix(sc, 2));
      l.lower = b1.transpose() * b1;
      l.upper = b2 * b2.transpose();
      break;
    }
    case 2: {
      const Eigen::MatrixXd b2 = to_dense(incidence_matrix(sc, 2));
      l.lower = b2.transpose() * b2;
      l.upper = Eigen::MatrixXd::Zero(l.lower.rows(), l.lower.cols());
      break;
    }
    default:
      throw Error(ErrorCode::UnsupportedOrder, "Hodge Laplacian of order " + std::to_string(k));
  }
  l.total = l.lower + l.upper;
  return l;
}

NormalizedHodgeParts normalized_hodge_parts(const SimplicialComplex& sc) {
  const Eigen::MatrixXd b1 = to_dense(incidence_matrix(sc, 1));
  const Eigen::MatrixXd b2 = to_dense(incidence_matrix(sc, 2));
  const Eigen::Index n1 = b1.cols();

  NormalizedHodgeParts p;
  p.d2 = b2.cwiseAbs().rowwise().sum().cwiseMax(1.0);
  const Eigen::VectorXd d1 = 2.0 * (b1.cwiseAbs() * p.d2);
  const Eigen::VectorXd d1_inv =
      d1.unaryExpr([](double v) { return v > 0.0 ? 1.0 / v : 0.0; });

  p.lower = p.d2.asDiagonal() * b1.transpose() * d1_inv.asDiagonal() * b1;
  if (b2.cols() > 0) {
    p.upper = (b2 / 3.0) * b2.transpose() * p.d2.cwiseInverse().asDiagonal();
  } else {
    p.upper = Eigen::MatrixXd::Zero(n1, n1);
  }
  return p;
}

Eigen::MatrixXd normalized_hodge_laplacian(const SimplicialComplex& sc) {
  return normalized_hodge_parts(sc).total();
}

Eigen::MatrixXd NormalizedHodgeParts::symmetric_lower() const {
  const Eigen::VectorXd s = d2.cwiseSqrt();
  Eigen::MatrixXd m = s.cwiseInverse().asDiagonal() * lower * s.asDiagonal();
  return 0.5 * (m + m.transpose());
}

Eigen::MatrixXd NormalizedHodgeParts::symmetric_upper() const {
  const Eigen::VectorXd s = d2.cwiseSqrt();
  Eigen::MatrixXd m = s.cwiseInverse().asDiagonal() * upper * s.asDiagonal();
  return 0.5 * (m + m.transpose());
}

Eigen::MatrixXd HodgeSpectrum::full_basis() const {
  Eigen::MatrixXd u(size(), harmonic_dim() + gradient_dim() + curl_dim());
  u << harmonic, gradient, curl;
  return u;
}

Eigen::VectorXd HodgeSpectrum::full_eigenvalues() const {
  Eigen::VectorXd v(harmonic_dim() + gradient_dim() + curl_dim());
  v << Eigen::VectorXd::Zero(harmonic_dim()), gradient_eigenvalues, curl_eigenvalues;
  return v;
}

HodgeSpectrum hodge_spectrum(const Eigen::MatrixXd& lower, const Eigen::MatrixXd& upper) {
  if (lower.rows() != lower.cols() || upper.rows() != upper.cols() ||
      lower.rows() != upper.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "Laplacian parts must be square and equal sized");
  }
  HodgeSpectrum s;
  const Eigen::Index n = lower.rows();
  if (n == 0) return s;

  const auto es_total = eigh(lower + upper);
  s.lambda_max = std::max(0.0, es_total.eigenvalues().maxCoeff());
  s.zero_tol = 1e-8 * s.lambda_max;

  const auto es_lower = eigh(lower);
  const auto es_upper = eigh(upper);
  select_columns(es_total, s.zero_tol, false, s.harmonic, nullptr);
  select_columns(es_lower, s.zero_tol, true, s.gradient, &s.gradient_eigenvalues);
  select_columns(es_upper, s.zero_tol, true, s.curl, &s.curl_eigenvalues);
  return s;
}

HodgeSpectrum hodge_spectrum(const SimplicialComplex& sc) {
  const HodgeLaplacians l = hodge_laplacian(sc, 1);
  return hodge_spectrum(l.lower, l.upper);
}

Embeddings sft(const HodgeSpectrum& spectrum, const Eigen::VectorXd& flow) {
  check_length(spectrum, flow);
  return {spectrum.harmonic.transpose() * flow, spectrum.gradient.transpose() * flow,
          spectrum.curl.transpose() * flow};
}

Eigen::VectorXd inverse_sft(const HodgeSpectrum& spectrum, const Embeddings& e) {
  if (e.harmonic.size() != spectrum.harmonic_dim() ||
      e.gradient.size() != spectrum.gradient_dim() || e.curl.size() != spectrum.curl_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "embedding sizes do not match spectrum");
  }
  return spectrum.harmonic * e.harmonic + spectrum.gradient * e.gradient +
         spectrum.curl * e.curl;
}

HodgeComponents hodge_decompose(const HodgeSpectrum& spectrum, const Eigen::VectorXd& flow) {
  check_length(spectrum, flow);
  HodgeComponents c;
  c.gradient = spectrum.gradient * (spectrum.gradient.transpose() * flow);
  c.curl = spectrum.curl * (spectrum.curl.transpose() * flow);
  c.harmonic = flow - c.gradient - c.curl;
  return c;
}

HodgeComponents hodge_decompose(const SimplicialComplex& sc, const Eigen::VectorXd& flow) {
  check_length(sc, flow);
  return hodge_decompose(hodge_spectrum(sc), flow);
}

Eigen::VectorXd divergence(const SimplicialComplex& sc, const Eigen::VectorXd& flow) {
  check_length(sc, flow);
  return incidence_matrix(sc, 1).cast<double>() * flow;
}

Eigen::VectorXd curl(const SimplicialComplex& sc, const Eigen::VectorXd& flow) {
  check_length(sc, flow);
  return incidence_matrix(sc, 2).cast<double>().transpose() * flow;
}

std::vector<double> distinct_values(std::vector<double> values, double grouping_tol) {
  if (grouping_tol < 0.0) throw Error(ErrorCode::InvalidArgument, "grouping tolerance < 0");
  std::vector<double> out;
  if (values.empty()) return out;
  std::sort(values.begin(), values.end());
  const double scale = std::max(std::abs(values.front()), std::abs(values.back()));
  const double tol = std::max(grouping_tol, 1e-9 * scale);

  double sum = values[0];
  std::size_t count = 1;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] - values[i - 1] > tol) {
      out.push_back(sum / static_cast<double>(count));
      sum = 0.0;
      count = 0;
    }
    sum += values[i];
    ++count;
  }
  out.push_back(sum / static_cast<double>(count));
  return out;
}

DistinctFrequencies distinct_frequencies(const HodgeSpectrum& spectrum, double grouping_tol) {
  auto to_vec = [](const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); };
  return {distinct_values(to_vec(spectrum.gradient_eigenvalues), grouping_tol),
          distinct_values(to_vec(spectrum.curl_eigenvalues), grouping_tol)};
}

}  // namespace scf
