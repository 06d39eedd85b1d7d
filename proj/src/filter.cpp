#include "scf/filter.hpp"

#include <string>

#include <Eigen/SparseCore>

#include "scf/error.hpp"
#include "scf/kernels.hpp"

namespace scf {

namespace {

void check_length(std::size_t expected, const Eigen::VectorXd& flow) {
  if (static_cast<std::size_t>(flow.size()) != expected) {
    throw Error(ErrorCode::DimensionMismatch, "flow has length " + std::to_string(flow.size()) +
                                                  ", expected " + std::to_string(expected));
  }
}

// Horner-free accumulation: y += sum_l c_l A^l x with x advanced in place.
void accumulate_powers(const CsrMatrix& a, const std::vector<double>& c, const Eigen::VectorXd& x,
                       Eigen::VectorXd& y) {
  if (c.empty()) return;
  const auto& k = kernels::active();
  const auto n = static_cast<std::size_t>(x.size());
  Eigen::VectorXd cur = x;
  Eigen::VectorXd next(x.size());
  for (double coeff : c) {
    k.spmv(a.rows, a.row_ptr.data(), a.col_idx.data(), a.values.data(), cur.data(), next.data());
    cur.swap(next);
    k.axpy(n, coeff, cur.data(), y.data());
  }
}

}  // namespace

EdgeShifts EdgeShifts::combinatorial(const SimplicialComplex& sc) {
  const Eigen::SparseMatrix<double> b1 = incidence_matrix(sc, 1).cast<double>();
  const Eigen::SparseMatrix<double> b2 = incidence_matrix(sc, 2).cast<double>();
  const Eigen::SparseMatrix<double> lower = b1.transpose() * b1;
  const Eigen::SparseMatrix<double> upper = b2 * b2.transpose();
  EdgeShifts s;
  s.lower = CsrMatrix::from_eigen(lower.pruned());
  s.upper = CsrMatrix::from_eigen(upper.pruned());
  return s;
}

EdgeShifts EdgeShifts::normalized(const SimplicialComplex& sc) {
  const NormalizedHodgeParts p = normalized_hodge_parts(sc);
  return from_dense(p.lower, p.upper);
}

EdgeShifts EdgeShifts::from_dense(const Eigen::MatrixXd& lower, const Eigen::MatrixXd& upper) {
  if (lower.rows() != lower.cols() || lower.rows() != upper.rows() ||
      upper.rows() != upper.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "shift operators must be square and equal sized");
  }
  return {CsrMatrix::from_dense(lower), CsrMatrix::from_dense(upper)};
}

Eigen::VectorXd shift_lower(const SimplicialComplex& sc, const Eigen::VectorXd& flow) {
  check_length(sc.edge_count(), flow);
  return EdgeShifts::combinatorial(sc).lower.multiply(flow);
}

Eigen::VectorXd shift_upper(const SimplicialComplex& sc, const Eigen::VectorXd& flow) {
  check_length(sc.edge_count(), flow);
  return EdgeShifts::combinatorial(sc).upper.multiply(flow);
}

Eigen::VectorXd apply(const EdgeShifts& shifts, const FilterCoefficients& coeffs,
                      const Eigen::VectorXd& flow) {
  check_length(shifts.size(), flow);
  Eigen::VectorXd y = coeffs.h0 * flow;
  accumulate_powers(shifts.lower, coeffs.alpha, flow, y);
  accumulate_powers(shifts.upper, coeffs.beta, flow, y);
  return y;
}

Eigen::VectorXd apply(const SimplicialComplex& sc, const FilterCoefficients& coeffs,
                      const Eigen::VectorXd& flow) {
  check_length(sc.edge_count(), flow);
  return apply(EdgeShifts::combinatorial(sc), coeffs, flow);
}

DistributedShiftTrace distributed_shift(const SimplicialComplex& sc, const Eigen::VectorXd& flow,
                                        std::size_t rounds_lower, std::size_t rounds_upper) {
  check_length(sc.edge_count(), flow);
  const std::size_t n = sc.edge_count();
  const EdgeAdjacency adj = edge_adjacency(sc);

  // Orientation of edge e relative to vertex v: -s at its tail, +s at its head.
  auto vertex_sign = [&](Index e, Index v) {
    const int s = sc.edge_signs()[e];
    return sc.edges()[e][0] == v ? -s : s;
  };
  auto slot_of = [&](Index t, Index e) {
    const auto& te = sc.triangle_edges(t);
    return e == te[0] ? 0 : (e == te[1] ? 1 : 2);
  };

  // Local weights each edge can derive from the faces and cofaces it knows.
  std::vector<std::vector<double>> w_lower(n), w_upper(n);
  std::vector<double> self_lower(n, 2.0), self_upper(n, 0.0);
  for (Index i = 0; i < n; ++i) {
    const Edge& ei = sc.edges()[i];
    for (Index j : adj.lower[i]) {
      const Edge& ej = sc.edges()[j];
      const Index shared = (ej[0] == ei[0] || ej[1] == ei[0]) ? ei[0] : ei[1];
      w_lower[i].push_back(vertex_sign(i, shared) * vertex_sign(j, shared));
    }
    self_upper[i] = static_cast<double>(sc.edge_triangles(i).size());
    for (Index j : adj.upper[i]) {
      double w = 0.0;
      for (Index t : sc.edge_triangles(i)) {
        const auto& te = sc.triangle_edges(t);
        if (te[0] == j || te[1] == j || te[2] == j) {
          w += sc.triangle_edge_sign(t, slot_of(t, i)) * sc.triangle_edge_sign(t, slot_of(t, j));
        }
      }
      w_upper[i].push_back(w);
    }
  }

  DistributedShiftTrace trace;
  auto run = [&](std::size_t rounds, const std::vector<std::vector<Index>>& nbrs,
                 const std::vector<std::vector<double>>& w, const std::vector<double>& self,
                 std::vector<std::vector<std::size_t>>& counts) {
    Eigen::VectorXd cur = flow;
    Eigen::VectorXd next(flow.size());
    for (std::size_t r = 0; r < rounds; ++r) {
      std::vector<std::size_t> round_counts(n, 0);
      for (Index i = 0; i < n; ++i) {
        double acc = self[i] * cur[static_cast<Eigen::Index>(i)];
        for (std::size_t q = 0; q < nbrs[i].size(); ++q) {
          acc += w[i][q] * cur[static_cast<Eigen::Index>(nbrs[i][q])];  // one message from j
          ++round_counts[i];
        }
        next[static_cast<Eigen::Index>(i)] = acc;
      }
      for (std::size_t c : round_counts) trace.messages += c;
      counts.push_back(std::move(round_counts));
      cur.swap(next);
    }
    return cur;
  };
  trace.lower = run(rounds_lower, adj.lower, w_lower, self_lower, trace.messages_lower);
  trace.upper = run(rounds_upper, adj.upper, w_upper, self_upper, trace.messages_upper);
  return trace;
}

const char* to_string(FrequencyType t) {
  switch (t) {
    case FrequencyType::Harmonic: return "H";
    case FrequencyType::Gradient: return "G";
    case FrequencyType::Curl: return "C";
  }
  return "?";
}

double response_at(const FilterCoefficients& coeffs, double lambda, FrequencyType type) {
  const std::vector<double>* c = nullptr;
  if (type == FrequencyType::Gradient) c = &coeffs.alpha;
  if (type == FrequencyType::Curl) c = &coeffs.beta;
  double r = coeffs.h0;
  if (c == nullptr) return r;
  double p = 1.0;
  for (double v : *c) {
    p *= lambda;
    r += v * p;
  }
  return r;
}

FrequencyResponse frequency_response(const FilterCoefficients& coeffs,
                                     const HodgeSpectrum& spectrum) {
  FrequencyResponse fr;
  fr.at_harmonic = coeffs.h0;
  for (double l : spectrum.gradient_eigenvalues) {
    fr.at_gradient.emplace_back(l, response_at(coeffs, l, FrequencyType::Gradient));
  }
  for (double l : spectrum.curl_eigenvalues) {
    fr.at_curl.emplace_back(l, response_at(coeffs, l, FrequencyType::Curl));
  }
  return fr;
}

}  // namespace scf
