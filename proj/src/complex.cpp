#include "scf/complex.hpp"

#include <algorithm>
#include <string>

#include "scf/error.hpp"

namespace scf {

namespace {

std::uint64_t edge_key(Index u, Index v, std::size_t n) { return std::uint64_t(u) * n + v; }

std::uint64_t triangle_key(Index a, Index b, Index c, std::size_t n) {
  return (std::uint64_t(a) * n + b) * n + c;
}

void check_vertex(Index v, std::size_t n) {
  if (v >= n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
  }
}

void check_bijection(std::span<const Index> perm, std::size_t n, const char* what) {
  if (perm.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " permutation has size " +
                                                  std::to_string(perm.size()) + ", expected " +
                                                  std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (Index p : perm) {
    if (p >= n || seen[p]) {
      throw Error(ErrorCode::InvalidArgument, std::string(what) + " permutation is not a bijection");
    }
    seen[p] = true;
  }
}

// Sorts three values in place and returns the parity (+1 even, -1 odd) of the sort.
int sort3_with_parity(std::array<Index, 3>& t) {
  int parity = 1;
  auto swap_if = [&](int i, int j) {
    if (t[i] > t[j]) {
      std::swap(t[i], t[j]);
      parity = -parity;
    }
  };
  swap_if(0, 1);
  swap_if(1, 2);
  swap_if(0, 1);
  return parity;
}

}  // namespace

std::size_t SimplicialComplex::count(int k) const {
  switch (k) {
    case 0: return vertex_count_;
    case 1: return edges_.size();
    case 2: return triangles_.size();
    default: throw Error(ErrorCode::UnsupportedOrder, "order " + std::to_string(k));
  }
}

std::optional<Index> SimplicialComplex::find_edge(Index u, Index v) const {
  if (u > v) std::swap(u, v);
  if (v >= vertex_count_) return std::nullopt;
  auto it = edge_lookup_.find(edge_key(u, v, vertex_count_));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<Index> SimplicialComplex::find_triangle(Index a, Index b, Index c) const {
  std::array<Index, 3> t{a, b, c};
  sort3_with_parity(t);
  if (t[2] >= vertex_count_) return std::nullopt;
  auto it = triangle_lookup_.find(triangle_key(t[0], t[1], t[2], vertex_count_));
  if (it == triangle_lookup_.end()) return std::nullopt;
  return it->second;
}

int SimplicialComplex::triangle_edge_sign(Index t, int slot) const {
  static constexpr int kBoundary[3] = {+1, -1, +1};
  return kBoundary[slot] * triangle_signs_[t] * edge_signs_[triangle_edges_[t][slot]];
}

void SimplicialComplex::index_structure() {
  const std::size_t n = vertex_count_;
  edge_lookup_.clear();
  edge_lookup_.reserve(edges_.size());
  vertex_edges_.assign(n, {});
  for (Index e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    edge_lookup_.emplace(edge_key(u, v, n), e);
    vertex_edges_[u].push_back(e);
    vertex_edges_[v].push_back(e);
  }
  for (auto& list : vertex_edges_) std::sort(list.begin(), list.end());

  triangle_lookup_.clear();
  triangle_lookup_.reserve(triangles_.size());
  edge_triangles_.assign(edges_.size(), {});
  triangle_edges_.assign(triangles_.size(), {});
  for (Index t = 0; t < triangles_.size(); ++t) {
    const auto [a, b, c] = triangles_[t];
    triangle_lookup_.emplace(triangle_key(a, b, c, n), t);
    const std::array<Edge, 3> faces{Edge{a, b}, Edge{a, c}, Edge{b, c}};
    for (int s = 0; s < 3; ++s) {
      auto it = edge_lookup_.find(edge_key(faces[s][0], faces[s][1], n));
      if (it == edge_lookup_.end()) {
        throw Error(ErrorCode::MissingFace,
                    "triangle (" + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(c) + ") lacks edge (" + std::to_string(faces[s][0]) + "," +
                        std::to_string(faces[s][1]) + ")");
      }
      triangle_edges_[t][s] = it->second;
      edge_triangles_[it->second].push_back(t);
    }
  }
  for (auto& list : edge_triangles_) std::sort(list.begin(), list.end());
}

SimplicialComplex build_complex(std::size_t vertex_count, std::vector<Edge> edges,
                                std::vector<Triangle> triangles) {
  if (vertex_count == 0) throw Error(ErrorCode::InvalidArgument, "vertex_count must be positive");
  for (auto& e : edges) {
    check_vertex(e[0], vertex_count);
    check_vertex(e[1], vertex_count);
    if (e[0] == e[1]) {
      throw Error(ErrorCode::InvalidArgument, "degenerate edge on vertex " + std::to_string(e[0]));
    }
    if (e[0] > e[1]) std::swap(e[0], e[1]);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  for (auto& t : triangles) {
    for (Index v : t) check_vertex(v, vertex_count);
    sort3_with_parity(t);
    if (t[0] == t[1] || t[1] == t[2]) {
      throw Error(ErrorCode::InvalidArgument, "degenerate triangle");
    }
  }
  std::sort(triangles.begin(), triangles.end());
  triangles.erase(std::unique(triangles.begin(), triangles.end()), triangles.end());

  SimplicialComplex sc;
  sc.vertex_count_ = vertex_count;
  sc.edges_ = std::move(edges);
  sc.triangles_ = std::move(triangles);
  sc.edge_signs_.assign(sc.edges_.size(), 1);
  sc.triangle_signs_.assign(sc.triangles_.size(), 1);
  sc.index_structure();
  return sc;
}

std::vector<Triangle> infer_triangles(std::size_t vertex_count, std::span<const Edge> edges) {
  std::vector<std::vector<Index>> higher(vertex_count);
  for (auto e : edges) {
    check_vertex(e[0], vertex_count);
    check_vertex(e[1], vertex_count);
    if (e[0] == e[1]) continue;
    if (e[0] > e[1]) std::swap(e[0], e[1]);
    higher[e[0]].push_back(e[1]);
  }
  for (auto& list : higher) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  std::vector<Triangle> out;
  std::vector<Index> common;
  for (Index a = 0; a < vertex_count; ++a) {
    const auto& na = higher[a];
    for (std::size_t i = 0; i < na.size(); ++i) {
      const Index b = na[i];
      common.clear();
      std::set_intersection(na.begin() + static_cast<std::ptrdiff_t>(i) + 1, na.end(),
                            higher[b].begin(), higher[b].end(), std::back_inserter(common));
      for (Index c : common) out.push_back({a, b, c});
    }
  }
  return out;
}

SignedIncidence incidence_matrix(const SimplicialComplex& sc, int k) {
  using Triplet = Eigen::Triplet<int>;
  std::vector<Triplet> entries;
  if (k == 1) {
    SignedIncidence b(static_cast<Eigen::Index>(sc.vertex_count()),
                      static_cast<Eigen::Index>(sc.edge_count()));
    entries.reserve(2 * sc.edge_count());
    for (Index e = 0; e < sc.edge_count(); ++e) {
      const auto col = static_cast<int>(e);
      const int s = sc.edge_signs()[e];
      entries.emplace_back(static_cast<int>(sc.edges()[e][0]), col, -s);
      entries.emplace_back(static_cast<int>(sc.edges()[e][1]), col, s);
    }
    b.setFromTriplets(entries.begin(), entries.end());
    return b;
  }
  if (k == 2) {
    SignedIncidence b(static_cast<Eigen::Index>(sc.edge_count()),
                      static_cast<Eigen::Index>(sc.triangle_count()));
    entries.reserve(3 * sc.triangle_count());
    for (Index t = 0; t < sc.triangle_count(); ++t) {
      for (int s = 0; s < 3; ++s) {
        entries.emplace_back(static_cast<int>(sc.triangle_edges(t)[s]), static_cast<int>(t),
                             sc.triangle_edge_sign(t, s));
      }
    }
    b.setFromTriplets(entries.begin(), entries.end());
    return b;
  }
  throw Error(ErrorCode::UnsupportedOrder, "incidence matrix of order " + std::to_string(k));
}

Eigen::MatrixXd to_dense(const SignedIncidence& b) {
  return Eigen::MatrixXd(b.cast<double>());
}

namespace {

void check_simplex(const SimplicialComplex& sc, int k, Index i) {
  if (k < 0 || k > 2) throw Error(ErrorCode::UnsupportedOrder, "order " + std::to_string(k));
  if (i >= sc.count(k)) {
    throw Error(ErrorCode::IndexOutOfRange, std::to_string(k) + "-simplex " + std::to_string(i));
  }
}

std::vector<Index> finish(std::vector<Index> v, Index self) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  v.erase(std::remove(v.begin(), v.end(), self), v.end());
  return v;
}

}  // namespace

std::vector<Index> lower_neighborhood(const SimplicialComplex& sc, int k, Index i) {
  check_simplex(sc, k, i);
  std::vector<Index> out;
  if (k == 1) {
    for (Index v : sc.edges()[i]) {
      auto inc = sc.vertex_edges(v);
      out.insert(out.end(), inc.begin(), inc.end());
    }
  } else if (k == 2) {
    for (Index e : sc.triangle_edges(i)) {
      auto cof = sc.edge_triangles(e);
      out.insert(out.end(), cof.begin(), cof.end());
    }
  }
  return finish(std::move(out), i);
}

std::vector<Index> upper_neighborhood(const SimplicialComplex& sc, int k, Index i) {
  check_simplex(sc, k, i);
  std::vector<Index> out;
  if (k == 0) {
    for (Index e : sc.vertex_edges(i)) {
      const auto& edge = sc.edges()[e];
      out.push_back(edge[0] == i ? edge[1] : edge[0]);
    }
  } else if (k == 1) {
    for (Index t : sc.edge_triangles(i)) {
      const auto& te = sc.triangle_edges(t);
      out.insert(out.end(), te.begin(), te.end());
    }
  }
  return finish(std::move(out), i);
}

std::size_t EdgeAdjacency::max_lower_degree() const {
  std::size_t d = 0;
  for (const auto& n : lower) d = std::max(d, n.size());
  return d;
}

std::size_t EdgeAdjacency::max_upper_degree() const {
  std::size_t d = 0;
  for (const auto& n : upper) d = std::max(d, n.size());
  return d;
}

EdgeAdjacency edge_adjacency(const SimplicialComplex& sc) {
  EdgeAdjacency adj;
  adj.lower.reserve(sc.edge_count());
  adj.upper.reserve(sc.edge_count());
  for (Index e = 0; e < sc.edge_count(); ++e) {
    adj.lower.push_back(lower_neighborhood(sc, 1, e));
    adj.upper.push_back(upper_neighborhood(sc, 1, e));
  }
  return adj;
}

SimplicialComplex permute(const SimplicialComplex& sc, const PermutationPlan& plan) {
  check_bijection(plan.node_perm, sc.vertex_count(), "node");
  check_bijection(plan.edge_perm, sc.edge_count(), "edge");
  check_bijection(plan.triangle_perm, sc.triangle_count(), "triangle");

  SimplicialComplex out;
  out.vertex_count_ = sc.vertex_count();
  out.edges_.resize(sc.edge_count());
  out.edge_signs_.resize(sc.edge_count());
  for (Index e = 0; e < sc.edge_count(); ++e) {
    Index u = plan.node_perm[sc.edges_[e][0]];
    Index v = plan.node_perm[sc.edges_[e][1]];
    int sign = sc.edge_signs_[e];
    if (u > v) {
      std::swap(u, v);
      sign = -sign;
    }
    out.edges_[plan.edge_perm[e]] = {u, v};
    out.edge_signs_[plan.edge_perm[e]] = sign;
  }
  out.triangles_.resize(sc.triangle_count());
  out.triangle_signs_.resize(sc.triangle_count());
  for (Index t = 0; t < sc.triangle_count(); ++t) {
    std::array<Index, 3> tri{plan.node_perm[sc.triangles_[t][0]], plan.node_perm[sc.triangles_[t][1]],
                             plan.node_perm[sc.triangles_[t][2]]};
    const int parity = sort3_with_parity(tri);
    out.triangles_[plan.triangle_perm[t]] = tri;
    out.triangle_signs_[plan.triangle_perm[t]] = parity * sc.triangle_signs_[t];
  }
  out.index_structure();
  return out;
}

SimplicialComplex reorient(const SimplicialComplex& sc, const OrientationPlan& plan) {
  if (plan.edge_signs.size() != sc.edge_count() ||
      plan.triangle_signs.size() != sc.triangle_count()) {
    throw Error(ErrorCode::DimensionMismatch, "orientation plan does not match complex");
  }
  auto check = [](int s) {
    if (s != 1 && s != -1) throw Error(ErrorCode::InvalidArgument, "orientation sign must be +-1");
  };
  SimplicialComplex out = sc;
  for (Index e = 0; e < sc.edge_count(); ++e) {
    check(plan.edge_signs[e]);
    out.edge_signs_[e] *= plan.edge_signs[e];
  }
  for (Index t = 0; t < sc.triangle_count(); ++t) {
    check(plan.triangle_signs[t]);
    out.triangle_signs_[t] *= plan.triangle_signs[t];
  }
  return out;
}

Eigen::MatrixXd permutation_matrix(std::span<const Index> perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < perm.size(); ++i) p(static_cast<Eigen::Index>(perm[i]), static_cast<Eigen::Index>(i)) = 1.0;
  return p;
}

}  // namespace scf
