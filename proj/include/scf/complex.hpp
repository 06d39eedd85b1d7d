#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace scf {

using Index = std::size_t;
using Edge = std::array<Index, 2>;
using Triangle = std::array<Index, 3>;

/// Signed incidence matrix with entries in {-1, 0, +1}.
using SignedIncidence = Eigen::SparseMatrix<int>;

/// Relabeling of simplices: `node_perm[i]` is the new index of node i, and
/// likewise for edges and triangles.
struct PermutationPlan {
  std::vector<Index> node_perm;
  std::vector<Index> edge_perm;
  std::vector<Index> triangle_perm;
};

/// Orientation flips relative to the stored orientation. Node signs are +1.
struct OrientationPlan {
  std::vector<int> edge_signs;
  std::vector<int> triangle_signs;
};

/// Order-2 simplicial complex.
///
/// Vertex tuples are always stored sorted ascending. Each edge and triangle
/// carries an orientation sign relative to that sorted tuple; complexes made
/// by build_complex() have all signs +1 (lexicographic reference orientation)
/// and lexicographically ordered simplex lists. permute() and reorient()
/// produce complexes whose list order or signs deviate from that.
class SimplicialComplex {
public:
  SimplicialComplex() = default;

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t triangle_count() const noexcept { return triangles_.size(); }
  /// N_k for k in {0, 1, 2}.
  std::size_t count(int k) const;

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Triangle> triangles() const noexcept { return triangles_; }
  std::span<const int> edge_signs() const noexcept { return edge_signs_; }
  std::span<const int> triangle_signs() const noexcept { return triangle_signs_; }

  std::optional<Index> find_edge(Index u, Index v) const;
  std::optional<Index> find_triangle(Index a, Index b, Index c) const;

  /// Edges incident to vertex v.
  std::span<const Index> vertex_edges(Index v) const { return vertex_edges_.at(v); }
  /// Triangles that have edge e as a face.
  std::span<const Index> edge_triangles(Index e) const { return edge_triangles_.at(e); }
  /// The three edges of triangle t in the order (ab, ac, bc) of its sorted tuple.
  const std::array<Index, 3>& triangle_edges(Index t) const { return triangle_edges_.at(t); }

  /// Incidence coefficient of edge slot s (0: ab, 1: ac, 2: bc) in triangle t,
  /// including both orientation signs.
  int triangle_edge_sign(Index t, int slot) const;

  friend SimplicialComplex build_complex(std::size_t, std::vector<Edge>, std::vector<Triangle>);
  friend SimplicialComplex permute(const SimplicialComplex&, const PermutationPlan&);
  friend SimplicialComplex reorient(const SimplicialComplex&, const OrientationPlan&);

private:
  void index_structure();  // fills lookups; throws MissingFace

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
  std::vector<int> edge_signs_;
  std::vector<int> triangle_signs_;

  std::unordered_map<std::uint64_t, Index> edge_lookup_;
  std::unordered_map<std::uint64_t, Index> triangle_lookup_;
  std::vector<std::vector<Index>> vertex_edges_;
  std::vector<std::vector<Index>> edge_triangles_;
  std::vector<std::array<Index, 3>> triangle_edges_;
};

/// Builds a complex from raw lists. Tuples are sorted, duplicates merged, and
/// both lists ordered lexicographically. Throws MissingFace when a triangle's
/// edge is absent, IndexOutOfRange for bad vertex ids and InvalidArgument for
/// degenerate tuples.
SimplicialComplex build_complex(std::size_t vertex_count, std::vector<Edge> edges,
                                std::vector<Triangle> triangles);

/// Every 3-clique of the graph, lexicographically ordered.
std::vector<Triangle> infer_triangles(std::size_t vertex_count, std::span<const Edge> edges);

/// B_1 (k = 1, N0 x N1) or B_2 (k = 2, N1 x N2).
SignedIncidence incidence_matrix(const SimplicialComplex& sc, int k);

Eigen::MatrixXd to_dense(const SignedIncidence& b);

/// k-simplices sharing a (k-1)-face with simplex i (i excluded), ascending.
std::vector<Index> lower_neighborhood(const SimplicialComplex& sc, int k, Index i);
/// k-simplices that are faces of a common (k+1)-simplex with i (i excluded), ascending.
std::vector<Index> upper_neighborhood(const SimplicialComplex& sc, int k, Index i);

/// Lower and upper neighborhoods of every edge.
struct EdgeAdjacency {
  std::vector<std::vector<Index>> lower;
  std::vector<std::vector<Index>> upper;
  std::size_t max_lower_degree() const;
  std::size_t max_upper_degree() const;
};
EdgeAdjacency edge_adjacency(const SimplicialComplex& sc);

/// Relabels simplices so that the new incidence matrices are P_{k-1} B_k P_k^T.
SimplicialComplex permute(const SimplicialComplex& sc, const PermutationPlan& plan);
/// Flips orientations so that the new incidence matrices are D_{k-1} B_k D_k.
SimplicialComplex reorient(const SimplicialComplex& sc, const OrientationPlan& plan);

/// Dense permutation matrix P with P(perm[i], i) = 1, so that (P x)[perm[i]] = x[i].
Eigen::MatrixXd permutation_matrix(std::span<const Index> perm);

}  // namespace scf
