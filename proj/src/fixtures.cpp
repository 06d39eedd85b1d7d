#include "scf/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "scf/error.hpp"

namespace scf::fixtures {

double unit_uniform(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

SimplicialComplex toy_complex() {
  return build_complex(7,
                       {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {4, 6}, {5, 6}},
                       {{0, 1, 3}, {1, 2, 3}, {4, 5, 6}});
}

SimplicialComplex random_clique_complex(std::size_t nodes, double p, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<Edge> edges;
  for (Index u = 0; u < nodes; ++u) {
    for (Index v = u + 1; v < nodes; ++v) {
      if (unit_uniform(gen()) < p) edges.push_back({u, v});
    }
  }
  auto tris = infer_triangles(nodes, edges);
  return build_complex(nodes, std::move(edges), std::move(tris));
}

namespace {

// Shuffle with our own generator draws so the output does not depend on the
// standard library's shuffle implementation.
template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& gen) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(unit_uniform(gen()) * static_cast<double>(i));
    std::swap(v[i - 1], v[std::min(j, i - 1)]);
  }
}

struct Graph {
  explicit Graph(std::size_t n) : adj(n) {}
  std::vector<std::set<Index>> adj;
  std::size_t edges = 0;
  std::size_t triangles = 0;

  bool has(Index u, Index v) const { return adj[u].count(v) > 0; }
  std::size_t closes(Index u, Index v) const {
    std::size_t c = 0;
    for (Index w : adj[u]) c += adj[v].count(w);
    return c;
  }
  void add(Index u, Index v) {
    triangles += closes(u, v);
    adj[u].insert(v);
    adj[v].insert(u);
    ++edges;
  }
  void remove(Index u, Index v) {
    adj[u].erase(v);
    adj[v].erase(u);
    --edges;
    triangles -= closes(u, v);
  }
};

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::vector<Index> parent;
  Index find(Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

SimplicialComplex road_network(const RoadNetworkShape& shape, std::uint64_t seed) {
  const std::size_t n = shape.nodes;
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "road network needs at least 3 nodes");
  if (shape.edges < n - 1) {
    throw Error(ErrorCode::InvalidArgument, "a connected network needs at least nodes - 1 edges");
  }
  const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::mt19937_64 gen(seed);

  std::vector<Edge> grid;
  for (Index v = 0; v < n; ++v) {
    if ((v % cols) + 1 < cols && v + 1 < n) grid.push_back({v, v + 1});
    if (v + cols < n) grid.push_back({v, v + cols});
  }
  shuffle(grid, gen);

  Graph g(n);
  UnionFind uf(n);
  for (const auto& e : grid) {
    if (uf.unite(e[0], e[1])) g.add(e[0], e[1]);
  }

  // Cell diagonals with the two sides through one corner form the triangles.
  std::vector<Index> cells;
  for (Index v = 0; v + cols + 1 < n; ++v) {
    if ((v % cols) + 1 < cols) cells.push_back(v);
  }
  std::set<Index> used_cells;
  for (int attempt = 0; attempt < 200 * static_cast<int>(shape.triangles + 1) &&
                        g.triangles < shape.triangles && !cells.empty();
       ++attempt) {
    const Index a = cells[static_cast<std::size_t>(unit_uniform(gen()) * static_cast<double>(cells.size()))];
    if (used_cells.count(a)) continue;
    const Index b = a + 1, d = a + cols, e = a + cols + 1;
    const bool main_diag = unit_uniform(gen()) < 0.5;
    const Index x = main_diag ? a : b;
    const Index y = main_diag ? e : d;
    const Index apex = main_diag ? (unit_uniform(gen()) < 0.5 ? b : d) : (unit_uniform(gen()) < 0.5 ? a : e);

    std::vector<Edge> added;
    for (const Edge& s : {Edge{x, apex}, Edge{apex, y}, Edge{x, y}}) {
      if (!g.has(s[0], s[1])) {
        g.add(s[0], s[1]);
        added.push_back(s);
      }
    }
    if (g.triangles > shape.triangles || g.edges > shape.edges) {
      for (auto it = added.rbegin(); it != added.rend(); ++it) g.remove((*it)[0], (*it)[1]);
      continue;
    }
    used_cells.insert(a);
  }

  // Remaining streets must not close new triangles.
  for (const auto& e : grid) {
    if (g.edges >= shape.edges) break;
    if (!g.has(e[0], e[1]) && g.closes(e[0], e[1]) == 0) g.add(e[0], e[1]);
  }
  for (Index a : cells) {
    if (g.edges >= shape.edges) break;
    if (used_cells.count(a)) continue;
    const Index b = a + 1, d = a + cols, e = a + cols + 1;
    if (!g.has(a, e) && !g.has(b, d) && g.closes(a, e) == 0) {
      g.add(a, e);
      used_cells.insert(a);
    }
  }

  // Longer streets spanning two cells, for dense shapes the grid cannot reach.
  std::vector<Edge> longer;
  for (Index v = 0; v < n; ++v) {
    const Index c = v % cols;
    if (c + 2 < cols && v + 2 < n) longer.push_back({v, v + 2});
    if (v + 2 * cols < n) longer.push_back({v, v + 2 * cols});
    if (c + 2 < cols && v + cols + 2 < n) longer.push_back({v, v + cols + 2});
    if (c + 1 < cols && v + 2 * cols + 1 < n) longer.push_back({v, v + 2 * cols + 1});
  }
  shuffle(longer, gen);
  for (const auto& e : longer) {
    if (g.edges >= shape.edges) break;
    if (!g.has(e[0], e[1]) && g.closes(e[0], e[1]) == 0) g.add(e[0], e[1]);
  }

  std::vector<Edge> edges;
  for (Index u = 0; u < n; ++u) {
    for (Index v : g.adj[u]) {
      if (u < v) edges.push_back({u, v});
    }
  }
  auto tris = infer_triangles(n, edges);
  return build_complex(n, std::move(edges), std::move(tris));
}

ExchangeMarket seven_currency_market() {
  ExchangeMarket m;
  m.currencies = {"USD", "EUR", "CNY", "HKD", "GBP", "JPY", "AUD"};
  m.rate.resize(7, 7);
  m.rate << 1, 0.8422, 6.3739, 7.7666, 0.7207, 110.1020, 1.3377,
      1.1873, 1, 7.5681, 9.2218, 0.8557, 130.7314, 1.5883,
      0.1539, 0.1321, 1, 1.2185, 0.1131, 17.2683, 0.2099,
      0.1288, 0.1085, 0.8207, 1, 0.0928, 14.1718, 0.1723,
      1.3871, 1.1685, 8.8414, 10.7732, 1, 152.6758, 1.8557,
      0.0091, 0.0077, 0.0579, 0.0706, 0.0066, 1, 0.0122,
      0.7475, 0.6299, 4.7602, 5.8001, 0.5385, 82.1837, 1;
  return m;
}

}  // namespace scf::fixtures
