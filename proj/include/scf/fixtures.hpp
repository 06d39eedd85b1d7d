#pragma once

#include <cstdint>

#include "scf/apps.hpp"
#include "scf/complex.hpp"

namespace scf::fixtures {

/// Seven nodes, ten edges and three filled triangles; edge (4,5) has lower
/// neighbours (3,4), (2,5), (4,6), (5,6) and upper neighbours (4,6), (5,6).
SimplicialComplex toy_complex();

/// G(n, p) random graph with every 3-clique filled.
SimplicialComplex random_clique_complex(std::size_t nodes, double edge_probability,
                                        std::uint64_t seed);

struct RoadNetworkShape {
  std::size_t nodes;
  std::size_t edges;
  std::size_t triangles;
};

inline constexpr RoadNetworkShape kLondonShape{82, 130, 12};
inline constexpr RoadNetworkShape kChicagoShape{546, 1088, 112};

/// Connected planar-ish street network on a grid: a random spanning
/// tree plus extra streets and cell diagonals, tuned to hit the requested
/// node, edge and triangle counts.
SimplicialComplex road_network(const RoadNetworkShape& shape, std::uint64_t seed);

/// Seven-currency market quoted on 2021-07-12 (USD, EUR, CNY, HKD, GBP, JPY, AUD).
ExchangeMarket seven_currency_market();

/// Deterministic uniform double in [0, 1) from a 64-bit generator.
double unit_uniform(std::uint64_t bits);

}  // namespace scf::fixtures
