#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "json.hpp"
#include "scf/apps.hpp"
#include "scf/complex.hpp"
#include "scf/design.hpp"
#include "scf/filter.hpp"
#include "scf/spectral.hpp"

namespace scf::io {

using Json = nlohmann::json;

/// Serializes with doubles printed to 17 significant digits; byte-identical
/// for identical values. Non-finite numbers become null.
std::string dump_json(const Json& j, int indent = 2);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Complexes: {"vertex_count", "edges", "triangles", optional "infer_triangles"}.
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& sc);
SimplicialComplex read_complex(const std::string& path);

// Filters: {"h0", "alpha", "beta"} or {"chebyshev": {...}}.
using AnyFilter = std::variant<FilterCoefficients, ChebyshevFilter>;
AnyFilter filter_from_json(const Json& j);
Json filter_to_json(const FilterCoefficients& f);
Json filter_to_json(const ChebyshevFilter& f);
AnyFilter read_filter(const std::string& path);

// Response specs: {"g0", "gradient": {"family", ...}, "curl": {...}}.
ResponseFunction response_function_from_json(const Json& j);
Json response_function_to_json(const ResponseFunction& f);
ResponseSpec spec_from_json(const Json& j);
Json spec_to_json(const ResponseSpec& s);
ResponseSpec read_spec(const std::string& path);

Json spectrum_to_json(const HodgeSpectrum& s);

/// `index,value` rows (any order k), or `u,v,value` rows for edges; a pair
/// listed as v,u with v > u flips the sign. A header line is skipped.
Eigen::VectorXd read_signal(std::istream& in, const SimplicialComplex& sc, int order = 1);
Eigen::VectorXd read_signal(const std::string& path, const SimplicialComplex& sc, int order = 1);
std::string signal_to_csv(const Eigen::VectorXd& v);

/// `lambda,type,response`
std::string response_csv(const FrequencyResponse& r);
std::string response_csv(const ChebyshevFilter& f, const HodgeSpectrum& s);

/// Header of currency codes (optionally preceded by an empty label cell), then
/// one row per currency (optionally led by its label). Empty or NA cells are
/// missing quotes.
ExchangeMarket read_market(std::istream& in);
ExchangeMarket read_market(const std::string& path);
std::string market_to_csv(const ExchangeMarket& m, int precision = 4);

/// `edge_index,u,v,norm_total,norm_H,norm_G,norm_C,rel_H,rel_G,rel_C`
std::string pagerank_csv(const SimplicialComplex& sc, const std::vector<PageRankResult>& rows);

/// Doubles formatted with 17 significant digits.
std::string format_double(double v);

}  // namespace scf::io
