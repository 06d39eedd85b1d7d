#include "scf/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "scf/error.hpp"

namespace scf::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

void dump(const Json& j, int indent, int depth, std::string& out) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        out += Json(it.key()).dump();
        out += indent > 0 ? ": " : ":";
        dump(it.value(), indent, depth + 1, out);
      }
      out += nl;
      out += close_pad;
      out += "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
      out += "[";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat || indent == 0 ? ", " : ",";
        if (!flat) {
          out += nl;
          out += pad;
        }
        first = false;
        dump(e, indent, depth + 1, out);
      }
      if (!flat) {
        out += nl;
        out += close_pad;
      }
      out += "]";
      return;
    }
    case Json::value_t::number_float: out += format_double(j.get<double>()); return;
    default: out += j.dump(); return;
  }
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

bool parse_number(const std::string& s, double& v) {
  if (s.empty()) return false;
  char* end = nullptr;
  v = std::strtod(s.c_str(), &end);
  return end != nullptr && *end == '\0';
}

bool parse_index(const std::string& s, Index& v) {
  if (s.empty() || s[0] == '-') return false;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(s.c_str(), &end, 10);
  if (end == nullptr || *end != '\0') return false;
  v = static_cast<Index>(x);
  return true;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  return in;
}

std::vector<double> to_vector(const Json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array");
  std::vector<double> v;
  for (const auto& e : j) {
    if (!e.is_number()) parse_error(std::string(what) + " entries must be numbers");
    v.push_back(e.get<double>());
  }
  return v;
}

double number(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    parse_error(std::string("missing numeric field \"") + key + "\"");
  }
  return j.at(key).get<double>();
}

double number_or(const Json& j, const char* key, double fallback) {
  return j.contains(key) ? number(j, key) : fallback;
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  // Keep the value recognisably floating point.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump(j, indent, 0, out);
  out += "\n";
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in = open_in(path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    parse_error(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

SimplicialComplex complex_from_json(const Json& j) {
  try {
    if (!j.contains("vertex_count")) parse_error("missing \"vertex_count\"");
    const auto n = j.at("vertex_count").get<long long>();
    if (n <= 0) throw Error(ErrorCode::InvalidArgument, "vertex_count must be positive");
    std::vector<Edge> edges;
    for (const auto& e : j.value("edges", Json::array())) {
      if (!e.is_array() || e.size() != 2) parse_error("edges must be pairs");
      const auto u = e[0].get<long long>(), v = e[1].get<long long>();
      if (u < 0 || v < 0) throw Error(ErrorCode::IndexOutOfRange, "negative vertex index");
      edges.push_back({static_cast<Index>(u), static_cast<Index>(v)});
    }
    std::vector<Triangle> tris;
    if (j.value("infer_triangles", false)) {
      tris = infer_triangles(static_cast<std::size_t>(n), edges);
    } else {
      for (const auto& t : j.value("triangles", Json::array())) {
        if (!t.is_array() || t.size() != 3) parse_error("triangles must be triples");
        Triangle tri{};
        for (int k = 0; k < 3; ++k) {
          const auto x = t[static_cast<std::size_t>(k)].get<long long>();
          if (x < 0) throw Error(ErrorCode::IndexOutOfRange, "negative vertex index");
          tri[static_cast<std::size_t>(k)] = static_cast<Index>(x);
        }
        tris.push_back(tri);
      }
    }
    return build_complex(static_cast<std::size_t>(n), std::move(edges), std::move(tris));
  } catch (const Json::exception& e) {
    parse_error(std::string("complex: ") + e.what());
  }
}

Json complex_to_json(const SimplicialComplex& sc) {
  Json j;
  j["vertex_count"] = sc.vertex_count();
  j["edges"] = Json::array();
  for (const auto& e : sc.edges()) j["edges"].push_back({e[0], e[1]});
  j["triangles"] = Json::array();
  for (const auto& t : sc.triangles()) j["triangles"].push_back({t[0], t[1], t[2]});
  return j;
}

SimplicialComplex read_complex(const std::string& path) { return complex_from_json(read_json_file(path)); }

AnyFilter filter_from_json(const Json& j) {
  if (!j.is_object()) parse_error("filter must be an object");
  if (j.contains("chebyshev")) {
    const Json& c = j.at("chebyshev");
    ChebyshevFilter f;
    f.c_lower = to_vector(c.value("c_lower", Json::array()), "c_lower");
    f.c_upper = to_vector(c.value("c_upper", Json::array()), "c_upper");
    f.omega_lower = number_or(c, "omega_lower", 0.0);
    f.omega_upper = number_or(c, "omega_upper", 0.0);
    f.g0 = number_or(c, "g0", 0.0);
    if ((f.has_lower() && !(f.omega_lower > 0)) || (f.has_upper() && !(f.omega_upper > 0))) {
      parse_error("Chebyshev series needs a positive omega");
    }
    return f;
  }
  FilterCoefficients f;
  f.h0 = number_or(j, "h0", 0.0);
  f.alpha = to_vector(j.value("alpha", Json::array()), "alpha");
  f.beta = to_vector(j.value("beta", Json::array()), "beta");
  return f;
}

Json filter_to_json(const FilterCoefficients& f) {
  return Json{{"h0", f.h0}, {"alpha", f.alpha}, {"beta", f.beta}};
}

Json filter_to_json(const ChebyshevFilter& f) {
  return Json{{"chebyshev",
               {{"c_lower", f.c_lower},
                {"c_upper", f.c_upper},
                {"omega_lower", f.omega_lower},
                {"omega_upper", f.omega_upper},
                {"g0", f.g0}}}};
}

AnyFilter read_filter(const std::string& path) { return filter_from_json(read_json_file(path)); }

ResponseFunction response_function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family")) parse_error("response needs a \"family\"");
  const std::string fam = j.at("family").get<std::string>();
  const double hi = number_or(j, "max", 0.0);
  ResponseFunction f = ResponseFunction::constant(0.0, 0.0);
  if (fam == "table") {
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : j.value("points", Json::array())) {
      if (!p.is_array() || p.size() != 2) parse_error("table points must be [lambda, g] pairs");
      pts.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    return ResponseFunction::table(std::move(pts));
  } else if (fam == "constant") {
    f = ResponseFunction::constant(number(j, "value"), hi);
  } else if (fam == "step") {
    f = ResponseFunction::step(number(j, "cutoff"), number(j, "low"), number(j, "high"), hi);
  } else if (fam == "logistic") {
    f = ResponseFunction::logistic(number(j, "k"), number(j, "lambda0"), hi);
  } else if (fam == "one_minus_logistic") {
    f = ResponseFunction::one_minus_logistic(number(j, "k"), number(j, "lambda0"), hi);
  } else if (fam == "inverse_shift") {
    f = ResponseFunction::inverse_shift(number(j, "gamma"), hi, number_or(j, "scale", 1.0));
  } else {
    parse_error("unknown response family \"" + fam + "\"");
  }
  if (j.contains("min")) f.set_domain(number(j, "min"), hi);
  return f;
}

Json response_function_to_json(const ResponseFunction& f) {
  using F = ResponseFunction::Family;
  Json j;
  j["family"] = f.family_name();
  const auto& p = f.params();
  switch (f.family()) {
    case F::Table: {
      j["points"] = Json::array();
      for (const auto& [l, g] : f.points()) j["points"].push_back({l, g});
      return j;
    }
    case F::Constant: j["value"] = p[0]; break;
    case F::Step:
      j["cutoff"] = p[0];
      j["low"] = p[1];
      j["high"] = p[2];
      break;
    case F::Logistic:
    case F::OneMinusLogistic:
      j["k"] = p[0];
      j["lambda0"] = p[1];
      break;
    case F::InverseShift:
      j["gamma"] = p[0];
      j["scale"] = p[1];
      break;
  }
  j["max"] = f.lambda_max();
  if (f.has_lambda_min()) j["min"] = f.lambda_min();
  return j;
}

ResponseSpec spec_from_json(const Json& j) {
  if (!j.is_object()) parse_error("spec must be an object");
  try {
    ResponseSpec s;
    if (j.contains("gradient")) s.gradient = response_function_from_json(j.at("gradient"));
    if (j.contains("curl")) s.curl = response_function_from_json(j.at("curl"));
    if (!s.gradient && !s.curl) throw Error(ErrorCode::EmptySpec, "spec has neither gradient nor curl");
    if (j.contains("g0")) {
      s.g0 = number(j, "g0");
    } else {
      s.g0 = s.gradient ? (*s.gradient)(0.0) : (*s.curl)(0.0);
    }
    return s;
  } catch (const Json::exception& e) {
    parse_error(std::string("spec: ") + e.what());
  }
}

Json spec_to_json(const ResponseSpec& s) {
  Json j;
  j["g0"] = s.g0;
  if (s.gradient) j["gradient"] = response_function_to_json(*s.gradient);
  if (s.curl) j["curl"] = response_function_to_json(*s.curl);
  return j;
}

ResponseSpec read_spec(const std::string& path) { return spec_from_json(read_json_file(path)); }

Json spectrum_to_json(const HodgeSpectrum& s) {
  auto vec = [](const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); };
  return Json{{"N1", s.size()},
              {"N_H", s.harmonic_dim()},
              {"N_G", s.gradient_dim()},
              {"N_C", s.curl_dim()},
              {"zero_tol", s.zero_tol},
              {"lambda_max", s.lambda_max},
              {"gradient_eigenvalues", vec(s.gradient_eigenvalues)},
              {"curl_eigenvalues", vec(s.curl_eigenvalues)}};
}

Eigen::VectorXd read_signal(std::istream& in, const SimplicialComplex& sc, int order) {
  const std::size_t n = sc.count(order);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto cells = split_csv(line);
    double value = 0.0;
    if (!parse_number(cells.back(), value)) {
      if (line_no == 1) continue;  // header
      parse_error("signal line " + std::to_string(line_no) + ": bad value");
    }
    if (cells.size() == 2) {
      Index i = 0;
      if (!parse_index(cells[0], i)) parse_error("signal line " + std::to_string(line_no) + ": bad index");
      if (i >= n) throw Error(ErrorCode::IndexOutOfRange, "signal index " + std::to_string(i));
      v[static_cast<Eigen::Index>(i)] = value;
    } else if (cells.size() == 3 && order == 1) {
      Index a = 0, b = 0;
      if (!parse_index(cells[0], a) || !parse_index(cells[1], b)) {
        parse_error("signal line " + std::to_string(line_no) + ": bad vertex pair");
      }
      const auto e = sc.find_edge(a, b);
      if (!e) {
        throw Error(ErrorCode::IndexOutOfRange, "signal names missing edge (" + cells[0] + "," + cells[1] + ")");
      }
      v[static_cast<Eigen::Index>(*e)] = a < b ? value : -value;
    } else {
      parse_error("signal line " + std::to_string(line_no) + ": expected 2 or 3 columns");
    }
  }
  return v;
}

Eigen::VectorXd read_signal(const std::string& path, const SimplicialComplex& sc, int order) {
  std::ifstream in = open_in(path);
  return read_signal(in, sc, order);
}

std::string signal_to_csv(const Eigen::VectorXd& v) {
  std::string s = "index,value\n";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += std::to_string(i) + "," + format_double(v[i]) + "\n";
  return s;
}

std::string response_csv(const FrequencyResponse& r) {
  std::string s = "lambda,type,response\n";
  s += "0.0,H," + format_double(r.at_harmonic) + "\n";
  for (const auto& [l, g] : r.at_gradient) s += format_double(l) + ",G," + format_double(g) + "\n";
  for (const auto& [l, g] : r.at_curl) s += format_double(l) + ",C," + format_double(g) + "\n";
  return s;
}

std::string response_csv(const ChebyshevFilter& f, const HodgeSpectrum& sp) {
  FrequencyResponse r;
  r.at_harmonic = chebyshev_response(f, 0.0, FrequencyType::Harmonic);
  for (double l : sp.gradient_eigenvalues) r.at_gradient.emplace_back(l, chebyshev_response(f, l, FrequencyType::Gradient));
  for (double l : sp.curl_eigenvalues) r.at_curl.emplace_back(l, chebyshev_response(f, l, FrequencyType::Curl));
  return response_csv(r);
}

ExchangeMarket read_market(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    rows.push_back(split_csv(line));
  }
  if (rows.empty()) parse_error("market file is empty");
  ExchangeMarket m;
  auto header = rows.front();
  if (!header.empty() && header.front().empty()) header.erase(header.begin());
  m.currencies = header;
  const auto n = static_cast<Eigen::Index>(header.size());
  if (static_cast<Eigen::Index>(rows.size()) - 1 != n) {
    parse_error("market has " + std::to_string(rows.size() - 1) + " rows for " +
                std::to_string(n) + " currencies");
  }
  m.rate.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    auto cells = rows[static_cast<std::size_t>(i) + 1];
    if (static_cast<Eigen::Index>(cells.size()) == n + 1) cells.erase(cells.begin());
    if (static_cast<Eigen::Index>(cells.size()) != n) {
      parse_error("market row " + std::to_string(i + 1) + " has the wrong width");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const std::string& c = cells[static_cast<std::size_t>(j)];
      double v = 0.0;
      if (c.empty() || c == "NA" || c == "nan") {
        v = std::numeric_limits<double>::quiet_NaN();
      } else if (!parse_number(c, v)) {
        parse_error("market cell \"" + c + "\" is not a number");
      }
      m.rate(i, j) = v;
    }
  }
  return m;
}

ExchangeMarket read_market(const std::string& path) {
  std::ifstream in = open_in(path);
  return read_market(in);
}

std::string market_to_csv(const ExchangeMarket& m, int precision) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(precision);
  for (std::size_t i = 0; i < m.currencies.size(); ++i) os << "," << m.currencies[i];
  os << "\n";
  for (Eigen::Index i = 0; i < m.rate.rows(); ++i) {
    os << m.currencies[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < m.rate.cols(); ++j) {
      os << ",";
      if (!std::isnan(m.rate(i, j))) os << m.rate(i, j);
    }
    os << "\n";
  }
  return os.str();
}

std::string pagerank_csv(const SimplicialComplex& sc, const std::vector<PageRankResult>& rows) {
  std::string s = "edge_index,u,v,norm_total,norm_H,norm_G,norm_C,rel_H,rel_G,rel_C\n";
  for (const auto& r : rows) {
    const auto& e = sc.edges()[r.edge];
    s += std::to_string(r.edge) + "," + std::to_string(e[0]) + "," + std::to_string(e[1]);
    for (double v : {r.norm_total, r.norm_harmonic, r.norm_gradient, r.norm_curl, r.rel_harmonic(),
                     r.rel_gradient(), r.rel_curl()}) {
      s += "," + format_double(v);
    }
    s += "\n";
  }
  return s;
}

}  // namespace scf::io
