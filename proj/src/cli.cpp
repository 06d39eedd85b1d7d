#include "scf/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "scf/apps.hpp"
#include "scf/design.hpp"
#include "scf/error.hpp"
#include "scf/fixtures.hpp"
#include "scf/io.hpp"

namespace scf::cli {

namespace {

using io::Json;

struct Config {
  std::string sc_path, signal_path, spec_path, filter_path, market_path, out_path;
  std::string method, mode = "joint", component = "gradient", regularizer = "hodge";
  std::string convention = "upper", kind = "toy";
  std::size_t order_lower = 0, order_upper = 0, order = 0, samples = 100, quadrature = 0;
  std::size_t nodes = 40;
  double gamma = 0.01, mu = 0.5, group_tol = 0.0, threshold = 0.003, edge_probability = 0.2;
  double k = 100.0, lambda0 = 0.01;
  int power_steps = 50;
  std::uint64_t seed = 20210712;
  long long edge = -1;
  bool all = false;
  bool order_given = false;
};

class Emitter {
public:
  Emitter(const Config& c, std::ostream& out) : cfg_(c), out_(out) {}
  void emit(const std::string& text) const {
    if (cfg_.out_path.empty()) {
      out_ << text;
    } else {
      io::write_text_file(cfg_.out_path, text);
    }
  }
  void emit(const Json& j) const { emit(io::dump_json(j)); }

private:
  const Config& cfg_;
  std::ostream& out_;
};

[[noreturn]] void usage(const std::string& what) { throw CLI::ValidationError(what); }

void require(const std::string& value, const char* flag) {
  if (value.empty()) usage(std::string(flag) + " is required");
}

DesignMode parse_mode(const std::string& s) {
  if (s == "joint") return DesignMode::Joint;
  if (s == "decoupled") return DesignMode::Decoupled;
  usage("--mode must be joint or decoupled");
}

QuoteConvention parse_convention(const std::string& s) {
  if (s == "upper") return QuoteConvention::Upper;
  if (s == "symmetric") return QuoteConvention::Symmetric;
  usage("--convention must be upper or symmetric");
}

Component parse_component(const std::string& s) {
  if (s == "gradient") return Component::Gradient;
  if (s == "curl") return Component::Curl;
  if (s == "harmonic") return Component::Harmonic;
  usage("--component must be gradient, curl or harmonic");
}

Json vector_json(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

Json warnings_json(const std::vector<std::string>& w) { return w; }

// Fills a missing domain maximum from a power-iteration estimate on the complex.
void complete_domains(ResponseSpec& spec, const std::optional<SimplicialComplex>& sc,
                      const Config& c) {
  auto fill = [&](std::optional<ResponseFunction>& f, bool lower) {
    if (!f || f->lambda_max() > 0.0) return;
    if (!sc) usage("spec has no \"max\" for a side; pass --sc to estimate it");
    const EdgeShifts s = EdgeShifts::combinatorial(*sc);
    f->set_lambda_max(chebyshev_domain(lower ? s.lower : s.upper, c.power_steps, c.seed + (lower ? 0 : 1)));
  };
  fill(spec.gradient, true);
  fill(spec.curl, false);
}

int cmd_info(const Config& c, const Emitter& em) {
  const SimplicialComplex sc = io::read_complex(c.sc_path);
  const HodgeSpectrum s = hodge_spectrum(sc);
  const DistinctFrequencies q = distinct_frequencies(s, c.group_tol);
  em.emit(Json{{"N0", sc.vertex_count()},
               {"N1", sc.edge_count()},
               {"N2", sc.triangle_count()},
               {"N_H", s.harmonic_dim()},
               {"N_G", s.gradient_dim()},
               {"N_C", s.curl_dim()},
               {"D_G", q.gradient.size()},
               {"D_C", q.curl.size()}});
  return 0;
}

int cmd_spectrum(const Config& c, const Emitter& em) {
  const HodgeSpectrum s = hodge_spectrum(io::read_complex(c.sc_path));
  Json j = io::spectrum_to_json(s);
  const DistinctFrequencies q = distinct_frequencies(s, c.group_tol);
  j["distinct_gradient"] = q.gradient;
  j["distinct_curl"] = q.curl;
  em.emit(j);
  return 0;
}

int cmd_decompose(const Config& c, const Emitter& em) {
  const SimplicialComplex sc = io::read_complex(c.sc_path);
  const Eigen::VectorXd f = io::read_signal(c.signal_path, sc);
  const HodgeSpectrum s = hodge_spectrum(sc);
  const HodgeComponents h = hodge_decompose(s, f);
  const Embeddings e = sft(s, f);
  em.emit(Json{{"gradient", vector_json(h.gradient)},
               {"curl", vector_json(h.curl)},
               {"harmonic", vector_json(h.harmonic)},
               {"divergence", vector_json(divergence(sc, f))},
               {"curl_per_triangle", vector_json(curl(sc, f))},
               {"embedding_norms",
                {{"harmonic", e.harmonic.norm()}, {"gradient", e.gradient.norm()}, {"curl", e.curl.norm()}}}});
  return 0;
}

int cmd_design(const Config& c, const Emitter& em, std::ostream& err) {
  require(c.spec_path, "--spec");
  ResponseSpec spec = io::read_spec(c.spec_path);
  std::optional<SimplicialComplex> sc;
  if (!c.sc_path.empty()) sc = io::read_complex(c.sc_path);
  const std::size_t l1 = c.order_given ? c.order : c.order_lower;
  const std::size_t l2 = c.order_given ? c.order : c.order_upper;

  if (c.method == "cheb") {
    complete_domains(spec, sc, c);
    const double lmax_l = spec.gradient ? spec.gradient->lambda_max() : 0.0;
    const double lmax_u = spec.curl ? spec.curl->lambda_max() : 0.0;
    const ChebyshevFilter f = chebyshev_design(spec, lmax_l, lmax_u, l1, l2, c.quadrature);
    em.emit(io::filter_to_json(f));
    return 0;
  }

  DesignResult d;
  if (c.method == "grid") {
    complete_domains(spec, sc, c);
    d = grid_design(spec, c.samples, c.samples, l1, l2, parse_mode(c.mode));
  } else if (c.method == "ls" || c.method == "tied") {
    if (!sc) usage("--sc is required for LS designs");
    const DistinctFrequencies q = distinct_frequencies(hodge_spectrum(*sc), c.group_tol);
    const TabulatedTargets t = tabulate(spec, q.gradient, q.curl);
    if (c.method == "tied") {
      d = ls_tied(q.gradient, q.curl, t, c.order_given ? c.order : std::max(l1, l2));
    } else if (parse_mode(c.mode) == DesignMode::Joint) {
      d = ls_joint(q.gradient, q.curl, t, l1, l2);
    } else {
      d = ls_decoupled(q.gradient, q.curl, t, l1, l2);
    }
  } else {
    usage("--method must be ls, tied, grid or cheb");
  }
  for (const auto& w : d.warnings) err << "warning: " << w << "\n";
  Json j = io::filter_to_json(d.coefficients);
  j["residual"] = d.residual;
  j["condition_number"] = d.condition_number;
  em.emit(j);
  return 0;
}

int cmd_response(const Config& c, const Emitter& em) {
  require(c.filter_path, "--filter");
  const HodgeSpectrum s = hodge_spectrum(io::read_complex(c.sc_path));
  const io::AnyFilter f = io::read_filter(c.filter_path);
  if (const auto* ls = std::get_if<FilterCoefficients>(&f)) {
    em.emit(io::response_csv(frequency_response(*ls, s)));
  } else {
    em.emit(io::response_csv(std::get<ChebyshevFilter>(f), s));
  }
  return 0;
}

int cmd_filter(const Config& c, const Emitter& em) {
  require(c.filter_path, "--filter");
  const SimplicialComplex sc = io::read_complex(c.sc_path);
  const Eigen::VectorXd x = io::read_signal(c.signal_path, sc);
  const io::AnyFilter f = io::read_filter(c.filter_path);
  const Eigen::VectorXd y = std::holds_alternative<FilterCoefficients>(f)
                                ? apply(sc, std::get<FilterCoefficients>(f), x)
                                : chebyshev_apply(std::get<ChebyshevFilter>(f), sc, x);
  em.emit(io::signal_to_csv(y));
  return 0;
}

int cmd_extract(const Config& c, const Emitter& em, std::ostream& out) {
  const SimplicialComplex sc = io::read_complex(c.sc_path);
  const Eigen::VectorXd x = io::read_signal(c.signal_path, sc);
  ExtractionOptions o;
  const std::string m = c.method.empty() ? "spectral" : c.method;
  if (m == "spectral") o.method = ExtractionMethod::Spectral;
  else if (m == "ls") o.method = ExtractionMethod::FilterLs;
  else if (m == "tied") { o.method = ExtractionMethod::FilterLs; o.tied = true; }
  else if (m == "onesided") o.method = ExtractionMethod::FilterOneSided;
  else if (m == "cheb") o.method = ExtractionMethod::FilterCheb;
  else usage("--method must be spectral, ls, tied, onesided or cheb");
  o.order_lower = c.order_given ? c.order : c.order_lower;
  o.order_upper = c.order_given ? c.order : c.order_upper;
  o.mode = parse_mode(c.mode);
  o.group_tol = c.group_tol;
  if (c.order_given) o.cheb_order = c.order;
  o.logistic_k = c.k;
  o.logistic_lambda0 = c.lambda0;
  o.power_steps = c.power_steps;
  o.seed = c.seed;
  const ExtractionResult r = extract_component(sc, hodge_spectrum(sc), x, parse_component(c.component), o);
  em.emit(io::signal_to_csv(r.flow));
  if (!c.out_path.empty()) {
    out << io::dump_json(Json{{"nrmse", r.nrmse}, {"warnings", warnings_json(r.warnings)}});
  }
  return 0;
}

int cmd_denoise(const Config& c, const Emitter& em) {
  const SimplicialComplex sc = io::read_complex(c.sc_path);
  const Eigen::VectorXd x = io::read_signal(c.signal_path, sc);
  DenoiseOptions o;
  o.mu = c.mu;
  if (c.regularizer == "hodge") o.regularizer = Regularizer::HodgeLaplacian;
  else if (c.regularizer == "edge") o.regularizer = Regularizer::EdgeLaplacian;
  else usage("--regularizer must be edge or hodge");
  const std::string m = c.method.empty() ? "exact" : c.method;
  if (m == "exact") o.method = DenoiseMethod::Exact;
  else if (m == "grid") o.method = DenoiseMethod::Grid;
  else if (m == "cheb") o.method = DenoiseMethod::Cheb;
  else usage("--method must be exact, grid or cheb");
  if (c.order_given) o.order = c.order;
  o.samples = c.samples;
  o.power_steps = c.power_steps;
  o.seed = c.seed;
  em.emit(io::signal_to_csv(denoise(sc, x, o)));
  return 0;
}

Json pagerank_json(const PageRankResult& r, double residual) {
  return Json{{"edge", r.edge},
              {"pi", vector_json(r.pi)},
              {"norm_total", r.norm_total},
              {"norm_H", r.norm_harmonic},
              {"norm_G", r.norm_gradient},
              {"norm_C", r.norm_curl},
              {"rel_H", r.rel_harmonic()},
              {"rel_G", r.rel_gradient()},
              {"rel_C", r.rel_curl()},
              {"residual", residual}};
}

int cmd_pagerank(const Config& c, const Emitter& em, std::ostream& err) {
  const SimplicialComplex sc = io::read_complex(c.sc_path);
  PageRankOptions o;
  o.gamma = c.gamma;
  const std::string m = c.method.empty() ? "exact" : c.method;
  if (m == "exact") {
    o.method = PageRankMethod::Exact;
  } else if (m == "grid") {
    o.method = PageRankMethod::Grid;
    o.order = c.order_given ? c.order : 9;
  } else if (m == "cheb") {
    o.method = PageRankMethod::Cheb;
    o.order = c.order_given ? c.order : 61;
  } else {
    usage("--method must be exact, grid or cheb");
  }
  o.samples = c.samples;
  const EdgePageRank pr(sc, o);
  for (const auto& w : pr.warnings()) err << "warning: " << w << "\n";
  if (c.all) {
    em.emit(io::pagerank_csv(sc, pr.solve_all()));
    return 0;
  }
  if (c.edge < 0) usage("pass --edge or --all");
  const PageRankResult r = pr.solve(static_cast<Index>(c.edge));
  em.emit(pagerank_json(r, pr.residual(r)));
  return 0;
}

int cmd_arbitrage(const Config& c, const std::string& action, const Emitter& em, std::ostream& err) {
  require(c.market_path, "--market");
  const ExchangeMarket m = io::read_market(c.market_path);
  const QuoteConvention conv = parse_convention(c.convention);
  if (action == "check") {
    Json list = Json::array();
    for (const auto& t : arbitrage_check(m, c.threshold, conv)) {
      list.push_back(Json{{"triangle", {m.currencies[t.currencies[0]], m.currencies[t.currencies[1]],
                                        m.currencies[t.currencies[2]]}},
                          {"curl", t.curl},
                          {"roundtrip", t.roundtrip},
                          {"gain", t.gain}});
    }
    em.emit(Json{{"threshold", c.threshold}, {"count", list.size()}, {"triangles", list}});
    return 0;
  }
  const CorrectionResult r = arbitrage_correct(m, conv);
  for (const auto& w : r.warnings) err << "warning: " << w << "\n";
  em.emit(io::market_to_csv(r.market));
  return 0;
}

int cmd_fixtures(const Config& c, const Emitter& em) {
  if (c.kind == "toy") em.emit(io::complex_to_json(fixtures::toy_complex()));
  else if (c.kind == "london") em.emit(io::complex_to_json(fixtures::road_network(fixtures::kLondonShape, c.seed)));
  else if (c.kind == "chicago") em.emit(io::complex_to_json(fixtures::road_network(fixtures::kChicagoShape, c.seed)));
  else if (c.kind == "random") em.emit(io::complex_to_json(fixtures::random_clique_complex(c.nodes, c.edge_probability, c.seed)));
  else if (c.kind == "market") em.emit(io::market_to_csv(fixtures::seven_currency_market()));
  else usage("--kind must be toy, london, chicago, random or market");
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simplicial convolutional filters: spectra, design and applications", "scf"};
  app.require_subcommand(1);
  Config c;

  auto add_sc = [&](CLI::App* s) { s->add_option("--sc", c.sc_path, "Simplicial complex JSON")->required(); };
  auto add_out = [&](CLI::App* s) { s->add_option("--out", c.out_path, "Output file (default: stdout)"); };
  auto add_signal = [&](CLI::App* s) { s->add_option("--signal", c.signal_path, "Edge flow CSV")->required(); };
  auto add_orders = [&](CLI::App* s) {
    s->add_option("--order-lower", c.order_lower, "Lower (gradient) filter order");
    s->add_option("--order-upper", c.order_upper, "Upper (curl) filter order");
    s->add_option("--order", c.order, "Both orders, or the Chebyshev/grid order");
  };
  auto add_common = [&](CLI::App* s) {
    s->add_option("--group-tol", c.group_tol, "Eigenvalue grouping tolerance")->check(CLI::NonNegativeNumber);
    s->add_option("--power-steps", c.power_steps, "Power iterations for lambda_max")->check(CLI::PositiveNumber);
    s->add_option("--seed", c.seed, "Random seed");
  };

  auto* info = app.add_subcommand("info", "Complex statistics");
  add_sc(info); add_out(info); add_common(info);
  auto* spectrum = app.add_subcommand("spectrum", "Hodge spectrum as JSON");
  add_sc(spectrum); add_out(spectrum); add_common(spectrum);
  auto* decompose = app.add_subcommand("decompose", "Hodge decomposition of an edge flow");
  add_sc(decompose); add_signal(decompose); add_out(decompose);

  auto* design = app.add_subcommand("design", "Design filter coefficients from a response spec");
  design->add_option("--method", c.method, "ls, tied, grid or cheb")->required();
  design->add_option("--spec", c.spec_path, "Response spec JSON")->required();
  design->add_option("--sc", c.sc_path, "Simplicial complex JSON");
  design->add_option("--mode", c.mode, "joint or decoupled");
  design->add_option("--samples", c.samples, "Grid samples per side");
  design->add_option("--quadrature", c.quadrature, "Chebyshev quadrature nodes (0: default)");
  add_orders(design); add_out(design); add_common(design);

  auto* response = app.add_subcommand("response", "Frequency response CSV of a filter");
  add_sc(response); add_out(response);
  response->add_option("--filter", c.filter_path, "Filter JSON")->required();

  auto* filter = app.add_subcommand("filter", "Apply a filter to an edge flow");
  add_sc(filter); add_signal(filter); add_out(filter);
  filter->add_option("--filter", c.filter_path, "Filter JSON")->required();

  auto* extract = app.add_subcommand("extract", "Extract a Hodge component");
  add_sc(extract); add_signal(extract); add_out(extract); add_orders(extract); add_common(extract);
  extract->add_option("--component", c.component, "gradient, curl or harmonic");
  extract->add_option("--method", c.method, "spectral, ls, tied, onesided or cheb");
  extract->add_option("--mode", c.mode, "joint or decoupled");
  extract->add_option("--k", c.k, "Logistic growth rate (cheb)");
  extract->add_option("--lambda0", c.lambda0, "Logistic midpoint (cheb)");

  auto* denoise_cmd = app.add_subcommand("denoise", "Regularized denoising of an edge flow");
  add_sc(denoise_cmd); add_signal(denoise_cmd); add_out(denoise_cmd); add_orders(denoise_cmd);
  add_common(denoise_cmd);
  denoise_cmd->add_option("--mu", c.mu, "Regularization weight")->check(CLI::PositiveNumber);
  denoise_cmd->add_option("--regularizer", c.regularizer, "edge or hodge");
  denoise_cmd->add_option("--method", c.method, "exact, grid or cheb");
  denoise_cmd->add_option("--samples", c.samples, "Grid samples per side");

  auto* pagerank = app.add_subcommand("pagerank", "Edge PageRank on the normalized Hodge Laplacian");
  add_sc(pagerank); add_out(pagerank); add_orders(pagerank);
  pagerank->add_option("--gamma", c.gamma, "Teleport weight")->check(CLI::PositiveNumber);
  pagerank->add_option("--edge", c.edge, "Edge index");
  pagerank->add_flag("--all", c.all, "All edges, CSV output");
  pagerank->add_option("--method", c.method, "exact, grid or cheb");
  pagerank->add_option("--samples", c.samples, "Grid samples per side");

  auto* arbitrage = app.add_subcommand("arbitrage", "Exchange-market arbitrage");
  arbitrage->require_subcommand(1);
  auto* check = arbitrage->add_subcommand("check", "List triangles with roundtrip gain above a threshold");
  auto* correct = arbitrage->add_subcommand("correct", "Arbitrage-free rates by gradient extraction");
  for (auto* s : {check, correct}) {
    s->add_option("--market", c.market_path, "Market CSV")->required();
    s->add_option("--convention", c.convention, "upper or symmetric");
    add_out(s);
  }
  check->add_option("--threshold", c.threshold, "Gain threshold")->check(CLI::NonNegativeNumber);

  auto* fixtures_cmd = app.add_subcommand("fixtures", "Fixture generators");
  fixtures_cmd->require_subcommand(1);
  auto* generate = fixtures_cmd->add_subcommand("generate", "Write a generated fixture");
  generate->add_option("--kind", c.kind, "toy, london, chicago, random or market");
  generate->add_option("--nodes", c.nodes, "Nodes (random)");
  generate->add_option("--edge-probability", c.edge_probability, "Edge probability (random)");
  generate->add_option("--seed", c.seed, "Random seed");
  add_out(generate);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  c.order_given = false;
  for (auto* s : {design, extract, denoise_cmd, pagerank}) {
    if (s->parsed() && s->count("--order") > 0) c.order_given = true;
  }

  const Emitter em(c, out);
  try {
    if (info->parsed()) return cmd_info(c, em);
    if (spectrum->parsed()) return cmd_spectrum(c, em);
    if (decompose->parsed()) return cmd_decompose(c, em);
    if (design->parsed()) return cmd_design(c, em, err);
    if (response->parsed()) return cmd_response(c, em);
    if (filter->parsed()) return cmd_filter(c, em);
    if (extract->parsed()) return cmd_extract(c, em, out);
    if (denoise_cmd->parsed()) return cmd_denoise(c, em);
    if (pagerank->parsed()) return cmd_pagerank(c, em, err);
    if (check->parsed()) return cmd_arbitrage(c, "check", em, err);
    if (correct->parsed()) return cmd_arbitrage(c, "correct", em, err);
    if (generate->parsed()) return cmd_fixtures(c, em);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_data_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  err << "error: no command\n";
  return 1;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace scf::cli
