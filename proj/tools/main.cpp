#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "iepl/graph.hpp"
#include "iepl/json_writer.hpp"
#include "iepl/minvar.hpp"
#include "iepl/multiplicity.hpp"
#include "iepl/realizability.hpp"
#include "iepl/sampler.hpp"
#include "iepl/spectral.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotRealizable = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitUsage = 64;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

iepl::Graph parse_graph(const std::vector<std::string>& tokens) {
  const std::string joined = join(tokens);
  if (auto g = iepl::Graph::from_name(joined)) return *g;
  if (tokens.size() == 1 && std::filesystem::exists(tokens[0])) {
    std::ifstream in(tokens[0]);
    if (!in) throw std::invalid_argument("cannot open graph file " + tokens[0]);
    return iepl::Graph::from_text(in);
  }
  throw std::invalid_argument(
      "unrecognized graph '" + joined +
      "'; expected a name (P5, C4, K6, K1,3, paw, K4-e, doublestar p q) "
      "or the path of an edge-list file");
}

iepl::JsonValue to_json(const Eigen::VectorXd& v) {
  iepl::JsonValue arr = iepl::JsonValue::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(iepl::JsonValue(v(i)));
  return arr;
}

iepl::JsonValue to_json(const Eigen::MatrixXd& m) {
  iepl::JsonValue rows = iepl::JsonValue::array();
  for (int i = 0; i < m.rows(); ++i) {
    iepl::JsonValue row = iepl::JsonValue::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(iepl::JsonValue(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

iepl::JsonValue graph_json(const iepl::Graph& g) {
  iepl::JsonValue out = iepl::JsonValue::object();
  if (!g.name().empty()) out["name"] = iepl::JsonValue(g.name());
  out["vertices"] = iepl::JsonValue(g.vertex_count());
  iepl::JsonValue edges = iepl::JsonValue::array();
  for (const auto& e : g.edges()) {
    iepl::JsonValue pair = iepl::JsonValue::array();
    pair.push_back(iepl::JsonValue(e.u + 1));
    pair.push_back(iepl::JsonValue(e.v + 1));
    edges.push_back(std::move(pair));
  }
  out["edges"] = std::move(edges);
  return out;
}

void emit(const iepl::JsonValue& v) { std::cout << v.dump(2) << "\n"; }

// ---- check / realize -------------------------------------------------

// What a 4-vertex family can say about a target: the answer or "the theory
// does not decide this shape".
struct FourVertexShape {
  bool triple = false;      // l2 = l3 = l4
  bool decided = false;     // two distinct positives
  double lambda = 0.0;      // repeated value
  double mu = 0.0;          // simple value
};

FourVertexShape classify_four(const iepl::TargetSpectrum& t) {
  const double tol = 1e-9 * std::max(1.0, t.values(3));
  const bool e23 = std::abs(t.values(2) - t.values(1)) <= tol;
  const bool e34 = std::abs(t.values(3) - t.values(2)) <= tol;
  FourVertexShape s;
  if (e23 && e34) {
    s.triple = true;
  } else if (e23) {
    s = {false, true, t.values(1), t.values(3)};
  } else if (e34) {
    s = {false, true, t.values(2), t.values(1)};
  }
  return s;
}

struct FamilyDispatch {
  std::string canonical;
  iepl::Graph graph;
  enum class Kind { Star, P3, Complete, ThreeDistinct } kind;
};

FamilyDispatch dispatch_family(const std::string& family, int n) {
  using Kind = FamilyDispatch::Kind;
  const std::string f = lower(family);
  if (f == "star") {
    if (n < 2) throw std::invalid_argument("star targets need n >= 2");
    return {"star", iepl::Graph::star(n), Kind::Star};
  }
  if (f == "p3" || f == "path3") {
    if (n != 3) throw std::invalid_argument("p3 targets need exactly 3 values");
    return {"p3", iepl::Graph::path(3), Kind::P3};
  }
  if (f == "kn" || f == "complete") {
    if (n < 2) throw std::invalid_argument("complete-graph targets need n >= 2");
    return {"kn", iepl::Graph::complete(n), Kind::Complete};
  }
  if (f == "paw") {
    if (n != 4) throw std::invalid_argument("paw targets need exactly 4 values");
    return {"paw", iepl::Graph::paw(), Kind::ThreeDistinct};
  }
  if (f == "c4") {
    if (n != 4) throw std::invalid_argument("c4 targets need exactly 4 values");
    return {"c4", iepl::Graph::cycle(4), Kind::ThreeDistinct};
  }
  if (f == "k4-e" || f == "k4e") {
    if (n != 4) throw std::invalid_argument("k4-e targets need exactly 4 values");
    return {"k4-e", iepl::Graph::k4_minus_e(), Kind::ThreeDistinct};
  }
  // K<n> and K1,<k> shorthands delegate to the general families.
  if (auto g = iepl::Graph::from_name(family)) {
    const auto deg = g->degrees();
    const int maxdeg = *std::max_element(deg.begin(), deg.end());
    if (g->edge_count() == n * (n - 1) / 2 && g->vertex_count() == n) {
      return {"kn", *g, Kind::Complete};
    }
    if (maxdeg == g->vertex_count() - 1 &&
        g->edge_count() == g->vertex_count() - 1 && g->vertex_count() == n) {
      return {"star", *g, Kind::Star};
    }
  }
  throw std::invalid_argument(
      "unknown family '" + family +
      "'; expected star, p3, kn, paw, c4 or k4-e");
}

// Answers check for the dispatched family; throws UnsupportedFamilyError
// for shapes the theory does not decide.
bool run_check(const FamilyDispatch& d, const iepl::TargetSpectrum& t) {
  using Kind = FamilyDispatch::Kind;
  switch (d.kind) {
    case Kind::Star:
      return iepl::check_star(t);
    case Kind::P3:
      return t.values(2) >= 3.0 * t.values(1) -
                                1e-12 * std::max(1.0, t.values(2));
    case Kind::Complete:
      return true;
    case Kind::ThreeDistinct: {
      const FourVertexShape s = classify_four(t);
      if (s.triple) return false;  // no 4-vertex catalog contains (1,3)
      if (!s.decided) {
        throw iepl::UnsupportedFamilyError(
            "all-distinct 4-vertex targets are outside the solved families");
      }
      return iepl::check_three_distinct(d.graph, s.lambda, s.mu);
    }
  }
  return false;
}

iepl::RealizationWitness run_realize(const FamilyDispatch& d,
                                     const iepl::TargetSpectrum& t) {
  using Kind = FamilyDispatch::Kind;
  switch (d.kind) {
    case Kind::Star:
      return iepl::realize_star(t);
    case Kind::P3:
      return iepl::realize_p3(t);
    case Kind::Complete:
      return iepl::realize_kn(t);
    case Kind::ThreeDistinct: {
      const FourVertexShape s = classify_four(t);
      if (s.triple) {
        throw iepl::NotRealizableError(
            "no 4-vertex family attains the ordered multiplicity list (1,3)");
      }
      if (!s.decided) {
        throw iepl::UnsupportedFamilyError(
            "all-distinct 4-vertex targets are outside the solved families");
      }
      return iepl::realize_three_distinct(d.graph, s.lambda, s.mu);
    }
  }
  throw std::logic_error("unreachable");
}

int cmd_check(const std::string& family, const std::vector<double>& values) {
  const iepl::TargetSpectrum t(values);
  const FamilyDispatch d = dispatch_family(family, t.n());
  iepl::JsonValue out = iepl::JsonValue::object();
  out["family"] = iepl::JsonValue(d.canonical);
  out["target"] = to_json(t.values);
  const bool ok = run_check(d, t);
  out["realizable"] = iepl::JsonValue(ok);
  emit(out);
  return ok ? kExitOk : kExitNotRealizable;
}

int cmd_realize(const std::string& family, const std::vector<double>& values,
                bool with_matrix) {
  const iepl::TargetSpectrum t(values);
  const FamilyDispatch d = dispatch_family(family, t.n());
  try {
    const iepl::RealizationWitness w = run_realize(d, t);
    iepl::JsonValue out = iepl::JsonValue::object();
    out["family"] = iepl::JsonValue(d.canonical);
    out["target"] = to_json(t.values);
    out["realizable"] = iepl::JsonValue(true);
    out["graph"] = graph_json(w.graph);
    out["weights"] = to_json(w.weights);
    out["achieved"] = to_json(w.achieved.values);
    if (with_matrix) out["matrix"] = to_json(w.matrix);
    emit(out);
    return kExitOk;
  } catch (const iepl::NotRealizableError& e) {
    iepl::JsonValue out = iepl::JsonValue::object();
    out["family"] = iepl::JsonValue(d.canonical);
    out["target"] = to_json(t.values);
    out["realizable"] = iepl::JsonValue(false);
    out["reason"] = iepl::JsonValue(e.what());
    emit(out);
    return kExitNotRealizable;
  }
}

int cmd_lists(const std::string& family) {
  const auto spec = iepl::FamilySpec::parse(family);
  if (!spec) {
    throw iepl::UnsupportedFamilyError(
        "no multiplicity-list catalog for '" + family +
        "'; known: P<n>, K<n>, K1,<k>, paw, C4, K4-e");
  }
  const auto lists = iepl::allowed_lists(*spec);
  iepl::JsonValue out = iepl::JsonValue::object();
  out["family"] = iepl::JsonValue(family);
  out["n"] = iepl::JsonValue(spec->n);
  iepl::JsonValue arr = iepl::JsonValue::array();
  for (const auto& l : lists) {
    iepl::JsonValue one = iepl::JsonValue::array();
    for (int v : l) one.push_back(iepl::JsonValue(v));
    arr.push_back(std::move(one));
  }
  out["lists"] = std::move(arr);
  emit(out);
  return kExitOk;
}

int cmd_mv(const std::vector<std::string>& graph_tokens,
           const std::string& solver, int limit, double tol, long max_iter,
           bool exact_step) {
  const iepl::Graph g = parse_graph(graph_tokens);
  const int m = g.edge_count();

  std::string chosen = solver;
  if (chosen == "auto") chosen = m <= limit ? "exact" : "descent";

  iepl::MinVarResult r;
  if (chosen == "exact") {
    r = iepl::minvar_exact(g, limit);
  } else if (chosen == "descent") {
    iepl::DescentOptions opt;
    opt.tol = tol;
    opt.max_iter = max_iter;
    opt.exact_step = exact_step;
    r = iepl::minvar_descent(g, opt);
  } else {
    throw std::invalid_argument("--solver must be exact, descent or auto");
  }

  iepl::JsonValue out = iepl::JsonValue::object();
  out["graph"] = graph_json(g);
  out["solver"] = iepl::JsonValue(chosen);
  out["variance"] = iepl::JsonValue(r.variance);
  out["objective"] = iepl::JsonValue(r.objective);
  out["weights"] = to_json(r.weights);
  iepl::JsonValue supp = iepl::JsonValue::array();
  for (int i : r.support) supp.push_back(iepl::JsonValue(i));
  out["support"] = std::move(supp);
  out["full_support_eligible"] = iepl::JsonValue(r.full_support_eligible);
  out["boundary"] = iepl::JsonValue(r.boundary);
  out["iterations"] = iepl::JsonValue(r.iterations);
  out["converged"] = iepl::JsonValue(r.converged);
  out["eta"] = iepl::JsonValue(r.eta_final);
  out["average_min_variance"] = iepl::JsonValue(iepl::amv(g));
  out["uniform_variance"] = iepl::JsonValue(iepl::var_one(g));
  if (auto cf = iepl::closed_form_line_regular(g)) {
    out["line_regular_closed_form"] = iepl::JsonValue(*cf);
  }
  emit(out);
  return kExitOk;
}

int cmd_sample(const std::vector<std::string>& graph_tokens, long count,
               uint64_t seed, const std::string& out_path, bool anchor) {
  const iepl::Graph g = parse_graph(graph_tokens);
  const iepl::SampleRun run = iepl::sample_spectra(g, count, seed, anchor);
  if (out_path.empty()) {
    iepl::write_csv(run, std::cout);
  } else {
    iepl::export_csv(run, out_path);
  }
  return kExitOk;
}

int cmd_distinct(const std::vector<std::string>& graph_tokens) {
  const iepl::Graph g = parse_graph(graph_tokens);
  const iepl::RealizationWitness w = iepl::construct_all_distinct(g);
  double min_gap = std::numeric_limits<double>::infinity();
  for (int i = 1; i < w.achieved.size(); ++i) {
    min_gap = std::min(min_gap, w.achieved.values(i) - w.achieved.values(i - 1));
  }
  iepl::JsonValue out = iepl::JsonValue::object();
  out["graph"] = graph_json(g);
  out["weights"] = to_json(w.weights);
  out["spectrum"] = to_json(w.achieved.values);
  out["distinct"] = iepl::JsonValue(w.achieved.size());
  out["min_gap"] = iepl::JsonValue(min_gap);
  emit(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inverse eigenvalue tools for weighted graph Laplacians"};
  app.require_subcommand(1);

  // check / realize
  std::string family;
  std::vector<double> target;
  auto* check = app.add_subcommand(
      "check", "decide whether a spectrum is attainable on a family");
  check->add_option("family", family, "star, p3, kn, paw, c4 or k4-e")
      ->required();
  check
      ->add_option("spectrum", target,
                   "ascending eigenvalues, starting with 0")
      ->required()
      ->expected(-1);

  std::string r_family;
  std::vector<double> r_target;
  bool with_matrix = false;
  auto* realize = app.add_subcommand(
      "realize", "produce weights whose Laplacian has the given spectrum");
  realize->add_option("family", r_family, "star, p3, kn, paw, c4 or k4-e")
      ->required();
  realize
      ->add_option("spectrum", r_target,
                   "ascending eigenvalues, starting with 0")
      ->required()
      ->expected(-1);
  realize->add_flag("--matrix", with_matrix,
                    "include the realized Laplacian matrix");

  std::string l_family;
  auto* lists = app.add_subcommand(
      "lists", "attainable ordered multiplicity lists of a family");
  lists->add_option("family", l_family, "P<n>, K<n>, K1,<k>, paw, C4 or K4-e")
      ->required();

  std::vector<std::string> mv_graph;
  std::string solver = "auto";
  int limit = 20;
  double tol = 1e-10;
  long max_iter = 1000000;
  bool exact_step = false;
  auto* mv = app.add_subcommand(
      "mv", "minimum spectral variance over unit-total edge weightings");
  mv->add_option("graph", mv_graph, "graph name or edge-list file")
      ->required()
      ->expected(-1);
  mv->add_option("--solver", solver, "exact, descent or auto (default)");
  mv->add_option("--limit", limit, "edge cap for the exhaustive scan");
  mv->add_option("--tol", tol, "descent stationarity tolerance");
  mv->add_option("--max-iter", max_iter, "descent iteration cap");
  mv->add_flag("--exact-step", exact_step,
               "use the per-pair curvature step in descent");

  std::vector<std::string> s_graph;
  long count = 100000;
  uint64_t seed = 0;
  std::string out_path;
  bool anchor = false;
  auto* sample = app.add_subcommand(
      "sample", "Monte Carlo spectra of random weightings, CSV output");
  sample->add_option("graph", s_graph, "graph name or edge-list file")
      ->required()
      ->expected(-1);
  sample->add_option("--count", count, "number of samples (default 100000)");
  sample->add_option("--seed", seed, "RNG seed (default 0)");
  sample->add_option("--out", out_path,
                     "CSV path; writes <path>.meta.json too (default stdout)");
  sample->add_flag("--anchor", anchor,
                   "replace sample 0 with the all-ones weighting");

  std::vector<std::string> d_graph;
  auto* distinct = app.add_subcommand(
      "distinct", "weights giving n distinct Laplacian eigenvalues");
  distinct->add_option("graph", d_graph, "graph name or edge-list file")
      ->required()
      ->expected(-1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(family, target);
    if (realize->parsed()) return cmd_realize(r_family, r_target, with_matrix);
    if (lists->parsed()) return cmd_lists(l_family);
    if (mv->parsed())
      return cmd_mv(mv_graph, solver, limit, tol, max_iter, exact_step);
    if (sample->parsed())
      return cmd_sample(s_graph, count, seed, out_path, anchor);
    if (distinct->parsed()) return cmd_distinct(d_graph);
  } catch (const iepl::UnsupportedFamilyError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const iepl::NotRealizableError& e) {
    std::cerr << "not realizable: " << e.what() << "\n";
    return kExitNotRealizable;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
