// mgv: exact harmonic invariants of polarized metrized graphs, the explicit
// point-count bound constants, and a seeded verification campaign.

#include "CLI11.hpp"
#include "io.hpp"
#include "version.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace mg;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write '" + out_path + "'");
    out << text << "\n";
  }
}

int run_invariants(const std::string& path, int approx, const std::string& out_path) {
  GraphFile file = parse_graph_json(slurp(path));
  PolarizedGraph pg = file.polarized();
  InvariantReport report = invariant_report(pg);
  Json payload = invariant_report_json(report, approx);
  emit(output_record("invariants", std::move(payload), digest_hex(serialize_graph(pg))).dump(2),
       out_path);
  return report.all_pass() ? 0 : 1;
}

int run_bounds(int genus, const std::string& eps_text, const CountBoundFlags& flags, int approx,
               const std::string& out_path) {
  auto eps = parse_rat(eps_text);
  if (!eps) throw InvalidEpsilon("malformed epsilon '" + eps_text + "'");
  BoundReport report = count_bound(genus, *eps, flags);
  emit(output_record("bounds", bound_report_json(report, flags, approx)).dump(2), out_path);
  return 0;
}

int run_verify(std::uint64_t seed, int count, const GeneratorParams& params, int threads,
               const std::string& format, int approx, const std::string& out_path) {
  CampaignReport report = campaign(seed, count, params, threads);
  if (format == "csv")
    emit(campaign_report_csv(report), out_path);
  else
    emit(output_record("verify", campaign_report_json(report, approx)).dump(2), out_path);
  return report.failures.empty() ? 0 : 1;
}

int run_green(const std::string& path, const std::string& measure_text, const std::string& x_text,
              const std::string& y_text, int approx, const std::string& out_path) {
  GraphFile file = parse_graph_json(slurp(path));

  // resolve the working graph and measure
  MetrizedGraph base = file.graph;
  std::vector<GraphPoint> extra;  // points the measure needs as vertices
  enum class Mode { Canonical, Tau, Dirac } mode;
  if (measure_text == "canonical")
    mode = Mode::Canonical;
  else if (measure_text == "tau")
    mode = Mode::Tau;
  else if (measure_text.rfind("dirac:", 0) == 0) {
    mode = Mode::Dirac;
    extra.push_back(parse_point(base, measure_text.substr(6)));
  } else {
    throw ParseError("unknown measure '" + measure_text + "' (canonical|tau|dirac:<point>)");
  }

  // The working graph refines the input graph at the measure's own support
  // (interior polarization points, the dirac point); user points are parsed
  // on the input graph and mapped through the same refinement.
  std::vector<GraphPoint> cut_points = extra;
  if (mode == Mode::Canonical)
    for (const auto& [p, m_val] : file.polarization) cut_points.push_back(p);
  Subdivision sub(base, cut_points);
  MetrizedGraph work = sub.fine();
  Measure mu = Measure::zero(work);
  std::string measure_name = measure_text;
  if (mode == Mode::Canonical) {
    std::vector<std::pair<GraphPoint, int>> pairs;
    for (std::size_t i = 0; i < file.polarization.size(); ++i)
      pairs.emplace_back(GraphPoint::vertex(sub.vertex_of(static_cast<int>(i))),
                         file.polarization[i].second);
    PolarizedGraph pg = PolarizedGraph::make(work, pairs);
    mu = canonical_measure(pg);
  } else if (mode == Mode::Tau) {
    mu = tau_measure(work);
  } else {
    mu = Measure::dirac(work, sub.vertex_of(0));
  }
  auto map_user_point = [&](const GraphPoint& p) { return sub.to_fine(p); };

  Json payload;
  payload["measure"] = measure_name;
  if (!x_text.empty() && !y_text.empty()) {
    GraphPoint x = map_user_point(parse_point(base, x_text));
    GraphPoint y = map_user_point(parse_point(base, y_text));
    Rat value = green_value(work, mu, x, y);
    payload["value"] = rat_str(value);
    if (approx >= 0) payload["value_approx"] = rat_decimal(value, approx);
  } else {
    PiecewiseQuadratic diag = diagonal_profile(work, mu);
    Json table = Json::array();
    for (EdgeId e = 0; e < work.edge_count(); ++e) {
      const auto& ed = work.edge(e);
      const auto& q = diag.poly(e);
      table.push_back({{"edge", e},
                       {"u", work.vertex_name(ed.u)},
                       {"v", work.vertex_name(ed.w)},
                       {"length", rat_str(ed.length)},
                       {"a", rat_str(q.a)},
                       {"b", rat_str(q.b)},
                       {"c", rat_str(q.c)}});
    }
    payload["diagonal"] = std::move(table);
    Json vertex_values = Json::object();
    for (VertexId v = 0; v < work.vertex_count(); ++v)
      vertex_values[work.vertex_name(v)] = rat_str(diag.vertex_value(v));
    payload["diagonal_at_vertices"] = std::move(vertex_values);
    if (!x_text.empty()) {
      GraphPoint x = map_user_point(parse_point(base, x_text));
      Rat value = diag.value(x);
      payload["value_at_x"] = rat_str(value);
      if (approx >= 0) payload["value_at_x_approx"] = rat_decimal(value, approx);
    }
  }
  emit(output_record("green", std::move(payload)).dump(2), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact harmonic invariants of polarized metrized graphs"};
  app.set_version_flag("--version", mg::kVersion);
  app.require_subcommand(1);

  std::string file_path, out_path;
  int approx = -1;

  auto* inv = app.add_subcommand("invariants", "invariant vector and identity audit of a graph file");
  inv->add_option("file", file_path, "graph file (JSON)")->required();
  inv->add_option("--approx", approx, "decimal digits alongside exact values");
  inv->add_option("--out", out_path, "write the report to a file");

  int genus = 2;
  std::string eps_text = "0";
  mg::CountBoundFlags flags;
  auto* bounds = app.add_subcommand("bounds", "explicit point-count bound constants");
  bounds->add_option("--genus", genus, "genus g >= 2")->required();
  bounds->add_option("--epsilon", eps_text, "height fraction in [0, 1/(4(g^2-1)))");
  bounds->add_flag("--tree", flags.tree, "everywhere-tree (potentially good Jacobian reduction) constants");
  bounds->add_flag("--halving", flags.halving, "char 0 / hyperelliptic halving (g >= 3)");
  bounds->add_flag("--good-reduction", flags.good_reduction, "everywhere potentially good reduction");
  bounds->add_option("--approx", approx, "decimal digits alongside exact values");
  bounds->add_option("--out", out_path, "write the report to a file");

  std::uint64_t seed = 42;
  int count = 100, threads = 0;
  std::string format = "json";
  mg::GeneratorParams params;
  auto* verify = app.add_subcommand("verify", "seeded random identity/inequality campaign");
  verify->add_option("--seed", seed, "campaign seed");
  verify->add_option("--count", count, "number of random graphs")->required();
  verify->add_option("--max-vertices", params.max_vertices, "vertex cap");
  verify->add_option("--max-edges", params.max_edges, "edge cap");
  verify->add_option("--length-den", params.length_denominator_bound, "edge length denominator cap");
  verify->add_flag("--tree-only", params.tree_only, "generate trees only");
  verify->add_option("--genus-min", params.genus_min, "minimum genus");
  verify->add_option("--points", params.points_per_elkies, "points per multi-point Green check");
  verify->add_option("--threads", threads, "worker threads (0 = auto, capped by MG_THREADS)");
  verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--approx", approx, "decimal digits alongside exact values");
  verify->add_option("--out", out_path, "write the report to a file");

  std::string measure_text = "canonical", x_text, y_text;
  auto* green = app.add_subcommand("green", "Green function values and diagonal profiles");
  green->add_option("file", file_path, "graph file (JSON)")->required();
  green->add_option("--measure", measure_text, "canonical | tau | dirac:<point>");
  green->add_option("--x", x_text, "point: vertex name or <edge>:<offset>");
  green->add_option("--y", y_text, "second point (with --x: exact g(x,y))");
  green->add_option("--approx", approx, "decimal digits alongside exact values");
  green->add_option("--out", out_path, "write the report to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) return run_invariants(file_path, approx, out_path);
    if (bounds->parsed()) return run_bounds(genus, eps_text, flags, approx, out_path);
    if (verify->parsed()) return run_verify(seed, count, params, threads, format, approx, out_path);
    if (green->parsed()) return run_green(file_path, measure_text, x_text, y_text, approx, out_path);
  } catch (const mg::ParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const mg::InvalidGraph& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const mg::InvalidPolarization& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const mg::InvalidPoint& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const mg::InvalidMeasure& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const mg::InvalidGenus& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const mg::InvalidEpsilon& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const mg::GenerationFailure& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const mg::Error& err) {
    std::cerr << "internal failure: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
