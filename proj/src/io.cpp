#include "io.hpp"

#include "version.hpp"

namespace mg {

namespace {

Rat require_rat(const Json& j, const std::string& where) {
  if (!j.is_string() && !j.is_number_integer())
    throw ParseError(where + ": expected a rational as \"n\" or \"n/d\"");
  std::string text = j.is_string() ? j.get<std::string>() : std::to_string(j.get<long long>());
  auto q = parse_rat(text);
  if (!q) throw ParseError(where + ": malformed rational '" + text + "'");
  return *q;
}

GraphPoint parse_point_json(const MetrizedGraph& g, const Json& j, const std::string& where) {
  if (j.is_string()) {
    auto v = g.find_vertex(j.get<std::string>());
    if (!v) throw ParseError(where + ": unknown vertex '" + j.get<std::string>() + "'");
    return GraphPoint::vertex(*v);
  }
  if (j.is_object() && j.contains("edge") && j.contains("t")) {
    if (!j["edge"].is_number_integer()) throw ParseError(where + ": edge must be an index");
    int e = j["edge"].get<int>();
    if (e < 0 || e >= g.edge_count()) throw ParseError(where + ": edge index out of range");
    Rat t = require_rat(j["t"], where + ".t");
    if (sgn(t) < 0 || t > g.edge(e).length)
      throw ParseError(where + ": offset outside edge length " + rat_str(g.edge(e).length));
    return GraphPoint::on_edge(e, t);
  }
  throw ParseError(where + ": expected a vertex name or {edge, t}");
}

}  // namespace

GraphFile parse_graph_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError("invalid JSON at byte " + std::to_string(err.byte) + ": " + err.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("missing 'vertices' array");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("missing 'edges' array");

  std::vector<std::string> names;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    const auto& v = doc["vertices"][i];
    if (!v.is_string()) throw ParseError("vertices[" + std::to_string(i) + "]: expected a name");
    names.push_back(v.get<std::string>());
  }

  std::vector<MetrizedGraph::EdgeSpec> specs;
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const auto& e = doc["edges"][i];
    std::string where = "edges[" + std::to_string(i) + "]";
    if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("length"))
      throw ParseError(where + ": expected {u, v, length}");
    if (!e["u"].is_string() || !e["v"].is_string())
      throw ParseError(where + ": endpoints must be vertex names");
    Rat len = require_rat(e["length"], where + ".length");
    if (sgn(len) <= 0) throw ParseError(where + ": length must be positive");
    specs.push_back({e["u"].get<std::string>(), e["v"].get<std::string>(), len});
  }

  GraphFile file{MetrizedGraph::build(std::move(names), specs), {}};

  if (doc.contains("polarization")) {
    const auto& pol = doc["polarization"];
    if (pol.is_object()) {
      for (auto it = pol.begin(); it != pol.end(); ++it) {
        auto v = file.graph.find_vertex(it.key());
        if (!v) throw ParseError("polarization: unknown vertex '" + it.key() + "'");
        if (!it.value().is_number_integer() || it.value().get<long long>() < 0)
          throw ParseError("polarization['" + it.key() + "']: m must be a nonnegative integer");
        file.polarization.emplace_back(GraphPoint::vertex(*v), it.value().get<int>());
      }
    } else if (pol.is_array()) {
      for (std::size_t i = 0; i < pol.size(); ++i) {
        std::string where = "polarization[" + std::to_string(i) + "]";
        const auto& entry = pol[i];
        if (!entry.is_object() || !entry.contains("at") || !entry.contains("m"))
          throw ParseError(where + ": expected {at, m}");
        if (!entry["m"].is_number_integer() || entry["m"].get<long long>() < 0)
          throw ParseError(where + ".m: must be a nonnegative integer");
        file.polarization.emplace_back(parse_point_json(file.graph, entry["at"], where + ".at"),
                                       entry["m"].get<int>());
      }
    } else {
      throw ParseError("polarization: expected an object or a list");
    }
  }
  return file;
}

std::string serialize_graph(const PolarizedGraph& pg) {
  const MetrizedGraph& g = pg.graph();
  Json doc;
  doc["vertices"] = Json::array();
  for (const auto& name : g.vertex_names()) doc["vertices"].push_back(name);
  doc["edges"] = Json::array();
  for (const auto& e : g.edges())
    doc["edges"].push_back(
        {{"u", g.vertex_name(e.u)}, {"v", g.vertex_name(e.w)}, {"length", rat_str(e.length)}});
  Json pol = Json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (pg.m(v) != 0) pol[g.vertex_name(v)] = pg.m(v);
  doc["polarization"] = std::move(pol);
  return doc.dump();
}

std::string digest_hex(const std::string& data) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(h));
  return buffer;
}

GraphPoint parse_point(const MetrizedGraph& g, const std::string& text) {
  if (auto v = g.find_vertex(text)) return GraphPoint::vertex(*v);
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string edge_part = text.substr(0, colon), t_part = text.substr(colon + 1);
    try {
      std::size_t used = 0;
      int e = std::stoi(edge_part, &used);
      if (used == edge_part.size() && e >= 0 && e < g.edge_count()) {
        auto t = parse_rat(t_part);
        if (t && sgn(*t) >= 0 && *t <= g.edge(e).length) return GraphPoint::on_edge(e, *t);
      }
    } catch (const std::exception&) {
    }
  }
  throw ParseError("unknown point '" + text + "' (vertex name or <edge>:<offset>)");
}

namespace {

void put_rat(Json& exact, Json* approx, const std::string& key, const Rat& value,
             int approx_digits) {
  exact[key] = rat_str(value);
  if (approx) (*approx)[key] = rat_decimal(value, approx_digits);
}

void put_int(Json& exact, const std::string& key, const Int& value) {
  exact[key] = value.get_str();
}

}  // namespace

Json invariant_report_json(const InvariantReport& report, int approx_digits) {
  Json out;
  out["genus"] = report.genus;
  out["is_tree"] = report.is_tree;
  Json exact, approx;
  Json* ap = approx_digits >= 0 ? &approx : nullptr;
  put_rat(exact, ap, "delta", report.delta, approx_digits);
  put_rat(exact, ap, "epsilon", report.epsilon, approx_digits);
  put_rat(exact, ap, "phi", report.phi, approx_digits);
  put_rat(exact, ap, "tau", report.tau, approx_digits);
  put_rat(exact, ap, "lambda", report.lambda, approx_digits);
  put_rat(exact, ap, "c", report.c, approx_digits);
  put_rat(exact, ap, "sup_green_diagonal", report.sup_diagonal, approx_digits);
  out["exact"] = std::move(exact);
  if (ap) out["approx"] = std::move(approx);
  out["audits"] = Json::array();
  for (const auto& a : report.identity_audit) {
    Json entry{{"name", a.name}, {"pass", a.pass}};
    if (!a.pass) entry["witness"] = a.witness;
    out["audits"].push_back(std::move(entry));
  }
  out["audits_pass"] = report.all_pass();
  return out;
}

Json bound_report_json(const BoundReport& report, const CountBoundFlags& flags,
                       int approx_digits) {
  Json out;
  out["genus"] = report.genus;
  out["epsilon"] = rat_str(report.epsilon);
  Json exact, approx;
  Json* ap = approx_digits >= 0 ? &approx : nullptr;
  put_rat(exact, ap, "c_cinkir", report.c_cinkir, approx_digits);
  put_rat(exact, ap, "c_cinkir_tree", report.c_cinkir_tree, approx_digits);
  put_rat(exact, ap, "c_sup", report.c_sup, approx_digits);
  put_rat(exact, ap, "c_sup_tree", report.c_sup_tree, approx_digits);
  put_int(exact, "c_eps", report.c_eps);
  put_int(exact, "c_eps_tree", report.c_eps_tree);
  put_int(exact, "torsion_c", report.torsion_c);
  put_int(exact, "torsion_c_tree", report.torsion_c_tree);
  if (report.halved_c) put_int(exact, "halved_c", *report.halved_c);
  if (report.halved_c_tree) put_int(exact, "halved_c_tree", *report.halved_c_tree);
  put_int(exact, "good_reduction_bound", report.good_reduction_bound);
  put_int(exact, "envelope", report.envelope);
  out["exact"] = std::move(exact);
  if (ap) out["approx"] = std::move(approx);

  // the bound selected by the flags
  Int selected = report.c_eps;
  if (flags.good_reduction)
    selected = report.good_reduction_bound;
  else if (flags.tree)
    selected = flags.halving ? *report.halved_c_tree : report.c_eps_tree;
  else if (flags.halving)
    selected = *report.halved_c;
  out["selected_bound"] = selected.get_str();
  return out;
}

Json campaign_report_json(const CampaignReport& report, int approx_digits) {
  Json out;
  out["seed"] = report.seed;
  out["count"] = report.count;
  out["params"] = {{"max_vertices", report.params.max_vertices},
                   {"max_edges", report.params.max_edges},
                   {"length_denominator_bound", report.params.length_denominator_bound},
                   {"tree_only", report.params.tree_only},
                   {"genus_min", report.params.genus_min},
                   {"points_per_elkies", report.params.points_per_elkies}};
  out["graphs"] = Json::array();
  for (const auto& row : report.rows) {
    Json exact, approx;
    Json* ap = approx_digits >= 0 ? &approx : nullptr;
    put_rat(exact, ap, "delta", row.delta, approx_digits);
    put_rat(exact, ap, "epsilon", row.epsilon, approx_digits);
    put_rat(exact, ap, "phi", row.phi, approx_digits);
    put_rat(exact, ap, "tau", row.tau, approx_digits);
    put_rat(exact, ap, "lambda", row.lambda, approx_digits);
    put_rat(exact, ap, "c", row.c, approx_digits);
    put_rat(exact, ap, "sup_green_diagonal", row.sup_diagonal, approx_digits);
    put_rat(exact, ap, "min_inequality_margin", row.min_inequality_margin, approx_digits);
    Json entry{{"index", row.index},
               {"instance_seed", row.instance_seed},
               {"digest", row.digest},
               {"genus", row.genus},
               {"is_tree", row.is_tree},
               {"vertices", row.vertices},
               {"edges", row.edges},
               {"ok", row.ok}};
    entry["exact"] = std::move(exact);
    if (ap) entry["approx"] = std::move(approx);
    out["graphs"].push_back(std::move(entry));
  }
  out["failures"] = Json::array();
  for (const auto& f : report.failures)
    out["failures"].push_back({{"index", f.index},
                               {"instance_seed", f.instance_seed},
                               {"digest", f.digest},
                               {"check", f.check},
                               {"witness", f.witness},
                               {"graph", f.graph_json}});
  out["failure_count"] = report.failures.size();
  out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

std::string campaign_report_csv(const CampaignReport& report) {
  std::string out =
      "index,instance_seed,digest,genus,is_tree,vertices,edges,delta,epsilon,phi,tau,lambda,c,"
      "sup_green_diagonal,min_inequality_margin,ok\n";
  for (const auto& row : report.rows) {
    out += std::to_string(row.index) + "," + std::to_string(row.instance_seed) + "," + row.digest +
           "," + std::to_string(row.genus) + "," + (row.is_tree ? "1" : "0") + "," +
           std::to_string(row.vertices) + "," + std::to_string(row.edges) + "," +
           rat_str(row.delta) + "," + rat_str(row.epsilon) + "," + rat_str(row.phi) + "," +
           rat_str(row.tau) + "," + rat_str(row.lambda) + "," + rat_str(row.c) + "," +
           rat_str(row.sup_diagonal) + "," + rat_str(row.min_inequality_margin) + "," +
           (row.ok ? "1" : "0") + "\n";
  }
  return out;
}

Json output_record(const std::string& command, Json payload, const std::string& input_digest) {
  Json out;
  out["tool"] = "mgv";
  out["version"] = kVersion;
  out["command"] = command;
  if (!input_digest.empty()) out["input_digest"] = input_digest;
  out["result"] = std::move(payload);
  return out;
}

}  // namespace mg
