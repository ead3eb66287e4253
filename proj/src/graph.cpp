#include "graph.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace mg {

namespace {

void check_connected(int vertex_count, const std::vector<MetrizedGraph::Edge>& edges) {
  if (vertex_count == 0) throw InvalidGraph("graph has no vertices");
  std::vector<std::vector<int>> adj(vertex_count);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.w);
    adj[e.w].push_back(e.u);
  }
  std::vector<char> seen(vertex_count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  for (int v = 0; v < vertex_count; ++v)
    if (!seen[v]) throw InvalidGraph("graph is not connected (vertex '" + std::to_string(v) + "' unreachable)");
}

}  // namespace

MetrizedGraph MetrizedGraph::build(std::vector<std::string> vertex_names,
                                   const std::vector<EdgeSpec>& edges) {
  std::unordered_map<std::string, VertexId> ids;
  for (std::size_t i = 0; i < vertex_names.size(); ++i) {
    if (vertex_names[i].empty()) throw InvalidGraph("empty vertex name");
    if (!ids.emplace(vertex_names[i], static_cast<VertexId>(i)).second)
      throw InvalidGraph("duplicate vertex name '" + vertex_names[i] + "'");
  }
  MetrizedGraph g;
  g.names_ = std::move(vertex_names);
  int loop_counter = 0;
  for (const auto& spec : edges) {
    auto iu = ids.find(spec.u), iw = ids.find(spec.w);
    if (iu == ids.end()) throw InvalidGraph("edge endpoint '" + spec.u + "' is not a vertex");
    if (iw == ids.end()) throw InvalidGraph("edge endpoint '" + spec.w + "' is not a vertex");
    if (sgn(spec.length) <= 0)
      throw InvalidGraph("edge " + spec.u + "-" + spec.w + " has non-positive length " + rat_str(spec.length));
    if (iu->second == iw->second) {
      // loop: split at a fresh midpoint vertex, isometrically
      std::string mid = g.fresh_name("loop" + std::to_string(loop_counter++));
      VertexId mv = static_cast<VertexId>(g.names_.size());
      g.names_.push_back(mid);
      ids.emplace(mid, mv);
      Rat half = spec.length / 2;
      g.edges_.push_back({iu->second, mv, half});
      g.edges_.push_back({mv, iw->second, half});
    } else {
      g.edges_.push_back({iu->second, iw->second, spec.length});
    }
  }
  check_connected(g.vertex_count(), g.edges_);
  g.index();
  return g;
}

MetrizedGraph MetrizedGraph::from_parts(std::vector<std::string> vertex_names,
                                        std::vector<Edge> edges) {
  std::unordered_set<std::string> seen;
  for (const auto& n : vertex_names)
    if (n.empty() || !seen.insert(n).second) throw InvalidGraph("bad vertex name '" + n + "'");
  const int n = static_cast<int>(vertex_names.size());
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.w < 0 || e.w >= n) throw InvalidGraph("edge endpoint out of range");
    if (e.u == e.w) throw InvalidGraph("loop edges must be subdivided before from_parts");
    if (sgn(e.length) <= 0) throw InvalidGraph("non-positive edge length");
  }
  check_connected(n, edges);
  MetrizedGraph g;
  g.names_ = std::move(vertex_names);
  g.edges_ = std::move(edges);
  g.index();
  return g;
}

void MetrizedGraph::index() {
  incident_.assign(names_.size(), {});
  for (EdgeId e = 0; e < edge_count(); ++e) {
    incident_[edges_[e].u].push_back(e);
    incident_[edges_[e].w].push_back(e);
  }
}

std::optional<VertexId> MetrizedGraph::find_vertex(const std::string& name) const {
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (names_[v] == name) return v;
  return std::nullopt;
}

int MetrizedGraph::valence(VertexId v) const {
  return static_cast<int>(incident_.at(v).size());
}

Rat MetrizedGraph::total_length() const {
  Rat sum = 0;
  for (const auto& e : edges_) sum += e.length;
  return sum;
}

GraphPoint MetrizedGraph::normalize(const GraphPoint& p) const {
  if (p.at_vertex) {
    if (p.v < 0 || p.v >= vertex_count()) throw InvalidPoint("vertex id out of range");
    return p;
  }
  if (p.e < 0 || p.e >= edge_count()) throw InvalidPoint("edge id out of range");
  const Edge& e = edges_[p.e];
  if (sgn(p.t) < 0 || p.t > e.length)
    throw InvalidPoint("offset " + rat_str(p.t) + " outside edge of length " + rat_str(e.length));
  if (sgn(p.t) == 0) return GraphPoint::vertex(e.u);
  if (p.t == e.length) return GraphPoint::vertex(e.w);
  return p;
}

bool MetrizedGraph::points_equal(const GraphPoint& a, const GraphPoint& b) const {
  return normalize(a) == normalize(b);
}

std::string MetrizedGraph::fresh_name(const std::string& stem) const {
  std::string name = stem;
  int k = 0;
  while (std::find(names_.begin(), names_.end(), name) != names_.end())
    name = stem + "_" + std::to_string(k++);
  return name;
}

Subdivision::Subdivision(const MetrizedGraph& base, const std::vector<GraphPoint>& points)
    : base_(base) {
  // group interior cut offsets per edge
  std::vector<std::set<Rat>> cuts(base.edge_count());
  std::vector<GraphPoint> normal;
  normal.reserve(points.size());
  for (const auto& p : points) {
    GraphPoint n = base.normalize(p);
    normal.push_back(n);
    if (!n.at_vertex) cuts[n.e].insert(n.t);
  }

  std::vector<std::string> names = base.vertex_names();
  std::vector<MetrizedGraph::Edge> fine_edges;
  fragments_.assign(base.edge_count(), {});
  // fine vertex id for each (edge, offset) cut
  std::vector<std::map<Rat, VertexId>> cut_vertex(base.edge_count());

  for (EdgeId e = 0; e < base.edge_count(); ++e) {
    const auto& be = base.edge(e);
    VertexId prev = be.u;
    Rat prev_t = 0;
    int k = 0;
    for (const Rat& t : cuts[e]) {
      std::string stem = "cut" + std::to_string(e) + "_" + std::to_string(k++);
      std::string name = stem;
      int bump = 0;
      while (std::find(names.begin(), names.end(), name) != names.end())
        name = stem + "_" + std::to_string(bump++);
      VertexId nv = static_cast<VertexId>(names.size());
      names.push_back(name);
      cut_vertex[e].emplace(t, nv);
      fragments_[e].push_back({static_cast<EdgeId>(fine_edges.size()), prev_t});
      fine_edges.push_back({prev, nv, t - prev_t});
      prev = nv;
      prev_t = t;
    }
    fragments_[e].push_back({static_cast<EdgeId>(fine_edges.size()), prev_t});
    fine_edges.push_back({prev, be.w, be.length - prev_t});
  }

  fine_ = MetrizedGraph::from_parts(std::move(names), std::move(fine_edges));
  point_vertex_.reserve(normal.size());
  for (const auto& n : normal)
    point_vertex_.push_back(n.at_vertex ? n.v : cut_vertex[n.e].at(n.t));
}

GraphPoint Subdivision::to_fine(const GraphPoint& base_point) const {
  GraphPoint n = base_.normalize(base_point);
  if (n.at_vertex) return n;  // base vertex ids are preserved
  const auto& frags = fragments_[n.e];
  // find the fragment containing offset t
  for (std::size_t i = 0; i < frags.size(); ++i) {
    const Rat& start = frags[i].start;
    Rat len = fine_.edge(frags[i].fine_edge).length;
    if (n.t < start || n.t > start + len) continue;
    return fine_.normalize(GraphPoint::on_edge(frags[i].fine_edge, n.t - start));
  }
  throw InvalidPoint("offset not covered by subdivision fragments");
}

std::pair<MetrizedGraph, VertexId> subdivide(const MetrizedGraph& g, const GraphPoint& p) {
  Subdivision s(g, {p});
  return {s.fine(), s.vertex_of(0)};
}

MetrizedGraph scaled(const MetrizedGraph& g, const Rat& lambda) {
  if (sgn(lambda) <= 0) throw InvalidGraph("scaling factor must be positive");
  std::vector<MetrizedGraph::Edge> edges = g.edges();
  for (auto& e : edges) e.length *= lambda;
  return MetrizedGraph::from_parts(g.vertex_names(), std::move(edges));
}

PolarizedGraph PolarizedGraph::make(const MetrizedGraph& g,
                                    const std::vector<std::pair<GraphPoint, int>>& m) {
  for (const auto& [p, mp] : m)
    if (mp < 0) throw InvalidPolarization("m coefficients must be nonnegative");

  std::vector<GraphPoint> pts;
  for (const auto& [p, mp] : m) pts.push_back(p);
  Subdivision sub(g, pts);

  PolarizedGraph pg;
  pg.g_ = sub.fine();
  pg.m_.assign(pg.g_.vertex_count(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) pg.m_[sub.vertex_of(static_cast<int>(i))] += m[i].second;

  pg.k_.resize(pg.g_.vertex_count());
  pg.deg_ = 0;
  for (VertexId v = 0; v < pg.g_.vertex_count(); ++v) {
    int coeff = pg.g_.valence(v) + pg.m_[v] - 2;
    if (coeff < 0)
      throw InvalidPolarization("polarization not effective at vertex '" + pg.g_.vertex_name(v) +
                                "' (n=" + std::to_string(pg.g_.valence(v)) +
                                ", m=" + std::to_string(pg.m_[v]) + ")");
    pg.k_[v] = coeff;
    pg.deg_ += coeff;
  }
  if (pg.deg_ % 2 != 0)
    throw InvalidPolarization("deg K = " + std::to_string(pg.deg_) + " is odd");
  pg.genus_ = pg.deg_ / 2 + 1;
  return pg;
}

std::vector<std::pair<VertexId, int>> PolarizedGraph::canonical_support() const {
  std::vector<std::pair<VertexId, int>> out;
  for (VertexId v = 0; v < g_.vertex_count(); ++v)
    if (k_[v] != 0) out.emplace_back(v, k_[v]);
  return out;
}

}  // namespace mg
