#pragma once

// Metrized multigraphs: connected multigraphs with positive rational edge
// lengths, points on them (vertices or edge-interior offsets), divisors and
// effective polarizations. Loops are eliminated at construction by an
// isometric midpoint subdivision, so every edge downstream has two distinct
// endpoints.

#include "rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidGraph : Error {
  using Error::Error;
};
struct InvalidPoint : Error {
  using Error::Error;
};
struct InvalidPolarization : Error {
  using Error::Error;
};
struct InvalidMeasure : Error {
  using Error::Error;
};
struct SolverInconsistency : Error {
  using Error::Error;
};
struct DegreeCertificateFailure : Error {
  using Error::Error;
};
struct InvalidGenus : Error {
  using Error::Error;
};
struct InvalidEpsilon : Error {
  using Error::Error;
};
struct GenerationFailure : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

using VertexId = int;
using EdgeId = int;

// A point of the graph: a vertex, or an interior point of an edge at
// arclength offset t from the edge's `u` endpoint. Offsets 0 and ell(e)
// normalize to the endpoints (MetrizedGraph::normalize).
struct GraphPoint {
  bool at_vertex = true;
  VertexId v = 0;
  EdgeId e = 0;
  Rat t;

  static GraphPoint vertex(VertexId v) {
    GraphPoint p;
    p.at_vertex = true;
    p.v = v;
    return p;
  }
  static GraphPoint on_edge(EdgeId e, Rat t) {
    GraphPoint p;
    p.at_vertex = false;
    p.e = e;
    p.t = std::move(t);
    return p;
  }
  bool operator==(const GraphPoint& o) const {
    if (at_vertex != o.at_vertex) return false;
    return at_vertex ? v == o.v : (e == o.e && t == o.t);
  }
  bool operator<(const GraphPoint& o) const {
    if (at_vertex != o.at_vertex) return at_vertex;  // vertices sort first
    if (at_vertex) return v < o.v;
    if (e != o.e) return e < o.e;
    return t < o.t;
  }
};

class MetrizedGraph {
 public:
  struct Edge {
    VertexId u, w;
    Rat length;
  };
  struct EdgeSpec {
    std::string u, w;
    Rat length;
  };

  // Validates names, endpoints, positivity and connectedness; subdivides
  // loops at a fresh midpoint vertex. Throws InvalidGraph.
  static MetrizedGraph build(std::vector<std::string> vertex_names,
                             const std::vector<EdgeSpec>& edges);

  // Internal id-based constructor for already loop-free graphs (subdivision,
  // scaling). Validates the same invariants.
  static MetrizedGraph from_parts(std::vector<std::string> vertex_names,
                                  std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& vertex_name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  std::optional<VertexId> find_vertex(const std::string& name) const;
  const std::vector<EdgeId>& incident(VertexId v) const { return incident_.at(v); }
  int valence(VertexId v) const;  // edge-end count; no loops by construction

  Rat total_length() const;
  int first_betti() const { return edge_count() - vertex_count() + 1; }
  bool is_tree() const { return first_betti() == 0; }

  // Clamps offsets 0 and ell(e) to the corresponding vertex; throws
  // InvalidPoint for out-of-range ids or offsets.
  GraphPoint normalize(const GraphPoint& p) const;
  bool points_equal(const GraphPoint& a, const GraphPoint& b) const;

  // Fresh vertex name not colliding with existing ones.
  std::string fresh_name(const std::string& stem) const;

 private:
  friend class Subdivision;
  friend class PolarizedGraph;
  MetrizedGraph() = default;
  void index();

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

// Refinement of the vertex set at a batch of points. Base vertices keep
// their ids in the fine graph; cut vertices are appended deterministically
// (by edge index, then offset).
class Subdivision {
 public:
  Subdivision(const MetrizedGraph& base, const std::vector<GraphPoint>& points);

  const MetrizedGraph& base() const { return base_; }
  const MetrizedGraph& fine() const { return fine_; }
  // Fine vertex realizing the i-th requested point.
  VertexId vertex_of(int point_index) const { return point_vertex_.at(point_index); }
  GraphPoint to_fine(const GraphPoint& base_point) const;

  struct Fragment {
    EdgeId fine_edge;
    Rat start;  // offset of the fragment inside the base edge
  };
  const std::vector<Fragment>& fragments(EdgeId base_edge) const {
    return fragments_.at(base_edge);
  }

 private:
  MetrizedGraph base_;
  MetrizedGraph fine_;
  std::vector<VertexId> point_vertex_;
  std::vector<std::vector<Fragment>> fragments_;
};

// Vertex-set refinement at one point; isometric, invariant-preserving.
std::pair<MetrizedGraph, VertexId> subdivide(const MetrizedGraph& g, const GraphPoint& p);

// Every edge length multiplied by lambda > 0.
MetrizedGraph scaled(const MetrizedGraph& g, const Rat& lambda);

// A divisor: finite formal integer combination of points (zero coefficients
// are never stored).
using Divisor = std::map<GraphPoint, int>;

// Effective polarization K = sum (n_p + m_p - 2) p over the vertex set, with
// m_p >= 0. Interior support points of m are subdivided into the vertex set,
// so the stored graph may refine the one passed in. deg K must be even and
// every coefficient nonnegative; genus = deg K / 2 + 1.
class PolarizedGraph {
 public:
  static PolarizedGraph make(const MetrizedGraph& g,
                             const std::vector<std::pair<GraphPoint, int>>& m);

  const MetrizedGraph& graph() const { return g_; }
  int m(VertexId v) const { return m_.at(v); }
  const std::vector<int>& m_values() const { return m_; }
  int k_coeff(VertexId v) const { return k_.at(v); }
  int deg_canonical() const { return deg_; }
  int genus() const { return genus_; }
  // K as (vertex, coefficient) pairs with positive coefficients.
  std::vector<std::pair<VertexId, int>> canonical_support() const;

 private:
  MetrizedGraph g_;
  std::vector<int> m_, k_;
  int deg_ = 0;
  int genus_ = 1;
};

inline int genus(const PolarizedGraph& pg) { return pg.genus(); }

}  // namespace mg
