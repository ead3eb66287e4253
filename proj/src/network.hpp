#pragma once

// Electrical-network view of a metrized graph: edge lengths are resistances.
// Provides the weighted vertex Laplacian with one grounded vertex, its exact
// inverse, pairwise effective resistances, resistances in the graph with one
// edge removed (rank-one update), and closed forms for the resistance from a
// point in an edge interior to any vertex, plus its integral over the edge.

#include "graph.hpp"
#include "linalg.hpp"

#include <optional>
#include <vector>

namespace mg {

class VertexSystem {
 public:
  explicit VertexSystem(MetrizedGraph g);

  const MetrizedGraph& graph() const { return g_; }

  Rat resistance(VertexId a, VertexId b) const;

  bool is_bridge(EdgeId e) const;
  // r(u_e, w_e) in the graph minus e; throws InvalidGraph for bridges.
  Rat outside_resistance(EdgeId e) const;
  // resistance between a and b in the graph minus e; a and b must end up in
  // the same component when e is a bridge.
  Rat deleted_resistance(EdgeId e, VertexId a, VertexId b) const;
  // for a bridge e: 0 if p lands on the u_e side, 1 on the w_e side
  int bridge_side(EdgeId e, VertexId p) const;

  // r(x, p) for x the point at offset s in [0, ell(e)] from u_e.
  Rat interior_resistance(EdgeId e, const Rat& s, VertexId p) const;
  // integral over x in e of r(x, p) dx.
  Rat edge_resistance_integral(EdgeId e, VertexId p) const;

  // Potentials phi with L phi = injection and phi[0] = 0; requires the
  // injection to sum to zero.
  std::vector<Rat> solve_potentials(const std::vector<Rat>& injection) const;

 private:
  struct EdgeData {
    std::vector<Rat> sigma;  // M (e_u - e_w)
    Rat slack;               // ell - r(u, w); zero exactly for bridges
    std::vector<int> side;   // component labels of the deleted graph (bridges)
  };

  MetrizedGraph g_;
  Mat m_;  // grounded inverse, padded with a zero row/column at vertex 0
  std::vector<EdgeData> edata_;
};

}  // namespace mg
