#pragma once

// Green functions g_mu(x, .) of mass-one measures, solved exactly on the
// weighted vertex Laplacian, plus effective resistance and the two-terminal
// potential kernel j.

#include "harmonic.hpp"

#include <optional>

namespace mg {

// g_mu(x, .) as an exact piecewise quadratic over the graph refined at x.
// Invariants enforced at construction: endpoint continuity, the vertex
// balance of outgoing derivatives, and the normalization that the integral
// of g against mu vanishes.
class GreenFunction {
 public:
  GreenFunction(Subdivision sub, Measure mu_fine, VertexId base_vertex,
                PiecewiseQuadratic values);

  const MetrizedGraph& domain() const { return sub_.fine(); }
  const PiecewiseQuadratic& values() const { return values_; }
  VertexId base_vertex() const { return base_; }

  // Evaluation at a point of the original (coarse) graph.
  Rat value(const GraphPoint& base_point) const;
  // Pairing with a divisor supported on original vertices.
  Rat value_at_divisor(const std::vector<std::pair<VertexId, int>>& support) const;
  // g_mu(x, x).
  Rat value_at_base() const { return values_.vertex_value(base_); }
  // integral of g d nu for a measure on the original graph
  Rat integral_against(const Measure& base_nu) const;

 private:
  Subdivision sub_;
  Measure mu_;  // on the fine graph
  VertexId base_;
  PiecewiseQuadratic values_;
};

// Solves for g_mu(x, .). Requires mass(mu) = 1 (InvalidMeasure otherwise);
// atoms of mu must sit on vertices (Measure's representation enforces
// this); x may be any point of the graph.
GreenFunction green_function(const MetrizedGraph& g, const Measure& mu, const GraphPoint& x);

// g_mu(x, y) computed along two independent routes — the Laplacian solve
// behind green_function and the potential-kernel identity
// g = (h(x) + h(y) - r(x, y))/2 - (double integral of r d mu d mu)/2 —
// which must agree exactly (SolverInconsistency otherwise).
Rat green_value(const MetrizedGraph& g, const Measure& mu, const GraphPoint& x,
                const GraphPoint& y);

// Effective resistance with edge lengths as resistances.
Rat effective_resistance(const MetrizedGraph& g, const GraphPoint& p, const GraphPoint& q);

// Resistance between the endpoints of e in the graph minus e; nullopt means
// infinite (e is a bridge).
std::optional<Rat> resistance_outside_edge(const MetrizedGraph& g, EdgeId e);

// j_zeta(x, y) = (r(x, zeta) + r(y, zeta) - r(x, y)) / 2.
Rat j_function(const MetrizedGraph& g, const GraphPoint& zeta, const GraphPoint& x,
               const GraphPoint& y);

}  // namespace mg
