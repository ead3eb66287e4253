#pragma once

// Potential-theory machinery shared by the Green-function and canonical
// measure solvers: point-mass + constant-density measures, certified
// piecewise-quadratic functions on a graph, and a per-graph table of exact
// resistance kernels r(x, p), single edge integrals of r(x, .) and double
// edge integrals, evaluated at four canonical interior samples per edge.
//
// Restricted to any edge, r(., p) and the edge integrals of r are quadratic
// polynomials of the arclength parameter; every fit below is therefore exact
// and certified against a fourth sample and both endpoint values.

#include "graph.hpp"
#include "network.hpp"

#include <vector>

namespace mg {

// Mass on a graph: atoms indexed by vertex plus one constant density (mass
// per unit length) per edge. Atoms at interior points are represented by
// subdividing first. Atoms may be negative; the solvers that require
// positivity or unit mass check those properties explicitly.
struct Measure {
  std::vector<Rat> atom;     // size = vertex_count
  std::vector<Rat> density;  // size = edge_count

  static Measure zero(const MetrizedGraph& g) {
    return {std::vector<Rat>(g.vertex_count(), Rat(0)),
            std::vector<Rat>(g.edge_count(), Rat(0))};
  }
  static Measure dirac(const MetrizedGraph& g, VertexId v) {
    Measure m = zero(g);
    m.atom[v] = 1;
    return m;
  }
  Rat mass(const MetrizedGraph& g) const;
};

// Transfers a measure through a vertex-set refinement: atoms keep their
// vertices, each fragment inherits its base edge's density.
Measure map_measure(const Subdivision& sub, const Measure& base_measure);

// Continuous function on a graph that is quadratic on every edge, stored as
// value(t) = a t^2 + b t + c with t the arclength from the edge's u
// endpoint, plus explicit vertex values. Construction verifies endpoint
// continuity exactly.
class PiecewiseQuadratic {
 public:
  struct EdgePoly {
    Rat a, b, c;
    Rat value(const Rat& t) const { return (a * t + b) * t + c; }
  };

  PiecewiseQuadratic(MetrizedGraph g, std::vector<EdgePoly> per_edge,
                     std::vector<Rat> vertex_values);

  const MetrizedGraph& graph() const { return g_; }
  const EdgePoly& poly(EdgeId e) const { return poly_.at(e); }
  const Rat& vertex_value(VertexId v) const { return vertex_.at(v); }
  Rat value(const GraphPoint& p) const;

  // Exact extrema over the whole graph (vertex values, edge endpoints and
  // interior critical points).
  Rat maximum() const;
  GraphPoint argmax() const;

  Rat integral_on_edge(EdgeId e) const;  // antiderivative, exact
  // Simpson's rule; exact for quadratics, used as a cross-validated
  // integration route.
  Rat simpson_on_edge(EdgeId e) const;
  Rat simpson_refined_on_edge(EdgeId e) const;  // 5-point composite

  void shift(const Rat& constant);

 private:
  MetrizedGraph g_;
  std::vector<EdgePoly> poly_;
  std::vector<Rat> vertex_;
};

// Exact quadratic through three samples; the fourth sample and both
// endpoint values must land on the same polynomial, otherwise
// DegreeCertificateFailure is thrown with `what_for` in the message.
PiecewiseQuadratic::EdgePoly fit_quadratic_certified(
    const std::vector<Rat>& ts, const std::vector<Rat>& values, const Rat& value_at_0,
    const Rat& value_at_len, const Rat& len, const std::string& what_for);

class Harmonics {
 public:
  static constexpr int kSamples = 4;  // offsets (k+1) ell / 5, k = 0..3

  explicit Harmonics(const MetrizedGraph& g);

  const MetrizedGraph& graph() const { return base_.graph(); }
  const VertexSystem& base() const { return base_; }

  Rat sample_offset(EdgeId e, int k) const;
  GraphPoint sample_point(EdgeId e, int k) const;

  // r(x_{e,k}, p) for base vertices p
  const Rat& sample_vertex_resistance(EdgeId e, int k, VertexId p) const;
  // integral over e' of r(x_{e,k}, .)
  const Rat& sample_edge_integral(EdgeId e, int k, EdgeId ep) const;
  // integral over e' of r(p, .) for a base vertex p
  const Rat& vertex_edge_integral(VertexId p, EdgeId ep) const;
  // double integral over e x e' of r
  const Rat& double_edge_integral(EdgeId e, EdgeId ep) const;

  // h_mu(x) = integral of r(x, .) d mu
  Rat h_at_vertex(const Measure& mu, VertexId p) const;
  Rat h_at_sample(const Measure& mu, EdgeId e, int k) const;
  // certified per-edge quadratic of x -> h_mu(x)
  PiecewiseQuadratic h_profile(const Measure& mu) const;

  // double integral of r d mu d nu
  Rat resistance_double_integral(const Measure& mu, const Measure& nu) const;

 private:
  VertexSystem base_;
  // [e][k][p] and [e][k][e']
  std::vector<std::vector<std::vector<Rat>>> sample_r_, sample_int_;
  std::vector<std::vector<Rat>> vertex_int_;  // [p][e']
  std::vector<std::vector<Rat>> double_int_;  // [e][e']
};

}  // namespace mg
