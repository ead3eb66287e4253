#include "canonical.hpp"

#include "linalg.hpp"

namespace mg {

namespace {

// Shared solver: finds the mass-one measure (vertex atoms + per-edge
// densities) whose field F(x) = h_mu(x) - target(x) is constant, where
// target(x) = r(x, K)/(2g) for the canonical measure and 0 for the tau
// measure. K is passed as vertex coefficients (empty for tau).
Measure solve_constancy(const Harmonics& h, const std::vector<int>& k_coeff, int two_g,
                        const char* label) {
  const MetrizedGraph& g = h.graph();
  const int nv = g.vertex_count(), ne = g.edge_count();
  const int unknowns = nv + ne;

  auto target_at_sample = [&](EdgeId e, int k) -> Rat {
    if (k_coeff.empty()) return Rat(0);
    Rat r_to_k = 0;
    for (VertexId q = 0; q < nv; ++q)
      if (k_coeff[q] != 0) r_to_k += k_coeff[q] * h.sample_vertex_resistance(e, k, q);
    return r_to_k / two_g;
  };
  auto target_at_vertex = [&](VertexId p) -> Rat {
    if (k_coeff.empty()) return Rat(0);
    Rat r_to_k = 0;
    for (VertexId q = 0; q < nv; ++q)
      if (k_coeff[q] != 0) r_to_k += k_coeff[q] * h.base().resistance(p, q);
    return r_to_k / two_g;
  };

  Mat a(1 + 2 * ne, unknowns);
  std::vector<Rat> rhs(1 + 2 * ne, Rat(0));
  // total mass
  for (VertexId p = 0; p < nv; ++p) a(0, p) = 1;
  for (EdgeId e = 0; e < ne; ++e) a(0, nv + e) = g.edge(e).length;
  rhs[0] = 1;
  // equal field values at the first three samples of every edge
  int row = 1;
  for (EdgeId e = 0; e < ne; ++e) {
    for (int k = 0; k < 2; ++k, ++row) {
      for (VertexId q = 0; q < nv; ++q)
        a(row, q) = h.sample_vertex_resistance(e, k, q) - h.sample_vertex_resistance(e, k + 1, q);
      for (EdgeId ep = 0; ep < ne; ++ep)
        a(row, nv + ep) = h.sample_edge_integral(e, k, ep) - h.sample_edge_integral(e, k + 1, ep);
      rhs[row] = target_at_sample(e, k) - target_at_sample(e, k + 1);
    }
  }

  std::vector<Rat> x = solve_unique(a, rhs);
  Measure mu = Measure::zero(g);
  for (VertexId p = 0; p < nv; ++p) mu.atom[p] = x[p];
  for (EdgeId e = 0; e < ne; ++e) mu.density[e] = x[nv + e];

  // certificate: the solved field is constant at every vertex and at the
  // fourth sample of every edge
  Rat level = h.h_at_vertex(mu, 0) - target_at_vertex(0);
  for (VertexId p = 1; p < nv; ++p)
    if (h.h_at_vertex(mu, p) - target_at_vertex(p) != level)
      throw DegreeCertificateFailure(std::string(label) + ": field not constant at vertex '" +
                                     g.vertex_name(p) + "'");
  for (EdgeId e = 0; e < ne; ++e)
    for (int k = 0; k < Harmonics::kSamples; ++k)
      if (h.h_at_sample(mu, e, k) - target_at_sample(e, k) != level)
        throw DegreeCertificateFailure(std::string(label) + ": field not constant inside edge " +
                                       std::to_string(e));
  return mu;
}

}  // namespace

Measure solve_canonical_measure(const Harmonics& h, const PolarizedGraph& pg) {
  std::vector<int> k_coeff(pg.graph().vertex_count());
  for (VertexId v = 0; v < pg.graph().vertex_count(); ++v) k_coeff[v] = pg.k_coeff(v);
  Measure mu = solve_constancy(h, k_coeff, 2 * pg.genus(), "canonical measure");
  for (VertexId v = 0; v < pg.graph().vertex_count(); ++v)
    if (sgn(mu.atom[v]) < 0)
      throw SolverInconsistency("canonical measure has a negative atom at '" +
                                pg.graph().vertex_name(v) + "'");
  for (EdgeId e = 0; e < pg.graph().edge_count(); ++e)
    if (sgn(mu.density[e]) < 0)
      throw SolverInconsistency("canonical measure has a negative density on edge " +
                                std::to_string(e));
  return mu;
}

Measure solve_tau_measure(const Harmonics& h) {
  return solve_constancy(h, {}, 2, "tau measure");
}

std::optional<std::string> audit_canonical_constancy(const PolarizedGraph& pg,
                                                     const Measure& mu_canonical,
                                                     int points_per_edge) {
  const MetrizedGraph& g = pg.graph();
  auto support = pg.canonical_support();
  auto value_at = [&](const GraphPoint& x) -> Rat {
    GreenFunction gf = green_function(g, mu_canonical, x);
    return gf.value_at_divisor(support) + gf.value_at_base();
  };
  Rat level = value_at(GraphPoint::vertex(0));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Rat& len = g.edge(e).length;
    for (int j = 1; j <= points_per_edge; ++j) {
      GraphPoint x = GraphPoint::on_edge(e, len * j / (points_per_edge + 1));
      Rat v = value_at(x);
      if (v != level)
        return "g(x,K)+g(x,x) not constant: edge " + std::to_string(e) + " t=" +
               rat_str(x.t) + " gives " + rat_str(v) + " vs " + rat_str(level);
    }
  }
  return std::nullopt;
}

std::optional<std::string> audit_diagonal_constancy(const MetrizedGraph& g, const Measure& mu_tau,
                                                    int points_per_edge) {
  auto value_at = [&](const GraphPoint& x) { return green_function(g, mu_tau, x).value_at_base(); };
  Rat level = value_at(GraphPoint::vertex(0));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Rat& len = g.edge(e).length;
    for (int j = 1; j <= points_per_edge; ++j) {
      GraphPoint x = GraphPoint::on_edge(e, len * j / (points_per_edge + 1));
      Rat v = value_at(x);
      if (v != level)
        return "g(x,x) not constant: edge " + std::to_string(e) + " t=" + rat_str(x.t) +
               " gives " + rat_str(v) + " vs " + rat_str(level);
    }
  }
  return std::nullopt;
}

Measure canonical_measure(const PolarizedGraph& pg) {
  Harmonics h(pg.graph());
  Measure mu = solve_canonical_measure(h, pg);
  if (auto witness = audit_canonical_constancy(pg, mu, 5))
    throw SolverInconsistency("canonical measure audit failed: " + *witness);
  return mu;
}

Measure tau_measure(const MetrizedGraph& g) {
  Harmonics h(g);
  Measure mu = solve_tau_measure(h);
  if (auto witness = audit_diagonal_constancy(g, mu, 5))
    throw SolverInconsistency("tau measure audit failed: " + *witness);
  return mu;
}

PiecewiseQuadratic diagonal_profile(const Harmonics& h, const Measure& mu) {
  if (mu.mass(h.graph()) != 1)
    throw InvalidMeasure("diagonal profile requires a measure of total mass 1");
  PiecewiseQuadratic profile = h.h_profile(mu);
  profile.shift(-h.resistance_double_integral(mu, mu) / 2);
  return profile;
}

PiecewiseQuadratic diagonal_profile(const MetrizedGraph& g, const Measure& mu) {
  Harmonics h(g);
  return diagonal_profile(h, mu);
}

Rat integrate(const PiecewiseQuadratic& profile, const Measure& nu) {
  const MetrizedGraph& g = profile.graph();
  if (static_cast<int>(nu.atom.size()) != g.vertex_count() ||
      static_cast<int>(nu.density.size()) != g.edge_count())
    throw InvalidMeasure("integrate: measure lives on a different graph");
  Rat total = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (nu.atom[v] != 0) total += nu.atom[v] * profile.vertex_value(v);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (nu.density[e] == 0) continue;
    Rat simpson = profile.simpson_on_edge(e);
    if (simpson != profile.simpson_refined_on_edge(e))
      throw SolverInconsistency("integrate: Simpson refinement mismatch");
    total += nu.density[e] * simpson;
  }
  return total;
}

}  // namespace mg
