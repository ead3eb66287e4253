#include "green.hpp"

namespace mg {

GreenFunction::GreenFunction(Subdivision sub, Measure mu_fine, VertexId base_vertex,
                             PiecewiseQuadratic values)
    : sub_(std::move(sub)), mu_(std::move(mu_fine)), base_(base_vertex), values_(std::move(values)) {
  const MetrizedGraph& w = sub_.fine();
  // vertex balance: outgoing derivatives at p sum to mu({p}) - [p = x]
  std::vector<Rat> balance(w.vertex_count(), Rat(0));
  for (EdgeId e = 0; e < w.edge_count(); ++e) {
    const auto& ed = w.edge(e);
    const auto& q = values_.poly(e);
    balance[ed.u] += q.b;                                // derivative at t = 0
    balance[ed.w] -= 2 * q.a * ed.length + q.b;          // -derivative at t = ell
  }
  for (VertexId p = 0; p < w.vertex_count(); ++p) {
    Rat expected = mu_.atom[p] - (p == base_ ? 1 : 0);
    if (balance[p] != expected)
      throw SolverInconsistency("green function: vertex balance violated at '" +
                                w.vertex_name(p) + "'");
  }
  Rat integral = 0;
  for (VertexId p = 0; p < w.vertex_count(); ++p)
    if (mu_.atom[p] != 0) integral += mu_.atom[p] * values_.vertex_value(p);
  for (EdgeId e = 0; e < w.edge_count(); ++e)
    if (mu_.density[e] != 0) integral += mu_.density[e] * values_.integral_on_edge(e);
  if (integral != 0)
    throw SolverInconsistency("green function: integral against mu is nonzero");
}

Rat GreenFunction::value(const GraphPoint& base_point) const {
  return values_.value(sub_.to_fine(base_point));
}

Rat GreenFunction::value_at_divisor(const std::vector<std::pair<VertexId, int>>& support) const {
  Rat sum = 0;
  for (const auto& [v, coeff] : support) sum += coeff * values_.vertex_value(v);
  return sum;
}

Rat GreenFunction::integral_against(const Measure& base_nu) const {
  Rat total = 0;
  for (VertexId v = 0; v < sub_.base().vertex_count(); ++v)
    if (base_nu.atom[v] != 0) total += base_nu.atom[v] * values_.vertex_value(v);
  for (EdgeId e = 0; e < sub_.base().edge_count(); ++e) {
    if (base_nu.density[e] == 0) continue;
    Rat piece = 0;
    for (const auto& frag : sub_.fragments(e)) piece += values_.integral_on_edge(frag.fine_edge);
    total += base_nu.density[e] * piece;
  }
  return total;
}

GreenFunction green_function(const MetrizedGraph& g, const Measure& mu, const GraphPoint& x) {
  if (mu.mass(g) != 1) throw InvalidMeasure("green function requires a measure of total mass 1");
  Subdivision sub(g, {x});
  const MetrizedGraph& w = sub.fine();
  Measure muw = map_measure(sub, mu);
  VertexId xv = sub.vertex_of(0);

  std::vector<Rat> injection(w.vertex_count(), Rat(0));
  injection[xv] += 1;
  for (VertexId p = 0; p < w.vertex_count(); ++p) injection[p] -= muw.atom[p];
  for (EdgeId e = 0; e < w.edge_count(); ++e) {
    const auto& ed = w.edge(e);
    Rat half = muw.density[e] * ed.length / 2;
    injection[ed.u] -= half;
    injection[ed.w] -= half;
  }

  VertexSystem sys(w);
  std::vector<Rat> phi = sys.solve_potentials(injection);

  std::vector<PiecewiseQuadratic::EdgePoly> polys(w.edge_count());
  for (EdgeId e = 0; e < w.edge_count(); ++e) {
    const auto& ed = w.edge(e);
    auto& q = polys[e];
    q.a = muw.density[e] / 2;
    q.c = phi[ed.u];
    q.b = (phi[ed.w] - phi[ed.u]) / ed.length - q.a * ed.length;
  }
  PiecewiseQuadratic vals(w, std::move(polys), std::move(phi));

  // fix the additive constant: integral of g against mu must vanish
  Rat integral = 0;
  for (VertexId p = 0; p < w.vertex_count(); ++p)
    if (muw.atom[p] != 0) integral += muw.atom[p] * vals.vertex_value(p);
  for (EdgeId e = 0; e < w.edge_count(); ++e)
    if (muw.density[e] != 0) integral += muw.density[e] * vals.integral_on_edge(e);
  vals.shift(-integral);

  return GreenFunction(std::move(sub), std::move(muw), xv, std::move(vals));
}

Rat green_value(const MetrizedGraph& g, const Measure& mu, const GraphPoint& x,
                const GraphPoint& y) {
  if (mu.mass(g) != 1) throw InvalidMeasure("green value requires a measure of total mass 1");
  Rat via_solver = green_function(g, mu, x).value(y);

  // potential-kernel route
  Harmonics hm(g);
  Subdivision sub(g, {x, y});
  VertexSystem sys(sub.fine());
  Measure muw = map_measure(sub, mu);
  VertexId xv = sub.vertex_of(0), yv = sub.vertex_of(1);
  auto h_at = [&](VertexId v) {
    Rat h = 0;
    for (VertexId q = 0; q < sub.fine().vertex_count(); ++q)
      if (muw.atom[q] != 0) h += muw.atom[q] * sys.resistance(v, q);
    for (EdgeId e = 0; e < sub.fine().edge_count(); ++e)
      if (muw.density[e] != 0) h += muw.density[e] * sys.edge_resistance_integral(e, v);
    return h;
  };
  Rat rxy = sys.resistance(xv, yv);
  Rat constant = hm.resistance_double_integral(mu, mu);
  Rat via_kernel = (h_at(xv) + h_at(yv) - rxy) / 2 - constant / 2;

  if (via_solver != via_kernel)
    throw SolverInconsistency("green value: Laplacian and kernel routes disagree");
  return via_solver;
}

Rat effective_resistance(const MetrizedGraph& g, const GraphPoint& p, const GraphPoint& q) {
  if (g.points_equal(p, q)) return 0;
  Subdivision sub(g, {p, q});
  VertexSystem sys(sub.fine());
  return sys.resistance(sub.vertex_of(0), sub.vertex_of(1));
}

std::optional<Rat> resistance_outside_edge(const MetrizedGraph& g, EdgeId e) {
  if (e < 0 || e >= g.edge_count()) throw InvalidPoint("edge id out of range");
  VertexSystem sys(g);
  if (sys.is_bridge(e)) return std::nullopt;
  return sys.outside_resistance(e);
}

Rat j_function(const MetrizedGraph& g, const GraphPoint& zeta, const GraphPoint& x,
               const GraphPoint& y) {
  Subdivision sub(g, {zeta, x, y});
  VertexSystem sys(sub.fine());
  VertexId zv = sub.vertex_of(0), xv = sub.vertex_of(1), yv = sub.vertex_of(2);
  return (sys.resistance(xv, zv) + sys.resistance(yv, zv) - sys.resistance(xv, yv)) / 2;
}

}  // namespace mg
