#include "harmonic.hpp"

namespace mg {

Rat Measure::mass(const MetrizedGraph& g) const {
  Rat total = 0;
  for (const Rat& a : atom) total += a;
  for (EdgeId e = 0; e < g.edge_count(); ++e) total += density[e] * g.edge(e).length;
  return total;
}

Measure map_measure(const Subdivision& sub, const Measure& base_measure) {
  Measure fine = Measure::zero(sub.fine());
  for (VertexId v = 0; v < static_cast<int>(base_measure.atom.size()); ++v)
    fine.atom[v] = base_measure.atom[v];
  for (EdgeId e = 0; e < sub.base().edge_count(); ++e)
    for (const auto& frag : sub.fragments(e)) fine.density[frag.fine_edge] = base_measure.density[e];
  return fine;
}

PiecewiseQuadratic::PiecewiseQuadratic(MetrizedGraph g, std::vector<EdgePoly> per_edge,
                                       std::vector<Rat> vertex_values)
    : g_(std::move(g)), poly_(std::move(per_edge)), vertex_(std::move(vertex_values)) {
  if (static_cast<int>(poly_.size()) != g_.edge_count() ||
      static_cast<int>(vertex_.size()) != g_.vertex_count())
    throw SolverInconsistency("piecewise quadratic: size mismatch");
  for (EdgeId e = 0; e < g_.edge_count(); ++e) {
    const auto& ed = g_.edge(e);
    if (poly_[e].value(Rat(0)) != vertex_[ed.u] || poly_[e].value(ed.length) != vertex_[ed.w])
      throw SolverInconsistency("piecewise quadratic: discontinuous at an edge endpoint");
  }
}

Rat PiecewiseQuadratic::value(const GraphPoint& p) const {
  GraphPoint n = g_.normalize(p);
  if (n.at_vertex) return vertex_[n.v];
  return poly_[n.e].value(n.t);
}

Rat PiecewiseQuadratic::maximum() const {
  Rat best = vertex_.at(0);
  for (const Rat& v : vertex_)
    if (v > best) best = v;
  for (EdgeId e = 0; e < g_.edge_count(); ++e) {
    const auto& q = poly_[e];
    if (sgn(q.a) < 0) {
      Rat crit = -q.b / (2 * q.a);
      if (sgn(crit) > 0 && crit < g_.edge(e).length) {
        Rat v = q.value(crit);
        if (v > best) best = v;
      }
    }
  }
  return best;
}

GraphPoint PiecewiseQuadratic::argmax() const {
  Rat best = vertex_.at(0);
  GraphPoint where = GraphPoint::vertex(0);
  for (VertexId v = 0; v < g_.vertex_count(); ++v)
    if (vertex_[v] > best) {
      best = vertex_[v];
      where = GraphPoint::vertex(v);
    }
  for (EdgeId e = 0; e < g_.edge_count(); ++e) {
    const auto& q = poly_[e];
    if (sgn(q.a) < 0) {
      Rat crit = -q.b / (2 * q.a);
      if (sgn(crit) > 0 && crit < g_.edge(e).length) {
        Rat v = q.value(crit);
        if (v > best) {
          best = v;
          where = GraphPoint::on_edge(e, crit);
        }
      }
    }
  }
  return where;
}

Rat PiecewiseQuadratic::integral_on_edge(EdgeId e) const {
  const auto& q = poly_.at(e);
  const Rat& L = g_.edge(e).length;
  return ((q.a * L / 3 + q.b / 2) * L + q.c) * L;
}

Rat PiecewiseQuadratic::simpson_on_edge(EdgeId e) const {
  const auto& q = poly_.at(e);
  const Rat& L = g_.edge(e).length;
  return L * (q.value(Rat(0)) + 4 * q.value(L / 2) + q.value(L)) / 6;
}

Rat PiecewiseQuadratic::simpson_refined_on_edge(EdgeId e) const {
  const auto& q = poly_.at(e);
  const Rat& L = g_.edge(e).length;
  return L *
         (q.value(Rat(0)) + 4 * q.value(L / 4) + 2 * q.value(L / 2) + 4 * q.value(3 * L / 4) +
          q.value(L)) /
         12;
}

void PiecewiseQuadratic::shift(const Rat& constant) {
  for (auto& q : poly_) q.c += constant;
  for (auto& v : vertex_) v += constant;
}

PiecewiseQuadratic::EdgePoly fit_quadratic_certified(
    const std::vector<Rat>& ts, const std::vector<Rat>& values, const Rat& value_at_0,
    const Rat& value_at_len, const Rat& len, const std::string& what_for) {
  if (ts.size() < 4 || values.size() != ts.size())
    throw SolverInconsistency("quadratic fit needs four samples");
  // divided differences through the first three samples
  Rat d01 = (values[1] - values[0]) / (ts[1] - ts[0]);
  Rat d02 = (values[2] - values[0]) / (ts[2] - ts[0]);
  PiecewiseQuadratic::EdgePoly q;
  q.a = (d02 - d01) / (ts[2] - ts[1]);
  q.b = d01 - q.a * (ts[0] + ts[1]);
  q.c = values[0] - (q.a * ts[0] + q.b) * ts[0];
  for (std::size_t k = 3; k < ts.size(); ++k)
    if (q.value(ts[k]) != values[k])
      throw DegreeCertificateFailure(what_for + ": fourth sample off the fitted quadratic");
  if (q.value(Rat(0)) != value_at_0 || q.value(len) != value_at_len)
    throw DegreeCertificateFailure(what_for + ": endpoint value off the fitted quadratic");
  return q;
}

Harmonics::Harmonics(const MetrizedGraph& g) : base_(g) {
  const int nv = g.vertex_count();
  const int ne = g.edge_count();

  vertex_int_.assign(nv, std::vector<Rat>(ne));
  for (VertexId p = 0; p < nv; ++p)
    for (EdgeId e = 0; e < ne; ++e) vertex_int_[p][e] = base_.edge_resistance_integral(e, p);

  sample_r_.assign(ne, {});
  sample_int_.assign(ne, {});
  for (EdgeId e = 0; e < ne; ++e) {
    std::vector<GraphPoint> pts;
    for (int k = 0; k < kSamples; ++k) pts.push_back(sample_point(e, k));
    Subdivision sub(g, pts);
    VertexSystem sys(sub.fine());
    sample_r_[e].assign(kSamples, std::vector<Rat>(nv));
    sample_int_[e].assign(kSamples, std::vector<Rat>(ne));
    for (int k = 0; k < kSamples; ++k) {
      VertexId x = sub.vertex_of(k);
      for (VertexId p = 0; p < nv; ++p) sample_r_[e][k][p] = sys.resistance(x, p);
      for (EdgeId ep = 0; ep < ne; ++ep) {
        Rat total = 0;
        for (const auto& frag : sub.fragments(ep))
          total += sys.edge_resistance_integral(frag.fine_edge, x);
        sample_int_[e][k][ep] = total;
      }
    }
  }

  // double integrals: integrate the certified quadratic s -> I_{e'}(x_e(s))
  double_int_.assign(ne, std::vector<Rat>(ne));
  for (EdgeId e = 0; e < ne; ++e) {
    const auto& ed = g.edge(e);
    std::vector<Rat> ts;
    for (int k = 0; k < kSamples; ++k) ts.push_back(sample_offset(e, k));
    for (EdgeId ep = 0; ep < ne; ++ep) {
      std::vector<Rat> vals;
      for (int k = 0; k < kSamples; ++k) vals.push_back(sample_int_[e][k][ep]);
      auto q = fit_quadratic_certified(ts, vals, vertex_int_[ed.u][ep], vertex_int_[ed.w][ep],
                                       ed.length, "edge integral profile");
      double_int_[e][ep] = ((q.a * ed.length / 3 + q.b / 2) * ed.length + q.c) * ed.length;
    }
  }
  // the double integral is symmetric; both evaluation orders must agree
  for (EdgeId e = 0; e < ne; ++e)
    for (EdgeId ep = 0; ep < e; ++ep)
      if (double_int_[e][ep] != double_int_[ep][e])
        throw SolverInconsistency("asymmetric double edge integral");
}

Rat Harmonics::sample_offset(EdgeId e, int k) const {
  return graph().edge(e).length * (k + 1) / 5;
}

GraphPoint Harmonics::sample_point(EdgeId e, int k) const {
  return GraphPoint::on_edge(e, sample_offset(e, k));
}

const Rat& Harmonics::sample_vertex_resistance(EdgeId e, int k, VertexId p) const {
  return sample_r_.at(e).at(k).at(p);
}

const Rat& Harmonics::sample_edge_integral(EdgeId e, int k, EdgeId ep) const {
  return sample_int_.at(e).at(k).at(ep);
}

const Rat& Harmonics::vertex_edge_integral(VertexId p, EdgeId ep) const {
  return vertex_int_.at(p).at(ep);
}

const Rat& Harmonics::double_edge_integral(EdgeId e, EdgeId ep) const {
  return double_int_.at(e).at(ep);
}

Rat Harmonics::h_at_vertex(const Measure& mu, VertexId p) const {
  Rat h = 0;
  for (VertexId q = 0; q < graph().vertex_count(); ++q)
    if (mu.atom[q] != 0) h += mu.atom[q] * base_.resistance(p, q);
  for (EdgeId e = 0; e < graph().edge_count(); ++e)
    if (mu.density[e] != 0) h += mu.density[e] * vertex_int_[p][e];
  return h;
}

Rat Harmonics::h_at_sample(const Measure& mu, EdgeId e, int k) const {
  Rat h = 0;
  for (VertexId q = 0; q < graph().vertex_count(); ++q)
    if (mu.atom[q] != 0) h += mu.atom[q] * sample_r_[e][k][q];
  for (EdgeId ep = 0; ep < graph().edge_count(); ++ep)
    if (mu.density[ep] != 0) h += mu.density[ep] * sample_int_[e][k][ep];
  return h;
}

PiecewiseQuadratic Harmonics::h_profile(const Measure& mu) const {
  const MetrizedGraph& g = graph();
  std::vector<Rat> at_vertex(g.vertex_count());
  for (VertexId p = 0; p < g.vertex_count(); ++p) at_vertex[p] = h_at_vertex(mu, p);
  std::vector<PiecewiseQuadratic::EdgePoly> polys(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    std::vector<Rat> ts, vals;
    for (int k = 0; k < kSamples; ++k) {
      ts.push_back(sample_offset(e, k));
      vals.push_back(h_at_sample(mu, e, k));
    }
    polys[e] = fit_quadratic_certified(ts, vals, at_vertex[ed.u], at_vertex[ed.w], ed.length,
                                       "h profile");
  }
  return PiecewiseQuadratic(g, std::move(polys), std::move(at_vertex));
}

Rat Harmonics::resistance_double_integral(const Measure& mu, const Measure& nu) const {
  const MetrizedGraph& g = graph();
  Rat total = 0;
  for (VertexId p = 0; p < g.vertex_count(); ++p) {
    if (mu.atom[p] == 0) continue;
    for (VertexId q = 0; q < g.vertex_count(); ++q)
      if (nu.atom[q] != 0) total += mu.atom[p] * nu.atom[q] * base_.resistance(p, q);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (nu.density[e] != 0) total += mu.atom[p] * nu.density[e] * vertex_int_[p][e];
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (mu.density[e] == 0) continue;
    for (VertexId q = 0; q < g.vertex_count(); ++q)
      if (nu.atom[q] != 0) total += mu.density[e] * nu.atom[q] * vertex_int_[q][e];
    for (EdgeId ep = 0; ep < g.edge_count(); ++ep)
      if (nu.density[ep] != 0) total += mu.density[e] * nu.density[ep] * double_int_[e][ep];
  }
  return total;
}

}  // namespace mg
