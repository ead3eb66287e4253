#include "network.hpp"

namespace mg {

VertexSystem::VertexSystem(MetrizedGraph g) : g_(std::move(g)) {
  const int n = g_.vertex_count();
  // weighted Laplacian with conductances 1/ell, grounded at vertex 0
  Mat lap(n, n);
  for (const auto& e : g_.edges()) {
    Rat c = 1 / e.length;
    lap(e.u, e.u) += c;
    lap(e.w, e.w) += c;
    lap(e.u, e.w) -= c;
    lap(e.w, e.u) -= c;
  }
  m_ = Mat(n, n);
  if (n > 1) {
    Mat reduced(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) reduced(i - 1, j - 1) = lap(i, j);
    Mat inv = exact_inverse(reduced);
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) m_(i, j) = inv(i - 1, j - 1);
  }

  edata_.resize(g_.edge_count());
  for (EdgeId e = 0; e < g_.edge_count(); ++e) {
    const auto& ed = g_.edge(e);
    EdgeData d;
    d.sigma.resize(n);
    for (int a = 0; a < n; ++a) d.sigma[a] = m_(a, ed.u) - m_(a, ed.w);
    d.slack = ed.length - resistance(ed.u, ed.w);
    if (sgn(d.slack) == 0) {
      // bridge: label the two components of the deleted graph
      d.side.assign(n, -1);
      std::vector<int> stack{ed.u};
      d.side[ed.u] = 0;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (EdgeId f : g_.incident(v)) {
          if (f == e) continue;
          const auto& fe = g_.edge(f);
          int other = (fe.u == v) ? fe.w : fe.u;
          if (d.side[other] < 0) {
            d.side[other] = 0;
            stack.push_back(other);
          }
        }
      }
      for (int v = 0; v < n; ++v)
        if (d.side[v] < 0) d.side[v] = 1;
    }
    edata_[e] = std::move(d);
  }
}

Rat VertexSystem::resistance(VertexId a, VertexId b) const {
  return m_(a, a) + m_(b, b) - 2 * m_(a, b);
}

bool VertexSystem::is_bridge(EdgeId e) const { return sgn(edata_.at(e).slack) == 0; }

Rat VertexSystem::outside_resistance(EdgeId e) const {
  if (is_bridge(e)) throw InvalidGraph("edge is a bridge; outside resistance is infinite");
  const auto& d = edata_[e];
  const auto& ed = g_.edge(e);
  // r'(u,w) with the edge's own conductance removed: series of the update
  Rat r = resistance(ed.u, ed.w);
  Rat diff = d.sigma[ed.u] - d.sigma[ed.w];  // equals r(u,w)
  return r + diff * diff / d.slack;
}

Rat VertexSystem::deleted_resistance(EdgeId e, VertexId a, VertexId b) const {
  const auto& d = edata_.at(e);
  if (sgn(d.slack) == 0) {
    if (d.side[a] != d.side[b])
      throw InvalidGraph("vertices separated by bridge removal");
    return resistance(a, b);  // unchanged within one side
  }
  Rat diff = d.sigma[a] - d.sigma[b];
  return resistance(a, b) + diff * diff / d.slack;
}

int VertexSystem::bridge_side(EdgeId e, VertexId p) const {
  const auto& d = edata_.at(e);
  if (sgn(d.slack) != 0) throw InvalidGraph("bridge_side queried on a non-bridge");
  return d.side.at(p);
}

Rat VertexSystem::interior_resistance(EdgeId e, const Rat& s, VertexId p) const {
  const auto& ed = g_.edge(e);
  if (sgn(s) < 0 || s > ed.length) throw InvalidPoint("offset outside edge");
  if (is_bridge(e)) {
    if (bridge_side(e, p) == 0) return s + resistance(ed.u, p);
    return ed.length - s + resistance(ed.w, p);
  }
  const Rat R = outside_resistance(e);
  const Rat ru = deleted_resistance(e, ed.u, p);
  const Rat rw = deleted_resistance(e, ed.w, p);
  const Rat A = (ru - rw + R) / 2;
  const Rat B = R - A;
  const Rat J = (ru + rw - R) / 2;
  return (s + A) * (ed.length - s + B) / (ed.length + R) + J;
}

Rat VertexSystem::edge_resistance_integral(EdgeId e, VertexId p) const {
  const auto& ed = g_.edge(e);
  const Rat& L = ed.length;
  if (is_bridge(e)) {
    Rat base = bridge_side(e, p) == 0 ? resistance(ed.u, p) : resistance(ed.w, p);
    return L * L / 2 + L * base;
  }
  const Rat R = outside_resistance(e);
  const Rat ru = deleted_resistance(e, ed.u, p);
  const Rat rw = deleted_resistance(e, ed.w, p);
  const Rat A = (ru - rw + R) / 2;
  const Rat B = R - A;
  const Rat J = (ru + rw - R) / 2;
  // integral of (s+A)(L+B-s) over [0,L]
  Rat quad = -L * L * L / 3 + (L + B - A) * L * L / 2 + A * (L + B) * L;
  return quad / (L + R) + L * J;
}

std::vector<Rat> VertexSystem::solve_potentials(const std::vector<Rat>& injection) const {
  const int n = g_.vertex_count();
  if (static_cast<int>(injection.size()) != n)
    throw SolverInconsistency("injection size mismatch");
  Rat sum = 0;
  for (const Rat& q : injection) sum += q;
  if (sum != 0) throw SolverInconsistency("injection does not sum to zero");
  std::vector<Rat> phi(n, Rat(0));
  for (int i = 1; i < n; ++i) {
    Rat acc = 0;
    for (int j = 1; j < n; ++j)
      if (injection[j] != 0) acc += m_(i, j) * injection[j];
    phi[i] = acc;
  }
  return phi;
}

}  // namespace mg
