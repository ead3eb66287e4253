#include "invariants.hpp"

#include "bounds.hpp"

namespace mg {

namespace {

Measure combine(const Measure& mu, const Rat& scale, const std::vector<int>& extra_atoms) {
  Measure out = mu;
  for (auto& a : out.atom) a *= scale;
  for (auto& d : out.density) d *= scale;
  for (std::size_t v = 0; v < extra_atoms.size(); ++v) out.atom[v] += extra_atoms[v];
  return out;
}

std::vector<int> k_vector(const PolarizedGraph& pg) {
  std::vector<int> k(pg.graph().vertex_count());
  for (VertexId v = 0; v < pg.graph().vertex_count(); ++v) k[v] = pg.k_coeff(v);
  return k;
}

}  // namespace

Analysis::Analysis(const PolarizedGraph& polarized)
    : pg(polarized),
      harmonics(pg.graph()),
      mu_canonical(solve_canonical_measure(harmonics, pg)),
      mu_tau(solve_tau_measure(harmonics)),
      diagonal(diagonal_profile(harmonics, mu_canonical)) {
  const int g = pg.genus();
  const std::vector<int> k = k_vector(pg);

  delta = pg.graph().total_length();
  epsilon = integrate(diagonal, combine(mu_canonical, 2 * g - 2, k));
  {
    std::vector<int> neg_k = k;
    for (auto& c : neg_k) c = -c;
    phi = -delta / 4 + integrate(diagonal, combine(mu_canonical, 10 * g + 2, neg_k)) / 4;
  }
  // tau through the independent constant-diagonal measure
  PiecewiseQuadratic diag_tau = diagonal_profile(harmonics, mu_tau);
  tau = diag_tau.vertex_value(0);
  for (EdgeId e = 0; e < pg.graph().edge_count(); ++e) {
    const auto& q = diag_tau.poly(e);
    if (q.a != 0 || q.b != 0 || q.c != tau)
      throw SolverInconsistency("tau diagonal is not constant");
  }
  lambda = Rat(g - 1) * phi / (6 * (2 * g + 1)) + (epsilon + delta) / 12;
  c_integral = integrate(diagonal, mu_canonical);
  c_formula = (4 * phi + delta + epsilon) / (12 * g);
  sup_diagonal = diagonal.maximum();
}

Rat epsilon_invariant(const PolarizedGraph& pg) { return Analysis(pg).epsilon; }

Rat phi_invariant(const PolarizedGraph& pg) { return Analysis(pg).phi; }

Rat tau_invariant(const MetrizedGraph& g) {
  Harmonics h(g);
  Measure mu = solve_tau_measure(h);
  PiecewiseQuadratic diag = diagonal_profile(h, mu);
  Rat tau = diag.vertex_value(0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& q = diag.poly(e);
    if (q.a != 0 || q.b != 0 || q.c != tau)
      throw SolverInconsistency("tau diagonal is not constant");
  }
  return tau;
}

Rat lambda_invariant(const PolarizedGraph& pg) { return Analysis(pg).lambda; }

Rat c_constant(const PolarizedGraph& pg) {
  Analysis a(pg);
  if (a.c_integral != a.c_formula)
    throw SolverInconsistency("c(Gamma, K): integral and formula routes disagree");
  return a.c_integral;
}

Rat sup_green(const PolarizedGraph& pg) { return Analysis(pg).sup_diagonal; }

bool InvariantReport::all_pass() const {
  for (const auto& entry : identity_audit)
    if (!entry.pass) return false;
  return true;
}

InvariantReport invariant_report(const PolarizedGraph& pg) { return invariant_report(Analysis(pg)); }

InvariantReport invariant_report(const Analysis& a) {
  const MetrizedGraph& g = a.pg.graph();
  InvariantReport report;
  report.genus = a.pg.genus();
  report.is_tree = g.is_tree();
  report.delta = a.delta;
  report.epsilon = a.epsilon;
  report.phi = a.phi;
  report.tau = a.tau;
  report.lambda = a.lambda;
  report.c = a.c_integral;
  report.sup_diagonal = a.sup_diagonal;

  auto push = [&](std::string name, bool pass, std::string witness) {
    report.identity_audit.push_back({std::move(name), pass, pass ? "" : std::move(witness)});
  };

  // 12 g c = 4 phi + delta + epsilon, with c from the integral route
  push("c_dual_path", a.c_integral == a.c_formula,
       "integral " + rat_str(a.c_integral) + " vs formula " + rat_str(a.c_formula));

  // 12 tau = delta + 4 phi - 2 epsilon, tau from the independent measure
  Rat tau_combination = (a.delta + 4 * a.phi - 2 * a.epsilon) / 12;
  push("tau_relation", a.tau == tau_combination,
       "tau " + rat_str(a.tau) + " vs " + rat_str(tau_combination));

  // constancy of g(x, K) + g(x, x) through the Green solver
  {
    auto witness = audit_canonical_constancy(a.pg, a.mu_canonical, 5);
    push("canonical_constancy", !witness.has_value(), witness.value_or(""));
  }

  // diagonal identities g(x,x) = c - g(x,K) = c + (r(x,K) - eps)/(2g)
  {
    bool ok = true;
    std::string witness;
    const int g2 = 2 * report.genus;
    auto support = a.pg.canonical_support();
    const int samples = 10;
    for (int i = 0; i < samples && ok && g.edge_count() > 0; ++i) {
      EdgeId e = i % g.edge_count();
      GraphPoint x = GraphPoint::on_edge(e, g.edge(e).length * (i + 1) / (samples + 1));
      GreenFunction gf = green_function(g, a.mu_canonical, x);
      Rat diag = a.diagonal.value(x);
      if (gf.value(x) != diag) {
        ok = false;
        witness = "diagonal routes disagree at edge " + std::to_string(e);
        break;
      }
      Rat g_x_k = gf.value_at_divisor(support);
      Rat r_x_k = 0;
      for (const auto& [q, coeff] : support)
        r_x_k += coeff * effective_resistance(g, x, GraphPoint::vertex(q));
      if (diag != a.c_integral - g_x_k) {
        ok = false;
        witness = "g(x,x) != c - g(x,K) at edge " + std::to_string(e) + " t=" + rat_str(x.t);
      } else if (diag != a.c_integral + (r_x_k - a.epsilon) / g2) {
        ok = false;
        witness = "g(x,x) != c + (r(x,K)-eps)/(2g) at edge " + std::to_string(e);
      }
    }
    push("moriwaki_diagonal", ok, witness);
  }

  if (report.is_tree)
    push("tree_identity", 2 * a.phi == a.delta + a.epsilon,
         "2 phi " + rat_str(2 * a.phi) + " vs delta + eps " + rat_str(a.delta + a.epsilon));

  return report;
}

GraphPoint random_point(const MetrizedGraph& g, SplitMix64& rng) {
  if (g.edge_count() == 0) return GraphPoint::vertex(0);
  EdgeId e = static_cast<EdgeId>(rng.below(g.edge_count()));
  // interior offset with a fixed small denominator
  const int den = 13;
  int num = 1 + static_cast<int>(rng.below(den - 1));
  return GraphPoint::on_edge(e, g.edge(e).length * num / den);
}

ElkiesReport elkies_check(const std::vector<const Analysis*>& graphs,
                          const std::vector<std::vector<GraphPoint>>& points) {
  if (graphs.empty() || graphs.size() != points.size())
    throw Error("elkies_check: one point set per graph required");
  const int s = static_cast<int>(points.front().size());
  if (s < 2) throw Error("elkies_check: needs at least two points");
  ElkiesReport report;
  report.s = s;
  report.total_sum = report.total_bound_sup = report.total_bound_phi = 0;
  report.all_pass = true;

  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Analysis& a = *graphs[i];
    if (static_cast<int>(points[i].size()) != s)
      throw Error("elkies_check: point counts differ across graphs");
    if (a.pg.genus() < 2)
      throw InvalidPolarization("elkies_check: the phi-form bound needs genus >= 2");
    const MetrizedGraph& g = a.pg.graph();

    // refine at all points once; Green solves run on the refined graph
    Subdivision sub(g, points[i]);
    Measure mu_fine = map_measure(sub, a.mu_canonical);
    std::vector<GreenFunction> greens;
    greens.reserve(s);
    for (int j = 0; j < s; ++j)
      greens.push_back(
          green_function(sub.fine(), mu_fine, GraphPoint::vertex(sub.vertex_of(j))));

    ElkiesRow row;
    row.pair_sum = 0;
    for (int j = 0; j < s; ++j)
      for (int k = 0; k < s; ++k) {
        if (j == k) continue;
        Rat v = greens[j].value(GraphPoint::vertex(sub.vertex_of(k)));
        if (v != greens[k].value(GraphPoint::vertex(sub.vertex_of(j))))
          throw SolverInconsistency("elkies_check: Green symmetry violated");
        row.pair_sum += v;
      }
    row.bound_sup = -s * a.sup_diagonal;
    row.bound_phi = -s * green_sup_constant(a.pg.genus(), false) * a.phi;
    row.pass_sup = row.pair_sum >= row.bound_sup;
    row.pass_phi = row.pair_sum >= row.bound_phi;
    report.all_pass = report.all_pass && row.pass_sup && row.pass_phi;
    report.total_sum += row.pair_sum;
    report.total_bound_sup += row.bound_sup;
    report.total_bound_phi += row.bound_phi;
    report.rows.push_back(std::move(row));
  }
  report.all_pass = report.all_pass && report.total_sum >= report.total_bound_sup &&
                    report.total_sum >= report.total_bound_phi;
  return report;
}

ElkiesReport elkies_check(const std::vector<const Analysis*>& graphs, int s, std::uint64_t seed) {
  std::vector<std::vector<GraphPoint>> points(graphs.size());
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (int j = 0; j < s; ++j) points[i].push_back(random_point(graphs[i]->pg.graph(), rng));
  return elkies_check(graphs, points);
}

bool InequalityReport::all_hold() const {
  for (const auto& entry : entries)
    if (!entry.holds) return false;
  return true;
}

InequalityReport inequality_audit(const Analysis& a, std::uint64_t seed) {
  const MetrizedGraph& g = a.pg.graph();
  const int genus = a.pg.genus();
  InequalityReport report;
  SplitMix64 rng(seed);

  auto push = [&](std::string name, bool holds, Rat margin, std::string witness = "") {
    report.entries.push_back({std::move(name), holds, std::move(margin), std::move(witness)});
  };

  // r(x, y) <= 4 tau on sampled pairs (genus-free)
  {
    bool holds = true;
    Rat min_margin;
    std::string witness;
    bool first = true;
    for (int i = 0; i < 10; ++i) {
      GraphPoint x = random_point(g, rng), y = random_point(g, rng);
      Rat r = effective_resistance(g, x, y);
      Rat margin = 4 * a.tau - r;
      if (first || margin < min_margin) min_margin = margin;
      first = false;
      if (sgn(margin) < 0) {
        holds = false;
        witness = "r = " + rat_str(r) + " > 4 tau = " + rat_str(4 * a.tau);
      }
    }
    push("resistance_tau_bound", holds, first ? Rat(0) : min_margin, witness);
  }

  // epsilon >= 0 (used implicitly by the sup bound; audited, not assumed)
  push("epsilon_nonnegative", sgn(a.epsilon) >= 0, a.epsilon);

  // off-diagonal Green values never exceed the diagonal sup
  {
    bool holds = true;
    Rat min_margin;
    std::string witness;
    bool first = true;
    for (int i = 0; i < 10; ++i) {
      GraphPoint x = random_point(g, rng);
      GreenFunction gf = green_function(g, a.mu_canonical, x);
      for (int j = 0; j < 2; ++j) {
        GraphPoint y = random_point(g, rng);
        Rat margin = a.sup_diagonal - gf.value(y);
        if (first || margin < min_margin) min_margin = margin;
        first = false;
        if (sgn(margin) < 0) {
          holds = false;
          witness = "g(x,y) exceeds sup of the diagonal";
        }
      }
    }
    push("offdiagonal_below_sup", holds, first ? Rat(0) : min_margin, witness);
  }

  if (genus >= 2) {
    // phi > 0 whenever the graph has an edge
    if (g.edge_count() > 0)
      push("phi_positive", sgn(a.phi) > 0, a.phi);

    // sup g <= ((4g-3) delta + (16g-12) phi - (8g-3) eps) / (12g) <= c'(g) phi
    Rat mid = ((4 * genus - 3) * a.delta + (16 * genus - 12) * a.phi -
               (8 * genus - 3) * a.epsilon) /
              (12 * genus);
    push("sup_explicit_bound", a.sup_diagonal <= mid, mid - a.sup_diagonal,
         "sup " + rat_str(a.sup_diagonal) + " vs " + rat_str(mid));
    Rat cap = green_sup_constant(genus, g.is_tree()) * a.phi;
    push("sup_phi_bound", mid <= cap, cap - mid,
         "explicit bound " + rat_str(mid) + " vs " + rat_str(cap));

    // delta <= c_C(g) phi, with the tree constant on trees
    Rat cinkir_cap = cinkir_constant(genus, g.is_tree()) * a.phi;
    push("total_length_bound", a.delta <= cinkir_cap, cinkir_cap - a.delta,
         "delta " + rat_str(a.delta) + " vs " + rat_str(cinkir_cap));

    // (8g+4) lambda >= g delta
    Rat lhs = (8 * genus + 4) * a.lambda;
    push("lambda_bound", lhs >= genus * a.delta, lhs - genus * a.delta);
  }

  return report;
}

InequalityReport inequality_audit(const PolarizedGraph& pg, std::uint64_t seed) {
  return inequality_audit(Analysis(pg), seed);
}

}  // namespace mg
