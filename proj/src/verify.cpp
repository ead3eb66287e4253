#include "verify.hpp"

#include "io.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <set>
#include <thread>

namespace mg {

void GeneratorParams::validate() const {
  if (max_vertices < 1 || max_edges < 1 || length_denominator_bound < 1 || genus_min < 1 ||
      points_per_elkies < 2)
    throw GenerationFailure("generator parameters out of range");
  if (max_edges < max_vertices - 1)
    throw GenerationFailure("max_edges must be at least max_vertices - 1");
}

PolarizedGraph random_graph(std::uint64_t seed, const GeneratorParams& params) {
  params.validate();
  SplitMix64 rng(seed);

  // vertex count: mostly >= 2, occasionally the degenerate point graph
  int nv;
  if (params.max_vertices == 1 || rng.below(50) == 0)
    nv = 1;
  else
    nv = 2 + static_cast<int>(rng.below(params.max_vertices - 1));

  auto random_length = [&]() {
    int num = 1 + static_cast<int>(rng.below(params.length_denominator_bound));
    int den = 1 + static_cast<int>(rng.below(params.length_denominator_bound));
    return rat(num, den);
  };

  std::vector<std::string> names;
  for (int v = 0; v < nv; ++v) names.push_back("v" + std::to_string(v));
  std::vector<MetrizedGraph::EdgeSpec> specs;
  // random recursive tree, then extra edges (parallels and loops allowed)
  for (int v = 1; v < nv; ++v) {
    int parent = static_cast<int>(rng.below(v));
    specs.push_back({names[parent], names[v], random_length()});
  }
  if (!params.tree_only && nv >= 2) {
    int span = params.max_edges - (nv - 1);
    int extras = span > 0 ? static_cast<int>(rng.below(span + 1)) : 0;
    for (int i = 0; i < extras; ++i) {
      int u = static_cast<int>(rng.below(nv));
      int w = static_cast<int>(rng.below(nv));
      Rat len = random_length();
      // loops split at their midpoint; keep the halves within the
      // denominator bound by doubling the drawn length
      if (u == w) len *= 2;
      specs.push_back({names[u], names[w], len});
    }
  }
  MetrizedGraph g = MetrizedGraph::build(std::move(names), specs);

  // Random polarization with even m_p = 2 q_p (q_p plays the role of a
  // component genus; the inequality suite is a theorem for exactly this
  // class), repaired to effectivity and genus_min. deg K = 2(E - V) + sum m
  // is automatically even.
  std::vector<int> m(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    static const int kGenusDraws[] = {0, 0, 0, 0, 1, 1, 1, 2};
    m[v] = 2 * kGenusDraws[rng.below(8)];
    if (g.valence(v) <= 1 && m[v] < 2) m[v] = 2;  // leaves and isolated points
  }
  int deg = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) deg += g.valence(v) + m[v] - 2;
  if (deg % 2 != 0)
    throw GenerationFailure("even-m polarization produced odd degree");  // unreachable
  while (deg / 2 + 1 < params.genus_min) {
    m[rng.below(g.vertex_count())] += 2;
    deg += 2;
  }

  std::vector<std::pair<GraphPoint, int>> pairs;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (m[v] > 0) pairs.emplace_back(GraphPoint::vertex(v), m[v]);
  return PolarizedGraph::make(g, pairs);
}

namespace {

struct InstanceResult {
  CampaignRow row;
  std::vector<CampaignFailure> failures;
};

std::vector<std::pair<GraphPoint, int>> vertex_polarization(const PolarizedGraph& pg) {
  std::vector<std::pair<GraphPoint, int>> pairs;
  for (VertexId v = 0; v < pg.graph().vertex_count(); ++v)
    if (pg.m(v) > 0) pairs.emplace_back(GraphPoint::vertex(v), pg.m(v));
  return pairs;
}

std::vector<Rat> invariant_vector(const Analysis& a) {
  return {a.delta, a.epsilon, a.phi, a.tau, a.lambda, a.c_integral, a.sup_diagonal};
}

InstanceResult run_instance(int index, std::uint64_t instance_seed,
                            const GeneratorParams& params) {
  InstanceResult result;
  result.row.index = index;
  result.row.instance_seed = instance_seed;
  result.row.min_inequality_margin = 0;

  PolarizedGraph pg = random_graph(instance_seed, params);
  std::string graph_json = serialize_graph(pg);
  result.row.digest = digest_hex(graph_json);
  result.row.genus = pg.genus();
  result.row.is_tree = pg.graph().is_tree();
  result.row.vertices = pg.graph().vertex_count();
  result.row.edges = pg.graph().edge_count();

  auto fail = [&](const std::string& check, const std::string& witness) {
    result.failures.push_back(
        {index, instance_seed, result.row.digest, check, witness, graph_json});
    result.row.ok = false;
  };

  try {
    const MetrizedGraph& g = pg.graph();
    Analysis a(pg);
    result.row.delta = a.delta;
    result.row.epsilon = a.epsilon;
    result.row.phi = a.phi;
    result.row.tau = a.tau;
    result.row.lambda = a.lambda;
    result.row.c = a.c_integral;
    result.row.sup_diagonal = a.sup_diagonal;

    InvariantReport report = invariant_report(a);
    for (const auto& audit : report.identity_audit)
      if (!audit.pass) fail("identity:" + audit.name, audit.witness);

    // Foster: sum over edges of r(endpoints)/length equals V - 1
    {
      Rat foster = 0;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        foster += a.harmonics.base().resistance(ed.u, ed.w) / ed.length;
      }
      if (foster != g.vertex_count() - 1)
        fail("foster_identity", "sum = " + rat_str(foster));
    }

    // Green engine spot checks on a random pair
    {
      SplitMix64 rng(SplitMix64::mix(instance_seed, 11));
      GraphPoint x = random_point(g, rng), y = random_point(g, rng);
      GreenFunction gx = green_function(g, a.mu_canonical, x);
      GreenFunction gy = green_function(g, a.mu_canonical, y);
      if (gx.value(y) != gy.value(x))
        fail("green_symmetry", "g(x,y) != g(y,x) at " + rat_str(gx.value(y)));
      if (gx.integral_against(a.mu_canonical) != 0)
        fail("green_normalization", "integral of g(x,.) dmu nonzero");
      try {
        green_value(g, a.mu_canonical, x, y);  // throws if the two routes differ
      } catch (const SolverInconsistency& err) {
        fail("dual_engine", err.what());
      }
      if (j_function(g, x, x, y) != 0) fail("j_grounding", "j_x(x,y) != 0");
      if (j_function(g, y, x, x) != effective_resistance(g, x, y))
        fail("j_collapse", "j_zeta(x,x) != r(x,zeta)");
    }

    // inequality families
    {
      InequalityReport ineq = inequality_audit(a, SplitMix64::mix(instance_seed, 13));
      bool first = true;
      for (const auto& entry : ineq.entries) {
        if (!entry.holds) fail("inequality:" + entry.name, entry.witness);
        if (first || entry.margin < result.row.min_inequality_margin)
          result.row.min_inequality_margin = entry.margin;
        first = false;
      }
    }

    // multi-point Green lower bounds
    if (pg.genus() >= 2) {
      std::set<int> point_counts{2, 3, 5};
      point_counts.insert(params.points_per_elkies);
      for (int s : point_counts) {
        ElkiesReport er = elkies_check({&a}, s, SplitMix64::mix(instance_seed, 17 + s));
        if (!er.all_pass)
          fail("elkies_s" + std::to_string(s),
               "sum " + rat_str(er.total_sum) + " bounds " + rat_str(er.total_bound_sup) + ", " +
                   rat_str(er.total_bound_phi));
      }
    }

    // subdivision invariance of the full vector and of a sampled resistance
    {
      SplitMix64 rng(SplitMix64::mix(instance_seed, 19));
      GraphPoint p = random_point(g, rng);
      GraphPoint x = random_point(g, rng), y = random_point(g, rng);
      Rat r_before = effective_resistance(g, x, y);
      Subdivision sub(g, {p});
      PolarizedGraph fine_pg = PolarizedGraph::make(sub.fine(), vertex_polarization(pg));
      Analysis fine(fine_pg);
      if (invariant_vector(fine) != invariant_vector(a))
        fail("subdivision_invariance", "invariant vector changed at cut " + rat_str(p.t));
      if (effective_resistance(sub.fine(), sub.to_fine(x), sub.to_fine(y)) != r_before)
        fail("subdivision_invariance", "resistance changed under subdivision");
    }

    // scaling homogeneity: lengths scaled by lambda scale the vector by lambda
    {
      SplitMix64 rng(SplitMix64::mix(instance_seed, 23));
      Rat lambda = rat(1 + static_cast<int>(rng.below(6)), 1 + static_cast<int>(rng.below(4)));
      MetrizedGraph gs = scaled(g, lambda);
      PolarizedGraph pgs = PolarizedGraph::make(gs, vertex_polarization(pg));
      Analysis as(pgs);
      std::vector<Rat> expect = invariant_vector(a);
      for (auto& v : expect) v *= lambda;
      if (invariant_vector(as) != expect)
        fail("scaling_homogeneity", "vector not scaled by " + rat_str(lambda));
      GraphPoint x = random_point(g, rng);
      GraphPoint y = random_point(g, rng);
      auto scale_point = [&](const GraphPoint& q) {
        return q.at_vertex ? q : GraphPoint::on_edge(q.e, q.t * lambda);
      };
      if (effective_resistance(gs, scale_point(x), scale_point(y)) !=
          lambda * effective_resistance(g, x, y))
        fail("scaling_homogeneity", "resistance not scaled by " + rat_str(lambda));
    }
  } catch (const Error& err) {
    fail("exception", err.what());
  }
  return result;
}

int resolve_threads(int requested, int count) {
  int threads = requested;
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  if (const char* cap = std::getenv("MG_THREADS")) {
    int limit = std::atoi(cap);
    if (limit >= 1) threads = std::min(threads, limit);
  }
  return std::max(1, std::min(threads, count));
}

}  // namespace

CampaignReport campaign(std::uint64_t seed, int count, const GeneratorParams& params,
                        int threads) {
  if (count < 1) throw GenerationFailure("campaign count must be at least 1");
  params.validate();
  auto start = std::chrono::steady_clock::now();

  CampaignReport report;
  report.seed = seed;
  report.count = count;
  report.params = params;

  std::vector<InstanceResult> results(count);
  const int workers = resolve_threads(threads, count);
  std::atomic<int> cursor{0};
  auto work = [&]() {
    for (;;) {
      int i = cursor.fetch_add(1);
      if (i >= count) return;
      results[i] = run_instance(i, SplitMix64::mix(seed, i), params);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  for (auto& r : results) {
    report.rows.push_back(std::move(r.row));
    for (auto& f : r.failures) report.failures.push_back(std::move(f));
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace mg
