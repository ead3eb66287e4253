#pragma once

// The invariant vector (delta, epsilon, phi, tau, lambda, c, sup g) of a
// polarized metrized graph, the identity audit behind it, the multi-point
// lower bound check for sums of Green values, and the inequality audit.

#include "canonical.hpp"
#include "rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mg {

// One computation pass over a polarized graph; every later quantity reuses
// the same kernel table and canonical/tau measures.
struct Analysis {
  explicit Analysis(const PolarizedGraph& polarized);

  PolarizedGraph pg;
  Harmonics harmonics;
  Measure mu_canonical;  // nonnegative, mass 1
  Measure mu_tau;        // mass 1, signed at vertices of valence >= 3
  PiecewiseQuadratic diagonal;  // x -> g(x, x) for the canonical measure

  Rat delta, epsilon, phi, tau, lambda;
  Rat c_integral;  // integral of g(x,x) dmu_K
  Rat c_formula;   // (4 phi + delta + epsilon) / (12 g)
  Rat sup_diagonal;
};

struct AuditEntry {
  std::string name;
  bool pass;
  std::string witness;  // empty when pass
};

struct InvariantReport {
  int genus = 1;
  bool is_tree = true;
  Rat delta, epsilon, phi, tau, lambda, c, sup_diagonal;
  std::vector<AuditEntry> identity_audit;

  bool all_pass() const;
};

// Spec operations. Each rebuilds the analysis; use Analysis directly for
// repeated queries on one graph.
Rat epsilon_invariant(const PolarizedGraph& pg);
Rat phi_invariant(const PolarizedGraph& pg);
Rat tau_invariant(const MetrizedGraph& g);
Rat lambda_invariant(const PolarizedGraph& pg);
// Both routes (Lemma-style formula and the integral of the diagonal against
// the canonical measure) must agree exactly.
Rat c_constant(const PolarizedGraph& pg);
Rat sup_green(const PolarizedGraph& pg);

InvariantReport invariant_report(const PolarizedGraph& pg);
InvariantReport invariant_report(const Analysis& a);

// Sum of g(x_j, x_k) over ordered pairs j != k against its two lower bounds
// (-s sup g and -s c'(g) phi); the phi-form needs genus >= 2.
struct ElkiesRow {
  Rat pair_sum;
  Rat bound_sup;  // -s * sup g
  Rat bound_phi;  // -s * c'(g) * phi
  bool pass_sup = false, pass_phi = false;
};
struct ElkiesReport {
  int s = 0;
  std::vector<ElkiesRow> rows;
  Rat total_sum, total_bound_sup, total_bound_phi;
  bool all_pass = false;
};

ElkiesReport elkies_check(const std::vector<const Analysis*>& graphs,
                          const std::vector<std::vector<GraphPoint>>& points);
// Convenience: s random points per graph drawn from `seed`.
ElkiesReport elkies_check(const std::vector<const Analysis*>& graphs, int s, std::uint64_t seed);

struct InequalityEntry {
  std::string name;
  bool holds;
  Rat margin;  // bound minus value (or value minus bound), >= 0 when holding
  std::string witness;
};
struct InequalityReport {
  std::vector<InequalityEntry> entries;
  bool all_hold() const;
};

// Evaluates, exactly: r <= 4 tau on sampled pairs, the diagonal sup bounds,
// the total-length bound delta <= c_C(g) phi (tree constant on trees), the
// lambda bound (8g+4) lambda >= g delta, epsilon >= 0, phi > 0, and that no
// sampled off-diagonal Green value exceeds the diagonal sup. Genus 1 runs
// only the genus-free checks.
InequalityReport inequality_audit(const Analysis& a, std::uint64_t seed = 7);
InequalityReport inequality_audit(const PolarizedGraph& pg, std::uint64_t seed = 7);

// Deterministic sample point for audits: interior point of an edge, or the
// lone vertex of an edgeless graph.
GraphPoint random_point(const MetrizedGraph& g, SplitMix64& rng);

}  // namespace mg
