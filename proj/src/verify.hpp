#pragma once

// Seeded random generation of polarized metrized graphs and the campaign
// runner that exercises every identity and inequality on each instance:
// the invariant report audits, the inequality audit, the multi-point Green
// lower bounds, plus subdivision-invariance and scaling-homogeneity of the
// whole invariant vector.

#include "invariants.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mg {

struct GeneratorParams {
  int max_vertices = 10;
  int max_edges = 13;
  int length_denominator_bound = 12;
  bool tree_only = false;
  int genus_min = 2;
  int points_per_elkies = 3;  // s

  void validate() const;  // throws GenerationFailure
};

// Deterministic in (seed, params). The polarization is repaired to be
// effective (leaves get m >= 1), of even degree (a uniformly chosen m_p is
// incremented) and of genus >= genus_min (a uniformly chosen m_p grows by 2
// per missing genus).
PolarizedGraph random_graph(std::uint64_t seed, const GeneratorParams& params);

struct CampaignRow {
  int index = 0;
  std::uint64_t instance_seed = 0;
  std::string digest;
  int genus = 1;
  bool is_tree = false;
  int vertices = 0, edges = 0;
  Rat delta, epsilon, phi, tau, lambda, c, sup_diagonal;
  Rat min_inequality_margin;
  bool ok = true;
};

struct CampaignFailure {
  int index = 0;
  std::uint64_t instance_seed = 0;
  std::string digest;
  std::string check;
  std::string witness;
  std::string graph_json;  // enough to reconstruct and rerun the instance
};

struct CampaignReport {
  std::uint64_t seed = 0;
  int count = 0;
  GeneratorParams params;
  std::vector<CampaignRow> rows;
  std::vector<CampaignFailure> failures;
  long long elapsed_ms = 0;
};

// threads <= 0 picks hardware concurrency (capped by the MG_THREADS
// environment variable when set). Aggregation order is by index, so reports
// are byte-identical across runs and thread counts, timing aside.
CampaignReport campaign(std::uint64_t seed, int count, const GeneratorParams& params,
                        int threads = 0);

}  // namespace mg
