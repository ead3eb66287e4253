#pragma once

// Graph file ingestion and report emission. The interchange dialect is
// JSON: vertices are name strings, edges {u, v, length} with rationals as
// "n" or "n/d" strings, the polarization either an object {vertex: m} or a
// list [{at: <point>, m: n}] where <point> is a vertex name or
// {edge: index, t: "n/d"}. Exact rationals are always emitted as strings;
// decimal approximations are derived from them at emission time.

#include "bounds.hpp"
#include "verify.hpp"

#include <string>

#include "json.hpp"

namespace mg {

using Json = nlohmann::ordered_json;

struct GraphFile {
  MetrizedGraph graph;
  std::vector<std::pair<GraphPoint, int>> polarization;

  PolarizedGraph polarized() const { return PolarizedGraph::make(graph, polarization); }
};

// Throws ParseError with position information on malformed input.
GraphFile parse_graph_json(const std::string& text);

// Canonical serialization; re-ingesting yields an isometric graph with the
// same invariant vector. Also the digest preimage.
std::string serialize_graph(const PolarizedGraph& pg);

// FNV-1a 64-bit, hex; a stable non-cryptographic input digest.
std::string digest_hex(const std::string& data);

// Point syntax for CLI flags: a vertex name, or "<edge>:<t>".
GraphPoint parse_point(const MetrizedGraph& g, const std::string& text);

// Report emission. approx_digits < 0 suppresses the decimal mirror.
Json invariant_report_json(const InvariantReport& report, int approx_digits);
Json bound_report_json(const BoundReport& report, const CountBoundFlags& flags, int approx_digits);
Json campaign_report_json(const CampaignReport& report, int approx_digits);
std::string campaign_report_csv(const CampaignReport& report);

// Wraps a payload with tool metadata.
Json output_record(const std::string& command, Json payload,
                   const std::string& input_digest = "");

}  // namespace mg
