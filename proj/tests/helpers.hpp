#pragma once

// Shared fixtures: the three reference graphs used across the suite.

#include "invariants.hpp"

namespace mg::testing {

// Two vertices joined by one edge of length `len`.
inline MetrizedGraph segment(const Rat& len = 1) {
  return MetrizedGraph::build({"a", "b"}, {{"a", "b", len}});
}

// Segment with m = 2 at both leaves: K = (a) + (b), genus 2.
inline PolarizedGraph segment_testbed(const Rat& len = 1) {
  return PolarizedGraph::make(segment(len),
                              {{GraphPoint::vertex(0), 2}, {GraphPoint::vertex(1), 2}});
}

// Circle of circumference `len` entered as a loop; construction splits it at
// a midpoint, so the result has vertices {p, antipode} and two arcs.
inline MetrizedGraph circle(const Rat& len = 1) {
  return MetrizedGraph::build({"p"}, {{"p", "p", len}});
}

// Circle with K = 2p, genus 2.
inline PolarizedGraph circle_testbed(const Rat& len = 1) {
  return PolarizedGraph::make(circle(len), {{GraphPoint::vertex(0), 2}});
}

// Circle with K = 0, genus 1.
inline PolarizedGraph circle_genus1(const Rat& len = 1) {
  return PolarizedGraph::make(circle(len), {});
}

// Two vertices joined by three parallel edges.
inline MetrizedGraph theta(const Rat& l1 = 1, const Rat& l2 = 1, const Rat& l3 = 1) {
  return MetrizedGraph::build({"a", "b"},
                              {{"a", "b", l1}, {"a", "b", l2}, {"a", "b", l3}});
}

inline PolarizedGraph theta_testbed(const Rat& l1 = 1, const Rat& l2 = 1, const Rat& l3 = 1) {
  return PolarizedGraph::make(theta(l1, l2, l3), {});
}

}  // namespace mg::testing
