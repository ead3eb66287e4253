#include "graph.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace mg;
using namespace mg::testing;

TEST_CASE("build validates lengths, endpoints and connectedness") {
  CHECK(segment().total_length() == 1);
  CHECK_THROWS_AS(MetrizedGraph::build({"a", "b"}, {{"a", "b", Rat(0)}}), InvalidGraph);
  CHECK_THROWS_AS(MetrizedGraph::build({"a", "b"}, {{"a", "c", Rat(1)}}), InvalidGraph);
  CHECK_THROWS_AS(MetrizedGraph::build({"a", "b"}, {}), InvalidGraph);
  CHECK_THROWS_AS(MetrizedGraph::build({"a", "a"}, {}), InvalidGraph);
}

TEST_CASE("single vertex with no edges is a legal degenerate graph") {
  MetrizedGraph point = MetrizedGraph::build({"p"}, {});
  CHECK(point.total_length() == 0);
  CHECK(point.first_betti() == 0);
  CHECK(point.valence(0) == 0);
}

TEST_CASE("theta graph: three parallel edges, betti 2") {
  MetrizedGraph t = theta(1, 2, 3);
  CHECK(t.total_length() == 6);
  CHECK(t.first_betti() == 2);
  CHECK(t.valence(0) == 3);
}

TEST_CASE("loops are split isometrically at construction") {
  MetrizedGraph c = circle(3);
  CHECK(c.vertex_count() == 2);
  CHECK(c.edge_count() == 2);
  CHECK(c.total_length() == 3);
  CHECK(c.first_betti() == 1);
  CHECK(c.edge(0).length == rat(3, 2));
}

TEST_CASE("point normalization clamps endpoints to vertices") {
  MetrizedGraph s = segment(2);
  CHECK(s.normalize(GraphPoint::on_edge(0, Rat(0))) == GraphPoint::vertex(0));
  CHECK(s.normalize(GraphPoint::on_edge(0, Rat(2))) == GraphPoint::vertex(1));
  CHECK_FALSE(s.normalize(GraphPoint::on_edge(0, Rat(1))).at_vertex);
  CHECK_THROWS_AS(s.normalize(GraphPoint::on_edge(0, Rat(3))), InvalidPoint);
  CHECK_THROWS_AS(s.normalize(GraphPoint::on_edge(2, Rat(1))), InvalidPoint);
}

TEST_CASE("subdivision splits an edge and is idempotent at vertices") {
  MetrizedGraph s = segment(1);
  auto [fine, v] = subdivide(s, GraphPoint::on_edge(0, rat(1, 2)));
  CHECK(fine.vertex_count() == 3);
  CHECK(fine.edge_count() == 2);
  CHECK(fine.edge(0).length == rat(1, 2));
  CHECK(fine.total_length() == 1);
  CHECK(v == 2);

  auto [same, u] = subdivide(s, GraphPoint::vertex(1));
  CHECK(same.vertex_count() == 2);
  CHECK(u == 1);
}

TEST_CASE("circle subdivided at two points keeps its total length") {
  MetrizedGraph c = circle(3);
  Subdivision sub(c, {GraphPoint::on_edge(0, rat(1, 2)), GraphPoint::on_edge(1, Rat(1))});
  CHECK(sub.fine().total_length() == 3);
  CHECK(sub.fine().first_betti() == 1);
  CHECK(sub.fine().vertex_count() == 4);
}

TEST_CASE("subdivision point mapping covers fragments") {
  MetrizedGraph s = segment(1);
  Subdivision sub(s, {GraphPoint::on_edge(0, rat(1, 3))});
  GraphPoint mapped = sub.to_fine(GraphPoint::on_edge(0, rat(2, 3)));
  CHECK_FALSE(mapped.at_vertex);
  CHECK(mapped.e == 1);
  CHECK(mapped.t == rat(1, 3));
  CHECK(sub.to_fine(GraphPoint::on_edge(0, rat(1, 3))) == GraphPoint::vertex(2));
}

TEST_CASE("polarization: theta with m = 0 has genus 2") {
  PolarizedGraph pg = theta_testbed();
  CHECK(pg.genus() == 2);
  CHECK(pg.deg_canonical() == 2);
  CHECK(pg.k_coeff(0) == 1);
  CHECK(pg.k_coeff(1) == 1);
}

TEST_CASE("polarization: segment needs m = 2 at leaves for K = (a) + (b)") {
  PolarizedGraph pg = segment_testbed();
  CHECK(pg.genus() == 2);
  CHECK(pg.k_coeff(0) == 1);
  CHECK(pg.k_coeff(1) == 1);
}

TEST_CASE("polarization: circle with m = 2 at one point has K = 2p") {
  PolarizedGraph pg = circle_testbed();
  CHECK(pg.genus() == 2);
  CHECK(pg.k_coeff(0) == 2);
  CHECK(pg.k_coeff(1) == 0);
}

TEST_CASE("polarization rejects ineffective and odd-degree data") {
  // bare segment: leaves have n = 1, m = 0, so K would be negative there
  CHECK_THROWS_AS(PolarizedGraph::make(segment(), {}), InvalidPolarization);
  // odd degree: m = 1 at a single leaf of the segment
  CHECK_THROWS_AS(PolarizedGraph::make(segment(), {{GraphPoint::vertex(0), 2},
                                                   {GraphPoint::vertex(1), 3}}),
                  InvalidPolarization);
  CHECK_THROWS_AS(PolarizedGraph::make(segment(), {{GraphPoint::vertex(0), -1}}),
                  InvalidPolarization);
}

TEST_CASE("polarization at an interior point refines the graph") {
  PolarizedGraph pg = PolarizedGraph::make(
      circle(2), {{GraphPoint::on_edge(0, rat(1, 2)), 2}});
  CHECK(pg.genus() == 2);
  CHECK(pg.graph().vertex_count() == 3);
  CHECK(pg.graph().total_length() == 2);
}

TEST_CASE("genus additivity: g = betti + sum(m)/2") {
  PolarizedGraph pg = PolarizedGraph::make(
      theta(), {{GraphPoint::vertex(0), 2}, {GraphPoint::vertex(1), 2}});
  int m_sum = 0;
  for (VertexId v = 0; v < pg.graph().vertex_count(); ++v) m_sum += pg.m(v);
  CHECK(pg.genus() == pg.graph().first_betti() + m_sum / 2);
}

TEST_CASE("scaling multiplies lengths") {
  MetrizedGraph t = scaled(theta(1, 2, 3), rat(2, 3));
  CHECK(t.total_length() == 4);
  CHECK_THROWS_AS(scaled(theta(), Rat(0)), InvalidGraph);
}
