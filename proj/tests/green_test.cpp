#include "green.hpp"

#include "doctest.h"
#include "helpers.hpp"
#include "rng.hpp"
#include "verify.hpp"

using namespace mg;
using namespace mg::testing;

namespace {

Measure uniform_on(const MetrizedGraph& g) {
  Measure mu = Measure::zero(g);
  Rat total = g.total_length();
  for (EdgeId e = 0; e < g.edge_count(); ++e) mu.density[e] = 1 / total;
  return mu;
}

}  // namespace

TEST_CASE("effective resistance: series, identity, parallel arcs") {
  MetrizedGraph s = segment(Rat(5));
  CHECK(effective_resistance(s, GraphPoint::vertex(0), GraphPoint::vertex(1)) == 5);
  CHECK(effective_resistance(s, GraphPoint::on_edge(0, Rat(2)), GraphPoint::on_edge(0, Rat(2))) ==
        0);
  CHECK(effective_resistance(s, GraphPoint::vertex(0), GraphPoint::on_edge(0, rat(7, 3))) ==
        rat(7, 3));

  MetrizedGraph c = circle(Rat(4));
  // antipodal points: two parallel paths of length 2
  CHECK(effective_resistance(c, GraphPoint::vertex(0), GraphPoint::vertex(1)) == 1);
}

TEST_CASE("resistance outside an edge") {
  MetrizedGraph s = segment();
  CHECK_FALSE(resistance_outside_edge(s, 0).has_value());  // bridge

  MetrizedGraph c = circle(Rat(3));  // arcs of 3/2 each
  CHECK(resistance_outside_edge(c, 0) == rat(3, 2));

  MetrizedGraph t = theta(1, 1, 1);
  CHECK(resistance_outside_edge(t, 0) == rat(1, 2));
  CHECK_THROWS_AS(resistance_outside_edge(t, 5), InvalidPoint);
}

TEST_CASE("j function: collapse, grounding, worked segment value") {
  MetrizedGraph s = segment();
  GraphPoint zero = GraphPoint::vertex(0), one = GraphPoint::vertex(1);
  GraphPoint half = GraphPoint::on_edge(0, rat(1, 2));
  CHECK(j_function(s, zero, half, half) == effective_resistance(s, half, zero));
  CHECK(j_function(s, half, half, one) == 0);
  CHECK(j_function(s, zero, half, one) == rat(1, 2));

  MetrizedGraph t = theta(1, 2, 3);
  GraphPoint x = GraphPoint::on_edge(0, rat(1, 3)), y = GraphPoint::on_edge(1, rat(5, 4));
  GraphPoint z = GraphPoint::on_edge(2, rat(1, 2));
  Rat expected = (effective_resistance(t, x, z) + effective_resistance(t, y, z) -
                  effective_resistance(t, x, y)) /
                 2;
  CHECK(j_function(t, z, x, y) == expected);
  CHECK(j_function(t, z, x, y) == j_function(t, z, y, x));
}

TEST_CASE("green function of a point mass recovers the resistance function") {
  MetrizedGraph s = segment();
  Measure delta_a = Measure::dirac(s, 0);
  for (int num = 1; num < 5; ++num) {
    GraphPoint y = GraphPoint::on_edge(0, rat(num, 5));
    GreenFunction gf = green_function(s, delta_a, y);
    CHECK(gf.value(y) == rat(num, 5));  // g(y, y) = r(a, y)
  }
}

TEST_CASE("green function of the uniform circle measure") {
  MetrizedGraph c = circle();  // circumference 1, arcs of 1/2
  Measure mu = uniform_on(c);
  GreenFunction gf = green_function(c, mu, GraphPoint::vertex(0));
  // g(x, y) = d^2/2 - d/2 + 1/12 at arc distance d
  CHECK(gf.value(GraphPoint::vertex(0)) == rat(1, 12));
  CHECK(gf.value(GraphPoint::vertex(1)) == rat(-1, 24));
  CHECK(gf.value(GraphPoint::on_edge(0, rat(1, 4))) == rat(1, 32) - rat(1, 8) + rat(1, 12));
  CHECK(gf.integral_against(mu) == 0);
}

TEST_CASE("green construction rejects measures of mass != 1") {
  MetrizedGraph s = segment();
  Measure two = Measure::dirac(s, 0);
  two.atom[0] = 2;
  CHECK_THROWS_AS(green_function(s, two, GraphPoint::vertex(0)), InvalidMeasure);
}

TEST_CASE("green symmetry and the dual-route value on random graphs") {
  GeneratorParams params;
  params.max_vertices = 6;
  params.max_edges = 8;
  for (int trial = 0; trial < 6; ++trial) {
    PolarizedGraph pg = random_graph(SplitMix64::mix(2024, trial), params);
    const MetrizedGraph& g = pg.graph();
    SplitMix64 rng(trial);
    GraphPoint x = random_point(g, rng), y = random_point(g, rng);
    Measure mu = canonical_measure(pg);
    GreenFunction gx = green_function(g, mu, x);
    GreenFunction gy = green_function(g, mu, y);
    CHECK(gx.value(y) == gy.value(x));
    // green_value throws if the Laplacian and kernel routes disagree
    CHECK(green_value(g, mu, x, y) == gx.value(y));
  }
}

TEST_CASE("signed mass-one measures are accepted") {
  // the theta tau measure carries negative vertex atoms
  MetrizedGraph t = theta(1, 1, 1);
  Measure mu = Measure::zero(t);
  mu.atom[0] = mu.atom[1] = rat(-1, 2);
  for (EdgeId e = 0; e < 3; ++e) mu.density[e] = rat(2, 3);
  CHECK(mu.mass(t) == 1);
  GraphPoint x = GraphPoint::on_edge(0, rat(1, 2));
  GreenFunction gf = green_function(t, mu, x);
  CHECK(gf.integral_against(mu) == 0);
}
