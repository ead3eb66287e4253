#pragma once

// Construction of the two distinguished mass-one measures of a metrized
// graph — the canonical measure of a polarization (the unique measure making
// g(x, K) + g(x, x) constant) and the measure with constant diagonal Green
// value — via the linear constancy characterization: h_mu(x) - r(x, K)/(2g)
// (resp. h_mu(x)) must be constant, where h_mu(x) = integral of r(x, .) dmu.
// The constancy is imposed by equating h-field values at three interior
// samples per edge; a fourth sample and both endpoints certify the result.

#include "green.hpp"

#include <optional>
#include <string>

namespace mg {

// Solve-only entry points against a shared kernel table. Both verify the
// constancy certificate; the canonical measure additionally must be
// nonnegative.
Measure solve_canonical_measure(const Harmonics& h, const PolarizedGraph& pg);
Measure solve_tau_measure(const Harmonics& h);

// Independent verification through the Laplacian Green solver: evaluates
// g(x, K) + g(x, x) (resp. g(x, x)) at `points_per_edge` interior points of
// every edge plus a reference vertex and reports the first mismatch.
std::optional<std::string> audit_canonical_constancy(const PolarizedGraph& pg,
                                                     const Measure& mu_canonical,
                                                     int points_per_edge);
std::optional<std::string> audit_diagonal_constancy(const MetrizedGraph& g,
                                                    const Measure& mu_tau,
                                                    int points_per_edge);

// Full contracts: solve, certify, and run the Green-solver audit (5 points
// per edge); audit failures raise SolverInconsistency.
Measure canonical_measure(const PolarizedGraph& pg);
Measure tau_measure(const MetrizedGraph& g);

// x -> g_mu(x, x) = h_mu(x) - (double integral of r dmu dmu)/2 as a
// certified per-edge quadratic. Requires mass(mu) = 1.
PiecewiseQuadratic diagonal_profile(const Harmonics& h, const Measure& mu);
PiecewiseQuadratic diagonal_profile(const MetrizedGraph& g, const Measure& mu);

// Exact integral of a piecewise quadratic against a measure: atoms by
// evaluation, densities by Simpson's rule cross-validated against a 5-point
// refinement (both exact for quadratics).
Rat integrate(const PiecewiseQuadratic& profile, const Measure& nu);

}  // namespace mg
