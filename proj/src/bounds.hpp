#pragma once

// Explicit constants of the torsion / small-height point bounds: the
// total-length coefficient c_C(g), the Green-sup coefficient c'(g), and the
// point-count bounds c(g, eps), c^tr(g, eps) with their eps = 0, halved and
// good-reduction specializations. Everything is exact rational arithmetic;
// floors are exact integer division.

#include "rational.hpp"

#include <optional>

namespace mg {

// delta <= c_C(g) phi. g >= 2; tree graphs admit the smaller constant.
Rat cinkir_constant(int g, bool tree);

// sup g(x,y) <= c'(g) phi. g >= 2. The closed forms are cross-checked
// against the assembly ((3g-2) c_C(g) + 16g^2 - 10g - 2) / (4g (2g+1))
// (tree: ((2g-1) c_C^tr(g) - 1) / (2g)).
Rat green_sup_constant(int g, bool tree);

struct CountBoundFlags {
  bool tree = false;
  bool halving = false;         // char 0 / hyperelliptic variant, g >= 3
  bool good_reduction = false;  // everywhere potentially good reduction
};

struct BoundReport {
  int genus = 2;
  Rat epsilon;        // in [0, 1/(4(g^2-1)))
  Rat c_cinkir, c_cinkir_tree;
  Rat c_sup, c_sup_tree;
  Int c_eps, c_eps_tree;          // c(g, eps) and c^tr(g, eps)
  Int torsion_c, torsion_c_tree;  // eps = 0 closed forms
  std::optional<Int> halved_c, halved_c_tree;  // present for g >= 3
  Int good_reduction_bound = 1;
  Int envelope;  // 16 g^2 + 32 g + 124
};

// Evaluates every constant at (g, eps). Throws InvalidGenus for g < 2 and
// InvalidEpsilon outside [0, 1/(4(g^2-1))). The general assembly
// floor(4(g-1)g(2g+1)c'(g) / (max(2,g-1)(1-4(g^2-1)eps))) + 1 must agree
// with the per-genus closed forms, and the eps = 0 values with the direct
// torsion-count forms.
BoundReport count_bound(int g, const Rat& epsilon, const CountBoundFlags& flags = {});

}  // namespace mg
