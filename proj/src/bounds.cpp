#include "bounds.hpp"

#include "graph.hpp"

namespace mg {

namespace {

Rat pow_int(int g, int k) {
  Rat r = 1;
  for (int i = 0; i < k; ++i) r *= g;
  return r;
}

}  // namespace

Rat cinkir_constant(int g, bool tree) {
  if (g < 2) throw InvalidGenus("total-length bound constant needs g >= 2");
  if (tree) return Rat(g) / (2 * g - 2);
  if (g == 2) return 27;
  if (g == 3) return Rat(288) / 17;
  return Rat(2 * g) * (7 * g + 5) / (Rat(g - 1) * (g - 1));
}

Rat green_sup_constant(int g, bool tree) {
  if (g < 2) throw InvalidGenus("Green sup constant needs g >= 2");
  Rat value;
  Rat assembly;
  if (tree) {
    value = (2 * pow_int(g, 2) - 3 * g + 2) / (Rat(2 * g) * (2 * g - 2));
    assembly = ((2 * g - 1) * cinkir_constant(g, true) - 1) / Rat(2 * g);
  } else {
    if (g == 2)
      value = Rat(15) / 4;
    else if (g == 3)
      value = Rat(140) / 51;
    else
      value = (8 * pow_int(g, 4) + 18 * pow_int(g, 2) - 13 * g - 1) /
              (Rat(2 * g) * (2 * g + 1) * (g - 1) * (g - 1));
    assembly = ((3 * g - 2) * cinkir_constant(g, false) + 16 * pow_int(g, 2) - 10 * g - 2) /
               (Rat(4 * g) * (2 * g + 1));
  }
  if (value != assembly)
    throw SolverInconsistency("Green sup constant: closed form disagrees with assembly at g = " +
                              std::to_string(g));
  return value;
}

BoundReport count_bound(int g, const Rat& epsilon, const CountBoundFlags& flags) {
  if (g < 2) throw InvalidGenus("count bound needs g >= 2");
  Rat eps_cap = Rat(1) / (4 * (pow_int(g, 2) - 1));
  if (sgn(epsilon) < 0 || epsilon >= eps_cap)
    throw InvalidEpsilon("epsilon must lie in [0, " + rat_str(eps_cap) + "), got " +
                         rat_str(epsilon));
  if (flags.halving && g < 3) throw InvalidGenus("the halving rule applies only for g >= 3");

  const Rat damp = 1 - 4 * (pow_int(g, 2) - 1) * epsilon;  // in (0, 1]
  const Rat max2 = g - 1 > 2 ? Rat(g - 1) : Rat(2);

  auto assemble = [&](bool tree) -> Int {
    Rat q = 4 * Rat(g - 1) * g * (2 * g + 1) * green_sup_constant(g, tree) / (max2 * damp);
    return rat_floor(q) + 1;
  };
  auto closed_eps = [&](bool tree) -> Int {
    if (tree) {
      if (g == 2) return rat_floor(Rat(10) / damp) + 1;
      return rat_floor((4 * pow_int(g, 3) - 4 * pow_int(g, 2) + g + 2) / (Rat(g - 1) * damp)) + 1;
    }
    if (g == 2) return rat_floor(Rat(75) / damp) + 1;
    if (g == 3) return rat_floor(Rat(3920) / (17 * damp)) + 1;
    return rat_floor((16 * pow_int(g, 4) + 36 * pow_int(g, 2) - 26 * g - 2) /
                     (Rat(g - 1) * (g - 1) * damp)) +
           1;
  };
  auto closed_torsion = [&](bool tree) -> Int {
    if (tree) {
      if (g == 2) return 11;
      return rat_floor((4 * pow_int(g, 3) - 4 * pow_int(g, 2) + 2 * g + 1) / Rat(g - 1));
    }
    if (g == 2) return 76;
    if (g == 3) return 231;
    return rat_floor((16 * pow_int(g, 4) + 37 * pow_int(g, 2) - 28 * g - 1) /
                     (Rat(g - 1) * (g - 1)));
  };

  BoundReport report;
  report.genus = g;
  report.epsilon = epsilon;
  report.c_cinkir = cinkir_constant(g, false);
  report.c_cinkir_tree = cinkir_constant(g, true);
  report.c_sup = green_sup_constant(g, false);
  report.c_sup_tree = green_sup_constant(g, true);
  report.c_eps = closed_eps(false);
  report.c_eps_tree = closed_eps(true);
  report.torsion_c = closed_torsion(false);
  report.torsion_c_tree = closed_torsion(true);
  if (g >= 3) {
    report.halved_c = (report.c_eps + 1) / 2;
    report.halved_c_tree = (report.c_eps_tree + 1) / 2;
  }
  report.envelope = Int(16) * g * g + 32 * g + 124;

  if (assemble(false) != report.c_eps || assemble(true) != report.c_eps_tree)
    throw SolverInconsistency("count bound: assembly and closed form disagree at g = " +
                              std::to_string(g));
  if (sgn(epsilon) == 0 &&
      (report.c_eps != report.torsion_c || report.c_eps_tree != report.torsion_c_tree))
    throw SolverInconsistency("count bound: eps = 0 value differs from the torsion closed form");
  if (report.torsion_c > report.envelope)
    throw SolverInconsistency("count bound: torsion count exceeds its envelope");
  return report;
}

}  // namespace mg
