// Acceptance gate: one line per criterion, exit 0 iff everything passes.
//
//   1. reduction identity on every fixture and every curl variant (>= 30)
//   2. exact unit normalization of the determinant invariant
//   3. Laurent-ness of the two-variable accumulation (literal division route)
//   4. per-crossing proof identities (Green identities, crossing terms)
//   5. invariance across presentations and across all curl insertions
//   6. independent Seifert-matrix oracle for the determinant invariant,
//      plus frozen regression snapshots for the other two
//   7. fifty-crossing performance budget
//   8. twenty scripted single-field corruptions each trip a check

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "support/oracle.hpp"
#include "support/random_diagram.hpp"
#include "upknot/catalog.hpp"
#include "upknot/invariants.hpp"
#include "upknot/verify.hpp"

using namespace upknot;

namespace {

bool g_all_pass = true;

void report(int k, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << k << ": " << what;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  g_all_pass = g_all_pass && ok;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool theorem_holds(const InvariantResult& r) {
  return (r.rho1 + specialize_theta(r.theta)).is_zero();
}

struct Mutation {
  std::string label;
  std::string fixture;
  std::function<void(std::vector<Crossing>&, std::map<int, int>&)> apply;
};

std::vector<Mutation> mutations() {
  auto flip_sign = [](std::size_t k) {
    return [k](std::vector<Crossing>& c, std::map<int, int>&) { c[k].sign = -c[k].sign; };
  };
  auto swap_roles = [](std::size_t k) {
    return [k](std::vector<Crossing>& c, std::map<int, int>&) {
      std::swap(c[k].over_in, c[k].under_in);
    };
  };
  auto swap_over = [](std::size_t a, std::size_t b) {
    return [a, b](std::vector<Crossing>& c, std::map<int, int>&) {
      std::swap(c[a].over_in, c[b].over_in);
    };
  };
  auto swap_under = [](std::size_t a, std::size_t b) {
    return [a, b](std::vector<Crossing>& c, std::map<int, int>&) {
      std::swap(c[a].under_in, c[b].under_in);
    };
  };
  auto bump_rot = [](int edge, int by) {
    return [edge, by](std::vector<Crossing>&, std::map<int, int>& r) { r[edge] += by; };
  };
  auto drop_rot = [](int edge) {
    return [edge](std::vector<Crossing>&, std::map<int, int>& r) { r.erase(edge); };
  };

  return {
      {"trefoil-a: sign of crossing 1 flipped", "trefoil-a", flip_sign(0)},
      {"trefoil-a: over/under swapped at crossing 1", "trefoil-a", swap_roles(0)},
      {"trefoil-a: rotation on edge 4 raised by 2", "trefoil-a", bump_rot(4, 2)},
      {"trefoil-a: rotation on edge 4 lowered by 2", "trefoil-a", bump_rot(4, -2)},
      {"trefoil-a: rotation 2 added on edge 1", "trefoil-a", bump_rot(1, 2)},
      {"trefoil-a: over-in of crossings 1 and 2 exchanged", "trefoil-a", swap_over(0, 1)},
      {"trefoil-a: under-in of crossings 2 and 3 exchanged", "trefoil-a", swap_under(1, 2)},
      {"trefoil-a: rotation on edge 4 removed (parity)", "trefoil-a", drop_rot(4)},
      {"trefoil-a: crossings 1 and 2 share an over-in edge", "trefoil-a",
       [](std::vector<Crossing>& c, std::map<int, int>&) { c[1].over_in = c[0].over_in; }},
      {"trefoil-a: rotation key outside the edge range", "trefoil-a", bump_rot(12, 2)},

      {"figure-eight: sign of crossing 2 flipped", "figure-eight", flip_sign(1)},
      {"figure-eight: over/under swapped at crossing 4", "figure-eight", swap_roles(3)},
      {"figure-eight: rotation on edge 7 raised by 2", "figure-eight", bump_rot(7, 2)},
      {"figure-eight: under-in of crossings 1 and 3 exchanged", "figure-eight",
       swap_under(0, 2)},
      {"figure-eight: rotation on edge 4 lowered by 2", "figure-eight", bump_rot(4, -2)},

      {"cinquefoil: sign of crossing 1 flipped", "cinquefoil", flip_sign(0)},
      {"cinquefoil: rotation on edge 6 raised by 2", "cinquefoil", bump_rot(6, 2)},
      {"cinquefoil: over-in of crossings 2 and 4 exchanged", "cinquefoil", swap_over(1, 3)},
      {"cinquefoil: crossings 1 and 3 share an under-in edge", "cinquefoil",
       [](std::vector<Crossing>& c, std::map<int, int>&) { c[2].under_in = c[0].under_in; }},

      {"trefoil-b: rotation on edge 7 removed (parity)", "trefoil-b", drop_rot(7)},
  };
}

// A corruption counts as caught when the validator rejects it, a computation
// aborts on a broken internal identity, the computed invariants differ from
// the frozen ones, or an identity check in the verification report fails.
bool mutation_caught(const Mutation& m, std::string& how) {
  const CatalogEntry* ent = find_catalog_entry(m.fixture);
  const UprightDiagram base = parse_diagram(ent->udf);
  std::vector<Crossing> crossings = base.crossings();
  std::map<int, int> rotations = base.rotations();
  m.apply(crossings, rotations);

  if (!diagram_violations(base.crossing_count(), crossings, rotations).empty()) {
    how = "validator";
    return true;
  }
  try {
    const UprightDiagram mutant(base.crossing_count(), crossings, rotations);
    const InvariantResult r = compute_all(mutant);
    if (!(r.delta == ent->delta && r.rho1 == ent->rho1 && r.theta == ent->theta)) {
      how = "snapshot";
      return true;
    }
    const VerificationReport rep = verify_diagram(m.label, mutant);
    if (!rep.all_pass()) {
      how = "identity check";
      return true;
    }
  } catch (const InternalError&) {
    how = "computation abort";
    return true;
  }
  how = "NOT CAUGHT";
  return false;
}

}  // namespace

int main() {
  const auto& entries = catalog();

  // ---- criteria 1 and 5: theorem sweep and invariance over all curl variants
  const auto sweep_start = std::chrono::steady_clock::now();
  int diagrams_checked = 0;
  bool theorem_ok = true, invariance_ok = true, laurent_ok = true;
  std::string first_bad;
  std::map<std::string, std::vector<InvariantResult>> by_group;

  for (const CatalogEntry& ent : entries) {
    const UprightDiagram d = catalog_diagram(ent.name);
    InvariantResult base;
    try {
      base = compute_all(d);
    } catch (const NotDivisibleError&) {
      laurent_ok = false;
      first_bad = ent.name;
      continue;
    }
    ++diagrams_checked;
    if (!theorem_holds(base)) {
      theorem_ok = false;
      first_bad = ent.name;
    }
    by_group[ent.group].push_back(base);

    for (int e = 1; e <= d.edge_count(); ++e)
      for (int sign : {1, -1})
        for (KinkChirality chi : {KinkChirality::OverFirst, KinkChirality::UnderFirst}) {
          const UprightDiagram k = kink_insert(d, e, sign, chi);
          InvariantResult rk;
          try {
            rk = compute_all(k);
          } catch (const NotDivisibleError&) {
            laurent_ok = false;
            first_bad = ent.name + " curl variant";
            continue;
          }
          ++diagrams_checked;
          if (!theorem_holds(rk)) {
            theorem_ok = false;
            first_bad = ent.name + " curl variant";
          }
          if (!(rk.delta == base.delta && rk.rho1 == base.rho1 && rk.theta == base.theta)) {
            invariance_ok = false;
            first_bad = ent.name + " curl variant";
          }
        }
  }
  const double sweep_s = seconds_since(sweep_start);

  for (const auto& [group, results] : by_group)
    for (std::size_t k = 1; k < results.size(); ++k)
      if (!(results[k].delta == results[0].delta && results[k].rho1 == results[0].rho1 &&
            results[k].theta == results[0].theta)) {
        invariance_ok = false;
        first_bad = "group " + group;
      }

  report(1, "reduction identity on all fixtures and curl variants",
         theorem_ok && diagrams_checked >= 30 && sweep_s < 10.0,
         std::to_string(diagrams_checked) + " diagrams, " + std::to_string(sweep_s) + " s" +
             (theorem_ok ? "" : ", first failure: " + first_bad));

  // ---- criterion 2: unit normalization
  {
    bool ok = true;
    std::string bad;
    for (const CatalogEntry& ent : entries)
      if (alexander(catalog_diagram(ent.name)).eval_at_one() != rational(1)) {
        ok = false;
        bad = ent.name;
      }
    report(2, "determinant invariant equals 1 at T = 1 on all fixtures", ok, bad);
  }

  // ---- criteria 3 and 4: verification reports per fixture
  {
    bool identities_ok = true;
    std::string detail3, detail4;
    for (const CatalogEntry& ent : entries) {
      const VerificationReport rep =
          verify_diagram(ent.name, catalog_diagram(ent.name));
      for (const CheckResult& c : rep.checks) {
        if (c.name == "laurent-divisibility" && !c.pass) {
          laurent_ok = false;
          detail3 = ent.name + ": " + c.witness;
        }
        if ((c.name == "green-identities" || c.name == "crossing-terms" ||
             c.name == "pair-terms") &&
            !c.pass) {
          identities_ok = false;
          detail4 = ent.name + "/" + c.name;
        }
      }
    }
    report(3, "two-variable accumulation divides out exactly (Laurent-ness)", laurent_ok,
           detail3);
    report(4, "per-crossing proof identities hold exactly", identities_ok, detail4);
  }

  report(5, "invariants agree across presentations and all curl insertions",
         invariance_ok, invariance_ok ? "" : first_bad);

  // ---- criterion 6: independent oracle plus frozen snapshots
  {
    const bool oracle_ok =
        alexander(catalog_diagram("trefoil-a")) == testing::oracle_trefoil() &&
        alexander(catalog_diagram("trefoil-b")) == testing::oracle_trefoil() &&
        alexander(catalog_diagram("figure-eight")) == testing::oracle_figure_eight() &&
        alexander(catalog_diagram("cinquefoil")) == testing::oracle_cinquefoil();
    bool snaps_ok = true;
    for (const CatalogEntry& ent : entries) {
      const InvariantResult r = compute_all(catalog_diagram(ent.name));
      snaps_ok = snaps_ok && r.delta == ent.delta && r.rho1 == ent.rho1 &&
                 r.theta == ent.theta;
    }
    report(6, "Seifert-matrix oracle and regression snapshots match",
           oracle_ok && snaps_ok,
           std::string(oracle_ok ? "oracle ok" : "oracle MISMATCH") + ", " +
               (snaps_ok ? "snapshots ok" : "snapshots MISMATCH"));
  }

  // ---- criterion 7: fifty-crossing performance
  {
    const UprightDiagram big = testing::random_diagram(50, 1001);
    const auto t0 = std::chrono::steady_clock::now();
    const Laurent1 delta = alexander(big);
    const double delta_s = seconds_since(t0);
    const auto t1 = std::chrono::steady_clock::now();
    const InvariantResult r = compute_all(big);
    const double all_s = seconds_since(t1);
    const bool ok = delta_s < 5.0 && all_s < 60.0 && delta.eval_at_one() == rational(1) &&
                    theorem_holds(r) && r.delta == delta;
    report(7, "fifty-crossing diagram within the time budget", ok,
           "determinant " + std::to_string(delta_s) + " s, all invariants " +
               std::to_string(all_s) + " s");
  }

  // ---- criterion 8: mutation sensitivity
  {
    const std::vector<Mutation> ms = mutations();
    int caught = 0;
    std::string misses;
    std::map<std::string, int> how_counts;
    for (const Mutation& m : ms) {
      std::string how;
      if (mutation_caught(m, how)) {
        ++caught;
        ++how_counts[how];
      } else {
        misses += (misses.empty() ? "" : "; ") + m.label;
      }
    }
    std::string detail =
        std::to_string(caught) + "/" + std::to_string(ms.size()) + " caught";
    for (const auto& [how, count] : how_counts)
      detail += ", " + how + " " + std::to_string(count);
    report(8, "all scripted fixture corruptions are detected",
           caught == static_cast<int>(ms.size()),
           detail + (misses.empty() ? "" : "; missed: " + misses));
  }

  std::cout << (g_all_pass ? "ACCEPTANCE: all criteria pass\n"
                           : "ACCEPTANCE: FAILURES PRESENT\n");
  return g_all_pass ? 0 : 1;
}
