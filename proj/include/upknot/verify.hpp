#pragma once

#include <string>
#include <vector>

#include "upknot/catalog.hpp"
#include "upknot/diagram.hpp"
#include "upknot/invariants.hpp"

namespace upknot {

// One verification check. A failure is data, not an exception: the witness
// holds a human-readable counterexample (truncated if large).
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct VerificationReport {
  std::string diagram;
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyOptions {
  ThetaOptions theta{};
  // The identity and divisibility checks that use naive rational-function
  // arithmetic are quadratic-to-cubic in the matrix size; they run only on
  // diagrams with at most this many crossings.
  int algebraic_max_crossings = 8;
  // Insert every curl variant at every edge and require the invariants to be
  // unchanged. Costs 4 * (2n + 2) full computations.
  bool kink_invariance = false;
};

// Runs the identity suite on one diagram:
//   delta-at-one          normalized determinant evaluates to 1 at T = 1
//   green-identities      adjugate relations behind the per-crossing terms
//   crossing-terms        each crossing's two-variable term specializes, at
//                         T1 <- 1, T2 <- T, to minus its one-variable term
//   pair-terms            each crossing-pair term specializes to zero
//   theorem               rho1 + theta(1, T) == 0
//   laurent-divisibility  (small diagrams) the sum, rebuilt with plain
//                         polynomial products over the common denominator,
//                         divides exactly by (T2 - 1) — the one factor that
//                         does not cancel term by term — and reproduces the
//                         fast route
//   kink-invariance       (optional) curl insertions leave invariants fixed
VerificationReport verify_diagram(const std::string& label, const UprightDiagram& d,
                                  const VerifyOptions& opts = {});

// Verifies every catalog entry (with kink invariance and snapshot comparison
// switched on) and appends one report per catalog group checking that all
// presentations of the same knot agree.
std::vector<VerificationReport> verify_catalog(const VerifyOptions& opts = {});

}  // namespace upknot
