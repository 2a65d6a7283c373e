#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "support/oracle.hpp"
#include "support/random_diagram.hpp"
#include "upknot/catalog.hpp"
#include "upknot/invariants.hpp"

using namespace upknot;

namespace {

const Laurent1 T = Laurent1::monomial(2, rational(1));
const Laurent1 one = Laurent1::constant(rational(1));

AMatrix identity_matrix(int n) {
  AMatrix m;
  m.size = n;
  m.entries.assign(static_cast<std::size_t>(n) * n, Laurent1::zero());
  for (int k = 0; k < n; ++k) m.at(k, k) = one;
  return m;
}

const std::vector<std::string> kKinkNames = {"kink-pos-over", "kink-pos-under",
                                             "kink-neg-over", "kink-neg-under"};

}  // namespace

TEST_CASE("presentation matrix of the positive curl") {
  const AMatrix a = build_matrix(catalog_diagram("kink-pos-over"));
  REQUIRE(a.size == 3);
  // crossing (+, 2, 1): subtract T at (2,3), 1-T at (2,2), 1 at (1,2); 1-based
  CHECK(a.at(0, 0) == one);
  CHECK(a.at(0, 1) == -one);
  CHECK(a.at(0, 2) == Laurent1::zero());
  CHECK(a.at(1, 0) == Laurent1::zero());
  CHECK(a.at(1, 1) == T);
  CHECK(a.at(1, 2) == -T);
  CHECK(a.at(2, 0) == Laurent1::zero());
  CHECK(a.at(2, 1) == Laurent1::zero());
  CHECK(a.at(2, 2) == one);
}

TEST_CASE("determinant and adjugate of the curl matrix") {
  const GreenData gd = green(build_matrix(catalog_diagram("kink-pos-over")));
  CHECK(gd.det == T);
  CHECK(gd.adj_at(0, 0) == T);
  CHECK(gd.adj_at(0, 1) == one);
  CHECK(gd.adj_at(0, 2) == T);
  CHECK(gd.adj_at(1, 0) == Laurent1::zero());
  CHECK(gd.adj_at(1, 1) == one);
  CHECK(gd.adj_at(1, 2) == T);
  CHECK(gd.adj_at(2, 0) == Laurent1::zero());
  CHECK(gd.adj_at(2, 1) == Laurent1::zero());
  CHECK(gd.adj_at(2, 2) == T);
  // the matrix inverse entry g(1,2) = 1/T, exactly as in the hand computation
  CHECK(gd.g(0, 1) == RatFn1(one, T));
  CHECK(gd.g(0, 0) == RatFn1::from_poly(one));
}

TEST_CASE("structured and dense eliminations produce identical Green data") {
  for (const CatalogEntry& ent : catalog()) {
    CAPTURE(ent.name);
    const UprightDiagram d = catalog_diagram(ent.name);
    const GreenData fast = green(d);
    const GreenData dense = green(build_matrix(d));
    CHECK(fast.size == dense.size);
    CHECK(fast.det == dense.det);
    CHECK(fast.adj == dense.adj);
  }
}

TEST_CASE("dense elimination handles identity and rejects singular input") {
  const GreenData id = green(identity_matrix(4));
  CHECK(id.det == one);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(id.adj_at(r, c) == (r == c ? one : Laurent1::zero()));

  AMatrix sing = identity_matrix(2);
  sing.at(0, 0) = one;
  sing.at(0, 1) = one;
  sing.at(1, 0) = one;
  sing.at(1, 1) = one;
  CHECK_THROWS_AS((void)green(sing), SingularMatrixError);

  AMatrix zero = identity_matrix(2);
  zero.at(0, 0) = Laurent1::zero();
  zero.at(1, 1) = Laurent1::zero();
  CHECK_THROWS_AS((void)green(zero), SingularMatrixError);
}

TEST_CASE("the normalized determinant is 1 at T = 1 and matches the snapshots") {
  for (const CatalogEntry& ent : catalog()) {
    CAPTURE(ent.name);
    const Laurent1 delta = alexander(catalog_diagram(ent.name));
    CHECK(delta.eval_at_one() == rational(1));
    CHECK(has_integral_exponents(delta));
    CHECK(delta == ent.delta);
  }
}

TEST_CASE("random diagrams: exact unit normalization") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const UprightDiagram d = testing::random_diagram(3 + static_cast<int>(seed % 5), seed);
    const Laurent1 delta = alexander(d);
    CHECK(delta.eval_at_one() == rational(1));
    CHECK(has_integral_exponents(delta));
  }
}

TEST_CASE("frozen invariant snapshots reproduce exactly") {
  for (const CatalogEntry& ent : catalog()) {
    CAPTURE(ent.name);
    const InvariantResult r = compute_all(catalog_diagram(ent.name));
    CHECK(r.delta == ent.delta);
    CHECK(r.rho1 == ent.rho1);
    CHECK(r.theta == ent.theta);
  }
}

TEST_CASE("independent Seifert-matrix oracle agrees") {
  CHECK(alexander(catalog_diagram("trefoil-a")) == testing::oracle_trefoil());
  CHECK(alexander(catalog_diagram("trefoil-b")) == testing::oracle_trefoil());
  CHECK(alexander(catalog_diagram("trefoil-mirror")) == testing::oracle_trefoil());
  CHECK(alexander(catalog_diagram("figure-eight")) == testing::oracle_figure_eight());
  CHECK(alexander(catalog_diagram("cinquefoil")) == testing::oracle_cinquefoil());
}

TEST_CASE("the one-variable reduction identity holds on every fixture") {
  for (const CatalogEntry& ent : catalog()) {
    CAPTURE(ent.name);
    const UprightDiagram d = catalog_diagram(ent.name);
    CHECK(rho1(d) == -specialize_theta(theta(d)));
  }
}

TEST_CASE("compute_all agrees with the single-invariant entry points") {
  for (const std::string name : {"trefoil-a", "figure-eight", "kink-neg-under"}) {
    CAPTURE(name);
    const UprightDiagram d = catalog_diagram(name);
    const InvariantResult r = compute_all(d);
    CHECK(r.delta == alexander(d));
    CHECK(r.rho1 == rho1(d));
    CHECK(r.theta == theta(d));
    CHECK(r.writhe == d.writhe());
    CHECK(r.total_rotation == d.total_rotation());
  }
}

TEST_CASE("excluding the diagonal crossing pairs breaks Laurent-ness") {
  const ThetaOptions wrong{PairSum::ExcludeDiagonal, F1Tail::MinusInside};
  CHECK_THROWS_AS((void)theta(catalog_diagram("kink-pos-over"), wrong), NotDivisibleError);
}

TEST_CASE("rejected readings of the per-crossing tail fail on some curl") {
  for (F1Tail tail : {F1Tail::PlusInside, F1Tail::MinusOutside, F1Tail::PlusOutside}) {
    CAPTURE(static_cast<int>(tail));
    bool failure_seen = false;
    for (const std::string& name : kKinkNames) {
      const ThetaOptions opt{PairSum::IncludeDiagonal, tail};
      try {
        // every curl presents the unknot, so anything nonzero is wrong
        if (!theta(catalog_diagram(name), opt).is_zero()) failure_seen = true;
      } catch (const NotDivisibleError&) {
        failure_seen = true;
      }
    }
    CHECK(failure_seen);
  }
}

TEST_CASE("curl insertion leaves all three invariants unchanged (sample)") {
  const UprightDiagram base = catalog_diagram("trefoil-a");
  const InvariantResult r0 = compute_all(base);
  for (int e = 1; e <= base.edge_count(); ++e) {
    CAPTURE(e);
    const UprightDiagram k =
        kink_insert(base, e, e % 2 ? 1 : -1,
                    e % 3 ? KinkChirality::OverFirst : KinkChirality::UnderFirst);
    const InvariantResult r = compute_all(k);
    CHECK(r.delta == r0.delta);
    CHECK(r.rho1 == r0.rho1);
    CHECK(r.theta == r0.theta);
  }
}

TEST_CASE("moderate random diagrams satisfy the reduction identity") {
  for (std::uint64_t seed = 7; seed < 12; ++seed) {
    const UprightDiagram d = testing::random_diagram(8, seed);
    const InvariantResult r = compute_all(d);
    CHECK((r.rho1 + specialize_theta(r.theta)).is_zero());
    CHECK(has_integral_exponents(r.rho1));
    CHECK(has_integral_exponents(r.theta));
  }
}
