#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "upknot/laurent.hpp"
#include "upknot/rational_func.hpp"

using namespace upknot;

namespace {

// Exponents are doubled internally, so odd draws exercise half-integer powers.
Laurent1 random_poly1(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 6), expd(-8, 8), num(-9, 9), den(1, 9);
  std::vector<Laurent1::Term> ts;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i)
    ts.push_back({static_cast<Exp1>(expd(rng)), rational(num(rng), den(rng))});
  return Laurent1::from_terms(std::move(ts));
}

Laurent2 random_poly2(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 6), expd(-6, 6), num(-9, 9), den(1, 9);
  std::vector<Laurent2::Term> ts;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i)
    ts.push_back({Exp2{expd(rng), expd(rng)}, rational(num(rng), den(rng))});
  return Laurent2::from_terms(std::move(ts));
}

template <class P, class Gen>
P random_nonzero(Gen gen, std::mt19937& rng) {
  P p = gen(rng);
  while (p.is_zero()) p = gen(rng);
  return p;
}

const Laurent1 T = Laurent1::monomial(2, rational(1));
const Laurent1 Tinv = Laurent1::monomial(-2, rational(1));
const Laurent1 one1 = Laurent1::constant(rational(1));

}  // namespace

TEST_CASE("ring axioms hold on random one-variable polynomials") {
  std::mt19937 rng(20240817);
  for (int iter = 0; iter < 1000; ++iter) {
    const Laurent1 p = random_poly1(rng), q = random_poly1(rng), r = random_poly1(rng);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p + (-p)).is_zero());
    CHECK(p - q == p + (-q));
    CHECK(p * one1 == p);
  }
}

TEST_CASE("ring axioms hold on random two-variable polynomials") {
  std::mt19937 rng(20240818);
  const Laurent2 one = Laurent2::constant(rational(1));
  for (int iter = 0; iter < 1000; ++iter) {
    const Laurent2 p = random_poly2(rng), q = random_poly2(rng), r = random_poly2(rng);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p + (-p)).is_zero());
    CHECK(p * one == p);
  }
}

TEST_CASE("pinned arithmetic examples") {
  CHECK((T - one1) * Tinv == one1 - Tinv);
  const Laurent1 p = T - one1 + Tinv;
  const Laurent1 sq = Laurent1::from_terms({{4, rational(1)},
                                            {2, rational(-2)},
                                            {0, rational(3)},
                                            {-2, rational(-2)},
                                            {-4, rational(1)}});
  CHECK(p * p == sq);
}

TEST_CASE("evaluation at one sums the coefficients") {
  CHECK(Laurent1::zero().eval_at_one() == rational(0));
  CHECK((T - one1 + Tinv).eval_at_one() == rational(1));
  CHECK(Laurent1::monomial(1, rational(1)).eval_at_one() == rational(1));  // T^(1/2)
}

TEST_CASE("substitution maps monomials as specified") {
  const Laurent1 tk = Laurent1::monomial(6, rational(1));  // T^3
  CHECK(substitute(tk, SubstTarget::T1) == Laurent2::monomial(Exp2{6, 0}, rational(1)));
  CHECK(substitute(tk, SubstTarget::T2) == Laurent2::monomial(Exp2{0, 6}, rational(1)));
  CHECK(substitute(tk, SubstTarget::T1T2) == Laurent2::monomial(Exp2{6, 6}, rational(1)));

  const Laurent1 p = T - one1 + Tinv;
  CHECK(substitute(p, SubstTarget::T2) ==
        Laurent2::from_terms({{Exp2{0, 2}, rational(1)},
                              {Exp2{0, 0}, rational(-1)},
                              {Exp2{0, -2}, rational(1)}}));
  CHECK(substitute(p, SubstTarget::One) == Laurent2::constant(rational(1)));
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(20240819);
  for (int iter = 0; iter < 300; ++iter) {
    const Laurent1 p = random_poly1(rng), q = random_poly1(rng), r = random_poly1(rng);
    for (SubstTarget t :
         {SubstTarget::T1, SubstTarget::T2, SubstTarget::T1T2, SubstTarget::One})
      CHECK(substitute(p * q + r, t) == substitute(p, t) * substitute(q, t) + substitute(r, t));
  }
}

TEST_CASE("collapsing the first variable sets it to one") {
  std::mt19937 rng(20240820);
  for (int iter = 0; iter < 200; ++iter) {
    const Laurent1 p = random_poly1(rng);
    CHECK(collapse_first(substitute(p, SubstTarget::T2)) == p);
    CHECK(collapse_first(substitute(p, SubstTarget::T1)) ==
          Laurent1::constant(p.eval_at_one()));
    CHECK(collapse_first(substitute(p, SubstTarget::T1T2)) == p);
  }
}

TEST_CASE("exact division round-trips random products, one variable") {
  std::mt19937 rng(20240821);
  for (int iter = 0; iter < 1000; ++iter) {
    const Laurent1 p = random_poly1(rng);
    const Laurent1 d = random_nonzero<Laurent1>(random_poly1, rng);
    CHECK(exact_divide(p * d, d) == p);
  }
}

TEST_CASE("exact division round-trips random products, two variables") {
  std::mt19937 rng(20240822);
  for (int iter = 0; iter < 500; ++iter) {
    const Laurent2 p = random_poly2(rng);
    const Laurent2 d = random_nonzero<Laurent2>(random_poly2, rng);
    CHECK(exact_divide(p * d, d) == p);
  }
}

TEST_CASE("exact division examples and failure modes") {
  const Laurent2 t2 = Laurent2::monomial(Exp2{0, 2}, rational(1));
  const Laurent2 one = Laurent2::constant(rational(1));
  CHECK(exact_divide(Laurent2::zero(), t2 - one).is_zero());
  CHECK(exact_divide(t2 * t2 - one, t2 - one) == t2 + one);
  CHECK(!try_exact_divide(t2 - one - one, t2 - one).has_value());
  CHECK_THROWS_AS((void)exact_divide(t2 - one - one, t2 - one), NotDivisibleError);
  CHECK_THROWS_AS((void)exact_divide(one, Laurent2::zero()), DivisionByZeroError);

  const Laurent2 t1 = Laurent2::monomial(Exp2{2, 0}, rational(1));
  CHECK(exact_divide((t1 * t2 - one) * (t1 + t2), t1 * t2 - one) == t1 + t2);
  CHECK(!try_exact_divide(t1 + t2, t1 - t2).has_value());
}

TEST_CASE("integral-exponent assertion") {
  CHECK(has_integral_exponents(T - one1));
  CHECK(&assert_integral_exponents(T) == &T);
  const Laurent1 half = Laurent1::monomial(1, rational(1));
  CHECK(!has_integral_exponents(half));
  CHECK_THROWS_AS((void)assert_integral_exponents(half), HalfIntegerExponentError);
}

TEST_CASE("canonical form is a normal form") {
  const Laurent1 a = Laurent1::from_terms(
      {{2, rational(1, 2)}, {0, rational(-1)}, {2, rational(1, 2)}, {0, rational(1)}});
  CHECK(a == T);
  CHECK(a.terms() == T.terms());
  CHECK(a.str() == "T");

  std::mt19937 rng(20240823);
  for (int iter = 0; iter < 200; ++iter) {
    const Laurent1 p = random_poly1(rng), q = random_poly1(rng);
    const Laurent1 x = p + q, y = q + p;
    CHECK(x.terms() == y.terms());
    CHECK(x.str() == y.str());
  }

  CHECK(Laurent1::zero().str() == "0");
  CHECK(Laurent1::monomial(-2, rational(1)).str() == "T^-1");
  CHECK(Laurent1::monomial(1, rational(1)).str() == "T^(1/2)");
  CHECK((T - one1 + Tinv).str() == "T - 1 + T^-1");
}

TEST_CASE("multiplication agrees across dense and sparse accumulation paths") {
  // span beyond the dense cutoff forces the map-based path
  const Laurent1 big = Laurent1::monomial(200000, rational(1)) + one1;
  const Laurent1 small = Laurent1::monomial(-200000, rational(1)) + one1;
  CHECK(big * small == Laurent1::from_terms({{200000, rational(1)},
                                             {0, rational(2)},
                                             {-200000, rational(1)}}));
}

TEST_CASE("rational-function field axioms on random inputs") {
  std::mt19937 rng(20240824);
  const RatFn1 one = RatFn1::from_poly(one1);
  for (int iter = 0; iter < 500; ++iter) {
    const Laurent1 pn = random_nonzero<Laurent1>(random_poly1, rng);
    const Laurent1 qn = random_nonzero<Laurent1>(random_poly1, rng);
    const RatFn1 a(random_poly1(rng), pn), b(random_poly1(rng), qn);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) {
      CHECK((a * b) / b == a);
      CHECK(RatFn1(pn, qn) * RatFn1(qn, pn) == one);
    }
    CHECK(a + (-a) == RatFn1());
  }
}

TEST_CASE("rational-function examples") {
  const Laurent2 t2 = Laurent2::monomial(Exp2{0, 2}, rational(1));
  const Laurent2 one2 = Laurent2::constant(rational(1));
  const RatFn2 x(one2, t2 - one2), y(one2, one2 - t2);
  CHECK((x + y).is_zero());

  const RatFn1 q(T * T - one1, T - one1);
  CHECK(q == RatFn1::from_poly(T + one1));
  CHECK(exact_divide(T * T - one1, T - one1) == T + one1);

  CHECK_THROWS_AS(RatFn1(one1, Laurent1::zero()), DivisionByZeroError);
  CHECK_THROWS_AS((void)(RatFn1::from_poly(one1) / RatFn1()), DivisionByZeroError);
  CHECK_THROWS_AS((void)RatFn1(one1, T - one1).as_polynomial(), NotDivisibleError);
  CHECK(RatFn1(T * T - one1, Laurent1::constant(rational(2))).as_polynomial() ==
        (T * T - one1).scaled(rational(1, 2)));
}

TEST_CASE("powers, shifts, and scaling") {
  std::mt19937 rng(20240825);
  for (int iter = 0; iter < 100; ++iter) {
    const Laurent1 p = random_poly1(rng);
    CHECK(pow(p, 3) == p * p * p);
    CHECK(p.shifted(2) == p * T);
    CHECK(p.scaled(rational(-3, 7)) == p * Laurent1::constant(rational(-3, 7)));
  }
  CHECK(pow(Laurent1::zero(), 0) == one1);
}
