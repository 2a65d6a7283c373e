#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "upknot/errors.hpp"

namespace upknot {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw DivisionByZeroError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Exponents are stored doubled, so the half-integer powers produced by the
// T^((-rotation-writhe)/2) normalization stay exact: stored 2e means T^e.
using Exp1 = std::int64_t;

struct Exp2 {
  std::int64_t a = 0;  // doubled exponent of the first variable
  std::int64_t b = 0;  // doubled exponent of the second variable
  friend auto operator<=>(const Exp2&, const Exp2&) = default;
  Exp2 operator+(const Exp2& o) const { return {a + o.a, b + o.b}; }
  Exp2 operator-(const Exp2& o) const { return {a - o.a, b - o.b}; }
};

namespace detail {

template <class C>
struct coeff_ops;

template <>
struct coeff_ops<Rational> {
  static bool divide(const Rational& a, const Rational& b, Rational& out) {
    out = a / b;
    return true;
  }
  static bool negative(const Rational& a) { return sgn(a) < 0; }
};

template <>
struct coeff_ops<BigInt> {
  static bool divide(const BigInt& a, const BigInt& b, BigInt& out) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return false;
    mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return true;
  }
  static bool negative(const BigInt& a) { return sgn(a) < 0; }
};

template <class E>
struct exp_ops;

template <>
struct exp_ops<Exp1> {
  static constexpr Exp1 zero() { return 0; }
  static Exp1 neg(Exp1 e) { return -e; }
  // whether n - d has no negative component (monomial divisibility after shifting)
  static bool divides(Exp1 d, Exp1 n) { return n >= d; }
  static Exp1 min_each(Exp1 x, Exp1 y) { return x < y ? x : y; }
  static bool integral(Exp1 e) { return e % 2 == 0; }
};

template <>
struct exp_ops<Exp2> {
  static constexpr Exp2 zero() { return {}; }
  static Exp2 neg(const Exp2& e) { return {-e.a, -e.b}; }
  static bool divides(const Exp2& d, const Exp2& n) { return n.a >= d.a && n.b >= d.b; }
  static Exp2 min_each(const Exp2& x, const Exp2& y) {
    return {x.a < y.a ? x.a : y.a, x.b < y.b ? x.b : y.b};
  }
  static bool integral(const Exp2& e) { return e.a % 2 == 0 && e.b % 2 == 0; }
};

inline std::string power_str(const char* var, std::int64_t doubled) {
  std::string v(var);
  if (doubled == 0) return "";
  if (doubled == 2) return v;
  if (doubled % 2 == 0) return v + "^" + std::to_string(doubled / 2);
  return v + "^(" + std::to_string(doubled) + "/2)";
}

inline std::string coeff_str(const Rational& c) { return c.get_str(); }
inline std::string coeff_str(const BigInt& c) { return c.get_str(); }

}  // namespace detail

// Sparse Laurent polynomial: terms sorted by ascending exponent, no zero
// coefficients. Equality of representations is equality of polynomials.
template <class E, class C>
class Laurent {
 public:
  using Term = std::pair<E, C>;
  using ExpType = E;
  using CoeffType = C;

  Laurent() = default;

  static Laurent zero() { return {}; }

  static Laurent constant(C c) {
    Laurent p;
    if (c != 0) p.terms_.emplace_back(detail::exp_ops<E>::zero(), std::move(c));
    return p;
  }

  static Laurent monomial(E e, C c) {
    Laurent p;
    if (c != 0) p.terms_.emplace_back(std::move(e), std::move(c));
    return p;
  }

  static Laurent from_terms(std::vector<Term> ts) {
    Laurent p;
    p.terms_ = std::move(ts);
    p.normalize();
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const E& min_exp() const {
    require_nonzero("min_exp");
    return terms_.front().first;
  }
  const E& max_exp() const {
    require_nonzero("max_exp");
    return terms_.back().first;
  }
  // componentwise minimum over all exponents (for univariate this is min_exp)
  E min_exp_each() const {
    require_nonzero("min_exp_each");
    E m = terms_.front().first;
    for (const auto& [e, c] : terms_) m = detail::exp_ops<E>::min_each(m, e);
    return m;
  }
  const C& leading_coeff() const {
    require_nonzero("leading_coeff");
    return terms_.back().second;
  }

  C eval_at_one() const {
    C s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  friend bool operator==(const Laurent&, const Laurent&) = default;

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  Laurent operator+(const Laurent& o) const {
    Laurent r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
      if (a->first < b->first) {
        r.terms_.push_back(*a++);
      } else if (b->first < a->first) {
        r.terms_.push_back(*b++);
      } else {
        C s = a->second + b->second;
        if (s != 0) r.terms_.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    r.terms_.insert(r.terms_.end(), a, terms_.end());
    r.terms_.insert(r.terms_.end(), b, o.terms_.end());
    return r;
  }

  Laurent operator-(const Laurent& o) const { return *this + (-o); }

  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent operator*(const Laurent& o) const {
    Laurent r;
    if (is_zero() || o.is_zero()) return r;
    if constexpr (std::is_same_v<E, Exp1>) {
      // dense accumulation when the exponent span is moderate
      const Exp1 lo = min_exp() + o.min_exp();
      const Exp1 hi = max_exp() + o.max_exp();
      if (hi - lo <= 65536) {
        std::vector<C> acc(static_cast<std::size_t>(hi - lo + 1));
        for (const auto& [ea, ca] : terms_)
          for (const auto& [eb, cb] : o.terms_)
            acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
        for (std::size_t k = 0; k < acc.size(); ++k)
          if (acc[k] != 0)
            r.terms_.emplace_back(lo + static_cast<Exp1>(k), std::move(acc[k]));
        return r;
      }
    }
    std::map<E, C> acc;
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) acc[ea + eb] += ca * cb;
    for (auto& [e, c] : acc)
      if (c != 0) r.terms_.emplace_back(e, std::move(c));
    return r;
  }

  Laurent scaled(const C& k) const {
    Laurent r;
    if (k == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, c * k);
    return r;
  }

  // multiply by the monomial T^shift (shift in doubled units)
  Laurent shifted(const E& shift) const {
    Laurent r = *this;
    for (auto& [e, c] : r.terms_) e = e + shift;
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string cs = detail::coeff_str(c);
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs.erase(0, 1);
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      std::string ps = power_of(e);
      if (ps.empty()) {
        out += cs;
      } else if (cs == "1") {
        out += ps;
      } else {
        out += cs + "*" + ps;
      }
    }
    return out;
  }

 private:
  static std::string power_of(const Exp1& e) { return detail::power_str("T", e); }
  static std::string power_of(const Exp2& e) {
    std::string s1 = detail::power_str("T1", e.a);
    std::string s2 = detail::power_str("T2", e.b);
    if (s1.empty()) return s2;
    if (s2.empty()) return s1;
    return s1 + "*" + s2;
  }

  void require_nonzero(const char* who) const {
    if (terms_.empty()) throw InternalError(std::string(who) + " on zero polynomial");
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
        if (out.back().second == 0) out.pop_back();
      } else if (t.second != 0) {
        out.push_back(std::move(t));
      }
    }
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;
};

using Laurent1 = Laurent<Exp1, Rational>;
using Laurent2 = Laurent<Exp2, Rational>;
using ILaurent1 = Laurent<Exp1, BigInt>;
using ILaurent2 = Laurent<Exp2, BigInt>;

enum class SubstTarget { T1, T2, T1T2, One };

// Image of a univariate polynomial inside the two-variable ring.
template <class C>
Laurent<Exp2, C> substitute(const Laurent<Exp1, C>& p, SubstTarget target) {
  std::vector<typename Laurent<Exp2, C>::Term> ts;
  ts.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) {
    switch (target) {
      case SubstTarget::T1:
        ts.push_back({{e, 0}, c});
        break;
      case SubstTarget::T2:
        ts.push_back({{0, e}, c});
        break;
      case SubstTarget::T1T2:
        ts.push_back({{e, e}, c});
        break;
      case SubstTarget::One:
        ts.push_back({{0, 0}, c});
        break;
    }
  }
  return Laurent<Exp2, C>::from_terms(std::move(ts));
}

// Set the first variable to 1, leaving a univariate polynomial in the second.
template <class C>
Laurent<Exp1, C> collapse_first(const Laurent<Exp2, C>& p) {
  std::vector<typename Laurent<Exp1, C>::Term> ts;
  ts.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) ts.push_back({e.b, c});
  return Laurent<Exp1, C>::from_terms(std::move(ts));
}

template <class E, class C>
bool has_integral_exponents(const Laurent<E, C>& p) {
  for (const auto& [e, c] : p.terms())
    if (!detail::exp_ops<E>::integral(e)) return false;
  return true;
}

template <class E, class C>
const Laurent<E, C>& assert_integral_exponents(const Laurent<E, C>& p) {
  if (!has_integral_exponents(p))
    throw HalfIntegerExponentError("half-integer exponent remains: " + p.str());
  return p;
}

// Quotient num/den when it is itself a Laurent polynomial, nullopt otherwise.
// Monomial factors are units, so both inputs are first shifted to ordinary
// polynomials with componentwise-minimal exponent zero; exactness there is
// equivalent to exactness in the Laurent ring.
template <class E, class C>
std::optional<Laurent<E, C>> try_exact_divide(const Laurent<E, C>& num,
                                              const Laurent<E, C>& den) {
  using Ops = detail::exp_ops<E>;
  if (den.is_zero()) throw DivisionByZeroError("exact_divide by zero polynomial");
  if (num.is_zero()) return Laurent<E, C>::zero();
  const E ns = num.min_exp_each();
  const E ds = den.min_exp_each();
  Laurent<E, C> work = num.shifted(Ops::neg(ns));
  const Laurent<E, C> d = den.shifted(Ops::neg(ds));
  const E dlead = d.max_exp();
  const C& dlc = d.leading_coeff();
  std::vector<typename Laurent<E, C>::Term> q;
  // Exact quotients terminate after exactly term_count(quotient) rounds; the
  // cap only guards against unbounded descent on inexact multivariate input.
  for (std::size_t round = 0; !work.is_zero(); ++round) {
    if (round > (1u << 24)) return std::nullopt;
    const E rlead = work.max_exp();
    if (!Ops::divides(dlead, rlead)) return std::nullopt;
    C qc;
    if (!detail::coeff_ops<C>::divide(work.leading_coeff(), dlc, qc)) return std::nullopt;
    const E qe = rlead - dlead;
    work -= d.shifted(qe).scaled(qc);
    q.push_back({qe, std::move(qc)});
  }
  auto quot = Laurent<E, C>::from_terms(std::move(q));
  return quot.shifted(ns - ds);
}

template <class E, class C>
Laurent<E, C> exact_divide(const Laurent<E, C>& num, const Laurent<E, C>& den) {
  auto q = try_exact_divide(num, den);
  if (!q)
    throw NotDivisibleError("polynomial division leaves a remainder: (" + num.str() +
                            ") / (" + den.str() + ")");
  return *std::move(q);
}

template <class E, class C>
Laurent<E, C> pow(const Laurent<E, C>& p, unsigned k) {
  Laurent<E, C> r = Laurent<E, C>::constant(1);
  for (unsigned i = 0; i < k; ++i) r *= p;
  return r;
}

}  // namespace upknot
