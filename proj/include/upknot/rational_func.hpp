#pragma once

#include <string>
#include <utility>

#include "upknot/errors.hpp"
#include "upknot/laurent.hpp"

namespace upknot {

// Quotient of two Laurent polynomials. No gcd reduction is attempted
// (polynomial gcds are expensive and nothing here needs them); the canonical
// form only fixes the unit factors: the denominator is shifted so its
// componentwise-minimal exponent is zero and its leading coefficient is
// positive. Equality is decided by cross-multiplication, so two fractions
// that differ by a common polynomial factor still compare equal.
template <class P>
class RatFn {
 public:
  using E = typename P::ExpType;
  using C = typename P::CoeffType;

  RatFn() : num_(P::zero()), den_(P::constant(1)) {}

  static RatFn from_poly(P p) { return RatFn(std::move(p), P::constant(1)); }

  RatFn(P num, P den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
      throw DivisionByZeroError("rational function with zero denominator");
    normalize();
  }

  const P& num() const { return num_; }
  const P& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  // true when the denominator has been reduced to a constant
  bool is_polynomial() const {
    return den_.term_count() == 1 &&
           den_.terms().front().first == detail::exp_ops<E>::zero();
  }

  P as_polynomial() const {
    if (!is_polynomial())
      throw NotDivisibleError("rational function is not a polynomial: " + str());
    C inv = 1 / den_.terms().front().second;
    return num_.scaled(inv);
  }

  RatFn operator-() const { return RatFn(-num_, den_, already_normal{}); }

  RatFn operator+(const RatFn& o) const {
    if (den_ == o.den_) return RatFn(num_ + o.num_, den_);
    return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }

  RatFn operator-(const RatFn& o) const { return *this + (-o); }

  RatFn operator*(const RatFn& o) const {
    return RatFn(num_ * o.num_, den_ * o.den_);
  }

  RatFn operator/(const RatFn& o) const {
    if (o.num_.is_zero())
      throw DivisionByZeroError("division by zero rational function");
    return RatFn(num_ * o.den_, den_ * o.num_);
  }

  friend bool operator==(const RatFn& x, const RatFn& y) {
    return x.num_ * y.den_ == y.num_ * x.den_;
  }

  std::string str() const {
    if (den_ == P::constant(1)) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }

 private:
  struct already_normal {};
  RatFn(P num, P den, already_normal)
      : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (num_.is_zero()) {
      den_ = P::constant(1);
      return;
    }
    const E shift = detail::exp_ops<E>::neg(den_.min_exp_each());
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);
    if (detail::coeff_ops<C>::negative(den_.leading_coeff())) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  P num_, den_;
};

using RatFn1 = RatFn<Laurent1>;
using RatFn2 = RatFn<Laurent2>;

}  // namespace upknot
