#pragma once

#include "toda/laurent.hpp"

#include <stdexcept>

namespace toda {

// Element of the fraction field of the Laurent-polynomial ring, stored as an
// unreduced numerator/denominator pair.  Equality is decided exactly by
// cross-multiplication, so no gcd computation is ever needed.
class RationalExpr {
 public:
  RationalExpr() : num_(), den_(1) {}
  RationalExpr(LaurentPoly n) : num_(std::move(n)), den_(1) {}
  RationalExpr(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("RationalExpr: zero denominator");
    reduce_monomial();
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  RationalExpr operator-() const { return make(-num_, den_); }

  RationalExpr operator+(const RationalExpr& o) const {
    return make(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RationalExpr operator-(const RationalExpr& o) const {
    return make(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  RationalExpr operator*(const RationalExpr& o) const {
    return make(num_ * o.num_, den_ * o.den_);
  }
  RationalExpr operator/(const RationalExpr& o) const {
    if (o.num_.is_zero()) throw std::domain_error("RationalExpr: division by zero");
    return make(num_ * o.den_, den_ * o.num_);
  }

  RationalExpr& operator+=(const RationalExpr& o) { return *this = *this + o; }
  RationalExpr& operator-=(const RationalExpr& o) { return *this = *this - o; }
  RationalExpr& operator*=(const RationalExpr& o) { return *this = *this * o; }

  // a/b == c/d  <=>  a*d == c*b.
  bool operator==(const RationalExpr& o) const { return (num_ * o.den_) == (o.num_ * den_); }
  bool operator!=(const RationalExpr& o) const { return !(*this == o); }

  std::string str() const {
    if (den_.is_monomial() && den_.leading().first.is_one() && den_.leading().second == GaussianRational(1))
      return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }

 private:
  static RationalExpr make(LaurentPoly n, LaurentPoly d) {
    RationalExpr r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    r.reduce_monomial();
    return r;
  }

  // Monomials are units of the Laurent ring: if the denominator is a single
  // term, fold it into the numerator.  Keeps sizes small without gcds.
  void reduce_monomial() {
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    if (den_.is_monomial()) {
      const auto& [m, c] = den_.leading();
      num_ = num_ * LaurentPoly(GaussianRational(1) / c, m.inverse());
      den_ = LaurentPoly(1);
    }
  }

  LaurentPoly num_, den_;
};

}  // namespace toda
