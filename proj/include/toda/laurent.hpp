#pragma once

#include "toda/rational.hpp"
#include "toda/variables.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace toda {

// Product of variables with signed integer (Laurent) exponents.  Canonical:
// sorted by VarId, no zero exponents.  Total order is lexicographic on
// (VarId, exponent), which is compatible with multiplication.
class Monomial {
 public:
  using Entry = std::pair<VarId, std::int32_t>;

  Monomial() = default;
  Monomial(std::initializer_list<Entry> entries);

  static Monomial one() { return {}; }
  static Monomial of(VarId v, std::int32_t e = 1);

  bool is_one() const { return entries_.empty(); }
  std::int32_t exponent(VarId v) const;
  const std::vector<Entry>& entries() const { return entries_; }

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;

  bool operator==(const Monomial& o) const { return entries_ == o.entries_; }

  // Lexicographic order on full exponent vectors (absent variables count as
  // exponent 0).  This is a translation-invariant group order on Z^k, so it
  // is compatible with multiplication: a < b implies a*c < b*c.
  bool operator<(const Monomial& o) const;

  std::string str() const;

 private:
  std::vector<Entry> entries_;
};

// Multivariate Laurent polynomial over Q(i).  Canonical form: an ordered map
// monomial -> nonzero coefficient.
class LaurentPoly {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  LaurentPoly() = default;
  LaurentPoly(long c);
  LaurentPoly(GaussianRational c);
  LaurentPoly(GaussianRational c, Monomial m);

  static LaurentPoly variable(VarId v, std::int32_t e = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  // Leading term in the canonical monomial order (requires !is_zero()).
  const std::pair<const Monomial, GaussianRational>& leading() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator*(const LaurentPoly& o) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly pow(unsigned e) const;

  // Exact division; throws std::domain_error if the quotient is not a
  // Laurent polynomial.  Exactness is guaranteed by the Bareiss invariant
  // when called from the determinant routine.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  // Ring homomorphism replacing each bound variable by a polynomial value.
  // A variable occurring with negative exponents must be bound to a single
  // invertible monomial term; otherwise std::domain_error("requires
  // fraction field") is thrown.
  LaurentPoly substitute(const std::map<VarId, LaurentPoly>& bindings) const;

  // Collects coefficients of powers of `v` (exponent -> coefficient poly).
  std::map<std::int32_t, LaurentPoly> collect(VarId v) const;

  // Canonical serialization: terms in monomial order, explicit signs.
  std::string str() const;

  void add_term(const Monomial& m, const GaussianRational& c);

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace toda
