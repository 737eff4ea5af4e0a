#include "toda/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace toda {

std::string GaussianRational::str() const {
  auto rat = [](const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
  };
  if (im == 0) return rat(re);
  if (re == 0) {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return rat(im) + "i";
  }
  std::string s = "(" + rat(re);
  if (im > 0) s += "+";
  if (im == 1)
    s += "i";
  else if (im == -1)
    s += "-i";
  else
    s += rat(im) + "i";
  return s + ")";
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  Rational n = o.re * o.re + o.im * o.im;
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& v) { return os << v.str(); }

Monomial::Monomial(std::initializer_list<Entry> entries) {
  for (const auto& [v, e] : entries)
    if (e != 0) entries_.push_back({v, e});
  std::sort(entries_.begin(), entries_.end());
}

Monomial Monomial::of(VarId v, std::int32_t e) {
  Monomial m;
  if (e != 0) m.entries_.push_back({v, e});
  return m;
}

std::int32_t Monomial::exponent(VarId v) const {
  for (const auto& [w, e] : entries_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  out.entries_.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin(), ae = entries_.end();
  auto b = o.entries_.begin(), be = o.entries_.end();
  while (a != ae && b != be) {
    if (a->first < b->first) {
      out.entries_.push_back(*a++);
    } else if (b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      std::int32_t e = a->second + b->second;
      if (e != 0) out.entries_.push_back({a->first, e});
      ++a;
      ++b;
    }
  }
  out.entries_.insert(out.entries_.end(), a, ae);
  out.entries_.insert(out.entries_.end(), b, be);
  return out;
}

bool Monomial::operator<(const Monomial& o) const {
  auto a = entries_.begin(), ae = entries_.end();
  auto b = o.entries_.begin(), be = o.entries_.end();
  while (a != ae || b != be) {
    // Exponent of the smallest VarId where the vectors differ decides.
    if (b == be || (a != ae && a->first < b->first)) {
      if (a->second != 0) return a->second < 0;
      ++a;
    } else if (a == ae || b->first < a->first) {
      if (b->second != 0) return b->second > 0;
      ++b;
    } else {
      if (a->second != b->second) return a->second < b->second;
      ++a;
      ++b;
    }
  }
  return false;
}

Monomial Monomial::inverse() const {
  Monomial out = *this;
  for (auto& [v, e] : out.entries_) e = -e;
  return out;
}

std::string Monomial::str() const {
  if (entries_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : entries_) {
    if (!s.empty()) s += "*";
    s += var_name(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(Monomial::one(), GaussianRational(c));
}

LaurentPoly::LaurentPoly(GaussianRational c) {
  if (!c.is_zero()) terms_.emplace(Monomial::one(), std::move(c));
}

LaurentPoly::LaurentPoly(GaussianRational c, Monomial m) {
  if (!c.is_zero()) terms_.emplace(std::move(m), std::move(c));
}

LaurentPoly LaurentPoly::variable(VarId v, std::int32_t e) {
  return LaurentPoly(GaussianRational(1), Monomial::of(v, e));
}

const std::pair<const Monomial, GaussianRational>& LaurentPoly::leading() const {
  if (terms_.empty()) throw std::logic_error("leading() of zero polynomial");
  return *terms_.rbegin();
}

void LaurentPoly::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("divide_exact: zero divisor");
  LaurentPoly remainder = *this;
  LaurentPoly quotient;
  const auto& [dm, dc] = divisor.leading();
  const Monomial dm_inv = dm.inverse();
  // Each step cancels the remainder's leading term; since monomial order is
  // multiplicative, leading monomials strictly decrease, and an exact
  // quotient is produced in at most quotient-size steps.
  std::size_t guard = remainder.size() * divisor.size() + remainder.size() + 16;
  while (!remainder.is_zero()) {
    if (guard-- == 0) throw std::domain_error("divide_exact: inexact division");
    const auto& [rm, rc] = remainder.leading();
    Monomial t = rm * dm_inv;
    GaussianRational tc = rc / dc;
    quotient.add_term(t, tc);
    remainder -= divisor * LaurentPoly(tc, t);
  }
  return quotient;
}

LaurentPoly LaurentPoly::substitute(const std::map<VarId, LaurentPoly>& bindings) const {
  LaurentPoly out;
  for (const auto& [m, c] : terms_) {
    LaurentPoly term(c);
    Monomial residual;  // variables left unbound
    for (const auto& [v, e] : m.entries()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        residual = residual * Monomial::of(v, e);
        continue;
      }
      const LaurentPoly& value = it->second;
      if (e >= 0) {
        term = term * value.pow(static_cast<unsigned>(e));
      } else {
        if (!value.is_monomial())
          throw std::domain_error("substitute: requires fraction field");
        const auto& [vm, vc] = value.leading();
        LaurentPoly inv(GaussianRational(1) / vc, vm.inverse());
        term = term * inv.pow(static_cast<unsigned>(-e));
      }
    }
    out += term * LaurentPoly(GaussianRational(1), residual);
  }
  return out;
}

std::map<std::int32_t, LaurentPoly> LaurentPoly::collect(VarId v) const {
  std::map<std::int32_t, LaurentPoly> out;
  for (const auto& [m, c] : terms_) {
    std::int32_t e = m.exponent(v);
    out[e].add_term(m * Monomial::of(v, -e), c);
  }
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    bool negative = !cs.empty() && cs[0] == '-';
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (negative) cs = cs.substr(1);
    if (m.is_one()) {
      s += cs;
    } else if (cs == "1") {
      s += m.str();
    } else {
      s += cs + "*" + m.str();
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

}  // namespace toda
