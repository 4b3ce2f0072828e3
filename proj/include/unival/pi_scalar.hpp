#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "unival/rational.hpp"

namespace unival {

/*
 * Laurent polynomial in the transcendental symbol pi with rational
 * coefficients. This is the coefficient ring of the whole project:
 * pi is never evaluated numerically, so all arithmetic is exact and
 * equality is decidable term by term.
 *
 * Canonical form: no zero coefficients stored. Division is the checked
 * partial operation by a single nonzero monomial c*pi^j; that is the
 * only division the theory ever needs.
 */
class PiScalar {
public:
  PiScalar() = default;
  PiScalar(long long v) { set_term(0, Rational(v)); }
  PiScalar(int v) { set_term(0, Rational(v)); }
  PiScalar(Rational r) { set_term(0, std::move(r)); }

  static PiScalar pi_power(int j, Rational coeff = Rational(1)) {
    PiScalar s;
    s.set_term(j, std::move(coeff));
    return s;
  }

  static PiScalar pi() { return pi_power(1); }

  const std::map<int, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 &&
           terms_.begin()->second.is_one();
  }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }

  // Coefficient of pi^j (zero if absent).
  Rational coeff(int j) const {
    auto it = terms_.find(j);
    return it == terms_.end() ? Rational() : it->second;
  }

  Rational rational_value() const {
    if (!is_rational()) throw std::domain_error("PiScalar: not a rational");
    return coeff(0);
  }

  PiScalar operator-() const {
    PiScalar r;
    for (const auto& [j, c] : terms_) r.terms_.emplace(j, -c);
    return r;
  }

  PiScalar operator+(const PiScalar& o) const {
    PiScalar r = *this;
    for (const auto& [j, c] : o.terms_) r.add_term(j, c);
    return r;
  }

  PiScalar operator-(const PiScalar& o) const { return *this + (-o); }

  PiScalar operator*(const PiScalar& o) const {
    PiScalar r;
    for (const auto& [j1, c1] : terms_)
      for (const auto& [j2, c2] : o.terms_) r.add_term(j1 + j2, c1 * c2);
    return r;
  }

  PiScalar& operator+=(const PiScalar& o) { return *this = *this + o; }
  PiScalar& operator-=(const PiScalar& o) { return *this = *this - o; }
  PiScalar& operator*=(const PiScalar& o) { return *this = *this * o; }

  // Exact division by a single nonzero term c*pi^j.
  PiScalar div_monomial(const PiScalar& b) const {
    if (!b.is_monomial())
      throw std::domain_error("PiScalar: divisor must be a nonzero monomial");
    const auto& [j, c] = *b.terms_.begin();
    PiScalar r;
    for (const auto& [j1, c1] : terms_) r.set_term(j1 - j, c1 / c);
    return r;
  }

  bool operator==(const PiScalar& o) const { return terms_ == o.terms_; }

  // "num/den * pi^j" terms joined with " + " / " - ", pi-powers ascending.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [j, c] : terms_) {
      Rational a = c;
      if (first) {
        if (a.sign() < 0) {
          out += "-";
          a = -a;
        }
        first = false;
      } else if (a.sign() < 0) {
        out += " - ";
        a = -a;
      } else {
        out += " + ";
      }
      if (j == 0) {
        out += a.to_string();
      } else {
        if (!a.is_one()) out += a.to_string() + " * ";
        out += j == 1 ? "pi" : "pi^" + std::to_string(j);
      }
    }
    return out;
  }

private:
  std::map<int, Rational> terms_;

  void set_term(int j, Rational c) {
    if (c.is_zero())
      terms_.erase(j);
    else
      terms_[j] = std::move(c);
  }

  void add_term(int j, const Rational& c) {
    auto it = terms_.find(j);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(j, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
};

inline PiScalar operator*(const Rational& r, const PiScalar& s) {
  return PiScalar(r) * s;
}

/*
 * Volume of the m-dimensional euclidean unit ball,
 * omega_m = pi^(m/2) / Gamma(m/2 + 1). The half-integral powers of pi
 * cancel against the Gamma factor, so every omega_m is a single
 * rational pi-monomial:
 *   omega_{2p}   = pi^p / p!
 *   omega_{2p+1} = pi^p * 2^(2p+1) p! / (2p+1)!
 */
inline PiScalar omega(int m) {
  if (m < 0) throw std::domain_error("omega: negative dimension");
  int p = m / 2;
  if (m % 2 == 0)
    return PiScalar::pi_power(p, Rational(BigInt(1), factorial(p)));
  return PiScalar::pi_power(
      p, Rational(BigInt::pow(BigInt(2), static_cast<unsigned>(2 * p + 1)) * factorial(p),
                  factorial(2 * p + 1)));
}

} // namespace unival
