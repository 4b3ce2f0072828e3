#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "unival/pi_scalar.hpp"

namespace unival {

/*
 * Bivariate graded polynomials in two coordinate systems:
 *
 *   ST: generators s (degree 2) and t (degree 1)
 *   TU: generators u (degree 2) and t (degree 1), where u = 4s - t^2
 *
 * An exponent pair (a, b) means s^a t^b in ST and u^a t^b in TU, so the
 * grading is 2a + b in both systems. Coefficients live in PiScalar.
 */
enum class Coords { ST, TU };

inline std::string to_string(Coords c) { return c == Coords::ST ? "st" : "tu"; }

struct PolyExp {
  int a = 0; // exponent of s or u
  int b = 0; // exponent of t

  int degree() const { return 2 * a + b; }

  bool operator==(const PolyExp&) const = default;
  // total order: by degree, then by a; deterministic term listing
  bool operator<(const PolyExp& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    return a < o.a;
  }
};

class GradedPoly {
public:
  explicit GradedPoly(Coords c) : coords_(c) {}

  static GradedPoly zero(Coords c) { return GradedPoly(c); }

  static GradedPoly monomial(Coords c, int a, int b, PiScalar coeff = PiScalar(1)) {
    if (a < 0 || b < 0) throw std::invalid_argument("GradedPoly: negative exponent");
    GradedPoly p(c);
    p.add_term({a, b}, std::move(coeff));
    return p;
  }

  static GradedPoly one(Coords c) { return monomial(c, 0, 0); }
  static GradedPoly gen_t(Coords c) { return monomial(c, 0, 1); }
  static GradedPoly gen_s() { return monomial(Coords::ST, 1, 0); }
  static GradedPoly gen_u() { return monomial(Coords::TU, 1, 0); }

  Coords coords() const { return coords_; }
  const std::map<PolyExp, PiScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PiScalar coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? PiScalar() : it->second;
  }

  GradedPoly operator-() const {
    GradedPoly r(coords_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  GradedPoly operator+(const GradedPoly& o) const {
    check_coords(o);
    GradedPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  GradedPoly operator-(const GradedPoly& o) const { return *this + (-o); }

  GradedPoly operator*(const GradedPoly& o) const {
    check_coords(o);
    GradedPoly r(coords_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_)
        r.add_term({e1.a + e2.a, e1.b + e2.b}, c1 * c2);
    return r;
  }

  GradedPoly operator*(const PiScalar& c) const {
    GradedPoly r(coords_);
    for (const auto& [e, t] : terms_) r.add_term(e, t * c);
    return r;
  }

  GradedPoly& operator+=(const GradedPoly& o) { return *this = *this + o; }
  GradedPoly& operator-=(const GradedPoly& o) { return *this = *this - o; }
  GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }

  bool operator==(const GradedPoly& o) const {
    return coords_ == o.coords_ && terms_ == o.terms_;
  }

  int degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
    return d;
  }

  bool is_homogeneous(int d) const {
    for (const auto& [e, c] : terms_)
      if (e.degree() != d) return false;
    return true;
  }

  // Substitution u = 4s - t^2 resp. s = (u + t^2)/4; a round trip is the
  // identity and the grading is preserved.
  GradedPoly convert(Coords target) const {
    if (target == coords_) return *this;
    GradedPoly r(target);
    GradedPoly image = target == Coords::ST
                           ? GradedPoly::gen_s() * PiScalar(4) -
                                 GradedPoly::gen_t(Coords::ST) * GradedPoly::gen_t(Coords::ST)
                           : (GradedPoly::gen_u() +
                              GradedPoly::gen_t(Coords::TU) * GradedPoly::gen_t(Coords::TU)) *
                                 PiScalar(Rational(1, 4));
    for (const auto& [e, c] : terms_) {
      GradedPoly term = monomial(target, 0, e.b, c);
      for (int i = 0; i < e.a; ++i) term *= image;
      r += term;
    }
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    const char* aname = coords_ == Coords::ST ? "s" : "u";
    for (const auto& [e, c] : terms_) {
      // generators print alphabetically: s*t^2 in ST, t^2*u in TU
      std::string apart, bpart;
      if (e.a > 0) apart = e.a == 1 ? std::string(aname) : std::string(aname) + "^" + std::to_string(e.a);
      if (e.b > 0) bpart = e.b == 1 ? "t" : "t^" + std::to_string(e.b);
      std::string mono = coords_ == Coords::ST ? apart : bpart;
      const std::string& second = coords_ == Coords::ST ? bpart : apart;
      if (!second.empty()) {
        if (!mono.empty()) mono += "*";
        mono += second;
      }
      std::string cs;
      bool neg = false;
      if (c.is_monomial() || c.is_zero()) {
        PiScalar cc = c;
        if (cc.terms().begin()->second.sign() < 0) {
          neg = true;
          cc = -cc;
        }
        if (!cc.is_one() || mono.empty()) cs = cc.to_string();
      } else {
        cs = "(" + c.to_string() + ")";
      }
      std::string term = cs;
      if (!cs.empty() && !mono.empty()) term += " * ";
      term += mono;
      if (first) {
        out += (neg ? "-" : "") + term;
        first = false;
      } else {
        out += (neg ? " - " : " + ") + term;
      }
    }
    return out;
  }

private:
  Coords coords_;
  std::map<PolyExp, PiScalar> terms_;

  void check_coords(const GradedPoly& o) const {
    if (coords_ != o.coords_)
      throw std::invalid_argument("GradedPoly: coordinate system mismatch");
  }

  void add_term(PolyExp e, const PiScalar& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
};

inline GradedPoly operator*(const PiScalar& c, const GradedPoly& p) { return p * c; }

enum class DiffOp { Dt, Du, TDt, UDu };

// Formal partial differentiation in TU coordinates.
inline GradedPoly apply_diff(DiffOp op, const GradedPoly& p) {
  if (p.coords() != Coords::TU)
    throw std::invalid_argument("apply_diff: TU coordinates required");
  GradedPoly r(Coords::TU);
  for (const auto& [e, c] : p.terms()) {
    switch (op) {
      case DiffOp::Dt:
        if (e.b > 0) r += GradedPoly::monomial(Coords::TU, e.a, e.b - 1, c * PiScalar(e.b));
        break;
      case DiffOp::Du:
        if (e.a > 0) r += GradedPoly::monomial(Coords::TU, e.a - 1, e.b, c * PiScalar(e.a));
        break;
      case DiffOp::TDt:
        r += GradedPoly::monomial(Coords::TU, e.a, e.b, c * PiScalar(e.b));
        break;
      case DiffOp::UDu:
        r += GradedPoly::monomial(Coords::TU, e.a, e.b, c * PiScalar(e.a));
        break;
    }
  }
  return r;
}

namespace detail {

// f_1 = t, f_2 = s - t^2/2, and k f_k = -t (k-1) f_{k-1} - s (k-2) f_{k-2};
// p_0 = 1 and p_k = -t p_{k-1} - s p_{k-2}; q_k = -sum_{i+j=k} p_i p_j.
// All three families are homogeneous of degree k, which is asserted after
// construction. Returned by value; the memo is guarded by one mutex.
inline GradedPoly family_get(char which, int k) {
  static std::mutex mu;
  static std::vector<GradedPoly> fs, ps, qs;
  std::lock_guard<std::mutex> lock(mu);
  const GradedPoly t = GradedPoly::gen_t(Coords::ST);
  const GradedPoly s = GradedPoly::gen_s();
  auto grow = [&](std::vector<GradedPoly>& vec, auto&& step) {
    while (static_cast<int>(vec.size()) <= k) {
      int m = static_cast<int>(vec.size());
      GradedPoly next = step(m);
      if (m > 0 && !next.is_homogeneous(m))
        throw std::logic_error("family constructor produced inhomogeneous term");
      vec.push_back(std::move(next));
    }
  };
  if (which == 'f') {
    grow(fs, [&](int m) {
      if (m == 0) return GradedPoly::zero(Coords::ST);
      if (m == 1) return t;
      if (m == 2) return s - t * t * PiScalar(Rational(1, 2));
      GradedPoly num = -(t * fs[m - 1] * PiScalar(m - 1)) - s * fs[m - 2] * PiScalar(m - 2);
      return num * PiScalar(Rational(1, m));
    });
    return fs[k];
  }
  grow(ps, [&](int m) {
    if (m == 0) return GradedPoly::one(Coords::ST);
    if (m == 1) return -t;
    return -(t * ps[m - 1]) - s * ps[m - 2];
  });
  if (which == 'p') return ps[k];
  grow(qs, [&](int m) {
    GradedPoly acc(Coords::ST);
    for (int i = 0; i <= m; ++i) acc += ps[i] * ps[m - i];
    return -acc;
  });
  return qs[k];
}

} // namespace detail

// Coefficients of log(1 + t x + s x^2) = sum_k f_k x^k.
inline GradedPoly fu_f(int k, Coords c = Coords::ST) {
  if (k < 1) throw std::domain_error("fu_f: k must be >= 1");
  return detail::family_get('f', k).convert(c);
}

// Coefficients of 1 / (1 + t x + s x^2) = sum_k p_k x^k.
inline GradedPoly fu_p(int k, Coords c = Coords::ST) {
  if (k < 0) throw std::domain_error("fu_p: k must be >= 0");
  return detail::family_get('p', k).convert(c);
}

// Coefficients of -1 / (1 + t x + s x^2)^2 = sum_k q_k x^k.
inline GradedPoly fu_q(int k, Coords c = Coords::ST) {
  if (k < 0) throw std::domain_error("fu_q: k must be >= 0");
  return detail::family_get('q', k).convert(c);
}

/*
 * Closed forms, used as independent cross-checks of the recurrences.
 *
 * In ST coordinates
 *   f_k = (-1)^{k+1} sum_q (-1)^q / (k - 2q) C(k-q-1, q) s^q t^{k-2q},
 * where for even k the q = k/2 term degenerates to the limit value
 * (-1)^{k+1+k/2} (2/k) s^{k/2}.
 */
inline GradedPoly fu_f_closed(int k, Coords c = Coords::ST) {
  if (k < 1) throw std::domain_error("fu_f_closed: k must be >= 1");
  if (c == Coords::TU) {
    // f_k = 1/(k (-2)^{k-1}) sum_q (-1)^q C(k, 2q) t^{k-2q} u^q
    GradedPoly r(Coords::TU);
    Rational lead = Rational(1, k) / Rational(BigInt::pow(BigInt(-2), static_cast<unsigned>(k - 1)), BigInt(1));
    for (int q = 0; 2 * q <= k; ++q) {
      Rational coeff = lead * Rational(binomial(k, 2 * q), BigInt(1));
      if (q % 2 == 1) coeff = -coeff;
      r += GradedPoly::monomial(Coords::TU, q, k - 2 * q, PiScalar(coeff));
    }
    return r;
  }
  GradedPoly r(Coords::ST);
  int sign_k = (k % 2 == 0) ? -1 : 1; // (-1)^{k+1}
  for (int q = 0; 2 * q <= k; ++q) {
    Rational coeff;
    if (2 * q == k)
      coeff = Rational(2 * ((q % 2 == 0) ? 1 : -1), k);
    else
      coeff = Rational(((q % 2 == 0) ? 1 : -1) * 1, k - 2 * q) * Rational(binomial(k - q - 1, q), BigInt(1));
    coeff = Rational(sign_k) * coeff;
    if (!coeff.is_zero()) r += GradedPoly::monomial(Coords::ST, q, k - 2 * q, PiScalar(coeff));
  }
  return r;
}

inline GradedPoly fu_p_closed(int k, Coords c = Coords::ST) {
  if (k < 0) throw std::domain_error("fu_p_closed: k must be >= 0");
  GradedPoly r(c);
  for (int q = 0; 2 * q <= k; ++q) {
    Rational coeff;
    if (c == Coords::ST) {
      // p_k = (-1)^k sum_q (-1)^q C(k-q, q) s^q t^{k-2q}
      coeff = Rational(binomial(k - q, q), BigInt(1));
    } else {
      // p_k = (-1)^k / 2^k sum_q (-1)^q C(k+1, 2q+1) t^{k-2q} u^q
      coeff = Rational(binomial(k + 1, 2 * q + 1), BigInt::pow(BigInt(2), static_cast<unsigned>(k)));
    }
    if ((k + q) % 2 == 1) coeff = -coeff;
    if (!coeff.is_zero()) r += GradedPoly::monomial(c, q, k - 2 * q, PiScalar(coeff));
  }
  return r;
}

inline GradedPoly fu_q_closed(int k, Coords c = Coords::ST) {
  if (k < 0) throw std::domain_error("fu_q_closed: k must be >= 0");
  GradedPoly r(c);
  for (int q = 0; 2 * q <= k; ++q) {
    Rational coeff;
    if (c == Coords::ST) {
      // q_k = (-1)^{k+1} sum_q (-1)^q (q+1) C(k+1-q, q+1) s^q t^{k-2q}
      coeff = Rational(q + 1) * Rational(binomial(k + 1 - q, q + 1), BigInt(1));
    } else {
      // q_k = (-1)^{k+1} / 2^k sum_q (-1)^q (q+1) C(k+3, 2q+3) t^{k-2q} u^q
      coeff = Rational(q + 1) *
              Rational(binomial(k + 3, 2 * q + 3), BigInt::pow(BigInt(2), static_cast<unsigned>(k)));
    }
    if ((k + q) % 2 == 0) coeff = -coeff;
    if (!coeff.is_zero()) r += GradedPoly::monomial(c, q, k - 2 * q, PiScalar(coeff));
  }
  return r;
}

} // namespace unival
