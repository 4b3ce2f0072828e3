#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unival/graded_poly.hpp"
#include "unival/linalg.hpp"

namespace unival {

/*
 * The algebra of U(n)-invariant translation-invariant valuations on C^n,
 * expressed over the hermitian intrinsic volume basis mu_{k,q} with
 * 0 <= k <= 2n and max(0, k-n) <= q <= floor(k/2).
 *
 * Degree-1 and degree-2 generators (Alesker product):
 *   t = (2/pi) mu_{1,0},  s = (1/pi)(mu_{2,1} + mu_{2,0}/2),  u = 4s - t^2.
 *
 * Multiplication by s and convolution by t-hat act through fixed
 * structure constants; every other operation is built from those two:
 * mult_t by Fourier conjugation, polynomials by iteration, the full
 * product by lifting through the polynomial presentation.
 *
 * Structure-constant targets with invalid indices are dropped.
 */
struct MuIndex {
  int k = 0;
  int q = 0;
  auto operator<=>(const MuIndex&) const = default;
};

inline bool mu_valid(int n, int k, int q) {
  return k >= 0 && k <= 2 * n && q >= std::max(0, k - n) && 2 * q <= k;
}

inline void require_mu_valid(int n, int k, int q) {
  if (!mu_valid(n, k, q))
    throw std::domain_error("mu[" + std::to_string(k) + "," + std::to_string(q) +
                            "] invalid for n=" + std::to_string(n) +
                            ": requires 0 <= k <= 2n and max(0, k-n) <= q <= floor(k/2)");
}

inline int dim_val(int n, int k) {
  if (k < 0 || k > 2 * n)
    throw std::domain_error("dim_val: k out of range 0..2n");
  return 1 + std::min(k / 2, (2 * n - k) / 2);
}

inline std::vector<MuIndex> mu_basis_degree(int n, int k) {
  std::vector<MuIndex> basis;
  for (int q = std::max(0, k - n); 2 * q <= k; ++q) basis.push_back({k, q});
  return basis;
}

inline std::vector<MuIndex> mu_basis(int n) {
  std::vector<MuIndex> basis;
  for (int k = 0; k <= 2 * n; ++k)
    for (const auto& idx : mu_basis_degree(n, k)) basis.push_back(idx);
  return basis;
}

class Valuation {
public:
  explicit Valuation(int n) : n_(n) {
    if (n < 1) throw std::domain_error("Valuation: n must be >= 1");
  }

  // chi = mu_{0,0}, the Euler characteristic and Alesker-product unit
  static Valuation unit(int n) { return basis(n, 0, 0); }

  // vol = mu_{2n,n}, the Lebesgue measure and convolution unit
  static Valuation volume(int n) { return basis(n, 2 * n, n); }

  static Valuation basis(int n, int k, int q) {
    require_mu_valid(n, k, q);
    Valuation v(n);
    v.coeffs_[{k, q}] = PiScalar(1);
    return v;
  }

  int n() const { return n_; }
  const std::map<MuIndex, PiScalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  PiScalar coeff(int k, int q) const {
    auto it = coeffs_.find({k, q});
    return it == coeffs_.end() ? PiScalar() : it->second;
  }

  void add_term(MuIndex idx, const PiScalar& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) {
      coeffs_.emplace(idx, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }

  Valuation operator-() const {
    Valuation r(n_);
    for (const auto& [idx, c] : coeffs_) r.coeffs_.emplace(idx, -c);
    return r;
  }

  Valuation operator+(const Valuation& o) const {
    check_same_n(o);
    Valuation r = *this;
    for (const auto& [idx, c] : o.coeffs_) r.add_term(idx, c);
    return r;
  }

  Valuation operator-(const Valuation& o) const { return *this + (-o); }

  Valuation operator*(const PiScalar& c) const {
    Valuation r(n_);
    for (const auto& [idx, t] : coeffs_) {
      PiScalar v = t * c;
      if (!v.is_zero()) r.coeffs_.emplace(idx, std::move(v));
    }
    return r;
  }

  Valuation& operator+=(const Valuation& o) { return *this = *this + o; }
  Valuation& operator-=(const Valuation& o) { return *this = *this - o; }

  bool operator==(const Valuation& o) const {
    return n_ == o.n_ && coeffs_ == o.coeffs_;
  }

  Valuation component(int k) const {
    Valuation r(n_);
    for (const auto& [idx, c] : coeffs_)
      if (idx.k == k) r.coeffs_.emplace(idx, c);
    return r;
  }

  std::vector<int> degrees() const {
    std::vector<int> ds;
    for (const auto& [idx, c] : coeffs_)
      if (ds.empty() || ds.back() != idx.k) ds.push_back(idx.k);
    return ds;
  }

  bool is_homogeneous(int k) const {
    for (const auto& [idx, c] : coeffs_)
      if (idx.k != k) return false;
    return true;
  }

  // coordinates over mu_basis_degree(n, k)
  PiVec coords_degree(int k) const {
    auto basis = mu_basis_degree(n_, k);
    PiVec v(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) v[i] = coeff(basis[i].k, basis[i].q);
    return v;
  }

  PiVec coords_full() const {
    auto basis = mu_basis(n_);
    PiVec v(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) v[i] = coeff(basis[i].k, basis[i].q);
    return v;
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : coeffs_) {
      std::string name = "mu[" + std::to_string(idx.k) + "," + std::to_string(idx.q) + "]";
      append_term(out, first, c, name);
    }
    return out;
  }

  // shared term renderer for basis expansions
  static void append_term(std::string& out, bool& first, const PiScalar& c,
                          const std::string& name) {
    bool neg = false;
    std::string cs;
    if (c.is_monomial()) {
      PiScalar cc = c;
      if (cc.terms().begin()->second.sign() < 0) {
        neg = true;
        cc = -cc;
      }
      if (!cc.is_one()) cs = cc.to_string() + " * ";
    } else {
      cs = "(" + c.to_string() + ") * ";
    }
    if (first) {
      out += (neg ? "-" : "") + cs + name;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + cs + name;
    }
  }

private:
  int n_;
  std::map<MuIndex, PiScalar> coeffs_;

  void check_same_n(const Valuation& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Valuation: mixed ambient dimensions");
  }
};

inline Valuation operator*(const PiScalar& c, const Valuation& v) { return v * c; }

// Fourier transform: mu_{k,q} -> mu_{2n-k, n-k+q}; a basis involution.
inline Valuation fourier(const Valuation& v) {
  const int n = v.n();
  Valuation r(n);
  for (const auto& [idx, c] : v.coeffs())
    r.add_term({2 * n - idx.k, n - idx.k + idx.q}, c);
  return r;
}

// Alesker multiplication by s:
//   s . mu_{k,q} = (k-2q+2)(k-2q+1) / (2 pi (k+2))   mu_{k+2,q}
//               + 2(q+1)(k-q+1)    / (pi (k+2))      mu_{k+2,q+1}
inline Valuation mult_s(const Valuation& v) {
  const int n = v.n();
  Valuation r(n);
  for (const auto& [idx, c] : v.coeffs()) {
    const int k = idx.k, q = idx.q;
    if (mu_valid(n, k + 2, q))
      r.add_term({k + 2, q},
                 c * PiScalar::pi_power(-1, Rational((k - 2 * q + 2) * (k - 2 * q + 1),
                                                     2 * (k + 2))));
    if (mu_valid(n, k + 2, q + 1))
      r.add_term({k + 2, q + 1},
                 c * PiScalar::pi_power(-1, Rational(2 * (q + 1) * (k - q + 1), k + 2)));
  }
  return r;
}

// Convolution by t-hat = F(t):
//   t-hat * mu_{k,q} = omega_{2n-k+1} / (pi omega_{2n-k}) *
//                      ( (k-2q+1) mu_{k-1,q-1} + 2(n-k+q+1) mu_{k-1,q} )
inline Valuation hat_t_mult(const Valuation& v) {
  const int n = v.n();
  Valuation r(n);
  for (const auto& [idx, c] : v.coeffs()) {
    const int k = idx.k, q = idx.q;
    if (k == 0) continue;
    PiScalar w = omega(2 * n - k + 1).div_monomial(PiScalar::pi() * omega(2 * n - k));
    if (mu_valid(n, k - 1, q - 1))
      r.add_term({k - 1, q - 1}, c * w * PiScalar(k - 2 * q + 1));
    if (mu_valid(n, k - 1, q))
      r.add_term({k - 1, q}, c * w * PiScalar(2 * (n - k + q + 1)));
  }
  return r;
}

// Alesker multiplication by t, via F(phi . psi) = F(phi) * F(psi).
inline Valuation mult_t(const Valuation& v) {
  return fourier(hat_t_mult(fourier(v)));
}

namespace detail {

// Memoized images of the monomials s^a t^b under the presentation map
// (iterated mult_s / mult_t applied to chi).
inline Valuation monomial_image(int n, int a, int b) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, Valuation> memo;
  std::lock_guard<std::mutex> lock(mu);
  std::vector<std::tuple<int, int, int>> todo{{n, a, b}};
  // resolve dependencies iteratively so the memo is filled bottom-up
  while (!todo.empty()) {
    auto [nn, aa, bb] = todo.back();
    if (memo.count({nn, aa, bb})) {
      todo.pop_back();
      continue;
    }
    if (aa == 0 && bb == 0) {
      memo.emplace(std::make_tuple(nn, 0, 0), Valuation::unit(nn));
      todo.pop_back();
      continue;
    }
    std::tuple<int, int, int> dep = aa > 0 ? std::make_tuple(nn, aa - 1, bb)
                                           : std::make_tuple(nn, aa, bb - 1);
    auto it = memo.find(dep);
    if (it == memo.end()) {
      todo.push_back(dep);
      continue;
    }
    memo.emplace(std::make_tuple(nn, aa, bb), aa > 0 ? mult_s(it->second) : mult_t(it->second));
    todo.pop_back();
  }
  return memo.at({n, a, b});
}

} // namespace detail

// The presentation map R[s,t] -> Val^{U(n)}: an algebra homomorphism
// sending s, t to the generator valuations; its kernel is the ideal
// (f_{n+1}, f_{n+2}).
inline Valuation from_poly(int n, const GradedPoly& p) {
  GradedPoly st = p.convert(Coords::ST);
  Valuation r(n);
  for (const auto& [e, c] : st.terms()) {
    Valuation img = detail::monomial_image(n, e.a, e.b);
    r += img * c;
  }
  return r;
}

/*
 * Canonical polynomial representative of a valuation: per degree d the
 * monomials s^a t^(d-2a) are ordered by increasing a and the linear
 * system is solved by reduced row echelon form with free variables set
 * to zero. This is a deterministic section of the (non-injective)
 * presentation map: from_poly(to_poly(v)) == v always.
 */
inline GradedPoly to_poly(const Valuation& v) {
  const int n = v.n();
  GradedPoly result(Coords::ST);
  for (int d : v.degrees()) {
    std::vector<PiVec> cols;
    for (int a = 0; 2 * a <= d; ++a)
      cols.push_back(detail::monomial_image(n, a, d - 2 * a).coords_degree(d));
    PiMat m = mat_from_columns(cols);
    PiVec x;
    if (!solve(m, v.coords_degree(d), x))
      throw std::logic_error("to_poly: component outside the image of from_poly");
    for (std::size_t a = 0; a < x.size(); ++a)
      if (!x[a].is_zero())
        result += GradedPoly::monomial(Coords::ST, static_cast<int>(a),
                                       d - 2 * static_cast<int>(a), x[a]);
  }
  return result;
}

// Alesker product, lifted through the polynomial presentation.
inline Valuation val_product(const Valuation& a, const Valuation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("val_product: mixed ambient dimensions");
  return from_poly(a.n(), to_poly(a) * to_poly(b));
}

// Bernig-Fu convolution, via F(phi . psi) = F(phi) * F(psi).
inline Valuation val_convolution(const Valuation& a, const Valuation& b) {
  return fourier(val_product(fourier(a), fourier(b)));
}

// Evaluation of a top-degree valuation on the unit ball, through the
// monomial values s^i t^(2n-2i) (ball) = C(2n-2i, n-i).
inline PiScalar eval_ball_top(const Valuation& v) {
  const int n = v.n();
  if (!v.is_homogeneous(2 * n))
    throw std::domain_error("eval_ball_top: valuation must be homogeneous of degree 2n");
  GradedPoly p = to_poly(v);
  PiScalar total;
  for (const auto& [e, c] : p.terms())
    total += c * PiScalar(Rational(binomial(2 * n - 2 * e.a, n - e.a), BigInt(1)));
  return total;
}

} // namespace unival
