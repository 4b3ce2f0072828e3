#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "unival/area_measure.hpp"

namespace unival {

/*
 * The free graded-commutative algebra on the invariant generators of the
 * sphere bundle of C^n:
 *
 *   odd:  alpha, beta, gamma           (1-forms)
 *   even: theta_0, theta_1, theta_2, theta_s   (2-forms)
 *
 * with the fixed total order alpha < beta < gamma < theta_0 < theta_1 <
 * theta_2 < theta_s. Freeness is sound here: the basis forms beta_{k,q},
 * gamma_{k,q} and everything the Reeb/radial tables produce from them
 * are distinct monomials of this algebra, so coefficient extraction
 * never needs the sphere-bundle relations.
 *
 * Generator tables (derived from the coordinate expressions of the
 * generators, the Reeb field T and the radial field R = grad r):
 *
 *   L_T:  alpha, gamma, theta_0, theta_s -> 0,  beta -> gamma,
 *         theta_1 -> 2 theta_0,  theta_2 -> theta_1
 *   i_R (at r = 1):  beta, gamma, theta_2 -> 0,  theta_0 -> gamma,
 *         theta_1 -> +beta
 *
 * The sign of i_R theta_1 follows from theta_1 = sum dx_i deta_i - dy_i dxi_i
 * and R = sum xi_i d/dxi_i + eta_i d/deta_i at r = 1; it is exactly what
 * makes i_R annihilate the angular combinations.
 */
enum class FormGen { Alpha, Beta, Gamma, Theta0, Theta1, Theta2, ThetaS };

constexpr int kFormGenCount = 7;

inline bool form_gen_odd(int g) { return g < 3; }

inline std::string form_gen_name(int g) {
  static const char* names[kFormGenCount] = {"alpha", "beta",   "gamma",  "theta0",
                                             "theta1", "theta2", "thetas"};
  return names[g];
}

struct FormMonomial {
  std::array<int, kFormGenCount> exp{};

  auto operator<=>(const FormMonomial&) const = default;

  int degree() const {
    int d = 0;
    for (int g = 0; g < kFormGenCount; ++g) d += exp[g] * (form_gen_odd(g) ? 1 : 2);
    return d;
  }

  std::string to_string() const {
    std::string out;
    for (int g = 0; g < kFormGenCount; ++g) {
      for (int i = 0; i < exp[g]; ++i) {
        if (!out.empty()) out += "^";
        out += form_gen_name(g);
      }
    }
    return out.empty() ? "1" : out;
  }
};

class InvariantForm {
public:
  InvariantForm() = default;
  InvariantForm(PiScalar c) { add_term(FormMonomial{}, std::move(c)); }

  static InvariantForm generator(FormGen g) {
    FormMonomial m;
    m.exp[static_cast<int>(g)] = 1;
    InvariantForm f;
    f.add_term(m, PiScalar(1));
    return f;
  }

  const std::map<FormMonomial, PiScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PiScalar coeff(const FormMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? PiScalar() : it->second;
  }

  void add_term(const FormMonomial& m, const PiScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  InvariantForm operator-() const {
    InvariantForm r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  InvariantForm operator+(const InvariantForm& o) const {
    InvariantForm r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  InvariantForm operator-(const InvariantForm& o) const { return *this + (-o); }

  InvariantForm& operator+=(const InvariantForm& o) { return *this = *this + o; }
  InvariantForm& operator-=(const InvariantForm& o) { return *this = *this - o; }

  InvariantForm operator*(const PiScalar& c) const {
    InvariantForm r;
    for (const auto& [m, t] : terms_) {
      PiScalar v = t * c;
      if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
    }
    return r;
  }

  bool operator==(const InvariantForm& o) const { return terms_ == o.terms_; }

  // graded-commutative wedge; zero when an odd generator repeats
  friend InvariantForm wedge(const InvariantForm& a, const InvariantForm& b) {
    InvariantForm r;
    for (const auto& [m1, c1] : a.terms_)
      for (const auto& [m2, c2] : b.terms_) {
        // repeated odd generator kills the product
        bool dead = false;
        for (int g = 0; g < 3; ++g) dead = dead || (m1.exp[g] + m2.exp[g] > 1);
        if (dead) continue;
        // sign: odd generators of m2 crossing strictly larger odds of m1
        int crossings = 0;
        for (int g2 = 0; g2 < 3; ++g2) {
          if (m2.exp[g2] == 0) continue;
          for (int g1 = g2 + 1; g1 < 3; ++g1) crossings += m1.exp[g1];
        }
        FormMonomial m;
        for (int g = 0; g < kFormGenCount; ++g) m.exp[g] = m1.exp[g] + m2.exp[g];
        r.add_term(m, crossings % 2 == 0 ? c1 * c2 : -(c1 * c2));
      }
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) Valuation::append_term(out, first, c, m.to_string());
    return out;
  }

private:
  std::map<FormMonomial, PiScalar> terms_;
};

inline InvariantForm operator*(const PiScalar& c, const InvariantForm& f) { return f * c; }

namespace detail {

// single-generator monomial
inline FormMonomial singleton(int g) {
  FormMonomial m;
  m.exp[g] = 1;
  return m;
}

// expand a monomial into the ordered list of its single-generator factors
inline std::vector<int> factor_list(const FormMonomial& m) {
  std::vector<int> fs;
  for (int g = 0; g < kFormGenCount; ++g)
    for (int i = 0; i < m.exp[g]; ++i) fs.push_back(g);
  return fs;
}

// wedge an ordered factor list back into a (monomial, sign) pair; the
// factors need not be sorted
inline InvariantForm wedge_factors(const std::vector<int>& fs, const PiScalar& c) {
  InvariantForm r(c);
  for (int g : fs) r = wedge(r, InvariantForm::generator(static_cast<FormGen>(g)));
  return r;
}

} // namespace detail

// Lie derivative along the Reeb field: an even derivation determined by
// the generator table above.
inline InvariantForm lie_reeb(const InvariantForm& f) {
  InvariantForm r;
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> fs = detail::factor_list(m);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      int target = -1;
      Rational factor(1);
      switch (static_cast<FormGen>(fs[i])) {
        case FormGen::Beta: target = static_cast<int>(FormGen::Gamma); break;
        case FormGen::Theta1:
          target = static_cast<int>(FormGen::Theta0);
          factor = Rational(2);
          break;
        case FormGen::Theta2: target = static_cast<int>(FormGen::Theta1); break;
        default: break; // alpha, gamma, theta_0, theta_s are closed under L_T
      }
      if (target < 0) continue;
      std::vector<int> replaced = fs;
      replaced[i] = target;
      r += detail::wedge_factors(replaced, c * PiScalar(factor));
    }
  }
  return r;
}

// Contraction with the radial field at r = 1: an odd antiderivation.
// The rules for alpha and theta_s are not part of the table, so forms
// containing them are rejected.
inline InvariantForm contract_radial(const InvariantForm& f) {
  InvariantForm r;
  for (const auto& [m, c] : f.terms()) {
    if (m.exp[static_cast<int>(FormGen::Alpha)] > 0 ||
        m.exp[static_cast<int>(FormGen::ThetaS)] > 0)
      throw std::domain_error("contract_radial: alpha and theta_s are outside the table");
    std::vector<int> fs = detail::factor_list(m);
    int prefix_degree = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      int g = fs[i];
      int target = -1;
      Rational factor(1);
      if (g == static_cast<int>(FormGen::Theta0)) {
        target = static_cast<int>(FormGen::Gamma);
      } else if (g == static_cast<int>(FormGen::Theta1)) {
        target = static_cast<int>(FormGen::Beta);
      }
      if (target >= 0) {
        if (prefix_degree % 2 == 1) factor = -factor;
        std::vector<int> replaced = fs;
        replaced[i] = target;
        r += detail::wedge_factors(replaced, c * PiScalar(factor));
      }
      prefix_degree += form_gen_odd(g) ? 1 : 2;
    }
  }
  return r;
}

// beta_{k,q} = c_{n,k,q} beta theta_0^{n-k+q} theta_1^{k-2q-1} theta_2^q
// gamma_{k,q} = (c_{n,k,q}/2) gamma theta_0^{n-k+q-1} theta_1^{k-2q} theta_2^q
// with c_{n,k,q} = 1 / (q! (n-k+q)! (k-2q)! omega_{2n-k}).
inline PiScalar form_normalization(int n, int k, int q) {
  Rational c(BigInt(1), factorial(q) * factorial(n - k + q) * factorial(k - 2 * q));
  return PiScalar(c).div_monomial(omega(2 * n - k));
}

inline InvariantForm area_index_form(int n, const AreaIndex& idx) {
  require_area_valid(n, idx);
  const int k = idx.k, q = idx.q;
  std::vector<int> fs;
  auto push = [&](FormGen g, int count) {
    for (int i = 0; i < count; ++i) fs.push_back(static_cast<int>(g));
  };
  PiScalar c = form_normalization(n, k, q);
  if (idx.kind == AreaKind::B) {
    push(FormGen::Beta, 1);
    push(FormGen::Theta0, n - k + q);
    push(FormGen::Theta1, k - 2 * q - 1);
    push(FormGen::Theta2, q);
  } else {
    c *= PiScalar(Rational(1, 2));
    push(FormGen::Gamma, 1);
    push(FormGen::Theta0, n - k + q - 1);
    push(FormGen::Theta1, k - 2 * q);
    push(FormGen::Theta2, q);
  }
  return detail::wedge_factors(fs, c);
}

inline InvariantForm beta_form(int n, int k, int q) {
  return area_index_form(n, {AreaKind::B, k, q});
}

inline InvariantForm gamma_form(int n, int k, int q) {
  return area_index_form(n, {AreaKind::Gamma, k, q});
}

// the invariant form representing Delta_{k,q}; contract_radial kills it
inline InvariantForm delta_combination_form(int n, int k, int q) {
  require_delta_valid(n, {DeltaKind::Delta, k, q});
  bool has_b = area_valid(n, {AreaKind::B, k, q});
  bool has_g = area_valid(n, {AreaKind::Gamma, k, q});
  if (has_b && has_g)
    return beta_form(n, k, q) * PiScalar(Rational(k - 2 * q, 2 * n - k)) +
           gamma_form(n, k, q) * PiScalar(Rational(2 * (n - k + q), 2 * n - k));
  return has_g ? gamma_form(n, k, q) : beta_form(n, k, q);
}

/*
 * First-principles re-derivation of the t-hat structure table: since
 * t-hat = (2/pi) mu_{2n-1} and convolution with 2 mu_{2n-1} acts on
 * representing forms as L_T, the table entry (from -> to) is the
 * coefficient of the target basis form in (1/pi) L_T(source form).
 * A nonzero expansion residual signals a convention bug and throws.
 */
inline StructureTable derive_reeb_table(int n) {
  StructureTable table;
  table.n = n;
  table.generator = "t_hat";
  for (const auto& from : area_basis(n)) {
    InvariantForm lt = lie_reeb(area_index_form(n, from)) * PiScalar::pi_power(-1);
    if (from.k == 0 && !lt.is_zero())
      throw std::logic_error("derive_reeb_table: degree floor violated");
    if (from.k == 0) continue;
    InvariantForm residual = lt;
    for (const auto& to : area_basis_degree(n, from.k - 1)) {
      InvariantForm target = area_index_form(n, to);
      if (target.terms().size() != 1)
        throw std::logic_error("derive_reeb_table: target form is not a monomial");
      const auto& [mono, scale] = *target.terms().begin();
      PiScalar num = lt.coeff(mono);
      if (num.is_zero()) continue;
      PiScalar entry = num.div_monomial(scale);
      table.entries.push_back({from, to, entry});
      residual -= target * entry;
    }
    if (!residual.is_zero())
      throw std::logic_error("derive_reeb_table: nonzero expansion residual at " +
                             from.to_string());
  }
  std::sort(table.entries.begin(), table.entries.end());
  return table;
}

} // namespace unival
