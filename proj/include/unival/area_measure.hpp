#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "unival/valuation.hpp"

namespace unival {

/*
 * The module Area^{U(n)} of U(n)-invariant smooth area measures on C^n,
 * over the basis
 *
 *   B_{k,q}     (theta exponents n-k+q, k-2q-1, q  on theta_0,1,2)
 *   Gamma_{k,q} (theta exponents n-k+q-1, k-2q, q)
 *
 * for 0 <= k <= 2n-1. Val^{U(n)} acts by convolution; the generators
 * t-hat and s-hat act through fixed structure constants and a general
 * valuation acts through its canonical polynomial representative. As in
 * the valuation algebra, structure-constant targets with invalid
 * indices are dropped.
 *
 * Derived bases: Delta_{k,q} = (k-2q)/(2n-k) B_{k,q} + 2(n-k+q)/(2n-k) Gamma_{k,q}
 * (the angular measures) and N_{k,q} = Delta_{k,q} - B_{k,q} (the kernel
 * of glob), degenerating to Delta_{2q,q} = Gamma_{2q,q} and
 * Delta_{k,k-n} = B_{k,k-n} where only one of B/Gamma exists.
 */
enum class AreaKind { B, Gamma };

inline std::string to_string(AreaKind k) { return k == AreaKind::B ? "B" : "Gamma"; }

struct AreaIndex {
  AreaKind kind = AreaKind::B;
  int k = 0;
  int q = 0;
  auto operator<=>(const AreaIndex&) const = default;

  std::string to_string() const {
    return unival::to_string(kind) + "[" + std::to_string(k) + "," + std::to_string(q) + "]";
  }
};

inline bool area_valid(int n, const AreaIndex& idx) {
  if (idx.k < 0 || idx.k > 2 * n - 1 || idx.q < 0) return false;
  if (idx.kind == AreaKind::B)
    return n - idx.k + idx.q >= 0 && idx.k - 2 * idx.q - 1 >= 0;
  return n - idx.k + idx.q - 1 >= 0 && idx.k - 2 * idx.q >= 0;
}

inline void require_area_valid(int n, const AreaIndex& idx) {
  if (area_valid(n, idx)) return;
  std::string hint =
      idx.kind == AreaKind::B
          ? "requires max(0, k-n) <= q <= (k-1)/2"
          : "requires max(0, k-n+1) <= q <= floor(k/2)";
  throw std::domain_error(idx.to_string() + " invalid for n=" + std::to_string(n) + ": " + hint +
                          " and 0 <= k <= 2n-1");
}

inline std::vector<AreaIndex> area_basis_degree(int n, int k) {
  std::vector<AreaIndex> basis;
  for (AreaKind kind : {AreaKind::B, AreaKind::Gamma})
    for (int q = 0; 2 * q <= k; ++q)
      if (area_valid(n, {kind, k, q})) basis.push_back({kind, k, q});
  return basis;
}

inline std::vector<AreaIndex> area_basis(int n) {
  std::vector<AreaIndex> basis;
  for (AreaKind kind : {AreaKind::B, AreaKind::Gamma})
    for (int k = 0; k <= 2 * n - 1; ++k)
      for (int q = 0; 2 * q <= k; ++q)
        if (area_valid(n, {kind, k, q})) basis.push_back({kind, k, q});
  return basis;
}

inline int dim_area(int n, int k) {
  if (k < 0 || k > 2 * n - 1)
    throw std::domain_error("dim_area: k out of range 0..2n-1");
  return static_cast<int>(area_basis_degree(n, k).size());
}

class AreaMeasure {
public:
  explicit AreaMeasure(int n) : n_(n) {
    if (n < 1) throw std::domain_error("AreaMeasure: n must be >= 1");
  }

  static AreaMeasure basis(int n, AreaKind kind, int k, int q) {
    AreaIndex idx{kind, k, q};
    require_area_valid(n, idx);
    AreaMeasure m(n);
    m.coeffs_[idx] = PiScalar(1);
    return m;
  }

  // B_{2n-1,n-1}, the generator measure behind the b-map; twice this is
  // the (2n-1)-st classical area measure, the first variation of volume.
  static AreaMeasure b_generator(int n) { return basis(n, AreaKind::B, 2 * n - 1, n - 1); }

  // Gamma_{2n-2,n-1}, the generator measure behind the g-map.
  static AreaMeasure g_generator(int n) { return basis(n, AreaKind::Gamma, 2 * n - 2, n - 1); }

  int n() const { return n_; }
  const std::map<AreaIndex, PiScalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  PiScalar coeff(const AreaIndex& idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? PiScalar() : it->second;
  }

  void add_term(const AreaIndex& idx, const PiScalar& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) {
      coeffs_.emplace(idx, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }

  AreaMeasure operator-() const {
    AreaMeasure r(n_);
    for (const auto& [idx, c] : coeffs_) r.coeffs_.emplace(idx, -c);
    return r;
  }

  AreaMeasure operator+(const AreaMeasure& o) const {
    check_same_n(o);
    AreaMeasure r = *this;
    for (const auto& [idx, c] : o.coeffs_) r.add_term(idx, c);
    return r;
  }

  AreaMeasure operator-(const AreaMeasure& o) const { return *this + (-o); }

  AreaMeasure operator*(const PiScalar& c) const {
    AreaMeasure r(n_);
    for (const auto& [idx, t] : coeffs_) {
      PiScalar v = t * c;
      if (!v.is_zero()) r.coeffs_.emplace(idx, std::move(v));
    }
    return r;
  }

  AreaMeasure& operator+=(const AreaMeasure& o) { return *this = *this + o; }
  AreaMeasure& operator-=(const AreaMeasure& o) { return *this = *this - o; }

  bool operator==(const AreaMeasure& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }

  AreaMeasure component(int k) const {
    AreaMeasure r(n_);
    for (const auto& [idx, c] : coeffs_)
      if (idx.k == k) r.coeffs_.emplace(idx, c);
    return r;
  }

  std::vector<int> degrees() const {
    std::vector<int> ds;
    for (const auto& [idx, c] : coeffs_) {
      bool seen = false;
      for (int d : ds) seen = seen || d == idx.k;
      if (!seen) ds.push_back(idx.k);
    }
    return ds;
  }

  bool is_homogeneous(int k) const {
    for (const auto& [idx, c] : coeffs_)
      if (idx.k != k) return false;
    return true;
  }

  PiVec coords_degree(int k) const {
    auto basis = area_basis_degree(n_, k);
    PiVec v(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) v[i] = coeff(basis[i]);
    return v;
  }

  PiVec coords_full() const {
    auto basis = area_basis(n_);
    PiVec v(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) v[i] = coeff(basis[i]);
    return v;
  }

  static AreaMeasure from_coords_degree(int n, int k, const PiVec& v) {
    auto basis = area_basis_degree(n, k);
    if (v.size() != basis.size())
      throw std::invalid_argument("from_coords_degree: size mismatch");
    AreaMeasure m(n);
    for (std::size_t i = 0; i < basis.size(); ++i) m.add_term(basis[i], v[i]);
    return m;
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : coeffs_)
      Valuation::append_term(out, first, c, idx.to_string());
    return out;
  }

private:
  int n_;
  std::map<AreaIndex, PiScalar> coeffs_;

  void check_same_n(const AreaMeasure& o) const {
    if (n_ != o.n_) throw std::invalid_argument("AreaMeasure: mixed ambient dimensions");
  }
};

inline AreaMeasure operator*(const PiScalar& c, const AreaMeasure& m) { return m * c; }

// Convolution by t-hat. On B_{k,q} the Gamma part leaks in; the span of
// the Gamma_{k,q} is a submodule.
inline AreaMeasure hat_t_act(const AreaMeasure& m) {
  const int n = m.n();
  AreaMeasure r(n);
  for (const auto& [idx, c] : m.coeffs()) {
    const int k = idx.k, q = idx.q;
    if (k == 0) continue;
    PiScalar w = omega(2 * n - k + 1).div_monomial(PiScalar::pi() * omega(2 * n - k));
    auto put = [&](AreaKind kind, int kk, int qq, Rational factor) {
      AreaIndex target{kind, kk, qq};
      if (!factor.is_zero() && area_valid(n, target)) r.add_term(target, c * w * PiScalar(factor));
    };
    if (idx.kind == AreaKind::B) {
      put(AreaKind::B, k - 1, q - 1, Rational(k - 2 * q + 1));
      put(AreaKind::B, k - 1, q,
          Rational(2 * (n - k + q + 1) * (k - 2 * q - 1), k - 2 * q));
      put(AreaKind::Gamma, k - 1, q, Rational(2 * (n - k + q + 1), k - 2 * q));
    } else {
      put(AreaKind::Gamma, k - 1, q - 1, Rational(k - 2 * q + 1));
      put(AreaKind::Gamma, k - 1, q, Rational(2 * (n - k + q + 1)));
    }
  }
  return r;
}

// Convolution by s-hat; preserves both the B-span and the Gamma-span.
inline AreaMeasure hat_s_act(const AreaMeasure& m) {
  const int n = m.n();
  AreaMeasure r(n);
  for (const auto& [idx, c] : m.coeffs()) {
    const int k = idx.k, q = idx.q;
    PiScalar pre = PiScalar::pi_power(-1, Rational(1, 2 * n - k + 2));
    auto put = [&](int kk, int qq, Rational factor) {
      AreaIndex target{idx.kind, kk, qq};
      if (!factor.is_zero() && area_valid(n, target))
        r.add_term(target, c * pre * PiScalar(factor));
    };
    put(k - 2, q - 2, Rational((k - 2 * q + 2) * (k - 2 * q + 1), 2));
    put(k - 2, q - 1, Rational(2 * (n - k + q + 1) * (n - q + 1)));
  }
  return r;
}

// sigma(s-hat, t-hat) applied to m, for sigma in ST coordinates.
inline AreaMeasure act_poly(const GradedPoly& sigma, const AreaMeasure& m) {
  GradedPoly st = sigma.convert(Coords::ST);
  AreaMeasure r(m.n());
  for (const auto& [e, c] : st.terms()) {
    AreaMeasure cur = m;
    for (int i = 0; i < e.b; ++i) cur = hat_t_act(cur);
    for (int i = 0; i < e.a; ++i) cur = hat_s_act(cur);
    r += cur * c;
  }
  return r;
}

// Module action of a valuation by convolution: phi acts as
// sigma(s-hat, t-hat) where sigma is the canonical polynomial
// representative of F(phi). Well-definedness rests on f_{n+1}, f_{n+2}
// annihilating every measure, which the verification suite checks.
inline AreaMeasure act(const Valuation& phi, const AreaMeasure& m) {
  if (phi.n() != m.n()) throw std::invalid_argument("act: mixed ambient dimensions");
  return act_poly(to_poly(fourier(phi)), m);
}

// Total-mass globalization: B_{k,q} and Gamma_{k,q} both map to mu_{k,q}.
inline Valuation glob(const AreaMeasure& m) {
  Valuation v(m.n());
  for (const auto& [idx, c] : m.coeffs()) v.add_term({idx.k, idx.q}, c);
  return v;
}

// First variation delta(phi) = phi * S_{2n-1} with S_{2n-1} = 2 B_{2n-1,n-1}.
inline AreaMeasure delta_map(const Valuation& phi) {
  return act(phi, AreaMeasure::b_generator(phi.n()) * PiScalar(2));
}

// b(phi) = F(phi) * B_{2n-1,n-1};  2 b(phi) = delta(F(phi)).
inline AreaMeasure frak_b(const Valuation& phi) {
  return act(fourier(phi), AreaMeasure::b_generator(phi.n()));
}

// g(phi) = F(phi) * Gamma_{2n-2,n-1}; its image is the Gamma-span.
inline AreaMeasure frak_g(const Valuation& phi) {
  return act(fourier(phi), AreaMeasure::g_generator(phi.n()));
}

/* ------------------------------------------------------------------ */
/* Delta / N basis                                                     */
/* ------------------------------------------------------------------ */

enum class DeltaKind { Delta, N };

struct DeltaIndex {
  DeltaKind kind = DeltaKind::Delta;
  int k = 0;
  int q = 0;
  auto operator<=>(const DeltaIndex&) const = default;

  std::string to_string() const {
    return std::string(kind == DeltaKind::Delta ? "Delta" : "N") + "[" + std::to_string(k) +
           "," + std::to_string(q) + "]";
  }
};

inline bool delta_valid(int n, const DeltaIndex& idx) {
  bool b = area_valid(n, {AreaKind::B, idx.k, idx.q});
  bool g = area_valid(n, {AreaKind::Gamma, idx.k, idx.q});
  return idx.kind == DeltaKind::Delta ? (b || g) : (b && g);
}

inline void require_delta_valid(int n, const DeltaIndex& idx) {
  if (!delta_valid(n, idx))
    throw std::domain_error(idx.to_string() + " invalid for n=" + std::to_string(n));
}

using DeltaExpansion = std::map<DeltaIndex, PiScalar>;

inline AreaMeasure delta_n_measure(int n, const DeltaIndex& idx) {
  require_delta_valid(n, idx);
  const int k = idx.k, q = idx.q;
  bool has_b = area_valid(n, {AreaKind::B, k, q});
  bool has_g = area_valid(n, {AreaKind::Gamma, k, q});
  AreaMeasure m(n);
  if (idx.kind == DeltaKind::Delta) {
    if (has_b && has_g) {
      m.add_term({AreaKind::B, k, q}, PiScalar(Rational(k - 2 * q, 2 * n - k)));
      m.add_term({AreaKind::Gamma, k, q}, PiScalar(Rational(2 * (n - k + q), 2 * n - k)));
    } else if (has_g) {
      m.add_term({AreaKind::Gamma, k, q}, PiScalar(1));
    } else {
      m.add_term({AreaKind::B, k, q}, PiScalar(1));
    }
  } else {
    Rational c(2 * (n - k + q), 2 * n - k);
    m.add_term({AreaKind::Gamma, k, q}, PiScalar(c));
    m.add_term({AreaKind::B, k, q}, PiScalar(-c));
  }
  return m;
}

// Exact change of basis into Delta/N coordinates; total on Area^{U(n)}.
inline DeltaExpansion to_delta_basis(const AreaMeasure& m) {
  const int n = m.n();
  DeltaExpansion out;
  auto put = [&](DeltaIndex idx, const PiScalar& c) {
    if (c.is_zero()) return;
    auto it = out.find(idx);
    if (it == out.end()) {
      out.emplace(idx, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  };
  for (const auto& [idx, c] : m.coeffs()) {
    const int k = idx.k, q = idx.q;
    bool has_b = area_valid(n, {AreaKind::B, k, q});
    bool has_g = area_valid(n, {AreaKind::Gamma, k, q});
    if (has_b && has_g) {
      if (idx.kind == AreaKind::B) {
        // B = Delta - N
        put({DeltaKind::Delta, k, q}, c);
        put({DeltaKind::N, k, q}, -c);
      } else {
        // Gamma = Delta + (k-2q) / (2(n-k+q)) N
        put({DeltaKind::Delta, k, q}, c);
        put({DeltaKind::N, k, q}, c * PiScalar(Rational(k - 2 * q, 2 * (n - k + q))));
      }
    } else {
      put({DeltaKind::Delta, k, q}, c);
    }
  }
  return out;
}

inline AreaMeasure from_delta_basis(int n, const DeltaExpansion& e) {
  AreaMeasure m(n);
  for (const auto& [idx, c] : e) m += delta_n_measure(n, idx) * c;
  return m;
}

inline std::vector<DeltaIndex> angular_basis(int n) {
  std::vector<DeltaIndex> basis;
  for (int k = 0; k <= 2 * n - 1; ++k)
    for (int q = 0; 2 * q <= k; ++q)
      if (delta_valid(n, {DeltaKind::Delta, k, q})) basis.push_back({DeltaKind::Delta, k, q});
  return basis;
}

// Membership in the span of the Delta_{k,q}: the N-part of the Delta/N
// expansion must vanish.
inline bool is_angular(const AreaMeasure& m) {
  for (const auto& [idx, c] : to_delta_basis(m))
    if (idx.kind == DeltaKind::N) return false;
  return true;
}

namespace detail {

// Columns spanning the degree-k slice of the image of the first
// variation map, in area_basis_degree coordinates.
inline std::vector<PiVec> delta_image_columns(int n, int k) {
  std::vector<PiVec> cols;
  if (k + 1 > 2 * n) return cols;
  for (const auto& mu : mu_basis_degree(n, k + 1))
    cols.push_back(delta_map(Valuation::basis(n, mu.k, mu.q)).coords_degree(k));
  return cols;
}

} // namespace detail

// Is m a first variation, i.e. in the image of delta_map? Exact linear
// solve per degree.
inline bool in_centroid_kernel(const AreaMeasure& m) {
  const int n = m.n();
  for (int k : m.degrees()) {
    if (!span_contains(detail::delta_image_columns(n, k), m.coords_degree(k))) return false;
  }
  return true;
}

/*
 * The unique-up-to-scale degree-k element of (angular subspace) cap
 * (image of delta): the hermitian incarnation of the k-th classical
 * area measure. Normalization is scale-free by construction, so the
 * leading Delta coefficient (largest q) is set to 1.
 */
inline AreaMeasure classical_delta(int n, int k) {
  if (k < 0 || k > 2 * n - 1) throw std::domain_error("classical_delta: k out of range");
  std::vector<PiVec> ang;
  for (const auto& idx : angular_basis(n))
    if (idx.k == k) ang.push_back(delta_n_measure(n, idx).coords_degree(k));
  std::vector<PiVec> img = detail::delta_image_columns(n, k);
  std::vector<PiVec> inter = span_intersection(ang, img);
  if (rank_of_columns(inter) != 1)
    throw std::runtime_error("classical_delta: intersection is not 1-dimensional at degree " +
                             std::to_string(k));
  PiMat rows;
  for (const auto& v : inter) rows.push_back(v);
  rref(rows);
  AreaMeasure m = AreaMeasure::from_coords_degree(n, k, rows.front());
  DeltaExpansion e = to_delta_basis(m);
  PiScalar lead;
  for (const auto& [idx, c] : e) {
    if (idx.kind == DeltaKind::N)
      throw std::runtime_error("classical_delta: intersection element is not angular");
    lead = c; // map order: largest q last
  }
  return m * PiScalar(1).div_monomial(lead);
}

/* ------------------------------------------------------------------ */
/* Angular subspace via the b/g parametrization                        */
/* ------------------------------------------------------------------ */

// A(p, q) = b([t d/dt + 1] p) + g(2t d/du [t d/dt + 2u d/du + 2] p + q)
// for p in R[t,u] and q in R[u]; the image is the angular subspace.
inline AreaMeasure a_operator(int n, const GradedPoly& p, const GradedPoly& q) {
  if (p.coords() != Coords::TU || q.coords() != Coords::TU)
    throw std::invalid_argument("a_operator: TU coordinates required");
  for (const auto& [e, c] : q.terms())
    if (e.b != 0) throw std::invalid_argument("a_operator: q must be a polynomial in u only");
  GradedPoly arg_b = apply_diff(DiffOp::TDt, p) + p;
  GradedPoly inner =
      apply_diff(DiffOp::TDt, p) + apply_diff(DiffOp::UDu, p) * PiScalar(2) + p * PiScalar(2);
  GradedPoly arg_g =
      GradedPoly::gen_t(Coords::TU) * apply_diff(DiffOp::Du, inner) * PiScalar(2) + q;
  return frak_b(from_poly(n, arg_b)) + frak_g(from_poly(n, arg_g));
}

// d/du [t d/dt + 2u d/du + 2] p == (1/2) dq/dt, the exact polynomial
// criterion for b(p) + g(q) to be angular in every dimension.
inline bool angularity_condition(const GradedPoly& p, const GradedPoly& q) {
  if (p.coords() != Coords::TU || q.coords() != Coords::TU)
    throw std::invalid_argument("angularity_condition: TU coordinates required");
  GradedPoly inner =
      apply_diff(DiffOp::TDt, p) + apply_diff(DiffOp::UDu, p) * PiScalar(2) + p * PiScalar(2);
  GradedPoly lhs = apply_diff(DiffOp::Du, inner);
  GradedPoly rhs = apply_diff(DiffOp::Dt, q) * PiScalar(Rational(1, 2));
  return lhs == rhs;
}

/* ------------------------------------------------------------------ */
/* Presentation (Val + Val)/I_n                                        */
/* ------------------------------------------------------------------ */

struct PresentationSlice {
  int k = 0;          // pair degree: first component in Val_k, second in Val_{k-1}
  int dim_pairs = 0;
  int dim_kernel = 0;
  int dim_ideal = 0;
  bool kernel_in_ideal = false;
  bool ideal_in_kernel = false;

  bool ok() const { return kernel_in_ideal && ideal_in_kernel; }
};

struct PresentationReport {
  int n = 0;
  std::vector<PresentationSlice> slices;

  bool ok() const {
    for (const auto& s : slices)
      if (!s.ok()) return false;
    return true;
  }

  std::string to_string() const {
    std::string out = "presentation check, n=" + std::to_string(n) + "\n";
    for (const auto& s : slices) {
      out += "  k=" + std::to_string(s.k) + " pairs=" + std::to_string(s.dim_pairs) +
             " ker=" + std::to_string(s.dim_kernel) + " ideal=" + std::to_string(s.dim_ideal) +
             (s.ok() ? "  equal" : "  MISMATCH") + "\n";
    }
    return out;
  }
};

/*
 * Degreewise comparison of ker h with the submodule I_n, where
 * h(p, q) = b(p) + g(q) on Val_k + Val_{k-1} and I_n is generated by
 * (p_n, -q_{n-1}) and (0, p_n). Both inclusions are established by
 * exact rank computations.
 */
inline PresentationReport presentation_check(int n) {
  PresentationReport report;
  report.n = n;
  const GradedPoly pn = fu_p(n);
  const GradedPoly qn1 = fu_q(n - 1);
  for (int k = 0; k <= 2 * n + 1; ++k) {
    PresentationSlice slice;
    slice.k = k;
    std::vector<MuIndex> first = k <= 2 * n ? mu_basis_degree(n, k) : std::vector<MuIndex>{};
    std::vector<MuIndex> second =
        (k >= 1 && k - 1 <= 2 * n) ? mu_basis_degree(n, k - 1) : std::vector<MuIndex>{};
    const int d1 = static_cast<int>(first.size());
    const int d2 = static_cast<int>(second.size());
    slice.dim_pairs = d1 + d2;
    if (slice.dim_pairs == 0) continue;
    const int target_degree = 2 * n - 1 - k;

    auto pair_coords = [&](const Valuation& a, const Valuation& b) {
      PiVec v;
      PiVec va = a.coords_degree(k <= 2 * n ? k : 0);
      PiVec vb = (k >= 1 && k - 1 <= 2 * n) ? b.coords_degree(k - 1) : PiVec{};
      if (d1 > 0) v.insert(v.end(), va.begin(), va.end());
      if (d2 > 0) v.insert(v.end(), vb.begin(), vb.end());
      return v;
    };

    // kernel of h on the pair space
    std::vector<PiVec> kernel_cols;
    if (target_degree < 0) {
      for (int i = 0; i < slice.dim_pairs; ++i) {
        PiVec v(slice.dim_pairs, PiScalar());
        v[i] = PiScalar(1);
        kernel_cols.push_back(std::move(v));
      }
    } else {
      std::vector<PiVec> image_cols;
      for (const auto& mu : first)
        image_cols.push_back(frak_b(Valuation::basis(n, mu.k, mu.q)).coords_degree(target_degree));
      for (const auto& mu : second)
        image_cols.push_back(frak_g(Valuation::basis(n, mu.k, mu.q)).coords_degree(target_degree));
      kernel_cols = kernel_basis(mat_from_columns(image_cols));
    }
    slice.dim_kernel = rank_of_columns(kernel_cols);

    // degree-k slice of I_n
    std::vector<PiVec> ideal_cols;
    if (k - n >= 0) {
      for (int a = 0; 2 * a <= k - n; ++a) {
        GradedPoly mono = GradedPoly::monomial(Coords::ST, a, k - n - 2 * a);
        ideal_cols.push_back(
            pair_coords(from_poly(n, mono * pn), -from_poly(n, mono * qn1)));
      }
    }
    if (k - n - 1 >= 0) {
      for (int a = 0; 2 * a <= k - n - 1; ++a) {
        GradedPoly mono = GradedPoly::monomial(Coords::ST, a, k - n - 1 - 2 * a);
        ideal_cols.push_back(pair_coords(Valuation(n), from_poly(n, mono * pn)));
      }
    }
    slice.dim_ideal = rank_of_columns(ideal_cols);
    slice.kernel_in_ideal = span_subset(kernel_cols, ideal_cols);
    slice.ideal_in_kernel = span_subset(ideal_cols, kernel_cols);
    report.slices.push_back(slice);
  }
  return report;
}

/* ------------------------------------------------------------------ */
/* Structure-constant tables                                           */
/* ------------------------------------------------------------------ */

struct TableEntry {
  AreaIndex from;
  AreaIndex to;
  PiScalar coeff;

  bool operator==(const TableEntry&) const = default;
  bool operator<(const TableEntry& o) const {
    if (from != o.from) return from < o.from;
    return to < o.to;
  }
};

struct StructureTable {
  int n = 0;
  std::string generator; // "t_hat" or "s_hat"
  std::vector<TableEntry> entries; // sorted by (from, to)

  bool operator==(const StructureTable&) const = default;
};

inline StructureTable module_structure_table(int n, char generator) {
  StructureTable table;
  table.n = n;
  table.generator = generator == 't' ? "t_hat" : "s_hat";
  for (const auto& from : area_basis(n)) {
    AreaMeasure unit = AreaMeasure::basis(n, from.kind, from.k, from.q);
    AreaMeasure image = generator == 't' ? hat_t_act(unit) : hat_s_act(unit);
    for (const auto& [to, c] : image.coeffs()) table.entries.push_back({from, to, c});
  }
  std::sort(table.entries.begin(), table.entries.end());
  return table;
}

} // namespace unival
