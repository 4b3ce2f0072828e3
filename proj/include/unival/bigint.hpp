#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace unival {

/*
 * Arbitrary-precision signed integer on 32-bit limbs (little-endian,
 * sign-magnitude). Schoolbook multiplication and Knuth division are
 * plenty here: every quantity in this project stays below a few
 * hundred decimal digits.
 *
 * Invariants: limbs_ has no trailing zero limb; sign_ == 0 iff limbs_
 * is empty. Division truncates toward zero; the remainder carries the
 * sign of the dividend.
 */
class BigInt {
public:
  BigInt() = default;

  BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid overflow on LLONG_MIN
    unsigned long long m =
        v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
              : static_cast<unsigned long long>(v);
    while (m != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
      m >>= 32;
    }
  }

  BigInt(int v) : BigInt(static_cast<long long>(v)) {}

  static BigInt from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt r;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("BigInt: bad digit in \"" + std::string(s) + "\"");
      r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    if (neg) r.sign_ = -r.sign_;
    return r;
  }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }

  bool operator==(const BigInt& o) const {
    return sign_ == o.sign_ && limbs_ == o.limbs_;
  }

  std::strong_ordering operator<=>(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ <=> o.sign_;
    int c = ucmp(limbs_, o.limbs_);
    if (sign_ < 0) c = -c;
    return c <=> 0;
  }

  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  BigInt abs() const { return sign_ < 0 ? -*this : *this; }

  BigInt operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
      r.limbs_ = uadd(limbs_, o.limbs_);
      r.sign_ = sign_;
    } else {
      int c = ucmp(limbs_, o.limbs_);
      if (c == 0) return BigInt();
      if (c > 0) {
        r.limbs_ = usub(limbs_, o.limbs_);
        r.sign_ = sign_;
      } else {
        r.limbs_ = usub(o.limbs_, limbs_);
        r.sign_ = o.sign_;
      }
    }
    return r;
  }

  BigInt operator-(const BigInt& o) const { return *this + (-o); }

  BigInt operator*(const BigInt& o) const {
    if (sign_ == 0 || o.sign_ == 0) return BigInt();
    BigInt r;
    r.limbs_ = umul(limbs_, o.limbs_);
    r.sign_ = sign_ * o.sign_;
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  // Truncated division; throws on zero divisor.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (a.sign_ == 0) {
      q = BigInt();
      r = BigInt();
      return;
    }
    std::vector<std::uint32_t> qm, rm;
    udivmod(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    r.limbs_ = std::move(rm);
    q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
  }

  BigInt operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
  }

  BigInt operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
  }

  static BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
      BigInt q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  static BigInt pow(BigInt base, unsigned e) {
    BigInt r(1);
    while (e != 0) {
      if (e & 1u) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  bool fits_int64() const {
    if (limbs_.size() > 2) return false;
    unsigned long long m = magnitude_u64();
    if (sign_ >= 0) return m <= 0x7fffffffffffffffULL;
    return m <= 0x8000000000000000ULL;
  }

  long long to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
    unsigned long long m = magnitude_u64();
    if (sign_ < 0) return -static_cast<long long>(m - 1) - 1;
    return static_cast<long long>(m);
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> tmp = limbs_;
    std::string digits;
    while (!tmp.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = tmp.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | tmp[i];
        tmp[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
        rem = cur % 1000000000ULL;
      }
      while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
      std::string chunk = std::to_string(rem);
      if (!tmp.empty()) chunk.insert(0, 9 - chunk.size(), '0');
      digits.insert(0, chunk);
    }
    return sign_ < 0 ? "-" + digits : digits;
  }

private:
  int sign_ = 0;
  std::vector<std::uint32_t> limbs_;

  unsigned long long magnitude_u64() const {
    unsigned long long m = 0;
    if (limbs_.size() > 1) m = static_cast<unsigned long long>(limbs_[1]) << 32;
    if (!limbs_.empty()) m |= limbs_[0];
    return m;
  }

  static void trim(std::vector<std::uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }

  static int ucmp(const std::vector<std::uint32_t>& a,
                  const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<std::uint32_t> uadd(const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::uint64_t s = carry;
      if (i < a.size()) s += a[i];
      if (i < b.size()) s += b[i];
      r[i] = static_cast<std::uint32_t>(s);
      carry = s >> 32;
    }
    trim(r);
    return r;
  }

  // requires a >= b
  static std::vector<std::uint32_t> usub(const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::int64_t d = static_cast<std::int64_t>(r[i]) - borrow -
                       (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
      if (d < 0) {
        d += 1LL << 32;
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<std::uint32_t>(d);
    }
    trim(r);
    return r;
  }

  static std::vector<std::uint32_t> umul(const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
        r[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      r[i + b.size()] += static_cast<std::uint32_t>(carry);
    }
    trim(r);
    return r;
  }

  static std::vector<std::uint32_t> ushl(const std::vector<std::uint32_t>& a, unsigned s) {
    if (a.empty() || s == 0) return a;
    std::vector<std::uint32_t> r(a.size() + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      r[i] |= a[i] << s;
      r[i + 1] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[i]) >> (32 - s));
    }
    trim(r);
    return r;
  }

  static std::vector<std::uint32_t> ushr(const std::vector<std::uint32_t>& a, unsigned s) {
    if (a.empty() || s == 0) return a;
    std::vector<std::uint32_t> r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      r[i] = a[i] >> s;
      if (i + 1 < a.size())
        r[i] |= static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[i + 1]) << (32 - s));
    }
    trim(r);
    return r;
  }

  // Knuth algorithm D on magnitudes.
  static void udivmod(const std::vector<std::uint32_t>& u,
                      const std::vector<std::uint32_t>& v,
                      std::vector<std::uint32_t>& q,
                      std::vector<std::uint32_t>& r) {
    q.clear();
    r.clear();
    if (ucmp(u, v) < 0) {
      r = u;
      return;
    }
    if (v.size() == 1) {
      std::uint64_t d = v[0], rem = 0;
      q.assign(u.size(), 0);
      for (std::size_t i = u.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | u[i];
        q[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
      }
      trim(q);
      if (rem != 0) r.push_back(static_cast<std::uint32_t>(rem));
      return;
    }

    unsigned shift = std::countl_zero(v.back());
    std::vector<std::uint32_t> vn = ushl(v, shift);
    std::vector<std::uint32_t> un = ushl(u, shift);
    un.resize(u.size() + 1, 0);

    const std::size_t n = vn.size();
    const std::size_t m = un.size() - n;
    q.assign(m, 0);
    const std::uint64_t base = 1ULL << 32;

    for (std::size_t j = m; j-- > 0;) {
      std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
      std::uint64_t qhat = num / vn[n - 1];
      std::uint64_t rhat = num % vn[n - 1];
      while (qhat >= base ||
             qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
        --qhat;
        rhat += vn[n - 1];
        if (rhat >= base) break;
      }
      // multiply and subtract
      std::int64_t borrow = 0;
      std::uint64_t carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t p = qhat * vn[i] + carry;
        carry = p >> 32;
        std::int64_t t = static_cast<std::int64_t>(un[i + j]) -
                         static_cast<std::int64_t>(p & 0xffffffffULL) - borrow;
        if (t < 0) {
          t += static_cast<std::int64_t>(base);
          borrow = 1;
        } else {
          borrow = 0;
        }
        un[i + j] = static_cast<std::uint32_t>(t);
      }
      std::int64_t t = static_cast<std::int64_t>(un[j + n]) -
                       static_cast<std::int64_t>(carry) - borrow;
      if (t < 0) {
        // qhat was one too large: add back
        t += static_cast<std::int64_t>(base);
        --qhat;
        std::uint64_t c2 = 0;
        for (std::size_t i = 0; i < n; ++i) {
          std::uint64_t s = static_cast<std::uint64_t>(un[i + j]) + vn[i] + c2;
          un[i + j] = static_cast<std::uint32_t>(s);
          c2 = s >> 32;
        }
        t += static_cast<std::int64_t>(c2);
        t &= static_cast<std::int64_t>(base) - 1;
      }
      un[j + n] = static_cast<std::uint32_t>(t);
      q[j] = static_cast<std::uint32_t>(qhat);
    }
    trim(q);
    un.resize(n);
    r = ushr(un, shift);
  }
};

inline BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt r(1);
  for (int i = 2; i <= n; ++i) r *= BigInt(i);
  return r;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  k = std::min(k, n - k);
  BigInt r(1);
  for (int i = 1; i <= k; ++i) {
    r *= BigInt(n - k + i);
    r = r / BigInt(i);
  }
  return r;
}

} // namespace unival
