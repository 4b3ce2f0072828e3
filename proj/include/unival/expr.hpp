#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unival/area_measure.hpp"

namespace unival {

/*
 * Minimal infix expression language over named generators, shared by the
 * CLI commands. Three typed contexts evaluate the same grammar:
 *
 *   valuation: chi, t, s, u, t_hat, s_hat, mu[k,q], f[k], p[k], q[k]
 *   measure:   B[k,q], Gamma[k,q], Delta[k,q], N[k,q]
 *   poly:      t and s (st) or t and u (tu), f[k], p[k], q[k]
 *
 * Scalars are rationals like 3 or -4/3 and pi^j factors. Generators can
 * be scaled and added everywhere; multiplying two generators (and ^ on
 * them) is meaningful only in the poly context.
 */
struct ExprError : std::runtime_error {
  std::size_t position;
  ExprError(std::size_t pos, const std::string& what)
      : std::runtime_error("parse error at column " + std::to_string(pos + 1) + ": " + what),
        position(pos) {}
};

namespace detail {

struct Token {
  enum class Kind { Number, Name, Symbol, End } kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    if (c >= '0' && c <= '9') {
      std::size_t j = i;
      while (j < src.size() && src[j] >= '0' && src[j] <= '9') ++j;
      toks.push_back({Token::Kind::Number, src.substr(i, j - i), i});
      i = j;
      continue;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
      std::size_t j = i;
      while (j < src.size() && ((src[j] >= 'a' && src[j] <= 'z') ||
                                (src[j] >= 'A' && src[j] <= 'Z') ||
                                (src[j] >= '0' && src[j] <= '9') || src[j] == '_'))
        ++j;
      toks.push_back({Token::Kind::Name, src.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::string("+-*/^()[],").find(c) != std::string::npos) {
      toks.push_back({Token::Kind::Symbol, std::string(1, c), i});
      ++i;
      continue;
    }
    throw ExprError(i, std::string("unexpected character '") + c + "'");
  }
  toks.push_back({Token::Kind::End, "", src.size()});
  return toks;
}

// Element algebra shared across contexts: a value is either a scalar or
// an element of the target space.
template <class Element>
struct ExprValue {
  std::optional<Element> element;
  PiScalar scalar = PiScalar(1);
};

template <class Context>
class Parser {
public:
  using Element = typename Context::Element;
  using Value = ExprValue<Element>;

  Parser(const std::string& src, Context& ctx) : ctx_(ctx), toks_(tokenize(src)) {}

  Element parse() {
    Value v = parse_expr();
    expect_end();
    if (v.element) return v.scalar.is_one() ? *v.element : ctx_.scale(*v.element, v.scalar);
    return ctx_.from_scalar(v.scalar);
  }

private:
  Context& ctx_;
  std::vector<Token> toks_;
  std::size_t i_ = 0;

  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }
  bool accept_symbol(const char* s) {
    if (peek().kind == Token::Kind::Symbol && peek().text == s) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect_symbol(const char* s) {
    if (!accept_symbol(s)) throw ExprError(peek().pos, std::string("expected '") + s + "'");
  }
  void expect_end() {
    if (peek().kind != Token::Kind::End)
      throw ExprError(peek().pos, "unexpected trailing input");
  }

  Value parse_expr() {
    Value acc = parse_term();
    for (;;) {
      if (accept_symbol("+"))
        acc = add(acc, parse_term(), false);
      else if (accept_symbol("-"))
        acc = add(acc, parse_term(), true);
      else
        return acc;
    }
  }

  Value parse_term() {
    Value acc = parse_factor();
    for (;;) {
      if (accept_symbol("*"))
        acc = mul(acc, parse_factor());
      else if (peek().kind == Token::Kind::Symbol && peek().text == "/") {
        std::size_t pos = peek().pos;
        ++i_;
        acc = divide(acc, parse_factor(), pos);
      } else {
        return acc;
      }
    }
  }

  Value parse_factor() {
    if (accept_symbol("-")) {
      Value v = parse_factor();
      v.scalar = -v.scalar;
      return v;
    }
    Value base = parse_atom();
    if (peek().kind == Token::Kind::Symbol && peek().text == "^") {
      std::size_t pos = peek().pos;
      ++i_;
      int e = parse_int();
      return power(base, e, pos);
    }
    return base;
  }

  Value parse_atom() {
    const Token& tok = peek();
    if (tok.kind == Token::Kind::Number) {
      ++i_;
      Value v;
      v.scalar = PiScalar(Rational(BigInt::from_string(tok.text), BigInt(1)));
      return v;
    }
    if (tok.kind == Token::Kind::Name) {
      ++i_;
      if (tok.text == "pi") {
        Value v;
        v.scalar = PiScalar::pi();
        return v;
      }
      std::vector<int> idx;
      bool has_idx = false;
      if (accept_symbol("[")) {
        has_idx = true;
        idx.push_back(parse_int());
        while (accept_symbol(",")) idx.push_back(parse_int());
        expect_symbol("]");
      }
      Value v;
      v.element = ctx_.generator(tok.text, has_idx ? &idx : nullptr, tok.pos);
      return v;
    }
    if (accept_symbol("(")) {
      Value v = parse_expr();
      expect_symbol(")");
      return v;
    }
    throw ExprError(tok.pos, "expected a number, generator, or '('");
  }

  int parse_int() {
    bool neg = accept_symbol("-");
    const Token& tok = peek();
    if (tok.kind != Token::Kind::Number) throw ExprError(tok.pos, "expected an integer");
    ++i_;
    int v = std::stoi(tok.text);
    return neg ? -v : v;
  }

  Element materialize(const Value& v) {
    if (v.element) return v.scalar.is_one() ? *v.element : ctx_.scale(*v.element, v.scalar);
    return ctx_.from_scalar(v.scalar);
  }

  Value add(const Value& a, const Value& b, bool subtract) {
    Value r;
    if (!a.element && !b.element) {
      r.scalar = subtract ? a.scalar - b.scalar : a.scalar + b.scalar;
      return r;
    }
    Element ea = materialize(a);
    Element eb = materialize(b);
    r.element = ctx_.add(ea, subtract ? ctx_.scale(eb, PiScalar(-1)) : eb);
    r.scalar = PiScalar(1);
    return r;
  }

  Value mul(const Value& a, const Value& b) {
    Value r;
    if (a.element && b.element) {
      r.element = ctx_.mul(materialize(a), materialize(b));
      return r;
    }
    if (a.element || b.element) {
      const Value& ev = a.element ? a : b;
      const Value& sv = a.element ? b : a;
      r.element = ev.element;
      r.scalar = ev.scalar * sv.scalar;
      return r;
    }
    r.scalar = a.scalar * b.scalar;
    return r;
  }

  Value divide(const Value& a, const Value& b, std::size_t pos) {
    if (b.element) throw ExprError(pos, "cannot divide by a generator");
    Value r = a;
    try {
      r.scalar = r.scalar.div_monomial(b.scalar);
    } catch (const std::domain_error& e) {
      throw ExprError(pos, e.what());
    }
    return r;
  }

  Value power(const Value& base, int e, std::size_t pos) {
    Value r;
    if (!base.element) {
      if (e >= 0) {
        r.scalar = PiScalar(1);
        for (int i = 0; i < e; ++i) r.scalar *= base.scalar;
      } else {
        if (!base.scalar.is_monomial())
          throw ExprError(pos, "negative power of a non-monomial scalar");
        PiScalar inv = PiScalar(1).div_monomial(base.scalar);
        r.scalar = PiScalar(1);
        for (int i = 0; i < -e; ++i) r.scalar *= inv;
      }
      return r;
    }
    if (e < 0) throw ExprError(pos, "negative power of a generator");
    Element acc = ctx_.from_scalar(PiScalar(1));
    Element b = materialize(base);
    for (int i = 0; i < e; ++i) acc = ctx_.mul(acc, b);
    r.element = acc;
    return r;
  }
};

inline void check_index_count(const std::vector<int>* idx, std::size_t want,
                              const std::string& name, std::size_t pos) {
  if (idx == nullptr || idx->size() != want)
    throw ExprError(pos, name + " takes " + std::to_string(want) +
                             (want == 1 ? " index" : " indices"));
}

} // namespace detail

struct ValuationContext {
  using Element = Valuation;
  int n;

  Valuation from_scalar(const PiScalar& s) { return Valuation::unit(n) * s; }
  Valuation scale(const Valuation& v, const PiScalar& s) { return v * s; }
  Valuation add(const Valuation& a, const Valuation& b) { return a + b; }
  Valuation mul(const Valuation&, const Valuation&) {
    throw std::invalid_argument(
        "valuation expressions are linear; use the mul/conv commands for products");
  }

  Valuation generator(const std::string& name, const std::vector<int>* idx, std::size_t pos) {
    using detail::check_index_count;
    try {
      if (name == "chi") return Valuation::unit(n);
      if (name == "vol") return Valuation::volume(n);
      if (name == "t") return from_poly(n, GradedPoly::gen_t(Coords::ST));
      if (name == "s") return from_poly(n, GradedPoly::gen_s());
      if (name == "u") return from_poly(n, GradedPoly::gen_u().convert(Coords::ST));
      if (name == "t_hat") return fourier(from_poly(n, GradedPoly::gen_t(Coords::ST)));
      if (name == "s_hat") return fourier(from_poly(n, GradedPoly::gen_s()));
      if (name == "mu") {
        check_index_count(idx, 2, "mu", pos);
        return Valuation::basis(n, (*idx)[0], (*idx)[1]);
      }
      if (name == "f" || name == "p" || name == "q") {
        check_index_count(idx, 1, name, pos);
        int k = (*idx)[0];
        GradedPoly poly = name == "f" ? fu_f(k) : name == "p" ? fu_p(k) : fu_q(k);
        return from_poly(n, poly);
      }
    } catch (const ExprError&) {
      throw;
    } catch (const std::exception& e) {
      throw ExprError(pos, e.what());
    }
    throw ExprError(pos, "unknown valuation generator \"" + name + "\"");
  }
};

struct MeasureContext {
  using Element = AreaMeasure;
  int n;

  AreaMeasure from_scalar(const PiScalar& s) {
    if (s.is_zero()) return AreaMeasure(n);
    throw std::invalid_argument("a bare scalar is not an area measure");
  }
  AreaMeasure scale(const AreaMeasure& m, const PiScalar& s) { return m * s; }
  AreaMeasure add(const AreaMeasure& a, const AreaMeasure& b) { return a + b; }
  AreaMeasure mul(const AreaMeasure&, const AreaMeasure&) {
    throw std::invalid_argument("area measures cannot be multiplied");
  }

  AreaMeasure generator(const std::string& name, const std::vector<int>* idx, std::size_t pos) {
    using detail::check_index_count;
    try {
      if (name == "B" || name == "Gamma") {
        check_index_count(idx, 2, name, pos);
        return AreaMeasure::basis(n, name == "B" ? AreaKind::B : AreaKind::Gamma, (*idx)[0],
                                  (*idx)[1]);
      }
      if (name == "Delta" || name == "N") {
        check_index_count(idx, 2, name, pos);
        return delta_n_measure(
            n, {name == "Delta" ? DeltaKind::Delta : DeltaKind::N, (*idx)[0], (*idx)[1]});
      }
    } catch (const ExprError&) {
      throw;
    } catch (const std::exception& e) {
      throw ExprError(pos, e.what());
    }
    throw ExprError(pos, "unknown measure generator \"" + name + "\"");
  }
};

struct PolyContext {
  using Element = GradedPoly;
  Coords coords;

  GradedPoly from_scalar(const PiScalar& s) {
    return GradedPoly::monomial(coords, 0, 0, s);
  }
  GradedPoly scale(const GradedPoly& p, const PiScalar& s) { return p * s; }
  GradedPoly add(const GradedPoly& a, const GradedPoly& b) { return a + b; }
  GradedPoly mul(const GradedPoly& a, const GradedPoly& b) { return a * b; }

  GradedPoly generator(const std::string& name, const std::vector<int>* idx, std::size_t pos) {
    using detail::check_index_count;
    try {
      if (name == "t") return GradedPoly::gen_t(coords);
      if (name == "s" && coords == Coords::ST) return GradedPoly::gen_s();
      if (name == "u" && coords == Coords::TU) return GradedPoly::gen_u();
      if (name == "s" || name == "u")
        throw ExprError(pos, "generator \"" + name + "\" is not part of the " +
                                 unival::to_string(coords) + " coordinate system");
      if (name == "f" || name == "p" || name == "q") {
        check_index_count(idx, 1, name, pos);
        int k = (*idx)[0];
        return name == "f" ? fu_f(k, coords) : name == "p" ? fu_p(k, coords) : fu_q(k, coords);
      }
    } catch (const ExprError&) {
      throw;
    } catch (const std::exception& e) {
      throw ExprError(pos, e.what());
    }
    throw ExprError(pos, "unknown polynomial generator \"" + name + "\"");
  }
};

inline Valuation parse_valuation(const std::string& src, int n) {
  ValuationContext ctx{n};
  return detail::Parser<ValuationContext>(src, ctx).parse();
}

inline AreaMeasure parse_measure(const std::string& src, int n) {
  MeasureContext ctx{n};
  return detail::Parser<MeasureContext>(src, ctx).parse();
}

inline GradedPoly parse_poly(const std::string& src, Coords coords) {
  PolyContext ctx{coords};
  return detail::Parser<PolyContext>(src, ctx).parse();
}

} // namespace unival
