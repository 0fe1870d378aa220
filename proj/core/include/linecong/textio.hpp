#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "linecong/poly.hpp"

namespace linecong {

/// Text grammar for polynomials, one per line:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := '(' expr ')' | integer | variable
/// Variables match [a-z][0-9]*; integer coefficients only. Lines starting
/// with '#' are comments. A Pluecker index pair written out of order (p10)
/// parses with the antisymmetry sign flip (-p01).
template <class F>
class PolyParser {
 public:
  PolyParser(const std::string& text, const Ring<F>* ring) : s_(text), r_(ring) {}

  Poly<F> parse_line() {
    Poly<F> p = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw UsageError("parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly<F> parse_expr() {
    bool neg = false;
    skip_ws();
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Poly<F> acc = parse_term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      if (eat('+')) {
        acc = acc + parse_term();
      } else if (eat('-')) {
        acc = acc - parse_term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly<F> parse_term() {
    Poly<F> acc = parse_factor();
    while (eat('*')) acc = acc * parse_factor();
    return acc;
  }

  Poly<F> parse_factor() {
    Poly<F> base = parse_base();
    if (eat('^')) {
      skip_ws();
      if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_])) fail("exponent expected");
      unsigned long e = 0;
      while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
        e = e * 10 + (s_[pos_++] - '0');
        if (e > 60000) fail("exponent too large");
      }
      return base.pow(unsigned(e));
    }
    return base;
  }

  Poly<F> parse_base() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly<F> p = parse_expr();
      if (!eat(')')) fail("')' expected");
      return p;
    }
    if (std::isdigit((unsigned char)c)) {
      long long v = 0;
      while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
        if (v > (1ll << 56)) fail("integer literal too large");
        v = v * 10 + (s_[pos_++] - '0');
      }
      return Poly<F>::from_int(r_, v);
    }
    if (c >= 'a' && c <= 'z') {
      size_t start = pos_++;
      while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      int idx = r_->var_index(name);
      if (idx >= 0) return Poly<F>::variable(r_, idx);
      // antisymmetry convention for Pluecker indices
      if (name.size() == 3 && name[0] == 'p') {
        if (name[1] == name[2]) fail("repeated Pluecker index in " + name);
        std::string flipped = {'p', name[2], name[1]};
        int fi = r_->var_index(flipped);
        if (fi >= 0) return -Poly<F>::variable(r_, fi);
      }
      fail("unknown variable " + name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  const Ring<F>* r_;
  size_t pos_ = 0;
};

template <class F>
Poly<F> parse_poly(const std::string& line, const Ring<F>* ring) {
  return PolyParser<F>(line, ring).parse_line();
}

/// Parse a whole document: one polynomial per non-comment line.
template <class F>
std::vector<Poly<F>> parse_polys(const std::string& text, const Ring<F>* ring) {
  std::vector<Poly<F>> out;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    try {
      out.push_back(parse_poly(line, ring));
    } catch (const UsageError& e) {
      throw UsageError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

namespace detail {

inline void append_monomial(std::string& out, const RingBase& r, const Exps& e, bool lead_coeff_one) {
  bool first = !lead_coeff_one;
  for (int i = 0; i < r.nvars(); ++i) {
    if (!e[i]) continue;
    if (!first) out += '*';
    first = false;
    out += r.name(i);
    if (e[i] > 1) {
      out += '^';
      out += std::to_string(e[i]);
    }
  }
}

}  // namespace detail

/// Canonical text form: terms in descending order, balanced integer
/// coefficients. Printing then parsing is the identity.
inline std::string to_text(const Poly<Fp>& p) {
  if (p.is_zero()) return "0";
  const Fp& fld = p.ring()->field();
  std::string out;
  for (const auto& t : p.terms()) {
    long long c = fld.to_balanced(t.c);
    if (!out.empty()) out += c > 0 ? "+" : "-";
    else if (c < 0) out += "-";
    unsigned long long a = c > 0 ? c : -c;
    bool coeff_one = (a == 1) && !RingBase::is_one(t.e);
    if (!coeff_one) out += std::to_string(a);
    detail::append_monomial(out, *p.ring(), t.e, !coeff_one);
  }
  return out;
}

/// Canonical text form over Q: the primitive integer representative with a
/// positive leading coefficient (scalar multiples print identically).
inline std::string to_text(const Poly<Rat>& p) {
  if (p.is_zero()) return "0";
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
  }
  std::vector<mpz_class> cs;
  for (const auto& t : p.terms()) {
    mpz_class v = t.c.get_num() * (den_lcm / t.c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
    cs.push_back(v);
  }
  if (sgn(cs.front()) < 0) num_gcd = -num_gcd;
  std::string out;
  for (size_t i = 0; i < cs.size(); ++i) {
    mpz_class c = cs[i] / num_gcd;
    if (!out.empty()) out += sgn(c) > 0 ? "+" : "-";
    else if (sgn(c) < 0) out += "-";
    mpz_class a = abs(c);
    const auto& e = p.terms()[i].e;
    bool coeff_one = (a == 1) && !RingBase::is_one(e);
    if (!coeff_one) out += a.get_str();
    detail::append_monomial(out, *p.ring(), e, !coeff_one);
  }
  return out;
}

template <class F>
std::string to_text(const std::vector<Poly<F>>& polys) {
  std::string out;
  for (const auto& p : polys) {
    out += to_text(p);
    out += '\n';
  }
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
}

}  // namespace linecong
