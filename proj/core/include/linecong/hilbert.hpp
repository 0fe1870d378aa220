#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <vector>

#include "linecong/groebner.hpp"

namespace linecong {

/// Univariate polynomial in t with rational coefficients; the Hilbert
/// polynomial of a graded quotient.
class HilbertPolynomial {
 public:
  HilbertPolynomial() = default;
  explicit HilbertPolynomial(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

  static HilbertPolynomial zero() { return HilbertPolynomial(); }

  /// Binomial coefficient polynomial C(t + shift, k) in t.
  static HilbertPolynomial binomial(long shift, unsigned k) {
    // product (t + shift - i) for i in [0, k), divided by k!
    std::vector<mpq_class> acc = {1};
    for (unsigned i = 0; i < k; ++i) {
      std::vector<mpq_class> next(acc.size() + 1, mpq_class(0));
      for (size_t j = 0; j < acc.size(); ++j) {
        next[j + 1] += acc[j];
        next[j] += acc[j] * mpq_class(shift - long(i));
      }
      acc = std::move(next);
    }
    mpz_class fact = 1;
    for (unsigned i = 2; i <= k; ++i) fact *= i;
    for (auto& q : acc) q /= fact;
    return HilbertPolynomial(std::move(acc));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }  // -1 for zero
  mpq_class coeff(size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  mpq_class operator()(long t) const {
    mpq_class acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
  }

  HilbertPolynomial operator+(const HilbertPolynomial& o) const {
    std::vector<mpq_class> s(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) s[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) s[i] += o.c_[i];
    return HilbertPolynomial(std::move(s));
  }

  HilbertPolynomial scaled(const mpq_class& a) const {
    std::vector<mpq_class> s = c_;
    for (auto& q : s) q *= a;
    return HilbertPolynomial(std::move(s));
  }

  bool operator==(const HilbertPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const HilbertPolynomial& o) const { return !(*this == o); }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
      if (sgn(c_[i]) == 0) continue;
      mpq_class a = abs(c_[i]);
      if (!out.empty()) out += sgn(c_[i]) > 0 ? "+" : "-";
      else if (sgn(c_[i]) < 0) out += "-";
      bool unit = (a == 1) && i > 0;
      if (!unit) out += a.get_num().get_str() + (a.get_den() == 1 ? "" : "/" + a.get_den().get_str());
      if (i > 0) {
        if (!unit) out += "*";
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<mpq_class> c_;  // c_[i] is the coefficient of t^i
};

namespace detail {

using MonoList = std::vector<Exps>;

inline void interreduce_monos(MonoList& g) {
  std::sort(g.begin(), g.end(), [](const Exps& a, const Exps& b) {
    uint32_t da = 0, db = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db;
    return a < b;
  });
  MonoList out;
  for (const auto& m : g) {
    bool red = false;
    for (const auto& h : out)
      if (RingBase::divides(h, m)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  g = std::move(out);
}

/// Numerator of the Hilbert series of R/J for a monomial ideal J in an
/// n-variable standard-graded ring: HS(t) = N(t)/(1-t)^n. Coefficients of N
/// are returned densely, index = degree.
class HilbertNumerator {
 public:
  explicit HilbertNumerator(int nvars) : n_(nvars) {}

  std::vector<long long> run(MonoList gens) {
    interreduce_monos(gens);
    Series s = recurse(std::move(gens));
    return s;
  }

 private:
  using Series = std::vector<long long>;  // dense in t

  static Series one() { return {1}; }

  static void add_shifted(Series& acc, const Series& s, uint32_t shift, long long sign) {
    if (acc.size() < s.size() + shift) acc.resize(s.size() + shift, 0);
    for (size_t i = 0; i < s.size(); ++i) acc[i + shift] += sign * s[i];
  }

  static uint32_t total(const Exps& e) {
    uint32_t d = 0;
    for (int i = 0; i < kMaxVars; ++i) d += e[i];
    return d;
  }

  Series recurse(MonoList g) {
    if (g.empty()) return one();
    if (total(g[0]) == 0) return {};  // unit ideal: numerator 0
    if (g.size() == 1) {
      Series s = one();
      add_shifted(s, one(), total(g[0]), -1);
      return s;
    }
    if (g.size() == 2) {
      Series s = one();
      add_shifted(s, one(), total(g[0]), -1);
      add_shifted(s, one(), total(g[1]), -1);
      add_shifted(s, one(), total(RingBase::lcm(g[0], g[1])), +1);
      return s;
    }
    // pairwise disjoint supports form a monomial regular sequence
    bool disjoint = true;
    uint32_t seen = 0;
    for (const auto& m : g) {
      uint32_t mask = RingBase::support_mask(m);
      if (seen & mask) {
        disjoint = false;
        break;
      }
      seen |= mask;
    }
    if (disjoint) {
      Series s = one();
      for (const auto& m : g) {
        Series next;
        next.resize(s.size() + total(m), 0);
        for (size_t i = 0; i < s.size(); ++i) {
          next[i] += s[i];
          next[i + total(m)] -= s[i];
        }
        s = std::move(next);
      }
      return s;
    }
    // pivot: most frequent variable (count >= 2 since supports overlap) with
    // its least positive exponent; both branches then strictly shrink the
    // total exponent sum, so the recursion terminates
    int counts[kMaxVars] = {};
    for (const auto& m : g)
      for (int i = 0; i < n_; ++i)
        if (m[i]) ++counts[i];
    int v = 0;
    for (int i = 1; i < n_; ++i)
      if (counts[i] > counts[v]) v = i;
    uint16_t e = 0;
    for (const auto& m : g)
      if (m[v] && (e == 0 || m[v] < e)) e = m[v];
    Exps pivot{};
    pivot[v] = e;

    // J : pivot
    MonoList colon;
    colon.reserve(g.size());
    for (const auto& m : g) {
      Exps q = m;
      q[v] = uint16_t(m[v] > e ? m[v] - e : 0);
      colon.push_back(q);
    }
    interreduce_monos(colon);
    // J + pivot
    MonoList plus;
    plus.push_back(pivot);
    for (const auto& m : g)
      if (m[v] < e) plus.push_back(m);
    interreduce_monos(plus);

    Series a = recurse(std::move(plus));
    Series b = recurse(std::move(colon));
    add_shifted(a, b, e, +1);
    return a;
  }

  int n_;
};

}  // namespace detail

/// Dimension, degree, Hilbert polynomial and graded dimensions of a
/// homogeneous ideal, all read off the Hilbert series of the initial ideal.
class IdealInvariants {
 public:
  IdealInvariants(std::vector<long long> numerator, int nvars)
      : num_(std::move(numerator)), n_(nvars) {
    // strip (1-t) factors: HS = Q(t)/(1-t)^D with Q(1) != 0
    std::vector<long long> q = num_;
    int strips = 0;
    while (!q.empty()) {
      long long at1 = 0;
      for (long long c : q) at1 += c;
      if (at1 != 0) break;
      // divide by (1 - t): synthetic division
      std::vector<long long> d(q.size() - 1, 0);
      long long carry = 0;
      for (size_t i = 0; i < q.size() - 1; ++i) {
        carry += q[i];
        d[i] = carry;
      }
      q = std::move(d);
      ++strips;
    }
    krull_dim_ = q.empty() ? 0 : n_ - strips;
    reduced_ = q;
    if (q.empty()) {
      degree_ = 0;
      hp_ = HilbertPolynomial::zero();
      return;
    }
    long long at1 = 0;
    for (long long c : q) at1 += c;
    degree_ = at1;
    if (krull_dim_ == 0) {
      hp_ = HilbertPolynomial::zero();
      degree_ = 0;
      return;
    }
    HilbertPolynomial p;
    for (size_t j = 0; j < q.size(); ++j)
      if (q[j])
        p = p + HilbertPolynomial::binomial(-long(j) + krull_dim_ - 1, unsigned(krull_dim_ - 1))
                    .scaled(mpq_class(long(q[j])));
    hp_ = p;
  }

  /// Dimension of the projective zero set (-1 when empty).
  int projective_dimension() const { return krull_dim_ - 1; }
  /// Degree of the projective zero set (0 when empty).
  long long degree() const { return degree_; }
  const HilbertPolynomial& hilbert_polynomial() const { return hp_; }

  /// Hilbert function of the quotient R/I at degree d (exact, all d).
  long long quotient_dim(long d) const {
    if (d < 0) return 0;
    long long acc = 0;
    for (size_t j = 0; j < num_.size(); ++j) {
      if (long(j) > d) break;
      if (num_[j]) acc += num_[j] * monomial_count(d - long(j), n_);
    }
    return acc;
  }

  /// Dimension of the degree-d piece of the ideal itself.
  long long ideal_dim(long d) const { return monomial_count(d, n_) - quotient_dim(d); }

  static long long monomial_count(long d, int nvars) {
    if (d < 0) return 0;
    // C(d + nvars - 1, nvars - 1)
    mpz_class v = 1;
    for (int i = 1; i <= nvars - 1; ++i) {
      v *= d + i;
      v /= i;
    }
    return v.get_si();
  }

  const std::vector<long long>& numerator() const { return num_; }

 private:
  std::vector<long long> num_;
  std::vector<long long> reduced_;
  int n_;
  int krull_dim_;
  long long degree_;
  HilbertPolynomial hp_;
};

/// Invariants from a degree-compatible (grevlex) Groebner basis.
template <class F>
IdealInvariants invariants_from_groebner(const GroebnerBasis<F>& gb) {
  const Ring<F>* r = gb.ring();
  if (!r->standard_graded())
    throw UsageError("Hilbert invariants require the standard grading");
  if (r->order().kind != OrderKind::GrevLex)
    throw UsageError("Hilbert invariants require a grevlex basis");
  for (const auto& g : gb.polys())
    if (!g.is_homogeneous()) throw UsageError("Hilbert invariants require a homogeneous ideal");
  detail::MonoList lts;
  lts.reserve(gb.size());
  for (const auto& g : gb.polys()) lts.push_back(g.lt().e);
  auto num = detail::HilbertNumerator(r->nvars()).run(std::move(lts));
  return IdealInvariants(std::move(num), r->nvars());
}

}  // namespace linecong
