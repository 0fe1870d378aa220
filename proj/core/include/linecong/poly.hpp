#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "linecong/ring.hpp"

namespace linecong {

/// Sparse multivariate polynomial: terms sorted descending in the ring's
/// monomial order, no zero coefficients stored.
template <class F>
class Poly {
 public:
  using C = typename F::Elem;

  struct Term {
    Exps e;
    uint32_t deg;  // weighted degree of e, cached
    C c;
  };

  Poly() = default;
  explicit Poly(const Ring<F>* r) : r_(r) {}

  static Poly zero(const Ring<F>* r) { return Poly(r); }

  static Poly constant(const Ring<F>* r, C c) {
    Poly p(r);
    if (!F::is_zero(c)) p.t_.push_back({RingBase::one(), 0, c});
    return p;
  }

  static Poly from_int(const Ring<F>* r, long long n) {
    return constant(r, r->field().from_int(n));
  }

  static Poly variable(const Ring<F>* r, int i) {
    if (i < 0 || i >= r->nvars()) throw UsageError("variable index out of range");
    Exps e{};
    e[i] = 1;
    Poly p(r);
    p.t_.push_back({e, r->weight(i), r->field().one()});
    return p;
  }

  static Poly variable(const Ring<F>* r, const std::string& name) {
    int i = r->var_index(name);
    if (i < 0) throw UsageError("unknown variable " + name);
    return variable(r, i);
  }

  static Poly monomial(const Ring<F>* r, const Exps& e, C c) {
    Poly p(r);
    if (!F::is_zero(c)) p.t_.push_back({e, r->deg(e), c});
    return p;
  }

  /// Build from an arbitrary term list: sorts, combines, drops zeros.
  static Poly from_terms(const Ring<F>* r, std::vector<Term>&& ts) {
    Poly p(r);
    p.t_ = std::move(ts);
    p.normalize_terms();
    return p;
  }

  const Ring<F>* ring() const { return r_; }
  bool is_zero() const { return t_.empty(); }
  size_t nterms() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& lt() const {
    if (t_.empty()) throw UsageError("leading term of the zero polynomial");
    return t_.front();
  }

  /// Weighted total degree of the highest term (0 for the zero polynomial).
  uint32_t degree() const {
    uint32_t d = 0;
    for (const auto& t : t_) d = std::max(d, t.deg);
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : t_)
      if (t.deg != t_.front().deg) return false;
    return true;
  }

  bool is_constant() const { return t_.empty() || (t_.size() == 1 && RingBase::is_one(t_[0].e)); }

  bool operator==(const Poly& o) const {
    if (r_ != o.r_ || t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
      if (t_[i].e != o.t_[i].e || !(t_[i].c == o.t_[i].c)) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const {
    Poly p(*this);
    for (auto& t : p.t_) t.c = r_->field().neg(t.c);
    return p;
  }

  Poly operator+(const Poly& o) const { return merged(o, false); }
  Poly operator-(const Poly& o) const { return merged(o, true); }

  Poly operator*(const Poly& o) const {
    check_ring(o);
    const auto& fld = r_->field();
    if (is_zero() || o.is_zero()) return zero(r_);
    std::vector<Term> acc;
    acc.reserve(t_.size() * o.t_.size());
    for (const auto& a : t_)
      for (const auto& b : o.t_)
        acc.push_back({RingBase::mul(a.e, b.e), a.deg + b.deg, fld.mul(a.c, b.c)});
    return from_terms(r_, std::move(acc));
  }

  Poly scaled(C c) const {
    const auto& fld = r_->field();
    if (F::is_zero(c)) return zero(r_);
    Poly p(*this);
    for (auto& t : p.t_) t.c = fld.mul(t.c, c);
    return p;
  }

  /// this * (monomial e, coefficient c)
  Poly mono_mul(const Exps& e, C c) const {
    const auto& fld = r_->field();
    if (F::is_zero(c)) return zero(r_);
    uint32_t de = r_->deg(e);
    Poly p(r_);
    p.t_.reserve(t_.size());
    for (const auto& t : t_)
      p.t_.push_back({RingBase::mul(t.e, e), t.deg + de, fld.mul(t.c, c)});
    return p;
  }

  Poly pow(unsigned k) const {
    Poly acc = from_int(r_, 1);
    Poly base(*this);
    while (k) {
      if (k & 1) acc = acc * base;
      base = (k >>= 1) ? base * base : base;
    }
    return acc;
  }

  Poly derivative(int var) const {
    const auto& fld = r_->field();
    Poly p(r_);
    for (const auto& t : t_) {
      if (t.e[var] == 0) continue;
      C c = fld.mul(t.c, fld.from_int(t.e[var]));
      if (F::is_zero(c)) continue;
      Exps e = t.e;
      e[var] -= 1;
      p.t_.push_back({e, t.deg - r_->weight(var), c});
    }
    // term order is preserved by d/dx within each divisible chain, but not
    // globally; re-sort to be safe
    p.normalize_terms();
    return p;
  }

  C evaluate(const std::vector<C>& xs) const {
    if (int(xs.size()) != r_->nvars()) throw UsageError("evaluation point arity mismatch");
    const auto& fld = r_->field();
    // per-variable power tables
    uint16_t maxe[kMaxVars] = {};
    for (const auto& t : t_)
      for (int i = 0; i < r_->nvars(); ++i) maxe[i] = std::max(maxe[i], t.e[i]);
    std::vector<std::vector<C>> pw(r_->nvars());
    for (int i = 0; i < r_->nvars(); ++i) {
      pw[i].resize(maxe[i] + 1, fld.one());
      for (int k = 1; k <= maxe[i]; ++k) pw[i][k] = fld.mul(pw[i][k - 1], xs[i]);
    }
    C acc = fld.zero();
    for (const auto& t : t_) {
      C v = t.c;
      for (int i = 0; i < r_->nvars(); ++i)
        if (t.e[i]) v = fld.mul(v, pw[i][t.e[i]]);
      acc = fld.add(acc, v);
    }
    return acc;
  }

  /// Ring map: variable i of this ring maps to images[i] in the target ring.
  Poly substitute(const Ring<F>* dst, const std::vector<Poly>& images) const {
    if (int(images.size()) != r_->nvars()) throw UsageError("one image per variable required");
    for (const auto& im : images)
      if (im.ring() != dst) throw UsageError("substitution image in the wrong ring");
    uint16_t maxe[kMaxVars] = {};
    for (const auto& t : t_)
      for (int i = 0; i < r_->nvars(); ++i) maxe[i] = std::max(maxe[i], t.e[i]);
    std::vector<std::vector<Poly>> pw(r_->nvars());
    for (int i = 0; i < r_->nvars(); ++i) {
      pw[i].push_back(from_int(dst, 1));
      for (int k = 1; k <= maxe[i]; ++k) pw[i].push_back(pw[i].back() * images[i]);
    }
    Poly acc = zero(dst);
    for (const auto& t : t_) {
      Poly v = constant(dst, t.c);
      for (int i = 0; i < r_->nvars(); ++i)
        if (t.e[i]) v = v * pw[i][t.e[i]];
      acc = acc + v;
    }
    return acc;
  }

  /// Rename-style map: variable i goes to variable var_map[i] of dst.
  Poly rename(const Ring<F>* dst, const std::vector<int>& var_map) const {
    Poly p(dst);
    p.t_.reserve(t_.size());
    for (const auto& t : t_) {
      Exps e{};
      for (int i = 0; i < r_->nvars(); ++i) {
        if (!t.e[i]) continue;
        if (var_map[i] < 0) throw UsageError("variable " + r_->name(i) + " has no image");
        e[var_map[i]] = uint16_t(e[var_map[i]] + t.e[i]);
      }
      p.t_.push_back({e, dst->deg(e), t.c});
    }
    p.normalize_terms();
    return p;
  }

  /// Scale so the leading coefficient is one.
  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(r_->field().inv(lt().c));
  }

  /// Homogenize with respect to variable `var` to the maximal weighted term
  /// degree; the variable's weight must divide every degree gap.
  Poly homogenized(int var) const {
    uint32_t d = degree();
    uint32_t w = r_->weight(var);
    Poly p(r_);
    p.t_.reserve(t_.size());
    for (const auto& t : t_) {
      if ((d - t.deg) % w != 0)
        throw UsageError("homogenization gap not divisible by the variable weight");
      Exps e = t.e;
      e[var] = uint16_t(e[var] + (d - t.deg) / w);
      p.t_.push_back({e, d, t.c});
    }
    p.normalize_terms();
    return p;
  }

  /// Substitute variable `var` := 1.
  Poly dehomogenized(int var) const {
    Poly p(r_);
    p.t_.reserve(t_.size());
    for (const auto& t : t_) {
      Exps e = t.e;
      uint32_t d = t.deg - r_->weight(var) * e[var];
      e[var] = 0;
      p.t_.push_back({e, d, t.c});
    }
    p.normalize_terms();
    return p;
  }

  /// Divide out var^k for the largest k dividing every term.
  Poly without_var_power(int var) const {
    if (is_zero()) return *this;
    uint16_t k = t_[0].e[var];
    for (const auto& t : t_) k = std::min(k, t.e[var]);
    if (k == 0) return *this;
    Poly p(r_);
    p.t_.reserve(t_.size());
    for (const auto& t : t_) {
      Exps e = t.e;
      e[var] -= k;
      p.t_.push_back({e, t.deg - r_->weight(var) * k, t.c});
    }
    return p;  // order preserved: dividing by a fixed monomial is monotone
  }

  void check_ring(const Poly& o) const {
    if (r_ != o.r_) throw UsageError("polynomials from different rings");
  }

 private:
  Poly merged(const Poly& o, bool subtract) const {
    check_ring(o);
    const auto& fld = r_->field();
    Poly p(r_);
    p.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
      int c = r_->compare(t_[i].e, t_[i].deg, o.t_[j].e, o.t_[j].deg);
      if (c > 0) {
        p.t_.push_back(t_[i++]);
      } else if (c < 0) {
        p.t_.push_back(o.t_[j]);
        if (subtract) p.t_.back().c = fld.neg(p.t_.back().c);
        ++j;
      } else {
        C s = subtract ? fld.sub(t_[i].c, o.t_[j].c) : fld.add(t_[i].c, o.t_[j].c);
        if (!F::is_zero(s)) p.t_.push_back({t_[i].e, t_[i].deg, s});
        ++i;
        ++j;
      }
    }
    for (; i < t_.size(); ++i) p.t_.push_back(t_[i]);
    for (; j < o.t_.size(); ++j) {
      p.t_.push_back(o.t_[j]);
      if (subtract) p.t_.back().c = fld.neg(p.t_.back().c);
    }
    return p;
  }

  void normalize_terms() {
    auto cmp = [this](const Term& a, const Term& b) {
      return r_->compare(a.e, a.deg, b.e, b.deg) > 0;
    };
    std::sort(t_.begin(), t_.end(), cmp);
    const auto& fld = r_->field();
    size_t out = 0;
    for (size_t i = 0; i < t_.size();) {
      Term cur = t_[i++];
      while (i < t_.size() && t_[i].e == cur.e) cur.c = fld.add(cur.c, t_[i++].c);
      if (!F::is_zero(cur.c)) t_[out++] = cur;
    }
    t_.resize(out);
  }

  const Ring<F>* r_ = nullptr;
  std::vector<Term> t_;
};

using PolyFp = Poly<Fp>;
using PolyQ = Poly<Rat>;

}  // namespace linecong
