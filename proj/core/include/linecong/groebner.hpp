#pragma once

#include <cstdlib>
#include <set>
#include <vector>

#include "linecong/poly.hpp"

namespace linecong {

/// Resource caps for basis computations. Exceeding a cap raises ResourceError
/// naming the offending pair; it never yields a truncated (wrong) answer.
struct GBCaps {
  uint32_t max_degree = 256;     ///< cap on the sugar degree of a processed pair
  uint64_t max_pairs = 2000000;  ///< cap on the number of processed S-pairs

  static GBCaps from_env() {
    GBCaps c;
    if (const char* s = std::getenv("LINECONG_MAX_DEGREE")) c.max_degree = uint32_t(atol(s));
    if (const char* s = std::getenv("LINECONG_MAX_PAIRS")) c.max_pairs = uint64_t(atoll(s));
    return c;
  }
};

inline const GBCaps& gb_caps() {
  static GBCaps caps = GBCaps::from_env();
  return caps;
}

namespace detail {

/// Geobucket accumulator for long chains of poly +/- (monomial * poly).
/// Buckets hold terms in ascending order so the leading term pops from the
/// back in O(1).
template <class F>
class Geobucket {
 public:
  using Term = typename Poly<F>::Term;
  using C = typename F::Elem;

  explicit Geobucket(const Ring<F>* r) : r_(r) {}

  void add_poly(const Poly<F>& p, size_t skip_leading = 0) {
    const auto& ts = p.terms();
    if (ts.size() <= skip_leading) return;
    std::vector<Term> v(ts.rbegin(), ts.rend() - skip_leading);  // ascending
    add_terms(std::move(v));
  }

  /// Add  scale * x^shift * p,  skipping the first `skip_leading` terms of p.
  void add_scaled(const Poly<F>& p, const Exps& shift, C scale, size_t skip_leading) {
    const auto& fld = r_->field();
    const auto& ts = p.terms();
    if (ts.size() <= skip_leading) return;
    uint32_t dshift = r_->deg(shift);
    std::vector<Term> v;
    v.reserve(ts.size() - skip_leading);
    for (size_t i = ts.size(); i-- > skip_leading;) {  // ascending output
      C c = fld.mul(ts[i].c, scale);
      if (F::is_zero(c)) continue;
      v.push_back({RingBase::mul(ts[i].e, shift), ts[i].deg + dshift, c});
    }
    add_terms(std::move(v));
  }

  /// Extract the current leading term; returns false when the bucket is zero.
  bool pop_lt(Term& out) {
    const auto& fld = r_->field();
    for (;;) {
      int best = -1;
      for (int i = 0; i < int(b_.size()); ++i) {
        if (b_[i].empty()) continue;
        if (best < 0 ||
            r_->compare(b_[i].back().e, b_[i].back().deg, b_[best].back().e,
                        b_[best].back().deg) > 0)
          best = i;
      }
      if (best < 0) return false;
      Term t = b_[best].back();
      b_[best].pop_back();
      // combine equal leading monomials across buckets
      for (auto& b : b_) {
        while (!b.empty() && b.back().e == t.e) {
          t.c = fld.add(t.c, b.back().c);
          b.pop_back();
        }
      }
      if (!F::is_zero(t.c)) {
        out = t;
        return true;
      }
    }
  }

 private:
  static size_t cap(size_t i) { return size_t(4) << (2 * i); }

  void add_terms(std::vector<Term>&& v) {
    if (v.empty()) return;
    size_t i = 0;
    while (cap(i) < v.size()) ++i;
    if (i >= b_.size()) b_.resize(i + 1);
    for (;;) {
      if (b_[i].empty()) {
        b_[i] = std::move(v);
      } else {
        b_[i] = merge(b_[i], v);
      }
      if (b_[i].size() <= cap(i)) return;
      v = std::move(b_[i]);
      b_[i].clear();
      ++i;
      if (i >= b_.size()) b_.resize(i + 1);
    }
  }

  std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b) const {
    const auto& fld = r_->field();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      int c = r_->compare(a[i].e, a[i].deg, b[j].e, b[j].deg);
      if (c < 0) {
        out.push_back(a[i++]);
      } else if (c > 0) {
        out.push_back(b[j++]);
      } else {
        C s = fld.add(a[i].c, b[j].c);
        if (!F::is_zero(s)) out.push_back({a[i].e, a[i].deg, s});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
  }

  const Ring<F>* r_;
  std::vector<std::vector<Term>> b_;
};

/// Divisibility index over leading terms, bucketed by leading degree so the
/// search prefers short low-degree reducers and stops early.
class ReducerIndex {
 public:
  void clear() { by_deg_.clear(); }

  void add(int poly_idx, const Exps& lt, uint32_t deg) {
    if (by_deg_.size() <= deg) by_deg_.resize(deg + 1);
    by_deg_[deg].push_back({RingBase::support_mask(lt), lt, poly_idx});
  }

  int find(const Exps& e, uint32_t deg, uint32_t mask) const {
    if (by_deg_.empty()) return -1;
    uint32_t top = std::min<uint32_t>(deg, uint32_t(by_deg_.size() - 1));
    for (uint32_t d = 0; d <= top; ++d) {
      for (const auto& ent : by_deg_[d]) {
        if ((ent.mask & ~mask) == 0 && RingBase::divides(ent.lt, e)) return ent.idx;
      }
    }
    return -1;
  }

 private:
  struct Entry {
    uint32_t mask;
    Exps lt;
    int idx;
  };
  std::vector<std::vector<Entry>> by_deg_;
};

/// Full reduction of a geobucket against monic reducers; returns the
/// remainder and accumulates the sugar degree of the reduction.
template <class F>
Poly<F> reduce_bucket(const Ring<F>* r, const std::vector<Poly<F>>& polys,
                      const std::vector<uint32_t>& sugars, const ReducerIndex& index,
                      Geobucket<F>& bucket, uint32_t* sugar) {
  const auto& fld = r->field();
  using Term = typename Poly<F>::Term;
  std::vector<Term> out;
  Term t;
  while (bucket.pop_lt(t)) {
    int gi = index.find(t.e, t.deg, RingBase::support_mask(t.e));
    if (gi < 0) {
      out.push_back(t);
      continue;
    }
    const Poly<F>& g = polys[gi];
    Exps shift = RingBase::quot(t.e, g.lt().e);
    bucket.add_scaled(g, shift, fld.neg(t.c), 1);
    if (sugar && !sugars.empty()) *sugar = std::max(*sugar, sugars[gi] + r->deg(shift));
  }
  return Poly<F>::from_terms(r, std::move(out));
}

}  // namespace detail

/// A reduced Groebner basis: monic elements, no term divisible by another
/// leading term, sorted ascending by leading monomial. Canonical for the
/// (ideal, order, characteristic) triple.
template <class F>
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(const Ring<F>* r, std::vector<Poly<F>> polys) : r_(r), g_(std::move(polys)) {
    for (size_t i = 0; i < g_.size(); ++i) index_.add(int(i), g_[i].lt().e, g_[i].lt().deg);
  }

  const Ring<F>* ring() const { return r_; }
  const std::vector<Poly<F>>& polys() const { return g_; }
  size_t size() const { return g_.size(); }
  bool is_unit() const { return g_.size() == 1 && g_[0].is_constant() && !g_[0].is_zero(); }
  bool is_zero() const { return g_.empty(); }

  bool operator==(const GroebnerBasis& o) const { return r_ == o.r_ && g_ == o.g_; }
  bool operator!=(const GroebnerBasis& o) const { return !(*this == o); }

  /// Fully reduced remainder of f modulo this basis; zero iff f is a member.
  Poly<F> reduce(const Poly<F>& f) const {
    if (f.ring() != r_) throw UsageError("normal form: polynomial from a different ring");
    detail::Geobucket<F> bucket(r_);
    bucket.add_poly(f);
    return detail::reduce_bucket(r_, g_, {}, index_, bucket, nullptr);
  }

  bool contains(const Poly<F>& f) const { return reduce(f).is_zero(); }

 private:
  const Ring<F>* r_ = nullptr;
  std::vector<Poly<F>> g_;
  detail::ReducerIndex index_;
};

namespace detail {

struct SPair {
  uint32_t sugar;
  uint32_t lcm_deg;
  Exps lcm;
  int i, j;
};

template <class F>
struct SPairCmp {
  const Ring<F>* r;
  bool graded;
  bool operator()(const SPair& a, const SPair& b) const {
    if (graded && a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
    if (int c = r->compare(a.lcm, a.lcm_deg, b.lcm, b.lcm_deg)) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

/// Buchberger with Gebauer-Moeller pair elimination, normal selection with
/// sugar, geobucket reduction. `use_coprime_criterion` must stay off when the
/// caller tracks module tags (see module.hpp); for plain ideals it is sound.
template <class F>
class Buchberger {
 public:
  explicit Buchberger(const Ring<F>* r, bool use_coprime_criterion = true)
      : r_(r),
        coprime_ok_(use_coprime_criterion),
        graded_(r->order().kind != OrderKind::Lex),
        pairs_(SPairCmp<F>{r, r->order().kind != OrderKind::Lex}) {}

  void add_generators(const std::vector<Poly<F>>& gens) {
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      if (g.ring() != r_) throw UsageError("generator from a different ring");
      pending_.push_back(g.monic());
    }
    std::sort(pending_.begin(), pending_.end(), [this](const Poly<F>& a, const Poly<F>& b) {
      return r_->compare(a.lt().e, a.lt().deg, b.lt().e, b.lt().deg) < 0;
    });
  }

  std::vector<Poly<F>> run() {
    const GBCaps& caps = gb_caps();
    const auto& fld = r_->field();
    for (const auto& g : pending_) {
      // interreduce the inputs as they enter
      Geobucket<F> bucket(r_);
      bucket.add_poly(g);
      uint32_t sugar = g.degree();
      Poly<F> rem = reduce_bucket(r_, basis_, sugars_, index_, bucket, &sugar);
      if (!rem.is_zero()) insert(rem.monic(), sugar);
    }
    pending_.clear();
    uint64_t processed = 0;
    while (!pairs_.empty()) {
      SPair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (++processed > caps.max_pairs)
        throw ResourceError("S-pair cap exceeded at pair (" + std::to_string(p.i) + "," +
                            std::to_string(p.j) + "), lcm degree " + std::to_string(p.lcm_deg));
      uint32_t effective = graded_ ? p.sugar : p.lcm_deg;
      if (effective > caps.max_degree)
        throw ResourceError("degree cap exceeded at pair (" + std::to_string(p.i) + "," +
                            std::to_string(p.j) + "), degree " + std::to_string(effective) +
                            " > " + std::to_string(caps.max_degree));
      Geobucket<F> bucket(r_);
      const Poly<F>& f = basis_[p.i];
      const Poly<F>& g = basis_[p.j];
      // leading terms cancel by construction; feed tails only
      bucket.add_scaled(f, RingBase::quot(p.lcm, f.lt().e), fld.one(), 1);
      bucket.add_scaled(g, RingBase::quot(p.lcm, g.lt().e), fld.neg(fld.one()), 1);
      uint32_t sugar = p.sugar;
      Poly<F> rem = reduce_bucket(r_, basis_, sugars_, index_, bucket, &sugar);
      if (!rem.is_zero()) insert(rem.monic(), sugar);
    }
    return interreduce();
  }

 private:
  std::vector<Poly<F>> interreduce() {
    std::vector<size_t> idx(basis_.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [this](size_t a, size_t b) {
      return r_->compare(basis_[a].lt().e, basis_[a].lt().deg, basis_[b].lt().e,
                         basis_[b].lt().deg) < 0;
    });
    std::vector<Poly<F>> minimal;
    for (size_t k : idx) {
      bool redundant = false;
      for (const auto& h : minimal)
        if (RingBase::divides(h.lt().e, basis_[k].lt().e)) {
          redundant = true;
          break;
        }
      if (!redundant) minimal.push_back(basis_[k]);
    }
    // tails cannot be divisible by the element's own leading term, so one
    // index over the whole minimal set serves every tail reduction
    ReducerIndex ix;
    for (size_t i = 0; i < minimal.size(); ++i) ix.add(int(i), minimal[i].lt().e, minimal[i].lt().deg);
    std::vector<Poly<F>> out;
    out.reserve(minimal.size());
    for (const auto& g : minimal) {
      Geobucket<F> bucket(r_);
      bucket.add_poly(g, 1);
      Poly<F> tail = reduce_bucket(r_, minimal, {}, ix, bucket, nullptr);
      out.push_back((Poly<F>::monomial(r_, g.lt().e, g.lt().c) + tail).monic());
    }
    return out;  // already ascending by leading term
  }

  void insert(const Poly<F>& g, uint32_t sugar) {
    int t = int(basis_.size());
    basis_.push_back(g);
    sugars_.push_back(std::max(sugar, g.degree()));
    index_.add(t, g.lt().e, g.lt().deg);
    const Exps& T = g.lt().e;

    // chain criterion on old pairs
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const SPair& p = *it;
      if (RingBase::divides(T, p.lcm)) {
        Exps lit = RingBase::lcm(basis_[p.i].lt().e, T);
        Exps ljt = RingBase::lcm(basis_[p.j].lt().e, T);
        if (lit != p.lcm && ljt != p.lcm) {
          it = pairs_.erase(it);
          continue;
        }
      }
      ++it;
    }

    // candidate pairs (i, t)
    struct Cand {
      Exps lcm;
      uint32_t deg;
      int i;
      bool coprime;
      bool dead = false;
    };
    std::vector<Cand> cands;
    cands.reserve(t);
    for (int i = 0; i < t; ++i) {
      Exps l = RingBase::lcm(basis_[i].lt().e, T);
      cands.push_back({l, r_->deg(l), i, RingBase::coprime(basis_[i].lt().e, T)});
    }
    // M criterion: drop candidates whose lcm is a proper multiple of another
    for (auto& a : cands) {
      if (a.dead) continue;
      for (const auto& b : cands) {
        if (&a == &b || b.dead) continue;
        if (b.deg <= a.deg && b.lcm != a.lcm && RingBase::divides(b.lcm, a.lcm)) {
          a.dead = true;
          break;
        }
      }
    }
    // F criterion: among equal lcms keep one; a class containing a coprime
    // pair dies entirely (only when the first criterion is sound)
    for (size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].dead) continue;
      bool coprime_class = coprime_ok_ && cands[a].coprime;
      for (size_t b = a + 1; b < cands.size(); ++b) {
        if (cands[b].dead || cands[b].deg != cands[a].deg || cands[b].lcm != cands[a].lcm)
          continue;
        cands[b].dead = true;
        coprime_class = coprime_class || (coprime_ok_ && cands[b].coprime);
      }
      if (coprime_class) cands[a].dead = true;
    }
    for (const auto& c : cands) {
      if (c.dead) continue;
      if (coprime_ok_ && c.coprime) continue;  // Buchberger's first criterion
      uint32_t sug = std::max(sugars_[c.i] + c.deg - basis_[c.i].lt().deg,
                              sugars_[t] + c.deg - g.lt().deg);
      pairs_.insert({sug, c.deg, c.lcm, c.i, t});
    }
  }

  const Ring<F>* r_;
  bool coprime_ok_;
  bool graded_;
  std::vector<Poly<F>> pending_;
  std::vector<Poly<F>> basis_;
  std::vector<uint32_t> sugars_;
  ReducerIndex index_;
  std::set<SPair, SPairCmp<F>> pairs_;
};

}  // namespace detail

/// Reduced Groebner basis of the given generators in the ring's order.
template <class F>
GroebnerBasis<F> groebner(const Ring<F>* r, const std::vector<Poly<F>>& gens) {
  detail::Buchberger<F> alg(r);
  alg.add_generators(gens);
  return GroebnerBasis<F>(r, alg.run());
}

/// Remainder of f on division by a reduced basis: no term of the result is
/// divisible by any leading term; zero iff f lies in the ideal.
template <class F>
Poly<F> normal_form(const Poly<F>& f, const GroebnerBasis<F>& gb) {
  return gb.reduce(f);
}

}  // namespace linecong
