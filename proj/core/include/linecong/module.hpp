#pragma once

#include <set>
#include <vector>

#include "linecong/groebner.hpp"

namespace linecong {

/// A homogeneous matrix between graded free modules: entry (i,j) has degree
/// col_twists[j] - row_twists[i]. Columns are the images of the source basis.
template <class F>
struct GradedMatrix {
  const Ring<F>* ring = nullptr;
  std::vector<int> row_twists;
  std::vector<int> col_twists;
  std::vector<std::vector<Poly<F>>> cols;  // cols[j][i]

  int rows() const { return int(row_twists.size()); }
  int ncols() const { return int(col_twists.size()); }
  const Poly<F>& entry(int i, int j) const { return cols[j][i]; }
};

namespace detail {

/// Free-module monomial: a position plus a ring monomial. The order makes
/// every term in a position below `split` dominate every term at or above it
/// (the elimination used for syzygy and quotient extraction); within a block,
/// twisted degree, then the ring order, then the position decide.
template <class F>
struct MTerm {
  int pos;
  Exps e;
  uint32_t tdeg;  // monomial degree + position twist
  typename F::Elem c;
};

template <class F>
class ModFrame {
 public:
  ModFrame(const Ring<F>* r, std::vector<int> twists, int split)
      : r_(r), twists_(std::move(twists)), split_(split) {}

  const Ring<F>* ring() const { return r_; }
  int positions() const { return int(twists_.size()); }
  int split() const { return split_; }
  int twist(int pos) const { return twists_[pos]; }

  int cmp(const MTerm<F>& a, const MTerm<F>& b) const {
    int ab = a.pos < split_ ? 0 : 1;
    int bb = b.pos < split_ ? 0 : 1;
    if (ab != bb) return ab < bb ? 1 : -1;
    if (a.tdeg != b.tdeg) return a.tdeg > b.tdeg ? 1 : -1;
    // monomials first (term over position); at equal twisted degree and
    // equal monomials the positions tie-break. Comparing the raw monomials
    // graded by their true degrees keeps the order multiplicative.
    if (int c = r_->compare(a.e, r_->deg(a.e), b.e, r_->deg(b.e))) return c;
    if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
    return 0;
  }

 private:
  const Ring<F>* r_;
  std::vector<int> twists_;
  int split_;
};

/// Element of a graded free module, terms sorted descending.
template <class F>
class ModVec {
 public:
  using C = typename F::Elem;

  ModVec() = default;

  static ModVec from_terms(const ModFrame<F>& fr, std::vector<MTerm<F>>&& ts) {
    ModVec v;
    v.t_ = std::move(ts);
    std::sort(v.t_.begin(), v.t_.end(),
              [&fr](const MTerm<F>& a, const MTerm<F>& b) { return fr.cmp(a, b) > 0; });
    const auto& fld = fr.ring()->field();
    size_t out = 0;
    for (size_t i = 0; i < v.t_.size();) {
      MTerm<F> cur = v.t_[i++];
      while (i < v.t_.size() && v.t_[i].pos == cur.pos && v.t_[i].e == cur.e)
        cur.c = fld.add(cur.c, v.t_[i++].c);
      if (!F::is_zero(cur.c)) v.t_[out++] = cur;
    }
    v.t_.resize(out);
    return v;
  }

  bool is_zero() const { return t_.empty(); }
  const std::vector<MTerm<F>>& terms() const { return t_; }
  const MTerm<F>& lt() const { return t_.front(); }

  /// Highest twisted degree among terms (the degree, when homogeneous).
  uint32_t degree() const {
    uint32_t d = 0;
    for (const auto& t : t_) d = std::max(d, t.tdeg);
    return d;
  }

  ModVec monic(const F& fld) const {
    ModVec v(*this);
    C inv = fld.inv(v.t_.front().c);
    for (auto& t : v.t_) t.c = fld.mul(t.c, inv);
    return v;
  }

  /// Component at `pos` as a ring polynomial.
  Poly<F> component(const Ring<F>* r, int pos) const {
    std::vector<typename Poly<F>::Term> ts;
    for (const auto& t : t_)
      if (t.pos == pos) ts.push_back({t.e, r->deg(t.e), t.c});
    return Poly<F>::from_terms(r, std::move(ts));
  }

  bool value_free(int split) const {
    for (const auto& t : t_)
      if (t.pos < split) return false;
    return true;
  }

  std::vector<MTerm<F>>& mutable_terms() { return t_; }

 private:
  std::vector<MTerm<F>> t_;
};

/// Geobucket over module terms.
template <class F>
class ModBucket {
 public:
  using C = typename F::Elem;

  explicit ModBucket(const ModFrame<F>& fr) : fr_(&fr) {}

  void add(const ModVec<F>& v, size_t skip_leading = 0) {
    const auto& ts = v.terms();
    if (ts.size() <= skip_leading) return;
    std::vector<MTerm<F>> asc(ts.rbegin(), ts.rend() - skip_leading);
    add_terms(std::move(asc));
  }

  void add_scaled(const ModVec<F>& v, const Exps& shift, C scale, size_t skip_leading) {
    const auto& fld = fr_->ring()->field();
    const auto& ts = v.terms();
    if (ts.size() <= skip_leading) return;
    uint32_t ds = fr_->ring()->deg(shift);
    std::vector<MTerm<F>> asc;
    asc.reserve(ts.size() - skip_leading);
    for (size_t i = ts.size(); i-- > skip_leading;) {
      C c = fld.mul(ts[i].c, scale);
      if (F::is_zero(c)) continue;
      asc.push_back({ts[i].pos, RingBase::mul(ts[i].e, shift), ts[i].tdeg + ds, c});
    }
    add_terms(std::move(asc));
  }

  bool pop_lt(MTerm<F>& out) {
    const auto& fld = fr_->ring()->field();
    for (;;) {
      int best = -1;
      for (int i = 0; i < int(b_.size()); ++i) {
        if (b_[i].empty()) continue;
        if (best < 0 || fr_->cmp(b_[i].back(), b_[best].back()) > 0) best = i;
      }
      if (best < 0) return false;
      MTerm<F> t = b_[best].back();
      b_[best].pop_back();
      for (auto& b : b_) {
        while (!b.empty() && b.back().pos == t.pos && b.back().e == t.e) {
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

  void add_terms(std::vector<MTerm<F>>&& v) {
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

  std::vector<MTerm<F>> merge(const std::vector<MTerm<F>>& a, const std::vector<MTerm<F>>& b) const {
    const auto& fld = fr_->ring()->field();
    std::vector<MTerm<F>> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      int c = fr_->cmp(a[i], b[j]);
      if (c < 0) {
        out.push_back(a[i++]);
      } else if (c > 0) {
        out.push_back(b[j++]);
      } else {
        auto s = fld.add(a[i].c, b[j].c);
        if (!F::is_zero(s)) out.push_back({a[i].pos, a[i].e, a[i].tdeg, s});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
  }

  const ModFrame<F>* fr_;
  std::vector<std::vector<MTerm<F>>> b_;
};

/// Buchberger over a graded free module. Pairs form only between elements
/// whose leading terms share a position; the chain criterion applies, the
/// coprime criterion does not (it is unsound for modules).
template <class F>
class ModuleBuchberger {
 public:
  /// With `generate_only`, elements whose leading term sits in the tag block
  /// create no S-pairs: they are collected (and still reduce later input),
  /// which by Schreyer's theorem is enough to *generate* the tag-block
  /// intersection. Full membership tests need the default, complete mode.
  explicit ModuleBuchberger(const ModFrame<F>& fr, bool generate_only = false)
      : fr_(fr), generate_only_(generate_only), pairs_(PairCmp{this}) {}

  const ModFrame<F>& frame() const { return fr_; }
  const std::vector<ModVec<F>>& basis() const { return basis_; }

  /// Full reduction against the current basis.
  ModVec<F> reduce(const ModVec<F>& v, uint32_t* sugar = nullptr) const {
    ModBucket<F> bucket(fr_);
    bucket.add(v);
    return reduce_bucket(bucket, sugar);
  }

  /// Reduce and, if nonzero, insert and complete all pending pairs.
  bool add_and_complete(const ModVec<F>& v) {
    uint32_t sugar = v.degree();
    ModVec<F> rem = reduce(v, &sugar);
    if (rem.is_zero()) return false;
    insert(rem.monic(fr_.ring()->field()), sugar);
    complete();
    return true;
  }

  void complete() {
    const GBCaps& caps = gb_caps();
    const auto& fld = fr_.ring()->field();
    while (!pairs_.empty()) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (++processed_ > caps.max_pairs)
        throw ResourceError("module S-pair cap exceeded at pair (" + std::to_string(p.i) + "," +
                            std::to_string(p.j) + ")");
      if (p.sugar > caps.max_degree)
        throw ResourceError("module degree cap exceeded at pair (" + std::to_string(p.i) + "," +
                            std::to_string(p.j) + "), sugar " + std::to_string(p.sugar));
      ModBucket<F> bucket(fr_);
      const ModVec<F>& f = basis_[p.i];
      const ModVec<F>& g = basis_[p.j];
      bucket.add_scaled(f, RingBase::quot(p.lcm, f.lt().e), fld.one(), 1);
      bucket.add_scaled(g, RingBase::quot(p.lcm, g.lt().e), fld.neg(fld.one()), 1);
      uint32_t sugar = p.sugar;
      ModVec<F> rem = reduce_bucket(bucket, &sugar);
      if (!rem.is_zero()) insert(rem.monic(fld), sugar);
    }
  }

 private:
  struct Pair {
    uint32_t sugar;
    uint32_t lcm_deg;
    Exps lcm;
    int pos;
    int i, j;
  };
  struct PairCmp {
    const ModuleBuchberger* self;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
      if (int c = self->fr_.ring()->compare(a.lcm, a.lcm_deg, b.lcm, b.lcm_deg)) return c < 0;
      if (a.pos != b.pos) return a.pos < b.pos;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  ModVec<F> reduce_bucket(ModBucket<F>& bucket, uint32_t* sugar) const {
    const auto& fld = fr_.ring()->field();
    std::vector<MTerm<F>> out;
    MTerm<F> t;
    while (bucket.pop_lt(t)) {
      int gi = find_divisor(t);
      if (gi < 0) {
        out.push_back(t);
        continue;
      }
      const ModVec<F>& g = basis_[gi];
      Exps shift = RingBase::quot(t.e, g.lt().e);
      bucket.add_scaled(g, shift, fld.neg(t.c), 1);
      if (sugar) *sugar = std::max(*sugar, sugars_[gi] + fr_.ring()->deg(shift));
    }
    ModVec<F> v;
    v.mutable_terms() = std::move(out);
    return v;
  }

  int find_divisor(const MTerm<F>& t) const {
    if (t.pos >= int(index_.size())) return -1;
    return index_[t.pos].find(t.e, t.tdeg, RingBase::support_mask(t.e));
  }

  void insert(const ModVec<F>& g, uint32_t sugar) {
    int t = int(basis_.size());
    basis_.push_back(g);
    sugars_.push_back(std::max(sugar, g.degree()));
    int pos = g.lt().pos;
    if (pos >= int(index_.size())) index_.resize(pos + 1);
    index_[pos].add(t, g.lt().e, g.lt().tdeg);
    if (generate_only_ && pos >= fr_.split()) return;  // syzygy found: no pairs

    const Exps& T = g.lt().e;
    // chain criterion on old pairs with the same leading position
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      if (p.pos == pos && RingBase::divides(T, p.lcm)) {
        Exps lit = RingBase::lcm(basis_[p.i].lt().e, T);
        Exps ljt = RingBase::lcm(basis_[p.j].lt().e, T);
        if (lit != p.lcm && ljt != p.lcm) {
          it = pairs_.erase(it);
          continue;
        }
      }
      ++it;
    }

    struct Cand {
      Exps lcm;
      uint32_t deg;
      int i;
      bool dead = false;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < t; ++i) {
      if (basis_[i].lt().pos != pos) continue;
      Exps l = RingBase::lcm(basis_[i].lt().e, T);
      cands.push_back({l, fr_.ring()->deg(l), i});
    }
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
    for (size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].dead) continue;
      for (size_t b = a + 1; b < cands.size(); ++b) {
        if (!cands[b].dead && cands[b].deg == cands[a].deg && cands[b].lcm == cands[a].lcm)
          cands[b].dead = true;
      }
    }
    uint32_t ltdeg_g = fr_.ring()->deg(T);
    for (const auto& c : cands) {
      if (c.dead) continue;
      uint32_t ltdeg_i = fr_.ring()->deg(basis_[c.i].lt().e);
      uint32_t sug = std::max(sugars_[c.i] + c.deg - ltdeg_i, sugars_[t] + c.deg - ltdeg_g);
      pairs_.insert({sug, c.deg, c.lcm, pos, c.i, t});
    }
  }

  ModFrame<F> fr_;
  bool generate_only_ = false;
  std::vector<ModVec<F>> basis_;
  std::vector<uint32_t> sugars_;
  std::vector<ReducerIndex> index_;  // one per leading position
  std::set<Pair, PairCmp> pairs_;
  uint64_t processed_ = 0;
};

/// Build the tagged element (column j of M, unit tag at split + j).
template <class F>
ModVec<F> tagged_column(const ModFrame<F>& fr, const GradedMatrix<F>& m, int j) {
  const Ring<F>* r = m.ring;
  std::vector<MTerm<F>> ts;
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& t : m.cols[j][i].terms())
      ts.push_back({i, t.e, t.deg + uint32_t(m.row_twists[i]), t.c});
  ts.push_back({m.rows() + j, RingBase::one(), uint32_t(m.col_twists[j]), r->field().one()});
  return ModVec<F>::from_terms(fr, std::move(ts));
}

}  // namespace detail

/// Generators of the syzygy module of the columns of M: the kernel of
/// F_source -> F_target. Returned as a graded matrix whose rows are indexed
/// by the columns of M. The generating set is not yet minimal.
template <class F>
GradedMatrix<F> syzygy_matrix(const GradedMatrix<F>& m) {
  const Ring<F>* r = m.ring;
  std::vector<int> twists(m.row_twists);
  for (int j = 0; j < m.ncols(); ++j) twists.push_back(m.col_twists[j]);
  detail::ModFrame<F> fr(r, twists, m.rows());
  detail::ModuleBuchberger<F> alg(fr, /*generate_only=*/true);
  for (int j = 0; j < m.ncols(); ++j) alg.add_and_complete(detail::tagged_column(fr, m, j));

  GradedMatrix<F> syz;
  syz.ring = r;
  syz.row_twists = m.col_twists;
  for (const auto& v : alg.basis()) {
    if (!v.value_free(m.rows())) continue;
    std::vector<Poly<F>> col(m.ncols(), Poly<F>::zero(r));
    int deg = -1;
    for (int j = 0; j < m.ncols(); ++j) {
      col[j] = v.component(r, m.rows() + j);
      if (!col[j].is_zero()) deg = int(col[j].degree()) + m.col_twists[j];
    }
    syz.col_twists.push_back(deg);
    syz.cols.push_back(std::move(col));
  }
  return syz;
}

/// Ideal quotient I : f via tag elimination in R^2.
template <class F>
std::vector<Poly<F>> ideal_quotient_single(const Ring<F>* r, const std::vector<Poly<F>>& gens,
                                           const Poly<F>& f) {
  if (f.is_zero()) throw UsageError("quotient by the zero polynomial");
  detail::ModFrame<F> fr(r, {0, int(f.degree())}, 1);
  detail::ModuleBuchberger<F> alg(fr, /*generate_only=*/true);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    std::vector<detail::MTerm<F>> ts;
    for (const auto& t : g.terms()) ts.push_back({0, t.e, t.deg, t.c});
    alg.add_and_complete(detail::ModVec<F>::from_terms(fr, std::move(ts)));
  }
  {
    std::vector<detail::MTerm<F>> ts;
    for (const auto& t : f.terms()) ts.push_back({0, t.e, t.deg, t.c});
    ts.push_back({1, RingBase::one(), uint32_t(f.degree()), r->field().one()});
    alg.add_and_complete(detail::ModVec<F>::from_terms(fr, std::move(ts)));
  }
  std::vector<Poly<F>> out;
  for (const auto& v : alg.basis())
    if (v.value_free(1)) out.push_back(v.component(r, 1));
  return out;
}

/// Intersection of several ideals via the diagonal-tag elimination in R^(k+1).
template <class F>
std::vector<Poly<F>> ideal_intersection_many(const Ring<F>* r,
                                             const std::vector<std::vector<Poly<F>>>& ideals) {
  int k = int(ideals.size());
  if (k == 0) throw UsageError("intersection of an empty family");
  if (k == 1) return ideals[0];
  std::vector<int> twists(k + 1, 0);
  detail::ModFrame<F> fr(r, twists, k);
  detail::ModuleBuchberger<F> alg(fr, /*generate_only=*/true);
  // diagonal first: it is the interesting generator
  {
    std::vector<detail::MTerm<F>> ts;
    for (int s = 0; s <= k; ++s) ts.push_back({s, RingBase::one(), 0, r->field().one()});
    alg.add_and_complete(detail::ModVec<F>::from_terms(fr, std::move(ts)));
  }
  for (int s = 0; s < k; ++s)
    for (const auto& g : ideals[s]) {
      if (g.is_zero()) continue;
      std::vector<detail::MTerm<F>> ts;
      for (const auto& t : g.terms()) ts.push_back({s, t.e, t.deg, t.c});
      alg.add_and_complete(detail::ModVec<F>::from_terms(fr, std::move(ts)));
    }
  std::vector<Poly<F>> out;
  for (const auto& v : alg.basis())
    if (v.value_free(k)) out.push_back(v.component(r, k));
  return out;
}

}  // namespace linecong
