#pragma once

#include <memory>

#include "linecong/hilbert.hpp"
#include "linecong/module.hpp"
#include "linecong/rng.hpp"

namespace linecong {

/// Finitely generated ideal with a lazily cached reduced Groebner basis.
/// Values are immutable; copies share the cache.
template <class F>
class Ideal {
 public:
  Ideal() = default;
  Ideal(const Ring<F>* r, std::vector<Poly<F>> gens) : r_(r), cache_(new Cache) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      if (g.ring() != r) throw UsageError("ideal generator from a different ring");
      gens_.push_back(std::move(g));
    }
  }

  const Ring<F>* ring() const { return r_; }
  const std::vector<Poly<F>>& gens() const { return gens_; }

  const GroebnerBasis<F>& groebner() const {
    if (!cache_->gb) cache_->gb.reset(new GroebnerBasis<F>(linecong::groebner(r_, gens_)));
    return *cache_->gb;
  }

  bool has_cached_groebner() const { return bool(cache_->gb); }

  /// Replace the generators by the reduced basis (canonical presentation).
  Ideal canonical() const {
    Ideal out(r_, groebner().polys());
    out.cache_->gb = cache_->gb;
    return out;
  }

  bool contains(const Poly<F>& f) const { return groebner().contains(f); }
  bool contains(const Ideal& other) const {
    for (const auto& g : other.gens_)
      if (!contains(g)) return false;
    return true;
  }
  bool is_unit() const { return groebner().is_unit(); }
  bool is_zero() const { return groebner().is_zero(); }

  /// Ideal equality: identical reduced bases.
  bool equals(const Ideal& o) const {
    if (r_ != o.r_) return false;
    return groebner() == o.groebner();
  }

  /// Dimension, degree, Hilbert data (homogeneous ideals, standard grading).
  const IdealInvariants& invariants() const {
    if (!cache_->inv) {
      if (r_->order().kind == OrderKind::GrevLex) {
        cache_->inv.reset(new IdealInvariants(invariants_from_groebner(groebner())));
      } else {
        const Ring<F>* twin = Ring<F>::get(r_->field(), r_->names(), Order::grevlex(),
                                           r_->weights());
        std::vector<int> id_map(r_->nvars());
        for (int i = 0; i < r_->nvars(); ++i) id_map[i] = i;
        std::vector<Poly<F>> mapped;
        for (const auto& g : gens_) mapped.push_back(g.rename(twin, id_map));
        cache_->inv.reset(new IdealInvariants(invariants_from_groebner(groebner(twin, mapped))));
      }
    }
    return *cache_->inv;
  }

 private:
  static GroebnerBasis<F> groebner(const Ring<F>* r, const std::vector<Poly<F>>& g) {
    return linecong::groebner(r, g);
  }

  struct Cache {
    std::unique_ptr<GroebnerBasis<F>> gb;
    std::unique_ptr<IdealInvariants> inv;
  };

  const Ring<F>* r_ = nullptr;
  std::vector<Poly<F>> gens_;
  std::shared_ptr<Cache> cache_;
};

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  if (a.ring() != b.ring()) throw UsageError("ideal sum: different rings");
  std::vector<Poly<F>> g = a.gens();
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return Ideal<F>(a.ring(), std::move(g));
}

template <class F>
Ideal<F> ideal_product(const Ideal<F>& a, const Ideal<F>& b) {
  if (a.ring() != b.ring()) throw UsageError("ideal product: different rings");
  std::vector<Poly<F>> g;
  for (const auto& x : a.gens())
    for (const auto& y : b.gens()) g.push_back(x * y);
  return Ideal<F>(a.ring(), std::move(g));
}

namespace detail {

/// A variable name not used by the ring, grammar-compatible.
inline std::string fresh_var_name(const RingBase& r) {
  for (int k = 0;; ++k) {
    std::string nm = "w" + std::to_string(k);
    if (r.var_index(nm) < 0) return nm;
  }
}

}  // namespace detail

/// Intersection via the one-auxiliary-variable trick: eliminate t from
/// t*A + (1-t)*B.
template <class F>
Ideal<F> ideal_intersect(const Ideal<F>& a, const Ideal<F>& b) {
  const Ring<F>* r = a.ring();
  if (r != b.ring()) throw UsageError("ideal intersection: different rings");
  std::vector<std::string> names = {detail::fresh_var_name(*r)};
  for (const auto& nm : r->names()) names.push_back(nm);
  std::vector<uint32_t> weights = {1};
  for (auto w : r->weights()) weights.push_back(w);
  const Ring<F>* ext = Ring<F>::get(r->field(), names, Order::elim(1), weights);
  std::vector<int> up(r->nvars());
  for (int i = 0; i < r->nvars(); ++i) up[i] = i + 1;
  Poly<F> t = Poly<F>::variable(ext, 0);
  Poly<F> one_minus_t = Poly<F>::from_int(ext, 1) - t;
  std::vector<Poly<F>> gens;
  for (const auto& g : a.gens()) gens.push_back(t * g.rename(ext, up));
  for (const auto& g : b.gens()) gens.push_back(one_minus_t * g.rename(ext, up));
  auto gb = groebner(ext, gens);
  std::vector<int> down(ext->nvars(), -1);
  for (int i = 0; i < r->nvars(); ++i) down[i + 1] = i;
  std::vector<Poly<F>> out;
  for (const auto& g : gb.polys())
    if (ext->front_free(g.lt().e)) out.push_back(g.rename(r, down));
  return Ideal<F>(r, std::move(out));
}

/// Intersection of many ideals at once (module route; used by quotients and
/// saturations where the auxiliary-variable trick would be wasteful).
/// Unit factors, duplicates and factors absorbed by a smaller one are
/// filtered first; the module computation only runs on what is left.
template <class F>
Ideal<F> ideal_intersect_many(const std::vector<Ideal<F>>& ideals) {
  if (ideals.empty()) throw UsageError("intersection of an empty family");
  const Ring<F>* r = ideals[0].ring();
  for (const auto& i : ideals)
    if (i.ring() != r) throw UsageError("ideal intersection: different rings");
  std::vector<Ideal<F>> kept;
  for (const auto& i : ideals) {
    if (i.is_unit()) continue;
    bool dup = false;
    for (const auto& u : kept) dup |= (u.groebner() == i.groebner());
    if (!dup) kept.push_back(i);
  }
  if (kept.empty()) return Ideal<F>(r, {Poly<F>::from_int(r, 1)});
  // absorption: drop J when some other factor is contained in J
  std::vector<Ideal<F>> minimal;
  for (size_t a = 0; a < kept.size(); ++a) {
    bool absorbed = false;
    for (size_t b = 0; b < kept.size() && !absorbed; ++b)
      if (a != b && kept[a].contains(kept[b]))
        absorbed = true;  // kept[b] is strictly smaller: it wins
    if (!absorbed) minimal.push_back(kept[a]);
  }
  if (minimal.size() == 1) return minimal[0];
  std::vector<std::vector<Poly<F>>> gens;
  for (const auto& i : minimal) gens.push_back(i.gens());
  return Ideal<F>(r, ideal_intersection_many(r, gens));
}

/// Quotient I : f for a single divisor.
template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& i, const Poly<F>& f) {
  return Ideal<F>(i.ring(), ideal_quotient_single(i.ring(), i.gens(), f));
}

/// Quotient I : J = intersection of the I : g over generators g of J.
template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& i, const Ideal<F>& j) {
  if (i.ring() != j.ring()) throw UsageError("ideal quotient: different rings");
  if (j.gens().empty()) throw UsageError("quotient by the zero ideal");
  std::vector<Ideal<F>> parts;
  for (const auto& f : j.gens()) parts.push_back(ideal_quotient(i, f));
  return ideal_intersect_many(parts);
}

/// Eliminate the given variables: generators of I intersected with the
/// subring without them, via a block-elimination basis. The result lives in
/// the original ring.
template <class F>
Ideal<F> ideal_eliminate(const Ideal<F>& i, const std::vector<int>& vars) {
  const Ring<F>* r = i.ring();
  if (vars.empty()) return i;
  std::vector<bool> front(r->nvars(), false);
  for (int v : vars) {
    if (v < 0 || v >= r->nvars()) throw UsageError("eliminate: variable index out of range");
    front[v] = true;
  }
  std::vector<std::string> names;
  std::vector<uint32_t> weights;
  std::vector<int> up(r->nvars());
  for (int i2 = 0; i2 < r->nvars(); ++i2)
    if (front[i2]) {
      up[i2] = int(names.size());
      names.push_back(r->name(i2));
      weights.push_back(r->weight(i2));
    }
  int nfront = int(names.size());
  for (int i2 = 0; i2 < r->nvars(); ++i2)
    if (!front[i2]) {
      up[i2] = int(names.size());
      names.push_back(r->name(i2));
      weights.push_back(r->weight(i2));
    }
  if (nfront == r->nvars()) throw UsageError("cannot eliminate every variable");
  const Ring<F>* ext = Ring<F>::get(r->field(), names, Order::elim(nfront), weights);
  std::vector<Poly<F>> gens;
  for (const auto& g : i.gens()) gens.push_back(g.rename(ext, up));
  auto gb = groebner(ext, gens);
  std::vector<int> down(ext->nvars());
  for (int i2 = 0; i2 < r->nvars(); ++i2) down[up[i2]] = i2;
  std::vector<Poly<F>> out;
  for (const auto& g : gb.polys())
    if (ext->front_free(g.lt().e)) out.push_back(g.rename(r, down));
  return Ideal<F>(r, std::move(out));
}

template <class F>
Ideal<F> ideal_eliminate(const Ideal<F>& i, const std::vector<std::string>& var_names) {
  std::vector<int> vars;
  for (const auto& nm : var_names) {
    int k = i.ring()->var_index(nm);
    if (k < 0) throw UsageError("eliminate: unknown variable " + nm);
    vars.push_back(k);
  }
  return ideal_eliminate(i, vars);
}

namespace detail {

/// Invertible substitution sending the linear form f to the last variable,
/// together with its inverse.
template <class F>
void linear_change_to_last(const Ring<F>* r, const Poly<F>& f, std::vector<Poly<F>>* fwd,
                           std::vector<Poly<F>>* back) {
  if (f.is_zero() || f.degree() != 1 || !f.is_homogeneous())
    throw UsageError("linear change requires a homogeneous linear form");
  const auto& fld = r->field();
  int n = r->nvars();
  int L = n - 1;
  std::vector<typename F::Elem> c(n, fld.zero());
  for (const auto& t : f.terms())
    for (int i = 0; i < n; ++i)
      if (t.e[i]) c[i] = t.c;
  int k = -1;
  for (int i = n; i-- > 0;)
    if (!F::is_zero(c[i])) {
      k = i;
      break;
    }
  fwd->assign(n, Poly<F>());
  back->assign(n, Poly<F>());
  for (int i = 0; i < n; ++i) {
    (*fwd)[i] = Poly<F>::variable(r, i);
    (*back)[i] = Poly<F>::variable(r, i);
  }
  auto xk = Poly<F>::variable(r, k);
  auto xL = Poly<F>::variable(r, L);
  if (k == L) {
    Poly<F> img = xL;
    for (int i = 0; i < n - 1; ++i)
      if (!F::is_zero(c[i])) img = img - Poly<F>::variable(r, i).scaled(c[i]);
    (*fwd)[L] = img.scaled(fld.inv(c[L]));
    (*back)[L] = f;  // psi^{-1}(x_L) = f
    return;
  }
  // fwd: x_L -> x_k, x_k -> (x_L - sum_{i != k,L} c_i x_i - c_L x_k)/c_k
  (*fwd)[L] = xk;
  Poly<F> img = xL;
  for (int i = 0; i < n; ++i) {
    if (i == k || F::is_zero(c[i])) continue;
    Poly<F> xi = (i == L) ? xk : Poly<F>::variable(r, i);
    img = img - xi.scaled(c[i]);
  }
  (*fwd)[k] = img.scaled(fld.inv(c[k]));
  // back: x_k -> x_L and x_L -> f, so that back(fwd(x_i)) = x_i
  (*back)[k] = xL;
  (*back)[L] = f;
}

/// Saturation with respect to the last variable of a grevlex ring: divide
/// the basis elements by their last-variable power and repeat until no
/// leading term involves it. Requires homogeneous input.
template <class F>
std::vector<Poly<F>> saturate_last_variable(const Ring<F>* r, std::vector<Poly<F>> gens) {
  if (r->order().kind != OrderKind::GrevLex)
    throw UsageError("last-variable saturation needs grevlex");
  int last = r->nvars() - 1;
  for (;;) {
    auto gb = groebner(r, gens);
    bool divided = false;
    std::vector<Poly<F>> next;
    for (const auto& g : gb.polys()) {
      Poly<F> h = g.without_var_power(last);
      divided |= (h != g);
      next.push_back(std::move(h));
    }
    if (!divided) return next;
    gens = std::move(next);
  }
}

}  // namespace detail

/// Saturation by a single element: I : f^infinity.
template <class F>
Ideal<F> ideal_saturate(const Ideal<F>& i, const Poly<F>& f) {
  const Ring<F>* r = i.ring();
  if (f.is_zero()) throw UsageError("saturation by zero");
  if (f.is_constant()) return i;
  bool homogeneous = true;
  for (const auto& g : i.gens()) homogeneous &= g.is_homogeneous();
  if (homogeneous && f.degree() == 1 && f.is_homogeneous() && r->standard_graded() &&
      r->order().kind == OrderKind::GrevLex) {
    std::vector<Poly<F>> fwd, back;
    detail::linear_change_to_last(r, f, &fwd, &back);
    std::vector<Poly<F>> mapped;
    for (const auto& g : i.gens()) mapped.push_back(g.substitute(r, fwd));
    auto sat = detail::saturate_last_variable(r, std::move(mapped));
    std::vector<Poly<F>> out;
    for (const auto& g : sat) out.push_back(g.substitute(r, back));
    return Ideal<F>(r, std::move(out));
  }
  // iterate quotients until the chain stabilizes
  Ideal<F> cur = i;
  for (;;) {
    Ideal<F> next = ideal_quotient(cur, f);
    if (next.groebner() == cur.groebner()) return cur;
    cur = next;
  }
}

/// Saturation I : J^infinity = intersection of the single-generator
/// saturations (valid since J^N is generated by products in which some
/// generator appears with a large exponent).
template <class F>
Ideal<F> ideal_saturate(const Ideal<F>& i, const Ideal<F>& j) {
  if (i.ring() != j.ring()) throw UsageError("saturation: different rings");
  if (j.gens().empty()) throw UsageError("saturation by the zero ideal");
  std::vector<Ideal<F>> parts;
  for (const auto& f : j.gens()) parts.push_back(ideal_saturate(i, f));
  if (parts.size() == 1) return parts[0];
  return ideal_intersect_many(parts);
}

/// Membership in the radical via the Rabinowitsch trick.
template <class F>
bool in_radical(const Poly<F>& f, const Ideal<F>& i) {
  const Ring<F>* r = i.ring();
  if (f.is_zero()) return true;
  std::vector<std::string> names = {detail::fresh_var_name(*r)};
  for (const auto& nm : r->names()) names.push_back(nm);
  const Ring<F>* ext = Ring<F>::get(r->field(), names, Order::grevlex());
  std::vector<int> up(r->nvars());
  for (int k = 0; k < r->nvars(); ++k) up[k] = k + 1;
  std::vector<Poly<F>> gens;
  for (const auto& g : i.gens()) gens.push_back(g.rename(ext, up));
  gens.push_back(Poly<F>::from_int(ext, 1) -
                 Poly<F>::variable(ext, 0) * f.rename(ext, up));
  return groebner(ext, gens).is_unit();
}

/// The irrelevant maximal ideal (all variables).
template <class F>
Ideal<F> irrelevant_ideal(const Ring<F>* r) {
  std::vector<Poly<F>> gens;
  for (int i = 0; i < r->nvars(); ++i) gens.push_back(Poly<F>::variable(r, i));
  return Ideal<F>(r, std::move(gens));
}

/// Saturation by the irrelevant ideal through a seeded general linear form.
/// A linear-form saturation never retains irrelevant-primary junk, and it
/// equals the irrelevant saturation exactly when the Hilbert polynomial is
/// preserved (a lost relevant component always shifts it); a failed witness
/// falls back to the full intersection route.
template <class F>
Ideal<F> saturate_irrelevant(const Ideal<F>& i, uint64_t seed) {
  const Ring<F>* r = i.ring();
  const auto& fld = r->field();
  bool homogeneous = r->standard_graded();
  for (const auto& g : i.gens()) homogeneous &= g.is_homogeneous();
  if (homogeneous) {
    Rng rng(derive_subseed(seed, "saturate-irrelevant"));
    const HilbertPolynomial& hp = i.invariants().hilbert_polynomial();
    for (int attempt = 0; attempt < 4; ++attempt) {
      Poly<F> ell = Poly<F>::zero(r);
      for (int v = 0; v < r->nvars(); ++v)
        ell = ell +
              Poly<F>::variable(r, v).scaled(fld.from_int(1 + (long long)rng.below(
                                                 fld.characteristic() ? fld.characteristic() - 1
                                                                      : 1000)));
      Ideal<F> cand = ideal_saturate(i, ell);
      if (cand.invariants().hilbert_polynomial() == hp) return cand;
    }
  }
  return ideal_saturate(i, irrelevant_ideal(r));
}

/// Restrict to a ring containing (by name) every variable that occurs.
template <class F>
Ideal<F> restrict_to_ring(const Ideal<F>& i, const Ring<F>* dst) {
  const Ring<F>* src = i.ring();
  std::vector<int> var_map(src->nvars(), -1);
  for (int v = 0; v < src->nvars(); ++v) var_map[v] = dst->var_index(src->name(v));
  std::vector<Poly<F>> out;
  for (const auto& g : i.gens()) out.push_back(g.rename(dst, var_map));
  return Ideal<F>(dst, std::move(out));
}

}  // namespace linecong
