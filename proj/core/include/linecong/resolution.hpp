#pragma once

#include <functional>
#include <map>

#include "linecong/hilbert.hpp"
#include "linecong/linalg.hpp"
#include "linecong/module.hpp"

namespace linecong {

/// Graded ranks of a minimal free resolution of R/I: (step, twist) -> rank.
/// Step k >= 1 lists the generator degrees of F_k; F_0 = R is implicit.
struct BettiTable {
  std::map<std::pair<int, int>, long long> entries;

  int length() const {
    int len = 0;
    for (const auto& [key, rank] : entries) len = std::max(len, key.first);
    return len;
  }
  long long rank_of_step(int step) const {
    long long r = 0;
    for (const auto& [key, rank] : entries)
      if (key.first == step) r += rank;
    return r;
  }
  long long operator()(int step, int twist) const {
    auto it = entries.find({step, twist});
    return it == entries.end() ? 0 : it->second;
  }
  bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

inline std::string to_string(const BettiTable& b) {
  std::string out;
  for (const auto& [key, rank] : b.entries) {
    if (!out.empty()) out += " ";
    out += std::to_string(key.first) + ":" + std::to_string(key.second) + "^" +
           std::to_string(rank);
  }
  return out;
}

template <class F>
struct FreeResolution {
  const Ring<F>* ring = nullptr;
  /// matrices[k] maps F_{k+1} -> F_k; matrices[0] collects the minimal
  /// generators of I as a 1 x b_1 row over F_0 = R.
  std::vector<GradedMatrix<F>> matrices;

  int length() const { return int(matrices.size()); }

  BettiTable betti() const {
    BettiTable b;
    for (int k = 0; k < length(); ++k)
      for (int tw : matrices[k].col_twists) b.entries[{k + 1, tw}] += 1;
    return b;
  }
};

namespace detail {

/// Greedy minimal generating set of a graded submodule given generators:
/// process by ascending degree, keep what does not reduce to zero against
/// the previously kept vectors (graded Nakayama).
template <class F>
GradedMatrix<F> minimalize_columns(const GradedMatrix<F>& m) {
  std::vector<int> idx(m.ncols());
  for (int j = 0; j < m.ncols(); ++j) idx[j] = j;
  std::stable_sort(idx.begin(), idx.end(),
                   [&m](int a, int b) { return m.col_twists[a] < m.col_twists[b]; });
  ModFrame<F> fr(m.ring, m.row_twists, m.rows());
  ModuleBuchberger<F> alg(fr);
  GradedMatrix<F> out;
  out.ring = m.ring;
  out.row_twists = m.row_twists;
  for (int j : idx) {
    std::vector<MTerm<F>> ts;
    for (int i = 0; i < m.rows(); ++i)
      for (const auto& t : m.cols[j][i].terms())
        ts.push_back({i, t.e, t.deg + uint32_t(m.row_twists[i]), t.c});
    if (alg.add_and_complete(ModVec<F>::from_terms(fr, std::move(ts)))) {
      out.col_twists.push_back(m.col_twists[j]);
      out.cols.push_back(m.cols[j]);
    }
  }
  return out;
}

}  // namespace detail

/// Minimal generators of a homogeneous ideal, ascending by degree.
template <class F>
std::vector<Poly<F>> minimal_generators(const Ring<F>* r, const std::vector<Poly<F>>& gens) {
  std::vector<Poly<F>> sorted;
  for (const auto& g : gens)
    if (!g.is_zero()) sorted.push_back(g);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Poly<F>& a, const Poly<F>& b) { return a.degree() < b.degree(); });
  std::vector<Poly<F>> kept;
  for (const auto& g : sorted) {
    if (kept.empty()) {
      kept.push_back(g.monic());
      continue;
    }
    auto gb = groebner(r, kept);
    if (!normal_form(g, gb).is_zero()) kept.push_back(g.monic());
  }
  return kept;
}

/// Minimal graded free resolution of R/I by iterated syzygies, minimalizing
/// the generating set at every step. Inputs must be homogeneous.
template <class F>
FreeResolution<F> free_resolution(const Ring<F>* r, const std::vector<Poly<F>>& gens) {
  for (const auto& g : gens)
    if (!g.is_homogeneous()) throw UsageError("free resolution requires a homogeneous ideal");
  FreeResolution<F> res;
  res.ring = r;
  std::vector<Poly<F>> mingens = minimal_generators(r, gens);
  if (mingens.empty()) return res;

  GradedMatrix<F> m;
  m.ring = r;
  m.row_twists = {0};
  for (const auto& g : mingens) {
    m.col_twists.push_back(int(g.degree()));
    m.cols.push_back({g});
  }
  res.matrices.push_back(m);
  for (int step = 1; step <= r->nvars(); ++step) {
    GradedMatrix<F> syz = syzygy_matrix(res.matrices.back());
    if (syz.ncols() == 0) break;
    res.matrices.push_back(detail::minimalize_columns<F>(syz));
  }
  return res;
}

/// Matrix product N * M (compose F -> G -> H maps given as graded matrices).
template <class F>
GradedMatrix<F> compose(const GradedMatrix<F>& n, const GradedMatrix<F>& m) {
  if (n.ncols() != m.rows()) throw UsageError("composition shape mismatch");
  GradedMatrix<F> out;
  out.ring = n.ring;
  out.row_twists = n.row_twists;
  out.col_twists = m.col_twists;
  out.cols.assign(m.ncols(), std::vector<Poly<F>>(n.rows(), Poly<F>::zero(n.ring)));
  for (int j = 0; j < m.ncols(); ++j)
    for (int i = 0; i < n.rows(); ++i) {
      Poly<F> acc = Poly<F>::zero(n.ring);
      for (int k = 0; k < n.ncols(); ++k) acc = acc + n.entry(i, k) * m.entry(k, j);
      out.cols[j][i] = acc;
    }
  return out;
}

/// Enumerate the k x k minors of a graded matrix through a callback; return
/// false from the callback to stop early.
template <class F>
void for_each_minor(const GradedMatrix<F>& m, int k,
                    const std::function<bool(const Poly<F>&)>& fn) {
  int R = m.rows(), C = m.ncols();
  if (k <= 0 || k > std::min(R, C)) throw UsageError("minor size out of range");
  if (R > 30) throw UsageError("minor enumeration limited to 30 rows");
  std::vector<int> cols(k);
  for (int i = 0; i < k; ++i) cols[i] = i;
  auto advance = [&]() {
    int i = k - 1;
    while (i >= 0 && cols[i] == C - k + i) --i;
    if (i < 0) return false;
    ++cols[i];
    for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
    return true;
  };
  do {
    // DP over column prefixes: minors[S] for row subsets S of size j
    std::map<uint32_t, Poly<F>> level;
    level[0u] = Poly<F>::from_int(m.ring, 1);
    for (int j = 0; j < k; ++j) {
      std::map<uint32_t, Poly<F>> next;
      for (const auto& [mask, det] : level) {
        int sign_toggle = 0;
        (void)sign_toggle;
        for (int rnew = 0; rnew < R; ++rnew) {
          if (mask & (1u << rnew)) continue;
          uint32_t nm = mask | (1u << rnew);
          // expansion along the new (last) column: sign by the index of rnew
          // within the sorted row subset
          int idx = __builtin_popcount(nm & ((1u << rnew) - 1));
          bool neg = ((idx + j) % 2) != 0;
          const Poly<F>& e = m.entry(rnew, cols[j]);
          if (e.is_zero()) continue;
          Poly<F> contrib = e * det;
          auto it = next.find(nm);
          if (it == next.end())
            next.emplace(nm, neg ? -contrib : contrib);
          else
            it->second = neg ? it->second - contrib : it->second + contrib;
        }
      }
      level = std::move(next);
    }
    for (const auto& [mask, det] : level)
      if (!fn(det)) return;
  } while (advance());
}

/// Ideal of all k x k minors (the Fitting-style minor ideal of the map).
template <class F>
std::vector<Poly<F>> minors_ideal(const GradedMatrix<F>& m, int k) {
  std::vector<Poly<F>> out;
  for_each_minor<F>(m, k, [&](const Poly<F>& d) {
    if (!d.is_zero()) out.push_back(d);
    return true;
  });
  return out;
}

/// Rank of the degree-d piece of a graded matrix as a linear map.
template <class F>
long long graded_rank(const GradedMatrix<F>& m, int d) {
  const Ring<F>* r = m.ring;
  int n = r->nvars();
  // enumerate monomials of each needed degree
  std::map<int, std::vector<Exps>> monos;
  std::map<int, std::map<Exps, int>> mono_index;
  auto need = [&](int deg) {
    if (deg < 0 || monos.count(deg)) return;
    std::vector<Exps> list;
    Exps e{};
    std::function<void(int, int)> rec = [&](int var, int left) {
      if (var == n - 1) {
        e[var] = uint16_t(left);
        list.push_back(e);
        e[var] = 0;
        return;
      }
      for (int k = 0; k <= left; ++k) {
        e[var] = uint16_t(k);
        rec(var + 1, left - k);
      }
      e[var] = 0;
    };
    rec(0, deg);
    auto& ix = mono_index[deg];
    for (size_t i = 0; i < list.size(); ++i) ix[list[i]] = int(i);
    monos[deg] = std::move(list);
  };

  std::vector<int> row_base(m.rows() + 1, 0);
  for (int i = 0; i < m.rows(); ++i) {
    need(d - m.row_twists[i]);
    int cnt = d - m.row_twists[i] >= 0 ? int(monos[d - m.row_twists[i]].size()) : 0;
    row_base[i + 1] = row_base[i] + cnt;
  }
  std::vector<std::pair<int, Exps>> col_list;  // (source position, monomial)
  for (int j = 0; j < m.ncols(); ++j) {
    int deg = d - m.col_twists[j];
    if (deg < 0) continue;
    need(deg);
    for (const auto& e : monos[deg]) col_list.push_back({j, e});
  }
  if (col_list.empty() || row_base.back() == 0) return 0;

  DenseMat<F> mat(r->field(), row_base.back(), int(col_list.size()));
  for (int c = 0; c < int(col_list.size()); ++c) {
    auto [j, e] = col_list[c];
    for (int i = 0; i < m.rows(); ++i) {
      int deg = d - m.row_twists[i];
      if (deg < 0) continue;
      const auto& ix = mono_index[deg];
      for (const auto& t : m.entry(i, j).terms()) {
        Exps prod = RingBase::mul(t.e, e);
        auto it = ix.find(prod);
        if (it == ix.end()) throw UsageError("graded matrix entry with wrong degree");
        mat.at(row_base[i] + it->second, c) = t.c;
      }
    }
  }
  return mat.row_reduce();
}

/// Dimension of the degree-d piece of a graded free module with the given
/// generator degrees.
inline long long graded_free_dim(const std::vector<int>& twists, int d, int nvars) {
  long long acc = 0;
  for (int a : twists) acc += IdealInvariants::monomial_count(d - a, nvars);
  return acc;
}

/// Dimension of the degree-d piece of Ext^j(R/I, R(-nvars)) computed from a
/// minimal free resolution by dualizing into the twisted ring.
template <class F>
long long ext_graded_dim(const FreeResolution<F>& res, int j, int d) {
  const Ring<F>* r = res.ring;
  int n = r->nvars();
  int m = n;  // dualize into R(-n): omega of projective (n-1)-space
  if (j < 0 || j > res.length()) return 0;

  // twists of D^k = Hom(F_k, R(-m))
  auto dual_twists = [&](int k) {
    std::vector<int> tw;
    if (k == 0) {
      tw.push_back(m);
    } else {
      for (int a : res.matrices[k - 1].col_twists) tw.push_back(m - a);
    }
    return tw;
  };
  // dual map D^k -> D^{k+1}: transpose of matrices[k]
  auto dual_map = [&](int k) {  // valid for 0 <= k < length
    const GradedMatrix<F>& mk = res.matrices[k];
    GradedMatrix<F> t;
    t.ring = r;
    t.row_twists = dual_twists(k + 1);
    t.col_twists = dual_twists(k);
    t.cols.assign(t.ncols(), std::vector<Poly<F>>(t.rows(), Poly<F>::zero(r)));
    for (int a = 0; a < mk.rows(); ++a)
      for (int b = 0; b < mk.ncols(); ++b) t.cols[a][b] = mk.entry(a, b);
    return t;
  };

  long long dim_dj = graded_free_dim(dual_twists(j), d, n);
  long long rank_out = j < res.length() ? graded_rank(dual_map(j), d) : 0;
  long long rank_in = j > 0 ? graded_rank(dual_map(j - 1), d) : 0;
  return dim_dj - rank_out - rank_in;
}

/// h^1 of the ideal sheaf of the scheme cut out by a saturated homogeneous
/// ideal in P^(n-1), at the given twist: the dual reading of the resolution
/// at top cohomological degree. Saturation is detected via projective
/// dimension (depth zero <=> not saturated).
template <class F>
long long h1_ideal_sheaf(const FreeResolution<F>& res, int twist) {
  const Ring<F>* r = res.ring;
  int n = r->nvars();
  if (res.length() >= n)
    throw UsageError("h1_ideal_sheaf: ideal is not saturated (projective dimension is maximal)");
  return ext_graded_dim(res, n - 1, -twist);
}

}  // namespace linecong
