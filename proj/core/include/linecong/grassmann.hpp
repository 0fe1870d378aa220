#pragma once

#include <array>

#include "linecong/ideal.hpp"
#include "linecong/linalg.hpp"
#include "linecong/polymatrix.hpp"
#include "linecong/textio.hpp"

namespace linecong {
namespace grassmann {

/// Index pairs 0 <= i < j <= 5 in the order of the Pluecker variables
/// p01, p02, ..., p45.
inline const std::array<std::pair<int, int>, 15>& pairs() {
  static const std::array<std::pair<int, int>, 15> k = {{{0, 1},
                                                         {0, 2},
                                                         {0, 3},
                                                         {0, 4},
                                                         {0, 5},
                                                         {1, 2},
                                                         {1, 3},
                                                         {1, 4},
                                                         {1, 5},
                                                         {2, 3},
                                                         {2, 4},
                                                         {2, 5},
                                                         {3, 4},
                                                         {3, 5},
                                                         {4, 5}}};
  return k;
}

inline int pair_index(int i, int j) {
  if (i == j || i < 0 || j < 0 || i > 5 || j > 5) throw UsageError("bad Pluecker index pair");
  if (i > j) std::swap(i, j);
  for (int k = 0; k < 15; ++k)
    if (pairs()[k] == std::make_pair(i, j)) return k;
  throw UsageError("bad Pluecker index pair");
}

inline std::vector<std::string> plucker_names() {
  std::vector<std::string> names;
  for (const auto& [i, j] : pairs())
    names.push_back("p" + std::to_string(i) + std::to_string(j));
  return names;
}

/// The coordinate ring of P^14 in Pluecker variables, grevlex.
template <class F>
const Ring<F>* plucker_ring(const F& fld) {
  return Ring<F>::get(fld, plucker_names());
}

/// The coordinate ring of P^5 in x0..x5.
template <class F>
const Ring<F>* point_ring(const F& fld) {
  return Ring<F>::get(fld, {"x0", "x1", "x2", "x3", "x4", "x5"});
}

/// Chart parameters u1..u5 (the chart u0 = 1 of the family).
template <class F>
const Ring<F>* chart_ring(const F& fld) {
  return Ring<F>::get(fld, {"u1", "u2", "u3", "u4", "u5"});
}

/// Full parameter space u0..u5.
template <class F>
const Ring<F>* param_ring(const F& fld) {
  return Ring<F>::get(fld, {"u0", "u1", "u2", "u3", "u4", "u5"});
}

/// Generic skew 6x6 matrix (p_ij) over the Pluecker ring.
template <class F>
PolyMatrix<F> generic_skew_matrix(const Ring<F>* pr) {
  PolyMatrix<F> m(6, std::vector<Poly<F>>(6, Poly<F>::zero(pr)));
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      auto v = Poly<F>::variable(pr, pair_index(i, j));
      m[i][j] = v;
      m[j][i] = -v;
    }
  return m;
}

/// The 15 quadratic Pluecker relations of G(1,5): the 4x4 sub-Pfaffians of
/// the generic skew matrix, one per 4-subset of {0..5}.
template <class F>
std::vector<Poly<F>> grassmannian_relations(const Ring<F>* pr) {
  auto m = generic_skew_matrix(pr);
  std::vector<Poly<F>> rels;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c)
        for (int d = c + 1; d < 6; ++d) {
          PolyMatrix<F> sub(4, std::vector<Poly<F>>(4, Poly<F>::zero(pr)));
          int rows[4] = {a, b, c, d};
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) sub[i][j] = m[rows[i]][rows[j]];
          rels.push_back(pfaffian(pr, sub));
        }
  return rels;
}

template <class F>
Ideal<F> grassmannian_ideal(const Ring<F>* pr) {
  return Ideal<F>(pr, grassmannian_relations(pr));
}

/// The rank-4 plane of skew matrices a*h1 + b*h2 + c*h3 whose dual is cut
/// out by p01+p25, p02+p35, p03+p45.
template <class F>
PolyMatrix<F> tangent_plane_matrix(const Ring<F>* abc) {
  auto a = Poly<F>::variable(abc, 0), b = Poly<F>::variable(abc, 1), c = Poly<F>::variable(abc, 2);
  PolyMatrix<F> m(6, std::vector<Poly<F>>(6, Poly<F>::zero(abc)));
  auto put = [&](int i, int j, const Poly<F>& v) {
    m[i][j] = v;
    m[j][i] = -v;
  };
  put(0, 1, a);
  put(0, 2, b);
  put(0, 3, c);
  put(2, 5, a);
  put(3, 5, b);
  put(4, 5, c);
  return m;
}

/// Pluecker coordinates of the line through two points of P^5.
template <class F>
std::array<typename F::Elem, 15> line_through(const F& fld,
                                              const std::array<typename F::Elem, 6>& a,
                                              const std::array<typename F::Elem, 6>& b) {
  std::array<typename F::Elem, 15> p;
  for (int k = 0; k < 15; ++k) {
    auto [i, j] = pairs()[k];
    p[k] = fld.sub(fld.mul(a[i], b[j]), fld.mul(a[j], b[i]));
  }
  return p;
}

/// The symbolic chart of the family: the 2x2 minors of
///   [ u0  u1  u2  u3  u4  0  ]
///   [ 0  -u2 -u3 -u4 -u5  u0 ],
/// indexed like the Pluecker variables. The images satisfy the Grassmannian
/// relations and the three linear forms of the dual plane identically.
template <class F>
std::vector<Poly<F>> gamma_chart_polys(const Ring<F>* u6) {
  auto u = [&](int i) { return Poly<F>::variable(u6, i); };
  std::vector<Poly<F>> row1 = {u(0), u(1), u(2), u(3), u(4), Poly<F>::zero(u6)};
  std::vector<Poly<F>> row2 = {Poly<F>::zero(u6), -u(2), -u(3), -u(4), -u(5), u(0)};
  std::vector<Poly<F>> minors;
  for (const auto& [i, j] : pairs()) minors.push_back(row1[i] * row2[j] - row1[j] * row2[i]);
  return minors;
}

/// Numeric chart point: the Pluecker line with parameters (u0 : ... : u5).
template <class F>
std::array<typename F::Elem, 15> gamma_chart_point(const F& fld,
                                                   const std::array<typename F::Elem, 6>& u) {
  std::array<typename F::Elem, 6> a = {u[0], u[1], u[2], u[3], u[4], fld.zero()};
  std::array<typename F::Elem, 6> b = {fld.zero(),    fld.neg(u[2]), fld.neg(u[3]),
                                       fld.neg(u[4]), fld.neg(u[5]), u[0]};
  return line_through(fld, a, b);
}

/// Schubert conditions as linear sections of the Pluecker space.
template <class F>
std::vector<Poly<F>> section_through_point(const Ring<F>* pr,
                                           const std::array<typename F::Elem, 6>& a) {
  bool nonzero = false;
  for (const auto& c : a) nonzero |= !F::is_zero(c);
  if (!nonzero) throw UsageError("through_point: zero point");
  std::vector<Poly<F>> out;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        auto p = [&](int s, int t) { return Poly<F>::variable(pr, pair_index(s, t)); };
        Poly<F> f = p(j, k).scaled(a[i]) - p(i, k).scaled(a[j]) + p(i, j).scaled(a[k]);
        if (!f.is_zero()) out.push_back(f);
      }
  return out;
}

template <class F>
std::vector<Poly<F>> section_in_hyperplane(const Ring<F>* pr,
                                           const std::array<typename F::Elem, 6>& h) {
  bool nonzero = false;
  for (const auto& c : h) nonzero |= !F::is_zero(c);
  if (!nonzero) throw UsageError("in_hyperplane: zero covector");
  std::vector<Poly<F>> out;
  for (int i = 0; i < 6; ++i) {
    Poly<F> f = Poly<F>::zero(pr);
    for (int j = 0; j < 6; ++j) {
      if (j == i || F::is_zero(h[j])) continue;
      auto v = Poly<F>::variable(pr, pair_index(std::min(i, j), std::max(i, j)));
      f = (i < j) ? f + v.scaled(h[j]) : f - v.scaled(h[j]);
    }
    if (!f.is_zero()) out.push_back(f);
  }
  return out;
}

template <class F>
std::vector<Poly<F>> section_meets_line(const Ring<F>* pr,
                                        const std::array<typename F::Elem, 15>& q) {
  bool nonzero = false;
  for (const auto& c : q) nonzero |= !F::is_zero(c);
  if (!nonzero) throw UsageError("meets_line: zero line");
  // entries of p wedge q over 4-subsets {i<j<k<l}
  std::vector<Poly<F>> out;
  auto p = [&](int s, int t) { return Poly<F>::variable(pr, pair_index(s, t)); };
  auto qc = [&](int s, int t) { return q[pair_index(s, t)]; };
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k)
        for (int l = k + 1; l < 6; ++l) {
          Poly<F> f = p(i, j).scaled(qc(k, l)) - p(i, k).scaled(qc(j, l)) +
                      p(i, l).scaled(qc(j, k)) + p(j, k).scaled(qc(i, l)) -
                      p(j, l).scaled(qc(i, k)) + p(k, l).scaled(qc(i, j));
          if (!f.is_zero()) out.push_back(f);
        }
  return out;
}

template <class F>
std::vector<Poly<F>> section_in_3space(const Ring<F>* pr,
                                       const std::array<typename F::Elem, 6>& h1,
                                       const std::array<typename F::Elem, 6>& h2) {
  auto a = section_in_hyperplane(pr, h1);
  auto b = section_in_hyperplane(pr, h2);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// The 3x6 coefficient matrix of the linear system cutting the lines of the
/// family through a point P, and its rank: 3 off the distinguished 3-space
/// L, 2 on L off the twisted cubic, 1 on the cubic.
template <class F>
std::pair<DenseMat<F>, int> lines_through_point_matrix(const F& fld,
                                                       const std::array<typename F::Elem, 6>& a) {
  bool nonzero = false;
  for (const auto& c : a) nonzero |= !F::is_zero(c);
  if (!nonzero) throw UsageError("lines_through_point: zero point");
  DenseMat<F> m(fld, 3, 6);
  auto set_row = [&](int r, std::array<typename F::Elem, 6> v) {
    for (int j = 0; j < 6; ++j) m.at(r, j) = v[j];
  };
  auto neg = [&](typename F::Elem c) { return fld.neg(c); };
  set_row(0, {a[1], neg(a[0]), a[5], fld.zero(), fld.zero(), neg(a[2])});
  set_row(1, {a[2], fld.zero(), neg(a[0]), a[5], fld.zero(), neg(a[3])});
  set_row(2, {a[3], fld.zero(), fld.zero(), neg(a[0]), a[5], neg(a[4])});
  DenseMat<F> copy = m;
  int rank = copy.row_reduce();
  return {m, rank};
}

/// Points of the twisted cubic (0 : 1 : s : s^2 : s^3 : 0).
template <class F>
std::array<typename F::Elem, 6> twisted_cubic_point(const F& fld, typename F::Elem s) {
  auto s2 = fld.mul(s, s);
  return {fld.zero(), fld.one(), s, s2, fld.mul(s2, s), fld.zero()};
}

/// Fixture ideals transcribed from the construction, one text block per
/// name; the same text ships as fixture files.
struct FixtureDef {
  const char* name;
  const char* ring;  // "plucker" or "point"
  const char* text;
};

inline const std::vector<FixtureDef>& fixture_defs() {
  static const std::vector<FixtureDef> defs = {
      {"gamma_dual", "plucker",
       "# the three linear forms cutting the dual of the rank-4 plane\n"
       "p01+p25\np02+p35\np03+p45\n"},
      {"g1L", "plucker",
       "# the nine coordinates vanishing on lines inside L = {x0 = x5 = 0}\n"
       "p01\np02\np03\np04\np05\np15\np25\np35\np45\n"},
      {"H_L", "plucker",
       "# the unique hyperplane tangent to G(1,5) along G(1,L)\n"
       "p05\n"},
      {"space_L", "point",
       "# the 3-space carrying the twisted cubic\n"
       "x0\nx5\n"},
      {"twisted_cubic_C", "point",
       "# catalecticant minors plus the 3-space\n"
       "x1*x3-x2^2\nx1*x4-x2*x3\nx2*x4-x3^2\nx0\nx5\n"},
      {"ex1_H", "plucker",
       "# explicit hyperplane for the irreducible linear congruence\n"
       "p05+p12+p14+p34\n"},
      {"ex2_H", "plucker",
       "# hyperplane through G(1,L), not tangent along it, normalized so that\n"
       "# the residual congruence is ex2_A and the singular 3-spaces are\n"
       "# ex2_L0..ex2_L3\n"
       "p01+p45\n"},
      {"ex2_L0", "point", "x5\nx2-x4\n"},
      {"ex2_L1", "point", "x0-x5\nx2+x3\n"},
      {"ex2_L2", "point", "x0+x5\nx2-x3\n"},
      {"ex2_L3", "point", "x0\nx1-x3\n"},
      {"ex2_A", "plucker",
       "# residual congruence of the second example, modulo G(1,5); the first\n"
       "# generator is p01+p45 = (p01+p25) - (p25-p45)\n"
       "p01+p45\np02+p35\np03+p45\np25-p45\n"
       "p13*p23-p12*p24-p23*p24+p13*p34\n"},
      {"ex3_A0", "plucker",
       "# residual congruence of the tangent-hyperplane case, modulo G(1,5)\n"
       "p01+p25\np02+p35\np03+p45\np05\n"
       "p15*p34-p25*p24+p35*p23\n"
       "p23^3-p13*p23*p24+p12*p24^2+p13^2*p34-2*p12*p23*p34-p12*p14*p34\n"},
  };
  return defs;
}

inline const FixtureDef& fixture_def(const std::string& name) {
  for (const auto& d : fixture_defs())
    if (name == d.name) return d;
  throw UsageError("unknown fixture " + name);
}

template <class F>
const Ring<F>* fixture_ring(const F& fld, const std::string& ring_kind) {
  if (ring_kind == "plucker") return plucker_ring(fld);
  if (ring_kind == "point") return point_ring(fld);
  throw UsageError("unknown fixture ring " + ring_kind);
}

template <class F>
Ideal<F> fixture_ideal(const F& fld, const std::string& name) {
  const FixtureDef& d = fixture_def(name);
  const Ring<F>* r = fixture_ring(fld, d.ring);
  return Ideal<F>(r, parse_polys<F>(d.text, r));
}

}  // namespace grassmann
}  // namespace linecong
