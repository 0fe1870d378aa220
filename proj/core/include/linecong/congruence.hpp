#pragma once

#include <functional>

#include "linecong/grassmann.hpp"

namespace linecong {
namespace congruence {

/// The 13 scalars of the quadric family: one on the distinguished quadric,
/// six, five and one on the blocks multiplying p05, and the scalar on p05^2.
template <class F>
struct QuadricCoefficients {
  using C = typename F::Elem;
  C d;
  std::array<C, 6> a;
  std::array<C, 5> b;
  C c;

  static QuadricCoefficients seeded(const F& fld, uint64_t seed) {
    Rng rng(derive_subseed(seed, "quadric-coefficients"));
    auto pick = [&]() {
      return fld.from_int((long long)rng.below(fld.characteristic() ? fld.characteristic() : 1000));
    };
    QuadricCoefficients q;
    do {
      q.d = pick();
    } while (F::is_zero(q.d));
    for (auto& v : q.a) v = pick();
    for (auto& v : q.b) v = pick();
    q.c = pick();
    return q;
  }
};

/// The family quadric
///   q = -d (p15 p34 - p25 p24 + p35 p23)
///       + p05 (a1 p12 + a2 p13 + a3 p14 + a4 p23 + a5 p24 + a6 p34
///              - (b1 p15 + b2 p25 + b3 p35 + b4 p45) + b5 p04 - c p05),
/// with the displayed sign pattern kept exactly.
template <class F>
Poly<F> family_quadric(const Ring<F>* pr, const QuadricCoefficients<F>& k) {
  using grassmann::pair_index;
  auto p = [&](int i, int j) { return Poly<F>::variable(pr, pair_index(i, j)); };
  const auto& fld = pr->field();
  Poly<F> core = p(1, 5) * p(3, 4) - p(2, 5) * p(2, 4) + p(3, 5) * p(2, 3);
  Poly<F> block = p(1, 2).scaled(k.a[0]) + p(1, 3).scaled(k.a[1]) + p(1, 4).scaled(k.a[2]) +
                  p(2, 3).scaled(k.a[3]) + p(2, 4).scaled(k.a[4]) + p(3, 4).scaled(k.a[5]) -
                  (p(1, 5).scaled(k.b[0]) + p(2, 5).scaled(k.b[1]) + p(3, 5).scaled(k.b[2]) +
                   p(4, 5).scaled(k.b[3])) +
                  p(0, 4).scaled(k.b[4]) - p(0, 5).scaled(k.c);
  return core.scaled(fld.neg(k.d)) + p(0, 5) * block;
}

/// Ideal of the five-dimensional family: the Grassmannian plus the dual
/// plane.
template <class F>
Ideal<F> gamma_ideal(const F& fld) {
  const Ring<F>* pr = grassmann::plucker_ring(fld);
  auto gens = grassmann::grassmannian_relations(pr);
  Ideal<F> dual = grassmann::fixture_ideal(fld, "gamma_dual");
  for (const auto& f : dual.gens()) gens.push_back(f);
  return Ideal<F>(pr, std::move(gens));
}

/// Pull a Pluecker polynomial back through the chart and set u0 = 1.
template <class F>
Poly<F> chart_equation_of(const F& fld, const Poly<F>& plucker_poly) {
  const Ring<F>* u6 = grassmann::param_ring(fld);
  const Ring<F>* u5 = grassmann::chart_ring(fld);
  Poly<F> pulled = plucker_poly.substitute(u6, grassmann::gamma_chart_polys(u6));
  std::vector<int> down(6, -1);
  for (int i = 1; i <= 5; ++i) down[i] = u5->var_index("u" + std::to_string(i));
  return pulled.dehomogenized(0).rename(u5, down);
}

enum class Case { ex1, ex2_residual, ex3_residual, quadratic, monge_ampere };

inline const char* to_string(Case c) {
  switch (c) {
    case Case::ex1: return "ex1";
    case Case::ex2_residual: return "ex2_residual";
    case Case::ex3_residual: return "ex3_residual";
    case Case::quadratic: return "quadratic";
    default: return "monge_ampere";
  }
}

template <class F>
struct CongruenceSpec {
  Case kind;
  Poly<F> chart_equation;  // in u1..u5, chart u0 = 1; zero when absent
  Ideal<F> plucker_ideal;  // contains the Grassmannian and the dual plane
  std::string provenance;
};

/// Closure of the chart image: the ideal of the congruence swept by the
/// lines with parameters on the chart hypersurface. Works on the affine
/// cones: the graph p_ij = m_ij(u) (weights 1 on u, 2 on p keep it graded)
/// plus the homogenized chart equation, then u-elimination. Base parameters
/// map to the vertex, so the eliminated ideal is the full saturated ideal of
/// the closure; no extra saturation step is needed.
template <class F>
Ideal<F> implicitize_chart(const F& fld, const Poly<F>& chart_eq) {
  const Ring<F>* pr = grassmann::plucker_ring(fld);
  std::vector<std::string> names = {"u0", "u1", "u2", "u3", "u4", "u5"};
  std::vector<uint32_t> weights(6, 1);
  for (const auto& nm : grassmann::plucker_names()) {
    names.push_back(nm);
    weights.push_back(2);
  }
  const Ring<F>* w = Ring<F>::get(fld, names, Order::elim(6), weights);

  const Ring<F>* u6 = grassmann::param_ring(fld);
  std::vector<int> u_up(6);
  for (int i = 0; i < 6; ++i) u_up[i] = i;
  auto minors = grassmann::gamma_chart_polys(u6);
  std::vector<Poly<F>> gens;
  for (int k = 0; k < 15; ++k)
    gens.push_back(Poly<F>::variable(w, 6 + k) - minors[k].rename(w, u_up));
  if (!chart_eq.is_zero()) {
    const Ring<F>* u5 = grassmann::chart_ring(fld);
    std::vector<int> c_up(5);
    for (int i = 0; i < 5; ++i) c_up[i] = u5->var_index("u" + std::to_string(i + 1)) + 1;
    gens.push_back(chart_eq.rename(w, c_up).homogenized(0));
  }
  auto gb = groebner(w, gens);
  std::vector<int> down(w->nvars(), -1);
  for (int k = 0; k < 15; ++k) down[6 + k] = k;
  std::vector<Poly<F>> out;
  for (const auto& g : gb.polys())
    if (w->front_free(g.lt().e)) out.push_back(g.rename(pr, down));
  return Ideal<F>(pr, std::move(out));
}

/// Build a congruence of the family. The seed drives coefficient choices
/// (quadratic and Monge-Ampere cases) and the saturation witnesses.
template <class F>
CongruenceSpec<F> build_congruence(const F& fld, Case kind, uint64_t seed,
                                   const QuadricCoefficients<F>* coeffs = nullptr) {
  const Ring<F>* pr = grassmann::plucker_ring(fld);
  Ideal<F> gamma = gamma_ideal(fld);
  Ideal<F> g1l = grassmann::fixture_ideal(fld, "g1L");
  CongruenceSpec<F> spec;
  spec.kind = kind;
  spec.chart_equation = Poly<F>::zero(grassmann::chart_ring(fld));

  auto check_dimension = [&](const Ideal<F>& b, const char* what) {
    const auto& inv = b.invariants();
    if (inv.projective_dimension() != 4)
      throw GenericityError(std::string(what) + ": expected a 4-dimensional family, got dimension " +
                            std::to_string(inv.projective_dimension()));
  };

  switch (kind) {
    case Case::ex1: {
      Poly<F> h = grassmann::fixture_ideal(fld, "ex1_H").gens()[0];
      spec.chart_equation = chart_equation_of(fld, h);
      Ideal<F> cut = ideal_sum(gamma, Ideal<F>(pr, {h}));
      spec.plucker_ideal = saturate_irrelevant(cut, derive_subseed(seed, "ex1-sat"));
      spec.provenance = "irreducible linear congruence: dual-plane family cut by the fixture hyperplane";
      check_dimension(spec.plucker_ideal, "ex1");
      break;
    }
    case Case::ex2_residual: {
      Poly<F> h = grassmann::fixture_ideal(fld, "ex2_H").gens()[0];
      spec.chart_equation = chart_equation_of(fld, h);
      Ideal<F> cut = ideal_sum(gamma, Ideal<F>(pr, {h}));
      spec.plucker_ideal = ideal_saturate(cut, g1l);
      spec.provenance = "residual of the lines-in-L component in the hyperplane-through-G(1,L) cut";
      check_dimension(spec.plucker_ideal, "ex2_residual");
      break;
    }
    case Case::ex3_residual: {
      Poly<F> h = grassmann::fixture_ideal(fld, "H_L").gens()[0];
      spec.chart_equation = chart_equation_of(fld, h);
      Ideal<F> cut = ideal_sum(gamma, Ideal<F>(pr, {h}));
      spec.plucker_ideal = ideal_saturate(cut, g1l);
      spec.provenance = "residual of the doubled lines-in-L component in the tangent-hyperplane cut";
      check_dimension(spec.plucker_ideal, "ex3_residual");
      break;
    }
    case Case::quadratic:
    case Case::monge_ampere: {
      for (int attempt = 0;; ++attempt) {
        QuadricCoefficients<F> k =
            coeffs ? *coeffs : QuadricCoefficients<F>::seeded(fld, seed + attempt);
        if (F::is_zero(k.d)) throw UsageError("the quadric family requires d != 0");
        Poly<F> q = family_quadric(pr, k);
        spec.chart_equation = chart_equation_of(fld, q);
        try {
          if (kind == Case::quadratic) {
            Ideal<F> cut = ideal_sum(gamma, Ideal<F>(pr, {q}));
            Ideal<F> partial = ideal_saturate(cut, g1l);
            spec.plucker_ideal = ideal_saturate(partial, grassmann::fixture_ideal(fld, "ex3_A0"));
            spec.provenance = "residual congruence of the quadric-family cut";
          } else {
            spec.plucker_ideal = implicitize_chart(fld, spec.chart_equation);
            spec.provenance = "closure of the conservation-law chart inside the Pluecker space";
          }
          check_dimension(spec.plucker_ideal, to_string(kind));
          break;
        } catch (const GenericityError&) {
          if (coeffs || attempt >= 7) throw;
        }
      }
      break;
    }
  }
  return spec;
}

struct Multidegree {
  long long a0 = 0, a1 = 0, a2 = 0;
  bool operator==(const Multidegree& o) const { return a0 == o.a0 && a1 == o.a1 && a2 == o.a2; }
};

inline std::string to_string(const Multidegree& m) {
  return "(" + std::to_string(m.a0) + "," + std::to_string(m.a1) + "," + std::to_string(m.a2) + ")";
}

namespace detail {

template <class F>
std::array<typename F::Elem, 6> random_point6(const F& fld, Rng& rng) {
  std::array<typename F::Elem, 6> a;
  uint64_t p = fld.characteristic() ? fld.characteristic() : 1000;
  for (auto& c : a) c = fld.from_int((long long)rng.below(p));
  bool nz = false;
  for (auto& c : a) nz |= !F::is_zero(c);
  if (!nz) a[0] = fld.one();
  return a;
}

/// A random point of the hyperplane with covector h.
template <class F>
std::array<typename F::Elem, 6> random_point_in_hyperplane(const F& fld,
                                                           const std::array<typename F::Elem, 6>& h,
                                                           Rng& rng) {
  int piv = -1;
  for (int i = 0; i < 6; ++i)
    if (!F::is_zero(h[i])) piv = i;
  if (piv < 0) throw UsageError("zero covector");
  auto a = random_point6(fld, rng);
  typename F::Elem dot = fld.zero();
  for (int i = 0; i < 6; ++i)
    if (i != piv) dot = fld.add(dot, fld.mul(h[i], a[i]));
  a[piv] = fld.neg(fld.div(dot, h[piv]));
  return a;
}

/// Degree of a zero-dimensional linear section; retries with fresh data
/// until the dimension check passes.
template <class F>
long long section_degree(const Ideal<F>& b, const std::function<std::vector<Poly<F>>(Rng&)>& cut,
                         Rng& rng, const char* what) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Poly<F>> gens = b.gens();
    auto extra = cut(rng);
    gens.insert(gens.end(), extra.begin(), extra.end());
    Ideal<F> section(b.ring(), std::move(gens));
    const auto& inv = section.invariants();
    if (inv.projective_dimension() <= 0) return inv.degree();
  }
  throw GenericityError(std::string("multidegree: ") + what +
                        " section stayed positive-dimensional after 8 seeds");
}

}  // namespace detail

/// Multidegree (a0, a1, a2) of a four-dimensional family of lines:
/// a0 through a general point, a1 in a general hyperplane meeting a general
/// line of it, a2 inside a general 3-space. Degrees are read from the
/// constant Hilbert polynomial of the section; the Hilbert polynomial is
/// blind to irrelevant-primary junk, so no saturation step is needed.
template <class F>
Multidegree multidegree(const Ideal<F>& b, uint64_t seed) {
  const Ring<F>* pr = b.ring();
  const auto& fld = pr->field();
  Multidegree md;
  {
    Rng rng(derive_subseed(seed, "md-a0"));
    md.a0 = detail::section_degree<F>(
        b,
        [&](Rng& r2) { return grassmann::section_through_point(pr, detail::random_point6(fld, r2)); },
        rng, "order");
  }
  {
    Rng rng(derive_subseed(seed, "md-a1"));
    md.a1 = detail::section_degree<F>(
        b,
        [&](Rng& r2) {
          auto h = detail::random_point6(fld, r2);
          auto p1 = detail::random_point_in_hyperplane(fld, h, r2);
          auto p2 = detail::random_point_in_hyperplane(fld, h, r2);
          auto q = grassmann::line_through(fld, p1, p2);
          auto gens = grassmann::section_in_hyperplane(pr, h);
          auto meet = grassmann::section_meets_line(pr, q);
          gens.insert(gens.end(), meet.begin(), meet.end());
          return gens;
        },
        rng, "hyperplane-line");
  }
  {
    Rng rng(derive_subseed(seed, "md-a2"));
    md.a2 = detail::section_degree<F>(
        b,
        [&](Rng& r2) {
          auto h1 = detail::random_point6(fld, r2);
          auto h2 = detail::random_point6(fld, r2);
          return grassmann::section_in_3space(pr, h1, h2);
        },
        rng, "3-space");
  }
  return md;
}

}  // namespace congruence
}  // namespace linecong
