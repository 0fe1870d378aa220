#pragma once

#include "linecong/congruence.hpp"
#include "linecong/resolution.hpp"

namespace linecong {
namespace focal {

/// The incidence chart of the family: parameters u1..u5 with u0 = 1, point
/// coordinates y0..y4 with y5 = 1. The ring eliminates the u-block; the
/// variables are listed u5..u1 so the incidence relations rewrite each u_i+1
/// in terms of u_i and the point.
template <class F>
struct IncidenceChart {
  const Ring<F>* ring = nullptr;
  std::vector<Poly<F>> incidence;  // u_i y0 - u_{i+1} - y_i, i = 1..4
  Poly<F> h;                       // congruence equation on the chart

  int u_index(int i) const { return ring->var_index("u" + std::to_string(i)); }
  int y_index(int i) const { return ring->var_index("y" + std::to_string(i)); }
};

template <class F>
const Ring<F>* incidence_ring(const F& fld) {
  return Ring<F>::get(fld, {"u5", "u4", "u3", "u2", "u1", "y0", "y1", "y2", "y3", "y4"},
                      Order::elim(5));
}

/// Build the chart for a congruence equation given in u1..u5.
template <class F>
IncidenceChart<F> make_incidence_chart(const F& fld, const Poly<F>& chart_equation) {
  IncidenceChart<F> chart;
  chart.ring = incidence_ring(fld);
  const Ring<F>* u5r = grassmann::chart_ring(fld);
  if (chart_equation.ring() != u5r)
    throw UsageError("chart equation must live in the u1..u5 chart ring");
  std::vector<int> up(5);
  for (int i = 1; i <= 5; ++i)
    up[u5r->var_index("u" + std::to_string(i))] = chart.ring->var_index("u" + std::to_string(i));
  chart.h = chart_equation.rename(chart.ring, up);
  auto v = [&](const std::string& nm) { return Poly<F>::variable(chart.ring, nm); };
  for (int i = 1; i <= 4; ++i)
    chart.incidence.push_back(v("u" + std::to_string(i)) * v("y0") -
                              v("u" + std::to_string(i + 1)) - v("y" + std::to_string(i)));
  return chart;
}

/// Determinant of the bidiagonal ramification matrix: y0 along the first
/// four diagonal entries, -1 below, the u-partials of h in the last column.
/// Expands to h1 + h2 y0 + h3 y0^2 + h4 y0^3 + h5 y0^4.
template <class F>
Poly<F> ramification_determinant(const IncidenceChart<F>& chart) {
  if (chart.h.is_zero()) throw UsageError("ramification determinant needs a chart equation");
  const Ring<F>* r = chart.ring;
  PolyMatrix<F> m(5, std::vector<Poly<F>>(5, Poly<F>::zero(r)));
  Poly<F> y0 = Poly<F>::variable(r, chart.y_index(0));
  for (int i = 0; i < 4; ++i) {
    m[i][i] = y0;
    m[i + 1][i] = Poly<F>::from_int(r, -1);
  }
  for (int i = 0; i < 5; ++i) m[i][4] = chart.h.derivative(chart.u_index(i + 1));
  return poly_det(r, m);
}

/// The coordinate ring of P^5 on the point side.
template <class F>
const Ring<F>* focal_space_ring(const F& fld) {
  return grassmann::point_ring(fld);
}

/// Focal locus of the chart: eliminate the parameters from the incidence
/// relations, the congruence equation and the ramification determinant, then
/// close up in P^5 (y_i -> x_i, chart plane x5). The unit ideal marks the
/// degenerate case where the chart misses the congruence entirely.
template <class F>
Ideal<F> focal_locus(const IncidenceChart<F>& chart, uint64_t seed) {
  const F& fld = chart.ring->field();
  const Ring<F>* xr = focal_space_ring(fld);
  std::vector<Poly<F>> gens = chart.incidence;
  gens.push_back(chart.h);
  gens.push_back(ramification_determinant(chart));
  auto gb = groebner(chart.ring, gens);
  if (gb.is_unit()) return Ideal<F>(xr, {Poly<F>::from_int(xr, 1)});

  std::vector<int> down(chart.ring->nvars(), -1);
  for (int i = 0; i < 5; ++i) down[chart.y_index(i)] = xr->var_index("x" + std::to_string(i));
  int x5 = xr->var_index("x5");
  std::vector<Poly<F>> affine;
  for (const auto& g : gb.polys())
    if (chart.ring->front_free(g.lt().e)) affine.push_back(g.rename(xr, down).homogenized(x5));
  Ideal<F> closure(xr, std::move(affine));
  closure = ideal_saturate(closure, Poly<F>::variable(xr, x5));
  return saturate_irrelevant(closure, derive_subseed(seed, "focal-closure"));
}

/// Restrict an ideal to a hyperplane: substitute the pivot variable of the
/// linear form away and move to the subring on the remaining names.
template <class F>
Ideal<F> restrict_to_hyperplane(const Ideal<F>& i, const Poly<F>& h) {
  const Ring<F>* r = i.ring();
  if (h.degree() != 1 || !h.is_homogeneous()) throw UsageError("hyperplane must be a linear form");
  const auto& fld = r->field();
  int n = r->nvars();
  std::vector<typename F::Elem> c(n, fld.zero());
  for (const auto& t : h.terms())
    for (int v = 0; v < n; ++v)
      if (t.e[v]) c[v] = t.c;
  int piv = -1;
  for (int v = n; v-- > 0;)
    if (!F::is_zero(c[v])) {
      piv = v;
      break;
    }
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v)
    if (v != piv) names.push_back(r->name(v));
  const Ring<F>* sub = Ring<F>::get(fld, names, r->order(), {});
  std::vector<Poly<F>> images(n, Poly<F>());
  for (int v = 0, j = 0; v < n; ++v) {
    if (v == piv) continue;
    images[v] = Poly<F>::variable(sub, j++);
  }
  Poly<F> pivot_image = Poly<F>::zero(sub);
  for (int v = 0; v < n; ++v) {
    if (v == piv || F::is_zero(c[v])) continue;
    pivot_image = pivot_image - images[v].scaled(fld.div(c[v], c[piv]));
  }
  images[piv] = pivot_image;
  std::vector<Poly<F>> out;
  for (const auto& g : i.gens()) out.push_back(g.substitute(sub, images));
  return Ideal<F>(sub, std::move(out));
}

template <class F>
Poly<F> random_linear_form(const Ring<F>* r, Rng& rng) {
  const auto& fld = r->field();
  uint64_t p = fld.characteristic() ? fld.characteristic() : 1000;
  Poly<F> h = Poly<F>::zero(r);
  for (int v = 0; v < r->nvars(); ++v)
    h = h + Poly<F>::variable(r, v).scaled(fld.from_int((long long)rng.below(p)));
  if (h.is_zero()) h = Poly<F>::variable(r, 0);
  return h;
}

/// Arithmetic genus of the curve cut by general hyperplanes: slice down to
/// dimension one, saturate, and read d*t + 1 - pi off the Hilbert
/// polynomial.
template <class F>
long long sectional_genus_by_slicing(const Ideal<F>& i, uint64_t seed, const char* tag) {
  int dim = i.invariants().projective_dimension();
  if (dim < 1) throw UsageError("sectional genus needs a positive-dimensional scheme");
  Rng rng(derive_subseed(seed, std::string("genus-") + tag));
  for (int attempt = 0; attempt < 8; ++attempt) {
    Ideal<F> cur = i;
    for (int k = 0; k < dim - 1; ++k) cur = restrict_to_hyperplane(cur, random_linear_form(cur.ring(), rng));
    cur = saturate_irrelevant(cur, rng.next());
    const auto& inv = cur.invariants();
    if (inv.projective_dimension() != 1) continue;
    const HilbertPolynomial& hp = inv.hilbert_polynomial();
    if (hp.degree() != 1) continue;
    mpq_class at0 = hp(0);  // 1 - pi
    return 1 - mpz_class(at0.get_num() / at0.get_den()).get_si();
  }
  throw GenericityError(std::string("sectional genus: degenerate slices for ") + tag);
}

/// Singular locus by the Jacobian criterion: add the codim-size minors of
/// the Jacobian of a minimal generating set, then saturate away the
/// irrelevant junk.
template <class F>
Ideal<F> singular_locus(const Ideal<F>& i, uint64_t seed) {
  const Ring<F>* r = i.ring();
  int codim = r->nvars() - 1 - i.invariants().projective_dimension();
  auto mingens = minimal_generators(r, i.gens());
  std::vector<int> vars(r->nvars());
  for (int v = 0; v < r->nvars(); ++v) vars[v] = v;
  auto jac = jacobian(r, mingens, vars);
  GradedMatrix<F> m;
  m.ring = r;
  m.row_twists.assign(vars.size(), 0);
  for (const auto& g : mingens) m.col_twists.push_back(int(g.degree()));
  m.cols.assign(mingens.size(), std::vector<Poly<F>>(vars.size(), Poly<F>::zero(r)));
  for (size_t j = 0; j < mingens.size(); ++j)
    for (size_t v = 0; v < vars.size(); ++v) m.cols[j][v] = jac[v][j];
  std::vector<Poly<F>> gens = i.gens();
  const auto& gb = i.groebner();
  for_each_minor<F>(m, codim, [&](const Poly<F>& d) {
    Poly<F> rem = gb.reduce(d);
    if (!rem.is_zero()) gens.push_back(rem);
    return true;
  });
  Ideal<F> sing(r, std::move(gens));
  return saturate_irrelevant(sing, derive_subseed(seed, "singular-locus"));
}

/// Whether two ideals have the same radical (generator-wise Rabinowitsch in
/// both directions, on the canonical bases).
template <class F>
bool same_radical(const Ideal<F>& a, const Ideal<F>& b) {
  for (const auto& g : b.groebner().polys())
    if (!in_radical(g, a)) return false;
  for (const auto& g : a.groebner().polys())
    if (!in_radical(g, b)) return false;
  return true;
}

/// Does the ideal of k x k minors of the matrix cut out (at most) the origin
/// of the affine cone? Checked by a zero-dimensionality test on batches, so
/// a positive answer usually stops long before all minors are expanded.
template <class F>
bool minors_define_irrelevant_ideal(const GradedMatrix<F>& m, int k) {
  const Ring<F>* r = m.ring;
  std::vector<Poly<F>> acc;
  bool confirmed = false;
  size_t batch = 64;
  auto zero_dim_affine = [&]() {
    auto gb = groebner(r, acc);
    if (gb.is_unit()) return true;
    // every variable must carry a pure-power leading term
    for (int v = 0; v < r->nvars(); ++v) {
      bool found = false;
      for (const auto& g : gb.polys()) {
        const Exps& e = g.lt().e;
        bool pure = e[v] > 0;
        for (int w = 0; w < r->nvars() && pure; ++w) pure &= (w == v || e[w] == 0);
        if (pure) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  };
  for_each_minor<F>(m, k, [&](const Poly<F>& d) {
    if (!d.is_zero()) acc.push_back(d);
    if (acc.size() % batch == 0 && !acc.empty()) {
      if (zero_dim_affine()) {
        confirmed = true;
        return false;
      }
      batch *= 2;
    }
    return true;
  });
  return confirmed || (!acc.empty() && zero_dim_affine());
}

/// Everything the pipeline knows about a focal threefold.
template <class F>
struct FocalReport {
  Ideal<F> ideal;
  HilbertPolynomial hilbert_polynomial;
  int dimension = 0;
  long long degree = 0;
  long long sectional_genus = 0;
  Ideal<F> singular_locus_ideal;
  bool twisted_cubic_match = false;
  BettiTable betti;
  bool lcm_certificate = false;
};

template <class F>
FocalReport<F> focal_invariants(const Ideal<F>& ix, uint64_t seed, bool with_homology = true) {
  const auto& inv = ix.invariants();
  if (inv.projective_dimension() != 3)
    throw UsageError("focal invariants expect a threefold, got dimension " +
                     std::to_string(inv.projective_dimension()));
  FocalReport<F> rep;
  rep.ideal = ix;
  rep.hilbert_polynomial = inv.hilbert_polynomial();
  rep.dimension = inv.projective_dimension();
  rep.degree = inv.degree();
  rep.sectional_genus = sectional_genus_by_slicing(ix, seed, "focal");
  rep.singular_locus_ideal = singular_locus(ix, seed);
  Ideal<F> cubic = grassmann::fixture_ideal(ix.ring()->field(), "twisted_cubic_C");
  rep.twisted_cubic_match = same_radical(rep.singular_locus_ideal, cubic);
  if (with_homology) {
    auto res = free_resolution(ix.ring(), ix.gens());
    rep.betti = res.betti();
    // the middle map of the resolution: F_4 -> F_3 when the length is 5
    if (res.length() >= 4)
      rep.lcm_certificate = minors_define_irrelevant_ideal(res.matrices[3], 5);
  }
  return rep;
}

struct NormalityCertificate {
  long long dim_ix_2 = 0, dim_ix_3 = 0;
  long long dim_is_2 = 0, dim_is_3 = 0;
  long long h1_at_2 = 0;
  bool non_lifting_at_3 = false;
  std::string verdict;
};

/// Graded dimensions of the ideal and of a seeded general hyperplane
/// section, the connections-rule verdict, and h^1 of the twisted ideal
/// sheaf from the dualized resolution.
template <class F>
NormalityCertificate normality_certificate(const Ideal<F>& ix, uint64_t seed) {
  NormalityCertificate cert;
  const auto& inv = ix.invariants();
  cert.dim_ix_2 = inv.ideal_dim(2);
  cert.dim_ix_3 = inv.ideal_dim(3);
  Rng rng(derive_subseed(seed, "normality-section"));
  Ideal<F> section = restrict_to_hyperplane(ix, random_linear_form(ix.ring(), rng));
  section = saturate_irrelevant(section, rng.next());
  cert.dim_is_2 = section.invariants().ideal_dim(2);
  cert.dim_is_3 = section.invariants().ideal_dim(3);
  auto res = free_resolution(ix.ring(), ix.gens());
  cert.h1_at_2 = h1_ideal_sheaf(res, 2);
  // restriction H0(I_X(3)) -> H0(I_S(3)) has kernel H0(I_X(2))
  cert.non_lifting_at_3 = cert.dim_is_3 > cert.dim_ix_3 - cert.dim_ix_2;
  bool two_normal = cert.h1_at_2 == 0;
  if (cert.non_lifting_at_3 && two_normal)
    throw UsageError("normality certificate: inconsistent indicators");
  cert.verdict = cert.non_lifting_at_3 ? "non-lifting-at-3 hence not 2-normal"
               : two_normal            ? "2-normal"
                                       : "not 2-normal (h1 positive)";
  return cert;
}

/// Rational points of a zero-dimensional ideal in a 3-variable ring, found
/// on the chart where the last coordinate is 1.
template <class F>
std::vector<std::array<typename F::Elem, 3>> rational_points_p2(const Ideal<F>& i) {
  using C = typename F::Elem;
  const Ring<F>* r = i.ring();
  const auto& fld = r->field();
  if (r->nvars() != 3) throw UsageError("rational_points_p2 expects three variables");
  if (fld.characteristic() == 0) throw UsageError("point scan needs a finite field");
  // affine chart: last variable = 1, lex basis gives a triangular system
  const Ring<F>* lexr = Ring<F>::get(fld, {r->name(0), r->name(1)}, Order::lex());
  std::vector<Poly<F>> aff;
  std::vector<Poly<F>> images = {Poly<F>::variable(lexr, 0), Poly<F>::variable(lexr, 1),
                                 Poly<F>::from_int(lexr, 1)};
  for (const auto& g : i.gens()) aff.push_back(g.substitute(lexr, images));
  auto gb = groebner(lexr, aff);
  if (gb.is_unit()) return {};
  // the smallest-variable univariate part
  Poly<F> uni = Poly<F>::zero(lexr);
  for (const auto& g : gb.polys()) {
    bool only_last = true;
    for (const auto& t : g.terms()) only_last &= (t.e[0] == 0);
    if (only_last && !g.is_zero()) {
      uni = g;
      break;
    }
  }
  std::vector<std::array<C, 3>> points;
  if (uni.is_zero()) return points;  // positive-dimensional chart; caller retries
  uint32_t p = fld.characteristic();
  for (uint32_t v = 0; v < p; ++v) {
    C val = fld.from_int(v);
    if (!F::is_zero(uni.evaluate({fld.zero(), val}))) continue;
    // substitute and scan the first variable
    bool any = false;
    for (uint32_t w = 0; w < p; ++w) {
      C wal = fld.from_int(w);
      bool ok = true;
      for (const auto& g : gb.polys()) ok &= F::is_zero(g.evaluate({wal, val}));
      if (ok) {
        points.push_back({wal, val, fld.one()});
        any = true;
      }
    }
    (void)any;
  }
  return points;
}

template <class F>
struct PencilCheck {
  std::array<typename F::Elem, 6> point;
  int section_dimension = -2;
  long long section_degree = 0;
  bool is_planar_pencil = false;
};

/// Sample a rational focal point from a curve section of X and test that the
/// congruence lines through it sweep a line of the Pluecker space (dimension
/// one, degree one): a planar pencil.
template <class F>
PencilCheck<F> pencil_at_focal_point(const Ideal<F>& ib, const Ideal<F>& ix, uint64_t seed) {
  using C = typename F::Elem;
  const Ring<F>* xr = ix.ring();
  const auto& fld = xr->field();
  Rng rng(derive_subseed(seed, "pencil-point"));
  for (int attempt = 0; attempt < 16; ++attempt) {
    // three hyperplane cuts take the threefold down to points in a P^2
    Ideal<F> cur = ix;
    std::vector<std::vector<Poly<F>>> lifts;  // images used at each cut
    std::vector<const Ring<F>*> rings;
    bool degenerate = false;
    for (int k = 0; k < 3; ++k) {
      rings.push_back(cur.ring());
      Poly<F> h = random_linear_form(cur.ring(), rng);
      Ideal<F> next = restrict_to_hyperplane(cur, h);
      if (next.ring()->nvars() != cur.ring()->nvars() - 1) {
        degenerate = true;
        break;
      }
      // remember the substitution images to lift points back later
      const Ring<F>* sub = next.ring();
      std::vector<Poly<F>> images(cur.ring()->nvars(), Poly<F>());
      {
        // rebuild the same images restrict_to_hyperplane used
        int n = cur.ring()->nvars();
        std::vector<C> c(n, fld.zero());
        for (const auto& t : h.terms())
          for (int v = 0; v < n; ++v)
            if (t.e[v]) c[v] = t.c;
        int piv = -1;
        for (int v = n; v-- > 0;)
          if (!F::is_zero(c[v])) {
            piv = v;
            break;
          }
        for (int v = 0, j = 0; v < n; ++v) {
          if (v == piv) continue;
          images[v] = Poly<F>::variable(sub, j++);
        }
        Poly<F> pv = Poly<F>::zero(sub);
        for (int v = 0; v < n; ++v) {
          if (v == piv || F::is_zero(c[v])) continue;
          pv = pv - images[v].scaled(fld.div(c[v], c[piv]));
        }
        images[piv] = pv;
      }
      lifts.push_back(images);
      cur = next;
    }
    if (degenerate) continue;
    auto pts = rational_points_p2(cur);
    for (const auto& p3 : pts) {
      // lift through the three substitutions back to P^5 coordinates
      std::vector<C> coords(p3.begin(), p3.end());
      for (int k = 2; k >= 0; --k) {
        std::vector<C> up(rings[k]->nvars());
        for (int v = 0; v < rings[k]->nvars(); ++v) up[v] = lifts[k][v].evaluate(coords);
        coords = up;
      }
      std::array<C, 6> pt;
      for (int v = 0; v < 6; ++v) pt[v] = coords[v];
      bool on_x = true;
      for (const auto& g : ix.gens()) on_x &= F::is_zero(g.evaluate(coords));
      if (!on_x) continue;
      // avoid the parasitical 3-space: need x0 or x5 nonzero
      if (F::is_zero(pt[0]) && F::is_zero(pt[5])) continue;
      PencilCheck<F> out;
      out.point = pt;
      std::vector<Poly<F>> gens = ib.gens();
      auto sect = grassmann::section_through_point(ib.ring(), pt);
      gens.insert(gens.end(), sect.begin(), sect.end());
      Ideal<F> lines(ib.ring(), std::move(gens));
      const auto& inv = lines.invariants();
      out.section_dimension = inv.projective_dimension();
      out.section_degree = inv.degree();
      out.is_planar_pencil = (out.section_dimension == 1 && out.section_degree == 1);
      return out;
    }
  }
  throw SamplingError("no rational focal point found; try another seed or a larger field");
}

struct FociOnLine {
  int degree_in_y0 = -1;
  bool distinct_roots = false;
};

/// Restrict the ramification determinant to the line with chart parameters
/// (1, u1..u5): a univariate polynomial in the line coordinate y0. On a
/// general line of an order-one congruence of this family it has degree 4
/// with distinct roots: four foci.
template <class F>
FociOnLine foci_on_line(const IncidenceChart<F>& chart,
                        const std::array<typename F::Elem, 5>& u) {
  using C = typename F::Elem;
  const Ring<F>* r = chart.ring;
  const auto& fld = r->field();
  Poly<F> det = ramification_determinant(chart);
  // y_i = u_i y0 - u_{i+1} on the line (u0 = 1, y5 = 1)
  std::vector<Poly<F>> images(r->nvars(), Poly<F>());
  for (int i = 1; i <= 5; ++i) images[chart.u_index(i)] = Poly<F>::constant(r, u[i - 1]);
  Poly<F> y0 = Poly<F>::variable(r, chart.y_index(0));
  images[chart.y_index(0)] = y0;
  for (int i = 1; i <= 4; ++i)
    images[chart.y_index(i)] = y0.scaled(u[i - 1]) - Poly<F>::constant(r, u[i]);
  Poly<F> uni = det.substitute(r, images);
  // collect dense univariate coefficients in y0
  int y0i = chart.y_index(0);
  std::vector<C> cs;
  for (const auto& t : uni.terms()) {
    if (size_t(t.e[y0i]) >= cs.size()) cs.resize(t.e[y0i] + 1, fld.zero());
    cs[t.e[y0i]] = fld.add(cs[t.e[y0i]], t.c);
  }
  while (!cs.empty() && F::is_zero(cs.back())) cs.pop_back();
  FociOnLine out;
  if (cs.empty()) return out;
  out.degree_in_y0 = int(cs.size()) - 1;
  // squarefree iff gcd(f, f') is a unit
  auto degree_of = [](const std::vector<C>& v) { return int(v.size()) - 1; };
  std::vector<C> a = cs, b;
  for (size_t i = 1; i < cs.size(); ++i) b.push_back(fld.mul(cs[i], fld.from_int(long(i))));
  while (!b.empty() && F::is_zero(b.back())) b.pop_back();
  while (!b.empty()) {
    // a mod b
    while (degree_of(a) >= degree_of(b)) {
      C q = fld.div(a.back(), b.back());
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        a[i + shift] = fld.sub(a[i + shift], fld.mul(q, b[i]));
      while (!a.empty() && F::is_zero(a.back())) a.pop_back();
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  out.distinct_roots = (degree_of(a) == 0);
  return out;
}

template <class F>
struct FanoInvariants {
  long long degree = 0;
  long long sectional_genus = 0;
  long long span_codim = 0;
  int smooth_samples_pass = 0;
  int smooth_samples_total = 0;
};

/// Degree, curve-section genus, span codimension and sampled smoothness
/// evidence for the quadratic-case congruence in its Pluecker embedding.
template <class F>
FanoInvariants<F> fano_invariants(const congruence::CongruenceSpec<F>& spec, uint64_t seed,
                                  int samples = 50) {
  using C = typename F::Elem;
  const Ideal<F>& ib = spec.plucker_ideal;
  const Ring<F>* pr = ib.ring();
  const auto& fld = pr->field();
  FanoInvariants<F> out;
  const auto& inv = ib.invariants();
  if (inv.projective_dimension() != 4)
    throw UsageError("fano invariants expect the 4-dimensional congruence");
  out.degree = inv.degree();
  out.span_codim = inv.ideal_dim(1);
  out.sectional_genus = sectional_genus_by_slicing(ib, seed, "fano");

  // seeded smoothness evidence: chart points of B, Jacobian rank = codim 10
  if (spec.chart_equation.is_zero()) throw UsageError("fano invariants need the chart equation");
  Rng rng(derive_subseed(seed, "fano-smooth"));
  const Ring<F>* u5r = grassmann::chart_ring(fld);
  const auto& gens = ib.groebner().polys();
  uint64_t p = fld.characteristic();
  int u5i = u5r->var_index("u5");
  for (int s = 0; s < samples; ++s) {
    // solve the chart equation for u5 (it is linear in u5)
    std::array<C, 6> u;
    u[0] = fld.one();
    for (int tries = 0;; ++tries) {
      if (tries > 64) throw SamplingError("chart equation degenerate in u5");
      for (int i = 1; i <= 4; ++i) u[i] = fld.from_int((long long)rng.below(p));
      std::vector<Poly<F>> images(5, Poly<F>());
      for (int i = 1; i <= 4; ++i)
        images[u5r->var_index("u" + std::to_string(i))] = Poly<F>::constant(u5r, u[i]);
      images[u5i] = Poly<F>::variable(u5r, u5i);
      Poly<F> uni = spec.chart_equation.substitute(u5r, images);
      C a = fld.zero(), b = fld.zero();
      for (const auto& t : uni.terms()) {
        if (t.e[u5i] == 1)
          a = t.c;
        else if (t.e[u5i] == 0)
          b = t.c;
        else
          throw UsageError("chart equation is not linear in u5");
      }
      if (F::is_zero(a)) continue;
      u[5] = fld.neg(fld.div(b, a));
      break;
    }
    auto pt = grassmann::gamma_chart_point(fld, u);
    std::vector<C> pv(pt.begin(), pt.end());
    bool on_b = true;
    for (const auto& g : gens) on_b &= F::is_zero(g.evaluate(pv));
    if (!on_b) {
      ++out.smooth_samples_total;
      continue;  // not a point of B: counts as a failed sample
    }
    DenseMat<F> jac(fld, int(gens.size()), 15);
    for (int gi = 0; gi < int(gens.size()); ++gi)
      for (int v = 0; v < 15; ++v) jac.at(gi, v) = gens[gi].derivative(v).evaluate(pv);
    ++out.smooth_samples_total;
    if (jac.row_reduce() == 10) ++out.smooth_samples_pass;
  }
  return out;
}

}  // namespace focal
}  // namespace linecong
