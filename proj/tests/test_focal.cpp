#include <doctest.h>

#include <linecong/focal.hpp>

using namespace linecong;
using namespace linecong::congruence;
using namespace linecong::focal;

namespace {
const Fp kF(32003);

PolyFp chart_poly(const char* s) { return parse_poly<Fp>(s, grassmann::chart_ring(kF)); }
}  // namespace

TEST_CASE("ramification determinant: shape and the trivial charts") {
  // h = u5: only h5 = 1 survives, determinant y0^4
  auto chart = make_incidence_chart(kF, chart_poly("u5"));
  CHECK(to_text(ramification_determinant(chart)) == "y0^4");
  // h = u1: the unit cofactor
  auto chart1 = make_incidence_chart(kF, chart_poly("u1"));
  CHECK(to_text(ramification_determinant(chart1)) == "1");
}

TEST_CASE("ramification determinant equals the cofactor expansion, 20 seeds") {
  Rng rng(77);
  auto* u5r = grassmann::chart_ring(kF);
  for (int trial = 0; trial < 20; ++trial) {
    // random chart polynomial of degree <= 3
    std::vector<PolyFp::Term> ts;
    for (int k = 0; k < 8; ++k) {
      Exps e{};
      int left = 3;
      for (int v = 0; v < 5; ++v) {
        int p = int(rng.below(left + 1));
        e[v] = uint16_t(p);
        left -= p;
      }
      ts.push_back({e, u5r->deg(e), Fp::Elem(1 + rng.below(32002))});
    }
    auto h = PolyFp::from_terms(u5r, std::move(ts));
    if (h.is_zero()) continue;
    auto chart = make_incidence_chart(kF, h);
    auto det = ramification_determinant(chart);
    // expansion h1 + h2 y0 + h3 y0^2 + h4 y0^3 + h5 y0^4
    auto y0 = PolyFp::variable(chart.ring, chart.y_index(0));
    PolyFp expect = PolyFp::zero(chart.ring);
    PolyFp ypow = PolyFp::from_int(chart.ring, 1);
    for (int i = 1; i <= 5; ++i) {
      expect = expect + chart.h.derivative(chart.u_index(i)) * ypow;
      ypow = ypow * y0;
    }
    REQUIRE(det == expect);
  }
}

TEST_CASE("incidence chart consistency: chart points land on the chart lines") {
  auto ex1 = build_congruence(kF, Case::ex1, 3);
  auto chart = make_incidence_chart(kF, ex1.chart_equation);
  Rng rng(8);
  int checked = 0;
  for (int t = 0; t < 40 && checked < 10; ++t) {
    std::array<Fp::Elem, 5> u;
    for (auto& c : u) c = Fp::Elem(rng.below(32003));
    // pick u5 solving the chart equation by scanning a few candidates
    bool found = false;
    for (uint32_t v = 0; v < 32003; ++v) {
      std::vector<Fp::Elem> pt = {u[0], u[1], u[2], u[3], Fp::Elem(v)};
      if (Fp::is_zero(ex1.chart_equation.evaluate(pt))) {
        u[4] = Fp::Elem(v);
        found = true;
        break;
      }
    }
    if (!found) continue;
    ++checked;
    // a point of the line: y0 free, y_i = u_i y0 - u_{i+1}
    Fp::Elem y0 = Fp::Elem(rng.below(32003));
    std::vector<Fp::Elem> vals(chart.ring->nvars(), 0);
    vals[chart.u_index(1)] = u[0];
    vals[chart.u_index(2)] = u[1];
    vals[chart.u_index(3)] = u[2];
    vals[chart.u_index(4)] = u[3];
    vals[chart.u_index(5)] = u[4];
    vals[chart.y_index(0)] = y0;
    for (int i = 1; i <= 4; ++i)
      vals[chart.y_index(i)] = kF.sub(kF.mul(u[i - 1], y0), u[i]);
    for (const auto& g : chart.incidence) REQUIRE(Fp::is_zero(g.evaluate(vals)));
    REQUIRE(Fp::is_zero(chart.h.evaluate(vals)));
  }
  CHECK(checked == 10);
}

TEST_CASE("foci on a line: the count and separability witness") {
  auto ex1 = build_congruence(kF, Case::ex1, 3);
  auto chart = make_incidence_chart(kF, ex1.chart_equation);
  Rng rng(9);
  int four = 0, total = 0;
  for (int t = 0; t < 40 && total < 10; ++t) {
    std::array<Fp::Elem, 5> u;
    for (int i = 0; i < 4; ++i) u[i] = Fp::Elem(rng.below(32003));
    bool found = false;
    for (uint32_t v = 0; v < 32003; ++v) {
      std::vector<Fp::Elem> pt = {u[0], u[1], u[2], u[3], Fp::Elem(v)};
      if (Fp::is_zero(ex1.chart_equation.evaluate(pt))) {
        u[4] = Fp::Elem(v);
        found = true;
        break;
      }
    }
    if (!found) continue;
    ++total;
    auto foci = foci_on_line(chart, u);
    if (foci.degree_in_y0 == 4 && foci.distinct_roots) ++four;
  }
  CHECK(total == 10);
  CHECK(four == 10);
}

TEST_CASE("degenerate chart: the tangent hyperplane has no visible lines") {
  auto chart = make_incidence_chart(kF, chart_poly("1"));
  auto ix = focal_locus(chart, 1);
  CHECK(ix.is_unit());
}

TEST_CASE("second example: visible focal components are three of the fixtures") {
  auto ex2 = build_congruence(kF, Case::ex2_residual, 3);
  auto chart = make_incidence_chart(kF, ex2.chart_equation);
  auto ix = focal_locus(chart, 3);
  REQUIRE(!ix.is_unit());
  // the radical contains the product of the three visible 3-spaces
  auto l1 = grassmann::fixture_ideal(kF, "ex2_L1");
  auto l2 = grassmann::fixture_ideal(kF, "ex2_L2");
  auto l3 = grassmann::fixture_ideal(kF, "ex2_L3");
  auto prod = ideal_product(ideal_product(l1, l2), l3);
  for (const auto& g : prod.gens()) CHECK(in_radical(g, ix));
  // and the invisible one is inside the chart plane
  auto l0 = grassmann::fixture_ideal(kF, "ex2_L0");
  CHECK(l0.contains(parse_poly<Fp>("x5", l0.ring())));
}

TEST_CASE("ex2 fixture configuration: pairwise lines inside L, triple points") {
  auto space_l = grassmann::fixture_ideal(kF, "space_L");
  std::vector<Ideal<Fp>> ls;
  for (int i = 0; i < 4; ++i)
    ls.push_back(grassmann::fixture_ideal(kF, "ex2_L" + std::to_string(i)));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      auto meet = ideal_sum(ls[i], ls[j]);
      CHECK(meet.invariants().projective_dimension() == 1);
      CHECK(meet.invariants().degree() == 1);
      CHECK(meet.contains(space_l));  // the line lies inside L
      for (int k = j + 1; k < 4; ++k) {
        auto triple = ideal_sum(meet, ls[k]);
        CHECK(triple.invariants().projective_dimension() == 0);
        CHECK(triple.invariants().degree() == 1);
      }
    }
}

TEST_CASE("ex1 focal threefold: full panel") {
  auto ex1 = build_congruence(kF, Case::ex1, 3);
  auto chart = make_incidence_chart(kF, ex1.chart_equation);
  auto ix = focal_locus(chart, 3);
  const auto& inv = ix.invariants();
  CHECK(inv.projective_dimension() == 3);
  CHECK(inv.degree() == 6);
  CHECK(inv.hilbert_polynomial().to_string() == "t^3+3*t^2+2");

  auto rep = focal_invariants(ix, 3, true);
  CHECK(rep.sectional_genus == 1);
  CHECK(rep.twisted_cubic_match);
  CHECK(rep.lcm_certificate);
  CHECK(rep.betti(1, 4) == 12);
  CHECK(rep.betti(2, 5) == 22);
  CHECK(rep.betti(3, 6) == 16);
  CHECK(rep.betti(4, 7) == 6);
  CHECK(rep.betti(5, 8) == 1);
  CHECK(rep.betti.length() == 5);

  auto cert = normality_certificate(ix, 3);
  CHECK(cert.dim_ix_2 == 0);
  CHECK(cert.dim_ix_3 == 0);
  CHECK(cert.dim_is_3 == 1);
  CHECK(cert.h1_at_2 == 1);
  CHECK(cert.non_lifting_at_3);

  // quartic surface section: X ∩ L is a degree-4 surface singular along C
  auto surface = restrict_to_hyperplane(
      restrict_to_hyperplane(ix, parse_poly<Fp>("x0", ix.ring())),
      parse_poly<Fp>("x5", restrict_to_hyperplane(ix, parse_poly<Fp>("x0", ix.ring())).ring()));
  surface = saturate_irrelevant(surface, 17);
  CHECK(surface.invariants().projective_dimension() == 2);
  CHECK(surface.invariants().degree() == 4);
  auto sing = singular_locus(surface, 17);
  auto* r4 = surface.ring();
  Ideal<Fp> cubic(r4, {parse_poly<Fp>("x1*x3-x2^2", r4), parse_poly<Fp>("x1*x4-x2*x3", r4),
                       parse_poly<Fp>("x2*x4-x3^2", r4)});
  // the singular locus contains the twisted cubic: every equation of the
  // singular scheme vanishes on it
  for (const auto& g : sing.gens()) CHECK(cubic.contains(g));
}

TEST_CASE("planar pencils at sampled focal points") {
  auto ex1 = build_congruence(kF, Case::ex1, 3);
  auto chart = make_incidence_chart(kF, ex1.chart_equation);
  auto ix = focal_locus(chart, 3);
  for (uint64_t seed : {11ull, 12ull}) {
    auto pencil = pencil_at_focal_point(ex1.plucker_ideal, ix, seed);
    CHECK(pencil.is_planar_pencil);
  }
  // a general (non-focal) point of an order-one congruence carries one line
  Rng rng(31);
  auto pt = congruence::detail::random_point6(kF, rng);
  std::vector<PolyFp> gens = ex1.plucker_ideal.gens();
  auto sect = grassmann::section_through_point(ex1.plucker_ideal.ring(), pt);
  gens.insert(gens.end(), sect.begin(), sect.end());
  Ideal<Fp> lines(ex1.plucker_ideal.ring(), std::move(gens));
  CHECK(lines.invariants().projective_dimension() == 0);
  CHECK(lines.invariants().degree() == 1);
}
