#include <doctest.h>

#include <linecong/groebner.hpp>
#include <linecong/rng.hpp>
#include <linecong/textio.hpp>

using namespace linecong;

namespace {

const Ring<Fp>* ring_xy() { return Ring<Fp>::get(Fp(32003), {"x", "y"}); }

PolyFp P(const std::string& s, const Ring<Fp>* r) { return parse_poly(s, r); }

}  // namespace

TEST_CASE("field arithmetic") {
  Fp f(32003);
  CHECK(f.add(32000, 5) == 2);
  CHECK(f.mul(f.inv(7), 7) == 1);
  CHECK(f.from_int(-1) == 32002);
  CHECK(f.to_balanced(32002) == -1);
  CHECK_THROWS_AS(Fp(32004), UsageError);

  Rat q;
  CHECK(q.add(q.from_int(1), q.div(q.one(), q.from_int(3))) == mpq_class(4, 3));
}

TEST_CASE("monomial orders") {
  auto* r = ring_xy();
  auto x = PolyFp::variable(r, 0), y = PolyFp::variable(r, 1);
  // grevlex: x^2 > x*y > y^2 > x > y
  auto p = x * x + x * y + y * y + x + y;
  REQUIRE(p.nterms() == 5);
  CHECK(to_text(p) == "x^2+x*y+y^2+x+y");

  auto* rl = Ring<Fp>::get(Fp(32003), {"t", "x", "y"}, Order::lex());
  auto t3 = PolyFp::variable(rl, 0).pow(3);
  auto xy = PolyFp::variable(rl, 1) * PolyFp::variable(rl, 2).pow(9);
  CHECK((t3 + xy).lt().e == t3.lt().e);  // lex ignores degree
}

TEST_CASE("poly arithmetic and parser round-trip") {
  auto* r = ring_xy();
  auto p = P("(x+y)^2", r);
  CHECK(to_text(p) == "x^2+2*x*y+y^2");
  CHECK(p - p == PolyFp::zero(r));
  CHECK(to_text(P("x^2-y", r) * P("x^2+y", r)) == "x^4-y^2");
  CHECK(to_text(parse_poly(to_text(p), r)) == to_text(p));
  CHECK_THROWS_AS(P("x+z", r), UsageError);
  CHECK_THROWS_AS(P("x+*y", r), UsageError);

  // derivative and evaluation
  CHECK(to_text(p.derivative(0)) == "2*x+2*y");
  Fp f(32003);
  CHECK(p.evaluate({f.from_int(2), f.from_int(3)}) == f.from_int(25));
}

TEST_CASE("plucker antisymmetry in the parser") {
  auto* r = Ring<Fp>::get(Fp(32003), {"p01", "p25"});
  CHECK(to_text(P("p10+p25", r)) == "-p01+p25");
  CHECK(to_text(P("p10^2", r)) == "p01^2");
  CHECK_THROWS_AS(P("p11", r), UsageError);
}

TEST_CASE("groebner: forced linear reduction") {
  auto* r = ring_xy();
  auto gb = groebner(r, {P("x^2-y", r), P("x", r)});
  REQUIRE(gb.size() == 2);
  CHECK(to_text(gb.polys()[0]) == "y");
  CHECK(to_text(gb.polys()[1]) == "x");
}

TEST_CASE("groebner: twisted cubic parametrization, lex elimination order") {
  auto* r = Ring<Fp>::get(Fp(32003), {"t", "x", "y"}, Order::lex());
  auto gb = groebner(r, {P("x-t^2", r), P("y-t^3", r)});
  bool found = false;
  for (const auto& g : gb.polys()) found |= (to_text(g) == "x^3-y^2");
  CHECK(found);
}

TEST_CASE("groebner over Q") {
  auto* r = Ring<Rat>::get(Rat(), {"t", "x", "y"}, Order::lex());
  auto gb = groebner(r, {parse_poly<Rat>("2*x-t^2", r), parse_poly<Rat>("3*y-t^3", r)});
  bool found = false;
  for (const auto& g : gb.polys()) found |= (to_text(g) == "8*x^3-9*y^2");
  CHECK(found);
}

TEST_CASE("normal form basics") {
  auto* r = ring_xy();
  auto gb = groebner(r, {P("x", r)});
  CHECK(to_text(normal_form(P("(x+y)^2", r), gb)) == "y^2");
  CHECK(normal_form(P("x^2+x*y", r), gb).is_zero());
  CHECK(to_text(normal_form(P("1", r), gb)) == "1");
}

TEST_CASE("groebner idempotence and canonicality") {
  auto* r = ring_xy();
  std::vector<PolyFp> gens = {P("x^2+y^2-1", r), P("x*y-2", r)};
  auto gb1 = groebner(r, gens);
  auto gb2 = groebner(r, gb1.polys());
  CHECK(gb1 == gb2);
  // generator order must not matter
  auto gb3 = groebner(r, {gens[1], gens[0]});
  CHECK(gb1 == gb3);
}

TEST_CASE("membership round-trip property") {
  auto* r = Ring<Fp>::get(Fp(32003), {"x", "y", "z"});
  Fp f(32003);
  Rng rng(7);
  auto random_poly = [&](int maxdeg, int nterms) {
    std::vector<PolyFp::Term> ts;
    for (int k = 0; k < nterms; ++k) {
      Exps e{};
      for (int i = 0; i < 3; ++i) e[i] = uint16_t(rng.below(maxdeg + 1));
      ts.push_back({e, r->deg(e), f.from_int((long long)rng.below(32002) + 1)});
    }
    return PolyFp::from_terms(r, std::move(ts));
  };
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<PolyFp> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_poly(2, 3));
    auto gb = groebner(r, gens);
    PolyFp member = PolyFp::zero(r);
    for (const auto& g : gens) member = member + random_poly(1, 2) * g;
    CHECK(normal_form(member, gb).is_zero());
  }
}
