#include <doctest.h>

#include "flagval/error.hpp"
#include "flagval/factor.hpp"
#include "flagval/rng.hpp"
#include "flagval/valuation.hpp"

using namespace flagval;

namespace {

const FunctionField& k3t() {
  static const FunctionField k = FunctionField::parse("F3(t)");
  return k;
}
const FunctionField& k3xy() {
  static const FunctionField k = FunctionField::parse("F3(x,y)");
  return k;
}

}  // namespace

TEST_CASE("values at t and at infinity") {
  const auto& k = k3t();
  const RatFn f = k.element("t^2*(1-t)");
  CHECK(val(Place::parse("finite:t", k), f) == Gamma({2}));
  CHECK(val(Place::infinite(k.field()), f) == Gamma({-3}));
  CHECK_THROWS_AS(val(Place::parse("finite:t", k), k.element("0")), Error);
}

TEST_CASE("composite value") {
  const auto& k = k3xy();
  const Place p = Place::parse("composite:x|y", k);
  CHECK(p.rank() == 2);
  CHECK(val(p, k.element("x^3*(y+x)/y")) == Gamma({3, 0}));
  CHECK(val(p, k.element("y")) == Gamma({0, 1}));
  CHECK(val(p, k.element("x/y^5")) > Gamma({0, 7}));
}

TEST_CASE("units and 1 + m") {
  const auto& k = k3t();
  const Place t = Place::parse("finite:t", k);
  CHECK(in_units(t, k.element("1+t")));
  CHECK(in_one_plus_m(t, k.element("1+t")));
  CHECK_FALSE(in_units(t, k.element("t")));
  CHECK_FALSE(in_one_plus_m(t, k.element("t")));
  const RatFn q = k.element("(1+t)/(1-t)");
  CHECK(in_units(t, q));
  CHECK(in_one_plus_m(t, q));
  CHECK(val(t, q - k.element("1")) == Gamma({1}));
}

TEST_CASE("residues") {
  const auto& k = k3t();
  const Place t = Place::parse("finite:t", k);
  CHECK(is_one(residue(t, k.element("(1+t)/(1-t)"))));
  CHECK(to_string(residue(t, k.element("2+t^2"))) == "2");
  CHECK_THROWS_AS(residue(t, k.element("t")), Error);

  const auto& kxy = k3xy();
  const auto r = residue(Place::parse("curve:x", kxy), kxy.element("y+x"));
  REQUIRE(std::holds_alternative<RatFn>(r));
  CHECK(std::get<RatFn>(r) == RatFn::variable(kxy.field(), 1, 0));
}

TEST_CASE("splittings") {
  const auto& k = k3t();
  const Splitting s = make_splitting(Place::parse("finite:t", k));
  CHECK(from_divisor(s.section(3)) == k.element("t^3"));
  CHECK(s.certify(5));
  const Splitting inf = make_splitting(Place::infinite(k.field()));
  CHECK(val(inf.place(), inf.section(2)) == Gamma({2}));
  const auto& kxy = k3xy();
  CHECK(from_divisor(make_splitting(Place::parse("curve:x", kxy)).section(2)) == kxy.element("x^2"));
  CHECK_THROWS_AS(make_splitting(Place::parse("composite:x|y", kxy)), Error);
}

TEST_CASE("valuation flag on span(1, t, t^2) over F2") {
  const FunctionField k = FunctionField::parse("F2(t)");
  const auto s = embed_span(k, {k.element("1"), k.element("t"), k.element("t^2")});
  const Place t = Place::parse("finite:t", k);
  const auto v = valuation_flag_structure(t, s);
  REQUIRE(is_flag(v));
  const auto& chain = std::get<Flag>(v).chain.chain;
  REQUIRE(chain.size() == 2);
  const auto values = valuation_values(t, s);
  // The point t^2 has value 2, the rest of the line {t, t^2} value 1, the rest 0.
  for (std::size_t i = 0; i < s.points().size(); ++i) {
    const auto& p = s.points()[i];
    const int expected = chain[0].contains(p.coords) ? 2 : chain[1].contains(p.coords) ? 1 : 0;
    CHECK(values[i] == Gamma({expected}));
  }
  CHECK(k.format(s.points()[0].value).size() > 0);
}

TEST_CASE("valuation on the line through 1 and 1+t") {
  const FunctionField k = FunctionField::parse("F2(t)");
  const auto s = embed_span(k, {k.element("1"), k.element("1+t")});
  const auto values = valuation_values(Place::parse("finite:t", k), s);
  CHECK(std::count(values.begin(), values.end(), Gamma({1})) == 1);
  CHECK(std::count(values.begin(), values.end(), Gamma({0})) == 2);
}

TEST_CASE("ultrametric inequality, additivity and residue multiplicativity") {
  for (std::uint32_t q : {3u, 5u}) {
    const FunctionField k = FunctionField::parse("F" + std::to_string(q) + "(t)");
    std::vector<Place> places = {Place::infinite(k.field())};
    for (const Poly& p : monic_irreducibles(k.field(), 1, 1)) places.push_back(Place::finite(p));
    for (std::uint64_t i = 0; i < 300; ++i) {
      auto rng = item_rng(q, i);
      auto poly = [&] {
        std::vector<Elem> c(4);
        for (auto& x : c) x = static_cast<Elem>(uniform_below(rng, q));
        c[0] = c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0 ? 1 : c[0];
        return Poly::from_dense(k.field(), c);
      };
      const RatFn f(poly(), poly());
      const RatFn g(poly(), poly());
      const Place& p = places[uniform_below(rng, places.size())];
      const Gamma vf = val(p, f), vg = val(p, g);
      CHECK(val(p, f * g) == vf + vg);
      const RatFn s = f + g;
      if (!s.is_zero()) {
        CHECK(val(p, s) >= std::min(vf, vg));
        if (vf != vg) CHECK(val(p, s) == std::min(vf, vg));
      }
      const RatFn u = from_divisor(make_splitting(p).uniformizer());
      const RatFn uf = f * u.pow(static_cast<int>(-vf[0]));
      const RatFn ug = g * u.pow(static_cast<int>(-vg[0]));
      CHECK(std::get<ResidueClass>(residue(p, uf * ug)) ==
            std::get<ResidueClass>(residue(p, uf)) * std::get<ResidueClass>(residue(p, ug)));
      CHECK(is_one(residue(p, RatFn::constant(k.field(), 1, 1) + u * uf)));
    }
  }
}

TEST_CASE("every catalog valuation is a flag map on P2(1, x, y)") {
  const auto& k = k3xy();
  const auto s = embed_span(k, {k.element("1"), k.element("x"), k.element("y")});
  for (const char* place : {"curve:x", "curve:y", "curve:x+y", "curve:y+2*x^2", "composite:x|y", "composite:y|x"})
    CHECK(is_flag(valuation_flag_structure(Place::parse(place, k), s)));
}
