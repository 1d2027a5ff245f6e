#include <doctest.h>

#include "flagval/arena.hpp"
#include "flagval/error.hpp"
#include "flagval/factor.hpp"
#include "flagval/rng.hpp"
#include "flagval/weil.hpp"

using namespace flagval;

namespace {

const FunctionField& kxy() {
  static const FunctionField k = FunctionField::parse("F3(x,y)");
  return k;
}

std::vector<Subfield> family() {
  const auto& k = kxy();
  return {{k.element("x"), "k(x)"},
          {k.element("y"), "k(y)"},
          {k.element("x+y"), "k(x+y)"},
          {k.element("x*y"), "k(xy)"},
          {k.element("x/y"), "k(x/y)"}};
}

std::vector<DivisorRep> linear_probe() {
  std::vector<DivisorRep> out;
  for (const Poly& p : monic_irreducibles(kxy().field(), 2, 1)) out.push_back(DivisorRep::of(Generator(p)));
  return out;
}

const std::vector<DivisorRep>& window() {
  static const std::vector<DivisorRep> w = [] {
    std::vector<DivisorRep> out;
    const Arena arena(kxy(), 2);
    for (const auto& g : arena.generators()) out.push_back(DivisorRep::of(g));
    return out;
  }();
  return w;
}

WeilElement nu(const char* place, std::vector<std::int64_t> chi = {1}) {
  return weil_from_valuation(Place::parse(place, kxy()), std::move(chi), CoefficientRing::integers());
}

}  // namespace

TEST_CASE("coefficient rings") {
  const auto z9 = CoefficientRing::mod_prime_power(3, 2, 5);
  CHECK(z9.modulus() == 9);
  CHECK(z9.reduce(-1) == 8);
  CHECK(z9.to_string() == "Z/9");
  CHECK_THROWS_AS(CoefficientRing::mod_prime_power(3, 1, 3), Error);
  CHECK_THROWS_AS(CoefficientRing::mod_prime_power(4, 1, 3), Error);
}

TEST_CASE("weil elements from valuations") {
  const FunctionField k = FunctionField::parse("F3(t)");
  const Place t = Place::parse("finite:t", k);
  const auto w = weil_from_valuation(t, {1}, CoefficientRing::integers());
  CHECK(w(k.element("t^3*(t+1)")) == 3);
  CHECK(w(k.element("1/t")) == -1);
  const auto zero = weil_from_valuation(t, {0}, CoefficientRing::integers());
  CHECK(zero(k.element("t^5")) == 0);
  CHECK_THROWS_AS(weil_from_valuation(t, {1, 0}, CoefficientRing::integers()), Error);

  const auto first = nu("composite:x|y", {1, 0});
  const auto nx = nu("curve:x");
  const auto& gens = window();
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = item_rng(41, i);
    DivisorRep d = DivisorRep::scalar(kxy().field(), 2, 1);
    for (int j = 0; j < 3; ++j)
      d *= gens[uniform_below(rng, gens.size())].pow(static_cast<int>(uniform_below(rng, 5)) - 2);
    CHECK(first(d) == nx(d));
  }
}

TEST_CASE("additivity on random pairs") {
  const auto w = nu("composite:x|y", {2, -1}).combine(1, nu("curve:y+x"), 3);
  const auto& gens = window();
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto rng = item_rng(43, i);
    const DivisorRep a = gens[uniform_below(rng, gens.size())] * gens[uniform_below(rng, gens.size())].inverse();
    const DivisorRep b = gens[uniform_below(rng, gens.size())].pow(2);
    CHECK(w(a * b) == w(a) + w(b));
  }
}

TEST_CASE("restriction to one-dimensional subfields") {
  const auto& k = kxy();
  const auto rx = restrict_to_subfield(nu("curve:x"), {k.element("x"), "k(x)"});
  REQUIRE(rx.size() >= 3);
  for (std::size_t a = 0; a < 3; ++a) CHECK(rx[a].value == (a == 0 ? 1 : 0));
  for (std::size_t i = 3; i < rx.size(); ++i) CHECK(rx[i].value == 0);

  for (const auto& r : restrict_to_subfield(nu("curve:y"), {k.element("x"), "k(x)"})) CHECK(r.value == 0);

  const auto ratio = restrict_to_subfield(nu("curve:x"), {k.element("x/y"), "k(x/y)"});
  for (std::size_t a = 0; a < 3; ++a) CHECK(ratio[a].value == (a == 0 ? 1 : 0));

  const auto sum = restrict_to_subfield(nu("curve:x").combine(2, nu("curve:y"), 1), {k.element("x/y"), "k(x/y)"});
  const auto ry = restrict_to_subfield(nu("curve:y"), {k.element("x/y"), "k(x/y)"});
  for (std::size_t i = 0; i < sum.size(); ++i) CHECK(sum[i].value == 2 * ratio[i].value + ry[i].value);
}

TEST_CASE("inertia membership") {
  const FunctionField k = FunctionField::parse("F3(t)");
  std::vector<DivisorRep> arena;
  for (int d = 1; d <= 3; ++d)
    for (const Poly& p : monic_irreducibles(k.field(), 1, d)) arena.push_back(to_divisor(p));
  const Place t = Place::parse("finite:t", k);
  const Place t1 = Place::parse("finite:t+1", k);
  const auto z = CoefficientRing::integers();
  CHECK(is_inertia(weil_from_valuation(t, {5}, z), t, arena));
  CHECK_FALSE(is_inertia(weil_from_valuation(t1, {1}, z), t, arena));
  CHECK_FALSE(is_inertia(weil_from_valuation(Place::infinite(k.field()), {1}, z), t, arena));
  CHECK(solve_inertia(Place::infinite(k.field()), arena).size() == 1);

  const auto solutions = solve_inertia(t, arena);
  REQUIRE(solutions.size() == 1);
  for (std::size_t j = 0; j < arena.size(); ++j)
    CHECK(std::abs(solutions[0][j]) == (arena[j].exponent(Generator(k.poly("t"))) ? 1 : 0));
}

TEST_CASE("decomposition membership") {
  const FunctionField k = FunctionField::parse("F3(t)");
  const Place t = Place::parse("finite:t", k);
  const auto z = CoefficientRing::integers();
  const std::vector<RatFn> sample = {k.element("1+t"), k.element("1+t^2"), k.element("(1+t)/(1-t)")};
  CHECK(is_decomposition(weil_from_valuation(t, {1}, z), t, sample));
  CHECK_FALSE(is_decomposition(weil_from_valuation(Place::parse("finite:t+1", k), {1}, z), t, sample));
}

TEST_CASE("c-pair test refutes (nu_x, nu_y) at k(x/y)") {
  const auto& k = kxy();
  const auto v = c_pair_test(nu("curve:x"), nu("curve:y"), family(), linear_probe());
  REQUIRE(std::holds_alternative<NonCyclic>(v));
  const auto& w = std::get<NonCyclic>(v);
  CHECK(w.subfield == "k(x/y)");
  CHECK(w.elements.first == k.element("x/y"));
  CHECK(w.elements.second == k.element("(x-y)/y"));
  CHECK(w.minor == -1);
  const auto a = nu("curve:x");
  const auto b = nu("curve:y");
  CHECK(a(w.elements.first) * b(w.elements.second) - a(w.elements.second) * b(w.elements.first) == -1);
}

TEST_CASE("composite components form a c-pair on the family") {
  const auto v = c_pair_test(nu("composite:x|y", {1, 0}), nu("composite:x|y", {0, 1}), family(), linear_probe());
  CHECK(std::holds_alternative<Cyclic>(v));
  CHECK_THROWS_AS(c_pair_test(nu("curve:x"), nu("curve:x", {2}), family(), linear_probe()), Error);
}

TEST_CASE("c-pair verdict is symmetric and basis independent") {
  const auto a = nu("curve:x");
  const auto b = nu("curve:y+x");
  const auto base = c_pair_test(a, b, family(), linear_probe());
  CHECK(c_pair_test(b, a, family(), linear_probe()).index() == base.index());
  CHECK(c_pair_test(a.combine(1, b, 1), b, family(), linear_probe()).index() == base.index());
  CHECK(c_pair_test(a.combine(2, b, 1), a.combine(1, b, 1), family(), linear_probe()).index() == base.index());
  const auto c1 = nu("composite:x|y", {1, 0});
  const auto c2 = nu("composite:x|y", {0, 1});
  CHECK(std::holds_alternative<Cyclic>(c_pair_test(c2, c1.combine(1, c2, -1), family(), linear_probe())));
}

TEST_CASE("supporting valuation of a c-pair") {
  const auto& k = kxy();
  const Place px = Place::parse("curve:x", k);
  const std::vector<Place> universe = {Place::parse("curve:y", k), Place::parse("curve:x+y", k), px};
  const auto c1 = nu("composite:x|y", {1, 0});
  const auto c2 = nu("composite:x|y", {0, 1});
  const auto found = find_supporting_valuation(c1, c2, universe, window());
  REQUIRE(found.has_value());
  CHECK(found->place == px);
  CHECK(found->r == 1);
  CHECK(found->s == 0);

  const auto again = find_supporting_valuation(c1, c1.combine(3, c2, 1), universe, window());
  REQUIRE(again.has_value());
  CHECK(again->place == px);

  CHECK_FALSE(find_supporting_valuation(c1, c2, {}, window()).has_value());
}
