#include <doctest.h>

#include "flagval/error.hpp"
#include "flagval/factor.hpp"
#include "flagval/function_field.hpp"
#include "flagval/milnor.hpp"
#include "flagval/rng.hpp"

using namespace flagval;

namespace {

const FunctionField& k3() {
  static const FunctionField k = FunctionField::parse("F3(t)");
  return k;
}

RatFn random_fn(const FunctionField& k, std::mt19937_64& rng) {
  auto poly = [&] {
    std::vector<Elem> c(4);
    for (auto& x : c) x = static_cast<Elem>(uniform_below(rng, k.field().order()));
    if (std::all_of(c.begin(), c.end(), [](Elem e) { return e == 0; })) c[0] = 1;
    return Poly::from_dense(k.field(), c);
  };
  for (;;) {
    RatFn f(poly(), poly());
    if (!f.is_constant()) return f;
  }
}

ResidueClass tame_at(const RatFn& f, const RatFn& g, const char* place) {
  return tame_symbol(K2Symbol::of(f, g), Place::parse(place, k3()));
}

}  // namespace

TEST_CASE("tame symbols at t") {
  const auto& k = k3();
  CHECK(tame_at(k.element("t"), k.element("1-t"), "finite:t").to_string() == "1");
  CHECK(tame_at(k.element("t"), k.element("t-1"), "finite:t").to_string() == "2");
  CHECK(tame_at(k.element("t+1"), k.element("t-1"), "finite:t").is_one());
}

TEST_CASE("Steinberg relation") {
  const auto& k = k3();
  CHECK(steinberg_check(k.element("t")));
  CHECK(steinberg_check(k.element("t^2+1")));
  CHECK(steinberg_check(k.element("(t+1)/(t^2+t+2)")));
}

TEST_CASE("reciprocity for {t, t-1}") {
  const auto& k = k3();
  const auto residues = tame_residues(K2Symbol::of(k.element("t"), k.element("t-1")));
  std::vector<std::string> values;
  Elem product = 1;
  for (const auto& [p, r] : residues) {
    values.push_back(r.to_string());
    product = k.field().mul(product, r.norm());
  }
  CHECK(values == std::vector<std::string>{"2", "1", "2"});
  CHECK(product == 1);
  CHECK(weil_reciprocity_check(k.element("t"), k.element("t-1")));
}

TEST_CASE("divisibility in K1") {
  const auto& k = k3();
  const Tower ladder = Tower::doubling(1);
  CHECK(std::holds_alternative<DivisibleHere>(divisible_in_k1(to_divisor(k.element("t^2")), 2, ladder)));
  const auto two = divisible_in_k1(to_divisor(k.element("2")), 2, ladder);
  REQUIRE(std::holds_alternative<DivisibleInTower>(two));
  CHECK(std::get<DivisibleInTower>(two).degree == 2);
  const auto t = divisible_in_k1(to_divisor(k.element("t")), 2, ladder);
  REQUIRE(std::holds_alternative<NotDivisible>(t));
  CHECK(std::get<NotDivisible>(t).exponent == 1);
  CHECK_THROWS_AS(divisible_in_k1(to_divisor(k.element("t")), 3, ladder), Error);
  CHECK_THROWS_AS(divisible_in_k1(to_divisor(k.element("t")), 0, ladder), Error);
}

TEST_CASE("symbol divisibility probes") {
  const auto& k = k3();
  const auto base = symbol_divisibility_probe(k.element("t"), k.element("t-1"), 2, Tower::doubling(1));
  REQUIRE(std::holds_alternative<UnobstructedUpTo>(base));
  CHECK(std::get<UnobstructedUpTo>(base).level == 1);
  CHECK(std::get<UnobstructedUpTo>(base).cleared_from == 1);

  const auto square = symbol_divisibility_probe(k.element("t"), k.element("t^2"), 2, Tower::doubling(2));
  REQUIRE(std::holds_alternative<UnobstructedUpTo>(square));
  CHECK(std::get<UnobstructedUpTo>(square).level == 2);
  CHECK(std::get<UnobstructedUpTo>(square).cleared_from == 0);

  CHECK_THROWS_AS(symbol_divisibility_probe(k.element("t"), k.element("t-1"), 3, Tower::doubling(1)), Error);
  CHECK_THROWS_AS(symbol_divisibility_probe(k.element("t"), k.element("t-1"), 4, Tower::doubling(1)), Error);
}

TEST_CASE("bilinearity, antisymmetry, {f,-f} = 1, reciprocity on random pairs") {
  for (const char* spec : {"F3(t)", "F5(t)"}) {
    const FunctionField k = FunctionField::parse(spec);
    for (std::uint64_t i = 0; i < 60; ++i) {
      auto rng = item_rng(77, i);
      const RatFn f = random_fn(k, rng);
      const RatFn g = random_fn(k, rng);
      const RatFn h = random_fn(k, rng);
      CHECK(steinberg_check(f));
      CHECK(weil_reciprocity_check(f, g));
      for (const Place& p : symbol_support(K2Symbol::of(f * g, h) + K2Symbol::of(h, f))) {
        const ResidueClass fg_h = tame_symbol(K2Symbol::of(f * g, h), p);
        CHECK(fg_h == tame_symbol(K2Symbol::of(f, h), p) * tame_symbol(K2Symbol::of(g, h), p));
        CHECK((tame_symbol(K2Symbol::of(f, h), p) * tame_symbol(K2Symbol::of(h, f), p)).is_one());
        CHECK(tame_symbol(K2Symbol::of(f, -f), p).is_one());
      }
    }
  }
}
