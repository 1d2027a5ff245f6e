#include <doctest.h>

#include <random>

#include "flagval/error.hpp"
#include "flagval/dependence.hpp"
#include "flagval/divisor.hpp"
#include "flagval/factor.hpp"
#include "flagval/function_field.hpp"
#include "flagval/lattice.hpp"
#include "flagval/rng.hpp"

using namespace flagval;

namespace {

const std::vector<std::string> kT{"t"};
const std::vector<std::string> kXY{"x", "y"};

Poly t_poly(const Field& f, std::string_view s) { return parse_poly(s, f, kT); }

RatFn random_ratfn(const Field& field, std::mt19937_64& rng) {
  auto poly = [&] {
    std::vector<Elem> c(4);
    for (auto& x : c) x = static_cast<Elem>(uniform_below(rng, field.order()));
    if (c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0) c[0] = 1;
    return Poly::from_dense(field, c);
  };
  return RatFn(poly(), poly());
}

}  // namespace

TEST_CASE("F9 arithmetic") {
  const Field& f = Field::get(3, 2);
  CHECK(f.order() == 9);
  for (Elem a = 1; a < 9; ++a) {
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.pow(a, 8) == 1);
  }
  CHECK(f.multiplicative_order(f.primitive_element()) == 8);
  CHECK_THROWS_AS(Field::get(4), Error);
}

TEST_CASE("univariate factorization examples") {
  const Field& f3 = Field::get(3);
  auto fz = poly_factor(t_poly(f3, "t^2-1"));
  CHECK(fz.unit == 1);
  REQUIRE(fz.factors.size() == 2);
  CHECK(fz.factors[0] == std::pair{t_poly(f3, "t+1"), 1});
  CHECK(fz.factors[1] == std::pair{t_poly(f3, "t+2"), 1});

  auto single = poly_factor(t_poly(Field::get(2), "t"));
  REQUIRE(single.factors.size() == 1);
  CHECK(single.factors[0].second == 1);

  CHECK(is_irreducible(t_poly(f3, "t^2+1")));
  CHECK_THROWS_AS(poly_factor(Poly(f3, 1)), Error);
}

TEST_CASE("bivariate polynomial in one variable factors as univariate") {
  const Field& f3 = Field::get(3);
  const Poly p = parse_poly("x^8+2*x^6+2*x^4+x^2+1", f3, kXY);
  const auto fz = poly_factor(p);
  CHECK(multiply_out(fz, f3, 2) == p);
  for (const auto& [g, k] : fz.factors) {
    CHECK(g.degree_in(1) == 0);
    CHECK(is_irreducible(g));
  }
}

TEST_CASE("factor round trip on products of random irreducibles") {
  const Field& f5 = Field::get(5);
  auto rng = item_rng(11, 0);
  for (int trial = 0; trial < 50; ++trial) {
    std::map<Poly, int, PolyLess> want;
    Poly prod = Poly::constant(f5, 1, 1);
    for (int k = 0; k < 3; ++k) {
      const int d = 1 + static_cast<int>(uniform_below(rng, 3));
      const auto& table = monic_irreducibles(f5, 1, d);
      const Poly& g = table[uniform_below(rng, table.size())];
      ++want[g];
      prod *= g;
    }
    const auto fz = poly_factor(prod.scaled(3));
    CHECK(fz.unit == 3);
    std::map<Poly, int, PolyLess> got(fz.factors.begin(), fz.factors.end());
    CHECK(got == want);
  }
}

TEST_CASE("to_divisor examples") {
  const Field& f3 = Field::get(3);
  const FunctionField k(f3, kT);
  const DivisorRep d = to_divisor(k.element("t^2*(1-t)"));
  CHECK(d.unit() == 2);
  CHECK(d.exponent(Generator(t_poly(f3, "t"))) == 2);
  CHECK(d.exponent(Generator(t_poly(f3, "t+2"))) == 1);
  CHECK(d.exponent(Generator::infinity(f3)) == -3);
  CHECK(d.terms().size() == 3);

  const DivisorRep one = to_divisor(k.element("1"));
  CHECK(one.is_trivial());
  CHECK(one.unit() == 1);
  CHECK(to_divisor(k.element("t/(t+1)") * k.element("(t+1)/t")).is_trivial());
  CHECK_THROWS_AS(to_divisor(k.element("0")), Error);
}

TEST_CASE("to_divisor is a homomorphism and conserves degree") {
  const Field& f5 = Field::get(5);
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = item_rng(5, i);
    const RatFn f = random_ratfn(f5, rng);
    const RatFn g = random_ratfn(f5, rng);
    const DivisorRep df = to_divisor(f);
    CHECK(to_divisor(f * g) == df * to_divisor(g));
    int total = 0;
    for (const auto& [gen, e] : df.terms()) total += gen.degree() * e;
    CHECK(total == 0);
    const RatFn back = from_divisor(df);
    CHECK(back == f);
  }
}

TEST_CASE("algebraic dependence") {
  const Field& f3 = Field::get(3);
  const FunctionField k(f3, kXY);
  const RatFn x = k.var(0);
  const RatFn y = k.var(1);

  const auto dep = algebraically_dependent(x, k.element("x^2+1"), 2);
  REQUIRE(std::holds_alternative<Dependent>(dep));
  const Poly& p = std::get<Dependent>(dep).annihilator;
  CHECK(annihilates(p, x, k.element("x^2+1")));
  CHECK(p == parse_poly("y-x^2-1", f3, kXY).monic());

  CHECK(std::holds_alternative<IndependentUpTo>(algebraically_dependent(x, y, 3)));
  CHECK(std::holds_alternative<IndependentUpTo>(algebraically_dependent(x.pow(3), y.pow(3), 3)));
  CHECK_THROWS_AS(algebraically_dependent(k.element("2"), y, 2), Error);

  const RatFn a = k.element("x*y");
  const RatFn b = k.element("x^2*y^2+x*y");
  CHECK(algebraically_dependent(a, b, 2).index() == algebraically_dependent(b, a, 2).index());
}

TEST_CASE("integer kernel and quotients") {
  using namespace lattice;
  const IntMatrix a = {{2, 4, 6}, {1, 1, 1}};
  const auto ker = integer_kernel(a, 3);
  REQUIRE(ker.size() == 1);
  for (const auto& row : a) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < 3; ++j) s += row[j] * ker[0][j];
    CHECK(s == 0);
  }

  const auto snf = smith_form({{2, 4}, {6, 8}}, 2);
  CHECK(snf.diagonal == std::vector<std::int64_t>{2, 4});

  const Quotient q({{2, 0}, {0, 3}, {1, 1}}, 2);
  CHECK(q.free_rank() == 0);
  const Quotient z2({{2, 0}}, 2);
  CHECK(z2.free_rank() == 1);
  CHECK(z2.torsion() == std::vector<std::int64_t>{2});
  CHECK(z2.is_zero({4, 0}));
  CHECK_FALSE(z2.is_zero({1, 0}));
  CHECK(z2.coordinates({3, 5}) == z2.coordinates({1, 5}));
}

TEST_CASE("integer kernel of random sparse matrices") {
  using namespace lattice;
  // Exact at small sizes; at 60 x 90 entries may exceed int64, which must throw.
  for (const auto [m, n] : {std::pair<std::size_t, std::size_t>{12, 20}, {20, 30}, {60, 90}}) {
    for (std::uint64_t trial = 0; trial < 5; ++trial) {
      auto rng = item_rng(3, trial);
      IntMatrix a(m, IntVector(n, 0));
      for (auto& row : a)
        for (int k = 0; k < 4; ++k) row[uniform_below(rng, n)] = static_cast<std::int64_t>(uniform_below(rng, 5)) - 2;
      HermiteBasis rows(n);
      IntMatrix ker;
      try {
        for (const auto& row : a) rows.add(row);
        ker = integer_kernel(a, n);
      } catch (const Error& e) {
        CHECK(m == 60);
        CHECK(e.code() == ErrorCode::Overflow);
        continue;
      }
      CHECK(ker.size() == n - rows.rank());
      for (const auto& v : ker)
        for (const auto& row : a) {
          std::int64_t s = 0;
          for (std::size_t j = 0; j < n; ++j) s += row[j] * v[j];
          CHECK(s == 0);
        }
    }
  }
}
