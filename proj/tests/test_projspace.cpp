#include <doctest.h>

#include <algorithm>
#include <set>

#include "flagval/embedded.hpp"
#include "flagval/error.hpp"
#include "flagval/projspace.hpp"

using namespace flagval;

namespace {

ProjPoint pt(const Field& f, std::vector<Elem> c) { return ProjPoint::normalized(std::move(c), f); }

}  // namespace

TEST_CASE("point counts") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field& f = q == 4 ? Field::get(2, 2) : Field::get(q);
    std::size_t expected = 1;
    for (int n = 1; n <= 3; ++n) {
      expected = expected * q + 1;  // (q^{n+1} - 1) / (q - 1)
      CHECK(enumerate_points(n, f).size() == expected);
    }
  }
  CHECK_THROWS_AS(enumerate_points(3, Field::get(5), 10), Error);
}

TEST_CASE("lines through two points") {
  const Field& f2 = Field::get(2);
  const auto l = line_through(pt(f2, {1, 0, 0}), pt(f2, {0, 1, 0}));
  const std::vector<ProjPoint> want = {pt(f2, {0, 1, 0}), pt(f2, {1, 0, 0}), pt(f2, {1, 1, 0})};
  CHECK(l.points() == want);
  CHECK(l.dimension() == 1);
  CHECK(line_through(pt(f2, {0, 1, 0}), pt(f2, {1, 0, 0})) == l);

  const Field& f3 = Field::get(3);
  CHECK(line_through(pt(f3, {1, 0}), pt(f3, {0, 1})).point_count() == 4);
  CHECK_THROWS_AS(line_through(pt(f3, {1, 2, 0}), pt(f3, {2, 1, 0})), Error);
}

TEST_CASE("incidence of P2(F3)") {
  const auto& plane = projective_space(2, Field::get(3));
  CHECK(plane.size() == 13);
  CHECK(plane.lines().size() == 13);
  for (std::size_t a = 0; a < plane.size(); ++a)
    for (std::size_t b = a + 1; b < plane.size(); ++b) {
      int through = 0;
      for (const auto& s : plane.line_sets()) through += s.test(a) && s.test(b);
      CHECK(through == 1);
    }
  for (std::size_t i = 0; i < plane.line_sets().size(); ++i)
    for (std::size_t j = i + 1; j < plane.line_sets().size(); ++j)
      CHECK((plane.line_sets()[i] & plane.line_sets()[j]).count() == 1);
}

TEST_CASE("embedded spans") {
  const FunctionField k2 = FunctionField::parse("F2(t)");
  const auto line = embed_span(k2, {k2.element("1"), k2.element("t")});
  REQUIRE(line.points().size() == 3);
  std::vector<std::string> values;
  for (const auto& p : line.points()) values.push_back(k2.format(p.value));
  std::sort(values.begin(), values.end());
  CHECK(values == std::vector<std::string>{"1", "t", "t+1"});

  CHECK(embed_span(k2, {k2.element("1"), k2.element("t"), k2.element("t^2")}).points().size() == 7);

  const FunctionField k3 = FunctionField::parse("F3(t)");
  CHECK_THROWS_AS(embed_span(k3, {k3.element("t"), k3.element("2*t")}), Error);
}

TEST_CASE("shift by h then 1/h restores the divisors") {
  const FunctionField k = FunctionField::parse("F3(x,y)");
  const auto plane = embed_span(k, {k.element("1"), k.element("x"), k.element("y")});
  const DivisorRep h = to_divisor(k.element("x+y+1"));
  const auto back = plane.shifted(h).shifted(h.inverse());
  REQUIRE(back.points().size() == plane.points().size());
  for (std::size_t i = 0; i < plane.points().size(); ++i)
    CHECK(back.points()[i].divisor.same_class(plane.points()[i].divisor));
  std::set<std::string> distinct;
  for (const auto& p : plane.points()) distinct.insert(p.divisor.to_string());
  CHECK(distinct.size() == plane.points().size());
}
