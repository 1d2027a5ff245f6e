#include <doctest.h>

#include "flagval/error.hpp"
#include "flagval/reconstruct.hpp"
#include "flagval/valuation.hpp"

using namespace flagval;

namespace {

const FunctionField& kxy() {
  static const FunctionField k = FunctionField::parse("F3(x,y)");
  return k;
}

const Arena& arena1() {
  static const Arena a(kxy(), 1);
  return a;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::BadInput;
}

}  // namespace

TEST_CASE("psi built from the valuation along x = 0") {
  const auto& k = kxy();
  const PsiMap psi = PsiMap::parse("from-valuation:curve:x", k);
  const auto& l = psi.target();
  CHECK(l.names() == std::vector<std::string>{"y", "z"});
  CHECK(psi(k.element("x*(y+1)")) == to_divisor(l.element("y+1")).class_part());
  CHECK(psi(k.element("x")).is_trivial());
  const RatFn g = k.element("y^2+x*y+2");
  CHECK(psi(k.element("1+x") * g) == psi(g));
  CHECK(psi(k.element("x^2/(y+x)")) == to_divisor(l.element("1/y")).class_part());
}

TEST_CASE("twisted and valuation maps") {
  const auto& k = kxy();
  const PsiMap twisted = PsiMap::parse("from-valuation-twisted:curve:x", k);
  CHECK(twisted(k.element("x*(y+1)")) == to_divisor(twisted.target().element("(y+1)*z")).class_part());
  const PsiMap v = PsiMap::parse("valuation-map:curve:x", k);
  CHECK(v(k.element("x^3*(y+1)")) == to_divisor(v.target().element("z^3")).class_part());
  CHECK(PsiMap::parse("identity", k)(k.element("x+y")) == to_divisor(k.element("x+y")));
  CHECK(code_of([&] { PsiMap::parse("frobenius", k); }) == ErrorCode::ParseError);
}

TEST_CASE("decomposition of a plane has no lemma defects") {
  const auto& k = kxy();
  for (const char* spec : {"from-valuation:curve:x", "from-valuation-twisted:curve:y", "identity"}) {
    const PsiMap psi = PsiMap::parse(spec, k);
    const auto plane = arena1().subspace({k.poly("1"), k.poly("x"), k.poly("y")});
    const Decomposition d = decompose_subspace(psi, plane);
    CHECK(d.defects.empty());
    std::size_t covered = d.s1.size();
    for (const auto& c : d.classes) covered += c.points.size();
    CHECK(covered == plane.points().size());
  }
}

TEST_CASE("plane classification") {
  const auto& k = kxy();
  const auto plane = arena1().subspace({k.poly("1"), k.poly("x"), k.poly("x*y")});
  // Images of the untwisted map all lie in k(y).
  CHECK(code_of([&] { classify_plane(PsiMap::parse("from-valuation:curve:x", k), plane); }) ==
        ErrorCode::PreconditionFailed);
  // Off the line span(x, xy) every point is a unit with constant residue.
  const PsiMap twisted = PsiMap::parse("from-valuation-twisted:curve:x", k);
  const auto c1 = classify_plane(twisted, plane);
  REQUIRE(std::holds_alternative<PlaneCase1>(c1.verdict));
  CHECK(to_string(c1.verdict, plane) == "case1: line through x*y, x");
  const auto other = arena1().subspace({k.poly("1"), k.poly("x"), k.poly("y")});
  const auto c2 = classify_plane(twisted, other);
  CHECK(std::holds_alternative<PlaneCase2>(c2.verdict));
  CHECK(c2.case2_matched);
  const auto id = classify_plane(PsiMap::parse("identity", k), plane);
  CHECK(std::holds_alternative<InjectiveOnPlane>(id.verdict));
}

TEST_CASE("valuation extracted at arena degree 1") {
  const auto& k = kxy();
  const Arena& arena = arena1();
  for (const char* place : {"curve:x", "curve:y"}) {
    const PsiMap psi = PsiMap::parse(std::string("from-valuation:") + place, k);
    const ReconstructionResult res = extract_valuation(psi, arena);
    const auto* v = res.valuation();
    REQUIRE(v != nullptr);
    CHECK(res.checks.passed());
    CHECK(v->gamma.free_rank() == 1);
    CHECK(v->gamma.torsion().empty());
    const Place p = Place::parse(place, k);
    for (std::size_t i = 0; i < arena.point_count(); ++i) {
      const auto g = gamma_value(*v, arena, arena.point_divisor(i));
      CHECK(std::abs(g[0]) == val(p, arena.point_divisor(i))[0]);
    }
    CHECK(verify_theorem_conclusions(res, psi, arena, 20, 3).passed());
  }
  const auto id = extract_valuation(PsiMap::parse("identity", k), arena);
  CHECK(std::holds_alternative<InjectiveVerdict>(id.verdict));
}

TEST_CASE("a perturbed psi is rejected") {
  const auto& k = kxy();
  const PsiMap psi = PsiMap::parse("from-valuation:curve:x", k);
  const PsiMap bad = psi.perturbed(to_divisor(k.element("y+1")), to_divisor(psi.target().element("z")));
  CHECK(code_of([&] { check_multiplicative(bad, arena1(), 2000, 5); }) == ErrorCode::NotMultiplicative);
  CHECK_NOTHROW(check_multiplicative(psi, arena1(), 200, 5));
}
