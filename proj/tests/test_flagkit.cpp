#include <doctest.h>

#include "flagval/error.hpp"
#include "flagval/flag.hpp"
#include "flagval/rng.hpp"

using namespace flagval;

namespace {

std::vector<int> conic_indicator(const ProjectiveSpace& plane) {
  const Field& f = plane.field();
  std::vector<int> labels;
  for (const auto& p : plane.points()) {
    const auto& c = p.coords();
    labels.push_back(f.add(f.mul(c[0], c[0]), f.mul(c[1], c[2])) == 0 ? 1 : 0);
  }
  return labels;
}

// Labels transported along a random invertible linear map.
std::vector<int> transported(const ProjectiveSpace& space, const std::vector<int>& labels, std::mt19937_64& rng) {
  const Field& f = space.field();
  const std::size_t n = static_cast<std::size_t>(space.dimension()) + 1;
  for (;;) {
    FqMatrix m(n, FqVector(n));
    for (auto& row : m)
      for (auto& x : row) x = static_cast<Elem>(uniform_below(rng, f.order()));
    if (rank(f, m, n) != n) continue;
    std::vector<int> out(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
      std::vector<Elem> image(n, 0);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) image[r] = f.add(image[r], f.mul(m[r][c], space.point(i).coords()[c]));
      out[space.index_of(ProjPoint::normalized(image, f))] = labels[i];
    }
    return out;
  }
}

}  // namespace

TEST_CASE("single point, constant map and conic") {
  const auto& f2 = projective_space(2, Field::get(2));
  std::vector<int> point(f2.size(), 0);
  point[3] = 1;
  const auto v = is_flag_map(f2, point);
  CHECK(is_flag(v));
  CHECK(verify_verdict(f2, point, v));
  CHECK(is_flag(is_flag_map(f2, std::vector<int>(f2.size(), 4))));

  const auto& f3 = projective_space(2, Field::get(3));
  const auto conic = conic_indicator(f3);
  CHECK(std::count(conic.begin(), conic.end(), 1) == 4);
  const auto nv = is_flag_map(f3, conic);
  REQUIRE_FALSE(is_flag(nv));
  CHECK(std::get<NotFlag>(nv).witness_line.has_value());
  CHECK(verify_verdict(f3, conic, nv));
  CHECK_FALSE(line_criterion(f3, conic));
}

TEST_CASE("distinct values along a line fail the line criterion") {
  const auto& plane = projective_space(2, Field::get(3));
  std::vector<int> labels(plane.size(), 0);
  int v = 1;
  for (std::size_t i : plane.lines()[0]) labels[i] = v++;
  CHECK_FALSE(line_criterion(plane, labels));
  CHECK_FALSE(is_flag(is_flag_map(plane, labels)));
}

TEST_CASE("flag subsets of P2(F2) by family") {
  const auto census = classify_flag_subsets(Field::get(2));
  CHECK(census.subsets_examined == 128);
  CHECK(census.flag_subsets == 70);
  CHECK(census.improper_flag == 2);
  CHECK(census.by_family == std::array<std::uint64_t, 6>{7, 7, 21, 7, 7, 21});
  CHECK(census.unclassified == 0);
}

TEST_CASE("every punctured line of P2(F3) is a flag subset") {
  const auto& plane = projective_space(2, Field::get(3));
  int count = 0;
  for (const auto& line : plane.lines())
    for (std::size_t p : line) {
      PointSet s = plane.line_sets()[&line - plane.lines().data()];
      s.reset(p);
      CHECK(classify_subset(plane, s) == FlagFamily::PuncturedLine);
      CHECK(is_flag(is_flag_map(plane, indicator(plane, s))));
      ++count;
    }
  CHECK(count == 52);
}

TEST_CASE("flag subsets are closed under complement") {
  const auto& plane = projective_space(2, Field::get(2));
  for (unsigned mask = 0; mask < 128; ++mask) {
    PointSet s(mask);
    PointSet c = plane.all() & ~s;
    CHECK(is_flag(is_flag_map(plane, indicator(plane, s))) == is_flag(is_flag_map(plane, indicator(plane, c))));
  }
}

TEST_CASE("flag verdict is invariant under change of coordinates") {
  for (int dim : {2, 3}) {
    const auto& space = projective_space(dim, Field::get(3));
    for (std::uint64_t i = 0; i < 200; ++i) {
      auto rng = item_rng(17, i);
      std::vector<int> labels(space.size());
      if (i % 2 == 0) {
        for (auto& x : labels) x = static_cast<int>(uniform_below(rng, 2));
      } else {
        const auto& s = space.subspaces(static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(dim))));
        labels = indicator(space, s[uniform_below(rng, s.size())]);
      }
      const auto moved = transported(space, labels, rng);
      const auto a = is_flag_map(space, labels);
      const auto b = is_flag_map(space, moved);
      CHECK(is_flag(a) == is_flag(b));
      CHECK(verify_verdict(space, labels, a));
      CHECK(verify_verdict(space, moved, b));
    }
  }
}

TEST_CASE("line criterion and chain search agree on P2(F3)") {
  const auto& plane = projective_space(2, Field::get(3));
  for (std::uint64_t i = 0; i < 3000; ++i) {
    auto rng = item_rng(23, i);
    std::vector<int> labels(plane.size());
    const auto& lines = plane.line_sets();
    const auto& l = lines[uniform_below(rng, lines.size())];
    const std::size_t p = uniform_below(rng, plane.size());
    for (std::size_t j = 0; j < plane.size(); ++j) labels[j] = j == p ? 2 : l.test(j) ? 1 : 0;
    if (i % 3 == 0) labels[uniform_below(rng, plane.size())] = static_cast<int>(uniform_below(rng, 3));
    CHECK(is_flag(is_flag_map(plane, labels)) == line_criterion(plane, labels));
  }
}

TEST_CASE("decomposition lemma on flag strata") {
  const auto& plane = projective_space(2, Field::get(2));
  const PointSet line = plane.line_sets()[0];
  const std::size_t p = plane.lines()[0][0];
  Partition part;
  part.part_of.assign(plane.size(), 0);
  for (std::size_t i = 0; i < plane.size(); ++i)
    if (line.test(i)) part.part_of[i] = 1;
  part.part_of[p] = 2;
  part.distinguished = 0;
  const auto v = check_decomposition_lemma(plane, part);
  REQUIRE(std::holds_alternative<LemmaHolds>(v));
  CHECK(std::get<LemmaHolds>(v).flag_parts == std::vector<int>{0, 1, 2});

  Partition bad = part;
  bad.part_of.pop_back();
  CHECK_THROWS_AS(check_decomposition_lemma(plane, bad), Error);
}

TEST_CASE("partition sweep of P2(F2)") {
  const auto sweep = sweep_decomposition_lemma(projective_space(2, Field::get(2)));
  CHECK(sweep.partitions == 813);
  CHECK(sweep.counterexamples == 0);
  CHECK(sweep.hypothesis_holds > 0);
  CHECK(sweep.first_hypothesis_failure.has_value());
}

TEST_CASE("star condition and collineation model") {
  const auto& plane = projective_space(2, Field::get(3));
  StarMap constant{&plane, 2, std::vector<std::array<std::uint32_t, 2>>(plane.size(), {1, 0})};
  CHECK(star_condition(constant));

  int refuted = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto rng = item_rng(29, i);
    StarMap m{&plane, 2, {}};
    for (std::size_t j = 0; j < plane.size(); ++j)
      m.values.push_back({static_cast<std::uint32_t>(uniform_below(rng, 2)), static_cast<std::uint32_t>(uniform_below(rng, 2))});
    if (!star_condition(m)) {
      ++refuted;
      CHECK(star_violation(m).has_value());
    }
  }
  CHECK(refuted > 40);

  const auto p3 = collineation_analyze(3, SearchMode::Exhaustive);
  CHECK(p3.maps_satisfying > 0);
  CHECK(p3.max_image_size <= 3);
  CHECK(p3.no_flag_combination == 0);

  const auto p2 = collineation_analyze(2, SearchMode::Exhaustive);
  REQUIRE(p2.first_line_test_not_flag.has_value());
  CHECK(p2.first_line_test_not_flag->size() == 7);
  CHECK_THROWS_AS(collineation_analyze(5, SearchMode::Exhaustive), Error);
}
