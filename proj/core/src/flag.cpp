#include "flagval/flag.hpp"

#include <algorithm>

#include "flagval/error.hpp"

namespace flagval {

namespace {

bool constant_on(const PointSet& s, std::size_t n, std::span<const int> labels) {
  int value = 0;
  bool seen = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!s.test(i)) continue;
    if (!seen) {
      value = labels[i];
      seen = true;
    } else if (labels[i] != value) {
      return false;
    }
  }
  return true;
}

// Finds a hyperplane H of the d-dimensional subspace V with the map constant
// on V \ H and, recursively, a flag of H.
bool search_chain(const ProjectiveSpace& space, std::span<const int> labels, const PointSet& v, int d,
                  std::vector<std::size_t>& chain) {
  const std::size_t n = space.size();
  if (d == 0) return true;
  const auto& candidates = space.subspaces(d - 1);
  for (std::size_t h = 0; h < candidates.size(); ++h) {
    const PointSet& hs = candidates[h];
    if ((hs & ~v).any()) continue;
    if (!constant_on(v & ~hs, n, labels)) continue;
    if (search_chain(space, labels, hs, d - 1, chain)) {
      chain[static_cast<std::size_t>(d - 1)] = h;
      return true;
    }
  }
  return false;
}

bool line_ok(const std::vector<std::size_t>& line, std::span<const int> labels) {
  // Constant off at most one point: at most two values, one of them once.
  int a = labels[line[0]], b = a;
  std::size_t count_a = 0, count_b = 0;
  for (std::size_t x : line) {
    int v = labels[x];
    if (v == a) {
      ++count_a;
    } else if (count_b == 0 || v == b) {
      b = v;
      ++count_b;
    } else {
      return false;
    }
  }
  return count_b <= 1 || count_a <= 1;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_flag_chain(const ProjectiveSpace& space, std::span<const int> labels) {
  if (labels.size() != space.size()) throw Error(ErrorCode::BadInput, "label count does not match the space");
  std::vector<std::size_t> chain(static_cast<std::size_t>(space.dimension()), 0);
  if (search_chain(space, labels, space.all(), space.dimension(), chain)) return chain;
  return std::nullopt;
}

bool is_flag_map_fast(const ProjectiveSpace& space, std::span<const int> labels) {
  return find_flag_chain(space, labels).has_value();
}

FlagVerdict is_flag_map(const ProjectiveSpace& space, std::span<const int> labels) {
  if (auto chain = find_flag_chain(space, labels)) {
    Flag f;
    for (std::size_t d = 0; d < chain->size(); ++d)
      f.chain.chain.push_back(space.to_subspace(space.subspaces(static_cast<int>(d))[(*chain)[d]]));
    return f;
  }
  NotFlag nf;
  if (auto line = line_criterion_violation(space, labels)) nf.witness_line = space.line(*line);
  return nf;
}

bool line_criterion(const ProjectiveSpace& space, std::span<const int> labels) {
  return !line_criterion_violation(space, labels).has_value();
}

std::optional<std::size_t> line_criterion_violation(const ProjectiveSpace& space, std::span<const int> labels) {
  if (labels.size() != space.size()) throw Error(ErrorCode::BadInput, "label count does not match the space");
  const auto& lines = space.lines();
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (!line_ok(lines[i], labels)) return i;
  return std::nullopt;
}

bool verify_verdict(const ProjectiveSpace& space, std::span<const int> labels, const FlagVerdict& verdict) {
  const std::size_t n = space.size();
  auto set_of = [&](const ProjSubspace& s) {
    PointSet out;
    for (std::size_t i = 0; i < n; ++i)
      if (s.contains(space.point(i))) out.set(i);
    return out;
  };
  if (const auto* flag = std::get_if<Flag>(&verdict)) {
    const auto& chain = flag->chain.chain;
    if (chain.size() != static_cast<std::size_t>(space.dimension())) return false;
    PointSet prev;
    for (std::size_t d = 0; d < chain.size(); ++d) {
      if (chain[d].dimension() != static_cast<int>(d)) return false;
      PointSet cur = set_of(chain[d]);
      if ((prev & ~cur).any()) return false;
      if (!constant_on(cur & ~prev, n, labels)) return false;
      prev = cur;
    }
    return constant_on(space.all() & ~prev, n, labels);
  }
  const auto& nf = std::get<NotFlag>(verdict);
  if (nf.witness_line) {
    if (nf.witness_line->dimension() != 1) return false;
    std::vector<std::size_t> pts;
    for (std::size_t i = 0; i < n; ++i)
      if (nf.witness_line->contains(space.point(i))) pts.push_back(i);
    return !line_ok(pts, labels);
  }
  return line_criterion(space, labels) && !is_flag_map_fast(space, labels);
}

std::vector<int> indicator(const ProjectiveSpace& space, const PointSet& set) {
  std::vector<int> out(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) out[i] = set.test(i) ? 1 : 0;
  return out;
}

const char* to_string(FlagFamily f) {
  switch (f) {
    case FlagFamily::Point: return "point";
    case FlagFamily::Line: return "line";
    case FlagFamily::PuncturedLine: return "line minus point";
    case FlagFamily::ComplementOfPoint: return "plane minus point";
    case FlagFamily::ComplementOfLine: return "plane minus line";
    case FlagFamily::ComplementOfPuncturedLine: return "plane minus punctured line";
  }
  return "?";
}

namespace {

bool is_line(const ProjectiveSpace& plane, const PointSet& s) {
  for (const auto& l : plane.line_sets())
    if (l == s) return true;
  return false;
}

bool is_punctured_line(const ProjectiveSpace& plane, const PointSet& s) {
  const std::size_t q = plane.field().order();
  if (s.count() != q) return false;
  for (const auto& l : plane.line_sets())
    if ((s & ~l).none()) return true;
  return false;
}

}  // namespace

std::optional<FlagFamily> classify_subset(const ProjectiveSpace& plane, const PointSet& s) {
  if (plane.dimension() != 2) throw Error(ErrorCode::InvalidConfig, "classification is for planes");
  const PointSet comp = plane.all() & ~s;
  if (s.count() == 1) return FlagFamily::Point;
  if (is_line(plane, s)) return FlagFamily::Line;
  if (is_punctured_line(plane, s)) return FlagFamily::PuncturedLine;
  if (comp.count() == 1) return FlagFamily::ComplementOfPoint;
  if (is_line(plane, comp)) return FlagFamily::ComplementOfLine;
  if (is_punctured_line(plane, comp)) return FlagFamily::ComplementOfPuncturedLine;
  return std::nullopt;
}

FlagCensus classify_flag_subsets(const Field& field) {
  if (field.order() > 3) throw Error(ErrorCode::SizeBound, "exhaustive subset census needs q <= 3");
  const ProjectiveSpace& plane = projective_space(2, field);
  FlagCensus census;
  const std::size_t n = plane.size();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    PointSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) s.set(i);
    ++census.subsets_examined;
    if (!is_flag_map_fast(plane, indicator(plane, s))) continue;
    if (s.none() || s == plane.all()) {
      ++census.improper_flag;
      continue;
    }
    ++census.flag_subsets;
    if (auto fam = classify_subset(plane, s)) {
      ++census.by_family[static_cast<std::size_t>(*fam)];
    } else {
      ++census.unclassified;
      if (census.unclassified_examples.size() < 8) census.unclassified_examples.push_back(s);
    }
  }
  return census;
}

}  // namespace flagval
