#include <algorithm>

#include "flagval/error.hpp"
#include "flagval/flag.hpp"

namespace flagval {

namespace {

struct PartSets {
  std::vector<PointSet> parts;
};

PartSets validate(const ProjectiveSpace& plane, const Partition& partition) {
  if (plane.dimension() != 2) throw Error(ErrorCode::InvalidConfig, "the partition lemma lives on planes");
  if (partition.part_of.size() != plane.size())
    throw Error(ErrorCode::BadPartition, "partition does not cover the plane");
  int k = 0;
  for (int id : partition.part_of) {
    if (id < 0) throw Error(ErrorCode::BadPartition, "negative part id");
    k = std::max(k, id + 1);
  }
  PartSets out;
  out.parts.resize(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < partition.part_of.size(); ++i)
    out.parts[static_cast<std::size_t>(partition.part_of[i])].set(i);
  for (const auto& s : out.parts)
    if (s.none()) throw Error(ErrorCode::BadPartition, "empty part");
  if (k < 3) throw Error(ErrorCode::BadPartition, "need at least three parts");
  if (partition.distinguished < 0 || partition.distinguished >= k)
    throw Error(ErrorCode::BadPartition, "distinguished part out of range");
  return out;
}

std::optional<std::size_t> hypothesis_violation(const ProjectiveSpace& plane, const Partition& partition,
                                                const PartSets& sets) {
  const PointSet& s1 = sets.parts[static_cast<std::size_t>(partition.distinguished)];
  const auto& lines = plane.line_sets();
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const PointSet& line = lines[l];
    if ((line & s1).none()) continue;  // inside the union of the other parts
    const PointSet rest = line & ~s1;
    if (rest.none()) continue;
    // All points off S_1 must lie in one part.
    bool single = false;
    for (const auto& part : sets.parts)
      if ((rest & ~part).none()) single = true;
    if (!single) return l;
  }
  return std::nullopt;
}

}  // namespace

LemmaVerdict check_decomposition_lemma(const ProjectiveSpace& plane, const Partition& partition) {
  PartSets sets = validate(plane, partition);
  if (auto l = hypothesis_violation(plane, partition, sets)) return HypothesisFails{*l};
  LemmaHolds holds;
  for (std::size_t j = 0; j < sets.parts.size(); ++j) {
    if (!is_flag_map_fast(plane, indicator(plane, sets.parts[j]))) continue;
    holds.flag_parts.push_back(static_cast<int>(j));
    if (static_cast<int>(j) == partition.distinguished) holds.distinguished_flag = true;
    else holds.other_part_flag = true;
  }
  if (holds.flag_parts.empty()) return CounterexampleCandidate{};
  return holds;
}

LemmaSweep sweep_decomposition_lemma(const ProjectiveSpace& plane) {
  const std::size_t n = plane.size();
  if (n > 13) throw Error(ErrorCode::SizeBound, "partition sweep is limited to 13 points");
  LemmaSweep sweep;
  // Restricted growth strings enumerate each set partition once.
  std::vector<int> rgs(n, 0);
  std::vector<int> prefix_max(n, 0);
  while (true) {
    const int k = prefix_max[n - 1] + 1;
    if (k >= 3) {
      ++sweep.partitions;
      for (int s1 = 0; s1 < k; ++s1) {
        Partition part{rgs, s1};
        ++sweep.cases;
        LemmaVerdict v = check_decomposition_lemma(plane, part);
        if (const auto* fail = std::get_if<HypothesisFails>(&v)) {
          if (!sweep.first_hypothesis_failure) sweep.first_hypothesis_failure = {part, fail->line};
          continue;
        }
        ++sweep.hypothesis_holds;
        if (std::holds_alternative<CounterexampleCandidate>(v)) {
          ++sweep.counterexamples;
          if (!sweep.first_counterexample) sweep.first_counterexample = part;
          continue;
        }
        const auto& h = std::get<LemmaHolds>(v);
        if (h.other_part_flag) ++sweep.other_part_flag;
        else ++sweep.only_distinguished_flag;
      }
    }
    // Next restricted growth string.
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[j - 1];
    }
  }
  return sweep;
}

}  // namespace flagval
