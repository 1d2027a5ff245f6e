#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "flagval/projspace.hpp"

namespace flagval {

// Subspaces of dimensions 0, 1, ..., n-1, each contained in the next.
struct FlagChain {
  std::vector<ProjSubspace> chain;
};

struct Flag {
  FlagChain chain;
};

// witness_line: a line on which the map is not constant off any single point.
// Absent when every line passes that test (possible over F_2).
struct NotFlag {
  std::optional<ProjSubspace> witness_line;
};

using FlagVerdict = std::variant<Flag, NotFlag>;

inline bool is_flag(const FlagVerdict& v) { return std::holds_alternative<Flag>(v); }

// Maps are given by integer labels per point of the space (in index order).
// Any value set can be relabelled with label_values.
template <typename T>
std::vector<int> label_values(const std::vector<T>& values) {
  std::map<T, int> ids;
  std::vector<int> out;
  out.reserve(values.size());
  for (const T& v : values) out.push_back(ids.try_emplace(v, static_cast<int>(ids.size())).first->second);
  return out;
}

FlagVerdict is_flag_map(const ProjectiveSpace& space, std::span<const int> labels);
// Chain as subspace indices per dimension 0..n-1 (indices into space.subspaces(d)).
std::optional<std::vector<std::size_t>> find_flag_chain(const ProjectiveSpace& space, std::span<const int> labels);
bool is_flag_map_fast(const ProjectiveSpace& space, std::span<const int> labels);

bool line_criterion(const ProjectiveSpace& space, std::span<const int> labels);
// First line (index) that is not constant off at most one point.
std::optional<std::size_t> line_criterion_violation(const ProjectiveSpace& space, std::span<const int> labels);

// Re-checks a verdict by direct evaluation.
bool verify_verdict(const ProjectiveSpace& space, std::span<const int> labels, const FlagVerdict& verdict);

// Characteristic function of a point set.
std::vector<int> indicator(const ProjectiveSpace& space, const PointSet& set);

enum class FlagFamily { Point, Line, PuncturedLine, ComplementOfPoint, ComplementOfLine, ComplementOfPuncturedLine };
inline constexpr std::array<FlagFamily, 6> kFlagFamilies = {
    FlagFamily::Point, FlagFamily::Line, FlagFamily::PuncturedLine,
    FlagFamily::ComplementOfPoint, FlagFamily::ComplementOfLine, FlagFamily::ComplementOfPuncturedLine};
const char* to_string(FlagFamily f);
std::optional<FlagFamily> classify_subset(const ProjectiveSpace& plane, const PointSet& s);

struct FlagCensus {
  std::uint64_t subsets_examined = 0;
  std::uint64_t flag_subsets = 0;       // nonempty proper
  std::uint64_t improper_flag = 0;      // empty set and full plane
  std::array<std::uint64_t, 6> by_family{};
  std::uint64_t unclassified = 0;
  std::vector<PointSet> unclassified_examples;
};

// Exhaustive over all subsets of P^2(F_q); SizeBound when q > 3.
FlagCensus classify_flag_subsets(const Field& field);

// ----- Partition lemma on P^2 -----

struct Partition {
  std::vector<int> part_of;  // part id per point, ids 0..k-1
  int distinguished = 0;     // id of S_1
};

struct LemmaHolds {
  std::vector<int> flag_parts;  // ids of parts that are flag subsets
  bool other_part_flag = false; // some part other than S_1 is flag
  bool distinguished_flag = false;
};
struct HypothesisFails {
  std::size_t line;
};
struct CounterexampleCandidate {};
using LemmaVerdict = std::variant<LemmaHolds, HypothesisFails, CounterexampleCandidate>;

LemmaVerdict check_decomposition_lemma(const ProjectiveSpace& plane, const Partition& partition);

struct LemmaSweep {
  std::uint64_t partitions = 0;  // set partitions with >= 3 parts
  std::uint64_t cases = 0;       // (partition, distinguished part) pairs
  std::uint64_t hypothesis_holds = 0;
  std::uint64_t other_part_flag = 0;
  std::uint64_t only_distinguished_flag = 0;
  std::uint64_t counterexamples = 0;
  std::optional<Partition> first_counterexample;
  std::optional<std::pair<Partition, std::size_t>> first_hypothesis_failure;
};

LemmaSweep sweep_decomposition_lemma(const ProjectiveSpace& plane);

// ----- Collineation model P^2(F_p) -> A^2(R) -----

// R = Z/modulus (2 for the F_2 model).
struct StarMap {
  const ProjectiveSpace* domain = nullptr;
  std::uint32_t modulus = 2;
  std::vector<std::array<std::uint32_t, 2>> values;
};

bool star_condition(const StarMap& m);
std::optional<std::size_t> star_violation(const StarMap& m);

enum class SearchMode { Exhaustive, Sampled };

struct CollineationReport {
  std::uint32_t p = 0;
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t maps_satisfying = 0;
  std::uint32_t max_image_size = 0;
  std::uint64_t image_size_violations = 0;     // |image| > 3
  std::uint64_t no_flag_combination = 0;       // no nontrivial F_2-combination is flag
  std::uint64_t line_test_not_flag = 0;        // constant off one point on all lines, yet not flag
  std::optional<std::vector<std::uint32_t>> first_image_violation;
  std::optional<std::vector<std::uint32_t>> first_no_flag_combination;
  std::optional<std::vector<std::uint32_t>> first_line_test_not_flag;
};

// Exhaustive for p in {2, 3}; sampled for larger p. Values encode (a, b) as a + 2b.
CollineationReport collineation_analyze(std::uint32_t p, SearchMode mode, std::uint64_t samples = 0,
                                        std::uint64_t seed = 0);

}  // namespace flagval
