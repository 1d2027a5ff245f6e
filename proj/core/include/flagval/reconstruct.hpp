#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "flagval/arena.hpp"
#include "flagval/embedded.hpp"
#include "flagval/lattice.hpp"
#include "flagval/psi.hpp"

namespace flagval {

// Algebraic dependence of target classes, cached. Trivial classes are
// dependent on everything; classes supported on one common variable are
// dependent without a search.
class DependenceOracle {
 public:
  DependenceOracle(const FunctionField& target, int bound) : target_(&target), bound_(bound) {}
  bool operator()(const DivisorRep& a, const DivisorRep& b);
  int bound() const { return bound_; }

 private:
  const FunctionField* target_;
  int bound_;
  std::unordered_map<std::string, bool> cache_;
};

struct LemmaDefect {
  std::string property;  // "decomposition.1", "decomposition.2", "decomposition.3"
  std::string detail;
};

struct DependenceClass {
  std::size_t representative;  // index into the subspace points
  std::vector<std::size_t> points;
};

struct Decomposition {
  std::vector<std::size_t> s1;  // psi = 1
  std::vector<DependenceClass> classes;
  std::size_t checks = 0;
  std::vector<LemmaDefect> defects;
};

// S = S_1 u S_f for the points of S. Throws DependenceBoundTooSmall when
// dependence of images is not transitive at the bound.
Decomposition decompose_subspace(const PsiMap& psi, const EmbeddedSubspace& s, int dependence_bound = 4);

struct PlaneCase1 {
  std::vector<std::size_t> line;  // psi is constant off this line
};
struct PlaneCase2 {
  std::vector<std::size_t> pivots;
};
struct InjectiveOnPlane {};
struct HypothesisViolation {
  std::string detail;
};
using PlaneVerdict = std::variant<PlaneCase1, PlaneCase2, InjectiveOnPlane, HypothesisViolation>;

struct PlaneClassification {
  PlaneVerdict verdict;
  bool case1_matched = false;
  bool case2_matched = false;
};

// Throws PreconditionFailed when the plane has no x, y, z with distinct
// images and psi(x/z), psi(y/z) independent.
PlaneClassification classify_plane(const PsiMap& psi, const EmbeddedSubspace& plane, int dependence_bound = 4);
std::string to_string(const PlaneVerdict& v, const EmbeddedSubspace& plane);

enum class ReconstructionPath {
  UnionOfInjectiveLines,  // o^x generated by ratios on injective lines
  NonFlagField,           // o^x = psi^{-1}(F^x) for the field F of the non-flag lines
  NonFlagLines,           // o^x generated by ratios on non-flag lines
  FlagEverywhere          // o^x = ker psi
};
std::string to_string(ReconstructionPath path);

struct ValuationVerdict {
  ReconstructionPath path;
  lattice::IntMatrix units;  // Hermite basis of o^x in the arena group
  lattice::Quotient gamma;
};
struct InjectiveVerdict {};
struct Inconclusive {
  std::string reason;
};

struct LemmaChecks {
  std::size_t decomposition_calls = 0;
  std::size_t decomposition_checks = 0;
  std::size_t decomposition_defects = 0;
  bool triple_product_applicable = false;
  std::size_t triple_product_samples = 0;
  std::size_t triple_product_failures = 0;
  std::size_t line_flag_lines = 0;
  std::size_t line_flag_failures = 0;
  bool passed() const { return decomposition_defects == 0 && triple_product_failures == 0 && line_flag_failures == 0; }
};

struct ReconstructionConfig {
  int dependence_bound = 4;
  std::size_t planes = 6;
  std::size_t multiplicativity_samples = 400;
  std::size_t closure_samples = 20;
  std::uint64_t seed = 1;
};

struct ReconstructionResult {
  std::variant<ValuationVerdict, InjectiveVerdict, Inconclusive> verdict;
  LemmaChecks checks;
  std::size_t injective_lines = 0;
  std::size_t nonflag_lines = 0;
  bool u_hypothesis = false;
  std::vector<std::string> planes;
  std::vector<std::string> notes;

  const ValuationVerdict* valuation() const { return std::get_if<ValuationVerdict>(&verdict); }
};

// Spot-checks psi(fg) = psi(f) psi(g) on arena points; throws NotMultiplicative.
void check_multiplicative(const PsiMap& psi, const Arena& arena, std::size_t samples, std::uint64_t seed);

ReconstructionResult extract_valuation(const PsiMap& psi, const Arena& arena, const ReconstructionConfig& config = {});

// Class of f in Gamma (free coordinates), for f in the arena group.
lattice::IntVector gamma_value(const ValuationVerdict& v, const Arena& arena, const DivisorRep& f);

struct ConclusionChecks {
  std::size_t one_plus_m_samples = 0;
  std::size_t one_plus_m_failures = 0;
  std::size_t residue_samples = 0;     // unit representatives
  std::size_t residue_pairs = 0;
  std::size_t residue_failures = 0;
  bool passed() const { return one_plus_m_failures == 0 && residue_failures == 0; }
};

// (1) psi = 1 on sampled elements of 1 + m; (2) on sampled units u, u':
// psi(u) = psi(u') iff u/u' is a constant times an element of 1 + m.
// Membership in m is read off the reconstructed valuation: on the line
// through h and p, p/h is in m iff p is the only point whose class differs.
ConclusionChecks verify_theorem_conclusions(const ReconstructionResult& result, const PsiMap& psi, const Arena& arena,
                                            std::size_t samples, std::uint64_t seed);

nlohmann::ordered_json to_json(const ReconstructionResult& result, const Arena& arena);
nlohmann::ordered_json to_json(const ConclusionChecks& checks);

}  // namespace flagval
