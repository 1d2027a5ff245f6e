#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "flagval/divisor.hpp"
#include "flagval/embedded.hpp"
#include "flagval/function_field.hpp"
#include "flagval/lattice.hpp"

namespace flagval {

// Finite window onto P_k(K): the points of P(V) for V the polynomials of
// degree <= D, every line of P(V), and the free group on the monic
// irreducibles of degree <= D (which contains the class of every point).
class Arena {
 public:
  static constexpr std::size_t kMaxLines = 2'000'000;

  Arena(FunctionField field, int degree, int exponent_bound = 2);

  const FunctionField& field() const { return field_; }
  int degree() const { return degree_; }
  int exponent_bound() const { return exponent_bound_; }

  const std::vector<Generator>& generators() const { return generators_; }
  std::optional<std::size_t> generator_index(const Generator& g) const;
  // Exponent vector over generators(); the infinite place is dropped.
  // Throws BadInput for classes outside the window.
  lattice::IntVector to_vector(const DivisorRep& f) const;
  bool covers(const DivisorRep& f) const;
  DivisorRep from_vector(const lattice::IntVector& v) const;

  // Points are monic polynomials (leading coefficient 1).
  std::size_t point_count() const { return points_.size(); }
  const Poly& point(std::size_t i) const { return points_[i]; }
  const DivisorRep& point_divisor(std::size_t i) const { return divisors_[i]; }
  const lattice::IntVector& point_vector(std::size_t i) const { return vectors_[i]; }
  std::optional<std::size_t> index_of(const Poly& p) const;
  std::size_t one_index() const { return one_; }

  // Each line lists its q+1 point indices in increasing order.
  const std::vector<std::vector<std::uint32_t>>& lines() const { return lines_; }
  // Index of the line through two distinct points.
  std::size_t line_through(std::size_t a, std::size_t b) const;

  EmbeddedSubspace subspace(std::vector<Poly> gens, std::string label = "") const;

  // Products of up to three generators with exponents in [-B, B].
  DivisorRep random_element(std::mt19937_64& rng) const;
  bool within_bounds(const DivisorRep& f) const;

  nlohmann::ordered_json describe() const;

 private:
  FunctionField field_;
  int degree_;
  int exponent_bound_;
  std::vector<Generator> generators_;
  std::map<Generator, std::size_t> generator_index_;
  std::vector<Poly> points_;
  std::vector<DivisorRep> divisors_;
  std::vector<lattice::IntVector> vectors_;
  std::unordered_map<Poly, std::size_t, PolyHash> point_index_;
  std::size_t one_ = 0;
  std::vector<std::vector<std::uint32_t>> lines_;
  std::unordered_map<std::uint64_t, std::size_t> line_of_pair_;
};

}  // namespace flagval
