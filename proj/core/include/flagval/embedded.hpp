#pragma once

#include <memory>
#include <string>
#include <vector>

#include "flagval/divisor.hpp"
#include "flagval/function_field.hpp"
#include "flagval/projspace.hpp"

namespace flagval {

struct EmbeddedPoint {
  ProjPoint coords;
  RatFn value;
  DivisorRep divisor;
};

// Finite projective subspace P(span(f_0..f_n)) of P_k(K).
class EmbeddedSubspace {
 public:
  const FunctionField& field() const { return field_; }
  const std::vector<RatFn>& generators() const { return generators_; }
  int dimension() const { return static_cast<int>(generators_.size()) - 1; }
  // In the canonical order of the coordinate points.
  const std::vector<EmbeddedPoint>& points() const { return points_; }
  // Indexed P^n(F_q) matching points() one to one (available for n <= 3 and
  // small q).
  const ProjectiveSpace& geometry() const;
  const std::string& label() const { return label_; }

  EmbeddedSubspace shifted(const DivisorRep& h) const;

 private:
  friend EmbeddedSubspace embed_span(const FunctionField&, std::vector<RatFn>, std::string);
  EmbeddedSubspace(FunctionField field, std::vector<RatFn> gens, std::string label)
      : field_(std::move(field)), generators_(std::move(gens)), label_(std::move(label)) {}
  FunctionField field_;
  std::vector<RatFn> generators_;
  std::vector<EmbeddedPoint> points_;
  std::string label_;
};

// Throws DependentGenerators when the generators are linearly dependent over k.
EmbeddedSubspace embed_span(const FunctionField& field, std::vector<RatFn> gens, std::string label = "");

// Rank over k of a family of rational functions (denominators cleared).
std::size_t linear_rank(const std::vector<RatFn>& fns);

}  // namespace flagval
