#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "flagval/function_field.hpp"
#include "flagval/ratfn.hpp"

namespace flagval {

// Zero set of a monic irreducible in k(t).
struct FinitePlace {
  Poly prime;
};
struct InfinitePlace {};
// Order of vanishing along an irreducible curve in k(x,y).
struct CurvePlace {
  Poly curve;
};

// A curve C = 0 whose function field is rational through one coordinate: one
// variable is kept and the other is a rational function of it on C.
struct CurveChart {
  int kept_var;      // 0 = x, 1 = y
  RatFn eliminated;  // value of the other variable, in k(s) with s the kept variable
};

// Valuation on a place P of k(x,y): ord along C, then ord at a point of the
// curve's residue field k(s).
struct CompositePlace {
  Poly curve;
  std::variant<FinitePlace, InfinitePlace> point;
};

class Place {
 public:
  using Kind = std::variant<FinitePlace, InfinitePlace, CurvePlace, CompositePlace>;

  static Place finite(Poly prime);
  static Place infinite(const Field& field);
  static Place curve(Poly curve);
  static Place composite(Poly curve, const Place& point_on_residue_line);
  // "finite:t^2+1", "infinite", "curve:x", "composite:x|y".
  static Place parse(std::string_view text, const FunctionField& field);

  const Kind& kind() const { return kind_; }
  const Field& field() const { return *field_; }
  int nvars() const { return std::holds_alternative<FinitePlace>(kind_) || std::holds_alternative<InfinitePlace>(kind_) ? 1 : 2; }
  // Rank of the value group Z^rank.
  int rank() const { return std::holds_alternative<CompositePlace>(kind_) ? 2 : 1; }
  bool is_univariate() const { return nvars() == 1; }
  // Degree of the residue field over k (finite places of k(t) only).
  int residue_degree() const;
  // Chart for curve and composite places with graph-like curves.
  std::optional<CurveChart> chart() const;
  const Poly& defining_polynomial() const;

  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

  friend bool operator==(const Place& a, const Place& b);

 private:
  Place(Kind kind, const Field& field) : kind_(std::move(kind)), field_(&field) {}
  Kind kind_;
  const Field* field_;
};

std::optional<CurveChart> graph_chart(const Poly& curve);
// Image of a bivariate polynomial on the curve, as an element of k(s).
RatFn restrict_to_chart(const Poly& g, const CurveChart& chart);

}  // namespace flagval
