#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "flagval/divisor.hpp"
#include "flagval/function_field.hpp"
#include "flagval/place.hpp"

namespace flagval {

// Multiplicative map K^x/k^x -> L^x/l^x. Values are class parts (unit 1).
class PsiMap {
 public:
  // f -> embed(residue(f * s(-v(f)))) for a curve place with section
  // s(n) = C^n. The residue variable is sent to target variable embed_var;
  // with twist_var set, the value is further multiplied by twist^{v(f)}.
  static PsiMap from_valuation(const FunctionField& source, const Place& place, const FunctionField& target,
                               int embed_var, std::optional<int> twist_var = std::nullopt);
  // f -> var^{v(f)}: a valuation map read in a one-variable target.
  static PsiMap valuation_map(const FunctionField& source, const Place& place, const FunctionField& target,
                              int var = 0);
  static PsiMap identity(const FunctionField& field);
  // Multiplicative extension of values on generators; other generators throw BadInput.
  static PsiMap table(const FunctionField& source, const FunctionField& target, std::map<Generator, DivisorRep> values,
                      std::string name = "table");

  // Same map, except that the class `at` is sent to psi(at) * factor.
  PsiMap perturbed(const DivisorRep& at, const DivisorRep& factor) const;

  // "from-valuation:<place>", "from-valuation-twisted:<place>",
  // "valuation-map:<place>", "identity".
  static PsiMap parse(std::string_view spec, const FunctionField& source);

  const FunctionField& source() const { return source_; }
  const FunctionField& target() const { return target_; }
  const std::string& name() const { return name_; }
  const std::optional<Place>& place() const { return place_; }

  DivisorRep operator()(const DivisorRep& f) const { return eval_(f); }
  DivisorRep operator()(const RatFn& f) const { return eval_(to_divisor(f)); }

 private:
  using Eval = std::function<DivisorRep(const DivisorRep&)>;
  PsiMap(FunctionField source, FunctionField target, std::string name, std::optional<Place> place, Eval eval)
      : source_(std::move(source)), target_(std::move(target)), name_(std::move(name)), place_(std::move(place)),
        eval_(std::move(eval)) {}
  FunctionField source_;
  FunctionField target_;
  std::string name_;
  std::optional<Place> place_;
  Eval eval_;
};

}  // namespace flagval
