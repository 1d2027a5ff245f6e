#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flagval/divisor.hpp"

namespace flagval {

// k(t) or k(x,y) with named variables.
class FunctionField {
 public:
  FunctionField(const Field& field, std::vector<std::string> names);
  // "F3(x,y)", "F9(t)", "F5(t)"; names are single identifiers.
  static FunctionField parse(std::string_view spec, std::uint32_t max_order = Field::kDefaultMaxOrder);

  const Field& field() const { return *field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  Poly poly(std::string_view text) const { return parse_poly(text, *field_, names_); }
  // "p" or "(p)/(q)" or "p/q".
  RatFn element(std::string_view text) const;
  RatFn var(int index) const { return RatFn::variable(*field_, nvars(), index); }
  RatFn constant(Elem c) const { return RatFn::constant(*field_, nvars(), c); }

  std::string format(const Poly& p) const { return flagval::to_string(p, names_); }
  std::string format(const RatFn& f) const { return flagval::to_string(f, names_); }
  std::string format(const DivisorRep& d) const { return d.to_string(names_); }
  std::string to_string() const;

  friend bool operator==(const FunctionField& a, const FunctionField& b) {
    return a.field_ == b.field_ && a.names_ == b.names_;
  }

 private:
  const Field* field_;
  std::vector<std::string> names_;
};

}  // namespace flagval
