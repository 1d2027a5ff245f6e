#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "flagval/divisor.hpp"
#include "flagval/embedded.hpp"
#include "flagval/flag.hpp"
#include "flagval/place.hpp"
#include "flagval/residue.hpp"

namespace flagval {

// Value in Z^rank, ordered lexicographically.
class Gamma {
 public:
  Gamma() = default;
  explicit Gamma(std::vector<std::int64_t> components) : c_(std::move(components)) {}
  static Gamma zero(int rank) { return Gamma(std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0)); }

  const std::vector<std::int64_t>& components() const { return c_; }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  int rank() const { return static_cast<int>(c_.size()); }
  bool is_zero() const;
  bool is_positive() const { return *this > zero(rank()); }

  friend Gamma operator+(const Gamma& a, const Gamma& b);
  friend Gamma operator-(const Gamma& a, const Gamma& b);
  Gamma operator-() const;
  friend bool operator==(const Gamma&, const Gamma&) = default;
  friend std::strong_ordering operator<=>(const Gamma& a, const Gamma& b) { return a.c_ <=> b.c_; }

  std::string to_string() const;

 private:
  std::vector<std::int64_t> c_;
};

Gamma val(const Place& place, const DivisorRep& f);
Gamma val(const Place& place, const RatFn& f);
bool in_units(const Place& place, const DivisorRep& f);
bool in_units(const Place& place, const RatFn& f);
bool in_one_plus_m(const Place& place, const RatFn& f);

// Residue fields: F_q[t]/(p) for places of k(t) and for composite places;
// k(s) (rational functions in the kept variable) along a curve.
using ResidueValue = std::variant<ResidueClass, RatFn>;
ResidueValue residue(const Place& place, const DivisorRep& f);
ResidueValue residue(const Place& place, const RatFn& f);
bool is_one(const ResidueValue& r);
std::string to_string(const ResidueValue& r);

// Residue of a univariate rational function at a place of k(s).
ResidueClass residue_at(const Place& place, const RatFn& f);
// Residue modulus used for the infinite place (degree one).
Poly infinity_modulus(const Field& field);

// Section of a rank-one valuation: n -> u^n for the canonical uniformizer.
class Splitting {
 public:
  explicit Splitting(Place place);

  const Place& place() const { return place_; }
  const DivisorRep& uniformizer() const { return uniformizer_; }
  DivisorRep section(std::int64_t n) const { return uniformizer_.pow(static_cast<int>(n)); }
  // val(section(n)) = n and section(a + b) = section(a) * section(b) for |n| <= range.
  bool certify(int range) const;

 private:
  Place place_;
  DivisorRep uniformizer_;
};

Splitting make_splitting(const Place& place);

FlagVerdict valuation_flag_structure(const Place& place, const EmbeddedSubspace& s);
std::vector<Gamma> valuation_values(const Place& place, const EmbeddedSubspace& s);

}  // namespace flagval
