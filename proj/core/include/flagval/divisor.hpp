#pragma once

#include <compare>
#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flagval/ratfn.hpp"

namespace flagval {

// A monic irreducible polynomial, or the place at infinity of k(t).
class Generator {
 public:
  explicit Generator(Poly poly);
  static Generator infinity(const Field& field);

  bool is_infinity() const { return infinity_; }
  const Poly& poly() const { return poly_; }
  int degree() const { return infinity_ ? 1 : poly_.degree(); }

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.infinity_ == b.infinity_ && a.poly_ == b.poly_;
  }
  friend std::strong_ordering operator<=>(const Generator& a, const Generator& b);

  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

 private:
  Generator(Poly poly, bool infinity) : poly_(std::move(poly)), infinity_(infinity) {}
  Poly poly_;
  bool infinity_;
};

// Element of K^x, stored as a unit in k^x times a finitely supported product
// of generator powers. The class in K^x/k^x ignores the unit.
class DivisorRep {
 public:
  using Entry = std::pair<Generator, int>;

  DivisorRep(const Field& field, int nvars);
  // Raw generator power; in k(t) this omits the infinity exponent, so use
  // to_divisor for the class of a polynomial.
  static DivisorRep of(Generator g, int exponent = 1);
  static DivisorRep scalar(const Field& field, int nvars, Elem unit);

  const Field& field() const { return *field_; }
  int nvars() const { return nvars_; }
  Elem unit() const { return unit_; }
  const std::vector<Entry>& terms() const { return terms_; }
  int exponent(const Generator& g) const;
  bool is_trivial() const { return terms_.empty(); }

  DivisorRep with_unit(Elem unit) const;
  DivisorRep class_part() const { return with_unit(1); }
  bool same_class(const DivisorRep& other) const { return terms_ == other.terms_; }

  DivisorRep inverse() const;
  DivisorRep pow(int n) const;
  friend DivisorRep operator*(const DivisorRep& a, const DivisorRep& b);
  friend DivisorRep operator/(const DivisorRep& a, const DivisorRep& b) { return a * b.inverse(); }
  DivisorRep& operator*=(const DivisorRep& b) { return *this = *this * b; }
  friend bool operator==(const DivisorRep& a, const DivisorRep& b) {
    return a.unit_ == b.unit_ && a.terms_ == b.terms_;
  }

  std::size_t class_hash() const;

  nlohmann::ordered_json to_json(std::span<const std::string> names) const;
  nlohmann::ordered_json to_json() const;
  // Compact product form, e.g. "t^2*(t+2)^-1"; "1" for the trivial class.
  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

 private:
  const Field* field_;
  int nvars_;
  Elem unit_ = 1;
  std::vector<Entry> terms_;  // canonical generator order, nonzero exponents
};

struct DivisorClassHash {
  std::size_t operator()(const DivisorRep& d) const { return d.class_hash(); }
};
struct DivisorClassEq {
  bool operator()(const DivisorRep& a, const DivisorRep& b) const { return a.same_class(b); }
};

DivisorRep to_divisor(const Poly& f);
DivisorRep to_divisor(const RatFn& f);
// Multiplies out the finite generators; the infinity exponent is bookkeeping.
RatFn from_divisor(const DivisorRep& d);

DivisorRep divisor_from_json(const nlohmann::json& j, const Field& field,
                             std::span<const std::string> names);

}  // namespace flagval
