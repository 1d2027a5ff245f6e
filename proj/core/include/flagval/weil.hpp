#pragma once

#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "flagval/divisor.hpp"
#include "flagval/function_field.hpp"
#include "flagval/lattice.hpp"
#include "flagval/place.hpp"

namespace flagval {

// Z, or Z/l^m with l prime to the characteristic.
class CoefficientRing {
 public:
  static CoefficientRing integers() { return CoefficientRing(0); }
  static CoefficientRing mod_prime_power(std::uint32_t ell, int m, std::uint32_t characteristic);

  std::int64_t modulus() const { return modulus_; }
  bool is_integers() const { return modulus_ == 0; }
  std::int64_t reduce(std::int64_t a) const;
  std::int64_t add(std::int64_t a, std::int64_t b) const { return reduce(lattice::checked_add(a, b)); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return reduce(lattice::checked_mul(reduce(a), reduce(b))); }
  bool is_zero(std::int64_t a) const { return reduce(a) == 0; }
  std::string to_string() const;

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  explicit CoefficientRing(std::int64_t modulus) : modulus_(modulus) {}
  std::int64_t modulus_;
};

// Homomorphism K^x/k^x -> R given by values on generators (default 0).
struct TableRule {
  std::map<Generator, std::int64_t> values;
};
// chi o nu for a valuation nu with values in Z^rank and chi given by its
// values on the standard basis.
struct ValuationRule {
  Place place;
  std::vector<std::int64_t> character;
};

class WeilElement {
 public:
  using Rule = std::variant<TableRule, ValuationRule>;

  WeilElement(CoefficientRing ring, Rule rule);

  const CoefficientRing& ring() const { return ring_; }
  std::int64_t operator()(const DivisorRep& f) const;
  std::int64_t operator()(const RatFn& f) const;

  // r * this + s * other.
  WeilElement combine(std::int64_t r, const WeilElement& other, std::int64_t s) const;
  WeilElement scaled(std::int64_t r) const;

  nlohmann::ordered_json to_json(const FunctionField& field) const;

 private:
  WeilElement(CoefficientRing ring, std::vector<std::pair<std::int64_t, Rule>> terms)
      : ring_(ring), terms_(std::move(terms)) {}
  CoefficientRing ring_;
  std::vector<std::pair<std::int64_t, Rule>> terms_;
};

WeilElement weil_from_valuation(const Place& place, std::vector<std::int64_t> character, CoefficientRing ring);

struct Subfield {
  RatFn generator;  // h, with E = k(h)
  std::string label;
};

struct RestrictedValue {
  Poly polynomial;   // P(T), monic irreducible over k
  RatFn element;     // P(h)
  std::int64_t value;
};

// Generators of E^x/k^x: h - a for a = 0, 1, ..., q-1, then monic
// irreducibles P of degrees 2..degree_bound evaluated at h.
std::vector<std::pair<Poly, RatFn>> subfield_generators(const Subfield& e, int degree_bound = 2);
std::vector<RestrictedValue> restrict_to_subfield(const WeilElement& w, const Subfield& e, int degree_bound = 2);

// Arena generators: elements whose Z-span is the window on K^x/k^x.
bool is_inertia(const WeilElement& w, const Place& place, const std::vector<DivisorRep>& arena);
bool is_decomposition(const WeilElement& w, const Place& place, const std::vector<RatFn>& one_plus_m_sample);

// Integer solutions w in Z^n (values on the arena generators) vanishing on
// every arena unit of the place. Units are enumerated explicitly:
// generators of value 0 and g^{v(h)} h^{-v(g)} for pairs of non-units.
lattice::IntMatrix solve_inertia(const Place& place, const std::vector<DivisorRep>& arena);

struct Cyclic {};
struct NonCyclic {
  std::size_t subfield_index;
  std::string subfield;
  std::pair<Poly, Poly> polynomials;
  std::pair<RatFn, RatFn> elements;
  std::int64_t minor;  // reduced in R
};
using CPairVerdict = std::variant<Cyclic, NonCyclic>;

// Throws ProportionalPair when all 2x2 minors on the probe set vanish.
CPairVerdict c_pair_test(const WeilElement& a, const WeilElement& b, const std::vector<Subfield>& family,
                         const std::vector<DivisorRep>& probe, int degree_bound = 2);

struct SupportingValuation {
  Place place;
  std::int64_t r;
  std::int64_t s;
};

// First place in the universe, and first combination r*a + s*b in order of
// |r| + |s| (up to coefficient_bound), that is inertia on the arena.
std::optional<SupportingValuation> find_supporting_valuation(const WeilElement& a, const WeilElement& b,
                                                             const std::vector<Place>& universe,
                                                             const std::vector<DivisorRep>& arena,
                                                             int coefficient_bound = 3);

}  // namespace flagval
