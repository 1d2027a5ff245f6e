#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "flagval/divisor.hpp"
#include "flagval/place.hpp"
#include "flagval/ratfn.hpp"
#include "flagval/residue.hpp"

namespace flagval {

// Formal Z-combination of symbols {f, g} in K_2 of F_q(t).
struct SymbolTerm {
  DivisorRep f;
  DivisorRep g;
  std::int64_t multiplicity = 1;
};

class K2Symbol {
 public:
  K2Symbol() = default;
  K2Symbol(DivisorRep f, DivisorRep g, std::int64_t multiplicity = 1);
  static K2Symbol of(const RatFn& f, const RatFn& g);

  const std::vector<SymbolTerm>& terms() const { return terms_; }
  K2Symbol& operator+=(const K2Symbol& other);
  friend K2Symbol operator+(K2Symbol a, const K2Symbol& b) { return a += b; }

 private:
  std::vector<SymbolTerm> terms_;
};

// Residue field modulus of a place of k(t).
Poly residue_modulus(const Place& place);

ResidueClass tame_symbol(const K2Symbol& s, const Place& place);

// Places where some entry has nonzero valuation, in canonical order with the
// infinite place last. Tame symbols vanish elsewhere.
std::vector<Place> symbol_support(const K2Symbol& s);

using TameResidueVector = std::vector<std::pair<Place, ResidueClass>>;
TameResidueVector tame_residues(const K2Symbol& s);

bool steinberg_check(const RatFn& f);
bool weil_reciprocity_check(const RatFn& f, const RatFn& g);

// Extension ladder F_{q^{d_0}} c F_{q^{d_1}} c ..., each degree dividing the next.
struct Tower {
  std::vector<int> degrees;
  // 1, 2, 4, ..., 2^height.
  static Tower doubling(int height);
  int top() const { return static_cast<int>(degrees.size()) - 1; }
  std::string label(const Field& base, int level) const;
};

struct DivisibleHere {};
struct DivisibleInTower {
  int level;
  int degree;
};
struct NotDivisible {
  Generator generator;
  int exponent;
};
// Exponents are divisible but the unit is not an n-th power anywhere on the ladder.
struct UnitNotDivisibleOnLadder {
  int top_degree;
};
using K1Divisibility = std::variant<DivisibleHere, DivisibleInTower, NotDivisible, UnitNotDivisibleOnLadder>;

K1Divisibility divisible_in_k1(const DivisorRep& f, std::uint64_t n, const Tower& tower);

struct ObstructedAtLevel {
  int level;
  Place place;
  ResidueClass residue;
};
struct UnobstructedUpTo {
  int level;
  int cleared_from;  // least level at which every residue is an l-th power
};
using SymbolProbe = std::variant<ObstructedAtLevel, UnobstructedUpTo>;

// Necessary condition for l-divisibility of {f, g}: every tame symbol is an
// l-th power in the residue field extended to the top of the ladder.
SymbolProbe symbol_divisibility_probe(const RatFn& f, const RatFn& g, std::uint64_t ell, const Tower& tower);

}  // namespace flagval
