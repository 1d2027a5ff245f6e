#pragma once

#include <variant>

#include "flagval/ratfn.hpp"

namespace flagval {

struct Dependent {
  Poly annihilator;  // nonzero P(U, V) with P(f, g) = 0
};

struct IndependentUpTo {
  int bound;
};

using DependenceVerdict = std::variant<Dependent, IndependentUpTo>;

// Searches for P of bidegree <= (bound, bound) with P(f, g) = 0 by exact
// linear algebra over the ground field. The returned annihilator is the one of
// least leading monomial, scaled monic.
DependenceVerdict algebraically_dependent(const RatFn& f, const RatFn& g, int bound);

bool annihilates(const Poly& p, const RatFn& f, const RatFn& g);

}  // namespace flagval
