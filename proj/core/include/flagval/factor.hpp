#pragma once

#include <utility>
#include <vector>

#include "flagval/poly.hpp"

namespace flagval {

struct Factorization {
  Elem unit = 1;
  // Monic irreducible factors in canonical order with multiplicities.
  std::vector<std::pair<Poly, int>> factors;
};

// Trial division over enumerated monic irreducibles. Univariate input of any
// degree whose factors need tables of at most ~1e6 entries; bivariate input
// whose irreducible factors have total degree <= 2, plus one cofactor of
// degree <= 5.
Factorization poly_factor(const Poly& f);

// All monic polynomials of exact (total) degree d, canonical order.
std::vector<Poly> monic_polys(const Field& field, int nvars, int degree);
// Monic irreducibles of exact degree d, canonical order; cached per field.
// Bivariate tables exist for d <= 3.
const std::vector<Poly>& monic_irreducibles(const Field& field, int nvars, int degree);
bool is_irreducible(const Poly& f);

Poly multiply_out(const Factorization& fz, const Field& field, int nvars);

}  // namespace flagval
