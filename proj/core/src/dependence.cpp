#include "flagval/dependence.hpp"

#include <algorithm>
#include <map>

#include "flagval/error.hpp"
#include "flagval/linalg.hpp"

namespace flagval {

DependenceVerdict algebraically_dependent(const RatFn& f, const RatFn& g, int bound) {
  if (f.is_constant() || g.is_constant()) throw Error(ErrorCode::ConstantInput, "dependence of a constant");
  if (bound < 1) throw Error(ErrorCode::InvalidConfig, "dependence bound must be >= 1");
  if (&f.field() != &g.field() || f.nvars() != g.nvars())
    throw Error(ErrorCode::FieldMismatch, "dependence across fields");
  const Field& field = f.field();
  const auto D = static_cast<unsigned>(bound);

  // Unknowns: monomials U^i V^j, ordered ascending (graded lex), so the first
  // free column yields the relation with the smallest leading monomial.
  std::vector<Monomial> unknowns;
  for (unsigned i = 0; i <= D; ++i)
    for (unsigned j = 0; j <= D; ++j)
      unknowns.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j)});
  std::sort(unknowns.begin(), unknowns.end());

  std::vector<Poly> num_pow{Poly::constant(field, f.nvars(), 1)}, den_pow{num_pow[0]};
  std::vector<Poly> gnum_pow{num_pow[0]}, gden_pow{num_pow[0]};
  for (unsigned k = 1; k <= D; ++k) {
    num_pow.push_back(num_pow.back() * f.num());
    den_pow.push_back(den_pow.back() * f.den());
    gnum_pow.push_back(gnum_pow.back() * g.num());
    gden_pow.push_back(gden_pow.back() * g.den());
  }

  std::map<Monomial, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Elem>>> columns;
  for (Monomial u : unknowns) {
    Poly term = num_pow[u.x] * den_pow[D - u.x] * gnum_pow[u.y] * gden_pow[D - u.y];
    std::vector<std::pair<std::size_t, Elem>> col;
    for (const Term& t : term.terms()) {
      auto [it, inserted] = row_of.try_emplace(t.mono, row_of.size());
      col.emplace_back(it->second, t.coef);
    }
    columns.push_back(std::move(col));
  }
  FqMatrix rows(row_of.size(), FqVector(unknowns.size(), 0));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (auto [r, v] : columns[c]) rows[r][c] = v;

  FqMatrix kernel = nullspace(field, rows, unknowns.size());
  if (kernel.empty()) return IndependentUpTo{bound};

  Poly p(field, 2);
  for (std::size_t c = 0; c < unknowns.size(); ++c)
    if (kernel.front()[c] != 0) p += Poly::monomial(field, 2, unknowns[c], kernel.front()[c]);
  return Dependent{p.monic()};
}

bool annihilates(const Poly& p, const RatFn& f, const RatFn& g) {
  return substitute(p, f, g).is_zero();
}

}  // namespace flagval
