#include "flagval/factor.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "flagval/error.hpp"

namespace flagval {

namespace {

constexpr std::uint64_t kMaxTable = 2'000'000;

std::uint64_t checked_power(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > kMaxTable) throw Error(ErrorCode::SizeBound, "polynomial table too large");
  }
  return r;
}

// Monomials of total degree <= d in descending graded-lex order.
std::vector<Monomial> monomials_upto(int nvars, int d) {
  std::vector<Monomial> out;
  for (int deg = d; deg >= 0; --deg) {
    if (nvars == 1) {
      out.push_back({static_cast<std::uint16_t>(deg), 0});
      continue;
    }
    for (int x = deg; x >= 0; --x)
      out.push_back({static_cast<std::uint16_t>(x), static_cast<std::uint16_t>(deg - x)});
  }
  return out;
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
  const Field& f = base.field();
  Poly result = Poly::constant(f, 1, 1);
  Poly b = poly_mod(base, m);
  while (e > 0) {
    if (e & 1u) result = poly_mod(result * b, m);
    e >>= 1;
    if (e > 0) b = poly_mod(b * b, m);
  }
  return result;
}

// Ben-Or: f of degree d is irreducible iff gcd(t^{q^i} - t, f) = 1 for i <= d/2.
bool univariate_irreducible(const Poly& f) {
  const int d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  const Field& F = f.field();
  Poly t = Poly::variable(F, 1, 0);
  Poly h = t;
  for (int i = 1; i <= d / 2; ++i) {
    h = powmod(h, F.order(), f);
    if (!poly_gcd(h - t, f).is_one()) return false;
  }
  return true;
}

}  // namespace

std::vector<Poly> monic_polys(const Field& field, int nvars, int degree) {
  if (degree < 0) return {};
  const std::uint64_t q = field.order();
  std::vector<Poly> out;
  if (nvars == 1) {
    const std::uint64_t count = checked_power(q, degree);
    out.reserve(count);
    std::vector<Elem> coeffs(static_cast<std::size_t>(degree) + 1, 0);
    coeffs.back() = 1;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::uint64_t x = c;
      for (int i = 0; i < degree; ++i) {
        coeffs[static_cast<std::size_t>(i)] = static_cast<Elem>(x % q);
        x /= q;
      }
      out.push_back(Poly::from_dense(field, coeffs));
    }
    return out;
  }
  const auto monos = monomials_upto(2, degree);
  const int top_count = degree + 1;
  // Leading position i among the top-degree monomials; later i sorts first.
  for (int lead = top_count - 1; lead >= 0; --lead) {
    const int free = static_cast<int>(monos.size()) - lead - 1;
    const std::uint64_t count = checked_power(q, free);
    for (std::uint64_t c = 0; c < count; ++c) {
      std::uint64_t x = c;
      std::vector<Elem> digits(static_cast<std::size_t>(free));
      for (int i = free - 1; i >= 0; --i) {
        digits[static_cast<std::size_t>(i)] = static_cast<Elem>(x % q);
        x /= q;
      }
      Poly p = Poly::monomial(field, 2, monos[static_cast<std::size_t>(lead)], 1);
      for (int i = 0; i < free; ++i) {
        Elem d = digits[static_cast<std::size_t>(i)];
        if (d != 0) p += Poly::monomial(field, 2, monos[static_cast<std::size_t>(lead + 1 + i)], d);
      }
      out.push_back(std::move(p));
    }
  }
  return out;
}

const std::vector<Poly>& monic_irreducibles(const Field& field, int nvars, int degree) {
  static std::mutex mutex;
  static std::map<std::tuple<const Field*, int, int>, std::unique_ptr<std::vector<Poly>>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({&field, nvars, degree});
    if (it != cache.end()) return *it->second;
  }
  if (nvars == 2 && degree > 3)
    throw Error(ErrorCode::FactorizationOutOfRange, "bivariate irreducible tables stop at degree 3");
  auto table = std::make_unique<std::vector<Poly>>();
  if (degree >= 1) {
    for (Poly& p : monic_polys(field, nvars, degree)) {
      bool irreducible = true;
      if (nvars == 1) {
        irreducible = univariate_irreducible(p);
      } else {
        for (int d = 1; d <= degree / 2 && irreducible; ++d)
          for (const Poly& g : monic_irreducibles(field, 2, d))
            if (exact_divide(p, g)) {
              irreducible = false;
              break;
            }
      }
      if (irreducible) table->push_back(std::move(p));
    }
  }
  std::lock_guard lock(mutex);
  auto& slot = cache[{&field, nvars, degree}];
  if (!slot) slot = std::move(table);
  return *slot;
}

bool is_irreducible(const Poly& f) {
  if (f.is_zero() || f.is_constant()) return false;
  if (f.nvars() == 1) return univariate_irreducible(f.monic());
  auto fz = poly_factor(f);
  return fz.factors.size() == 1 && fz.factors[0].second == 1;
}

namespace {

// Moves a polynomial in one variable between the bivariate ring (variable
// index var) and the univariate ring.
Poly to_univariate(const Poly& f, int var) {
  Poly out(f.field(), 1);
  for (const Term& t : f.terms())
    out += Poly::monomial(f.field(), 1, {static_cast<std::uint16_t>(var == 0 ? t.mono.x : t.mono.y), 0}, t.coef);
  return out;
}

Poly from_univariate(const Poly& f, int var) {
  Poly out(f.field(), 2);
  for (const Term& t : f.terms()) {
    Monomial m = var == 0 ? Monomial{t.mono.x, 0} : Monomial{0, t.mono.x};
    out += Poly::monomial(f.field(), 2, m, t.coef);
  }
  return out;
}

}  // namespace

Factorization poly_factor(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factor of zero");
  const Field& field = f.field();
  if (f.nvars() == 2 && !f.is_constant() && (f.degree_in(0) == 0 || f.degree_in(1) == 0)) {
    const int var = f.degree_in(1) == 0 ? 0 : 1;
    Factorization uni = poly_factor(to_univariate(f, var));
    for (auto& [g, k] : uni.factors) g = from_univariate(g, var);
    std::sort(uni.factors.begin(), uni.factors.end(),
              [](const auto& a, const auto& b) { return canonical_compare(a.first, b.first) < 0; });
    return uni;
  }
  Factorization out;
  out.unit = f.leading_coefficient();
  Poly rem = f.monic();
  const int max_table = f.nvars() == 1 ? 64 : 2;
  int d = 1;
  for (; d <= max_table && rem.degree() >= 2 * d; ++d) {
    for (const Poly& g : monic_irreducibles(field, f.nvars(), d)) {
      if (rem.degree() < d) break;
      int k = 0;
      while (rem.degree() >= d) {
        auto q = exact_divide(rem, g);
        if (!q) break;
        rem = std::move(*q);
        ++k;
      }
      if (k > 0) out.factors.emplace_back(g, k);
    }
  }
  if (rem.degree() >= 2 * d)
    throw Error(ErrorCode::FactorizationOutOfRange,
                "cofactor of degree " + std::to_string(rem.degree()) + " may split further: " + to_string(rem));
  if (rem.degree() > 0) out.factors.emplace_back(rem, 1);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return canonical_compare(a.first, b.first) < 0; });
  return out;
}

Poly multiply_out(const Factorization& fz, const Field& field, int nvars) {
  Poly acc = Poly::constant(field, nvars, fz.unit);
  for (const auto& [g, k] : fz.factors) acc *= g.pow(static_cast<unsigned>(k));
  return acc;
}

}  // namespace flagval
