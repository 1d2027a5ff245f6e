#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagval/field.hpp"

namespace flagval {

struct Monomial {
  std::uint16_t x = 0;
  std::uint16_t y = 0;

  int degree() const { return x + y; }
  bool divides(Monomial m) const { return x <= m.x && y <= m.y; }
  friend bool operator==(Monomial, Monomial) = default;
  // Graded lexicographic with x > y.
  friend std::strong_ordering operator<=>(Monomial a, Monomial b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.x <=> b.x;
  }
};

struct Term {
  Monomial mono;
  Elem coef;
  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial in one (t) or two (x, y) variables over a finite field.
// Terms are kept in strictly descending graded-lex order with nonzero
// coefficients.
class Poly {
 public:
  Poly(const Field& field, int nvars);

  static Poly constant(const Field& field, int nvars, Elem c);
  static Poly variable(const Field& field, int nvars, int index);
  static Poly monomial(const Field& field, int nvars, Monomial m, Elem c);
  // Univariate from coefficients, low degree first.
  static Poly from_dense(const Field& field, std::span<const Elem> coeffs);

  const Field& field() const { return *field_; }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().mono.degree() == 0; }
  bool is_one() const;
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  int degree_in(int var) const;
  Monomial leading_monomial() const;
  Elem leading_coefficient() const;
  Elem coefficient(Monomial m) const;
  Elem constant_term() const { return coefficient({}); }
  // Univariate coefficients, low degree first.
  std::vector<Elem> dense() const;

  Poly monic() const;
  Poly scaled(Elem c) const;
  Poly pow(unsigned n) const;
  Poly operator-() const { return scaled(field_->neg(1)); }

  Elem evaluate(Elem t) const;
  Elem evaluate(Elem x, Elem y) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend bool operator==(const Poly& a, const Poly& b);

  std::size_t hash() const;

 private:
  friend class PolyBuilder;
  const Field* field_;
  int nvars_;
  std::vector<Term> terms_;
};

// Canonical generator order: degree, then coefficients compared
// lexicographically along descending monomials.
std::strong_ordering canonical_compare(const Poly& a, const Poly& b);

struct PolyLess {
  bool operator()(const Poly& a, const Poly& b) const { return canonical_compare(a, b) < 0; }
};

struct PolyHash {
  std::size_t operator()(const Poly& p) const { return p.hash(); }
};

// Univariate Euclidean division; throws ZeroPolynomial on b == 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& m);
// Monic gcd (univariate).
Poly poly_gcd(const Poly& a, const Poly& b);
// Exact quotient a / b if b divides a (uni- or bivariate).
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);
// Largest k with b^k | a (b nonconstant, a nonzero).
int multiplicity(const Poly& a, const Poly& b);

// Text form: terms c*x^a*y^b joined by '+'.
std::string to_string(const Poly& p, std::span<const std::string> names);
std::string to_string(const Poly& p);
Poly parse_poly(std::string_view text, const Field& field, std::span<const std::string> names);
std::vector<std::string> default_names(int nvars);

}  // namespace flagval
