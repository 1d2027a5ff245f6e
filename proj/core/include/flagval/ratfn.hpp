#pragma once

#include <string>

#include "flagval/poly.hpp"

namespace flagval {

// Element of k(t) or k(x,y). The denominator is monic; in one variable the
// fraction is also reduced.
class RatFn {
 public:
  RatFn(Poly num, Poly den);
  explicit RatFn(Poly num);

  static RatFn constant(const Field& field, int nvars, Elem c);
  static RatFn variable(const Field& field, int nvars, int index);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const Field& field() const { return num_.field(); }
  int nvars() const { return num_.nvars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const;
  bool is_one() const;

  RatFn inverse() const;
  RatFn pow(int n) const;

  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b);
  RatFn operator-() const;
  friend bool operator==(const RatFn& a, const RatFn& b);

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

// Substitute (u, v) for the two variables of a bivariate polynomial, or u for
// the variable of a univariate one.
RatFn substitute(const Poly& p, const RatFn& u, const RatFn& v);
RatFn substitute(const Poly& p, const RatFn& u);

std::string to_string(const RatFn& f);
std::string to_string(const RatFn& f, std::span<const std::string> names);

}  // namespace flagval
