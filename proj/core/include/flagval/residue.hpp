#pragma once

#include <cstdint>
#include <string>

#include "flagval/poly.hpp"

namespace flagval {

// Element of F_q[t]/(m) for a monic irreducible m, i.e. of F_{q^d}, d = deg m.
class ResidueClass {
 public:
  ResidueClass(Poly modulus, Poly value);
  static ResidueClass constant(const Poly& modulus, Elem c);

  const Poly& modulus() const { return modulus_; }
  const Poly& value() const { return value_; }
  const Field& field() const { return modulus_.field(); }
  int degree() const { return modulus_.degree(); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const { return value_.is_one(); }

  ResidueClass inverse() const;
  ResidueClass pow(std::int64_t n) const;
  friend ResidueClass operator*(const ResidueClass& a, const ResidueClass& b);
  friend ResidueClass operator/(const ResidueClass& a, const ResidueClass& b) { return a * b.inverse(); }
  friend bool operator==(const ResidueClass& a, const ResidueClass& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

  // Norm to F_q as the product of the Frobenius conjugates.
  Elem norm() const;
  // Multiplicative order in F_{q^d}^x.
  std::uint64_t order() const;
  // Whether this element is an n-th power in F_{q^D}, where d divides D.
  bool is_nth_power_in(std::uint64_t n, int extension_degree) const;

  std::string to_string() const;

 private:
  Poly modulus_;
  Poly value_;
};

std::uint64_t ipow(std::uint64_t base, int exp);
// Prime divisors of n by trial division.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace flagval
