#include "flagval/residue.hpp"

#include <numeric>

#include "flagval/error.hpp"

namespace flagval {

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (std::uint64_t{1} << 62) / base) throw Error(ErrorCode::Overflow, "residue field too large");
    r *= base;
  }
  return r;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

ResidueClass::ResidueClass(Poly modulus, Poly value)
    : modulus_(std::move(modulus)), value_(poly_mod(value, modulus_)) {
  if (modulus_.nvars() != 1 || modulus_.degree() < 1 || modulus_.leading_coefficient() != 1)
    throw Error(ErrorCode::BadInput, "residue modulus must be monic univariate of positive degree");
}

ResidueClass ResidueClass::constant(const Poly& modulus, Elem c) {
  return ResidueClass(modulus, Poly::constant(modulus.field(), 1, c));
}

ResidueClass operator*(const ResidueClass& a, const ResidueClass& b) {
  if (!(a.modulus_ == b.modulus_)) throw Error(ErrorCode::FieldMismatch, "residues modulo different polynomials");
  return ResidueClass(a.modulus_, a.value_ * b.value_);
}

ResidueClass ResidueClass::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroElement, "inverse of zero residue");
  // Extended Euclid on (value, modulus).
  const Field& f = field();
  Poly r0 = modulus_, r1 = value_;
  Poly s0(f, 1), s1 = Poly::constant(f, 1, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  return ResidueClass(modulus_, s0.scaled(f.inv(r0.leading_coefficient())));
}

ResidueClass ResidueClass::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  ResidueClass result = constant(modulus_, 1);
  ResidueClass base = *this;
  auto e = static_cast<std::uint64_t>(n);
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Elem ResidueClass::norm() const {
  const std::uint64_t q = field().order();
  ResidueClass acc = constant(modulus_, 1);
  ResidueClass conj = *this;
  for (int i = 0; i < degree(); ++i) {
    acc = acc * conj;
    conj = conj.pow(static_cast<std::int64_t>(q));
  }
  if (acc.value_.degree() > 0) throw Error(ErrorCode::BadInput, "norm did not land in the ground field");
  return acc.value_.constant_term();
}

std::uint64_t ResidueClass::order() const {
  if (is_zero()) throw Error(ErrorCode::ZeroElement, "order of zero");
  const std::uint64_t group = ipow(field().order(), degree()) - 1;
  std::uint64_t ord = group;
  for (std::uint64_t r : prime_divisors(group))
    while (ord % r == 0 && pow(static_cast<std::int64_t>(ord / r)).is_one()) ord /= r;
  return ord;
}

bool ResidueClass::is_nth_power_in(std::uint64_t n, int extension_degree) const {
  if (extension_degree % degree() != 0)
    throw Error(ErrorCode::BadInput, "extension degree must be a multiple of the residue degree");
  if (is_zero()) return true;
  const std::uint64_t big = ipow(field().order(), extension_degree) - 1;
  const std::uint64_t g = std::gcd(n, big);
  return (big / g) % order() == 0;
}

std::string ResidueClass::to_string() const {
  std::vector<std::string> names{"t"};
  return flagval::to_string(value_, names);
}

}  // namespace flagval
