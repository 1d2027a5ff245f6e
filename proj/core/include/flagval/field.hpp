#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flagval {

// Field elements are encoded as integers 0..q-1: the base-p digits of the
// code are the coefficients of a polynomial in the generator of F_q/F_p.
using Elem = std::uint32_t;

class Field {
 public:
  static constexpr std::uint32_t kDefaultMaxOrder = 49;

  // Interned: equal (p, e) always return the same object.
  static const Field& get(std::uint32_t p, std::uint32_t e = 1,
                          std::uint32_t max_order = kDefaultMaxOrder);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  std::uint32_t order() const { return q_; }
  // Defining polynomial over F_p, coefficients low to high, monic.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t n) const;
  // Image of an integer in the prime subfield.
  Elem from_int(std::int64_t n) const;

  Elem primitive_element() const { return exp_.size() > 1 ? exp_[1] : 1; }
  std::uint64_t multiplicative_order(Elem a) const;
  // Frobenius a -> a^p.
  Elem frobenius(Elem a) const { return pow(a, p_); }

  std::string format(Elem a) const { return std::to_string(a); }

 private:
  Field(std::uint32_t p, std::uint32_t e);
  Elem slow_mul(Elem a, Elem b) const;

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;            // exp_[i] = g^i, size q-1
  std::vector<std::uint32_t> log_;   // log_[a] for a != 0
  std::vector<Elem> add_table_;      // q*q when q <= 256 and e > 1
};

bool is_prime(std::uint64_t n);

}  // namespace flagval
