#pragma once

#include <cstdint>
#include <vector>

namespace flagval::lattice {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

// Row-style Hermite basis of a sublattice of Z^n, built incrementally.
// Arithmetic is checked; overflow throws Error(Overflow).
class HermiteBasis {
 public:
  explicit HermiteBasis(std::size_t dimension) : dim_(dimension) {}

  // Returns true if v enlarged the lattice.
  bool add(IntVector v);
  bool contains(IntVector v) const;
  // Canonical representative of v modulo the lattice.
  IntVector reduce(IntVector v) const;
  std::size_t pivot(std::size_t i) const { return pivots_[i]; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return dim_; }
  const IntMatrix& rows() const { return rows_; }

 private:
  std::size_t dim_;
  IntMatrix rows_;  // sorted by pivot column, pivots positive
  std::vector<std::size_t> pivots_;
};

struct SmithForm {
  std::vector<std::int64_t> diagonal;  // nonzero invariant factors d_0 | d_1 | ...
  IntMatrix column_transform;          // unimodular V with U A V = diag
  std::size_t rank() const { return diagonal.size(); }
};

SmithForm smith_form(const IntMatrix& a, std::size_t ncols);
// Diagonal of the Smith form only.
std::vector<std::int64_t> invariant_factors(const IntMatrix& a, std::size_t ncols);

// Echelon basis of {x in Z^n : A x = 0}, as rows.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t ncols);

// Z^n / (row lattice of relations).
class Quotient {
 public:
  Quotient(const IntMatrix& relations, std::size_t n);

  std::size_t free_rank() const { return kernel_.size(); }
  // Invariant factors > 1 of the torsion part.
  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  // Pairings with a basis of the integer kernel of the relations: equal
  // exactly on classes modulo the saturation.
  IntVector project(const IntVector& x) const;
  // Canonical representative of the class of x (equal iff same class).
  IntVector coordinates(const IntVector& x) const;
  bool is_zero(const IntVector& x) const;
  const HermiteBasis& relations() const { return relations_; }

 private:
  HermiteBasis relations_;
  IntMatrix kernel_;
  std::vector<std::int64_t> torsion_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace flagval::lattice
