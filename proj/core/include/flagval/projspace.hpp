#pragma once

#include <bitset>
#include <compare>
#include <cstddef>
#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <vector>

#include "flagval/field.hpp"
#include "flagval/linalg.hpp"

namespace flagval {

// Point of P^n(F_q); the first nonzero coordinate is 1.
class ProjPoint {
 public:
  static ProjPoint normalized(std::vector<Elem> coords, const Field& field);

  const Field& field() const { return *field_; }
  const std::vector<Elem>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
  friend auto operator<=>(const ProjPoint& a, const ProjPoint& b) { return a.coords_ <=> b.coords_; }

  std::string to_string() const;

 private:
  ProjPoint(std::vector<Elem> coords, const Field& field) : field_(&field), coords_(std::move(coords)) {}
  const Field* field_;
  std::vector<Elem> coords_;
};

// Linear subspace of F_q^{n+1}, stored by its reduced row echelon basis.
class ProjSubspace {
 public:
  static ProjSubspace span(std::span<const ProjPoint> points);
  static ProjSubspace span(const Field& field, std::size_t ambient, FqMatrix vectors);

  const Field& field() const { return *field_; }
  int dimension() const { return static_cast<int>(basis_.size()) - 1; }
  std::size_t ambient_size() const { return ambient_; }
  const FqMatrix& basis() const { return basis_; }

  bool contains(const ProjPoint& p) const;
  bool contains(const ProjSubspace& s) const;
  // Points in canonical order.
  std::vector<ProjPoint> points() const;
  std::size_t point_count() const;

  friend bool operator==(const ProjSubspace& a, const ProjSubspace& b) { return a.basis_ == b.basis_; }

  // Sorted list of coordinate strings.
  nlohmann::ordered_json to_json() const;
  std::string to_string() const;

 private:
  ProjSubspace(const Field& field, std::size_t ambient, FqMatrix basis)
      : field_(&field), ambient_(ambient), basis_(std::move(basis)) {}
  const Field* field_;
  std::size_t ambient_;
  FqMatrix basis_;
};

inline constexpr std::size_t kDefaultPointLimit = 1'000'000;

std::vector<ProjPoint> enumerate_points(int n, const Field& field, std::size_t limit = kDefaultPointLimit);
ProjSubspace line_through(const ProjPoint& a, const ProjPoint& b);

inline constexpr std::size_t kMaxIndexedPoints = 256;
using PointSet = std::bitset<kMaxIndexedPoints>;

// Indexed incidence structure of P^n(F_q) for small spaces.
class ProjectiveSpace {
 public:
  ProjectiveSpace(int n, const Field& field);

  int dimension() const { return n_; }
  const Field& field() const { return *field_; }
  std::size_t size() const { return points_.size(); }
  const ProjPoint& point(std::size_t i) const { return points_[i]; }
  const std::vector<ProjPoint>& points() const { return points_; }
  std::size_t index_of(const ProjPoint& p) const;
  std::size_t index_of_vector(std::span<const Elem> v) const;

  // Lines as sorted point-index lists and as sets.
  const std::vector<std::vector<std::size_t>>& lines() const { return lines_; }
  const std::vector<PointSet>& line_sets() const { return subspaces_[1]; }
  std::size_t line_index(std::size_t a, std::size_t b) const;
  // Subspaces of dimension d (0 <= d <= n) as point sets; d = n is the whole space.
  const std::vector<PointSet>& subspaces(int d) const { return subspaces_[static_cast<std::size_t>(d)]; }
  // Dimension of the subspace with this exact point set, or -1.
  int subspace_dimension(const PointSet& s) const;
  PointSet all() const { return all_; }
  ProjSubspace to_subspace(const PointSet& s) const;
  ProjSubspace line(std::size_t index) const;

 private:
  int n_;
  const Field* field_;
  std::vector<ProjPoint> points_;
  std::vector<std::size_t> index_by_code_;
  std::vector<std::vector<std::size_t>> lines_;
  std::vector<std::size_t> line_of_pair_;
  std::vector<std::vector<PointSet>> subspaces_;
  PointSet all_;
};

// Shared, lazily built geometry for P^n(F_q).
const ProjectiveSpace& projective_space(int n, const Field& field);

}  // namespace flagval
