#pragma once

#include <cstddef>
#include <vector>

#include "cytrans/exact.hpp"

namespace cytrans {

/// Extreme rays and lineality space of {y : ineq_i . y >= 0, eq_j . y = 0}.
struct ConeDescription {
  std::vector<IntVector> rays;       // primitive, irredundant
  std::vector<IntVector> lineality;  // integer basis
};

/// Double description method. `dim` is the ambient dimension (needed when
/// both row lists are empty).
ConeDescription cone_from_inequalities(const std::vector<IntVector>& ineq,
                                       const std::vector<IntVector>& eq, std::size_t dim);

/// Strongly convex rational polyhedral cone with both representations.
class Cone {
 public:
  Cone() = default;
  /// Throws std::invalid_argument if the generators span a line.
  Cone(const std::vector<IntVector>& generators, std::size_t ambient_dim);
  static Cone from_inequalities(const std::vector<IntVector>& ineq,
                                const std::vector<IntVector>& eq, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  /// n . x >= 0 for every normal (irredundant modulo the equations).
  const std::vector<IntVector>& facet_normals() const { return normals_; }
  /// n . x = 0 on the linear span.
  const std::vector<IntVector>& equations() const { return equations_; }

  bool contains(const IntVector& x) const;
  bool contains_in_relative_interior(const IntVector& x) const;
  bool contains(const Cone& other) const;
  /// True iff `other` (a subcone) is a face of this cone.
  bool has_face(const Cone& other) const;
  /// Ray index sets (into rays()) of the facets.
  std::vector<std::vector<std::size_t>> facets() const;

  bool operator==(const Cone& other) const;

 private:
  void finish_from_hrep(std::vector<IntVector> ineq, std::vector<IntVector> eq);

  std::size_t ambient_dim_ = 0;
  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IntVector> normals_;
  std::vector<IntVector> equations_;
};

Cone intersect_cones(const Cone& a, const Cone& b);

}  // namespace cytrans
