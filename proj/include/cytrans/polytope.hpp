#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cytrans/exact.hpp"

namespace cytrans {

/// <normal, x> >= -offset
struct Facet {
  IntVector normal;  // primitive, inward
  Integer offset;
};

/// Full-dimensional lattice polytope holding both representations. Cheap to
/// copy; the data is shared and immutable.
class LatticePolytope {
 public:
  LatticePolytope() = default;

  std::size_t dim() const;
  const std::vector<IntVector>& vertices() const;
  const std::vector<Facet>& facets() const;

  bool contains(const IntVector& x) const;
  /// Indices of the facets on which x is tight.
  std::vector<std::size_t> tight_facets(const IntVector& x) const;
  bool origin_is_interior() const;
  /// Lattice points, lexicographically sorted; enumerated once and cached.
  const std::vector<IntVector>& points() const;

  bool operator==(const LatticePolytope& other) const;  // same vertex set

  struct Data;

 private:
  friend LatticePolytope hull_to_facets(const std::vector<IntVector>& points);
  std::shared_ptr<const Data> data_;
};

/// Convex hull by double description. Keeps the input order of the points that
/// are vertices. Throws std::invalid_argument ("polytope not full-dimensional
/// (affine rank r)") for degenerate input.
LatticePolytope hull_to_facets(const std::vector<IntVector>& points);

/// Vertices of the dual {m : <m,n> >= -1 for n in p}, one per facet of p in
/// facet order. Throws if the origin is not interior.
std::vector<RatVector> dual_vertices(const LatticePolytope& p);

/// The dual as a lattice polytope; throws std::domain_error when it has a
/// non-integral vertex (p not reflexive).
LatticePolytope dual(const LatticePolytope& p);

struct ReflexivityCheck {
  bool reflexive = false;
  std::optional<Facet> violating;  // set when not reflexive
};
ReflexivityCheck is_reflexive(const LatticePolytope& p);

/// Lattice points, lexicographically sorted.
std::vector<IntVector> lattice_points(const LatticePolytope& p);
std::vector<IntVector> boundary_lattice_points(const LatticePolytope& p);

struct Face {
  LatticePolytope parent;
  std::size_t dim = 0;
  std::vector<std::size_t> vertex_indices;  // sorted
  std::vector<std::size_t> facet_indices;   // supporting facets, sorted
};

/// All faces of dimension d, 0 <= d < dim(p), ordered by vertex index set.
std::vector<Face> faces(const LatticePolytope& p, std::size_t d);

/// Face of dual(p) on which every point of f evaluates to -1. Requires p
/// reflexive (so the dual vertices correspond to the facets of p).
Face dual_face(const Face& f);

/// Number of lattice points in the relative interior of f.
std::size_t interior_lattice_point_count(const Face& f);

/// Relative-interior points of the whole polytope.
std::size_t interior_lattice_point_count(const LatticePolytope& p);

/// The whole polytope as a face (dim = dim(p), no supporting facets).
Face whole(const LatticePolytope& p);

}  // namespace cytrans
