#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cytrans/cone.hpp"
#include "cytrans/exact.hpp"
#include "cytrans/polytope.hpp"

namespace cytrans {

using RayIndexSet = std::vector<std::size_t>;

/// Polyhedral fan given by a global ray list and maximal cones as sorted
/// ray-index sets. Cheap to copy; cone H-representations are computed once.
class Fan {
 public:
  Fan() = default;
  /// Rays are made primitive; duplicate or zero rays and out-of-range indices
  /// throw std::invalid_argument.
  Fan(std::size_t dim, std::vector<IntVector> rays, std::vector<RayIndexSet> max_cones);

  std::size_t dim() const;
  const std::vector<IntVector>& rays() const;
  const std::vector<RayIndexSet>& max_cones() const;
  const Cone& cone(std::size_t i) const;
  std::optional<std::size_t> ray_index(const IntVector& ray) const;

  /// Rays sorted lexicographically, cones remapped and sorted.
  Fan canonical() const;
  bool operator==(const Fan& other) const;

  struct Data;

 private:
  std::shared_ptr<const Data> data_;
};

bool is_complete(const Fan& f);
/// Empty when every pair of maximal cones meets in a common face and every
/// listed generator is extremal.
std::vector<std::string> fan_violations(const Fan& f);

Fan face_fan(const LatticePolytope& p);

struct FanIntersection {
  Fan fan;
  std::vector<IntVector> new_rays;  // rays of neither input, lexicographic
};
FanIntersection intersect_fans(const Fan& a, const Fan& b);

struct Straddle {
  std::size_t fine_cone;
  std::size_t coarse_a;
  std::size_t coarse_b;
};
struct RefinementCheck {
  bool refines = false;
  std::optional<Straddle> witness;
};
RefinementCheck refines(const Fan& fine, const Fan& coarse);

bool is_simplicial(const Fan& f);
bool is_smooth(const Fan& f);

/// Replaces every maximal cone containing `ray` by the joins of `ray` with
/// the facets of the cone not containing it. Works for new rays (stellar
/// subdivision) and for existing rays (pulling refinement).
Fan pull_at(const Fan& f, const IntVector& ray);

/// Stellar subdivision at a new ray. Throws if the ray is already present or
/// lies outside the support.
Fan star_subdivide(const Fan& f, const IntVector& ray);

/// MPCP subdivision of a reflexive polygon or 3-polytope refining `seed`:
/// common refinement with the face fan, then pulling at every boundary
/// lattice point in `order` (lexicographic when empty).
Fan mpcp_subdivide(const LatticePolytope& p, const Fan& seed,
                   const std::vector<IntVector>& order = {});

/// Values of a strictly convex support function (one per ray), if the
/// complete fan is projective.
std::optional<RatVector> strictly_convex_support(const Fan& f);

struct MpcpCheck {
  bool ok = false;
  std::vector<std::string> violations;
};
MpcpCheck verify_mpcp(const Fan& f, const LatticePolytope& p);

/// True iff conv(generators) has no lattice points besides its vertices.
bool is_elementary_simplex(const std::vector<IntVector>& generators);

/// Integral piecewise-linear function given by its values on the rays.
class PLFunction {
 public:
  /// Throws std::invalid_argument if the values are not linear on some
  /// non-simplicial maximal cone.
  PLFunction(Fan fan, std::vector<Integer> ray_values);

  const Fan& fan() const { return fan_; }
  const std::vector<Integer>& ray_values() const { return values_; }
  Rational operator()(const IntVector& n) const;
  /// Value at x of the linear function agreeing with phi on maximal cone i.
  Rational linear_on_cone(std::size_t i, const IntVector& x) const;

 private:
  Fan fan_;
  std::vector<Integer> values_;
};

PLFunction anticanonical_pl(const Fan& f);

/// {m : <m,u> >= -phi(u) for every ray u}. Throws std::domain_error when the
/// region is unbounded or has a non-lattice vertex.
LatticePolytope newton_polytope(const PLFunction& phi);

struct ConvexityCheck {
  bool convex = true;
  std::optional<std::pair<IntVector, IntVector>> witness;  // phi(a+b) > phi(a)+phi(b)
  Rational value_of_sum;
  Rational sum_of_values;
};
ConvexityCheck is_lower_convex(const PLFunction& phi);

/// Maximal cones C for which no m in dual_pts has <m,u> = -1 on all rays u of C.
std::vector<std::size_t> constant_term_cover(const Fan& f, const std::vector<IntVector>& dual_pts);

}  // namespace cytrans
