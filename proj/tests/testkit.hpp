#pragma once

// Shared fixtures for the unit tests and the acceptance runner: small
// reflexive polytope corpora, brute-force oracles and randomized helpers.

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cytrans/exact.hpp"
#include "cytrans/fan.hpp"
#include "cytrans/invariants.hpp"
#include "cytrans/polytope.hpp"

namespace testkit {

using namespace cytrans;

std::string data_path(const std::string& rel);
LatticePolytope bundled_polytope(const std::string& name);  // "delta2" -> data/polytopes/delta2.poly
Fan bundled_fan(const std::string& name);                   // "sigma_bl" -> data/fans/sigma_bl.fan
Polynomial bundled_cubic(const std::string& name);          // "t2" -> data/cubics/t2.cubic

struct Named {
  std::string name;
  LatticePolytope polytope;
};

/// Reflexive polygons in one common lattice embedding.
std::vector<Named> polygons_2d();
/// Reflexive 3-polytopes in one common lattice embedding.
std::vector<Named> polytopes_3d();

/// Index pairs (i, j) with corpus[i] strictly inside corpus[j].
std::vector<std::pair<std::size_t, std::size_t>> nested_pairs(const std::vector<Named>& corpus);

/// Pulling order: the boundary lattice points of p in a random order.
std::vector<IntVector> shuffled_boundary(const LatticePolytope& p, std::mt19937& rng);

/// Nested-pair refinement check in dimension 2 or 3: a (random) MPCP
/// subdivision of the inner polytope, then the MPCP subdivision of the outer
/// one seeded by the intersection fan. Empty string on success.
std::string check_nested_mpcp(const LatticePolytope& inner, const LatticePolytope& outer, std::mt19937& rng);

struct EdgeConeOutcome {
  std::size_t qualifying = 0;                                // pairs meeting the hypotheses
  std::vector<std::string> failures;                         // generator outside the polytope
};
/// Every edge cone against every 2-cone spanned by two lattice points.
EdgeConeOutcome check_edge_cones(const LatticePolytope& p);

/// Facets by testing every d-subset of points for a supporting hyperplane.
std::vector<std::pair<IntVector, Integer>> brute_force_facets(const std::vector<IntVector>& points);

/// Lattice points by scanning the bounding box against the facet list.
std::vector<IntVector> brute_force_points(const std::vector<IntVector>& vertices);

/// Cofactor expansion.
Integer cofactor_determinant(const IntMatrix& m);

/// Random invertible integer 3x3 matrix with entries in [-k, k].
std::vector<std::vector<long>> random_invertible(std::mt19937& rng, long k);

/// t(L(A,B,C)) where row i of L gives the image of variable i.
Polynomial substitute_linear(const Polynomial& t, const std::vector<std::vector<long>>& l);

}  // namespace testkit
