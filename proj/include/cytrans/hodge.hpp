#pragma once

#include <cstddef>
#include <string>

#include "cytrans/polytope.hpp"

namespace cytrans {

/// Terms of l(P) - 5 - sum_facets l*(F) + sum_codim2 l*(F) l*(F^dual).
struct HodgeTerms {
  std::size_t points = 0;
  std::size_t facet_interior = 0;
  std::size_t codim2_products = 0;

  long value() const;
};

struct HodgePair {
  long h11 = 0;
  long h21 = 0;
  HodgeTerms from_polytope;  // gives h11
  HodgeTerms from_dual;      // gives h21
};

/// Hodge numbers of the anticanonical hypersurface family for a reflexive
/// 4-polytope on the fan side. Throws std::invalid_argument otherwise.
HodgePair hodge_numbers(const LatticePolytope& p);

std::string describe(const HodgePair& h);

}  // namespace cytrans
