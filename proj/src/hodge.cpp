#include "cytrans/hodge.hpp"

#include <stdexcept>

namespace cytrans {

long HodgeTerms::value() const {
  return static_cast<long>(points) - 5 - static_cast<long>(facet_interior) + static_cast<long>(codim2_products);
}

namespace {

HodgeTerms terms(const LatticePolytope& p) {
  HodgeTerms t;
  t.points = p.points().size();
  for (const auto& f : faces(p, 3)) t.facet_interior += interior_lattice_point_count(f);
  for (const auto& f : faces(p, 2)) {
    std::size_t inner = interior_lattice_point_count(f);
    if (inner == 0) continue;
    t.codim2_products += inner * interior_lattice_point_count(dual_face(f));
  }
  return t;
}

}  // namespace

HodgePair hodge_numbers(const LatticePolytope& p) {
  if (p.dim() != 4) throw std::invalid_argument("Hodge numbers need a 4-dimensional polytope");
  auto refl = is_reflexive(p);
  if (!refl.reflexive) throw std::invalid_argument("Hodge numbers need a reflexive polytope");
  HodgePair h;
  h.from_polytope = terms(p);
  h.from_dual = terms(dual(p));
  h.h11 = h.from_polytope.value();
  h.h21 = h.from_dual.value();
  return h;
}

std::string describe(const HodgePair& h) {
  auto line = [](const char* name, const HodgeTerms& t) {
    return std::string(name) + " = " + std::to_string(t.points) + " - 5 - " + std::to_string(t.facet_interior) +
           " + " + std::to_string(t.codim2_products) + " = " + std::to_string(t.value());
  };
  return line("h11", h.from_polytope) + "\n" + line("h21", h.from_dual) + "\n";
}

}  // namespace cytrans
