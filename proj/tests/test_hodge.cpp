#include "cytrans/cohomology.hpp"
#include "cytrans/hodge.hpp"
#include "doctest.h"
#include "testkit.hpp"

using namespace cytrans;
using testkit::bundled_polytope;

TEST_SUITE("hodge") {

TEST_CASE("quintic") {
  HodgePair h = hodge_numbers(bundled_polytope("delta1"));
  CHECK(h.h11 == 1);
  CHECK(h.h21 == 101);
  CHECK(h.from_dual.value() == 101);
  CHECK(h.from_polytope.value() == 1);
}

TEST_CASE("mirror symmetry swaps the Hodge numbers") {
  for (const char* n : {"delta1", "delta2", "delta3", "delta4", "delta5"}) {
    LatticePolytope p = bundled_polytope(n);
    HodgePair h = hodge_numbers(p), m = hodge_numbers(dual(p));
    CHECK_MESSAGE(m.h11 == h.h21, n);
    CHECK_MESSAGE(m.h21 == h.h11, n);
  }
}

TEST_CASE("h11 matches b2 of the hypersurface in a smooth ambient space") {
  const std::pair<const char*, const char*> cases[] = {{"delta1", "sigma_delta1"}, {"delta2", "sigma_delta2"}};
  for (auto [poly, fan] : cases) {
    GradedQuotientRing r = cohomology_ring(testkit::bundled_fan(fan));
    auto b = cy_betti(r, cup_kernel(r, hypersurface_class(r)));
    CHECK(static_cast<long>(b[1]) == hodge_numbers(bundled_polytope(poly)).h11);
  }
}

TEST_CASE("Hodge numbers of the nested family") {
  for (const char* n : {"delta2", "delta3", "delta4", "delta5"}) {
    HodgePair h = hodge_numbers(bundled_polytope(n));
    CHECK_MESSAGE(h.h11 == 3, n);
    CHECK_MESSAGE(h.h21 == 79, n);
  }
  CHECK(describe(hodge_numbers(bundled_polytope("delta2"))).find("h21 = 96 - 5 - 12 + 0 = 79") != std::string::npos);
}

TEST_CASE("non-reflexive input is rejected") {
  CHECK_THROWS(hodge_numbers(bundled_polytope("cutcube")));
}

}
