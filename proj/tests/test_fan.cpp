#include <algorithm>
#include <random>

#include "cytrans/cone.hpp"
#include "doctest.h"
#include "testkit.hpp"

using namespace cytrans;
using testkit::bundled_fan;
using testkit::bundled_polytope;

namespace {

const char* const kBundledFans[] = {"sigma_delta1", "sigma_delta2", "sigma_bl",    "mpcp_delta3",
                                    "fan_delta4",   "mpcp1_delta5", "mpcp2_delta5"};

}  // namespace

TEST_SUITE("fan") {

TEST_CASE("bundled fans are valid and complete") {
  for (const char* n : kBundledFans) {
    Fan f = bundled_fan(n);
    CHECK_MESSAGE(fan_violations(f).empty(), n);
    CHECK_MESSAGE(is_complete(f), n);
    CHECK_MESSAGE(is_simplicial(f), n);
  }
}

TEST_CASE("face fans of the simplex and delta2 are smooth") {
  CHECK(face_fan(bundled_polytope("delta1")) == bundled_fan("sigma_delta1"));
  CHECK(face_fan(bundled_polytope("delta2")) == bundled_fan("sigma_delta2"));
  CHECK(is_smooth(bundled_fan("sigma_delta1")));
  CHECK(is_smooth(bundled_fan("sigma_delta2")));
  CHECK_FALSE(is_smooth(face_fan(bundled_polytope("cutcube"))));
}

TEST_CASE("refinement is reflexive and transitive") {
  Fan s1 = bundled_fan("sigma_delta1");
  Fan once = star_subdivide(s1, make_ivec({1, 1, 1, 1}));
  Fan twice = star_subdivide(once, make_ivec({0, 0, 0, -1}));
  CHECK(refines(s1, s1).refines);
  CHECK(refines(once, s1).refines);
  CHECK(refines(twice, once).refines);
  CHECK(refines(twice, s1).refines);
  CHECK_FALSE(refines(s1, once).refines);
  CHECK(twice.canonical() == bundled_fan("sigma_bl").canonical());
}

TEST_CASE("star subdivision at an interior ray of a maximal cone") {
  Fan s1 = bundled_fan("sigma_delta1");
  Fan f = star_subdivide(s1, make_ivec({1, 1, 1, 1}));
  CHECK(f.rays().size() == 6);
  CHECK(f.max_cones().size() == 5 - 1 + 4);
  CHECK(is_smooth(f));
}

TEST_CASE("intersection fan refines both inputs") {
  FanIntersection inter = intersect_fans(bundled_fan("sigma_delta1"), bundled_fan("sigma_delta2"));
  CHECK(fan_violations(inter.fan).empty());
  CHECK(refines(inter.fan, bundled_fan("sigma_delta1")).refines);
  CHECK(refines(inter.fan, bundled_fan("sigma_delta2")).refines);
  REQUIRE(inter.new_rays.size() == 1);
  CHECK(inter.new_rays.front() == make_ivec({1, 1, 1, 0}));

  RefinementCheck r = refines(bundled_fan("sigma_delta2"), bundled_fan("sigma_delta1"));
  CHECK_FALSE(r.refines);
  CHECK(r.witness.has_value());
}

TEST_CASE("2D nested pairs refine and the MPCP fan is unique") {
  auto corpus = testkit::polygons_2d();
  auto pairs = testkit::nested_pairs(corpus);
  CHECK(pairs.size() >= 10);
  std::mt19937 rng(17);
  for (auto [i, j] : pairs) {
    std::string err = testkit::check_nested_mpcp(corpus[i].polytope, corpus[j].polytope, rng);
    CHECK_MESSAGE(err.empty(), corpus[i].name, " in ", corpus[j].name, ": ", err);
  }
  for (const auto& n : corpus) {
    Fan ref = mpcp_subdivide(n.polytope, face_fan(n.polytope));
    CHECK(verify_mpcp(ref, n.polytope).ok);
    CHECK(ref.rays().size() == boundary_lattice_points(n.polytope).size());
    for (int k = 0; k < 3; ++k) {
      Fan f = mpcp_subdivide(n.polytope, face_fan(n.polytope), testkit::shuffled_boundary(n.polytope, rng));
      CHECK(f.canonical() == ref.canonical());
    }
  }
}

TEST_CASE("3D nested pairs refine") {
  auto corpus = testkit::polytopes_3d();
  auto pairs = testkit::nested_pairs(corpus);
  CHECK(pairs.size() >= 5);
  std::mt19937 rng(23);
  for (auto [i, j] : pairs) {
    std::string err = testkit::check_nested_mpcp(corpus[i].polytope, corpus[j].polytope, rng);
    CHECK_MESSAGE(err.empty(), corpus[i].name, " in ", corpus[j].name, ": ", err);
  }
}

TEST_CASE("MPCP construction refuses dimension 4") {
  LatticePolytope d2 = bundled_polytope("delta2");
  CHECK_THROWS(mpcp_subdivide(d2, face_fan(d2)));
}

TEST_CASE("MPCP verification flags missing boundary points") {
  LatticePolytope p = testkit::polytopes_3d()[4].polytope;  // P3*, many boundary points
  MpcpCheck r = verify_mpcp(face_fan(p), p);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.violations.empty());
}

TEST_CASE("bundled delta3 and delta5 fans are MPCP") {
  CHECK(verify_mpcp(bundled_fan("mpcp_delta3"), bundled_polytope("delta3")).ok);
  CHECK(verify_mpcp(bundled_fan("mpcp1_delta5"), bundled_polytope("delta5")).ok);
  CHECK(verify_mpcp(bundled_fan("mpcp2_delta5"), bundled_polytope("delta5")).ok);
}

TEST_CASE("edge-cone lattice point property on reflexive 3-polytopes") {
  std::size_t with_pairs = 0;
  for (const auto& n : testkit::polytopes_3d()) {
    auto r = testkit::check_edge_cones(n.polytope);
    CHECK_MESSAGE(r.failures.empty(), n.name);
    if (r.qualifying > 0) ++with_pairs;
  }
  CHECK(with_pairs >= 3);
  auto neg = testkit::check_edge_cones(bundled_polytope("cutcube"));
  CHECK_FALSE(neg.failures.empty());
}

TEST_CASE("cone intersection in the cut cube") {
  Cone a({make_ivec({0, 1, 0}), make_ivec({0, 0, 1})}, 3);
  Cone b({make_ivec({1, 1, 1}), make_ivec({-1, 1, 0})}, 3);
  Cone m = intersect_cones(a, b);
  REQUIRE(m.dim() == 1);
  CHECK(m.rays().front() == make_ivec({0, 2, 1}));
  CHECK(a.contains_in_relative_interior(m.rays().front()));
  CHECK(b.contains_in_relative_interior(m.rays().front()));
}

TEST_CASE("anticanonical function of the blow-up is not convex") {
  ConvexityCheck c = is_lower_convex(anticanonical_pl(bundled_fan("sigma_bl")));
  CHECK_FALSE(c.convex);
  REQUIRE(c.witness.has_value());
  CHECK(c.value_of_sum > c.sum_of_values);
  CHECK(is_lower_convex(anticanonical_pl(bundled_fan("sigma_delta2"))).convex);
}

TEST_CASE("projective fans have strictly convex support functions") {
  for (const char* n : kBundledFans) {
    CHECK_MESSAGE(strictly_convex_support(bundled_fan(n)).has_value(), n);
  }
}

TEST_CASE("Newton polytope of the face fan function is the dual") {
  for (const char* n : {"delta1", "delta2"}) {
    LatticePolytope p = bundled_polytope(n);
    CHECK(newton_polytope(anticanonical_pl(face_fan(p))) == dual(p));
  }
}

TEST_CASE("constant-term cover of the simplex fan is complete") {
  LatticePolytope d1 = bundled_polytope("delta1");
  CHECK(constant_term_cover(face_fan(d1), dual(d1).vertices()).empty());
  Fan bl = bundled_fan("sigma_bl");
  CHECK(constant_term_cover(bl, dual(bundled_polytope("delta2")).vertices()).size() == 2);
}

}
