#include <random>

#include "doctest.h"
#include "testkit.hpp"

using namespace cytrans;

TEST_SUITE("exact") {

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = entry(rng);
    }
    CHECK(determinant(m) == testkit::cofactor_determinant(m));
  }
}

TEST_CASE("determinant of small examples") {
  CHECK(determinant(IntMatrix::from_rows({make_ivec({2, 1}), make_ivec({1, 1})})) == 1);
  CHECK(determinant(IntMatrix::from_rows({make_ivec({1, 2}), make_ivec({2, 4})})) == 0);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("rational field axioms") {
  std::mt19937 rng(2);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  auto random_q = [&] {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  for (int trial = 0; trial < 200; ++trial) {
    Rational a = random_q(), b = random_q(), c = random_q();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (a != 0) CHECK(a * (Rational(1) / a) == 1);
  }
}

TEST_CASE("primitive is invariant under positive scaling") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> entry(-12, 12), k(1, 7);
  for (int trial = 0; trial < 100; ++trial) {
    IntVector v = make_ivec({entry(rng), entry(rng), entry(rng), entry(rng)});
    if (is_zero(v)) continue;
    IntVector p = primitive(v);
    CHECK(gcd_of(p) == 1);
    CHECK(primitive(scale(v, k(rng))) == p);
  }
  CHECK(primitive(make_ivec({4, -6, 0})) == make_ivec({2, -3, 0}));
  RatVector r{Rational(1, 2), Rational(-1, 3)};
  CHECK(primitive(r) == make_ivec({3, -2}));
}

TEST_CASE("nullspace is orthogonal to the rows") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<IntVector> rows;
    for (int r = 0; r < 3; ++r) rows.push_back(make_ivec({entry(rng), entry(rng), entry(rng), entry(rng), entry(rng)}));
    auto ns = integer_nullspace(rows, 5);
    CHECK(rank(rows) + ns.size() == 5);
    for (const auto& n : ns) {
      for (const auto& r : rows) CHECK(dot(n, r) == 0);
    }
  }
}

TEST_CASE("Fourier-Motzkin witnesses satisfy every row") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> entry(-3, 3), rel(0, 2);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    LinearSystem s(2);
    for (int r = 0; r < 4; ++r) {
      Relation kind = rel(rng) == 0 ? Relation::Greater : Relation::GreaterEqual;
      s.add({Rational(entry(rng)), Rational(entry(rng))}, Rational(entry(rng)), kind);
    }
    Feasibility f = fourier_motzkin(s);
    Feasibility g = simplex_feasibility(s);
    CHECK(f.feasible == g.feasible);
    if (g.feasible) CHECK(s.satisfied_by(g.witness));
    if (f.feasible) {
      ++feasible;
      CHECK(s.satisfied_by(f.witness));
      continue;
    }
    ++infeasible;
    // No grid point with small denominators may satisfy an infeasible system.
    for (long d = 1; d <= 4; ++d) {
      for (long x = -12; x <= 12; ++x) {
        for (long y = -12; y <= 12; ++y) {
          Rational qx(x, d), qy(y, d);
          qx.canonicalize();
          qy.canonicalize();
          CHECK_FALSE(s.satisfied_by({qx, qy}));
        }
      }
    }
  }
  CHECK(feasible > 0);
  CHECK(infeasible > 0);
}

TEST_CASE("both backends agree on larger random systems") {
  std::mt19937 rng(6);
  std::uniform_int_distribution<long> entry(-2, 2), rel(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    LinearSystem s(6);
    for (int r = 0; r < 9; ++r) {
      RatVector row;
      for (int j = 0; j < 6; ++j) row.push_back(Rational(entry(rng)));
      const long k = rel(rng);
      s.add(std::move(row), Rational(entry(rng)),
            k == 0 ? Relation::Greater : (k == 1 ? Relation::Equal : Relation::GreaterEqual));
    }
    Feasibility f = fourier_motzkin(s), g = simplex_feasibility(s);
    CHECK(f.feasible == g.feasible);
    if (f.feasible) CHECK(s.satisfied_by(f.witness));
    if (g.feasible) CHECK(s.satisfied_by(g.witness));
  }
}

TEST_CASE("empty and trivial systems") {
  Feasibility e = solve_feasibility(LinearSystem(3));
  CHECK(e.feasible);
  CHECK(e.witness == RatVector(3, Rational(0)));
  LinearSystem a(1);
  a.add({Rational(1)}, Rational(1), Relation::GreaterEqual);
  a.add({Rational(-1)}, Rational(0), Relation::GreaterEqual);
  CHECK_FALSE(fourier_motzkin(a).feasible);
  CHECK_FALSE(simplex_feasibility(a).feasible);
  LinearSystem b(1);
  b.add({Rational(1)}, Rational(0), Relation::GreaterEqual);
  CHECK(fourier_motzkin(b).witness == RatVector{Rational(0)});
}

TEST_CASE("strict and equality rows") {
  LinearSystem s(1);
  s.add({Rational(1)}, Rational(0), Relation::Greater);
  s.add({Rational(-1)}, Rational(0), Relation::Greater);
  CHECK_FALSE(solve_feasibility(s).feasible);

  LinearSystem t(2);
  t.add({Rational(1), Rational(1)}, Rational(1), Relation::Equal);
  t.add({Rational(1), Rational(-1)}, Rational(0), Relation::Greater);
  Feasibility f = solve_feasibility(t);
  REQUIRE(f.feasible);
  CHECK(f.witness[0] + f.witness[1] == 1);
  CHECK(f.witness[0] > f.witness[1]);

  CHECK_THROWS_AS(t.add({Rational(1)}, Rational(0), Relation::Equal), std::invalid_argument);
}

TEST_CASE("projective plane has a strictly convex support function") {
  LatticePolytope p2 = testkit::polygons_2d().front().polytope;
  auto h = strictly_convex_support(face_fan(p2));
  REQUIRE(h.has_value());
  CHECK(h->size() == 3);
}

}
