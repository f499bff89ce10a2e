#include <random>

#include "doctest.h"
#include "testkit.hpp"

using namespace cytrans;

namespace {

Polynomial abc(const std::string& s) { return parse_polynomial(s, lower_abc_ring()); }

Polynomial random_linear(std::mt19937& rng) {
  std::uniform_int_distribution<long> c(-4, 4);
  while (true) {
    Polynomial p(lower_abc_ring());
    for (std::size_t i = 0; i < 3; ++i) p += Polynomial::variable(lower_abc_ring(), i) * Rational(c(rng));
    if (!p.is_zero()) return p;
  }
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("Milnor data is invariant under linear changes of variables") {
  std::mt19937 rng(41);
  for (const char* n : {"t_bl", "t2"}) {
    CubicForm t(testkit::bundled_cubic(n));
    MilnorRing m = milnor_ring(t);
    FactorType ft = factor_type(milnor_trilinear(t));
    for (int i = 0; i < 50; ++i) {
      CubicForm tl(testkit::substitute_linear(t.poly(), testkit::random_invertible(rng, 3)));
      MilnorRing ml = milnor_ring(tl);
      CHECK(ml.finite == m.finite);
      CHECK(ml.dims == m.dims);
      CHECK(factor_type(milnor_trilinear(tl)).degrees == ft.degrees);
    }
  }
}

TEST_CASE("T does not depend on the choice of top generator") {
  for (const char* n : {"t_bl", "t2", "t3", "t6"}) {
    CubicForm t(testkit::bundled_cubic(n));
    MilnorRing m = milnor_ring(t);
    REQUIRE(m.finite);
    CubicForm ref = milnor_trilinear(t);
    const Ring& ring = m.ring.ring();
    std::size_t used = 0;
    for (const auto& mono : monomials_of_degree(3, 3, MonomialOrder::DegRevLex)) {
      Polynomial q(ring, mono);
      if (m.ring.normal_form(q).is_zero()) continue;
      ++used;
      CHECK(proportional(milnor_trilinear(t, q).poly(), ref.poly()));
    }
    CHECK(used > 0);
  }
}

TEST_CASE("Fermat cubic") {
  CubicForm t(abc("a^3 + b^3 + c^3").in_ring(lower_abc_ring()));
  MilnorRing m = milnor_ring(t);
  CHECK(m.finite);
  CHECK(m.dims == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(proportional(milnor_trilinear(t).poly(), abc("a*b*c")));
  Ideal j = jacobian_ideal(t);
  CHECK(j.contains(abc("a^2")));
  CHECK_FALSE(j.contains(abc("a*b")));
  CHECK(factor_type(t).degrees == std::vector<unsigned>{3});
  CHECK(factor_type(t).method == "smooth");
}

TEST_CASE("singular cubics have infinite Milnor rings") {
  for (const char* s : {"a*b*c", "a^3", "a^2*b + b^2*c"}) {
    MilnorRing m = milnor_ring(CubicForm(abc(s)));
    CHECK_MESSAGE(!m.finite, s);
    CHECK_THROWS_AS(milnor_trilinear(CubicForm(abc(s))), std::domain_error);
  }
}

TEST_CASE("factor types of random products") {
  std::mt19937 rng(43);
  for (int i = 0; i < 20; ++i) {
    Polynomial l1 = random_linear(rng), l2 = random_linear(rng), l3 = random_linear(rng);
    FactorType f = factor_type(CubicForm(l1 * l2 * l3));
    CHECK(f.degrees == std::vector<unsigned>{1, 1, 1});
    REQUIRE(f.linear_factor.has_value());
    const bool divides_one = proportional(*f.linear_factor, l1) || proportional(*f.linear_factor, l2) ||
                             proportional(*f.linear_factor, l3);
    CHECK(divides_one);
  }
  Polynomial q = abc("a^2 + b^2 - 3*c^2");
  for (int i = 0; i < 10; ++i) {
    FactorType f = factor_type(CubicForm(random_linear(rng) * q));
    CHECK(f.degrees == std::vector<unsigned>{1, 2});
  }
  CHECK(factor_type(CubicForm(abc("a") * abc("b^2 - 2*c^2"))).degrees == std::vector<unsigned>{1, 2});
  CHECK(factor_type(CubicForm(abc("a") * abc("b^2 - c^2"))).degrees == std::vector<unsigned>{1, 1, 1});
}

TEST_CASE("irreducible singular cubic") {
  FactorType f = factor_type(CubicForm(abc("b^2*c - a^3 - a^2*c")));
  CHECK(f.degrees == std::vector<unsigned>{3});
  CHECK(f.method != "smooth");
}

TEST_CASE("bundled cubics") {
  const std::vector<std::size_t> dims{1, 3, 3, 1};
  CHECK(milnor_ring(CubicForm(testkit::bundled_cubic("t_bl"))).dims == dims);
  CHECK(milnor_ring(CubicForm(testkit::bundled_cubic("t2"))).dims == dims);
  CHECK_FALSE(milnor_ring(CubicForm(testkit::bundled_cubic("t4"))).finite);
  CHECK_FALSE(milnor_ring(CubicForm(testkit::bundled_cubic("t5"))).finite);
  CHECK(factor_type(milnor_trilinear(CubicForm(testkit::bundled_cubic("t_bl")))).degrees ==
        std::vector<unsigned>{1, 1, 1});
}

TEST_CASE("CubicForm rejects other polynomials") {
  CHECK_THROWS_AS(CubicForm(abc("a^2 + b^2")), std::invalid_argument);
  CHECK_THROWS_AS(CubicForm(abc("a^3 + b")), std::invalid_argument);
}

TEST_CASE("normalization and proportionality") {
  CHECK(normalize_cubic(abc("-6*a^3 + 9/2*b^3")) == abc("4*a^3 - 3*b^3"));
  CHECK(proportional(abc("a*b*c"), abc("-7/3*a*b*c")));
  CHECK_FALSE(proportional(abc("a*b*c"), abc("a*b*c + c^3")));
}

TEST_CASE("family comparison") {
  auto bl = family_report("X_bl", testkit::bundled_fan("sigma_bl"));
  auto d2 = family_report("X2", testkit::bundled_fan("sigma_delta2"));
  Verdict v = compare_families(bl, d2);
  CHECK(v.distinct);
  CHECK(v.reason.find("factor") != std::string::npos);
  CHECK_FALSE(compare_families(bl, bl).distinct);
  CHECK(to_kv(bl).find("family: X_bl") != std::string::npos);
}

}
