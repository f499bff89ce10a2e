#include <algorithm>
#include <numeric>
#include <random>

#include "cytrans/cohomology.hpp"
#include "doctest.h"
#include "testkit.hpp"

using namespace cytrans;
using testkit::bundled_fan;

namespace {

const char* const kFans[] = {"sigma_delta1", "sigma_delta2", "sigma_bl",    "mpcp_delta3",
                             "fan_delta4",   "mpcp1_delta5", "mpcp2_delta5"};

Polynomial random_poly(const Ring& ring, std::mt19937& rng, unsigned max_deg) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, static_cast<int>(max_deg));
  std::uniform_int_distribution<std::size_t> var(0, ring->nvars() - 1);
  Polynomial p(ring);
  for (int t = 0; t < 5; ++t) {
    Monomial m(ring->nvars(), 0);
    for (int e = deg(rng); e > 0; --e) ++m[var(rng)];
    p.add_term(m, Rational(coef(rng)));
  }
  return p;
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST_SUITE("cohomology") {

TEST_CASE("reduced Groebner basis does not depend on generator order") {
  std::mt19937 rng(31);
  for (const char* n : {"sigma_delta2", "sigma_bl"}) {
    Fan f = bundled_fan(n);
    Ring ring = ray_ring(f);
    std::vector<Polynomial> gens = stanley_reisner_ideal(f, ring).generators();
    Ideal j = linear_ideal(f, ring);
    gens.insert(gens.end(), j.generators().begin(), j.generators().end());
    auto ref = strings(buchberger(gens));
    for (int k = 0; k < 5; ++k) {
      std::shuffle(gens.begin(), gens.end(), rng);
      CHECK(strings(buchberger(gens)) == ref);
    }
    auto basis = buchberger(gens);
    for (const auto& g : gens) CHECK(normal_form(g, basis).is_zero());
    for (const auto& b : basis) CHECK(b.leading_coefficient() == 1);
  }
}

TEST_CASE("normal form is idempotent and multiplicative") {
  std::mt19937 rng(37);
  for (const char* n : {"sigma_delta2", "sigma_bl", "mpcp_delta3"}) {
    GradedQuotientRing r = cohomology_ring(bundled_fan(n));
    for (int k = 0; k < 25; ++k) {
      Polynomial f = random_poly(r.ring(), rng, 3), g = random_poly(r.ring(), rng, 3);
      Polynomial nf = r.normal_form(f);
      CHECK(r.normal_form(nf) == nf);
      CHECK(r.normal_form(f * g) == r.normal_form(nf * r.normal_form(g)));
      CHECK(r.multiply(f, g) == r.normal_form(f * g));
    }
  }
}

TEST_CASE("Betti numbers are palindromic and count maximal cones") {
  for (const char* n : kFans) {
    Fan f = bundled_fan(n);
    auto b = betti(f);
    CHECK_MESSAGE(std::equal(b.begin(), b.end(), b.rbegin()), n);
    CHECK_MESSAGE(std::accumulate(b.begin(), b.end(), std::size_t{0}) == f.max_cones().size(), n);
    CHECK(b.front() == 1);
  }
  CHECK(betti(bundled_fan("sigma_delta1")) == std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(betti(bundled_fan("sigma_bl")) == std::vector<std::size_t>{1, 3, 3, 3, 1});
}

TEST_CASE("kernel elements are annihilated and ranks add up") {
  for (const char* n : kFans) {
    GradedQuotientRing r = cohomology_ring(bundled_fan(n));
    Polynomial y = hypersurface_class(r);
    CupKernel k = cup_kernel(r, y);
    for (std::size_t d = 0; d < k.by_degree.size(); ++d) {
      CHECK(k.ranks[d] + k.dim(d) == k.source_dims[d]);
      for (const auto& p : k.by_degree[d]) {
        CHECK(r.normal_form(p) == p);
        CHECK(r.multiply(p, y).is_zero());
      }
    }
    auto cb = cy_betti(r, k);
    CHECK(cb[0] == 1);
    CHECK(cb[3] == 1);
    CHECK(cb[1] == cb[2]);
  }
}

TEST_CASE("projective space has no kernel") {
  GradedQuotientRing r = cohomology_ring(bundled_fan("sigma_delta1"));
  CupKernel k = cup_kernel(r, hypersurface_class(r));
  for (std::size_t d = 0; d < 4; ++d) CHECK(k.dim(d) == 0);
  auto cb = cy_betti(r, k);
  CHECK(cb == std::array<std::size_t, 4>{1, 1, 1, 1});
}

TEST_CASE("degree-6 kernel of delta2 is the ideal generated by a quadric") {
  GradedQuotientRing r = cohomology_ring(bundled_fan("sigma_delta2"));
  CupKernel k = cup_kernel(r, hypersurface_class(r));
  REQUIRE(k.dim(3) == 2);
  Polynomial g = parse_polynomial("3*x5^2 + 2*x6^2 + 8*x6*x7 + 5*x7^2", r.ring());
  std::vector<RatVector> from_g, both;
  const std::size_t cols = r.basis(3).size();
  for (std::size_t i = 0; i < r.ring()->nvars(); ++i) {
    from_g.push_back(r.coordinates(Polynomial::variable(r.ring(), i) * g, 3));
  }
  both = from_g;
  for (const auto& p : k.by_degree[3]) both.push_back(r.coordinates(p, 3));
  CHECK(rank(from_g, cols) == 2);
  CHECK(rank(both, cols) == 2);
  REQUIRE(k.dim(4) == 1);
  CHECK(k.by_degree[4].front() == parse_polynomial("x6*x7^3", r.ring()));
}

TEST_CASE("trilinear form transforms with the basis") {
  for (const char* n : {"sigma_bl", "sigma_delta2"}) {
    GradedQuotientRing r = cohomology_ring(bundled_fan(n));
    CupKernel k = cup_kernel(r, hypersurface_class(r));
    TrilinearChoice c = default_trilinear_choice(r, k);
    Polynomial t = trilinear_form(r, k, c);
    Ring abc = t.ring();
    auto A = Polynomial::variable(abc, 0), B = Polynomial::variable(abc, 1), C = Polynomial::variable(abc, 2);

    TrilinearChoice swapped = c;
    std::swap(swapped.basis[0], swapped.basis[1]);
    CHECK(trilinear_form(r, k, swapped) == t.substitute({B, A, C}));

    TrilinearChoice rotated = c;
    std::rotate(rotated.basis.begin(), rotated.basis.begin() + 1, rotated.basis.end());
    CHECK(trilinear_form(r, k, rotated) == t.substitute({C, A, B}));

    TrilinearChoice doubled = c;
    for (auto& e : doubled.basis) e = e * Rational(2);
    CHECK(trilinear_form(r, k, doubled) == t * Rational(8));

    TrilinearChoice dependent = c;
    dependent.basis[2] = dependent.basis[0];
    CHECK_THROWS_AS(trilinear_form(r, k, dependent), std::invalid_argument);
  }
}

TEST_CASE("trilinear form of the blow-up") {
  GradedQuotientRing r = cohomology_ring(bundled_fan("sigma_bl"));
  CupKernel k = cup_kernel(r, hypersurface_class(r));
  Polynomial t = trilinear_form(r, k, default_trilinear_choice(r, k));
  CHECK(t.is_homogeneous());
  CHECK(t.total_degree() == 3);
}

TEST_CASE("lex order gives the same Betti numbers") {
  Fan f = bundled_fan("sigma_bl");
  Ring lex = with_order(ray_ring(f), MonomialOrder::Lex);
  GradedQuotientRing r(stanley_reisner_ideal(f, lex) + linear_ideal(f, lex), 1);
  CHECK(r.dims() == betti(f));
}

}
