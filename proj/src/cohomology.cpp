#include "cytrans/cohomology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cytrans {

Ring ray_ring(const Fan& f) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < f.rays().size(); ++i) names.push_back("x" + std::to_string(i + 1));
  return make_ring(std::move(names), MonomialOrder::DegRevLex);
}

namespace {

bool is_face(const std::vector<std::size_t>& s, const std::vector<RayIndexSet>& cones) {
  return std::any_of(cones.begin(), cones.end(), [&s](const RayIndexSet& c) {
    return std::includes(c.begin(), c.end(), s.begin(), s.end());
  });
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Ideal stanley_reisner_ideal(const Fan& f, const Ring& ring) {
  if (!is_simplicial(f)) throw std::invalid_argument("Stanley-Reisner ideal needs a simplicial fan");
  const std::size_t r = f.rays().size();
  std::vector<std::vector<std::size_t>> nonfaces;
  for (std::size_t k = 1; k <= std::min(r, f.dim() + 1); ++k) {
    std::vector<std::vector<std::size_t>> cand;
    std::vector<std::size_t> cur;
    subsets(r, k, 0, cur, cand);
    for (const auto& s : cand) {
      if (is_face(s, f.max_cones())) continue;
      bool minimal = std::none_of(nonfaces.begin(), nonfaces.end(), [&s](const auto& t) {
        return std::includes(s.begin(), s.end(), t.begin(), t.end());
      });
      if (minimal) nonfaces.push_back(s);
    }
  }
  std::sort(nonfaces.begin(), nonfaces.end());
  std::vector<Polynomial> gens;
  for (const auto& s : nonfaces) {
    Monomial m(r, 0);
    for (auto i : s) m[i] = 1;
    gens.emplace_back(ring, m);
  }
  return Ideal(ring, std::move(gens));
}

Ideal stanley_reisner_ideal(const Fan& f) { return stanley_reisner_ideal(f, ray_ring(f)); }

Ideal linear_ideal(const Fan& f, const Ring& ring) {
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < f.dim(); ++k) {
    Polynomial g(ring);
    for (std::size_t i = 0; i < f.rays().size(); ++i) {
      g += Polynomial::variable(ring, i) * Rational(f.rays()[i][k]);
    }
    gens.push_back(std::move(g));
  }
  return Ideal(ring, std::move(gens));
}

Ideal linear_ideal(const Fan& f) { return linear_ideal(f, ray_ring(f)); }

GradedQuotientRing cohomology_ring(const Fan& f) {
  Ring ring = ray_ring(f);
  return GradedQuotientRing(linear_ideal(f, ring) + stanley_reisner_ideal(f, ring), 2);
}

std::vector<std::size_t> betti(const GradedQuotientRing& r) { return r.dims(); }

std::vector<std::size_t> betti(const Fan& f) { return betti(cohomology_ring(f)); }

Polynomial hypersurface_class(const GradedQuotientRing& r) {
  Polynomial y(r.ring());
  for (std::size_t i = 0; i < r.ring()->nvars(); ++i) y += Polynomial::variable(r.ring(), i);
  return r.normal_form(y);
}

std::vector<Polynomial> CupKernel::all() const {
  std::vector<Polynomial> out;
  for (const auto& d : by_degree) out.insert(out.end(), d.begin(), d.end());
  return out;
}

namespace {

Polynomial from_coordinates(const Ring& ring, const std::vector<Monomial>& basis, const IntVector& v) {
  Polynomial p(ring);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], Rational(v[i]));
  return p;
}

}  // namespace

CupKernel cup_kernel(const GradedQuotientRing& r, const Polynomial& y) {
  if (!y.is_zero() && (!y.is_homogeneous() || y.total_degree() != 1)) {
    throw std::invalid_argument("cup_kernel: class must be homogeneous of degree 2");
  }
  CupKernel out;
  const unsigned top = r.top_degree();
  for (unsigned d = 0; d <= top; ++d) {
    std::vector<Monomial> src = r.basis(d);
    std::vector<Monomial> dst = r.basis(d + 1);
    std::vector<RatVector> rows(dst.size(), RatVector(src.size(), Rational(0)));
    for (std::size_t j = 0; j < src.size(); ++j) {
      RatVector image = r.coordinates(y * Polynomial(r.ring(), src[j]), d + 1);
      for (std::size_t i = 0; i < dst.size(); ++i) rows[i][j] = image[i];
    }
    std::vector<RatVector> kernel = nullspace(rows, src.size());
    rref(kernel, src.size());
    std::vector<Polynomial> polys;
    for (const auto& v : kernel) {
      if (is_zero(v)) continue;
      polys.push_back(from_coordinates(r.ring(), src, primitive(v)));
    }
    out.source_dims.push_back(src.size());
    out.ranks.push_back(src.size() - polys.size());
    out.by_degree.push_back(std::move(polys));
  }
  return out;
}

std::array<std::size_t, 4> cy_betti(const GradedQuotientRing& r, const CupKernel& k) {
  std::array<std::size_t, 4> out{};
  for (unsigned d = 0; d < 4; ++d) out[d] = r.basis(d).size() - k.dim(d);
  return out;
}

Ring abc_ring() {
  static const Ring ring = make_ring({"A", "B", "C"}, MonomialOrder::DegRevLex);
  return ring;
}

namespace {

GradedQuotientRing reduced_ring(const GradedQuotientRing& r, const CupKernel& k) {
  std::vector<Polynomial> gens = r.ideal().groebner_basis();
  for (const auto& p : k.all()) gens.push_back(p);
  return GradedQuotientRing(Ideal(r.ring(), std::move(gens)), r.step());
}

bool valid_choice(const GradedQuotientRing& q, const TrilinearChoice& c) {
  std::vector<RatVector> rows;
  try {
    for (const auto& e : c.basis) rows.push_back(q.coordinates(e, 1));
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (rows.size() != 3 || rank(rows, rows.front().size()) != 3) return false;
  return !q.normal_form(c.top).is_zero();
}

Polynomial trilinear_in(const GradedQuotientRing& q, const TrilinearChoice& c) {
  if (c.basis.size() != 3) throw std::invalid_argument("trilinear form needs three classes");
  std::vector<RatVector> rows;
  for (const auto& e : c.basis) {
    if (!e.is_homogeneous() || e.total_degree() != 1) {
      throw std::invalid_argument("trilinear basis classes must be homogeneous of degree 2");
    }
    rows.push_back(q.coordinates(e, 1));
  }
  if (rows.front().size() < 3 || rank(rows, rows.front().size()) != 3) {
    throw std::invalid_argument("trilinear basis classes are not independent modulo the kernel");
  }
  Polynomial top = q.normal_form(c.top);
  if (top.is_zero()) throw std::invalid_argument("top class vanishes modulo the kernel");
  const Monomial& lead = top.leading_monomial();
  const Rational& lead_c = top.leading_coefficient();

  Ring abc = abc_ring();
  Polynomial t(abc);
  for (const auto& m : monomials_of_degree(3, 3, MonomialOrder::DegRevLex)) {
    Polynomial prod(q.ring(), Rational(1));
    for (std::size_t v = 0; v < 3; ++v) {
      for (unsigned e = 0; e < m[v]; ++e) prod = prod * c.basis[v];
    }
    Polynomial nf = q.normal_form(prod);
    Rational ratio = nf.coefficient(lead) / lead_c;
    if (nf != top * ratio) throw std::invalid_argument("cubic product is not a multiple of the top class");
    // multinomial 3!/(i!j!k!)
    unsigned fact[] = {1, 1, 2, 6};
    Rational multi(6, fact[m[0]] * fact[m[1]] * fact[m[2]]);
    multi.canonicalize();
    t.add_term(m, ratio * multi);
  }
  return t;
}

}  // namespace

TrilinearChoice default_trilinear_choice(const GradedQuotientRing& r, const CupKernel& k) {
  GradedQuotientRing q = reduced_ring(r, k);
  const Ring& ring = r.ring();
  const std::size_t n = ring->nvars();
  if (n >= 3) {
    TrilinearChoice c{{Polynomial::variable(ring, n - 3), Polynomial::variable(ring, n - 2),
                       Polynomial::variable(ring, n - 1)},
                      Polynomial::variable(ring, n - 1).pow(3)};
    if (valid_choice(q, c)) return c;
  }
  std::vector<Monomial> deg1 = q.basis(1);
  std::vector<Monomial> deg3 = q.basis(3);
  if (deg1.size() < 3 || deg3.empty()) {
    throw std::invalid_argument("no default trilinear basis: H^2 or H^6 of the hypersurface too small");
  }
  return TrilinearChoice{{Polynomial(ring, deg1[0]), Polynomial(ring, deg1[1]), Polynomial(ring, deg1[2])},
                         Polynomial(ring, deg3[0])};
}

Polynomial trilinear_form(const GradedQuotientRing& r, const CupKernel& k, const TrilinearChoice& choice) {
  return trilinear_in(reduced_ring(r, k), choice);
}

}  // namespace cytrans
