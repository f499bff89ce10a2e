#include "cytrans/invariants.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cytrans {

CubicForm::CubicForm(Polynomial p) : p_(std::move(p)) {
  if (p_.ring()->nvars() != 3) throw std::invalid_argument("cubic form needs exactly three variables");
  if (p_.is_zero()) return;
  if (!p_.is_homogeneous() || p_.total_degree() != 3) {
    throw std::invalid_argument("not a homogeneous cubic: " + p_.to_string());
  }
}

Ring lower_abc_ring() {
  static const Ring ring = make_ring({"a", "b", "c"}, MonomialOrder::DegRevLex);
  return ring;
}

Ideal jacobian_ideal(const CubicForm& t) {
  const Polynomial& p = t.poly();
  Ring ring = with_order(p.ring(), MonomialOrder::DegRevLex);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < 3; ++i) gens.push_back(p.derivative(i).in_ring(ring));
  return Ideal(ring, std::move(gens));
}

MilnorRing milnor_ring(const CubicForm& t) {
  MilnorRing m{GradedQuotientRing(jacobian_ideal(t), 1), false, {}};
  m.finite = m.ring.is_finite();
  if (m.finite) m.dims = m.ring.dims();
  return m;
}

Polynomial normalize_cubic(const Polynomial& p) { return p.primitive_part(); }

bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  Polynomial bb = b.in_ring(a.ring());
  Rational c = bb.coefficient(a.leading_monomial());
  if (c == 0) return false;
  return a == bb * (a.leading_coefficient() / c);
}

CubicForm milnor_trilinear(const CubicForm& t, const std::optional<Polynomial>& q) {
  MilnorRing m = milnor_ring(t);
  if (!m.finite || m.dims.size() != 4 || m.dims[3] != 1) {
    throw std::domain_error("unexpected Milnor top dimension");
  }
  const GradedQuotientRing& r = m.ring;
  Polynomial gen(r.ring());
  if (q) {
    gen = r.normal_form(q->in_ring(r.ring()));
    if (gen.is_zero()) throw std::invalid_argument("chosen generator q vanishes in the Milnor ring");
  } else {
    std::vector<Monomial> top = r.basis(3);
    std::sort(top.begin(), top.end(), std::greater<Monomial>());
    gen = Polynomial(r.ring(), top.front());
  }
  RatVector gen_coords = r.coordinates(gen, 3);
  const Rational g = gen_coords.at(0);

  Ring abc = lower_abc_ring();
  Polynomial T(abc);
  const unsigned fact[] = {1, 1, 2, 6};
  for (const auto& mono : monomials_of_degree(3, 3, MonomialOrder::DegRevLex)) {
    Rational c = r.coordinates(Polynomial(r.ring(), mono), 3).at(0) / g;
    Rational multi(6, fact[mono[0]] * fact[mono[1]] * fact[mono[2]]);
    multi.canonicalize();
    T.add_term(mono, c * multi);
  }
  return CubicForm(normalize_cubic(T));
}

std::string format_degrees(const std::vector<unsigned>& degrees) {
  std::string out = "{";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(degrees[i]);
  }
  return out + "}";
}

namespace {

// Exact division of p by a linear form l; throws when not exact.
Polynomial divide_exact(const Polynomial& p, const Polynomial& l) {
  Polynomial rem = p;
  Polynomial quo(p.ring());
  const Monomial& lm = l.leading_monomial();
  const Rational& lc = l.leading_coefficient();
  while (!rem.is_zero()) {
    Monomial m = rem.leading_monomial();
    if (!divides(lm, m)) throw std::logic_error("linear factor does not divide");
    Monomial q = quotient(m, lm);
    Rational c = rem.leading_coefficient() / lc;
    quo.add_term(q, c);
    rem -= l.times_term(q, c);
  }
  return quo;
}

bool is_rational_square(const Rational& x) {
  if (x < 0) return false;
  if (x == 0) return true;
  return mpz_perfect_square_p(x.get_num().get_mpz_t()) && mpz_perfect_square_p(x.get_den().get_mpz_t());
}

// Number of linear factors (0 or 2) of a quadratic form over Q.
bool quadratic_splits(const Polynomial& q) {
  std::vector<RatVector> g(3, RatVector(3, Rational(0)));
  for (const auto& [m, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 3; ++i) {
      for (unsigned e = 0; e < m[i]; ++e) idx.push_back(i);
    }
    if (idx[0] == idx[1]) {
      g[idx[0]][idx[0]] += c;
    } else {
      g[idx[0]][idx[1]] += c / 2;
      g[idx[1]][idx[0]] += c / 2;
    }
  }
  std::size_t rk = rank(g, 3);
  if (rk == 1) return true;
  if (rk == 3) return false;
  RatVector w = nullspace(g, 3).front();
  std::size_t k = 0;
  while (w[k] == 0) ++k;
  std::size_t i = (k == 0) ? 1 : 0;
  std::size_t j = (k == 2) ? 1 : 2;
  Rational det = g[i][i] * g[j][j] - g[i][j] * g[j][i];
  return is_rational_square(-det);
}

bool vanishes_on_line(const Polynomial& T, const IntVector& l) {
  // Two independent points of the line l = 0.
  std::vector<IntVector> basis = integer_nullspace({l}, 3);
  RatVector p = to_rational(basis[0]);
  RatVector q = to_rational(basis[1]);
  RatVector s(3), d(3);
  for (std::size_t i = 0; i < 3; ++i) {
    s[i] = p[i] + q[i];
    d[i] = p[i] - q[i];
  }
  return T.evaluate(p) == 0 && T.evaluate(q) == 0 && T.evaluate(s) == 0 && T.evaluate(d) == 0;
}

}  // namespace

FactorType factor_type(const CubicForm& form, unsigned height) {
  const Polynomial& T = form.poly();
  if (T.is_zero()) throw std::invalid_argument("factor type of the zero form");
  if (milnor_ring(form).finite) return {{3}, "smooth", std::nullopt};

  const std::string bound = " h<=" + std::to_string(height);
  const long H = static_cast<long>(height);
  for (long s = 1; s <= 3 * H; ++s) {
    // Forms ordered by l1 norm, then lexicographically; first nonzero entry positive.
    for (long x = -H; x <= H; ++x) {
      for (long y = -H; y <= H; ++y) {
        long z_abs = s - std::labs(x) - std::labs(y);
        if (z_abs < 0 || z_abs > H) continue;
        for (long z : {z_abs, -z_abs}) {
          if (z_abs == 0 && z < 0) continue;
          IntVector l = make_ivec({x, y, z});
          if (x < 0 || (x == 0 && y < 0) || (x == 0 && y == 0 && z < 0)) continue;
          if (gcd_of(l) != 1) continue;
          if (!vanishes_on_line(T, l)) continue;
          Polynomial lin(T.ring());
          for (std::size_t i = 0; i < 3; ++i) lin += Polynomial::variable(T.ring(), i) * Rational(l[i]);
          Polynomial cof = divide_exact(T, lin);
          FactorType out;
          out.degrees = quadratic_splits(cof) ? std::vector<unsigned>{1, 1, 1} : std::vector<unsigned>{1, 2};
          out.method = "linear-factor" + bound;
          out.linear_factor = lin;
          return out;
        }
      }
    }
  }
  return {{3}, "bounded-search" + bound, std::nullopt};
}

InvariantReport invariant_report(const std::string& family, const CubicForm& t,
                                 std::optional<std::array<std::size_t, 4>> betti, unsigned height) {
  InvariantReport r{family, betti, t, "", false, {}, std::nullopt, std::nullopt};
  MilnorRing m = milnor_ring(t);
  r.milnor_finite = m.finite;
  r.milnor_dims = m.dims;
  if (m.finite && m.dims.size() == 4 && m.dims[3] == 1) {
    r.T = milnor_trilinear(t);
    r.factor = factor_type(*r.T, height);
  }
  return r;
}

InvariantReport family_report(const std::string& family, const Fan& f,
                              const std::optional<TrilinearChoice>& choice, unsigned height) {
  GradedQuotientRing ring = cohomology_ring(f);
  CupKernel k = cup_kernel(ring, hypersurface_class(ring));
  TrilinearChoice c = choice ? *choice : default_trilinear_choice(ring, k);
  CubicForm t(trilinear_form(ring, k, c));
  InvariantReport r = invariant_report(family, t, cy_betti(ring, k), height);
  r.basis_note = "(" + c.basis[0].to_string() + ", " + c.basis[1].to_string() + ", " +
                 c.basis[2].to_string() + "), top " + c.top.to_string();
  return r;
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string to_kv(const InvariantReport& r) {
  std::ostringstream os;
  os << "family: " << r.family << "\n";
  os << "betti: ";
  if (r.betti) {
    os << join(std::vector<std::size_t>(r.betti->begin(), r.betti->end()));
  } else {
    os << "-";
  }
  os << "\n";
  os << "t: " << r.t.to_string() << "\n";
  os << "milnor_finite: " << (r.milnor_finite ? "true" : "false") << "\n";
  os << "milnor_dims: " << (r.milnor_finite ? join(r.milnor_dims) : "infinite") << "\n";
  os << "T_normalized: " << (r.T ? r.T->to_string() : "-") << "\n";
  os << "factor_type: " << (r.factor ? format_degrees(r.factor->degrees) : "not computed") << "\n";
  os << "method: " << (r.factor ? r.factor->method : "-") << "\n";
  return os.str();
}

Verdict compare_families(const InvariantReport& a, const InvariantReport& b) {
  if (a.betti && b.betti && *a.betti != *b.betti) return {true, "betti numbers differ"};
  if (a.milnor_finite != b.milnor_finite) {
    return {true, std::string("Milnor ring finite for ") + (a.milnor_finite ? a.family : b.family) + " only"};
  }
  if (a.milnor_finite && a.milnor_dims != b.milnor_dims) {
    return {true, "Milnor graded dimensions differ (" + join(a.milnor_dims) + " vs " + join(b.milnor_dims) + ")"};
  }
  if (a.factor && b.factor && a.factor->degrees != b.factor->degrees) {
    return {true, "factor types of T differ (" + format_degrees(a.factor->degrees) + " vs " +
                      format_degrees(b.factor->degrees) + ")"};
  }
  return {false, "inconclusive"};
}

}  // namespace cytrans
