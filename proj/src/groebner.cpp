#include "cytrans/groebner.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace cytrans {

namespace {

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_term(quotient(l, f.leading_monomial()), 1 / f.leading_coefficient());
  Polynomial b = g.times_term(quotient(l, g.leading_monomial()), 1 / g.leading_coefficient());
  return a - b;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  Polynomial rem(f.ring());
  Polynomial p = f;
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const Rational lc = p.leading_coefficient();
    bool reduced = false;
    for (const auto& g : basis) {
      if (divides(g.leading_monomial(), lm)) {
        p -= g.times_term(quotient(lm, g.leading_monomial()), lc / g.leading_coefficient());
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return rem;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators) {
  std::vector<Polynomial> g;
  for (const auto& p : generators) {
    if (!p.is_zero()) g.push_back(p.monic());
  }
  if (g.empty()) return g;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first.
    auto best = pairs.begin();
    Monomial best_lcm = lcm(g[best->first].leading_monomial(), g[best->second].leading_monomial());
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      Monomial l = lcm(g[it->first].leading_monomial(), g[it->second].leading_monomial());
      if (g.front().ring()->compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = l;
      }
    }
    auto [i, j] = *best;
    pairs.erase(best);
    const Monomial& li = g[i].leading_monomial();
    const Monomial& lj = g[j].leading_monomial();
    if (coprime(li, lj)) continue;
    // Chain criterion.
    bool skip = false;
    for (std::size_t k = 0; k < g.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (!divides(g[k].leading_monomial(), best_lcm)) continue;
      auto pending = [&pairs](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) != pairs.end();
      };
      if (!pending(i, k) && !pending(j, k)) skip = true;
    }
    if (skip) continue;
    Polynomial r = normal_form(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Minimalize, then interreduce.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& a = g[j].leading_monomial();
      const Monomial& b = g[i].leading_monomial();
      if (divides(a, b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Polynomial lead(minimal[i].ring(), minimal[i].leading_monomial(), minimal[i].leading_coefficient());
    Polynomial tail = minimal[i] - lead;
    reduced.push_back((lead + normal_form(tail, others)).monic());
  }
  const PolyRing* ring = reduced.front().ring().get();
  std::sort(reduced.begin(), reduced.end(), [ring](const Polynomial& a, const Polynomial& b) {
    return ring->compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return reduced;
}

struct Ideal::Cache {
  std::once_flag once;
  std::vector<Polynomial> basis;
};

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators_) {
    if (g.ring()->vars() != ring_->vars()) throw std::invalid_argument("ideal generator from another ring");
    if (g.ring() != ring_) g = g.in_ring(ring_);
  }
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = buchberger(generators_); });
  return cache_->basis;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  return cytrans::normal_form(f.ring() == ring_ ? f : f.in_ring(ring_), groebner_basis());
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

Ideal Ideal::operator+(const Ideal& other) const {
  std::vector<Polynomial> gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Ideal(ring_, std::move(gens));
}

GradedQuotientRing::GradedQuotientRing(Ideal ideal, unsigned step) : ideal_(std::move(ideal)), step_(step) {}

bool GradedQuotientRing::is_finite() const {
  const std::size_t n = ring()->nvars();
  std::vector<bool> pure(n, false);
  for (const auto& g : ideal_.groebner_basis()) {
    const Monomial& m = g.leading_monomial();
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] > 0) {
        ++support;
        var = i;
      }
    }
    if (support == 0) return true;  // unit ideal
    if (support == 1) pure[var] = true;
  }
  return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
}

std::vector<Monomial> GradedQuotientRing::basis(unsigned d) const {
  std::vector<Monomial> out;
  const auto& gb = ideal_.groebner_basis();
  for (const auto& m : monomials_of_degree(ring()->nvars(), d, ring()->order())) {
    bool standard = std::none_of(gb.begin(), gb.end(),
                                 [&m](const Polynomial& g) { return divides(g.leading_monomial(), m); });
    if (standard) out.push_back(m);
  }
  return out;
}

unsigned GradedQuotientRing::top_degree() const {
  if (!is_finite()) throw std::domain_error("quotient ring is infinite-dimensional");
  // Once a graded piece vanishes every monomial of that degree lies in the
  // leading-term ideal, hence so does every monomial of higher degree.
  if (basis(0).empty()) throw std::domain_error("quotient ring is zero");
  unsigned d = 0;
  while (!basis(d + 1).empty()) ++d;
  return d;
}

std::vector<std::size_t> GradedQuotientRing::dims() const {
  std::vector<std::size_t> out;
  const unsigned top = top_degree();
  for (unsigned d = 0; d <= top; ++d) out.push_back(basis(d).size());
  return out;
}

Polynomial GradedQuotientRing::multiply(const Polynomial& a, const Polynomial& b) const {
  return normal_form(a * b);
}

RatVector GradedQuotientRing::coordinates(const Polynomial& f, unsigned d) const {
  Polynomial nf = normal_form(f);
  std::vector<Monomial> b = basis(d);
  RatVector out(b.size(), Rational(0));
  for (const auto& [m, c] : nf.terms()) {
    auto it = std::find(b.begin(), b.end(), m);
    if (it == b.end()) throw std::invalid_argument("element is not homogeneous of the requested degree");
    out[static_cast<std::size_t>(it - b.begin())] = c;
  }
  return out;
}

}  // namespace cytrans
