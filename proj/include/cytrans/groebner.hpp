#pragma once

// Buchberger's algorithm and graded quotient rings.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "cytrans/polynomial.hpp"

namespace cytrans {

/// Reduced, monic Groebner basis, sorted by ascending leading monomial.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators);

/// Fully reduced remainder of f modulo a Groebner basis.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  /// Computed on first use.
  const std::vector<Polynomial>& groebner_basis() const;
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  Ideal operator+(const Ideal& other) const;

 private:
  struct Cache;
  Ring ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Q[x]/I with per-degree standard-monomial bases. `step` is the
/// cohomological degree of a variable (2 for toric cohomology, 1 for
/// Milnor rings); bases are indexed by polynomial degree.
class GradedQuotientRing {
 public:
  GradedQuotientRing(Ideal ideal, unsigned step);

  const Ring& ring() const { return ideal_.ring(); }
  const Ideal& ideal() const { return ideal_; }
  unsigned step() const { return step_; }

  /// True iff every variable has a pure power among the leading monomials.
  bool is_finite() const;
  /// Standard monomials of polynomial degree d, in descending order.
  std::vector<Monomial> basis(unsigned d) const;
  /// Dimensions of degree 0, 1, ... up to the top nonzero degree. Throws when
  /// the quotient is infinite.
  std::vector<std::size_t> dims() const;
  /// Largest d with a nonzero graded piece. Throws when infinite.
  unsigned top_degree() const;

  Polynomial normal_form(const Polynomial& f) const { return ideal_.normal_form(f); }
  Polynomial multiply(const Polynomial& a, const Polynomial& b) const;
  /// Coordinates of a homogeneous normal form in basis(d).
  RatVector coordinates(const Polynomial& f, unsigned d) const;

 private:
  Ideal ideal_;
  unsigned step_;
};

}  // namespace cytrans
