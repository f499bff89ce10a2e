#pragma once

// Multivariate polynomials over Q with dense exponent vectors.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cytrans/exact.hpp"

namespace cytrans {

using Monomial = std::vector<unsigned>;

enum class MonomialOrder { DegRevLex, Lex };

unsigned degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial mul(const Monomial& a, const Monomial& b);
/// b / a; requires divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a);

/// All monomials of total degree d in n variables, in descending order for
/// the given monomial order.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d, MonomialOrder order);

/// Variable names plus the fixed term order.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::DegRevLex);

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  MonomialOrder order() const { return order_; }
  /// Index of a variable name, or nvars() when absent.
  std::size_t index_of(const std::string& name) const;

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  std::string format(const Monomial& m) const;  // "A^2*B", "1" for the unit

 private:
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using Ring = std::shared_ptr<const PolyRing>;

Ring make_ring(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::DegRevLex);

/// Same variables, different order.
Ring with_order(const Ring& r, MonomialOrder order);

struct Descending {
  const PolyRing* ring;
  bool operator()(const Monomial& a, const Monomial& b) const { return ring->compare(a, b) > 0; }
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, Descending>;

  explicit Polynomial(Ring ring);
  Polynomial(Ring ring, const Rational& constant);
  Polynomial(Ring ring, const Monomial& m, const Rational& coeff = 1);

  static Polynomial variable(const Ring& ring, std::size_t i);

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest monomial under the ring order. Throws on zero.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  Rational coefficient(const Monomial& m) const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned k) const;

  Polynomial monic() const;
  /// Scaled to coprime integer coefficients with positive leading coefficient
  /// (leading under the ring order).
  Polynomial primitive_part() const;
  Polynomial derivative(std::size_t var) const;
  Rational evaluate(const RatVector& point) const;
  /// Replaces variable i by images[i] (all in the target ring).
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Same terms reinterpreted in another ring with the same variable count.
  Polynomial in_ring(const Ring& other) const;

  std::string to_string() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  Ring ring_;
  Terms terms_;
};

/// Parses the grammar `[+|-] c [* var ^ k ...] ...`, e.g.
/// "2/3*A^3 + 3*A^2*B - C^3". Throws std::invalid_argument naming the column.
Polynomial parse_polynomial(const std::string& text, const Ring& ring);

}  // namespace cytrans
