#pragma once

// Milnor rings of ternary cubics, the induced T-form, factor types over Q and
// the family comparison used to separate Calabi-Yau families.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cytrans/cohomology.hpp"
#include "cytrans/groebner.hpp"
#include "cytrans/polynomial.hpp"

namespace cytrans {

/// Throws std::invalid_argument unless p is a homogeneous cubic in exactly
/// three variables.
class CubicForm {
 public:
  explicit CubicForm(Polynomial p);
  const Polynomial& poly() const { return p_; }
  std::string to_string() const { return p_.to_string(); }

 private:
  Polynomial p_;
};

/// Q[a,b,c], degrevlex a > b > c; home of the T-forms.
Ring lower_abc_ring();

Ideal jacobian_ideal(const CubicForm& t);

struct MilnorRing {
  GradedQuotientRing ring;
  bool finite = false;
  std::vector<std::size_t> dims;  // empty when infinite
};
MilnorRing milnor_ring(const CubicForm& t);

/// T with (aA+bB+cC)^3 = T(a,b,c) q in M(t), normalized by normalize_cubic.
/// q defaults to the lexicographically greatest degree-3 standard monomial.
/// Throws std::domain_error("unexpected Milnor top dimension") unless the
/// ring is finite with a one-dimensional degree-3 piece.
CubicForm milnor_trilinear(const CubicForm& t, const std::optional<Polynomial>& q = std::nullopt);

/// Integer-primitive, positive leading coefficient under degrevlex.
Polynomial normalize_cubic(const Polynomial& p);

/// Same up to a nonzero rational scalar.
bool proportional(const Polynomial& a, const Polynomial& b);

struct FactorType {
  std::vector<unsigned> degrees;  // sorted ascending: {3}, {1,2} or {1,1,1}
  std::string method;
  std::optional<Polynomial> linear_factor;
};
std::string format_degrees(const std::vector<unsigned>& degrees);  // "{1,2}"

/// Smooth (finite Milnor ring) cubics are irreducible; otherwise linear
/// factors are searched up to coefficient height `height` and the quadratic
/// cofactor is split by its Gram matrix.
FactorType factor_type(const CubicForm& T, unsigned height = 20);

struct InvariantReport {
  std::string family;
  std::optional<std::array<std::size_t, 4>> betti;
  CubicForm t;
  std::string basis_note;
  bool milnor_finite = false;
  std::vector<std::size_t> milnor_dims;
  std::optional<CubicForm> T;
  std::optional<FactorType> factor;
};

InvariantReport invariant_report(const std::string& family, const CubicForm& t,
                                 std::optional<std::array<std::size_t, 4>> betti = std::nullopt,
                                 unsigned height = 20);

/// Full pipeline from a fan: cohomology, kernel of [Y], trilinear form
/// (default choice unless given), Milnor data.
InvariantReport family_report(const std::string& family, const Fan& f,
                              const std::optional<TrilinearChoice>& choice = std::nullopt,
                              unsigned height = 20);

/// Fixed key order: family, betti, t, milnor_finite, milnor_dims,
/// T_normalized, factor_type, method.
std::string to_kv(const InvariantReport& r);

struct Verdict {
  bool distinct = false;
  std::string reason;  // the distinguishing invariant, or "inconclusive"
};
Verdict compare_families(const InvariantReport& a, const InvariantReport& b);

}  // namespace cytrans
