#pragma once

// Exact integer/rational arithmetic and the small linear-algebra kernel used
// throughout: primitive vectors, determinants, ranks, null spaces and the
// Fourier-Motzkin feasibility solver.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace cytrans {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

IntVector make_ivec(std::initializer_list<long> values);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);
Integer gcd_of(const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const RatVector& a, const IntVector& b);

IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& a, const Integer& k);
RatVector to_rational(const IntVector& v);

/// Shortest integer vector on the ray through `v`. Throws on the zero vector.
IntVector primitive(const IntVector& v);

/// Scales a nonzero rational vector to the primitive integer vector on the
/// same ray (positive multiple).
IntVector primitive(const RatVector& v);

/// "(1,1,1,0)"
std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);
std::string to_string(const Rational& q);

/// Lexicographic order on equal-length vectors.
struct LexLess {
  bool operator()(const IntVector& a, const IntVector& b) const;
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant. Throws std::invalid_argument when the
/// matrix is not square.
Integer determinant(const IntMatrix& m);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector>& rows, std::size_t cols);

std::size_t rank(const std::vector<IntVector>& rows);
std::size_t rank(const std::vector<RatVector>& rows, std::size_t cols);

/// Basis of {x : rows * x = 0}, one vector per free column, taken from the
/// reduced row echelon form (so the basis is canonical for the row space).
std::vector<RatVector> nullspace(const std::vector<RatVector>& rows, std::size_t cols);
std::vector<IntVector> integer_nullspace(const std::vector<IntVector>& rows, std::size_t cols);

/// Some solution of sum_j coeffs[j] * columns[j] = target, if one exists.
std::optional<RatVector> solve_combination(const std::vector<IntVector>& columns,
                                           const IntVector& target);

// ---------------------------------------------------------------------------
// Feasibility of rational linear systems.

enum class Relation { GreaterEqual, Greater, Equal };

/// coeffs . x  (relation)  constant
struct LinearRow {
  RatVector coeffs;
  Rational constant;
  Relation relation = Relation::GreaterEqual;
};

class LinearSystem {
 public:
  explicit LinearSystem(std::size_t arity) : arity_(arity) {}

  std::size_t arity() const { return arity_; }
  const std::vector<LinearRow>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }

  /// Throws std::invalid_argument when the row arity differs.
  void add(RatVector coeffs, Rational constant, Relation relation);
  void add(LinearRow row);

  bool satisfied_by(const RatVector& x) const;

 private:
  std::size_t arity_;
  std::vector<LinearRow> rows_;
};

struct Feasibility {
  bool feasible = false;
  RatVector witness;  // empty when infeasible
};

/// Exact Fourier-Motzkin elimination. Strict rows are handled with a shared
/// slack variable eps: each `a.x > b` becomes `a.x - eps >= b` with
/// 0 <= eps <= 1, and the system is feasible iff the eliminated interval for
/// eps contains a positive value. A returned witness always satisfies every
/// row (checked before returning).
Feasibility fourier_motzkin(const LinearSystem& system);

/// Same contract, by a two-phase exact simplex method (Bland's rule) that
/// maximizes the shared strict slack. Used for larger systems, where
/// elimination blows up.
Feasibility simplex_feasibility(const LinearSystem& system);

/// Fourier-Motzkin up to this many free variables (arity minus equalities),
/// simplex beyond.
inline constexpr std::size_t kFourierMotzkinLimit = 12;

Feasibility solve_feasibility(const LinearSystem& system);

}  // namespace cytrans
