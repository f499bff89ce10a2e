#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

#include "cytrans/exact.hpp"

namespace cytrans {

void LinearSystem::add(RatVector coeffs, Rational constant, Relation relation) {
  add(LinearRow{std::move(coeffs), std::move(constant), relation});
}

void LinearSystem::add(LinearRow row) {
  if (row.coeffs.size() != arity_) {
    throw std::invalid_argument("linear row arity " + std::to_string(row.coeffs.size()) +
                                " does not match system arity " + std::to_string(arity_));
  }
  rows_.push_back(std::move(row));
}

bool LinearSystem::satisfied_by(const RatVector& x) const {
  if (x.size() != arity_) return false;
  for (const auto& row : rows_) {
    Rational lhs = dot(row.coeffs, x);
    switch (row.relation) {
      case Relation::GreaterEqual:
        if (lhs < row.constant) return false;
        break;
      case Relation::Greater:
        if (lhs <= row.constant) return false;
        break;
      case Relation::Equal:
        if (lhs != row.constant) return false;
        break;
    }
  }
  return true;
}

namespace {

// Set of original inequality indices a derived row was combined from.
class History {
 public:
  History() = default;
  explicit History(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  History operator|(const History& o) const {
    History h = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) h.words_[i] |= o.words_[i];
    return h;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// coeffs . x >= constant
struct Ineq {
  RatVector coeffs;
  Rational constant;
  History history;
};

void normalize(Ineq& row) {
  Integer l = 1;
  for (const auto& c : row.coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  for (const auto& c : row.coeffs) {
    Rational s = c * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  if (g == 0) return;
  Rational f(l, g);
  f.canonicalize();
  for (auto& c : row.coeffs) c *= f;
  row.constant *= f;
}

// Drops trivially-true zero rows, keeps only the tightest row per coefficient
// vector. Returns false if a zero row is violated.
bool tidy(std::vector<Ineq>& rows) {
  std::map<RatVector, Ineq> best;
  for (auto& row : rows) {
    normalize(row);
    if (is_zero(row.coeffs)) {
      if (row.constant > 0) return false;
      continue;
    }
    auto it = best.find(row.coeffs);
    if (it == best.end()) {
      best.emplace(row.coeffs, std::move(row));
    } else if (row.constant > it->second.constant ||
               (row.constant == it->second.constant &&
                row.history.count() < it->second.history.count())) {
      it->second = std::move(row);
    }
  }
  rows.clear();
  for (auto& [key, row] : best) rows.push_back(std::move(row));
  return true;
}

struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
};

Interval bounds_for(const std::vector<Ineq>& rows, std::size_t var, const RatVector& x) {
  Interval iv;
  for (const auto& row : rows) {
    const Rational& a = row.coeffs[var];
    if (a == 0) continue;
    Rational rest = row.constant;
    for (std::size_t j = 0; j < row.coeffs.size(); ++j) {
      if (j != var && row.coeffs[j] != 0) rest -= row.coeffs[j] * x[j];
    }
    Rational bound = rest / a;
    if (a > 0) {
      if (!iv.lo || bound > *iv.lo) iv.lo = bound;
    } else {
      if (!iv.hi || bound < *iv.hi) iv.hi = bound;
    }
  }
  return iv;
}

Rational pick(const Interval& iv) {
  if ((!iv.lo || *iv.lo <= 0) && (!iv.hi || *iv.hi >= 0)) return 0;
  if (iv.lo && *iv.lo > 0) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), iv.lo->get_num_mpz_t(), iv.lo->get_den_mpz_t());
    if (!iv.hi || Rational(c) <= *iv.hi) return Rational(c);
    return *iv.lo;
  }
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), iv.hi->get_num_mpz_t(), iv.hi->get_den_mpz_t());
  if (!iv.lo || Rational(f) >= *iv.lo) return Rational(f);
  return *iv.hi;
}

}  // namespace

Feasibility fourier_motzkin(const LinearSystem& system) {
  const std::size_t n = system.arity();
  if (system.empty()) return {true, RatVector(n, Rational(0))};

  // Substitute equalities away first.
  struct Substitution {
    std::size_t var;
    RatVector coeffs;
    Rational constant;
  };
  std::vector<Substitution> subs;
  std::vector<LinearRow> rows(system.rows().begin(), system.rows().end());
  std::vector<bool> eliminated(n, false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].relation != Relation::Equal) continue;
    const LinearRow eq = rows[i];
    std::size_t k = 0;
    while (k < n && eq.coeffs[k] == 0) ++k;
    if (k == n) {
      if (eq.constant != 0) return {};
      continue;
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j == i || rows[j].coeffs[k] == 0) continue;
      Rational f = rows[j].coeffs[k] / eq.coeffs[k];
      for (std::size_t c = 0; c < n; ++c) rows[j].coeffs[c] -= f * eq.coeffs[c];
      rows[j].constant -= f * eq.constant;
    }
    eliminated[k] = true;
    subs.push_back({k, eq.coeffs, eq.constant});
  }

  const bool strict = std::any_of(rows.begin(), rows.end(),
                                  [](const LinearRow& r) { return r.relation == Relation::Greater; });
  const std::size_t width = n + (strict ? 1 : 0);
  const std::size_t eps = n;

  std::vector<Ineq> current;
  std::size_t inequality_count = 0;
  for (const auto& r : rows) {
    if (r.relation != Relation::Equal) ++inequality_count;
  }
  const std::size_t history_size = inequality_count + 1;
  std::size_t next_id = 0;
  for (const auto& r : rows) {
    if (r.relation == Relation::Equal) continue;
    Ineq row{r.coeffs, r.constant, History(history_size)};
    row.coeffs.resize(width, Rational(0));
    if (r.relation == Relation::Greater) row.coeffs[eps] = -1;
    row.history.set(next_id++);
    current.push_back(std::move(row));
  }
  if (strict) {
    Ineq cap{RatVector(width, Rational(0)), Rational(-1), History(history_size)};
    cap.coeffs[eps] = -1;
    cap.history.set(next_id++);
    current.push_back(std::move(cap));
  }
  if (!tidy(current)) return {};

  std::vector<std::size_t> order;
  std::vector<std::vector<Ineq>> stages;
  std::vector<std::size_t> remaining;
  for (std::size_t v = 0; v < n; ++v) {
    if (!eliminated[v]) remaining.push_back(v);
  }

  while (!remaining.empty()) {
    // Cheapest variable first: minimizes the number of generated rows.
    std::size_t best_pos = 0;
    long best_cost = 0;
    for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
      long p = 0, q = 0;
      for (const auto& row : current) {
        if (row.coeffs[remaining[pos]] > 0) ++p;
        else if (row.coeffs[remaining[pos]] < 0) ++q;
      }
      long cost = p * q - p - q;
      if (pos == 0 || cost < best_cost) {
        best_cost = cost;
        best_pos = pos;
      }
    }
    const std::size_t var = remaining[best_pos];
    remaining.erase(remaining.begin() + static_cast<long>(best_pos));
    order.push_back(var);
    stages.push_back(current);

    std::vector<Ineq> pos_rows, neg_rows, next;
    for (auto& row : current) {
      if (row.coeffs[var] > 0) pos_rows.push_back(row);
      else if (row.coeffs[var] < 0) neg_rows.push_back(row);
      else next.push_back(row);
    }
    const std::size_t limit = order.size() + 1;
    for (const auto& p : pos_rows) {
      for (const auto& q : neg_rows) {
        History h = p.history | q.history;
        if (h.count() > limit) continue;  // Chernikov: redundant
        Rational fp = -q.coeffs[var];
        Rational fq = p.coeffs[var];
        Ineq combined{RatVector(width), fp * p.constant + fq * q.constant, std::move(h)};
        for (std::size_t c = 0; c < width; ++c) {
          combined.coeffs[c] = fp * p.coeffs[c] + fq * q.coeffs[c];
        }
        combined.coeffs[var] = 0;
        next.push_back(std::move(combined));
      }
    }
    if (!tidy(next)) return {};
    current = std::move(next);
  }

  RatVector x(width, Rational(0));
  if (strict) {
    Interval iv;
    for (const auto& row : current) {
      const Rational& a = row.coeffs[eps];
      Rational bound = row.constant / a;
      if (a > 0) {
        if (!iv.lo || bound > *iv.lo) iv.lo = bound;
      } else {
        if (!iv.hi || bound < *iv.hi) iv.hi = bound;
      }
    }
    // The cap row guarantees an upper bound.
    if (!iv.hi || *iv.hi <= 0) return {};
    if (iv.lo && *iv.lo > *iv.hi) return {};
    x[eps] = *iv.hi;
  }

  for (std::size_t s = order.size(); s-- > 0;) {
    Interval iv = bounds_for(stages[s], order[s], x);
    if (iv.lo && iv.hi && *iv.lo > *iv.hi) {
      throw std::logic_error("Fourier-Motzkin back-substitution found an empty interval");
    }
    x[order[s]] = pick(iv);
  }
  for (std::size_t s = subs.size(); s-- > 0;) {
    const auto& sub = subs[s];
    Rational rest = sub.constant;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != sub.var) rest -= sub.coeffs[j] * x[j];
    }
    x[sub.var] = rest / sub.coeffs[sub.var];
  }
  x.resize(n);
  if (!system.satisfied_by(x)) {
    throw std::logic_error("Fourier-Motzkin witness violates the input system");
  }
  return {true, std::move(x)};
}

namespace {

// Dense tableau: rows[i] holds the coefficients of row i over all columns
// followed by the right-hand side.
struct Tableau {
  std::vector<RatVector> rows;
  std::vector<std::size_t> basis;
  std::size_t cols = 0;

  void pivot(std::size_t r, std::size_t c) {
    RatVector& pr = rows[r];
    const Rational inv = 1 / pr[c];
    for (auto& v : pr) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (pr[j] != 0) rows[i][j] -= f * pr[j];
      }
    }
    basis[r] = c;
  }

  // Maximizes obj over the columns flagged in `allowed`, Bland's rule.
  // Returns false if unbounded.
  bool maximize(const RatVector& obj, const std::vector<bool>& allowed) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols && !enter; ++j) {
        if (!allowed[j] || std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
        Rational reduced = obj[j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (rows[i][j] != 0) reduced -= obj[basis[i]] * rows[i][j];
        }
        if (reduced > 0) enter = j;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][*enter] <= 0) continue;
        Rational ratio = rows[i][cols] / rows[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  Rational value(std::size_t col) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (basis[i] == col) return rows[i][cols];
    }
    return 0;
  }
};

}  // namespace

Feasibility simplex_feasibility(const LinearSystem& system) {
  const std::size_t n = system.arity();
  if (system.empty()) return {true, RatVector(n, Rational(0))};

  // Columns: x_j = pos_j - neg_j, then eps, then one slack per inequality
  // (and the eps <= 1 cap), then one artificial per row.
  const auto& in = system.rows();
  const bool strict = std::any_of(in.begin(), in.end(), [](const LinearRow& r) { return r.relation == Relation::Greater; });
  std::size_t slacks = 0;
  for (const auto& r : in) {
    if (r.relation != Relation::Equal) ++slacks;
  }
  if (strict) ++slacks;
  const std::size_t m = in.size() + (strict ? 1 : 0);
  const std::size_t eps = 2 * n;
  const std::size_t slack0 = eps + 1;
  const std::size_t art0 = slack0 + slacks;
  Tableau t;
  t.cols = art0 + m;
  t.rows.assign(m, RatVector(t.cols + 1, Rational(0)));
  t.basis.resize(m);

  std::size_t slack = slack0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    RatVector& row = t.rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      row[2 * j] = in[i].coeffs[j];
      row[2 * j + 1] = -in[i].coeffs[j];
    }
    if (in[i].relation == Relation::Greater) row[eps] = -1;
    if (in[i].relation != Relation::Equal) row[slack++] = -1;
    row[t.cols] = in[i].constant;
  }
  if (strict) {
    RatVector& cap = t.rows[m - 1];
    cap[eps] = 1;
    cap[slack++] = 1;
    cap[t.cols] = 1;
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (t.rows[i][t.cols] < 0) {
      for (auto& v : t.rows[i]) v = -v;
    }
    t.rows[i][art0 + i] = 1;
    t.basis[i] = art0 + i;
  }

  // Phase I: drive the artificials to zero.
  std::vector<bool> allowed(t.cols, true);
  RatVector phase1(t.cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = -1;
  t.maximize(phase1, allowed);
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] >= art0 && t.rows[i][t.cols] != 0) return {};
  }
  for (std::size_t j = art0; j < t.cols; ++j) allowed[j] = false;
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < art0) {
      ++i;
      continue;
    }
    std::size_t c = 0;
    while (c < art0 && t.rows[i][c] == 0) ++c;
    if (c == art0) {
      t.rows.erase(t.rows.begin() + static_cast<long>(i));  // redundant row
      t.basis.erase(t.basis.begin() + static_cast<long>(i));
      continue;
    }
    t.pivot(i, c);
    ++i;
  }

  if (strict) {
    RatVector phase2(t.cols, Rational(0));
    phase2[eps] = 1;
    t.maximize(phase2, allowed);  // bounded by the cap row
    if (t.value(eps) <= 0) return {};
  }

  RatVector x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = t.value(2 * j) - t.value(2 * j + 1);
  if (!system.satisfied_by(x)) {
    throw std::logic_error("simplex witness violates the input system");
  }
  return {true, std::move(x)};
}

Feasibility solve_feasibility(const LinearSystem& system) {
  std::size_t equalities = 0;
  for (const auto& r : system.rows()) {
    if (r.relation == Relation::Equal) ++equalities;
  }
  const std::size_t free_vars = system.arity() > equalities ? system.arity() - equalities : 0;
  return free_vars <= kFourierMotzkinLimit ? fourier_motzkin(system) : simplex_feasibility(system);
}

}  // namespace cytrans
