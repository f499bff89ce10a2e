#include "cytrans/cone.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cytrans {

namespace {

std::vector<IntVector> identity_basis(std::size_t k) {
  std::vector<IntVector> basis(k, IntVector(k, Integer(0)));
  for (std::size_t i = 0; i < k; ++i) basis[i][i] = 1;
  return basis;
}

// Coordinates of `rows` in the basis: rows[i] . basis[j].
std::vector<IntVector> restrict_rows(const std::vector<IntVector>& rows,
                                     const std::vector<IntVector>& basis) {
  std::vector<IntVector> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    IntVector v(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) v[j] = dot(r, basis[j]);
    out.push_back(std::move(v));
  }
  return out;
}

IntVector lift(const IntVector& coords, const std::vector<IntVector>& basis, std::size_t dim) {
  IntVector v(dim, Integer(0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (coords[j] == 0) continue;
    for (std::size_t i = 0; i < dim; ++i) v[i] += coords[j] * basis[j][i];
  }
  return v;
}

struct DDRay {
  IntVector v;
  std::vector<bool> tight;
};

// Extreme rays of the pointed cone {w : rows . w >= 0}, rows of full column
// rank k.
std::vector<IntVector> double_description(const std::vector<IntVector>& rows, std::size_t k) {
  const std::size_t m = rows.size();
  // Greedy choice of k independent rows for the initial simplicial cone.
  std::vector<std::size_t> basis_rows;
  std::vector<IntVector> chosen;
  for (std::size_t i = 0; i < m && basis_rows.size() < k; ++i) {
    chosen.push_back(rows[i]);
    if (rank(chosen) == chosen.size()) {
      basis_rows.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  if (basis_rows.size() != k) throw std::logic_error("double description: rank deficiency");

  // Initial rays are the columns of the inverse of the chosen square block.
  std::vector<RatVector> aug(k, RatVector(2 * k, Rational(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = chosen[i][j];
    aug[i][k + i] = 1;
  }
  rref(aug, 2 * k);
  std::vector<DDRay> rays;
  std::vector<bool> processed(m, false);
  for (auto r : basis_rows) processed[r] = true;
  for (std::size_t j = 0; j < k; ++j) {
    RatVector col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = aug[i][k + j];
    DDRay ray{primitive(col), std::vector<bool>(m, false)};
    for (std::size_t i = 0; i < k; ++i) {
      if (i != j) ray.tight[basis_rows[i]] = true;
    }
    rays.push_back(std::move(ray));
  }

  for (std::size_t row = 0; row < m; ++row) {
    if (processed[row]) continue;
    processed[row] = true;
    const IntVector& a = rows[row];
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(a, rays[i].v);
      if (value[i] > 0) pos.push_back(i);
      else if (value[i] < 0) neg.push_back(i);
      else zero.push_back(i);
    }
    std::vector<DDRay> next;
    for (auto i : zero) {
      rays[i].tight[row] = true;
      next.push_back(rays[i]);
    }
    for (auto i : pos) next.push_back(rays[i]);
    for (auto p : pos) {
      for (auto n : neg) {
        std::vector<bool> common(m, false);
        std::size_t count = 0;
        for (std::size_t t = 0; t < m; ++t) {
          if (rays[p].tight[t] && rays[n].tight[t]) {
            common[t] = true;
            ++count;
          }
        }
        if (count + 2 < k) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == n) continue;
          bool superset = true;
          for (std::size_t t = 0; t < m; ++t) {
            if (common[t] && !rays[o].tight[t]) {
              superset = false;
              break;
            }
          }
          if (superset) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector v(k);
        for (std::size_t c = 0; c < k; ++c) {
          v[c] = value[p] * rays[n].v[c] - value[n] * rays[p].v[c];
        }
        common[row] = true;
        next.push_back(DDRay{primitive(v), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  return out;
}

}  // namespace

ConeDescription cone_from_inequalities(const std::vector<IntVector>& ineq,
                                       const std::vector<IntVector>& eq, std::size_t dim) {
  for (const auto& r : ineq) {
    if (r.size() != dim) throw std::invalid_argument("inequality row has wrong dimension");
  }
  for (const auto& r : eq) {
    if (r.size() != dim) throw std::invalid_argument("equation row has wrong dimension");
  }
  std::vector<IntVector> span = eq.empty() ? identity_basis(dim) : integer_nullspace(eq, dim);
  ConeDescription out;
  if (span.empty()) return out;
  const std::size_t k = span.size();

  std::vector<IntVector> a1 = restrict_rows(ineq, span);
  std::vector<IntVector> kernel;
  if (a1.empty()) {
    kernel = identity_basis(k);
  } else {
    kernel = integer_nullspace(a1, k);
  }
  for (const auto& z : kernel) out.lineality.push_back(primitive(lift(z, span, dim)));

  std::vector<IntVector> complement = kernel.empty() ? identity_basis(k) : integer_nullspace(kernel, k);
  if (complement.empty()) return out;
  std::vector<IntVector> a2;
  for (const auto& r : restrict_rows(a1, complement)) {
    if (!is_zero(r)) a2.push_back(r);
  }
  std::set<IntVector, LexLess> seen;
  for (const auto& w : double_description(a2, complement.size())) {
    IntVector z = lift(w, complement, k);
    IntVector y = primitive(lift(z, span, dim));
    if (seen.insert(y).second) out.rays.push_back(std::move(y));
  }
  std::sort(out.rays.begin(), out.rays.end(), LexLess{});
  return out;
}

Cone::Cone(const std::vector<IntVector>& generators, std::size_t ambient_dim)
    : ambient_dim_(ambient_dim) {
  std::vector<IntVector> gens;
  for (const auto& g : generators) {
    if (g.size() != ambient_dim) throw std::invalid_argument("cone generator has wrong dimension");
    if (!is_zero(g)) gens.push_back(g);
  }
  if (gens.empty()) {
    normals_.clear();
    equations_ = identity_basis(ambient_dim);
    dim_ = 0;
    return;
  }
  ConeDescription dual = cone_from_inequalities(gens, {}, ambient_dim);
  finish_from_hrep(std::move(dual.rays), std::move(dual.lineality));
}

Cone Cone::from_inequalities(const std::vector<IntVector>& ineq, const std::vector<IntVector>& eq,
                             std::size_t ambient_dim) {
  ConeDescription d = cone_from_inequalities(ineq, eq, ambient_dim);
  if (!d.lineality.empty()) throw std::invalid_argument("cone is not strongly convex");
  return Cone(d.rays, ambient_dim);
}

void Cone::finish_from_hrep(std::vector<IntVector> ineq, std::vector<IntVector> eq) {
  ConeDescription primal = cone_from_inequalities(ineq, eq, ambient_dim_);
  if (!primal.lineality.empty()) throw std::invalid_argument("cone is not strongly convex");
  rays_ = std::move(primal.rays);
  normals_ = std::move(ineq);
  equations_ = std::move(eq);
  dim_ = rank(rays_);
}

bool Cone::contains(const IntVector& x) const {
  for (const auto& e : equations_) {
    if (dot(e, x) != 0) return false;
  }
  for (const auto& n : normals_) {
    if (dot(n, x) < 0) return false;
  }
  return true;
}

bool Cone::contains_in_relative_interior(const IntVector& x) const {
  for (const auto& e : equations_) {
    if (dot(e, x) != 0) return false;
  }
  for (const auto& n : normals_) {
    if (dot(n, x) <= 0) return false;
  }
  return true;
}

bool Cone::contains(const Cone& other) const {
  return std::all_of(other.rays_.begin(), other.rays_.end(),
                     [this](const IntVector& r) { return contains(r); });
}

bool Cone::has_face(const Cone& other) const {
  if (!contains(other)) return false;
  std::vector<const IntVector*> tight;
  for (const auto& n : normals_) {
    bool all = std::all_of(other.rays_.begin(), other.rays_.end(),
                           [&n](const IntVector& r) { return dot(n, r) == 0; });
    if (all) tight.push_back(&n);
  }
  for (const auto& r : rays_) {
    bool on_face = std::all_of(tight.begin(), tight.end(),
                               [&r](const IntVector* n) { return dot(*n, r) == 0; });
    if (on_face && !other.contains(r)) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> Cone::facets() const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& n : normals_) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      if (dot(n, rays_[i]) == 0) idx.push_back(i);
    }
    out.push_back(std::move(idx));
  }
  return out;
}

bool Cone::operator==(const Cone& other) const {
  return ambient_dim_ == other.ambient_dim_ && rays_ == other.rays_;
}

Cone intersect_cones(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("intersect_cones: ambient dimension mismatch");
  }
  std::vector<IntVector> ineq = a.facet_normals();
  ineq.insert(ineq.end(), b.facet_normals().begin(), b.facet_normals().end());
  std::vector<IntVector> eq = a.equations();
  eq.insert(eq.end(), b.equations().begin(), b.equations().end());
  return Cone::from_inequalities(ineq, eq, a.ambient_dim());
}

}  // namespace cytrans
