#include "testkit.hpp"

#include <algorithm>
#include <set>

#include "cytrans/cone.hpp"
#include "cytrans/io.hpp"

namespace testkit {

std::string data_path(const std::string& rel) { return std::string(CYTRANS_DATA_DIR) + "/" + rel; }

LatticePolytope bundled_polytope(const std::string& name) { return load_polytope(data_path("polytopes/" + name + ".poly")); }

Fan bundled_fan(const std::string& name) { return load_fan(data_path("fans/" + name + ".fan")); }

Polynomial bundled_cubic(const std::string& name) { return load_cubic(data_path("cubics/" + name + ".cubic")); }

namespace {

LatticePolytope hull(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<IntVector> v;
  for (const auto& p : pts) v.push_back(make_ivec(p));
  return hull_to_facets(v);
}

}  // namespace

std::vector<Named> polygons_2d() {
  return {
      {"P2", hull({{1, 0}, {0, 1}, {-1, -1}})},
      {"P1xP1", hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}})},
      {"F1", hull({{1, 0}, {0, 1}, {-1, -1}, {0, -1}})},
      {"dP7", hull({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {0, -1}})},
      {"dP6", hull({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}})},
      {"P112", hull({{-1, 0}, {1, -1}, {1, 1}})},
      {"square", hull({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}})},
      {"P2*", hull({{-1, -1}, {2, -1}, {-1, 2}})},
      {"P112*", hull({{-1, -1}, {3, -1}, {-1, 1}})},
      {"pentagon", hull({{-1, -1}, {1, -1}, {1, 0}, {0, 1}, {-1, 1}})},
  };
}

std::vector<Named> polytopes_3d() {
  return {
      {"P3", hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}})},
      {"octahedron", hull({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}})},
      {"P2xP1", hull({{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {0, 0, -1}})},
      {"cube", hull({{-1, -1, -1}, {-1, -1, 1}, {-1, 1, -1}, {-1, 1, 1}, {1, -1, -1}, {1, -1, 1}, {1, 1, -1}, {1, 1, 1}})},
      {"P3*", hull({{-1, -1, -1}, {3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}})},
      {"P2*xP1*", hull({{-1, -1, -1}, {2, -1, -1}, {-1, 2, -1}, {-1, -1, 1}, {2, -1, 1}, {-1, 2, 1}})},
  };
}

std::vector<std::pair<std::size_t, std::size_t>> nested_pairs(const std::vector<Named>& corpus) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      if (i == j || corpus[i].polytope == corpus[j].polytope) continue;
      const auto& vs = corpus[i].polytope.vertices();
      if (std::all_of(vs.begin(), vs.end(), [&](const IntVector& v) { return corpus[j].polytope.contains(v); })) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

std::vector<IntVector> shuffled_boundary(const LatticePolytope& p, std::mt19937& rng) {
  std::vector<IntVector> pts = boundary_lattice_points(p);
  std::shuffle(pts.begin(), pts.end(), rng);
  return pts;
}

std::string check_nested_mpcp(const LatticePolytope& inner, const LatticePolytope& outer, std::mt19937& rng) {
  Fan seed = mpcp_subdivide(inner, face_fan(inner), shuffled_boundary(inner, rng));
  MpcpCheck s = verify_mpcp(seed, inner);
  if (!s.ok) return "seed is not MPCP: " + s.violations.front();
  Fan inter = intersect_fans(seed, face_fan(outer)).fan;
  if (!fan_violations(inter).empty()) return "intersection fan invalid: " + fan_violations(inter).front();
  Fan result = mpcp_subdivide(outer, inter, shuffled_boundary(outer, rng));
  MpcpCheck r = verify_mpcp(result, outer);
  if (!r.ok) return "result is not MPCP: " + r.violations.front();
  if (!refines(result, inter).refines) return "result does not refine the intersection fan";
  if (!refines(result, seed).refines) return "result does not refine the seed";
  return "";
}

EdgeConeOutcome check_edge_cones(const LatticePolytope& p) {
  EdgeConeOutcome out;
  std::vector<IntVector> pts;
  for (const auto& x : lattice_points(p)) {
    if (!is_zero(x)) pts.push_back(x);
  }
  for (const auto& edge : faces(p, 1)) {
    std::vector<IntVector> ends;
    for (auto i : edge.vertex_indices) ends.push_back(p.vertices()[i]);
    Cone c2(ends, p.dim());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (rank({pts[i], pts[j]}) != 2) continue;
        Cone c1({pts[i], pts[j]}, p.dim());
        Cone meet = intersect_cones(c1, c2);
        if (meet.dim() != 1) continue;
        const IntVector& g = meet.rays().front();
        if (!c1.contains_in_relative_interior(g) || !c2.contains_in_relative_interior(g)) continue;
        ++out.qualifying;
        if (!p.contains(g)) {
          out.failures.push_back("cone " + to_string(pts[i]) + " " + to_string(pts[j]) + " meets edge cone " +
                                 to_string(ends[0]) + " " + to_string(ends[1]) + " in " + to_string(g));
        }
      }
    }
  }
  return out;
}

std::vector<std::pair<IntVector, Integer>> brute_force_facets(const std::vector<IntVector>& points) {
  const std::size_t d = points.front().size();
  std::set<std::pair<IntVector, Integer>> found;
  std::vector<std::size_t> idx(d);
  // All d-subsets in lexicographic order.
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  while (true) {
    std::vector<IntVector> diffs;
    for (std::size_t k = 1; k < d; ++k) diffs.push_back(sub(points[idx[k]], points[idx[0]]));
    std::vector<IntVector> ns = integer_nullspace(diffs, d);
    if (ns.size() == 1) {
      IntVector n = primitive(ns.front());
      const Integer c = dot(n, points[idx[0]]);
      bool ge = true, le = true;
      for (const auto& x : points) {
        Integer v = dot(n, x);
        ge = ge && v >= c;
        le = le && v <= c;
      }
      if (ge) found.insert({n, Integer(-c)});
      if (le) found.insert({scale(n, -1), Integer(c)});
    }
    std::size_t k = d;
    while (k > 0 && idx[k - 1] == points.size() - d + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t m = k; m < d; ++m) idx[m] = idx[m - 1] + 1;
  }
  return {found.begin(), found.end()};
}

std::vector<IntVector> brute_force_points(const std::vector<IntVector>& vertices) {
  const std::size_t d = vertices.front().size();
  auto facets = brute_force_facets(vertices);
  IntVector lo = vertices.front(), hi = vertices.front();
  for (const auto& v : vertices) {
    for (std::size_t i = 0; i < d; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  }
  std::vector<IntVector> out;
  IntVector x = lo;
  while (true) {
    bool inside = std::all_of(facets.begin(), facets.end(),
                              [&x](const auto& f) { return dot(f.first, x) >= -f.second; });
    if (inside) out.push_back(x);
    std::size_t i = d;
    while (i > 0 && x[i - 1] == hi[i - 1]) {
      x[i - 1] = lo[i - 1];
      --i;
    }
    if (i == 0) return out;
    ++x[i - 1];
  }
}

Integer cofactor_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, cc++) = m(r, k);
      }
    }
    Integer term = m(0, c) * cofactor_determinant(minor);
    det += (c % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

std::vector<std::vector<long>> random_invertible(std::mt19937& rng, long k) {
  std::uniform_int_distribution<long> dist(-k, k);
  while (true) {
    std::vector<std::vector<long>> l(3, std::vector<long>(3));
    IntMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        l[i][j] = dist(rng);
        m(i, j) = l[i][j];
      }
    }
    if (determinant(m) != 0) return l;
  }
}

Polynomial substitute_linear(const Polynomial& t, const std::vector<std::vector<long>>& l) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < 3; ++i) {
    Polynomial p(t.ring());
    for (std::size_t j = 0; j < 3; ++j) p += Polynomial::variable(t.ring(), j) * Rational(l[i][j]);
    images.push_back(p);
  }
  return t.substitute(images);
}

}  // namespace testkit
