#include "cytrans/polytope.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "cytrans/cone.hpp"

namespace cytrans {

struct LatticePolytope::Data {
  std::size_t dim = 0;
  std::vector<IntVector> vertices;
  std::vector<Facet> facets;

  mutable std::once_flag points_once;
  mutable std::vector<IntVector> points;
};

namespace {

const LatticePolytope::Data& require(const std::shared_ptr<const LatticePolytope::Data>& d) {
  if (!d) throw std::logic_error("use of an empty LatticePolytope");
  return *d;
}

std::size_t affine_rank(const std::vector<IntVector>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  return rank(diffs);
}

std::vector<IntVector> enumerate_box(const LatticePolytope& p) {
  const std::size_t n = p.dim();
  IntVector lo = p.vertices().front(), hi = p.vertices().front();
  for (const auto& v : p.vertices()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  }
  std::vector<IntVector> out;
  IntVector x = lo;
  while (true) {
    if (p.contains(x)) out.push_back(x);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        for (std::size_t j = i + 1; j < n; ++j) x[j] = lo[j];
        break;
      }
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace

std::size_t LatticePolytope::dim() const { return require(data_).dim; }
const std::vector<IntVector>& LatticePolytope::vertices() const { return require(data_).vertices; }
const std::vector<Facet>& LatticePolytope::facets() const { return require(data_).facets; }

bool LatticePolytope::contains(const IntVector& x) const {
  for (const auto& f : facets()) {
    if (dot(f.normal, x) + f.offset < 0) return false;
  }
  return true;
}

std::vector<std::size_t> LatticePolytope::tight_facets(const IntVector& x) const {
  std::vector<std::size_t> out;
  const auto& fs = facets();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (dot(fs[i].normal, x) + fs[i].offset == 0) out.push_back(i);
  }
  return out;
}

bool LatticePolytope::origin_is_interior() const {
  return std::all_of(facets().begin(), facets().end(), [](const Facet& f) { return f.offset > 0; });
}

bool LatticePolytope::operator==(const LatticePolytope& other) const {
  std::set<IntVector, LexLess> a(vertices().begin(), vertices().end());
  std::set<IntVector, LexLess> b(other.vertices().begin(), other.vertices().end());
  return a == b;
}

LatticePolytope hull_to_facets(const std::vector<IntVector>& points) {
  if (points.empty()) throw std::invalid_argument("polytope needs at least one point");
  const std::size_t n = points.front().size();
  for (const auto& p : points) {
    if (p.size() != n) throw std::invalid_argument("points have inconsistent dimensions");
  }
  const std::size_t r = affine_rank(points);
  if (r < n) {
    throw std::invalid_argument("polytope not full-dimensional (affine rank " + std::to_string(r) +
                                " in dimension " + std::to_string(n) + ")");
  }
  std::vector<IntVector> homog;
  for (const auto& p : points) {
    IntVector h = p;
    h.emplace_back(1);
    homog.push_back(std::move(h));
  }
  ConeDescription dual = cone_from_inequalities(homog, {}, n + 1);
  if (!dual.lineality.empty()) throw std::logic_error("hull: unexpected lineality");

  auto data = std::make_shared<LatticePolytope::Data>();
  data->dim = n;
  for (const auto& ray : dual.rays) {
    IntVector normal(ray.begin(), ray.end() - 1);
    normal = primitive(normal);
    Integer mn = dot(normal, points.front());
    for (const auto& p : points) mn = std::min(mn, Integer(dot(normal, p)));
    data->facets.push_back(Facet{normal, -mn});
  }
  std::sort(data->facets.begin(), data->facets.end(),
            [](const Facet& a, const Facet& b) { return LexLess{}(a.normal, b.normal); });

  std::set<IntVector, LexLess> seen;
  for (const auto& p : points) {
    if (seen.count(p)) continue;
    std::vector<IntVector> tight;
    for (const auto& f : data->facets) {
      if (dot(f.normal, p) + f.offset == 0) tight.push_back(f.normal);
    }
    if (rank(tight) == n) {
      data->vertices.push_back(p);
      seen.insert(p);
    }
  }
  LatticePolytope out;
  out.data_ = std::move(data);
  return out;
}

std::vector<RatVector> dual_vertices(const LatticePolytope& p) {
  std::vector<RatVector> out;
  for (const auto& f : p.facets()) {
    if (f.offset <= 0) {
      throw std::domain_error("origin not interior: separated by facet <" + to_string(f.normal) +
                              ",x> >= " + Integer(-f.offset).get_str());
    }
    RatVector v;
    for (const auto& c : f.normal) {
      Rational q(c, f.offset);
      q.canonicalize();
      v.push_back(q);
    }
    out.push_back(std::move(v));
  }
  return out;
}

LatticePolytope dual(const LatticePolytope& p) {
  std::vector<IntVector> verts;
  for (const auto& v : dual_vertices(p)) {
    IntVector iv;
    for (const auto& q : v) {
      if (q.get_den() != 1) {
        throw std::domain_error("dual is not a lattice polytope: vertex " + to_string(v));
      }
      iv.push_back(q.get_num());
    }
    verts.push_back(std::move(iv));
  }
  return hull_to_facets(verts);
}

ReflexivityCheck is_reflexive(const LatticePolytope& p) {
  dual_vertices(p);  // origin check
  for (const auto& f : p.facets()) {
    if (f.offset != 1) return {false, f};
  }
  return {true, std::nullopt};
}

const std::vector<IntVector>& LatticePolytope::points() const {
  const Data& d = require(data_);
  std::call_once(d.points_once, [this, &d] { d.points = enumerate_box(*this); });
  return d.points;
}

std::vector<IntVector> lattice_points(const LatticePolytope& p) { return p.points(); }

std::vector<IntVector> boundary_lattice_points(const LatticePolytope& p) {
  std::vector<IntVector> out;
  for (const auto& x : p.points()) {
    if (!p.tight_facets(x).empty()) out.push_back(x);
  }
  return out;
}

namespace {

Face make_face(const LatticePolytope& p, std::vector<std::size_t> verts) {
  Face f;
  f.parent = p;
  std::sort(verts.begin(), verts.end());
  std::vector<IntVector> pts;
  for (auto i : verts) pts.push_back(p.vertices()[i]);
  f.dim = affine_rank(pts);
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    const auto& fc = p.facets()[i];
    bool all = std::all_of(pts.begin(), pts.end(),
                           [&fc](const IntVector& x) { return dot(fc.normal, x) + fc.offset == 0; });
    if (all) f.facet_indices.push_back(i);
  }
  f.vertex_indices = std::move(verts);
  return f;
}

}  // namespace

std::vector<Face> faces(const LatticePolytope& p, std::size_t d) {
  if (d >= p.dim()) {
    throw std::out_of_range("face dimension " + std::to_string(d) + " out of range for a " +
                            std::to_string(p.dim()) + "-dimensional polytope");
  }
  const auto& verts = p.vertices();
  std::vector<std::vector<std::size_t>> facet_sets;
  for (const auto& fc : p.facets()) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (dot(fc.normal, verts[i]) + fc.offset == 0) s.push_back(i);
    }
    facet_sets.push_back(std::move(s));
  }
  // Closure of the facet vertex sets under intersection.
  std::set<std::vector<std::size_t>> all(facet_sets.begin(), facet_sets.end());
  std::vector<std::vector<std::size_t>> frontier(facet_sets.begin(), facet_sets.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& s : frontier) {
      for (const auto& f : facet_sets) {
        std::vector<std::size_t> inter;
        std::set_intersection(s.begin(), s.end(), f.begin(), f.end(), std::back_inserter(inter));
        if (inter.empty()) continue;
        if (all.insert(inter).second) next.push_back(std::move(inter));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Face> out;
  for (const auto& s : all) {
    Face f = make_face(p, s);
    if (f.dim == d) out.push_back(std::move(f));
  }
  return out;
}

Face dual_face(const Face& f) {
  const LatticePolytope& p = f.parent;
  if (!is_reflexive(p).reflexive) throw std::domain_error("dual_face requires a reflexive polytope");
  LatticePolytope d = dual(p);
  // dual(p) keeps one vertex per facet of p, in facet order.
  return make_face(d, f.facet_indices);
}

std::size_t interior_lattice_point_count(const Face& f) {
  std::size_t count = 0;
  for (const auto& x : f.parent.points()) {
    if (f.parent.tight_facets(x) == f.facet_indices) ++count;
  }
  return count;
}

std::size_t interior_lattice_point_count(const LatticePolytope& p) {
  return interior_lattice_point_count(whole(p));
}

Face whole(const LatticePolytope& p) {
  Face f;
  f.parent = p;
  f.dim = p.dim();
  for (std::size_t i = 0; i < p.vertices().size(); ++i) f.vertex_indices.push_back(i);
  return f;
}

}  // namespace cytrans
