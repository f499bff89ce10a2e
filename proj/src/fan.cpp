#include "cytrans/fan.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cytrans {

struct Fan::Data {
  std::size_t dim = 0;
  std::vector<IntVector> rays;
  std::vector<RayIndexSet> cones;
  std::map<IntVector, std::size_t, LexLess> index;

  mutable std::once_flag cones_once;
  mutable std::vector<Cone> cone_cache;
};

namespace {

const Fan::Data& require(const std::shared_ptr<const Fan::Data>& d) {
  if (!d) throw std::logic_error("use of an empty Fan");
  return *d;
}

std::vector<IntVector> gather(const Fan& f, const RayIndexSet& idx) {
  std::vector<IntVector> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(f.rays()[i]);
  return out;
}

// First dim-many linearly independent rays of a cone, as indices into idx.
std::vector<std::size_t> basis_positions(const std::vector<IntVector>& rays, std::size_t dim) {
  std::vector<std::size_t> pos;
  std::vector<IntVector> chosen;
  for (std::size_t i = 0; i < rays.size() && chosen.size() < dim; ++i) {
    chosen.push_back(rays[i]);
    if (rank(chosen) == chosen.size()) {
      pos.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  return pos;
}

// Facets of maximal cone i as global ray-index sets.
std::vector<RayIndexSet> cone_facets(const Fan& f, std::size_t i) {
  const Cone& c = f.cone(i);
  std::vector<RayIndexSet> out;
  for (const auto& local : c.facets()) {
    RayIndexSet global;
    for (auto l : local) global.push_back(*f.ray_index(c.rays()[l]));
    std::sort(global.begin(), global.end());
    out.push_back(std::move(global));
  }
  return out;
}

// Walls: facets shared by exactly two maximal cones.
struct Wall {
  RayIndexSet rays;
  std::size_t a;
  std::size_t b;
};

std::vector<Wall> walls(const Fan& f) {
  std::map<RayIndexSet, std::vector<std::size_t>> owners;
  for (std::size_t i = 0; i < f.max_cones().size(); ++i) {
    for (auto& fc : cone_facets(f, i)) owners[fc].push_back(i);
  }
  std::vector<Wall> out;
  for (auto& [rays, cones] : owners) {
    if (cones.size() == 2) out.push_back(Wall{rays, cones[0], cones[1]});
  }
  return out;
}

std::size_t ray_not_in(const RayIndexSet& cone, const RayIndexSet& wall) {
  for (auto r : cone) {
    if (!std::binary_search(wall.begin(), wall.end(), r)) return r;
  }
  throw std::logic_error("wall equals cone");
}

}  // namespace

Fan::Fan(std::size_t dim, std::vector<IntVector> rays, std::vector<RayIndexSet> max_cones) {
  auto d = std::make_shared<Data>();
  d->dim = dim;
  for (auto& r : rays) {
    if (r.size() != dim) throw std::invalid_argument("fan ray " + to_string(r) + " has wrong dimension");
    r = primitive(r);
    if (!d->index.emplace(r, d->rays.size()).second) {
      throw std::invalid_argument("duplicate fan ray " + to_string(r));
    }
    d->rays.push_back(r);
  }
  for (auto& c : max_cones) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (auto i : c) {
      if (i >= d->rays.size()) throw std::invalid_argument("cone references missing ray " + std::to_string(i));
    }
  }
  std::sort(max_cones.begin(), max_cones.end());
  max_cones.erase(std::unique(max_cones.begin(), max_cones.end()), max_cones.end());
  d->cones = std::move(max_cones);
  data_ = std::move(d);
}

std::size_t Fan::dim() const { return require(data_).dim; }
const std::vector<IntVector>& Fan::rays() const { return require(data_).rays; }
const std::vector<RayIndexSet>& Fan::max_cones() const { return require(data_).cones; }

const Cone& Fan::cone(std::size_t i) const {
  const Data& d = require(data_);
  std::call_once(d.cones_once, [&d] {
    d.cone_cache.reserve(d.cones.size());
    for (const auto& c : d.cones) {
      std::vector<IntVector> gens;
      for (auto r : c) gens.push_back(d.rays[r]);
      d.cone_cache.emplace_back(gens, d.dim);
    }
  });
  return d.cone_cache.at(i);
}

std::optional<std::size_t> Fan::ray_index(const IntVector& ray) const {
  const Data& d = require(data_);
  auto it = d.index.find(ray);
  if (it == d.index.end()) return std::nullopt;
  return it->second;
}

Fan Fan::canonical() const {
  std::vector<std::size_t> perm(rays().size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [this](std::size_t a, std::size_t b) { return LexLess{}(rays()[a], rays()[b]); });
  std::vector<std::size_t> where(perm.size());
  std::vector<IntVector> sorted;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    where[perm[i]] = i;
    sorted.push_back(rays()[perm[i]]);
  }
  std::vector<RayIndexSet> cones;
  for (const auto& c : max_cones()) {
    RayIndexSet m;
    for (auto r : c) m.push_back(where[r]);
    cones.push_back(std::move(m));
  }
  return Fan(dim(), std::move(sorted), std::move(cones));
}

bool Fan::operator==(const Fan& other) const {
  if (dim() != other.dim()) return false;
  Fan a = canonical();
  Fan b = other.canonical();
  return a.rays() == b.rays() && a.max_cones() == b.max_cones();
}

bool is_complete(const Fan& f) {
  std::map<RayIndexSet, std::size_t> count;
  for (std::size_t i = 0; i < f.max_cones().size(); ++i) {
    if (f.cone(i).dim() != f.dim()) return false;
    for (auto& fc : cone_facets(f, i)) ++count[fc];
  }
  if (count.empty()) return false;
  return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 2; });
}

std::vector<std::string> fan_violations(const Fan& f) {
  std::vector<std::string> out;
  const std::size_t k = f.max_cones().size();
  for (std::size_t i = 0; i < k; ++i) {
    if (f.cone(i).rays().size() != f.max_cones()[i].size()) {
      out.push_back("cone " + std::to_string(i) + " lists a non-extremal generator");
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      Cone inter = intersect_cones(f.cone(i), f.cone(j));
      if (!f.cone(i).has_face(inter) || !f.cone(j).has_face(inter)) {
        out.push_back("cones " + std::to_string(i) + " and " + std::to_string(j) +
                      " do not meet in a common face");
      }
    }
  }
  return out;
}

Fan face_fan(const LatticePolytope& p) {
  if (!p.origin_is_interior()) dual_vertices(p);  // throws with the separating facet
  std::vector<IntVector> rays;
  for (const auto& v : p.vertices()) rays.push_back(primitive(v));
  std::vector<RayIndexSet> cones;
  for (const auto& fc : p.facets()) {
    RayIndexSet c;
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
      if (dot(fc.normal, p.vertices()[i]) + fc.offset == 0) c.push_back(i);
    }
    cones.push_back(std::move(c));
  }
  return Fan(p.dim(), std::move(rays), std::move(cones));
}

FanIntersection intersect_fans(const Fan& a, const Fan& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("intersect_fans: dimension mismatch");
  if (!is_complete(a) || !is_complete(b)) {
    throw std::invalid_argument("intersect_fans: input fan is not complete");
  }
  std::vector<std::vector<IntVector>> pieces;
  std::set<IntVector, LexLess> fresh;
  for (std::size_t i = 0; i < a.max_cones().size(); ++i) {
    for (std::size_t j = 0; j < b.max_cones().size(); ++j) {
      Cone c = intersect_cones(a.cone(i), b.cone(j));
      if (c.dim() != a.dim()) continue;
      for (const auto& r : c.rays()) {
        if (!a.ray_index(r) && !b.ray_index(r)) fresh.insert(r);
      }
      pieces.push_back(c.rays());
    }
  }
  std::vector<IntVector> rays = a.rays();
  for (const auto& r : b.rays()) {
    if (!a.ray_index(r)) rays.push_back(r);
  }
  std::vector<IntVector> new_rays(fresh.begin(), fresh.end());
  rays.insert(rays.end(), new_rays.begin(), new_rays.end());
  std::map<IntVector, std::size_t, LexLess> index;
  for (std::size_t i = 0; i < rays.size(); ++i) index.emplace(rays[i], i);

  std::vector<RayIndexSet> cones;
  for (const auto& piece : pieces) {
    RayIndexSet c;
    for (const auto& r : piece) c.push_back(index.at(r));
    cones.push_back(std::move(c));
  }
  // Drop rays no maximal cone uses (rays of the inputs swallowed by the
  // refinement cannot occur for complete fans, but keep the list tight).
  std::vector<bool> used(rays.size(), false);
  for (const auto& c : cones) {
    for (auto r : c) used[r] = true;
  }
  std::vector<std::size_t> remap(rays.size());
  std::vector<IntVector> kept;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (used[i]) {
      remap[i] = kept.size();
      kept.push_back(rays[i]);
    }
  }
  for (auto& c : cones) {
    for (auto& r : c) r = remap[r];
  }
  return {Fan(a.dim(), std::move(kept), std::move(cones)), std::move(new_rays)};
}

RefinementCheck refines(const Fan& fine, const Fan& coarse) {
  for (std::size_t i = 0; i < fine.max_cones().size(); ++i) {
    const Cone& c = fine.cone(i);
    bool inside = false;
    for (std::size_t j = 0; j < coarse.max_cones().size() && !inside; ++j) {
      inside = coarse.cone(j).contains(c);
    }
    if (inside) continue;
    std::vector<std::size_t> meets;
    for (std::size_t j = 0; j < coarse.max_cones().size() && meets.size() < 2; ++j) {
      if (intersect_cones(c, coarse.cone(j)).dim() == fine.dim()) meets.push_back(j);
    }
    RefinementCheck out;
    if (meets.size() == 2) out.witness = Straddle{i, meets[0], meets[1]};
    return out;
  }
  return {true, std::nullopt};
}

bool is_simplicial(const Fan& f) {
  return std::all_of(f.max_cones().begin(), f.max_cones().end(),
                     [&f](const RayIndexSet& c) { return c.size() == f.dim(); });
}

bool is_smooth(const Fan& f) {
  if (!is_simplicial(f)) return false;
  for (const auto& c : f.max_cones()) {
    Integer d = determinant(IntMatrix::from_rows(gather(f, c)));
    if (abs(d) != 1) return false;
  }
  return true;
}

Fan pull_at(const Fan& f, const IntVector& ray_in) {
  IntVector ray = primitive(ray_in);
  std::vector<IntVector> rays = f.rays();
  std::size_t idx;
  if (auto existing = f.ray_index(ray)) {
    idx = *existing;
  } else {
    idx = rays.size();
    rays.push_back(ray);
  }
  std::vector<RayIndexSet> cones;
  for (std::size_t i = 0; i < f.max_cones().size(); ++i) {
    const Cone& c = f.cone(i);
    if (!c.contains(ray)) {
      cones.push_back(f.max_cones()[i]);
      continue;
    }
    const auto facets = cone_facets(f, i);
    for (std::size_t k = 0; k < facets.size(); ++k) {
      if (dot(c.facet_normals()[k], ray) == 0) continue;
      RayIndexSet joined = facets[k];
      joined.push_back(idx);
      cones.push_back(std::move(joined));
    }
  }
  return Fan(f.dim(), std::move(rays), std::move(cones));
}

Fan star_subdivide(const Fan& f, const IntVector& ray) {
  IntVector r = primitive(ray);
  if (f.ray_index(r)) throw std::invalid_argument("ray " + to_string(r) + " is already a ray of the fan");
  bool supported = false;
  for (std::size_t i = 0; i < f.max_cones().size() && !supported; ++i) supported = f.cone(i).contains(r);
  if (!supported) throw std::invalid_argument("ray " + to_string(r) + " lies outside the support of the fan");
  return pull_at(f, r);
}

Fan mpcp_subdivide(const LatticePolytope& p, const Fan& seed, const std::vector<IntVector>& order) {
  if (p.dim() != 2 && p.dim() != 3) {
    throw std::invalid_argument("construction only in dims 2-3; use verify_mpcp");
  }
  auto refl = is_reflexive(p);
  if (!refl.reflexive) throw std::invalid_argument("mpcp_subdivide requires a reflexive polytope");
  if (seed.dim() != p.dim()) throw std::invalid_argument("seed fan has the wrong dimension");
  std::vector<IntVector> boundary = boundary_lattice_points(p);
  std::set<IntVector, LexLess> on_boundary(boundary.begin(), boundary.end());
  for (const auto& r : seed.rays()) {
    if (!on_boundary.count(r)) {
      throw std::invalid_argument("seed ray " + to_string(r) + " is not a boundary lattice point");
    }
  }
  FanIntersection common = intersect_fans(seed, face_fan(p));
  for (const auto& r : common.new_rays) {
    if (!on_boundary.count(r)) {
      throw std::logic_error("intersection ray " + to_string(r) + " is not a lattice point of the polytope");
    }
  }
  Fan f = common.fan;
  const std::vector<IntVector>& sequence = order.empty() ? boundary : order;
  for (const auto& pt : sequence) {
    if (!on_boundary.count(pt)) {
      throw std::invalid_argument("pulling order contains " + to_string(pt) +
                                  ", not a boundary lattice point");
    }
    f = pull_at(f, pt);
  }
  for (const auto& pt : boundary) {
    if (!f.ray_index(pt)) f = pull_at(f, pt);
  }
  return f;
}

std::optional<RatVector> strictly_convex_support(const Fan& f) {
  const std::size_t r = f.rays().size();
  const std::size_t n = f.dim();
  LinearSystem sys(r);
  std::vector<std::vector<std::size_t>> bases;
  for (std::size_t i = 0; i < f.max_cones().size(); ++i) {
    const auto& idx = f.max_cones()[i];
    auto gens = gather(f, idx);
    auto pos = basis_positions(gens, n);
    if (pos.size() != n) return std::nullopt;
    std::vector<std::size_t> basis;
    std::vector<IntVector> cols;
    for (auto p : pos) {
      basis.push_back(idx[p]);
      cols.push_back(gens[p]);
    }
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (std::find(basis.begin(), basis.end(), idx[k]) != basis.end()) continue;
      auto c = *solve_combination(cols, gens[k]);
      RatVector row(r, Rational(0));
      row[idx[k]] += 1;
      for (std::size_t j = 0; j < n; ++j) row[basis[j]] -= c[j];
      sys.add(std::move(row), 0, Relation::Equal);
    }
    bases.push_back(std::move(basis));
  }
  // Gauge: the support function vanishes on the first cone.
  if (!bases.empty()) {
    for (auto b : bases.front()) {
      RatVector row(r, Rational(0));
      row[b] = 1;
      sys.add(std::move(row), 0, Relation::Equal);
    }
  }
  for (const auto& w : walls(f)) {
    std::size_t other = ray_not_in(f.max_cones()[w.b], w.rays);
    std::vector<IntVector> cols;
    for (auto b : bases[w.a]) cols.push_back(f.rays()[b]);
    auto c = *solve_combination(cols, f.rays()[other]);
    RatVector row(r, Rational(0));
    row[other] += 1;
    for (std::size_t j = 0; j < n; ++j) row[bases[w.a][j]] -= c[j];
    sys.add(std::move(row), 0, Relation::Greater);
  }
  Feasibility res = solve_feasibility(sys);
  if (!res.feasible) return std::nullopt;
  return res.witness;
}

bool is_elementary_simplex(const std::vector<IntVector>& gens) {
  if (gens.empty()) return true;
  const std::size_t n = gens.front().size();
  if (gens.size() == n) {
    Integer d = determinant(IntMatrix::from_rows(gens));
    if (abs(d) == 1) return true;
    if (d == 0) return false;
  }
  // Lattice points of the half-open parallelepiped sum lambda_i u_i, 0 <= lambda_i < 1.
  IntVector lo(n, Integer(0)), hi(n, Integer(0));
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] < 0) lo[i] += g[i];
      else hi[i] += g[i];
    }
  }
  IntVector x = lo;
  while (true) {
    if (auto lam = solve_combination(gens, x)) {
      bool inside = true;
      Rational total = 0;
      for (const auto& l : *lam) {
        if (l < 0 || l >= 1) inside = false;
        total += l;
      }
      if (inside && total == 1) return false;
    }
    std::size_t i = n;
    bool done = true;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        for (std::size_t j = i + 1; j < n; ++j) x[j] = lo[j];
        done = false;
        break;
      }
    }
    if (done) return true;
  }
}

MpcpCheck verify_mpcp(const Fan& f, const LatticePolytope& p) {
  MpcpCheck out;
  std::vector<IntVector> boundary = boundary_lattice_points(p);
  std::set<IntVector, LexLess> want(boundary.begin(), boundary.end());
  std::set<IntVector, LexLess> have(f.rays().begin(), f.rays().end());
  for (const auto& b : want) {
    if (!have.count(b)) out.violations.push_back("missing ray over boundary lattice point " + to_string(b));
  }
  for (const auto& h : have) {
    if (!want.count(h)) out.violations.push_back("ray " + to_string(h) + " is not a boundary lattice point");
  }
  for (std::size_t i = 0; i < f.max_cones().size(); ++i) {
    const auto& c = f.max_cones()[i];
    if (c.size() != f.dim()) {
      out.violations.push_back("cone " + std::to_string(i) + " is not simplicial");
    } else if (!is_elementary_simplex(gather(f, c))) {
      out.violations.push_back("cone " + std::to_string(i) + " is not over an elementary simplex");
    }
  }
  if (!is_complete(f)) {
    out.violations.push_back("fan is not complete");
  } else if (!strictly_convex_support(f)) {
    out.violations.push_back("fan is not projective (no strictly convex support function)");
  }
  auto ref = refines(f, face_fan(p));
  if (!ref.refines) out.violations.push_back("fan does not refine the face fan");
  out.ok = out.violations.empty();
  return out;
}

PLFunction::PLFunction(Fan fan, std::vector<Integer> ray_values)
    : fan_(std::move(fan)), values_(std::move(ray_values)) {
  if (values_.size() != fan_.rays().size()) {
    throw std::invalid_argument("PL function needs one value per ray");
  }
  for (std::size_t i = 0; i < fan_.max_cones().size(); ++i) {
    for (auto r : fan_.max_cones()[i]) {
      if (linear_on_cone(i, fan_.rays()[r]) != values_[r]) {
        throw std::invalid_argument("PL values are not linear on cone " + std::to_string(i));
      }
    }
  }
}

Rational PLFunction::linear_on_cone(std::size_t i, const IntVector& x) const {
  const auto& idx = fan_.max_cones()[i];
  auto gens = gather(fan_, idx);
  auto pos = basis_positions(gens, fan_.dim());
  std::vector<IntVector> cols;
  for (auto p : pos) cols.push_back(gens[p]);
  auto c = solve_combination(cols, x);
  if (!c) throw std::invalid_argument("point outside the span of cone " + std::to_string(i));
  Rational v = 0;
  for (std::size_t j = 0; j < pos.size(); ++j) v += (*c)[j] * values_[idx[pos[j]]];
  return v;
}

Rational PLFunction::operator()(const IntVector& n) const {
  for (std::size_t i = 0; i < fan_.max_cones().size(); ++i) {
    if (fan_.cone(i).contains(n)) return linear_on_cone(i, n);
  }
  throw std::invalid_argument("point " + to_string(n) + " outside the support of the fan");
}

PLFunction anticanonical_pl(const Fan& f) {
  return PLFunction(f, std::vector<Integer>(f.rays().size(), Integer(1)));
}

LatticePolytope newton_polytope(const PLFunction& phi) {
  const Fan& f = phi.fan();
  const std::size_t n = f.dim();
  std::vector<IntVector> ineq;
  for (std::size_t i = 0; i < f.rays().size(); ++i) {
    IntVector row = f.rays()[i];
    row.push_back(phi.ray_values()[i]);
    ineq.push_back(std::move(row));
  }
  IntVector t_nonneg(n + 1, Integer(0));
  t_nonneg[n] = 1;
  ineq.push_back(t_nonneg);
  ConeDescription d = cone_from_inequalities(ineq, {}, n + 1);
  if (!d.lineality.empty()) throw std::domain_error("Newton region is unbounded");
  std::vector<IntVector> verts;
  for (const auto& ray : d.rays) {
    if (ray[n] == 0) throw std::domain_error("Newton region is unbounded along " + to_string(ray));
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (ray[i] % ray[n] != 0) {
        throw std::domain_error("Newton polytope has a non-lattice vertex");
      }
      v[i] = ray[i] / ray[n];
    }
    verts.push_back(std::move(v));
  }
  return hull_to_facets(verts);
}

ConvexityCheck is_lower_convex(const PLFunction& phi) {
  const Fan& f = phi.fan();
  bool violated = false;
  const Wall* bad = nullptr;
  std::vector<Wall> ws = walls(f);
  for (const auto& w : ws) {
    std::size_t other = ray_not_in(f.max_cones()[w.b], w.rays);
    if (Rational(phi.ray_values()[other]) < phi.linear_on_cone(w.a, f.rays()[other])) {
      violated = true;
      bad = &w;
      break;
    }
  }
  ConvexityCheck out;
  if (!violated) return out;
  out.convex = false;

  // Prefer a witness built from two rays, largest violation first.
  Rational best = 0;
  for (std::size_t i = 0; i < f.rays().size(); ++i) {
    for (std::size_t j = i + 1; j < f.rays().size(); ++j) {
      IntVector s = add(f.rays()[i], f.rays()[j]);
      Rational lhs = phi(s);
      Rational rhs = Rational(phi.ray_values()[i]) + phi.ray_values()[j];
      if (lhs - rhs > best) {
        best = lhs - rhs;
        IntVector a = f.rays()[i], b = f.rays()[j];
        if (LexLess{}(a, b)) std::swap(a, b);
        out.witness = std::make_pair(a, b);
        out.value_of_sum = lhs;
        out.sum_of_values = rhs;
      }
    }
  }
  if (out.witness) return out;

  // Otherwise push two points off a point deep inside the offending wall.
  IntVector centre(f.dim(), Integer(0));
  for (auto r : bad->rays) centre = add(centre, f.rays()[r]);
  IntVector ua = f.rays()[ray_not_in(f.max_cones()[bad->a], bad->rays)];
  IntVector ub = f.rays()[ray_not_in(f.max_cones()[bad->b], bad->rays)];
  for (Integer k = 1; k < 1 << 20; k *= 2) {
    IntVector a = add(scale(centre, k), ua);
    IntVector b = add(scale(centre, k), ub);
    Rational lhs = phi(add(a, b));
    Rational rhs = phi(a) + phi(b);
    if (lhs > rhs) {
      out.witness = std::make_pair(a, b);
      out.value_of_sum = lhs;
      out.sum_of_values = rhs;
      return out;
    }
  }
  return out;
}

std::vector<std::size_t> constant_term_cover(const Fan& f, const std::vector<IntVector>& dual_pts) {
  std::vector<std::size_t> uncovered;
  for (std::size_t i = 0; i < f.max_cones().size(); ++i) {
    bool covered = false;
    for (const auto& m : dual_pts) {
      bool all = std::all_of(f.max_cones()[i].begin(), f.max_cones()[i].end(),
                             [&](std::size_t r) { return dot(m, f.rays()[r]) == -1; });
      if (all) {
        covered = true;
        break;
      }
    }
    if (!covered) uncovered.push_back(i);
  }
  return uncovered;
}

}  // namespace cytrans
