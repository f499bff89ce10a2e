#include "cytrans/report.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cytrans/cohomology.hpp"
#include "cytrans/hodge.hpp"
#include "cytrans/invariants.hpp"
#include "cytrans/io.hpp"

namespace cytrans {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(sep, pos);
    std::string item = trim(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (!item.empty()) out.push_back(item);
    if (next == std::string::npos) break;
    pos = next + sep.size();
  }
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

template <class T>
std::string join_numbers(const T& v) {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(std::to_string(x));
  return join(s, ",");
}

std::multiset<std::string> as_set(const std::string& s, const std::string& sep) {
  auto v = split(s, sep);
  return {v.begin(), v.end()};
}

std::multiset<std::string> as_cones(const std::string& s) {
  std::multiset<std::string> out;
  for (const auto& cone : split(s, ";")) {
    auto rays = split(cone, " ");
    std::sort(rays.begin(), rays.end());
    out.insert(join(rays, " "));
  }
  return out;
}

Ring span_ring() {
  std::vector<std::string> names;
  for (int i = 1; i <= 12; ++i) names.push_back("x" + std::to_string(i));
  static const Ring ring = make_ring(names);
  return ring;
}

std::size_t rank_of(const std::vector<Polynomial>& polys, const std::vector<Monomial>& monos) {
  std::vector<RatVector> rows;
  for (const auto& p : polys) {
    RatVector row(monos.size(), Rational(0));
    for (std::size_t i = 0; i < monos.size(); ++i) row[i] = p.coefficient(monos[i]);
    rows.push_back(row);
  }
  return rows.empty() ? 0 : rank(rows, monos.size());
}

bool same_span(const std::string& a, const std::string& b) {
  std::vector<Polynomial> pa, pb;
  for (const auto& s : split(a, ",")) pa.push_back(parse_polynomial(s, span_ring()));
  for (const auto& s : split(b, ",")) pb.push_back(parse_polynomial(s, span_ring()));
  std::set<Monomial> monos;
  for (const auto* list : {&pa, &pb}) {
    for (const auto& p : *list) {
      for (const auto& [m, c] : p.terms()) monos.insert(m);
    }
  }
  std::vector<Monomial> mv(monos.begin(), monos.end());
  std::vector<Polynomial> both = pa;
  both.insert(both.end(), pb.begin(), pb.end());
  const std::size_t r = rank_of(both, mv);
  return rank_of(pa, mv) == r && rank_of(pb, mv) == r;
}

}  // namespace

std::map<std::string, Expectation> read_expectations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::map<std::string, Expectation> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find(" = ");
    std::istringstream head(t.substr(0, eq));
    std::string kind, key, extra;
    head >> kind >> key;
    if (eq == std::string::npos || key.empty() || (head >> extra)) {
      throw ParseError(path, n, "expected '<kind> <key> = <value>'");
    }
    if (out.count(key)) throw ParseError(path, n, "duplicate key " + key);
    out[key] = Expectation{kind, trim(t.substr(eq + 3)), n};
  }
  return out;
}

bool matches(const Expectation& e, const std::string& actual,
             const std::shared_ptr<const GradedQuotientRing>& ring) {
  if (e.kind == "eq" || e.kind == "note") return trim(actual) == e.value;
  if (e.kind == "set") return as_set(actual, ", ") == as_set(e.value, ", ");
  if (e.kind == "cones") return as_cones(actual) == as_cones(e.value);
  if (e.kind == "span") {
    try {
      return same_span(actual, e.value);
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  if (e.kind == "prop") {
    try {
      return proportional(parse_polynomial(actual, lower_abc_ring()), parse_polynomial(e.value, lower_abc_ring()));
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  if (e.kind == "classes") {
    if (!ring) throw std::invalid_argument("classes comparison without a ring");
    auto want = split(e.value, ",");
    auto got = split(actual, ",");
    if (want.size() != got.size()) return false;
    try {
      for (std::size_t i = 0; i < want.size(); ++i) {
        Polynomial a = ring->normal_form(parse_polynomial(want[i], ring->ring()));
        Polynomial b = ring->normal_form(parse_polynomial(got[i], ring->ring()));
        if (a != b) return false;
      }
    } catch (const std::invalid_argument&) {
      return false;
    }
    return true;
  }
  throw std::invalid_argument("unknown expectation kind '" + e.kind + "'");
}

namespace {

struct Family {
  std::string key;
  std::string label;
  std::string fan_file;
  bool full;  // report the presentation and quotient basis too
};

const std::vector<Family>& families() {
  static const std::vector<Family> f = {
      {"bl", "X_bl", "sigma_bl.fan", true},
      {"delta2", "X(delta2)", "sigma_delta2.fan", true},
      {"delta3", "X(delta3)", "mpcp_delta3.fan", false},
      {"delta4", "X(delta4)", "fan_delta4.fan", false},
      {"delta5_1", "X1(delta5)", "mpcp1_delta5.fan", false},
      {"delta5_2", "X2(delta5)", "mpcp2_delta5.fan", false},
  };
  return f;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string rays_of(const Fan& f, const RayIndexSet& cone) {
  std::vector<std::string> r;
  for (auto i : cone) r.push_back(to_string(f.rays()[i]));
  return join(r, " ");
}

std::string polys(const std::vector<Polynomial>& ps) {
  std::vector<std::string> s;
  for (const auto& p : ps) s.push_back(p.to_string());
  return join(s);
}

}  // namespace

std::vector<ReportEntry> compute_report(const std::string& data_dir) {
  std::vector<ReportEntry> out;
  std::string section;
  auto put = [&](const std::string& key, const std::string& value) { out.push_back({section, key, value, nullptr}); };
  auto poly = [&](const std::string& n) { return load_polytope(data_dir + "/polytopes/" + n + ".poly"); };
  auto fan = [&](const std::string& n) { return load_fan(data_dir + "/fans/" + n); };

  section = "obstruction";
  const LatticePolytope d1 = poly("delta1"), d2 = poly("delta2");
  const Fan s1 = fan("sigma_delta1.fan"), s2 = fan("sigma_delta2.fan"), bl = fan("sigma_bl.fan");
  put("delta1.reflexive", bool_str(is_reflexive(d1).reflexive));
  put("delta2.reflexive", bool_str(is_reflexive(d2).reflexive));
  put("delta1.subset_of_delta2",
      bool_str(std::all_of(d1.vertices().begin(), d1.vertices().end(), [&](const IntVector& v) { return d2.contains(v); })));
  put("sigma_delta1.is_face_fan", bool_str(s1.canonical() == face_fan(d1).canonical()));
  put("sigma_delta2.is_face_fan", bool_str(s2.canonical() == face_fan(d2).canonical()));
  put("sigma_delta1.smooth", bool_str(is_smooth(s1)));
  put("sigma_delta2.smooth", bool_str(is_smooth(s2)));
  put("sigma_delta2.cones", std::to_string(s2.max_cones().size()));
  const LatticePolytope d2dual = dual(d2);
  {
    std::vector<std::string> v;
    for (const auto& x : d2dual.vertices()) v.push_back(to_string(x));
    put("dual_delta2.vertices", join(v));
  }
  FanIntersection inter = intersect_fans(s1, s2);
  {
    std::vector<std::string> v;
    for (const auto& r : inter.new_rays) v.push_back(to_string(r));
    put("intersection.new_rays", join(v));
    bool in1 = false, in2 = false;
    for (const auto& r : inter.new_rays) {
      in1 = in1 || d1.contains(r);
      in2 = in2 || d2.contains(r);
    }
    put("new_ray.in_delta1", bool_str(in1));
    put("new_ray.in_delta2", bool_str(in2));
  }
  RefinementCheck ref = refines(s2, s1);
  put("refines.sigma_delta2.sigma_delta1", bool_str(ref.refines));
  if (ref.witness) {
    put("refines.witness", "cone " + rays_of(s2, s2.max_cones()[ref.witness->fine_cone]) + " meets " +
                               rays_of(s1, s1.max_cones()[ref.witness->coarse_a]) + " and " +
                               rays_of(s1, s1.max_cones()[ref.witness->coarse_b]));
  }
  Fan star = star_subdivide(star_subdivide(s1, make_ivec({1, 1, 1, 1})), make_ivec({0, 0, 0, -1}));
  put("sigma_bl.from_star_subdivisions", bool_str(star.canonical() == bl.canonical()));
  put("sigma_bl.smooth", bool_str(is_smooth(bl)));
  put("sigma_bl.cones", std::to_string(bl.max_cones().size()));
  {
    ConvexityCheck c = is_lower_convex(anticanonical_pl(bl));
    if (c.convex) {
      put("phi_bl.convexity", "lower convex");
    } else {
      put("phi_bl.convexity", "not lower convex; witness " + to_string(c.witness->first) + "+" +
                                  to_string(c.witness->second) + ": " + to_string(c.value_of_sum) + " > " +
                                  to_string(c.sum_of_values));
    }
  }
  const LatticePolytope newt2 = newton_polytope(anticanonical_pl(s2));
  const LatticePolytope newt_bl = newton_polytope(anticanonical_pl(bl));
  put("newt_phi2.equals_dual_delta2", bool_str(newt2 == d2dual));
  put("newt_phi2.inside_newt_phi_bl", bool_str(std::all_of(newt2.vertices().begin(), newt2.vertices().end(),
                                                           [&](const IntVector& v) { return newt_bl.contains(v); })));

  section = "cut cube";
  const LatticePolytope cube = poly("cutcube");
  ReflexivityCheck rc = is_reflexive(cube);
  put("cutcube.reflexive", bool_str(rc.reflexive));
  if (rc.violating) {
    std::vector<std::string> v;
    for (const auto& x : cube.vertices()) {
      if (dot(rc.violating->normal, x) == -rc.violating->offset) v.push_back(to_string(x));
    }
    put("cutcube.violating_facet", join(v));
    put("cutcube.violating_offset", rc.violating->offset.get_str());
  }
  put("cutcube.face_fan.smooth", bool_str(is_smooth(face_fan(cube))));
  {
    Cone c1({make_ivec({1, 1, 1}), make_ivec({-1, 1, 0})}, 3);
    Cone c2({make_ivec({0, 1, 0}), make_ivec({0, 0, 1})}, 3);
    Cone c = intersect_cones(c1, c2);
    std::vector<std::string> v;
    for (const auto& r : c.rays()) v.push_back(to_string(r));
    put("cone_intersection", join(v));
    put("cone_intersection.in_cutcube", bool_str(!c.rays().empty() && cube.contains(c.rays().front())));
  }

  section = "constant term cover";
  {
    std::vector<std::string> cones;
    for (auto i : constant_term_cover(bl, d2dual.vertices())) cones.push_back(rays_of(bl, bl.max_cones()[i]));
    put("sigma_bl.uncovered", join(cones, "; "));
    put("sigma_delta1.uncovered", std::to_string(constant_term_cover(s1, dual(d1).vertices()).size()));
  }

  std::map<std::string, InvariantReport> reports;
  for (const auto& fam : families()) {
    section = fam.label;
    const Fan f = fan(fam.fan_file);
    const std::string k = fam.key + ".";
    {
      std::vector<std::string> v;
      for (const auto& r : f.rays()) v.push_back(to_string(r));
      put(k + "rays", join(v));
    }
    put(k + "smooth", bool_str(is_smooth(f)));
    Ring ring = ray_ring(f);
    put(k + "sr", polys(stanley_reisner_ideal(f, ring).generators()));
    GradedQuotientRing h = cohomology_ring(f);
    if (fam.full) put(k + "j", polys(linear_ideal(f, ring).generators()));
    {
      std::vector<std::string> b;
      for (unsigned d = 0; d <= h.top_degree(); ++d) {
        for (const auto& m : h.basis(d)) b.push_back(ring->format(m));
      }
      put(k + "basis", join(b));
      out.back().ring = std::make_shared<const GradedQuotientRing>(h);
    }
    put(k + "betti", join_numbers(betti(h)));
    const Polynomial y = hypersurface_class(h);
    put(k + "y", y.to_string());
    CupKernel ker = cup_kernel(h, y);
    for (std::size_t d = 0; d < ker.by_degree.size(); ++d) {
      if (!ker.by_degree[d].empty()) put(k + "kernel.h" + std::to_string(2 * d), polys(ker.by_degree[d]));
    }
    InvariantReport r = family_report(fam.label, f);
    put(k + "cy_betti", join_numbers(*r.betti));
    put(k + "trilinear_basis", r.basis_note);
    put(k + "t", r.t.to_string());
    put(k + "milnor", r.milnor_finite ? "finite (" + join_numbers(r.milnor_dims) + ")" : "infinite");
    if (r.T) put(k + "T", r.T->to_string());
    if (r.factor) {
      put(k + "factor_type", format_degrees(r.factor->degrees));
      put(k + "factor_method", r.factor->method);
      if (r.factor->linear_factor) put(k + "linear_factor", r.factor->linear_factor->to_string());
    }
    reports.emplace(fam.key, r);
  }

  section = "hodge numbers";
  for (const char* n : {"delta1", "delta2", "delta3", "delta4", "delta5"}) {
    const LatticePolytope p = poly(n);
    HodgePair h = hodge_numbers(p);
    HodgePair m = hodge_numbers(dual(p));
    put(std::string(n) + ".hodge", "(" + std::to_string(h.h11) + ", " + std::to_string(h.h21) + ")");
    put(std::string(n) + ".mirror_swap", bool_str(m.h11 == h.h21 && m.h21 == h.h11));
  }

  section = "comparison";
  const InvariantReport& xbl = reports.at("bl");
  for (const auto& fam : families()) {
    if (fam.key == "bl") continue;
    Verdict v = compare_families(xbl, reports.at(fam.key));
    put("compare.bl." + fam.key, v.distinct ? "distinct" : "inconclusive");
    put("compare.bl." + fam.key + ".reason", v.reason);
  }
  return out;
}

ReportResult paper_report(const std::string& data_dir, const std::string& format) {
  if (format != "text" && format != "kv") throw std::invalid_argument("unknown report format '" + format + "'");
  auto expected = read_expectations(data_dir + "/expected/report.expected");
  std::vector<ReportEntry> entries = compute_report(data_dir);
  ReportResult res;
  std::ostringstream os;
  std::set<std::string> seen;
  std::string section;
  std::vector<std::string> problems;
  for (const auto& e : entries) {
    seen.insert(e.key);
    auto it = expected.find(e.key);
    std::string mark;
    if (it != expected.end()) {
      bool ok = matches(it->second, e.value, e.ring);
      if (it->second.kind == "note") {
        mark = ok ? "  [note: matches]" : "  [note: differs from " + it->second.value + "]";
      } else {
        ++res.checked;
        if (ok) {
          mark = "  [ok]";
        } else {
          ++res.mismatches;
          mark = "  [MISMATCH]";
          problems.push_back(e.key + "\n  expected (" + it->second.kind + "): " + it->second.value +
                             "\n  actual: " + e.value);
        }
      }
    }
    if (format == "text") {
      if (e.section != section) {
        if (!section.empty()) os << "\n";
        os << "== " << e.section << "\n";
        section = e.section;
      }
      os << e.key << ": " << e.value << mark << "\n";
    } else {
      os << e.key << ": " << e.value << "\n";
    }
  }
  for (const auto& [key, exp] : expected) {
    if (seen.count(key)) continue;
    ++res.checked;
    ++res.mismatches;
    problems.push_back(key + "\n  expected (" + exp.kind + "): " + exp.value + "\n  actual: (not computed)");
  }
  if (format == "text") {
    if (!problems.empty()) {
      os << "\n== mismatches\n";
      for (const auto& p : problems) os << p << "\n";
    }
    os << "\nchecked " << res.checked << " values, " << res.mismatches << " mismatches\n";
  } else {
    os << "checked: " << res.checked << "\nmismatches: " << res.mismatches << "\n";
  }
  res.text = os.str();
  return res;
}

}  // namespace cytrans
