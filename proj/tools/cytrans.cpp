// cytrans: command-line front end.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cytrans/cohomology.hpp"
#include "cytrans/fan.hpp"
#include "cytrans/hodge.hpp"
#include "cytrans/invariants.hpp"
#include "cytrans/io.hpp"
#include "cytrans/polytope.hpp"
#include "cytrans/report.hpp"

using namespace cytrans;

namespace {

struct Config {
  std::string order = "degrevlex";
  std::string basis;
  std::string top;
  unsigned height = 20;
  std::string format = "text";
  std::string out;
  std::string data = CYTRANS_DATA_DIR;
  std::vector<std::string> files;
  std::vector<std::string> star;
  std::string seed;
  int face_dim = -1;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

IntVector parse_ray(const std::string& text) {
  std::string t = text;
  for (char& c : t) {
    if (c == ',' || c == '(' || c == ')') c = ' ';
  }
  std::istringstream in(t);
  std::vector<long> v;
  long x;
  while (in >> x) v.push_back(x);
  if (v.empty() || !in.eof()) throw std::invalid_argument("cannot read lattice vector '" + text + "'");
  IntVector out;
  for (long e : v) out.push_back(Integer(e));
  return out;
}

std::string rays_str(const Fan& f, const RayIndexSet& cone) {
  std::string s;
  for (auto i : cone) s += (s.empty() ? "" : " ") + to_string(f.rays()[i]);
  return s;
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

MonomialOrder order_of(const Config& c) {
  if (c.order == "degrevlex") return MonomialOrder::DegRevLex;
  if (c.order == "lex") return MonomialOrder::Lex;
  throw std::invalid_argument("unknown monomial order '" + c.order + "' (degrevlex or lex)");
}

GradedQuotientRing ring_for(const Fan& f, const Config& c) {
  Ring ring = with_order(ray_ring(f), order_of(c));
  return GradedQuotientRing(linear_ideal(f, ring) + stanley_reisner_ideal(f, ring), 2);
}

std::optional<TrilinearChoice> choice_for(const GradedQuotientRing& r, const CupKernel& k, const Config& c) {
  if (c.basis.empty() && c.top.empty()) return std::nullopt;
  TrilinearChoice choice = default_trilinear_choice(r, k);
  if (!c.basis.empty()) {
    choice.basis.clear();
    std::string t = c.basis;
    for (char& ch : t) {
      if (ch == ',') ch = ' ';
    }
    std::istringstream in(t);
    std::size_t i;
    while (in >> i) {
      if (i < 1 || i > r.ring()->nvars()) throw std::invalid_argument("--basis index out of range: " + std::to_string(i));
      choice.basis.push_back(Polynomial::variable(r.ring(), i - 1));
    }
    if (choice.basis.size() != 3 || !in.eof()) throw std::invalid_argument("--basis needs three indices i,j,k");
  }
  if (!c.top.empty()) choice.top = parse_polynomial(c.top, r.ring());
  return choice;
}

// Milnor data for a cubic file, or the full pipeline for a fan file.
InvariantReport report_for(const std::string& path, const Config& c) {
  if (ends_with(path, ".fan")) {
    Fan f = load_fan(path);
    GradedQuotientRing r = ring_for(f, c);
    CupKernel k = cup_kernel(r, hypersurface_class(r));
    TrilinearChoice choice = choice_for(r, k, c).value_or(default_trilinear_choice(r, k));
    CubicForm t(trilinear_form(r, k, choice));
    InvariantReport rep = invariant_report(path, t, cy_betti(r, k), c.height);
    rep.basis_note = "(" + choice.basis[0].to_string() + ", " + choice.basis[1].to_string() + ", " +
                     choice.basis[2].to_string() + "), top " + choice.top.to_string();
    return rep;
  }
  return invariant_report(path, CubicForm(load_cubic(path)), std::nullopt, c.height);
}

int polytope_check(const Config& c, std::ostream& os) {
  LatticePolytope p = load_polytope(c.files.at(0));
  ReflexivityCheck r = is_reflexive(p);
  os << "reflexive: " << (r.reflexive ? "true" : "false") << ", facets: " << p.facets().size() << "\n";
  if (r.violating) {
    os << "violating facet: normal " << to_string(r.violating->normal) << ", offset " << r.violating->offset
       << ", vertices";
    for (const auto& v : p.vertices()) {
      if (dot(r.violating->normal, v) == -r.violating->offset) os << " " << to_string(v);
    }
    os << "\n";
  }
  return 0;
}

int polytope_dual(const Config& c, std::ostream& os) {
  LatticePolytope p = load_polytope(c.files.at(0));
  if (is_reflexive(p).reflexive) {
    os << format_polytope(dual(p));
  } else {
    os << "# dual has non-integral vertices\n";
    for (const auto& v : dual_vertices(p)) os << to_string(v) << "\n";
  }
  return 0;
}

int polytope_points(const Config& c, std::ostream& os) {
  LatticePolytope p = load_polytope(c.files.at(0));
  const auto& pts = lattice_points(p);
  os << "points: " << pts.size() << ", boundary: " << boundary_lattice_points(p).size()
     << ", interior: " << interior_lattice_point_count(p) << "\n";
  for (const auto& x : pts) os << to_string(x) << "\n";
  return 0;
}

int polytope_faces(const Config& c, std::ostream& os) {
  LatticePolytope p = load_polytope(c.files.at(0));
  if (c.face_dim >= 0) {
    if (static_cast<std::size_t>(c.face_dim) >= p.dim()) throw std::invalid_argument("--dim out of range");
    for (const auto& f : faces(p, static_cast<std::size_t>(c.face_dim))) {
      os << "l*=" << interior_lattice_point_count(f) << ":";
      for (auto i : f.vertex_indices) os << " " << to_string(p.vertices()[i]);
      os << "\n";
    }
    return 0;
  }
  for (std::size_t d = 0; d < p.dim(); ++d) os << "dim " << d << ": " << faces(p, d).size() << "\n";
  return 0;
}

int fan_build(const Config& c, std::ostream& os) {
  Fan f = face_fan(load_polytope(c.files.at(0)));
  for (const auto& r : c.star) f = star_subdivide(f, parse_ray(r));
  os << format_fan(f);
  return 0;
}

int fan_intersect(const Config& c, std::ostream& os) {
  FanIntersection r = intersect_fans(load_fan(c.files.at(0)), load_fan(c.files.at(1)));
  if (r.new_rays.empty()) os << "new rays: none\n";
  for (const auto& v : r.new_rays) os << "new ray: " << to_string(v) << "\n";
  os << "cones: " << r.fan.max_cones().size() << "\n";
  if (c.format == "kv") os << format_fan(r.fan);
  return 0;
}

int fan_refines(const Config& c, std::ostream& os) {
  Fan fine = load_fan(c.files.at(0)), coarse = load_fan(c.files.at(1));
  RefinementCheck r = refines(fine, coarse);
  os << (r.refines ? "true" : "false") << "\n";
  if (r.witness) {
    os << "witness: cone " << rays_str(fine, fine.max_cones()[r.witness->fine_cone]) << " straddles "
       << rays_str(coarse, coarse.max_cones()[r.witness->coarse_a]) << " and "
       << rays_str(coarse, coarse.max_cones()[r.witness->coarse_b]) << "\n";
  }
  return 0;
}

int fan_mpcp(const Config& c, std::ostream& os) {
  LatticePolytope p = load_polytope(c.files.at(0));
  Fan seed = c.seed.empty() ? face_fan(p) : load_fan(c.seed);
  os << format_fan(mpcp_subdivide(p, seed));
  return 0;
}

int fan_verify(const Config& c, std::ostream& os) {
  MpcpCheck r = verify_mpcp(load_fan(c.files.at(0)), load_polytope(c.files.at(1)));
  os << "mpcp: " << (r.ok ? "true" : "false") << "\n";
  for (const auto& v : r.violations) os << "violation: " << v << "\n";
  return r.ok ? 0 : 1;
}

int fan_convexity(const Config& c, std::ostream& os) {
  ConvexityCheck r = is_lower_convex(anticanonical_pl(load_fan(c.files.at(0))));
  if (r.convex) {
    os << "lower convex\n";
  } else {
    os << "not lower convex; witness " << to_string(r.witness->first) << "+" << to_string(r.witness->second) << ": "
       << to_string(r.value_of_sum) << " > " << to_string(r.sum_of_values) << "\n";
  }
  return 0;
}

int fan_cover(const Config& c, std::ostream& os) {
  Fan f = load_fan(c.files.at(0));
  LatticePolytope d = dual(load_polytope(c.files.at(1)));
  auto cones = constant_term_cover(f, d.vertices());
  os << "uncovered cones: " << cones.size() << "\n";
  for (auto i : cones) os << rays_str(f, f.max_cones()[i]) << "\n";
  return 0;
}

std::string polys(const std::vector<Polynomial>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : ", ") + p.to_string();
  return s;
}

int topology_cohomology(const Config& c, std::ostream& os) {
  Fan f = load_fan(c.files.at(0));
  GradedQuotientRing r = ring_for(f, c);
  const Ring& ring = r.ring();
  os << "sr: " << polys(stanley_reisner_ideal(f, ring).generators()) << "\n";
  os << "j: " << polys(linear_ideal(f, ring).generators()) << "\n";
  os << "betti: " << join_sizes(betti(r)) << "\n";
  for (unsigned d = 0; d <= r.top_degree(); ++d) {
    os << "basis.h" << 2 * d << ":";
    for (const auto& m : r.basis(d)) os << " " << ring->format(m);
    os << "\n";
  }
  Polynomial y = hypersurface_class(r);
  os << "y: " << y.to_string() << "\n";
  CupKernel k = cup_kernel(r, y);
  for (std::size_t d = 0; d < k.by_degree.size(); ++d) {
    if (!k.by_degree[d].empty()) os << "kernel.h" << 2 * d << ": " << polys(k.by_degree[d]) << "\n";
  }
  auto b = cy_betti(r, k);
  os << "cy_betti: " << join_sizes({b.begin(), b.end()}) << "\n";
  return 0;
}

int topology_trilinear(const Config& c, std::ostream& os) {
  Fan f = load_fan(c.files.at(0));
  GradedQuotientRing r = ring_for(f, c);
  CupKernel k = cup_kernel(r, hypersurface_class(r));
  TrilinearChoice choice = choice_for(r, k, c).value_or(default_trilinear_choice(r, k));
  os << "basis: (" << choice.basis[0].to_string() << ", " << choice.basis[1].to_string() << ", "
     << choice.basis[2].to_string() << "), top " << choice.top.to_string() << "\n";
  os << "t: " << trilinear_form(r, k, choice).to_string() << "\n";
  return 0;
}

int topology_milnor(const Config& c, std::ostream& os) {
  InvariantReport r = report_for(c.files.at(0), c);
  if (c.format == "kv") {
    os << to_kv(r);
    return 0;
  }
  os << "t: " << r.t.to_string() << "\n";
  if (!r.milnor_finite) {
    os << "infinite\n";
    return 0;
  }
  os << "finite, dims (" << join_sizes(r.milnor_dims) << ")\n";
  if (r.T) os << "T: " << r.T->to_string() << "\n";
  if (r.factor) os << "factor type " << format_degrees(r.factor->degrees) << " (" << r.factor->method << ")\n";
  return 0;
}

int topology_hodge(const Config& c, std::ostream& os) {
  HodgePair h = hodge_numbers(load_polytope(c.files.at(0)));
  os << "(" << h.h11 << ", " << h.h21 << ")\n" << describe(h);
  return 0;
}

int topology_compare(const Config& c, std::ostream& os) {
  InvariantReport a = report_for(c.files.at(0), c), b = report_for(c.files.at(1), c);
  Verdict v = compare_families(a, b);
  if (c.format == "kv") {
    os << to_kv(a) << to_kv(b) << "verdict: " << (v.distinct ? "distinct" : "inconclusive") << "\nreason: " << v.reason
       << "\n";
  } else {
    os << (v.distinct ? "distinct: " + v.reason : "inconclusive") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reflexive polytopes, toric fans and Calabi-Yau hypersurface invariants"};
  app.fallthrough();
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--order", cfg.order, "Monomial order for cohomology rings: degrevlex or lex")
      ->capture_default_str();
  app.add_option("--basis", cfg.basis, "Trilinear basis as ray variable indices i,j,k (1-based)");
  app.add_option("--top", cfg.top, "Top class for the trilinear form, e.g. x7^3");
  app.add_option("--height", cfg.height, "Coefficient bound for the linear-factor search")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format: text or kv")
      ->check(CLI::IsMember({"text", "kv"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");
  app.add_option("--data", cfg.data, "Bundled data directory")->capture_default_str();

  using Handler = int (*)(const Config&, std::ostream&);
  Handler handler = nullptr;
  auto verb = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h, std::size_t nfiles,
                  const std::string& files_help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("files", cfg.files, files_help)->required()->expected(static_cast<int>(nfiles));
    sub->callback([&handler, h] { handler = h; });
    return sub;
  };

  CLI::App* poly = app.add_subcommand("polytope", "Polytope queries")->require_subcommand(1);
  verb(poly, "check", "Reflexivity and facet count", polytope_check, 1, "polytope file");
  verb(poly, "dual", "Dual polytope", polytope_dual, 1, "polytope file");
  verb(poly, "points", "Lattice points", polytope_points, 1, "polytope file");
  verb(poly, "faces", "Face counts, or the faces of one dimension", polytope_faces, 1, "polytope file")
      ->add_option("--dim", cfg.face_dim, "List the faces of this dimension with their l* counts");

  CLI::App* fan = app.add_subcommand("fan", "Fan constructions and checks")->require_subcommand(1);
  verb(fan, "build", "Face fan of a polytope", fan_build, 1, "polytope file")
      ->add_option("--star", cfg.star, "Star subdivide at this ray, e.g. 1,1,1,1 (repeatable)");
  verb(fan, "intersect", "Intersection fan and its new rays", fan_intersect, 2, "two fan files");
  verb(fan, "refines", "Does the first fan refine the second", fan_refines, 2, "fine and coarse fan files");
  verb(fan, "mpcp", "MPCP subdivision of a 2- or 3-dimensional reflexive polytope", fan_mpcp, 1, "polytope file")
      ->add_option("--seed", cfg.seed, "Seed fan file (default: the face fan)");
  verb(fan, "verify", "Check the MPCP conditions", fan_verify, 2, "fan file and polytope file");
  verb(fan, "convexity", "Lower convexity of the anticanonical support function", fan_convexity, 1, "fan file");
  verb(fan, "cover", "Maximal cones without a constant term from the dual vertices", fan_cover, 2,
       "fan file and polytope file");

  CLI::App* top = app.add_subcommand("topology", "Cohomology and hypersurface invariants")->require_subcommand(1);
  verb(top, "cohomology", "Cohomology ring, kernel of [Y] and Betti numbers", topology_cohomology, 1, "fan file");
  verb(top, "trilinear", "Trilinear form on H^2 of the hypersurface", topology_trilinear, 1, "fan file");
  verb(top, "milnor", "Milnor ring, T-form and factor type", topology_milnor, 1, "cubic or fan file");
  verb(top, "hodge", "Hodge numbers h11, h21", topology_hodge, 1, "4-dimensional polytope file");
  verb(top, "compare", "Compare two families", topology_compare, 2, "two cubic or fan files");

  bool report = false;
  app.add_subcommand("paper-report", "Regenerate and check the bundled family data")->callback([&report] {
    report = true;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return 2;
    }
  }
  std::ostream& os = cfg.out.empty() ? std::cout : file;
  try {
    if (report) {
      ReportResult r = paper_report(cfg.data, cfg.format);
      os << r.text;
      return r.mismatches == 0 ? 0 : 1;
    }
    return handler(cfg, os);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
