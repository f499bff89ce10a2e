#include "cytrans/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace cytrans {

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

// Non-empty lines with comments stripped.
std::vector<Line> data_lines(std::istream& in) {
  std::vector<Line> out;
  std::string s;
  std::size_t n = 0;
  while (std::getline(in, s)) {
    ++n;
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    if (s.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back({n, s});
  }
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

Integer parse_int(const std::string& tok, const std::string& source, std::size_t line) {
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) throw ParseError(source, line, "expected an integer, got '" + tok + "'");
  for (std::size_t j = i; j < tok.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(tok[j]))) {
      throw ParseError(source, line, "expected an integer, got '" + tok + "'");
    }
  }
  return Integer(tok[0] == '+' ? tok.substr(1) : tok);
}

std::size_t parse_count(const std::string& tok, const std::string& source, std::size_t line) {
  Integer v = parse_int(tok, source, line);
  if (v < 0 || !v.fits_ulong_p()) throw ParseError(source, line, "expected a nonnegative count, got '" + tok + "'");
  return v.get_ui();
}

IntVector parse_row(const Line& l, std::size_t width, const std::string& source) {
  auto tok = tokens(l.text);
  if (tok.size() != width) {
    throw ParseError(source, l.number,
                     "expected " + std::to_string(width) + " integers, got " + std::to_string(tok.size()));
  }
  IntVector v;
  for (const auto& t : tok) v.push_back(parse_int(t, source, l.number));
  return v;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

}  // namespace

LatticePolytope read_polytope(std::istream& in, const std::string& source) {
  auto lines = data_lines(in);
  if (lines.empty()) throw ParseError(source, 1, "missing header 'D N'");
  auto head = tokens(lines[0].text);
  if (head.size() != 2 && !(head.size() == 3 && head[2] == "t")) {
    throw ParseError(source, lines[0].number, "header must be 'D N' or 'D N t'");
  }
  const std::size_t d = parse_count(head[0], source, lines[0].number);
  const std::size_t n = parse_count(head[1], source, lines[0].number);
  const bool transposed = head.size() == 3;
  const std::size_t rows = transposed ? d : n;
  const std::size_t cols = transposed ? n : d;
  if (lines.size() < rows + 1) {
    throw ParseError(source, lines.back().number + 1, "expected " + std::to_string(rows) + " data rows");
  }
  if (lines.size() > rows + 1) throw ParseError(source, lines[rows + 1].number, "unexpected trailing data");
  std::vector<IntVector> matrix;
  for (std::size_t i = 0; i < rows; ++i) matrix.push_back(parse_row(lines[i + 1], cols, source));
  std::vector<IntVector> points;
  if (transposed) {
    for (std::size_t j = 0; j < n; ++j) {
      IntVector p;
      for (std::size_t i = 0; i < d; ++i) p.push_back(matrix[i][j]);
      points.push_back(std::move(p));
    }
  } else {
    points = std::move(matrix);
  }
  try {
    return hull_to_facets(points);
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, lines[0].number, e.what());
  }
}

LatticePolytope load_polytope(const std::string& path) {
  auto in = open(path);
  return read_polytope(in, path);
}

std::string format_polytope(const LatticePolytope& p) {
  std::ostringstream os;
  os << p.dim() << " " << p.vertices().size() << "\n";
  for (const auto& v : p.vertices()) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    os << "\n";
  }
  return os.str();
}

Fan read_fan(std::istream& in, const std::string& source) {
  auto lines = data_lines(in);
  if (lines.empty()) throw ParseError(source, 1, "missing header 'D R'");
  auto head = tokens(lines[0].text);
  if (head.size() != 2) throw ParseError(source, lines[0].number, "header must be 'D R'");
  const std::size_t d = parse_count(head[0], source, lines[0].number);
  const std::size_t r = parse_count(head[1], source, lines[0].number);
  if (lines.size() < r + 2) throw ParseError(source, lines.back().number + 1, "missing rays or cone count");
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < r; ++i) rays.push_back(parse_row(lines[i + 1], d, source));
  const Line& kline = lines[r + 1];
  auto ktok = tokens(kline.text);
  if (ktok.size() != 1) throw ParseError(source, kline.number, "expected the number of maximal cones");
  const std::size_t k = parse_count(ktok[0], source, kline.number);
  if (lines.size() != r + 2 + k) {
    throw ParseError(source, kline.number, "expected " + std::to_string(k) + " cone rows after this line");
  }
  std::vector<RayIndexSet> cones;
  for (std::size_t i = 0; i < k; ++i) {
    const Line& l = lines[r + 2 + i];
    RayIndexSet c;
    for (const auto& t : tokens(l.text)) {
      std::size_t idx = parse_count(t, source, l.number);
      if (idx >= r) throw ParseError(source, l.number, "ray index " + t + " out of range");
      c.push_back(idx);
    }
    cones.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (is_zero(rays[i])) throw ParseError(source, lines[i + 1].number, "zero ray");
  }
  try {
    return Fan(d, std::move(rays), std::move(cones));
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, lines[0].number, e.what());
  }
}

Fan load_fan(const std::string& path) {
  auto in = open(path);
  return read_fan(in, path);
}

std::string format_fan(const Fan& f) {
  std::ostringstream os;
  os << f.dim() << " " << f.rays().size() << "\n";
  for (const auto& v : f.rays()) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    os << "\n";
  }
  os << f.max_cones().size() << "\n";
  for (const auto& c : f.max_cones()) {
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << "\n";
  }
  return os.str();
}

Polynomial read_cubic(std::istream& in, const std::string& source) {
  auto lines = data_lines(in);
  if (lines.empty()) throw ParseError(source, 1, "empty cubic file");
  std::vector<std::string> vars = {"A", "B", "C"};
  std::size_t first = 0;
  auto head = tokens(lines[0].text);
  if (!head.empty() && head[0] == "vars") {
    vars.assign(head.begin() + 1, head.end());
    if (vars.size() != 3) throw ParseError(source, lines[0].number, "a cubic form needs exactly three variables");
    first = 1;
  }
  if (first >= lines.size()) throw ParseError(source, lines[0].number, "missing polynomial");
  Ring ring = make_ring(vars);
  std::string text;
  for (std::size_t i = first; i < lines.size(); ++i) text += lines[i].text + " ";
  try {
    return parse_polynomial(text, ring);
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, lines[first].number, e.what());
  }
}

Polynomial load_cubic(const std::string& path) {
  auto in = open(path);
  return read_cubic(in, path);
}

}  // namespace cytrans
