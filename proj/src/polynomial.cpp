#include "cytrans/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cytrans {

unsigned degree(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[i] - a[i];
  return out;
}

namespace {

void fill(std::vector<Monomial>& out, Monomial& cur, std::size_t i, unsigned left) {
  if (i + 1 == cur.size()) {
    cur[i] = left;
    out.push_back(cur);
    return;
  }
  for (unsigned e = left + 1; e-- > 0;) {
    cur[i] = e;
    fill(out, cur, i + 1, left - e);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d, MonomialOrder order) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur(n, 0);
  fill(out, cur, 0, d);
  PolyRing r(std::vector<std::string>(n, "x"), order);
  std::sort(out.begin(), out.end(), Descending{&r});
  return out;
}

PolyRing::PolyRing(std::vector<std::string> vars, MonomialOrder order)
    : vars_(std::move(vars)), order_(order) {}

std::size_t PolyRing::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return static_cast<std::size_t>(it - vars_.begin());
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
  if (order_ == MonomialOrder::DegRevLex) {
    unsigned da = degree(a), db = degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::string PolyRing::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars_[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

Ring make_ring(std::vector<std::string> vars, MonomialOrder order) {
  return std::make_shared<const PolyRing>(std::move(vars), order);
}

Ring with_order(const Ring& r, MonomialOrder order) { return make_ring(r->vars(), order); }

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)), terms_(Descending{ring_.get()}) {}

Polynomial::Polynomial(Ring ring, const Rational& constant) : Polynomial(std::move(ring)) {
  add_term(Monomial(ring_->nvars(), 0), constant);
}

Polynomial::Polynomial(Ring ring, const Monomial& m, const Rational& coeff) : Polynomial(std::move(ring)) {
  if (m.size() != ring_->nvars()) throw std::invalid_argument("monomial has wrong arity");
  add_term(m, coeff);
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t i) {
  Monomial m(ring->nvars(), 0);
  m.at(i) = 1;
  return Polynomial(ring, m);
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading monomial of zero");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of zero");
  return terms_.begin()->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(degree(m)));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return degree(t.first) == d; });
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(ring_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) r.add_term(mul(m1, m2), c1 * c2);
  }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, k * c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), mul(k, m), v * c);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r(ring_, Rational(1));
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / leading_coefficient();
  return *this * inv;
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  Integer den = 1, num = 0;
  for (const auto& [m, c] : terms_) den = lcm(den, Integer(c.get_den()));
  for (const auto& [m, c] : terms_) num = gcd(num, Integer(c.get_num()));
  Rational s(den, num);
  s.canonicalize();
  if (leading_coefficient() < 0) s = -s;
  return *this * s;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    r.add_term(d, c * m[var]);
  }
  return r;
}

Rational Polynomial::evaluate(const RatVector& point) const {
  if (point.size() != ring_->nvars()) throw std::invalid_argument("evaluation point has wrong arity");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
    }
    total += t;
  }
  return total;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->nvars()) throw std::invalid_argument("substitution needs one image per variable");
  Polynomial r(images.front().ring());
  for (const auto& [m, c] : terms_) {
    Polynomial t(images.front().ring(), c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) t = t * images[i].pow(m[i]);
    }
    r += t;
  }
  return r;
}

Polynomial Polynomial::in_ring(const Ring& other) const {
  if (other->nvars() != ring_->nvars()) throw std::invalid_argument("rings differ in variable count");
  Polynomial r(other);
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    bool unit = degree(m) == 0;
    if (unit) {
      out += a.get_str();
    } else if (a == 1) {
      out += ring_->format(m);
    } else {
      out += a.get_str() + "*" + ring_->format(m);
    }
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (const auto& [m, c] : terms_) {
    if (o.coefficient(m) != c) return false;
  }
  return true;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("column " + std::to_string(pos + 1) + ": " + what);
  }
  std::string digits() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return s.substr(start, pos - start);
  }
  std::string identifier() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    if (start == pos) fail("expected a variable");
    return s.substr(start, pos - start);
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Ring& ring) {
  Cursor cur{text};
  Polynomial out(ring);
  if (cur.at_end()) cur.fail("empty polynomial");
  bool first = true;
  while (!cur.at_end()) {
    Rational sign = 1;
    char c = cur.peek();
    if (c == '+' || c == '-') {
      if (c == '-') sign = -1;
      ++cur.pos;
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff = 1;
    Monomial m(ring->nvars(), 0);
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      Integer num(cur.digits());
      Integer den = 1;
      if (cur.peek() == '/') {
        ++cur.pos;
        den = Integer(cur.digits());
        if (den == 0) cur.fail("zero denominator");
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      need_factor = false;
      if (cur.peek() == '*') {
        ++cur.pos;
        need_factor = true;
      }
    }
    while (need_factor) {
      std::string name = cur.identifier();
      std::size_t idx = ring->index_of(name);
      if (idx == ring->nvars()) cur.fail("unknown variable '" + name + "'");
      unsigned e = 1;
      if (cur.peek() == '^') {
        ++cur.pos;
        e = static_cast<unsigned>(std::stoul(cur.digits()));
      }
      m[idx] += e;
      need_factor = false;
      if (cur.peek() == '*') {
        ++cur.pos;
        need_factor = true;
      }
    }
    out.add_term(m, sign * coeff);
  }
  return out;
}

}  // namespace cytrans
