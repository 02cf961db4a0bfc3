#include "burch/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace burch {

void require_same_ring(const Poly& a, const Poly& b) {
  if (!a.ring() || !b.ring() || !a.ring()->same_ring(*b.ring()))
    throw std::invalid_argument("operands belong to different rings");
}

Poly Poly::constant(RingPtr ring, const mpq_class& c) {
  Poly p(ring);
  mpq_class cc = ring->field().canon(c);
  if (cc != 0) p.terms_.push_back({Exp(ring->nvars(), 0), cc});
  return p;
}

Poly Poly::variable(RingPtr ring, int index) {
  if (index < 0 || index >= ring->nvars())
    throw std::out_of_range("variable index");
  Exp e(ring->nvars(), 0);
  e[index] = 1;
  Poly p(ring);
  p.terms_.push_back({std::move(e), mpq_class(1)});
  return p;
}

Poly Poly::monomial(RingPtr ring, Exp e, const mpq_class& c) {
  if (static_cast<int>(e.size()) != ring->nvars())
    throw std::invalid_argument("exponent vector size mismatch");
  Poly p(ring);
  mpq_class cc = ring->field().canon(c);
  if (cc != 0) p.terms_.push_back({std::move(e), cc});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  const PolyRing& R = *ring_;
  std::sort(terms_.begin(), terms_.end(),
            [&R](const Term& a, const Term& b) { return R.cmp(a.exp, b.exp) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (static_cast<int>(t.exp.size()) != R.nvars())
      throw std::invalid_argument("exponent vector size mismatch");
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  terms_.clear();
  for (auto& t : out) {
    mpq_class c = R.field().canon(t.coeff);
    if (c != 0) terms_.push_back({std::move(t.exp), std::move(c)});
  }
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && total_degree(terms_[0].exp) == 0);
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, total_degree(t.exp));
  return d;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[var]);
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree(terms_[0].exp);
  for (const auto& t : terms_)
    if (total_degree(t.exp) != d) return false;
  return true;
}

bool Poly::is_linear_form() const {
  for (const auto& t : terms_)
    if (total_degree(t.exp) != 1) return false;
  return true;
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero");
  return terms_.front();
}

mpq_class Poly::coeff_of(const Exp& e) const {
  for (const auto& t : terms_)
    if (t.exp == e) return t.coeff;
  return 0;
}

mpq_class Poly::linear_coeff(int var) const {
  Exp e(ring_->nvars(), 0);
  e[var] = 1;
  return coeff_of(e);
}

mpq_class Poly::constant_coeff() const {
  return coeff_of(Exp(ring_->nvars(), 0));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = ring_->field().canon(-t.coeff);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  require_same_ring(*this, o);
  Poly r(ring_);
  const PolyRing& R = *ring_;
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (i == terms_.size()) {
      r.terms_.push_back(o.terms_[j++]);
    } else if (j == o.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
    } else {
      int c = R.cmp(terms_[i].exp, o.terms_[j].exp);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(o.terms_[j++]);
      } else {
        mpq_class s = R.field().canon(terms_[i].coeff + o.terms_[j].coeff);
        if (s != 0) r.terms_.push_back({terms_[i].exp, std::move(s)});
        ++i;
        ++j;
      }
    }
  }
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  require_same_ring(*this, o);
  const PolyRing& R = *ring_;
  auto cmp = [&R](const Exp& a, const Exp& b) { return R.cmp(a, b) > 0; };
  std::map<Exp, mpq_class, decltype(cmp)> acc(cmp);
  const int n = R.nvars();
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Exp e(n);
      for (int k = 0; k < n; ++k) e[k] = a.exp[k] + b.exp[k];
      acc[std::move(e)] += a.coeff * b.coeff;
    }
  }
  Poly r(ring_);
  for (auto& [e, c] : acc) {
    mpq_class cc = R.field().canon(c);
    if (cc != 0) r.terms_.push_back({e, std::move(cc)});
  }
  return r;
}

Poly Poly::operator*(const mpq_class& c) const {
  Poly r(ring_);
  mpq_class cc = ring_->field().canon(c);
  if (cc == 0) return r;
  for (const auto& t : terms_) {
    mpq_class v = ring_->field().canon(t.coeff * cc);
    if (v != 0) r.terms_.push_back({t.exp, std::move(v)});
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  require_same_ring(*this, o);
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Poly r = Poly::constant(ring_, 1);
  Poly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = (e > 1) ? b * b : b;
    e >>= 1;
  }
  return r;
}

Poly Poly::map(const RingPtr& target, const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != ring_->nvars())
    throw std::invalid_argument("image count mismatch");
  for (const auto& im : images)
    if (!im.ring()->same_ring(*target))
      throw std::invalid_argument("image in wrong ring");
  Poly r = Poly::zero(target);
  for (const auto& t : terms_) {
    Poly m = Poly::constant(target, t.coeff);
    for (int v = 0; v < ring_->nvars(); ++v)
      if (t.exp[v] > 0) m = m * images[v].pow(t.exp[v]);
    r = r + m;
  }
  return r;
}

mpq_class Poly::eval(const std::vector<mpq_class>& point) const {
  if (static_cast<int>(point.size()) != ring_->nvars())
    throw std::invalid_argument("point size mismatch");
  mpq_class acc = 0;
  for (const auto& t : terms_) {
    mpq_class m = t.coeff;
    for (int v = 0; v < ring_->nvars(); ++v)
      for (int k = 0; k < t.exp[v]; ++k) m *= point[v];
    acc += m;
  }
  return ring_->field().canon(acc);
}

Poly Poly::lift_to(const RingPtr& target) const {
  std::vector<int> pos(ring_->nvars());
  for (int v = 0; v < ring_->nvars(); ++v) {
    pos[v] = target->var_index(ring_->var_name(v));
    if (pos[v] < 0)
      throw std::invalid_argument("target ring lacks variable " +
                                  ring_->var_name(v));
  }
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exp e(target->nvars(), 0);
    for (int v = 0; v < ring_->nvars(); ++v) e[pos[v]] = t.exp[v];
    ts.push_back({std::move(e), t.coeff});
  }
  return Poly::from_terms(target, std::move(ts));
}

Poly Poly::project_to(const RingPtr& target) const {
  std::vector<int> pos(ring_->nvars(), -1);
  for (int v = 0; v < ring_->nvars(); ++v)
    pos[v] = target->var_index(ring_->var_name(v));
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exp e(target->nvars(), 0);
    for (int v = 0; v < ring_->nvars(); ++v) {
      if (t.exp[v] == 0) continue;
      if (pos[v] < 0)
        throw std::invalid_argument("polynomial uses variable absent from target");
      e[pos[v]] = t.exp[v];
    }
    ts.push_back({std::move(e), t.coeff});
  }
  return Poly::from_terms(target, std::move(ts));
}

mpq_class Poly::content() const {
  if (terms_.empty()) return 0;
  if (!ring_->field().is_rational()) return terms_.front().coeff;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_class n = t.coeff.get_num();
    if (n < 0) n = -n;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_class d = t.coeff.get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  mpq_class c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

Poly Poly::canonical_scaled() const {
  if (terms_.empty()) return *this;
  if (!ring_->field().is_rational()) return monic();
  mpq_class c = content();
  if (terms_.front().coeff < 0) c = -c;
  Poly r(ring_);
  for (const auto& t : terms_) {
    mpq_class v = t.coeff / c;
    v.canonicalize();
    r.terms_.push_back({t.exp, std::move(v)});
  }
  return r;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return *this * ring_->field().inv(terms_.front().coeff);
}

bool Poly::supported_on(const std::vector<int>& allowed) const {
  std::vector<char> ok(ring_->nvars(), 0);
  for (int v : allowed) ok[v] = 1;
  for (const auto& t : terms_)
    for (int v = 0; v < ring_->nvars(); ++v)
      if (t.exp[v] > 0 && !ok[v]) return false;
  return true;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.coeff;
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) c = -c;
    bool has_vars = total_degree(t.exp) > 0;
    bool wrote_coeff = false;
    if (!has_vars || c != 1) {
      os << c.get_str();
      wrote_coeff = true;
    }
    for (int v = 0; v < ring_->nvars(); ++v) {
      if (t.exp[v] == 0) continue;
      if (wrote_coeff) os << "*";
      wrote_coeff = true;
      os << ring_->var_name(v);
      if (t.exp[v] > 1) os << "^" << t.exp[v];
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
  const RingPtr& ring;
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(pos) + ": " + msg);
  }

  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  Poly parse_expr() {
    skip_ws();
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    Poly acc = parse_term();
    if (neg) acc = -acc;
    while (true) {
      skip_ws();
      if (accept('+')) {
        acc = acc + parse_term();
      } else if (accept('-')) {
        acc = acc - parse_term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly parse_term() {
    Poly acc = parse_factor();
    while (true) {
      skip_ws();
      if (accept('*')) {
        acc = acc * parse_factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly parse_factor() {
    Poly base = parse_base();
    skip_ws();
    if (accept('^')) {
      skip_ws();
      size_t start = pos;
      while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("expected exponent");
      int e = std::stoi(s.substr(start, pos - start));
      return base.pow(e);
    }
    return base;
  }

  Poly parse_base() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Poly inner = parse_expr();
      skip_ws();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos;
      return -parse_factor();
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      mpz_class num(s.substr(start, pos - start));
      if (accept('/')) {
        skip_ws();
        size_t dstart = pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (dstart == pos) fail("expected denominator");
        mpz_class den(s.substr(dstart, pos - dstart));
        if (den == 0) fail("zero denominator");
        return Poly::constant(ring, mpq_class(num, den));
      }
      return Poly::constant(ring, mpq_class(num));
    }
    if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      int idx = ring->var_index(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      return Poly::variable(ring, idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
  Parser p{ring, text};
  Poly r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace burch
