#include "zalg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace zalg {

int Term::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

bool Term::is_one() const {
  for (int x : e)
    if (x != 0) return false;
  return true;
}

bool Term::divides(const Term& t) const {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > t.e[i]) return false;
  return true;
}

Term Term::mul(const Term& t) const {
  Term r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += t.e[i];
  return r;
}

Term Term::div(const Term& t) const {
  Term r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) {
    r.e[i] -= t.e[i];
    if (r.e[i] < 0) throw InternalError("Term::div: not divisible");
  }
  return r;
}

Term Term::lcm(const Term& a, const Term& b) {
  Term r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

Term Term::gcd(const Term& a, const Term& b) {
  Term r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

TermOrdering TermOrdering::degrevlex(int n) {
  TermOrdering o;
  o.kind = Kind::DegRevLex;
  o.perm.resize(n);
  for (int i = 0; i < n; ++i) o.perm[i] = i;
  return o;
}

TermOrdering TermOrdering::lex(int n) {
  TermOrdering o = degrevlex(n);
  o.kind = Kind::Lex;
  return o;
}

TermOrdering TermOrdering::elim(int n, int block) {
  TermOrdering o = degrevlex(n);
  o.kind = Kind::Elim;
  o.elim_block = block;
  return o;
}

namespace {

// degrevlex on a slice of the permutation
int cmp_drl_slice(const Term& a, const Term& b, const std::vector<int>& perm, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.e[perm[i]];
    db += b.e[perm[i]];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    int d = a.e[perm[i]] - b.e[perm[i]];
    if (d != 0) return d > 0 ? -1 : 1;  // larger exponent in the least variable is smaller
  }
  return 0;
}

}  // namespace

int TermOrdering::cmp(const Term& a, const Term& b) const {
  int n = static_cast<int>(perm.size());
  switch (kind) {
    case Kind::DegRevLex:
      return cmp_drl_slice(a, b, perm, 0, n);
    case Kind::Lex:
      for (int i = 0; i < n; ++i) {
        int d = a.e[perm[i]] - b.e[perm[i]];
        if (d != 0) return d > 0 ? 1 : -1;
      }
      return 0;
    case Kind::Elim: {
      int c = cmp_drl_slice(a, b, perm, 0, elim_block);
      if (c != 0) return c;
      return cmp_drl_slice(a, b, perm, elim_block, n);
    }
  }
  return 0;
}

std::string Domain::to_string() const {
  switch (kind) {
    case Kind::Z:
      return "Z";
    case Kind::Q:
      return "Q";
    case Kind::Fp:
      return "F" + p.get_str();
  }
  return "?";
}

namespace {

int cmp_storage(const Term& a, const Term& b) {
  // degrevlex with the identity permutation; used for canonical storage order
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = a.nvars() - 1; i >= 0; --i) {
    int d = a.e[i] - b.e[i];
    if (d != 0) return d > 0 ? -1 : 1;
  }
  return 0;
}

struct StorageGreater {
  bool operator()(const std::pair<Term, Rat>& x, const std::pair<Term, Rat>& y) const {
    return cmp_storage(x.first, y.first) > 0;
  }
};

Rat normalize_coeff(const Domain& d, const Rat& c) {
  if (d.kind == Domain::Kind::Z) {
    if (c.get_den() != 1) throw InternalError("non-integral coefficient in Z polynomial");
    return c;
  }
  if (d.kind == Domain::Kind::Q) return c;
  // Fp
  Int num = c.get_num(), den = c.get_den();
  Int r = mod_pos(num, d.p);
  if (den != 1) {
    auto inv = invmod(mod_pos(den, d.p), d.p);
    if (!inv) throw InternalError("non-invertible denominator modulo p");
    r = mod_pos(r * *inv, d.p);
  }
  return Rat(r);
}

}  // namespace

void Polynomial::normalize() {
  for (auto& [t, c] : terms_) c = normalize_coeff(dom_, c);
  std::erase_if(terms_, [](const auto& tc) { return tc.second == 0; });
  std::sort(terms_.begin(), terms_.end(), StorageGreater{});
}

Polynomial Polynomial::zero(const Domain& d, int nvars) {
  Polynomial p;
  p.dom_ = d;
  p.nvars_ = nvars;
  return p;
}

Polynomial Polynomial::constant(const Domain& d, int nvars, const Rat& c) {
  Polynomial p = zero(d, nvars);
  p.terms_.push_back({Term::one(nvars), c});
  p.normalize();
  return p;
}

Polynomial Polynomial::variable(const Domain& d, int nvars, int i) {
  Polynomial p = zero(d, nvars);
  p.terms_.push_back({Term::var(nvars, i), Rat(1)});
  p.normalize();
  return p;
}

Polynomial Polynomial::monomial(const Domain& d, int nvars, const Term& t, const Rat& c) {
  Polynomial p = zero(d, nvars);
  p.terms_.push_back({t, c});
  p.normalize();
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rat Polynomial::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw InternalError("constant_value: non-constant polynomial");
  return terms_[0].second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (auto& [t, c] : terms_) d = std::max(d, t.degree());
  return d;
}

Polynomial add_impl(const Polynomial& a, const Polynomial& b, int sign) {
  if (a.dom_ != b.dom_ || a.nvars_ != b.nvars_)
    throw InternalError("polynomial arithmetic: domain or arity mismatch");
  Polynomial r = Polynomial::zero(a.dom_, a.nvars_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int c;
    if (i == a.terms_.size())
      c = -1;
    else if (j == b.terms_.size())
      c = 1;
    else
      c = cmp_storage(a.terms_[i].first, b.terms_[j].first);
    if (c > 0)
      r.terms_.push_back(a.terms_[i++]);
    else if (c < 0) {
      r.terms_.push_back(b.terms_[j]);
      r.terms_.back().second *= sign;
      ++j;
    } else {
      Rat v = a.terms_[i].second + Rat(sign) * b.terms_[j].second;
      if (v != 0) r.terms_.push_back({a.terms_[i].first, v});
      ++i;
      ++j;
    }
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const { return add_impl(*this, o, 1); }
Polynomial Polynomial::operator-(const Polynomial& o) const { return add_impl(*this, o, -1); }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [t, c] : r.terms_) c = -c;
  r.normalize();
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (dom_ != o.dom_ || nvars_ != o.nvars_)
    throw InternalError("polynomial arithmetic: domain or arity mismatch");
  std::map<Term, Rat> acc;
  for (auto& [ta, ca] : terms_)
    for (auto& [tb, cb] : o.terms_) acc[ta.mul(tb)] += ca * cb;
  Polynomial r = zero(dom_, nvars_);
  for (auto& [t, c] : acc)
    if (c != 0) r.terms_.push_back({t, c});
  r.normalize();
  return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial r = *this;
  for (auto& [t, v] : r.terms_) v *= c;
  r.normalize();
  return r;
}

Polynomial Polynomial::mul_term(const Term& t, const Rat& c) const {
  Polynomial r = *this;
  for (auto& [tt, v] : r.terms_) {
    tt = tt.mul(t);
    v *= c;
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::pow(unsigned long k) const {
  Polynomial r = constant(dom_, nvars_, 1);
  Polynomial b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

std::pair<Term, Rat> Polynomial::leading(const TermOrdering& ord) const {
  if (terms_.empty()) throw InternalError("leading term of the zero polynomial");
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (ord.greater(terms_[i].first, terms_[best].first)) best = i;
  return terms_[best];
}

Rat Polynomial::coeff(const Term& t) const {
  for (auto& [tt, c] : terms_)
    if (tt == t) return c;
  return Rat(0);
}

Polynomial Polynomial::map_domain(const Domain& target) const {
  if (dom_ == target) return *this;
  bool ok = (dom_.kind == Domain::Kind::Z &&
             (target.kind == Domain::Kind::Q || target.kind == Domain::Kind::Fp)) ||
            (dom_.kind == Domain::Kind::Q && target.kind == Domain::Kind::Z);
  if (!ok) throw InternalError("map_domain: unsupported base change");
  if (dom_.kind == Domain::Kind::Q)
    for (auto& [t, c] : terms_)
      if (c.get_den() != 1) throw InternalError("map_domain: nontrivial denominator for Q -> Z");
  Polynomial r = *this;
  r.dom_ = target;
  r.normalize();
  return r;
}

std::pair<Int, Polynomial> Polynomial::content_primitive() const {
  if (dom_.kind != Domain::Kind::Z) throw InternalError("content_primitive: domain must be Z");
  if (is_zero()) throw InternalError("content_primitive: zero polynomial");
  Int g = 0;
  for (auto& [t, c] : terms_) g = gcd_int(g, c.get_num());
  if (g < 0) g = -g;
  Polynomial r = *this;
  for (auto& [t, c] : r.terms_) c = Rat(c.get_num() / g);
  return {g, r};
}

Polynomial Polynomial::shift_vars(int k) const {
  Polynomial r = zero(dom_, nvars_ + k);
  for (auto& [t, c] : terms_) {
    Term tt = Term::one(nvars_ + k);
    for (int i = 0; i < nvars_; ++i) tt.e[k + i] = t.e[i];
    r.terms_.push_back({tt, c});
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::drop_front_vars(int k) const {
  Polynomial r = zero(dom_, nvars_ - k);
  for (auto& [t, c] : terms_) {
    for (int i = 0; i < k; ++i)
      if (t.e[i] != 0) throw InternalError("drop_front_vars: variable still present");
    Term tt{std::vector<int>(t.e.begin() + k, t.e.end())};
    r.terms_.push_back({tt, c});
  }
  r.normalize();
  return r;
}

bool Polynomial::uses_front_vars(int k) const {
  for (auto& [t, c] : terms_)
    for (int i = 0; i < k; ++i)
      if (t.e[i] != 0) return true;
  return false;
}

Polynomial lift_to_Z(const Polynomial& f) {
  if (f.domain().kind != Domain::Kind::Fp) throw InternalError("lift_to_Z: expects an Fp polynomial");
  Polynomial r = Polynomial::zero(Domain::ZZ(), f.nvars());
  for (auto& [t, c] : f.terms()) r = r + Polynomial::monomial(Domain::ZZ(), f.nvars(), t, c);
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto var_name = [&](int i) {
    if (i < static_cast<int>(names.size())) return names[i];
    return "x" + std::to_string(i + 1);
  };
  std::ostringstream os;
  bool first = true;
  for (auto& [t, c] : terms_) {
    Rat a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (t.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(i);
      if (t.e[i] > 1) mono += "^" + std::to_string(t.e[i]);
    }
    if (mono.empty()) {
      os << zalg::to_string(a);
    } else if (a == 1) {
      os << mono;
    } else {
      os << zalg::to_string(a) << "*" << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- parser

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  const std::vector<std::string>& vars;
  const Domain& dom;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  Int parse_nat() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a number", start);
    return Int(s.substr(start, pos - start));
  }

  std::string parse_name() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
      throw ParseError("expected a variable name", pos);
    ++pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    return s.substr(start, pos - start);
  }

  int var_index(const std::string& name, std::size_t at) {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    throw ParseError("unknown variable '" + name + "'", at);
  }

  // factor := var ('^' nat)?
  void parse_factor(Term& t) {
    std::size_t at = pos;
    std::string name = parse_name();
    int idx = var_index(name, at);
    int exp = 1;
    if (peek() == '^') {
      ++pos;
      Int n = parse_nat();
      if (n > 64) throw ParseError("exponent too large", pos);
      exp = static_cast<int>(n.get_si());
    }
    t.e[idx] += exp;
  }

  // term := coeff ('*'? mono)? | mono
  Polynomial parse_term() {
    int n = static_cast<int>(vars.size());
    Rat coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Int num = parse_nat();
      Int den = 1;
      if (peek() == '/') {
        ++pos;
        den = parse_nat();
        if (den == 0) throw ParseError("zero denominator", pos);
      }
      Rat q(num, den);
      q.canonicalize();
      coeff = q;
      have_coeff = true;
    }
    Term t = Term::one(n);
    bool have_mono = false;
    if (have_coeff && peek() == '*') {
      ++pos;
      parse_factor(t);
      have_mono = true;
    } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
      parse_factor(t);
      have_mono = true;
    }
    while (have_mono) {
      char c = peek();
      if (c == '*') {
        ++pos;
        parse_factor(t);
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        parse_factor(t);
      } else {
        break;
      }
    }
    if (!have_coeff && !have_mono) throw ParseError("expected a term", pos);
    return Polynomial::monomial(dom, n, t, coeff);
  }

  Polynomial parse_poly() {
    int n = static_cast<int>(vars.size());
    Polynomial acc = Polynomial::zero(dom, n);
    int sign = 1;
    if (peek() == '-') {
      ++pos;
      sign = -1;
    } else if (peek() == '+') {
      ++pos;
    }
    acc = acc + parse_term().scaled(Rat(sign));
    while (!eof()) {
      char c = peek();
      if (c == '+')
        sign = 1;
      else if (c == '-')
        sign = -1;
      else
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
      ++pos;
      acc = acc + parse_term().scaled(Rat(sign));
    }
    return acc;
  }
};

}  // namespace

Polynomial parse_poly(const std::string& text, const std::vector<std::string>& vars,
                      const Domain& dom) {
  Parser p{text, 0, vars, dom};
  if (p.eof()) throw ParseError("empty polynomial", 0);
  return p.parse_poly();
}

Ideal Ideal::make(const Domain& d, int nvars, std::vector<Polynomial> gens) {
  return make(d, nvars, std::move(gens), TermOrdering::degrevlex(nvars));
}

Ideal Ideal::make(const Domain& d, int nvars, std::vector<Polynomial> gens, TermOrdering ord) {
  Ideal i;
  i.dom = d;
  i.nvars = nvars;
  i.gens = std::move(gens);
  if (i.gens.empty()) i.gens.push_back(Polynomial::zero(d, nvars));
  i.ord = std::move(ord);
  for (auto& g : i.gens)
    if (g.domain() != d || g.nvars() != nvars) throw InternalError("Ideal::make: generator mismatch");
  return i;
}

Ideal Ideal::with_ordering(TermOrdering o) const {
  Ideal i = *this;
  i.ord = std::move(o);
  return i;
}

Ideal Ideal::map_domain(const Domain& target) const {
  Ideal i = *this;
  i.dom = target;
  for (auto& g : i.gens) g = g.map_domain(target);
  // dropping polynomials that vanish keeps the generator list nonempty via make()
  std::vector<Polynomial> kept;
  for (auto& g : i.gens)
    if (!g.is_zero()) kept.push_back(g);
  return Ideal::make(target, nvars, kept, ord);
}

std::string Ideal::to_string(const std::vector<std::string>& names) const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i].to_string(names);
  }
  return s + ">";
}

}  // namespace zalg
