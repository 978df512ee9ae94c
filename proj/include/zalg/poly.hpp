#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zalg/base.hpp"

namespace zalg {

// A power product of the indeterminates, stored as a dense exponent vector.
struct Term {
  std::vector<int> e;

  static Term one(int n) { return Term{std::vector<int>(n, 0)}; }
  static Term var(int n, int i, int exp = 1) {
    Term t = one(n);
    t.e[i] = exp;
    return t;
  }

  int nvars() const { return static_cast<int>(e.size()); }
  int degree() const;
  bool is_one() const;
  bool divides(const Term& t) const;
  Term mul(const Term& t) const;
  Term div(const Term& t) const;  // throws when t does not divide this
  static Term lcm(const Term& a, const Term& b);
  static Term gcd(const Term& a, const Term& b);

  bool operator==(const Term&) const = default;
  bool operator<(const Term& o) const { return e < o.e; }  // storage order only
};

struct TermOrdering {
  enum class Kind { DegRevLex, Lex, Elim };
  Kind kind = Kind::DegRevLex;
  std::vector<int> perm;  // variable priority, perm[0] most significant
  int elim_block = 0;     // Kind::Elim: perm[0..elim_block) is the eliminated block

  static TermOrdering degrevlex(int n);
  static TermOrdering lex(int n);
  static TermOrdering elim(int n, int block);

  int cmp(const Term& a, const Term& b) const;  // sign of (a - b) in the ordering
  bool greater(const Term& a, const Term& b) const { return cmp(a, b) > 0; }
  bool less(const Term& a, const Term& b) const { return cmp(a, b) < 0; }
  bool operator==(const TermOrdering&) const = default;
};

struct Domain {
  enum class Kind { Z, Q, Fp };
  Kind kind = Kind::Z;
  Int p = 0;

  static Domain ZZ() { return {Kind::Z, 0}; }
  static Domain QQ() { return {Kind::Q, 0}; }
  static Domain GF(Int prime) { return {Kind::Fp, std::move(prime)}; }

  bool is_field() const { return kind != Kind::Z; }
  bool operator==(const Domain&) const = default;
  std::string to_string() const;
};

// Exact multivariate polynomial. Coefficients are rationals; domain Z keeps
// them integral and domain Fp keeps canonical representatives in [0, p).
class Polynomial {
 public:
  Polynomial() : dom_(Domain::ZZ()) {}

  static Polynomial zero(const Domain& d, int nvars);
  static Polynomial constant(const Domain& d, int nvars, const Rat& c);
  static Polynomial variable(const Domain& d, int nvars, int i);
  static Polynomial monomial(const Domain& d, int nvars, const Term& t, const Rat& c);

  const Domain& domain() const { return dom_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t nterms() const { return terms_.size(); }
  const std::vector<std::pair<Term, Rat>>& terms() const { return terms_; }
  bool is_constant() const;
  Rat constant_value() const;  // 0 for the zero polynomial
  int total_degree() const;    // -1 for zero

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rat& c) const;
  Polynomial mul_term(const Term& t, const Rat& c) const;
  Polynomial pow(unsigned long k) const;
  bool operator==(const Polynomial& o) const = default;

  std::pair<Term, Rat> leading(const TermOrdering& ord) const;
  Rat coeff(const Term& t) const;

  Polynomial map_domain(const Domain& target) const;
  std::pair<Int, Polynomial> content_primitive() const;  // domain Z, nonzero input

  Polynomial shift_vars(int k) const;       // prepend k fresh variables
  Polynomial drop_front_vars(int k) const;  // requires the first k exponents zero
  bool uses_front_vars(int k) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  Domain dom_;
  int nvars_ = 0;
  std::vector<std::pair<Term, Rat>> terms_;  // descending degrevlex, identity permutation

  void normalize();
  friend Polynomial add_impl(const Polynomial& a, const Polynomial& b, int sign);
};

// Lift an Fp polynomial to Z using the canonical representatives.
Polynomial lift_to_Z(const Polynomial& f);

// Textual polynomial grammar (see the project README); rational coefficient
// literals "a/b" are accepted as an extension.
Polynomial parse_poly(const std::string& text, const std::vector<std::string>& vars,
                      const Domain& dom = Domain::ZZ());

struct Ideal {
  Domain dom;
  int nvars = 0;
  std::vector<Polynomial> gens;  // nonempty; the zero ideal is {0}
  TermOrdering ord;

  static Ideal make(const Domain& d, int nvars, std::vector<Polynomial> gens);
  static Ideal make(const Domain& d, int nvars, std::vector<Polynomial> gens, TermOrdering ord);
  Ideal with_ordering(TermOrdering o) const;
  Ideal map_domain(const Domain& target) const;
  std::string to_string(const std::vector<std::string>& names = {}) const;
};

}  // namespace zalg
