#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zalg/poly.hpp"

using namespace zalg;

namespace {

const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};

Polynomial random_poly(Rng& rng, const Domain& d, int nvars, int maxdeg = 3, int maxterms = 5) {
  Polynomial p = Polynomial::zero(d, nvars);
  int nt = static_cast<int>(rng.uniform(0, maxterms));
  for (int i = 0; i < nt; ++i) {
    Term t = Term::one(nvars);
    for (int v = 0; v < nvars; ++v) t.e[v] = static_cast<int>(rng.uniform(0, maxdeg));
    long c = rng.uniform(-6, 6);
    p = p + Polynomial::monomial(d, nvars, t, Rat(c));
  }
  return p;
}

}  // namespace

TEST_CASE("parse simple") {
  Polynomial p = parse_poly("x^2+x+1", XY);
  Polynomial q = Polynomial::variable(Domain::ZZ(), 2, 0);
  Polynomial expect = q * q + q + Polynomial::constant(Domain::ZZ(), 2, 1);
  CHECK(p == expect);
}

TEST_CASE("parse paper coefficients") {
  Polynomial p = parse_poly("-2*y-1", XY);
  Polynomial y = Polynomial::variable(Domain::ZZ(), 2, 1);
  CHECK(p == -(y.scaled(2) + Polynomial::constant(Domain::ZZ(), 2, 1)));

  Polynomial q = parse_poly("6z^2", XYZ);
  Polynomial z = Polynomial::variable(Domain::ZZ(), 3, 2);
  CHECK(q == (z * z).scaled(6));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_poly("x + w", XY), ParseError);
  CHECK_THROWS_AS(parse_poly("x + ", XY), ParseError);
  CHECK_THROWS_AS(parse_poly("", XY), ParseError);
  CHECK_THROWS_AS(parse_poly("x ^", XY), ParseError);
}

TEST_CASE("parse allows implicit products and whitespace") {
  CHECK(parse_poly("2x y", XY) == parse_poly("2*x*y", XY));
  CHECK(parse_poly("  x^2  -  1 ", XY) == parse_poly("x^2-1", XY));
}

TEST_CASE("ring axioms over Z, Q, Fp") {
  for (Domain d : {Domain::ZZ(), Domain::QQ(), Domain::GF(5)}) {
    Rng rng(99);
    for (int it = 0; it < 30; ++it) {
      Polynomial a = random_poly(rng, d, 2);
      Polynomial b = random_poly(rng, d, 2);
      Polynomial c = random_poly(rng, d, 2);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a - a == Polynomial::zero(d, 2));
    }
  }
}

TEST_CASE("parse of print is identity") {
  Rng rng(123);
  for (int it = 0; it < 40; ++it) {
    Polynomial p = random_poly(rng, Domain::ZZ(), 3);
    if (p.is_zero()) continue;
    CHECK(parse_poly(p.to_string(XYZ), XYZ) == p);
  }
  // rational coefficients round-trip as well
  Polynomial q = Polynomial::constant(Domain::QQ(), 2, Rat(1, 3)) *
                 parse_poly("x*y + x + 1", XY).map_domain(Domain::QQ());
  CHECK(parse_poly(q.to_string(XY), XY, Domain::QQ()) == q);
}

TEST_CASE("map_domain basics") {
  Polynomial f = parse_poly("2x-y", XY);
  Polynomial f2 = f.map_domain(Domain::GF(2));
  CHECK(f2 == Polynomial::variable(Domain::GF(2), 2, 1));

  Polynomial g = parse_poly("4y+1", XY).map_domain(Domain::GF(2));
  CHECK(g == Polynomial::constant(Domain::GF(2), 2, 1));

  Polynomial h = parse_poly("x^2+x+1", XY);
  CHECK(h.map_domain(Domain::QQ()).map_domain(Domain::ZZ()) == h);
}

TEST_CASE("map_domain is a ring homomorphism") {
  Rng rng(7);
  for (Domain d : {Domain::QQ(), Domain::GF(3)}) {
    for (int it = 0; it < 25; ++it) {
      Polynomial a = random_poly(rng, Domain::ZZ(), 2);
      Polynomial b = random_poly(rng, Domain::ZZ(), 2);
      CHECK((a * b).map_domain(d) == a.map_domain(d) * b.map_domain(d));
      CHECK((a + b).map_domain(d) == a.map_domain(d) + b.map_domain(d));
    }
  }
}

TEST_CASE("map_domain Q->Z requires integrality") {
  Polynomial q = Polynomial::constant(Domain::QQ(), 1, Rat(1, 2));
  CHECK_THROWS(q.map_domain(Domain::ZZ()));
}

TEST_CASE("content and primitive part") {
  auto [c1, p1] = parse_poly("6z^2", XYZ).content_primitive();
  CHECK(c1 == 6);
  CHECK(p1 == parse_poly("z^2", XYZ));

  auto [c2, p2] = parse_poly("2x-y", XY).content_primitive();
  CHECK(c2 == 1);

  Polynomial h2 = parse_poly("15*y*z+9*z^2-15*y-17*z+9", XYZ);
  auto [c3, p3] = h2.content_primitive();
  CHECK(c3 == 1);
  CHECK(p3 == h2);
}

TEST_CASE("term orderings") {
  TermOrdering drl = TermOrdering::degrevlex(3);
  TermOrdering lex = TermOrdering::lex(3);
  Term x2{{2, 0, 0}}, xy{{1, 1, 0}}, y2{{0, 2, 0}}, xz{{1, 0, 1}}, one{{0, 0, 0}};
  CHECK(drl.greater(x2, xy));
  CHECK(drl.greater(xy, y2));   // revlex tie-break
  CHECK(drl.greater(xy, xz));   // later variable counts against
  CHECK(drl.greater(y2, one));
  CHECK(lex.greater(x2, xy));
  CHECK(lex.greater(xy, y2));
  Term z5{{0, 0, 5}};
  CHECK(lex.greater(y2, z5));   // lex ignores degree
  CHECK(drl.greater(z5, y2));

  TermOrdering el = TermOrdering::elim(3, 1);
  CHECK(el.greater(x2, z5));
  CHECK(el.greater(xz, z5));    // any x beats pure tail
  CHECK(el.greater(z5, y2));    // within equal front block, tail degrevlex decides
}

TEST_CASE("leading term under orderings") {
  Polynomial f = parse_poly("x*y^2 + x^2 + y", XY);
  auto [t1, c1] = f.leading(TermOrdering::degrevlex(2));
  CHECK(t1 == Term{{1, 2}});
  auto [t2, c2] = f.leading(TermOrdering::lex(2));
  CHECK(t2 == Term{{2, 0}});
}

TEST_CASE("Fp coefficients stay canonical") {
  Polynomial f = parse_poly("5x + 9", XY, Domain::GF(7));
  for (auto& [t, c] : f.terms()) {
    CHECK(c.get_den() == 1);
    CHECK(c.get_num() >= 0);
    CHECK(c.get_num() < 7);
  }
  Polynomial g = f.scaled(Rat(1, 3));  // 3^{-1} mod 7 = 5
  CHECK(g == f.scaled(Rat(5)));
}
