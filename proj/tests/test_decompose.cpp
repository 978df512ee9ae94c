#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "zalg/decompose.hpp"

using namespace zalg;

namespace {

const std::vector<std::string> X = {"x"};
const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};

Ideal ideal_of(const std::vector<std::string>& texts, const std::vector<std::string>& vars,
               Domain dom = Domain::ZZ()) {
  std::vector<Polynomial> gens;
  for (auto& t : texts) gens.push_back(parse_poly(t, vars, dom));
  return Ideal::make(dom, static_cast<int>(vars.size()), gens);
}

bool prime_set_matches(const std::vector<PrimeComponent>& got,
                       const std::vector<Ideal>& expected) {
  if (got.size() != expected.size()) return false;
  std::vector<bool> used(expected.size(), false);
  for (auto& pc : got) {
    bool found = false;
    for (std::size_t i = 0; i < expected.size() && !found; ++i) {
      if (used[i]) continue;
      if (ideal_equal(pc.prime_ideal, expected[i])) {
        used[i] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("factor_univariate examples") {
  Polynomial f = parse_poly("y^2+y+1", XY, Domain::QQ());
  auto fs = factor_univariate(f, 1);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].second == 1);
  CHECK(fs[0].first == f);

  Polynomial g = parse_poly("y^2+y+1", XY, Domain::GF(3));
  auto gs = factor_univariate(g, 1);
  REQUIRE(gs.size() == 1);
  CHECK(gs[0].second == 2);
  CHECK(gs[0].first == parse_poly("y+2", XY, Domain::GF(3)));  // (y - 1)^2 = (y + 2)^2 mod 3

  Polynomial h = parse_poly("x^2-1", XY, Domain::QQ());
  auto hs = factor_univariate(h, 1);
  REQUIRE(hs.size() == 2);
  Polynomial prod = Polynomial::constant(Domain::QQ(), 2, 1);
  for (auto& [fac, m] : hs)
    for (int i = 0; i < m; ++i) prod = prod * fac;
  CHECK(prod == h);
}

TEST_CASE("factor_univariate reconstructs the input and factors stay irreducible") {
  Rng rng(77);
  for (Domain dom : {Domain::QQ(), Domain::GF(5), Domain::GF(2)}) {
    for (int it = 0; it < 10; ++it) {
      Polynomial f = Polynomial::zero(dom, 1);
      int deg = 2 + static_cast<int>(rng.uniform(0, 4));
      for (int i = 0; i <= deg; ++i) {
        Term t = Term::one(1);
        t.e[0] = i;
        f = f + Polynomial::monomial(dom, 1, t, Rat(rng.uniform(i == deg ? 1 : -4, 4)));
      }
      if (f.is_zero() || f.total_degree() < 1) continue;
      auto fs = factor_univariate(f, it);
      Polynomial prod = Polynomial::constant(dom, 1, f.leading(TermOrdering::degrevlex(1)).second);
      for (auto& [fac, m] : fs)
        for (int i = 0; i < m; ++i) prod = prod * fac;
      CHECK(prod == f);
      for (auto& [fac, m] : fs) {
        auto refs = factor_univariate(fac, it + 1);
        CHECK(refs.size() == 1);
        CHECK(refs[0].second == 1);
      }
    }
  }
}

TEST_CASE("zerodim_decompose over Q splits x^2-1") {
  Ideal I = ideal_of({"x^2-1"}, X, Domain::QQ());
  auto comps = zerodim_decompose(I, 3);
  REQUIRE(comps.size() == 2);
  for (auto& c : comps) CHECK(c.residue_degree == 1);
  FieldAlgebra A = FieldAlgebra::build(I);
  auto e0 = A.coords(comps[0].idempotent);
  auto e1 = A.coords(comps[1].idempotent);
  CHECK(A.mul(e0, e0) == e0);
  CHECK(A.is_zero(A.mul(e0, e1)));
  std::vector<Rat> sum(A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) sum[i] = e0[i] + e1[i];
  CHECK(sum == A.one());
}

TEST_CASE("zerodim_decompose over F_2: two F_4 components, oracle by idempotent count") {
  Ideal I = ideal_of({"x^2+x+1", "y^2+y+1"}, XY, Domain::GF(2));
  auto comps = zerodim_decompose(I, 0);
  REQUIRE(comps.size() == 2);
  for (auto& c : comps) CHECK(c.residue_degree == 2);
  // oracle: enumerate the 16-element algebra and count idempotents (must be 4)
  FieldAlgebra A = FieldAlgebra::build(I);
  int idem = 0;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<Rat> v(4, Rat(0));
    for (int b = 0; b < 4; ++b) v[b] = (mask >> b) & 1;
    if (A.mul(v, v) == v) ++idem;
  }
  CHECK(idem == 4);
}

TEST_CASE("zerodim_decompose keeps local data on nonreduced input") {
  Ideal I = ideal_of({"x^2+x+1", "y^2+y+1", "6z^2", "z^3"}, XYZ).map_domain(Domain::QQ());
  auto comps = zerodim_decompose(I, 1);
  REQUIRE(comps.size() == 2);
  FieldAlgebra A = FieldAlgebra::build(I);
  std::vector<Rat> total(A.dim(), Rat(0));
  for (auto& c : comps) {
    CHECK(c.residue_degree == 2);  // Q(zeta_3)
    auto e = A.coords(c.idempotent);
    CHECK(A.mul(e, e) == e);
    for (std::size_t i = 0; i < A.dim(); ++i) total[i] += e[i];
    // the local ideal contains z-nilpotents that the maximal ideal also sees
    auto gz = strong_groebner(c.maximal_ideal);
    CHECK(ideal_contains(gz, parse_poly("z", XYZ, Domain::QQ())));
    CHECK(!ideal_equal(c.local_ideal, c.maximal_ideal));
  }
  CHECK(total == A.one());
}

TEST_CASE("primitive idempotents match the printed ones") {
  Ideal I = ideal_of({"x^2+x+1", "y^2+y+1", "z^2+z+1"}, XYZ).map_domain(Domain::QQ());
  auto es = primitive_idempotents_Q(I, 0);
  REQUIRE(es.size() == 4);
  std::vector<Polynomial> expected = {
      parse_poly("1/3*x*y + 1/3*x*z - 1/3*y*z + 1/3*x + 1/3", XYZ, Domain::QQ()),
      parse_poly("-1/3*x*y - 1/3*x*z - 1/3*y*z - 1/3*x - 1/3*y - 1/3*z", XYZ, Domain::QQ()),
      parse_poly("-1/3*x*y + 1/3*x*z + 1/3*y*z + 1/3*z + 1/3", XYZ, Domain::QQ()),
      parse_poly("1/3*x*y - 1/3*x*z + 1/3*y*z + 1/3*y + 1/3", XYZ, Domain::QQ())};
  FieldAlgebra A = FieldAlgebra::build(I);
  std::vector<bool> used(4, false);
  for (auto& e : es) {
    bool found = false;
    for (std::size_t i = 0; i < 4 && !found; ++i) {
      if (used[i]) continue;
      if (A.coords(e) == A.coords(expected[i])) {
        used[i] = true;
        found = true;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("primitive idempotents: single component and non-reduced rejection") {
  Ideal I = ideal_of({"x^2+x+1"}, X).map_domain(Domain::QQ());
  auto es = primitive_idempotents_Q(I, 0);
  REQUIRE(es.size() == 1);
  CHECK(es[0] == Polynomial::constant(Domain::QQ(), 1, 1));
  CHECK_THROWS_AS(primitive_idempotents_Q(ideal_of({"x^2"}, X).map_domain(Domain::QQ()), 0),
                  NotReduced);
}

TEST_CASE("minimal primes of the first reduced example") {
  auto R = ExplicitAlgebra::from_presentation(ideal_of({"x^2+x+1", "y^2+y+1"}, XY));
  auto primes = minimal_primes(R, 0);
  CHECK(prime_set_matches(primes, {ideal_of({"x-y", "y^2+y+1"}, XY),
                                   ideal_of({"x+y+1", "y^2+y+1"}, XY)}));
  for (auto& pc : primes) CHECK(pc.characteristic == 0);
}

TEST_CASE("minimal primes of the mixed-characteristic example") {
  auto R = ExplicitAlgebra::from_presentation(
      ideal_of({"3x", "x*z-x", "y^2+z", "x^2+x*y", "z^3-1"}, XYZ));
  auto primes = minimal_primes(R, 0);
  std::vector<Ideal> expected = {ideal_of({"z-1", "x", "y^2+1"}, XYZ),
                                 ideal_of({"x", "z^2+z+1", "y^2+z"}, XYZ),
                                 ideal_of({"3", "z-1", "x+y", "y^2+1"}, XYZ)};
  CHECK(prime_set_matches(primes, expected));
  int char3 = 0;
  for (auto& pc : primes)
    if (pc.characteristic == 3) {
      ++char3;
      REQUIRE(pc.finite_field.has_value());
      CHECK(pc.finite_field->deg == 2);  // F_9
    }
  CHECK(char3 == 1);
}

TEST_CASE("minimal primes of the three-variable example") {
  auto R = ExplicitAlgebra::from_presentation(ideal_of({"x^2+x+1", "y^2+y+1", "z^2+z+1"}, XYZ));
  auto primes = minimal_primes(R, 0);
  std::vector<Ideal> expected = {
      ideal_of({"y-z", "x+z+1", "z^2+z+1"}, XYZ), ideal_of({"y-z", "x-z", "z^2+z+1"}, XYZ),
      ideal_of({"y+z+1", "x+z+1", "z^2+z+1"}, XYZ), ideal_of({"y+z+1", "x-z", "z^2+z+1"}, XYZ)};
  CHECK(prime_set_matches(primes, expected));
}

TEST_CASE("minimal prime invariants") {
  for (auto R : {ExplicitAlgebra::from_presentation(ideal_of({"x^3", "6x^2", "y^2+y+1"}, XY)),
                 ExplicitAlgebra::from_presentation(ideal_of({"x^2+x+1", "y^2+y+1", "8"}, XY))}) {
    auto primes = minimal_primes(R, 0);
    REQUIRE(!primes.empty());
    for (auto& pc : primes) {
      auto G = strong_groebner(pc.prime_ideal);
      for (auto& g : R.presentation().gens) CHECK(normal_form(g, G).is_zero());
    }
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = 0; j < primes.size(); ++j) {
        if (i == j) continue;
        auto Gi = strong_groebner(primes[i].prime_ideal);
        CHECK(!ideal_contains(Gi, primes[j].prime_ideal));
      }
  }
}

TEST_CASE("nilradical of the section-5 example") {
  auto R = ExplicitAlgebra::from_presentation(ideal_of({"x^3", "6x^2", "y^2+y+1"}, XY));
  auto rad = nilradical(R, 0);
  CHECK(ideal_equal(rad.ideal, ideal_of({"x", "y^2+y+1"}, XY)));
  CHECK(rad.nilpotency_index == 3);
}

TEST_CASE("nilradical of reduced and simple nilpotent algebras") {
  auto R1 = ExplicitAlgebra::from_presentation(ideal_of({"x^2+x+1", "y^2+y+1"}, XY));
  auto rad1 = nilradical(R1, 0);
  CHECK(ideal_equal(rad1.ideal, R1.presentation()));
  CHECK(rad1.nilpotency_index == 1);

  auto R2 = ExplicitAlgebra::from_presentation(ideal_of({"x^2"}, X));
  auto rad2 = nilradical(R2, 0);
  CHECK(ideal_equal(rad2.ideal, ideal_of({"x"}, X)));
  CHECK(rad2.nilpotency_index == 2);
}

TEST_CASE("CRT orthogonal idempotents match the paper") {
  auto R = ExplicitAlgebra::from_presentation(
      ideal_of({"3x", "x*z-x", "y^2+z", "x^2+x*y", "z^3-1"}, XYZ));
  Ideal m = ideal_of({"3", "z-1", "x+y", "y^2+1"}, XYZ);
  Ideal J = ideal_intersect(ideal_of({"z-1", "x", "y^2+1"}, XYZ),
                            ideal_of({"x", "z^2+z+1", "y^2+z"}, XYZ));
  auto es = crt_orthogonal_idempotents(R, {m, J});
  REQUIRE(es.size() == 2);
  CHECK(es[0] == R.from_poly(parse_poly("x*y+y^2+z", XYZ)));
  CHECK(es[1] == R.from_poly(parse_poly("-x*y+1", XYZ)));
}

TEST_CASE("CRT idempotents basic cases") {
  auto R = ExplicitAlgebra::from_presentation(ideal_of({"x", "6"}, X));
  auto single = crt_orthogonal_idempotents(R, {R.presentation()});
  REQUIRE(single.size() == 1);
  CHECK(single[0] == R.one());

  auto es = crt_orthogonal_idempotents(R, {ideal_of({"2"}, X), ideal_of({"3"}, X)});
  REQUIRE(es.size() == 2);
  CHECK(es[0] == R.from_poly(Polynomial::constant(Domain::ZZ(), 1, 3)));
  CHECK(es[1] == R.from_poly(Polynomial::constant(Domain::ZZ(), 1, 4)));

  CHECK_THROWS_AS(crt_orthogonal_idempotents(R, {ideal_of({"2"}, X), ideal_of({"4"}, X)}),
                  NotComaximal);
}
