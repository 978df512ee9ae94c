#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zalg/nfunits.hpp"

using namespace zalg;

namespace {

const std::vector<std::string> X = {"x"};
const std::vector<std::string> Y = {"y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};

Ideal ideal_of(const std::vector<std::string>& texts, const std::vector<std::string>& vars) {
  std::vector<Polynomial> gens;
  for (auto& t : texts) gens.push_back(parse_poly(t, vars));
  return Ideal::make(Domain::ZZ(), static_cast<int>(vars.size()), gens);
}

std::vector<Int> zp(const std::vector<long>& v) { return std::vector<Int>(v.begin(), v.end()); }

}  // namespace

TEST_CASE("primitive element of the quadratic prime") {
  auto O = primitive_element(ideal_of({"x-y", "y^2+y+1"}, {"x", "y"}), 0);
  CHECK(O.degree() == 2);
  CHECK(O.minpoly == zp({1, 1, 1}));
  CHECK(O.r1 == 0);
  CHECK(O.r2 == 1);
  CHECK(O.unit_rank() == 0);
}

TEST_CASE("primitive element of the degree-4 prime") {
  auto O = primitive_element(ideal_of({"x", "z^2+z+1", "y^2+z"}, XYZ), 0);
  CHECK(O.degree() == 4);
  CHECK(O.minpoly == zp({1, 0, -1, 0, 1}));  // y^4 - y^2 + 1
  CHECK(O.r1 == 0);
  CHECK(O.r2 == 2);
  CHECK(O.unit_rank() == 1);
}

TEST_CASE("primitive element of the Gaussian prime") {
  auto O = primitive_element(ideal_of({"z-1", "x", "y^2+1"}, XYZ), 0);
  CHECK(O.degree() == 2);
  CHECK(O.minpoly == zp({1, 0, 1}));
  CHECK(O.r1 == 0);
  CHECK(O.r2 == 1);
}

TEST_CASE("finite field generators") {
  {
    // F_9 from the maximal ideal of the Alg 4.10 example
    Ideal m = Ideal::make(Domain::GF(3), 3,
                          {parse_poly("z-1", XYZ, Domain::GF(3)),
                           parse_poly("x+y", XYZ, Domain::GF(3)),
                           parse_poly("y^2+1", XYZ, Domain::GF(3))});
    FiniteFieldRep F = finite_field_rep(m, 0);
    CHECK(F.deg == 2);
    uni::PPoly g = finite_field_unit_gen(F);
    // g generates the cyclic group of order 8
    CHECK(ff_is_one(F, ff_pow(F, g, 8)));
    CHECK(!ff_is_one(F, ff_pow(F, g, 4)));
    CHECK(!ff_is_one(F, ff_pow(F, g, 2)));
  }
  {
    FiniteFieldRep F;  // F_2
    F.p = 2;
    F.deg = 1;
    F.modulus = uni::PPoly{2, {Int(0), Int(1)}};
    CHECK(ff_is_one(F, finite_field_unit_gen(F)));
  }
  {
    FiniteFieldRep F;  // F_7
    F.p = 7;
    F.deg = 1;
    F.modulus = uni::PPoly{7, {Int(0), Int(1)}};
    uni::PPoly g = finite_field_unit_gen(F);
    REQUIRE(uni::degp(g) == 0);
    CHECK(g.c[0] == 3);  // first deterministic candidate of full order
  }
}

TEST_CASE("torsion units") {
  {
    auto O = primitive_element(ideal_of({"y^2+y+1"}, Y), 0);
    auto t = torsion_units(O);
    CHECK(t.order == 6);
    CHECK(O.alg.is_one(O.alg.pow(t.zeta, 6)));
    CHECK(!O.alg.is_one(O.alg.pow(t.zeta, 3)));
    CHECK(!O.alg.is_one(O.alg.pow(t.zeta, 2)));
  }
  {
    auto O = primitive_element(ideal_of({"x"}, X), 0);  // the ring Z
    auto t = torsion_units(O);
    CHECK(t.order == 2);
    CHECK(t.zeta == O.alg.from_poly(Polynomial::constant(Domain::ZZ(), 1, -1)));
  }
  {
    auto O = primitive_element(ideal_of({"y^2+1"}, Y), 0);  // Gaussian integers
    auto t = torsion_units(O);
    CHECK(t.order == 4);
    CHECK(O.alg.is_one(O.alg.pow(t.zeta, 4)));
    CHECK(!O.alg.is_one(O.alg.pow(t.zeta, 2)));
  }
  {
    // the non-maximal order Z[3i] only contains -1
    ExplicitData d;
    d.n = 1;
    d.syzygy = IntMat::zero(0, 2);
    d.products[{1, 1}] = {Int(-9), Int(0)};  // (3i)^2 = -9
    auto alg = ExplicitAlgebra::from_explicit(d);
    NumberFieldOrder O = primitive_element(alg.presentation(), 0);
    auto t = torsion_units(O);
    CHECK(t.order == 2);
  }
}

TEST_CASE("imaginary quadratic orders have rank zero") {
  auto O = primitive_element(ideal_of({"y^2+1"}, Y), 0);
  auto U = order_units(O);
  CHECK(U.fundamental_units.empty());
  CHECK(U.provenance == UnitProvenance::Exact);
  CHECK(U.torsion.order == 4);
}

TEST_CASE("real quadratic fundamental units via continued fractions") {
  {
    auto O = primitive_element(ideal_of({"y^2-2"}, Y), 0);
    auto U = order_units(O);
    REQUIRE(U.fundamental_units.size() == 1);
    CHECK(U.provenance == UnitProvenance::Exact);
    const AlgebraElement& u = U.fundamental_units[0];
    // 1 + sqrt(2) up to inversion and sign
    Int a = u.c[0] < 0 ? Int(-u.c[0]) : u.c[0];
    Int b = u.c[1] < 0 ? Int(-u.c[1]) : u.c[1];
    CHECK(a == 1);
    CHECK(b == 1);
  }
  {
    auto O = primitive_element(ideal_of({"y^2-19"}, Y), 0);
    auto U = order_units(O);
    REQUIRE(U.fundamental_units.size() == 1);
    const AlgebraElement& u = U.fundamental_units[0];
    Int a = u.c[0] < 0 ? Int(-u.c[0]) : u.c[0];
    Int b = u.c[1] < 0 ? Int(-u.c[1]) : u.c[1];
    CHECK(a == 170);
    CHECK(b == 39);
  }
}

TEST_CASE("quadratic provider minimality against exhaustive search") {
  for (long dsq : {2L, 3L, 5L, 6L, 7L, 10L, 11L, 13L}) {
    Polynomial f = parse_poly("y^2", Y) - Polynomial::constant(Domain::ZZ(), 1, dsq);
    auto O = primitive_element(Ideal::make(Domain::ZZ(), 1, {f}), 0);
    auto U = order_units(O);
    REQUIRE(U.fundamental_units.size() == 1);
    const AlgebraElement& u = U.fundamental_units[0];
    double sq = std::sqrt(static_cast<double>(dsq));
    double val = std::abs(u.c[0].get_d() + u.c[1].get_d() * sq);
    if (val < 1) val = 1 / val;
    // minimal unit above 1 in the order Z[sqrt(dsq)]: a + b sqrt(d), a^2 - d b^2 = +-1
    double best = 0;
    for (long b = 1; b < 200000 && best == 0; ++b) {
      for (long s : {1L, -1L}) {
        Int a2 = Int(dsq) * b * b + s;
        if (a2 > 0 && is_square(a2)) {
          best = std::sqrt(a2.get_d()) + b * sq;
          break;
        }
      }
    }
    REQUIRE(best > 0);
    CHECK(std::abs(val - best) / best < 1e-9);
  }
}

TEST_CASE("cyclotomic Z[zeta_12] has one fundamental unit from the bounded search") {
  auto O = primitive_element(ideal_of({"x", "z^2+z+1", "y^2+z"}, XYZ), 0);
  auto U = order_units(O, 0);
  CHECK(U.provenance == UnitProvenance::BoundedSearch);
  CHECK(U.torsion.order == 12);
  REQUIRE(U.fundamental_units.size() == 1);
  const AlgebraElement& u = U.fundamental_units[0];
  auto inv = O.alg.element_inverse(u);
  REQUIRE(inv.has_value());
  // u is not torsion
  CHECK(!O.alg.is_one(O.alg.pow(u, 12)));
}

TEST_CASE("unsupported degrees are flagged") {
  // x^7 - 2 has unit rank 3 and degree 7: outside every provider
  Polynomial f = parse_poly("y^7", Y) - Polynomial::constant(Domain::ZZ(), 1, 2);
  auto O = primitive_element(Ideal::make(Domain::ZZ(), 1, {f}), 0);
  CHECK(O.unit_rank() == 3);
  CHECK_THROWS_AS(order_units(O), UnsupportedOrder);
}
