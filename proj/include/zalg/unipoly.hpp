#pragma once

#include <utility>
#include <vector>

#include "zalg/base.hpp"

namespace zalg::uni {

// Dense univariate polynomials, c[i] = coefficient of x^i, no trailing zeros.
using ZPoly = std::vector<Int>;

int degz(const ZPoly& f);  // -1 for zero
ZPoly trim(ZPoly f);
ZPoly z_add(const ZPoly& a, const ZPoly& b);
ZPoly z_sub(const ZPoly& a, const ZPoly& b);
ZPoly z_mul(const ZPoly& a, const ZPoly& b);
ZPoly z_scale(const ZPoly& a, const Int& c);
ZPoly z_derivative(const ZPoly& f);
Int z_content(const ZPoly& f);
ZPoly z_primitive(const ZPoly& f);
bool z_divides(const ZPoly& d, const ZPoly& f, ZPoly* quotient = nullptr);
ZPoly z_gcd(ZPoly a, ZPoly b);  // primitive, positive leading coefficient
Int z_eval(const ZPoly& f, const Int& x);

// Polynomials over F_p, coefficients canonical in [0, p).
struct PPoly {
  Int p;
  std::vector<Int> c;
};

int degp(const PPoly& f);
PPoly p_trim(PPoly f);
PPoly p_from_z(const ZPoly& f, const Int& p);
PPoly p_zero(const Int& p);
PPoly p_one(const Int& p);
PPoly p_x(const Int& p);
PPoly p_add(const PPoly& a, const PPoly& b);
PPoly p_sub(const PPoly& a, const PPoly& b);
PPoly p_mul(const PPoly& a, const PPoly& b);
PPoly p_scale(const PPoly& a, const Int& c);
PPoly p_monic(const PPoly& f);
std::pair<PPoly, PPoly> p_divmod(const PPoly& a, const PPoly& b);
PPoly p_mod(const PPoly& a, const PPoly& b);
PPoly p_gcd(PPoly a, PPoly b);  // monic
PPoly p_derivative(const PPoly& f);
PPoly p_mulmod(const PPoly& a, const PPoly& b, const PPoly& f);
PPoly p_powmod(PPoly a, Int e, const PPoly& f);
PPoly p_inv_mod(const PPoly& a, const PPoly& f);  // throws when gcd(a, f) != 1
ZPoly p_lift(const PPoly& f);

// monic irreducible factors with multiplicities
std::vector<std::pair<PPoly, int>> factor_over_Fp(const PPoly& f, std::uint64_t seed = 0);

// primitive irreducible factors with multiplicities (content and sign dropped)
std::vector<std::pair<ZPoly, int>> factor_over_Z(const ZPoly& f, std::uint64_t seed = 0);

ZPoly cyclotomic(unsigned long m);

// number of distinct real roots (Sturm chain)
int real_root_count(const ZPoly& f);

}  // namespace zalg::uni
