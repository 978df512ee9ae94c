#pragma once

#include "zalg/decompose.hpp"

namespace zalg {

// An order in a number field: the algebra P/p for a characteristic-zero prime
// p, with a primitive element and its archimedean signature.
struct NumberFieldOrder {
  ExplicitAlgebra alg;           // the order, rank d, torsion-free
  AlgebraElement theta;          // primitive element
  std::vector<Int> minpoly;      // monic integral, degree d, low-to-high
  // Macaulay basis -> power basis of theta over Q (row i = coordinates of g_i)
  std::vector<std::vector<Rat>> to_power_basis;
  int r1 = 0, r2 = 0;

  int degree() const { return static_cast<int>(minpoly.size()) - 1; }
  int unit_rank() const { return r1 + r2 - 1; }
  std::vector<Rat> power_coords(const AlgebraElement& a) const;
};

NumberFieldOrder primitive_element(const Ideal& char0_prime, std::uint64_t seed);

// a multiplicative generator of F_p[t]/modulus; needs the factorization of q-1
uni::PPoly finite_field_unit_gen(const FiniteFieldRep& F, std::uint64_t seed = 0);

struct TorsionUnit {
  AlgebraElement zeta;
  Int order = 2;
};
TorsionUnit torsion_units(const NumberFieldOrder& O, std::uint64_t seed = 0);

enum class UnitProvenance { Exact, BoundedSearch };

struct UnitGroupData {
  TorsionUnit torsion;
  std::vector<AlgebraElement> fundamental_units;  // unit_rank() many
  UnitProvenance provenance = UnitProvenance::Exact;
};

UnitGroupData order_units(const NumberFieldOrder& O, std::uint64_t seed = 0);

}  // namespace zalg
