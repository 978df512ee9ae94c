#pragma once

#include <vector>

#include "zalg/poly.hpp"

namespace zalg {

// Over Z this is a reduced strong Groebner basis; over Q and Fp it is the
// reduced (monic) Groebner basis computed by the same pair loop.
struct StrongGroebnerBasis {
  Domain dom;
  int nvars = 0;
  TermOrdering ord;
  std::vector<Polynomial> elements;  // interreduced, canonical coefficient signs
  bool is_reduced = true;

  bool contains(const Polynomial& f) const;
  bool is_unit_ideal() const;
};

StrongGroebnerBasis strong_groebner(const Ideal& I);

// Canonical remainder: no remaining term is divisible, coefficient included,
// by a leading monomial of G; f - result lies in <G>; result == 0 iff f does.
Polynomial normal_form(const Polynomial& f, const StrongGroebnerBasis& G);

// I cap Z = <q>, q >= 0; reads the unique integer element off the reduced basis.
Int ideal_meet_Z(const StrongGroebnerBasis& G);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

enum class IdealOpKind { Sum, Intersection };
Ideal ideal_ops(const Ideal& a, const Ideal& b, IdealOpKind kind);

// I : <N> computed as (1/N) * (I cap <N>).
Ideal colon_integer(const Ideal& I, const Int& N);

struct ColonSat {
  Ideal colon;          // I : <N>^infinity
  int stable_exponent;  // least m with I : <N^m> = I : <N^{m+1}>
};
ColonSat colon_and_saturate(const Ideal& I, const Int& N, bool verify_split = true);

// I Q[x_1..x_n] cap P for I with I cap Z = <0>, computed as I : <N> with N the
// lcm of the leading coefficients of G.
Ideal contract_from_Q(const Ideal& I, const StrongGroebnerBasis& G);

bool ideal_contains(const StrongGroebnerBasis& G, const Polynomial& f);
bool ideal_contains(const StrongGroebnerBasis& G, const Ideal& sub);
bool ideal_equal(const Ideal& a, const Ideal& b);

}  // namespace zalg
