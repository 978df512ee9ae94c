#pragma once

#include "zalg/decompose.hpp"
#include "zalg/intmat.hpp"

namespace zalg {

struct ExpLatticeResult {
  IntegerLattice lattice;
  // true when an archimedean relation search ran anywhere: the lattice is
  // verified sound but its completeness is heuristic
  bool heuristic_nf_search = false;
};

// units as elements of F_p[t]/modulus; kernel of the discrete-logarithm map
ExpLatticeResult explattice_finite_field(const FiniteFieldRep& F,
                                         const std::vector<uni::PPoly>& units);

// exponent lattice in a zero-dimensional algebra over Q or F_p
ExpLatticeResult explattice_zerodim(const Ideal& I_K, const std::vector<Polynomial>& units,
                                    std::uint64_t seed);

// one p-power refinement step: basis spans the lattice modulo <I, p^e>, the
// result spans it modulo <I, p^{e+1}>
IntegerLattice lift_lattice_step(const ExplicitAlgebra& R, const Int& p, int e,
                                 const IntegerLattice& basis,
                                 const std::vector<AlgebraElement>& units);

struct ExplatTrace {
  struct PrimeBranch {
    Int p;
    int e = 1;
    std::vector<IntegerLattice> lattices;  // level 1 first, then each lifted level
  };
  std::vector<PrimeBranch> branches;
  std::optional<IntegerLattice> rational_lattice;
};

// the master recursion over a module-finite presentation
ExpLatticeResult explattice(const ExplicitAlgebra& R, const std::vector<AlgebraElement>& units,
                            std::uint64_t seed, ExplatTrace* trace = nullptr);

// multiplicative relation lattice of nonzero elements of Q[t]/minpoly
// (minpoly monic with integer coefficients); exact for torsion tuples, an
// exactly-verified heuristic search otherwise
ExpLatticeResult nf_exponent_lattice(const std::vector<Int>& minpoly,
                                     const std::vector<std::vector<Rat>>& units,
                                     std::uint64_t seed);

}  // namespace zalg
