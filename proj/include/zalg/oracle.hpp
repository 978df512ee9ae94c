#pragma once

#include "zalg/finitezalg.hpp"
#include "zalg/intmat.hpp"

namespace zalg {

// Exhaustive table of a finite quotient; ground truth for tests and --check.
class FiniteRingTable {
 public:
  // requires rank(R^+) = 0 and cardinality <= 10^6
  static FiniteRingTable enumerate_ring(const ExplicitAlgebra& R);

  const ExplicitAlgebra& algebra() const { return *alg_; }
  const Int& cardinality() const { return card_; }
  const std::vector<AlgebraElement>& elements() const { return elements_; }
  const std::vector<AlgebraElement>& units() const { return units_; }
  bool is_unit(const AlgebraElement& a) const;

 private:
  const ExplicitAlgebra* alg_ = nullptr;
  Int card_ = 0;
  std::vector<AlgebraElement> elements_;
  std::vector<AlgebraElement> units_;
};

struct BruteUnitGroup {
  std::vector<AlgebraElement> generators;
  std::size_t rank = 0;  // always 0 on a finite ring
  std::vector<Int> invariant_factors;
  Int order = 1;
};
BruteUnitGroup brute_unit_group(const FiniteRingTable& t);

// kernel of Z^k -> R^x for a tuple of units; orders capped at 10^4
IntegerLattice brute_explattice(const FiniteRingTable& t,
                                const std::vector<AlgebraElement>& units);

}  // namespace zalg
