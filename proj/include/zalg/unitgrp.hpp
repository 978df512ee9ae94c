#pragma once

#include "zalg/explat.hpp"
#include "zalg/nfunits.hpp"

namespace zalg {

struct UnitGroupDescription {
  std::vector<Polynomial> generators;  // canonical integer representatives
  std::size_t rank = 0;
  std::vector<Int> invariant_factors;  // each >= 2, divisibility chain
  IntegerLattice relation_lattice;     // exponent lattice of the generator tuple
  bool bounded_search_used = false;
  bool heuristic_lattice = false;
};

// unit group of the order P/J inside Q tensor P/J (Alg 4.7 in its
// presentation-level form); J must cut out a torsion-free reduced algebra
std::vector<Polynomial> units_order(const Ideal& J, std::uint64_t seed,
                                    bool* bounded_search_used = nullptr,
                                    bool* heuristic = nullptr);

std::vector<Polynomial> units_torsion_free_reduced(const ExplicitAlgebra& R, std::uint64_t seed,
                                                   bool* bounded_search_used = nullptr,
                                                   bool* heuristic = nullptr);

std::vector<Polynomial> units_reduced(const ExplicitAlgebra& R, std::uint64_t seed,
                                      bool* bounded_search_used = nullptr,
                                      bool* heuristic = nullptr);

std::vector<Polynomial> one_plus_radical_gens(const ExplicitAlgebra& R, std::uint64_t seed);

UnitGroupDescription units(const ExplicitAlgebra& R, std::uint64_t seed);

// rank and invariant factors of the group generated (Smith form of the
// relation lattice); generators must generate the unit group for the result
// to describe R^x itself
std::pair<std::size_t, std::vector<Int>> unit_group_structure(
    const ExplicitAlgebra& R, const std::vector<Polynomial>& generators, std::uint64_t seed,
    IntegerLattice* relation_lattice = nullptr, bool* heuristic = nullptr);

bool in_generated_subgroup(const ExplicitAlgebra& R, const Polynomial& g,
                           const std::vector<Polynomial>& gens, std::uint64_t seed);

}  // namespace zalg
