#pragma once

#include <map>
#include <optional>

#include "zalg/grobner.hpp"
#include "zalg/intmat.hpp"

namespace zalg {

struct ModuleStructure {
  std::size_t rank = 0;
  std::vector<Int> invariant_factors;  // each >= 2, ascending divisibility chain
  Int torsion_exponent = 1;            // last invariant factor, or 1 when torsion-free
};

// Residue class in the algebra, stored as canonical coordinates over the
// Macaulay generators (entries reduced modulo the syzygy row lattice).
struct AlgebraElement {
  std::vector<Int> c;
  bool operator==(const AlgebraElement&) const = default;
};

// Remark-2.1-style explicit input: Z-module generators g_0 = 1, g_1..g_n,
// syzygy rows, and products g_i*g_j in coordinates.
struct ExplicitData {
  int n = 0;
  IntMat syzygy;  // rows of length n+1, coefficient of g_0 first
  std::map<std::pair<int, int>, std::vector<Int>> products;  // keys (i, j) with 1 <= i <= j <= n
};

class ExplicitAlgebra {
 public:
  static ExplicitAlgebra from_presentation(const Ideal& I);
  static ExplicitAlgebra from_explicit(const ExplicitData& data);

  const Ideal& presentation() const { return pres_; }
  const StrongGroebnerBasis& gb() const { return gb_; }
  const std::vector<Term>& macaulay() const { return macaulay_; }
  const IntMat& syzygy() const { return syz_; }  // canonical HNF rows
  std::size_t dim() const { return macaulay_.size(); }
  int nvars() const { return pres_.nvars; }

  const ModuleStructure& module_structure() const { return structure_; }

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement from_poly(const Polynomial& f) const;
  Polynomial to_poly(const AlgebraElement& a) const;
  AlgebraElement from_coords(std::vector<Int> v) const;  // canonicalizes

  AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement scale(const AlgebraElement& a, const Int& k) const;
  AlgebraElement pow(const AlgebraElement& a, const Int& e) const;  // negative e inverts
  bool is_zero(const AlgebraElement& a) const;
  bool is_one(const AlgebraElement& a) const;

  std::optional<AlgebraElement> element_inverse(const AlgebraElement& a) const;
  // b with m*b = a; throws NotDivisible when no solution exists
  AlgebraElement divide_exact(const AlgebraElement& a, const Int& m) const;

  // structure-constant product of two Macaulay generators
  const std::vector<Int>& product_row(std::size_t i, std::size_t j) const;

 private:
  Ideal pres_;
  StrongGroebnerBasis gb_;
  std::vector<Term> macaulay_;  // g_0 = 1 first, then ascending degrevlex
  std::map<Term, std::size_t> index_;
  IntMat syz_;  // HNF; rows generate the syzygy lattice of the Macaulay generators
  std::vector<std::size_t> syz_pivot_;
  std::vector<std::vector<Int>> sconst_;  // flattened d x d -> coordinate vectors
  ModuleStructure structure_;

  void canonicalize(std::vector<Int>& v) const;
  std::vector<Int> coords_of_nf(const Polynomial& nf) const;
  void build_from_gb();
};

}  // namespace zalg
