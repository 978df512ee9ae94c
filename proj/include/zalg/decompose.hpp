#pragma once

#include <optional>

#include "zalg/finitezalg.hpp"
#include "zalg/unipoly.hpp"

namespace zalg {

// ---------------------------------------------------------- field linalg

// Row-reduce over the coefficient field K (Q or Fp).
struct KEchelon {
  std::vector<std::vector<Rat>> rows;  // nonzero echelon rows
  std::vector<std::size_t> pivots;
};
KEchelon k_echelon(const Domain& K, std::vector<std::vector<Rat>> rows);
bool k_in_span(const Domain& K, const KEchelon& span, std::vector<Rat> v);
std::vector<std::vector<Rat>> k_kernel(const Domain& K,
                                       const std::vector<std::vector<Rat>>& rows_a,
                                       std::size_t ncols);
std::optional<std::vector<Rat>> k_solve(const Domain& K,
                                        const std::vector<std::vector<Rat>>& rows_a,
                                        const std::vector<Rat>& b);

// ---------------------------------------------------------- field algebra

// Zero-dimensional quotient K[x_1..x_n]/I with a Macaulay coordinate system.
class FieldAlgebra {
 public:
  static FieldAlgebra build(const Ideal& I);

  const Ideal& ideal() const { return ideal_; }
  const StrongGroebnerBasis& gb() const { return gb_; }
  const Domain& field() const { return ideal_.dom; }
  int nvars() const { return ideal_.nvars; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Term>& basis() const { return basis_; }

  std::vector<Rat> coords(const Polynomial& f) const;
  Polynomial from_coords(const std::vector<Rat>& v) const;
  std::vector<Rat> one() const;
  std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
  std::vector<Rat> power(const std::vector<Rat>& a, const Int& e) const;  // e >= 0
  std::optional<std::vector<Rat>> inverse(const std::vector<Rat>& a) const;
  bool is_zero(const std::vector<Rat>& a) const;

  // monic minimal polynomial, coefficients low to high
  std::vector<Rat> minpoly(const std::vector<Rat>& a) const;

 private:
  Ideal ideal_;
  StrongGroebnerBasis gb_;
  std::vector<Term> basis_;
  std::map<Term, std::size_t> index_;
  std::vector<std::vector<Rat>> sconst_;
};

// ---------------------------------------------------------- factorization

// f supported on one indeterminate over Q or Fp; monic irreducible factors.
std::vector<std::pair<Polynomial, int>> factor_univariate(const Polynomial& f,
                                                          std::uint64_t seed = 0);

// ---------------------------------------------------------- decomposition

struct FiniteFieldRep {
  Int p;
  int deg = 1;
  uni::PPoly modulus;                  // monic irreducible of degree deg
  std::vector<uni::PPoly> var_images;  // image of each ambient variable in F_p[t]/modulus
  Polynomial theta_poly;               // a preimage of t in the ambient variables, over F_p
};

FiniteFieldRep finite_field_rep(const Ideal& maximal_ideal_Fp, std::uint64_t seed);

Int ff_card(const FiniteFieldRep& F);  // p^deg
uni::PPoly ff_one(const FiniteFieldRep& F);
bool ff_is_one(const FiniteFieldRep& F, const uni::PPoly& a);
uni::PPoly ff_mul(const FiniteFieldRep& F, const uni::PPoly& a, const uni::PPoly& b);
uni::PPoly ff_pow(const FiniteFieldRep& F, const uni::PPoly& a, const Int& e);  // e may be negative
// image of a polynomial in the ambient variables (over Z or over F_p)
uni::PPoly ff_image(const FiniteFieldRep& F, const Polynomial& f);

struct ZeroDimComponent {
  Ideal maximal_ideal;    // over K
  Ideal local_ideal;      // I + <1 - e>; equals the maximal ideal on reduced input
  Polynomial idempotent;  // e, exact idempotent of K[x]/I
  int residue_degree = 1;
};

std::vector<ZeroDimComponent> zerodim_decompose(const Ideal& I_K, std::uint64_t seed);

std::vector<Polynomial> primitive_idempotents_Q(const Ideal& I_Q, std::uint64_t seed);

struct PrimeComponent {
  Ideal prime_ideal;  // over Z
  Int characteristic; // 0 or p
  std::optional<FiniteFieldRep> finite_field;  // present when characteristic > 0
};

std::vector<PrimeComponent> minimal_primes(const ExplicitAlgebra& R, std::uint64_t seed);

struct Nilradical {
  Ideal ideal;  // as an ideal of P containing the presentation
  int nilpotency_index = 1;
};
Nilradical nilradical(const ExplicitAlgebra& R, std::uint64_t seed);

// Orthogonal idempotents for pairwise comaximal ideals containing the
// presentation: e_i = 1 mod J_i and e_i = 0 mod J_j for j != i.
std::vector<AlgebraElement> crt_orthogonal_idempotents(const ExplicitAlgebra& R,
                                                       const std::vector<Ideal>& ideals);

}  // namespace zalg
