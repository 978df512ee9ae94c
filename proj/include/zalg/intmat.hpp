#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zalg/base.hpp"

namespace zalg {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMat identity(std::size_t n);
  static IntMat zero(std::size_t rows, std::size_t cols) { return IntMat(rows, cols); }
  static IntMat from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Int> row(std::size_t i) const;
  void set_row(std::size_t i, const std::vector<Int>& v);

  IntMat transpose() const;
  IntMat operator*(const IntMat& o) const;
  std::vector<Int> apply(const std::vector<Int>& x) const;  // A * x

  bool operator==(const IntMat& o) const = default;
  bool is_zero() const;
  bool row_is_zero(std::size_t i) const;

  void swap_rows(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void row_axpy(std::size_t dst, std::size_t src, const Int& c);  // row_dst += c * row_src
  // (row_i, row_j) <- (a*row_i + b*row_j, c*row_i + d*row_j)
  void combine_rows(std::size_t i, std::size_t j, const Int& a, const Int& b, const Int& c, const Int& d);
  void swap_cols(std::size_t i, std::size_t j);
  void col_axpy(std::size_t dst, std::size_t src, const Int& c);
  void combine_cols(std::size_t i, std::size_t j, const Int& a, const Int& b, const Int& c, const Int& d);

  IntMat vstack(const IntMat& below) const;
  IntMat hstack(const IntMat& right) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

struct HnfResult {
  IntMat h;  // row Hermite normal form: pivots positive, entries above pivots in [0, pivot)
  IntMat u;  // unimodular, u * a = h
};
HnfResult hnf(const IntMat& a);

Int det(const IntMat& a);  // Bareiss fraction-free elimination

// u * a * v = s, s diagonal with d_1 | d_2 | ... | d_t, nonzero entries first.
struct SmithDecomposition {
  IntMat s, u, v;
  std::size_t rank = 0;
  std::vector<Int> invariant_factors;  // the nonzero diagonal entries, in order
};
SmithDecomposition snf(const IntMat& a);

// A sublattice of Z^ambient, stored by its canonical row-HNF basis.
class IntegerLattice {
 public:
  IntegerLattice() = default;

  static IntegerLattice zero(std::size_t ambient);
  static IntegerLattice full(std::size_t ambient);
  static IntegerLattice from_rows(std::size_t ambient, const IntMat& rows);
  static IntegerLattice from_vectors(std::size_t ambient, const std::vector<std::vector<Int>>& rows);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMat& basis() const { return basis_; }

  bool contains(const std::vector<Int>& v) const;
  bool contains(const IntegerLattice& other) const;  // other subset of this
  bool operator==(const IntegerLattice& o) const = default;

  // smallest c > 0 with c * e_coord in the lattice spanned by this restricted to
  // vectors ... (helper: HNF pivot in a column-permuted copy); 0 when none
  std::string to_string() const;

 private:
  std::size_t ambient_ = 0;
  IntMat basis_;  // rank x ambient, canonical
};

IntegerLattice int_kernel(const IntMat& a);  // {x in Z^cols : A x = 0}
IntegerLattice lattice_intersect(const IntegerLattice& l1, const IntegerLattice& l2);

struct ZSolve {
  std::optional<std::vector<Int>> particular;
  IntegerLattice kernel;
};
// Full solution set of A x = b over the integers.
ZSolve solve_integer(const IntMat& a, const std::vector<Int>& b);

struct ModSolve {
  std::optional<std::vector<Int>> particular;
  IntegerLattice homogeneous;  // contains m * Z^cols
};
// Full solution set of A y = b (mod m) over Z^cols, m >= 2.
ModSolve solve_linear_mod(const IntMat& a, const std::vector<Int>& b, const Int& m);

}  // namespace zalg
