#include "zalg/intmat.hpp"

#include <sstream>

namespace zalg {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return IntMat();
  IntMat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InternalError("IntMat::from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMat::row(std::size_t i) const {
  return std::vector<Int>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

void IntMat::set_row(std::size_t i, const std::vector<Int>& v) {
  if (v.size() != cols_) throw InternalError("IntMat::set_row: size mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw InternalError("IntMat::operator*: shape mismatch");
  IntMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& x) const {
  if (x.size() != cols_) throw InternalError("IntMat::apply: size mismatch");
  std::vector<Int> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * x[j];
  return r;
}

bool IntMat::is_zero() const {
  for (const Int& v : a_)
    if (v != 0) return false;
  return true;
}

bool IntMat::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j)
    if (at(i, j) != 0) return false;
  return true;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMat::row_axpy(std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

void IntMat::combine_rows(std::size_t i, std::size_t j, const Int& a, const Int& b, const Int& c,
                          const Int& d) {
  for (std::size_t k = 0; k < cols_; ++k) {
    Int x = at(i, k), y = at(j, k);
    at(i, k) = a * x + b * y;
    at(j, k) = c * x + d * y;
  }
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMat::col_axpy(std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += c * at(r, src);
}

void IntMat::combine_cols(std::size_t i, std::size_t j, const Int& a, const Int& b, const Int& c,
                          const Int& d) {
  for (std::size_t r = 0; r < rows_; ++r) {
    Int x = at(r, i), y = at(r, j);
    at(r, i) = a * x + b * y;
    at(r, j) = c * x + d * y;
  }
}

IntMat IntMat::vstack(const IntMat& below) const {
  if (rows_ == 0 && cols_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) throw InternalError("IntMat::vstack: shape mismatch");
  IntMat r(rows_ + below.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = below.at(i, j);
  return r;
}

IntMat IntMat::hstack(const IntMat& right) const {
  if (rows_ != right.rows_) throw InternalError("IntMat::hstack: shape mismatch");
  IntMat r(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) r.at(i, cols_ + j) = right.at(i, j);
  }
  return r;
}

std::string IntMat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? " [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

HnfResult hnf(const IntMat& a) {
  std::size_t m = a.rows(), n = a.cols();
  HnfResult res{a, IntMat::identity(m)};
  IntMat& h = res.h;
  IntMat& u = res.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = m;
    for (std::size_t i = r; i < m; ++i)
      if (h.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == m) continue;
    h.swap_rows(r, piv);
    u.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (h.at(i, c) == 0) continue;
      if (h.at(i, c) % h.at(r, c) == 0) {
        Int q = h.at(i, c) / h.at(r, c);
        h.row_axpy(i, r, -q);
        u.row_axpy(i, r, -q);
        continue;
      }
      XGcd e = xgcd(h.at(r, c), h.at(i, c));
      Int p = h.at(r, c) / e.g, q = h.at(i, c) / e.g;
      h.combine_rows(r, i, e.s, e.t, -q, p);
      u.combine_rows(r, i, e.s, e.t, -q, p);
    }
    if (h.at(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = fdiv(h.at(i, c), h.at(r, c));
      if (q != 0) {
        h.row_axpy(i, r, -q);
        u.row_axpy(i, r, -q);
      }
    }
    ++r;
  }
  return res;
}

Int det(const IntMat& a) {
  if (a.rows() != a.cols()) throw InternalError("det: non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMat w = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t piv = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv == n) return 0;
      w.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        w.at(i, j) = exact_div(w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j), prev);
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

SmithDecomposition snf(const IntMat& a) {
  std::size_t m = a.rows(), n = a.cols();
  SmithDecomposition res;
  res.s = a;
  res.u = IntMat::identity(m);
  res.v = IntMat::identity(n);
  IntMat& s = res.s;
  IntMat& u = res.u;
  IntMat& v = res.v;
  std::size_t mn = std::min(m, n);
  for (std::size_t t = 0; t < mn; ++t) {
    // locate a nonzero entry in the trailing block
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m && pi == m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (s.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == m) break;
    s.swap_rows(t, pi);
    u.swap_rows(t, pi);
    s.swap_cols(t, pj);
    v.swap_cols(t, pj);
    while (true) {
      check_deadline();
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s.at(i, t) == 0) continue;
        if (s.at(i, t) % s.at(t, t) == 0) {
          Int q = s.at(i, t) / s.at(t, t);
          s.row_axpy(i, t, -q);
          u.row_axpy(i, t, -q);
        } else {
          XGcd e = xgcd(s.at(t, t), s.at(i, t));
          Int p = s.at(t, t) / e.g, q = s.at(i, t) / e.g;
          s.combine_rows(t, i, e.s, e.t, -q, p);
          u.combine_rows(t, i, e.s, e.t, -q, p);
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s.at(t, j) == 0) continue;
        if (s.at(t, j) % s.at(t, t) == 0) {
          Int q = s.at(t, j) / s.at(t, t);
          s.col_axpy(j, t, -q);
          v.col_axpy(j, t, -q);
        } else {
          XGcd e = xgcd(s.at(t, t), s.at(t, j));
          Int p = s.at(t, t) / e.g, q = s.at(t, j) / e.g;
          s.combine_cols(t, j, e.s, e.t, -q, p);
          v.combine_cols(t, j, e.s, e.t, -q, p);
        }
      }
      bool col_dirty = false;
      for (std::size_t i = t + 1; i < m; ++i)
        if (s.at(i, t) != 0) col_dirty = true;
      if (col_dirty) continue;
      // force s(t,t) to divide the whole trailing block
      std::size_t bi = m;
      for (std::size_t i = t + 1; i < m && bi == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            bi = i;
            break;
          }
      if (bi == m) break;
      s.row_axpy(t, bi, 1);
      u.row_axpy(t, bi, 1);
    }
    if (s.at(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  for (std::size_t t = 0; t < mn; ++t)
    if (s.at(t, t) != 0) {
      res.invariant_factors.push_back(s.at(t, t));
      ++res.rank;
    }
  return res;
}

IntegerLattice IntegerLattice::zero(std::size_t ambient) {
  IntegerLattice l;
  l.ambient_ = ambient;
  l.basis_ = IntMat(0, ambient);
  return l;
}

IntegerLattice IntegerLattice::full(std::size_t ambient) {
  IntegerLattice l;
  l.ambient_ = ambient;
  l.basis_ = IntMat::identity(ambient);
  return l;
}

IntegerLattice IntegerLattice::from_rows(std::size_t ambient, const IntMat& rows) {
  if (rows.rows() > 0 && rows.cols() != ambient)
    throw InternalError("IntegerLattice::from_rows: ambient mismatch");
  IntegerLattice l;
  l.ambient_ = ambient;
  if (rows.rows() == 0) {
    l.basis_ = IntMat(0, ambient);
    return l;
  }
  HnfResult r = hnf(rows);
  std::size_t nz = 0;
  while (nz < r.h.rows() && !r.h.row_is_zero(nz)) ++nz;
  IntMat b(nz, ambient);
  for (std::size_t i = 0; i < nz; ++i)
    for (std::size_t j = 0; j < ambient; ++j) b.at(i, j) = r.h.at(i, j);
  l.basis_ = b;
  return l;
}

IntegerLattice IntegerLattice::from_vectors(std::size_t ambient,
                                            const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return zero(ambient);
  return from_rows(ambient, IntMat::from_rows(rows));
}

bool IntegerLattice::contains(const std::vector<Int>& v) const {
  if (v.size() != ambient_) throw InternalError("IntegerLattice::contains: dimension mismatch");
  std::vector<Int> w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (p < ambient_ && basis_.at(i, p) == 0) ++p;
    if (p == ambient_) continue;
    if (w[p] == 0) continue;
    if (w[p] % basis_.at(i, p) != 0) return false;
    Int q = w[p] / basis_.at(i, p);
    for (std::size_t j = p; j < ambient_; ++j) w[j] -= q * basis_.at(i, j);
  }
  for (const Int& x : w)
    if (x != 0) return false;
  return true;
}

bool IntegerLattice::contains(const IntegerLattice& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::string IntegerLattice::to_string() const { return basis_.to_string(); }

IntegerLattice int_kernel(const IntMat& a) {
  // left kernel of a^T equals {x : a x = 0}
  HnfResult r = hnf(a.transpose());
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < r.h.rows(); ++i)
    if (r.h.row_is_zero(i)) rows.push_back(r.u.row(i));
  return IntegerLattice::from_vectors(a.cols(), rows);
}

IntegerLattice lattice_intersect(const IntegerLattice& l1, const IntegerLattice& l2) {
  if (l1.ambient_dim() != l2.ambient_dim())
    throw InternalError("lattice_intersect: ambient dimension mismatch");
  std::size_t n = l1.ambient_dim();
  std::size_t r1 = l1.rank(), r2 = l2.rank();
  if (r1 == 0 || r2 == 0) return IntegerLattice::zero(n);
  // x = a * B1 = b * B2  <=>  (a, b) in ker [B1^T | -B2^T]
  IntMat k(n, r1 + r2);
  for (std::size_t j = 0; j < r1; ++j)
    for (std::size_t i = 0; i < n; ++i) k.at(i, j) = l1.basis().at(j, i);
  for (std::size_t j = 0; j < r2; ++j)
    for (std::size_t i = 0; i < n; ++i) k.at(i, r1 + j) = -l2.basis().at(j, i);
  IntegerLattice ker = int_kernel(k);
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < ker.rank(); ++i) {
    std::vector<Int> x(n);
    for (std::size_t j = 0; j < r1; ++j)
      for (std::size_t c = 0; c < n; ++c) x[c] += ker.basis().at(i, j) * l1.basis().at(j, c);
    rows.push_back(std::move(x));
  }
  return IntegerLattice::from_vectors(n, rows);
}

ZSolve solve_integer(const IntMat& a, const std::vector<Int>& b) {
  if (b.size() != a.rows()) throw InternalError("solve_integer: size mismatch");
  std::size_t m = a.rows(), n = a.cols();
  ZSolve out;
  if (n == 0) {
    bool ok = true;
    for (const Int& x : b)
      if (x != 0) ok = false;
    if (ok) out.particular = std::vector<Int>{};
    out.kernel = IntegerLattice::zero(0);
    return out;
  }
  HnfResult r = hnf(a.transpose());  // r.h = r.u * a^T, n x m
  // forward-substitute y * h = b (y row vector), then x = y * u
  std::vector<Int> y(n, 0), resid = b;
  bool feasible = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t p = 0;
    while (p < m && r.h.at(i, p) == 0) ++p;
    if (p == m) break;  // kernel rows from here on
    if (resid[p] % r.h.at(i, p) != 0) {
      feasible = false;
      break;
    }
    Int q = resid[p] / r.h.at(i, p);
    y[i] = q;
    if (q != 0)
      for (std::size_t j = 0; j < m; ++j) resid[j] -= q * r.h.at(i, j);
  }
  if (feasible)
    for (const Int& x : resid)
      if (x != 0) feasible = false;
  if (feasible) {
    std::vector<Int> x(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (y[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) x[j] += y[i] * r.u.at(i, j);
    }
    out.particular = std::move(x);
  }
  std::vector<std::vector<Int>> ker;
  for (std::size_t i = 0; i < n; ++i)
    if (r.h.row_is_zero(i)) ker.push_back(r.u.row(i));
  out.kernel = IntegerLattice::from_vectors(n, ker);
  return out;
}

ModSolve solve_linear_mod(const IntMat& a, const std::vector<Int>& b, const Int& m) {
  if (m < 2) throw InternalError("solve_linear_mod: modulus must be >= 2");
  std::size_t rows = a.rows(), n = a.cols();
  IntMat aug = a.hstack(IntMat::identity(rows));
  for (std::size_t i = 0; i < rows; ++i) aug.at(i, n + i) = m;
  ZSolve zs = solve_integer(aug, b);
  ModSolve out;
  if (zs.particular) {
    std::vector<Int> y(zs.particular->begin(), zs.particular->begin() + n);
    for (Int& x : y) x = mod_pos(x, m);
    out.particular = std::move(y);
  }
  std::vector<std::vector<Int>> rows_out;
  for (std::size_t i = 0; i < zs.kernel.rank(); ++i) {
    std::vector<Int> y(n);
    for (std::size_t j = 0; j < n; ++j) y[j] = zs.kernel.basis().at(i, j);
    rows_out.push_back(std::move(y));
  }
  // the projection always contains m Z^n
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Int> y(n, 0);
    y[j] = m;
    rows_out.push_back(std::move(y));
  }
  out.homogeneous = IntegerLattice::from_vectors(n, rows_out);
  return out;
}

}  // namespace zalg
