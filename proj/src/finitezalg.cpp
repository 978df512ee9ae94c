#include "zalg/finitezalg.hpp"

#include <algorithm>

namespace zalg {

namespace {

bool term_in_box(const Term& t, const std::vector<int>& bound) {
  for (std::size_t i = 0; i < t.e.size(); ++i)
    if (t.e[i] >= bound[i]) return false;
  return true;
}

}  // namespace

ExplicitAlgebra ExplicitAlgebra::from_presentation(const Ideal& I) {
  if (I.dom.kind != Domain::Kind::Z)
    throw InternalError("ExplicitAlgebra: presentation must live over Z");
  ExplicitAlgebra R;
  R.pres_ = I;
  R.gb_ = strong_groebner(I);
  R.build_from_gb();
  return R;
}

void ExplicitAlgebra::build_from_gb() {
  const Ideal& I = pres_;
  int n = I.nvars;
  // monic leading monomials; module-finiteness needs a pure power per variable
  std::vector<Term> monic_lms;
  std::vector<Polynomial> monic_elems, nonmonic_elems;
  for (auto& g : gb_.elements) {
    auto [t, c] = g.leading(gb_.ord);
    if (c == 1) {
      monic_lms.push_back(t);
      monic_elems.push_back(g);
    } else {
      nonmonic_elems.push_back(g);
    }
  }
  std::vector<int> bound(n, -1);
  for (auto& t : monic_lms) {
    int nz = 0, var = -1;
    for (int i = 0; i < n; ++i)
      if (t.e[i] > 0) {
        ++nz;
        var = i;
      }
    if (nz == 1 && (bound[var] < 0 || t.e[var] < bound[var])) bound[var] = t.e[var];
    if (nz == 0) bound.assign(n, 0);  // unit ideal
  }
  for (int i = 0; i < n; ++i)
    if (bound[i] < 0)
      throw NotModuleFinite("no pure power of variable " + std::to_string(i + 1) +
                            " among the monic leading monomials");

  // Macaulay generators: terms outside the monic leading-monomial ideal
  std::vector<Term> box;
  if (n > 0) {
    std::vector<int> idx(n, 0);
    while (true) {
      Term t = Term::one(n);
      for (int i = 0; i < n; ++i) t.e[i] = idx[i];
      box.push_back(t);
      int p = n - 1;
      while (p >= 0) {
        if (++idx[p] < std::max(bound[p], 1)) break;
        idx[p] = 0;
        --p;
      }
      if (p < 0) break;
    }
  } else {
    box.push_back(Term::one(0));
  }
  macaulay_.clear();
  for (auto& t : box) {
    bool in_lm_ideal = false;
    for (auto& l : monic_lms)
      if (l.divides(t)) in_lm_ideal = true;
    if (!in_lm_ideal) macaulay_.push_back(t);
  }
  std::sort(macaulay_.begin(), macaulay_.end(), [](const Term& a, const Term& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.e < b.e;
  });
  index_.clear();
  for (std::size_t i = 0; i < macaulay_.size(); ++i) index_[macaulay_[i]] = i;
  std::size_t d = macaulay_.size();

  // syzygies: canonical monic-only remainders of t*g for non-monic g
  StrongGroebnerBasis monic_basis;
  monic_basis.dom = I.dom;
  monic_basis.nvars = n;
  monic_basis.ord = gb_.ord;
  monic_basis.elements = monic_elems;
  std::vector<std::vector<Int>> rows;
  for (auto& g : nonmonic_elems) {
    Term lm = g.leading(gb_.ord).first;
    for (auto& t : macaulay_) {
      Term prod = t.mul(lm);
      if (index_.find(prod) == index_.end()) continue;
      Polynomial h = g.mul_term(t, Rat(1));
      Polynomial nf = monic_elems.empty() ? h : normal_form(h, monic_basis);
      rows.push_back(coords_of_nf(nf));
    }
  }
  IntegerLattice lat = IntegerLattice::from_vectors(d, rows);
  syz_ = lat.basis();
  syz_pivot_.clear();
  for (std::size_t i = 0; i < syz_.rows(); ++i) {
    std::size_t p = 0;
    while (p < d && syz_.at(i, p) == 0) ++p;
    syz_pivot_.push_back(p);
  }

  // module structure from the Smith normal form of the syzygy matrix
  structure_ = ModuleStructure{};
  if (syz_.rows() == 0) {
    structure_.rank = d;
  } else {
    SmithDecomposition s = snf(syz_);
    structure_.rank = d - s.rank;
    for (auto& f : s.invariant_factors)
      if (f > 1) structure_.invariant_factors.push_back(f);
    if (!structure_.invariant_factors.empty())
      structure_.torsion_exponent = structure_.invariant_factors.back();
  }

  // structure constants
  sconst_.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Polynomial prod = Polynomial::monomial(Domain::ZZ(), n, macaulay_[i].mul(macaulay_[j]), 1);
      std::vector<Int> v = coords_of_nf(normal_form(prod, gb_));
      canonicalize(v);
      sconst_[i * d + j] = v;
      sconst_[j * d + i] = std::move(v);
    }
}

ExplicitAlgebra ExplicitAlgebra::from_explicit(const ExplicitData& data) {
  int n = data.n;
  std::size_t d = static_cast<std::size_t>(n) + 1;
  if (data.syzygy.rows() > 0 && data.syzygy.cols() != d)
    throw InternalError("from_explicit: syzygy width must be n+1");
  IntegerLattice syzlat = IntegerLattice::from_rows(d, data.syzygy);
  auto get_product = [&](int i, int j) -> std::vector<Int> {
    if (i == 0) {
      std::vector<Int> v(d, 0);
      v[j] = 1;
      return v;
    }
    if (j == 0) {
      std::vector<Int> v(d, 0);
      v[i] = 1;
      return v;
    }
    auto key = std::make_pair(std::min(i, j), std::max(i, j));
    auto it = data.products.find(key);
    if (it == data.products.end())
      throw InternalError("from_explicit: missing product for generators " + std::to_string(i) +
                          "," + std::to_string(j));
    if (it->second.size() != d) throw InternalError("from_explicit: product row width mismatch");
    return it->second;
  };
  // associativity on all triples, checked modulo the syzygy lattice
  auto mul_vec = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (b[j] == 0) continue;
        std::vector<Int> pij = get_product(static_cast<int>(i), static_cast<int>(j));
        for (std::size_t k = 0; k < d; ++k) out[k] += a[i] * b[j] * pij[k];
      }
    }
    return out;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) {
        std::vector<Int> ei(d, 0), ej(d, 0), ek(d, 0);
        ei[i] = ej[j] = ek[k] = 1;
        std::vector<Int> lhs = mul_vec(mul_vec(ei, ej), ek);
        std::vector<Int> rhs = mul_vec(ei, mul_vec(ej, ek));
        std::vector<Int> diff(d);
        for (std::size_t t = 0; t < d; ++t) diff[t] = lhs[t] - rhs[t];
        if (!syzlat.contains(diff))
          throw InternalError("from_explicit: structure constants are not associative");
      }
  // encode as the Remark-2.1 ideal and rebuild from the presentation
  Domain Z = Domain::ZZ();
  std::vector<Polynomial> gens;
  auto coord_poly = [&](const std::vector<Int>& v) {
    Polynomial f = Polynomial::constant(Z, n, Rat(v[0]));
    for (int k = 1; k <= n; ++k)
      f = f + Polynomial::variable(Z, n, k - 1).scaled(Rat(v[k]));
    return f;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Polynomial xij = Polynomial::variable(Z, n, i - 1) * Polynomial::variable(Z, n, j - 1);
      gens.push_back(xij - coord_poly(get_product(i, j)));
    }
  for (std::size_t r = 0; r < data.syzygy.rows(); ++r) gens.push_back(coord_poly(data.syzygy.row(r)));
  return from_presentation(Ideal::make(Z, n, gens));
}

void ExplicitAlgebra::canonicalize(std::vector<Int>& v) const {
  for (std::size_t i = 0; i < syz_.rows(); ++i) {
    std::size_t p = syz_pivot_[i];
    if (p >= v.size()) continue;
    Int q = fdiv(v[p], syz_.at(i, p));
    if (q == 0) continue;
    for (std::size_t j = p; j < v.size(); ++j) v[j] -= q * syz_.at(i, j);
  }
}

std::vector<Int> ExplicitAlgebra::coords_of_nf(const Polynomial& nf) const {
  std::vector<Int> v(macaulay_.size(), 0);
  for (auto& [t, c] : nf.terms()) {
    auto it = index_.find(t);
    if (it == index_.end())
      throw InternalError("normal form leaves the Macaulay span");
    v[it->second] = c.get_num();
  }
  return v;
}

AlgebraElement ExplicitAlgebra::zero() const { return {std::vector<Int>(dim(), 0)}; }

AlgebraElement ExplicitAlgebra::one() const {
  std::vector<Int> v(dim(), 0);
  if (!v.empty()) v[0] = 1;  // the constant term is always the first generator
  AlgebraElement a{std::move(v)};
  canonicalize(a.c);
  return a;
}

AlgebraElement ExplicitAlgebra::from_poly(const Polynomial& f) const {
  Polynomial nf = normal_form(f.domain() == pres_.dom ? f : f.map_domain(pres_.dom), gb_);
  std::vector<Int> v = coords_of_nf(nf);
  canonicalize(v);
  return {std::move(v)};
}

Polynomial ExplicitAlgebra::to_poly(const AlgebraElement& a) const {
  Polynomial f = Polynomial::zero(Domain::ZZ(), nvars());
  for (std::size_t i = 0; i < dim(); ++i)
    if (a.c[i] != 0) f = f + Polynomial::monomial(Domain::ZZ(), nvars(), macaulay_[i], Rat(a.c[i]));
  return f;
}

AlgebraElement ExplicitAlgebra::from_coords(std::vector<Int> v) const {
  if (v.size() != dim()) throw InternalError("from_coords: wrong length");
  canonicalize(v);
  return {std::move(v)};
}

AlgebraElement ExplicitAlgebra::add(const AlgebraElement& a, const AlgebraElement& b) const {
  std::vector<Int> v(dim());
  for (std::size_t i = 0; i < dim(); ++i) v[i] = a.c[i] + b.c[i];
  canonicalize(v);
  return {std::move(v)};
}

AlgebraElement ExplicitAlgebra::sub(const AlgebraElement& a, const AlgebraElement& b) const {
  std::vector<Int> v(dim());
  for (std::size_t i = 0; i < dim(); ++i) v[i] = a.c[i] - b.c[i];
  canonicalize(v);
  return {std::move(v)};
}

const std::vector<Int>& ExplicitAlgebra::product_row(std::size_t i, std::size_t j) const {
  return sconst_[i * dim() + j];
}

AlgebraElement ExplicitAlgebra::mul(const AlgebraElement& a, const AlgebraElement& b) const {
  std::size_t d = dim();
  std::vector<Int> v(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.c[j] == 0) continue;
      Int coef = a.c[i] * b.c[j];
      const std::vector<Int>& row = sconst_[i * d + j];
      for (std::size_t k = 0; k < d; ++k)
        if (row[k] != 0) v[k] += coef * row[k];
    }
  }
  canonicalize(v);
  return {std::move(v)};
}

AlgebraElement ExplicitAlgebra::scale(const AlgebraElement& a, const Int& k) const {
  std::vector<Int> v(dim());
  for (std::size_t i = 0; i < dim(); ++i) v[i] = a.c[i] * k;
  canonicalize(v);
  return {std::move(v)};
}

AlgebraElement ExplicitAlgebra::pow(const AlgebraElement& a, const Int& e) const {
  if (e < 0) {
    auto inv = element_inverse(a);
    if (!inv) throw NonUnitElement("negative power of a non-unit");
    return pow(*inv, -e);
  }
  AlgebraElement r = one(), b = a;
  Int k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

bool ExplicitAlgebra::is_zero(const AlgebraElement& a) const {
  for (const Int& x : a.c)
    if (x != 0) return false;
  return true;
}

bool ExplicitAlgebra::is_one(const AlgebraElement& a) const { return a == one(); }

std::optional<AlgebraElement> ExplicitAlgebra::element_inverse(const AlgebraElement& a) const {
  std::size_t d = dim();
  if (d == 0) return std::nullopt;
  // columns: a*g_j for each Macaulay generator, then the syzygy lattice
  IntMat m(d, d + syz_.rows());
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Int> col(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (a.c[i] == 0) continue;
      const std::vector<Int>& row = sconst_[i * d + j];
      for (std::size_t k = 0; k < d; ++k) col[k] += a.c[i] * row[k];
    }
    for (std::size_t k = 0; k < d; ++k) m.at(k, j) = col[k];
  }
  for (std::size_t r = 0; r < syz_.rows(); ++r)
    for (std::size_t k = 0; k < d; ++k) m.at(k, d + r) = syz_.at(r, k);
  ZSolve s = solve_integer(m, one().c);
  if (!s.particular) return std::nullopt;
  std::vector<Int> b(s.particular->begin(), s.particular->begin() + d);
  AlgebraElement out = from_coords(std::move(b));
  if (!is_one(mul(a, out))) throw InternalError("element_inverse: verification failed");
  return out;
}

AlgebraElement ExplicitAlgebra::divide_exact(const AlgebraElement& a, const Int& m) const {
  if (m <= 0) throw InternalError("divide_exact: modulus must be positive");
  std::size_t d = dim();
  IntMat mat(d, d + syz_.rows());
  for (std::size_t k = 0; k < d; ++k) mat.at(k, k) = m;
  for (std::size_t r = 0; r < syz_.rows(); ++r)
    for (std::size_t k = 0; k < d; ++k) mat.at(k, d + r) = syz_.at(r, k);
  ZSolve s = solve_integer(mat, a.c);
  if (!s.particular) throw NotDivisible("element is not divisible by " + m.get_str());
  std::vector<Int> b(s.particular->begin(), s.particular->begin() + d);
  return from_coords(std::move(b));
}

}  // namespace zalg
