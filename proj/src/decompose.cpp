#include "zalg/decompose.hpp"

#include <algorithm>
#include <functional>

namespace zalg {

// ---------------------------------------------------------- field linalg

namespace {

Rat k_norm(const Domain& K, const Rat& v) {
  if (K.kind != Domain::Kind::Fp) return v;
  Int num = v.get_num(), den = v.get_den();
  Int r = mod_pos(num, K.p);
  if (den != 1) {
    auto inv = invmod(mod_pos(den, K.p), K.p);
    if (!inv) throw InternalError("k_norm: denominator not invertible");
    r = mod_pos(r * *inv, K.p);
  }
  return Rat(r);
}

Rat k_div(const Domain& K, const Rat& a, const Rat& b) {
  if (K.kind == Domain::Kind::Fp) {
    auto inv = invmod(b.get_num(), K.p);
    if (!inv) throw InternalError("k_div: division by a non-unit");
    return Rat(mod_pos(a.get_num() * *inv, K.p));
  }
  return a / b;
}

}  // namespace

KEchelon k_echelon(const Domain& K, std::vector<std::vector<Rat>> rows) {
  KEchelon e;
  for (auto& r : rows) {
    for (auto& v : r) v = k_norm(K, v);
    // eliminate against current echelon
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      const Rat c = r[e.pivots[i]];
      if (c != 0)
        for (std::size_t j = 0; j < r.size(); ++j)
          r[j] = k_norm(K, r[j] - c * e.rows[i][j]);
    }
    std::size_t p = 0;
    while (p < r.size() && r[p] == 0) ++p;
    if (p == r.size()) continue;
    Rat lead = r[p];
    for (auto& v : r) v = k_div(K, v, lead);
    // back-substitute into existing rows
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      const Rat c = e.rows[i][p];
      if (c != 0)
        for (std::size_t j = 0; j < r.size(); ++j)
          e.rows[i][j] = k_norm(K, e.rows[i][j] - c * r[j]);
    }
    std::size_t at = 0;
    while (at < e.pivots.size() && e.pivots[at] < p) ++at;
    e.rows.insert(e.rows.begin() + at, r);
    e.pivots.insert(e.pivots.begin() + at, p);
  }
  return e;
}

bool k_in_span(const Domain& K, const KEchelon& span, std::vector<Rat> v) {
  for (auto& x : v) x = k_norm(K, x);
  for (std::size_t i = 0; i < span.rows.size(); ++i) {
    const Rat c = v[span.pivots[i]];
    if (c != 0)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = k_norm(K, v[j] - c * span.rows[i][j]);
  }
  for (auto& x : v)
    if (x != 0) return false;
  return true;
}

std::vector<std::vector<Rat>> k_kernel(const Domain& K,
                                       const std::vector<std::vector<Rat>>& rows_a,
                                       std::size_t ncols) {
  KEchelon e = k_echelon(K, rows_a);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> out;
  for (std::size_t j = 0; j < ncols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[j] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i)
      v[e.pivots[i]] = k_norm(K, -e.rows[i][j]);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Rat>> k_solve(const Domain& K,
                                        const std::vector<std::vector<Rat>>& rows_a,
                                        const std::vector<Rat>& b) {
  std::size_t m = rows_a.size();
  std::size_t n = m ? rows_a[0].size() : 0;
  std::vector<std::vector<Rat>> aug(m);
  for (std::size_t i = 0; i < m; ++i) {
    aug[i] = rows_a[i];
    aug[i].push_back(b[i]);
  }
  KEchelon e = k_echelon(K, aug);
  std::vector<Rat> x(n, Rat(0));
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == n) return std::nullopt;  // inconsistent row
    x[e.pivots[i]] = e.rows[i][n];
  }
  return x;
}

// ---------------------------------------------------------- field algebra

FieldAlgebra FieldAlgebra::build(const Ideal& I) {
  if (!I.dom.is_field()) throw InternalError("FieldAlgebra: coefficient domain must be a field");
  FieldAlgebra A;
  A.ideal_ = I;
  A.gb_ = strong_groebner(I);
  int n = I.nvars;
  std::vector<Term> lms;
  for (auto& g : A.gb_.elements) lms.push_back(g.leading(A.gb_.ord).first);
  std::vector<int> bound(n, -1);
  bool unit_ideal = false;
  for (auto& t : lms) {
    int nz = 0, var = -1;
    for (int i = 0; i < n; ++i)
      if (t.e[i] > 0) {
        ++nz;
        var = i;
      }
    if (nz == 0) unit_ideal = true;
    if (nz == 1 && (bound[var] < 0 || t.e[var] < bound[var])) bound[var] = t.e[var];
  }
  if (unit_ideal) return A;  // zero algebra
  for (int i = 0; i < n; ++i)
    if (bound[i] < 0)
      throw NotModuleFinite("ideal is not zero-dimensional over the field");
  std::vector<int> idx(n, 0);
  while (true) {
    Term t = Term::one(n);
    for (int i = 0; i < n; ++i) t.e[i] = idx[i];
    bool in_lm = false;
    for (auto& l : lms)
      if (l.divides(t)) in_lm = true;
    if (!in_lm) A.basis_.push_back(t);
    int p = n - 1;
    while (p >= 0) {
      if (++idx[p] < bound[p]) break;
      idx[p] = 0;
      --p;
    }
    if (p < 0) break;
  }
  std::sort(A.basis_.begin(), A.basis_.end(), [](const Term& a, const Term& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.e < b.e;
  });
  for (std::size_t i = 0; i < A.basis_.size(); ++i) A.index_[A.basis_[i]] = i;
  std::size_t d = A.basis_.size();
  A.sconst_.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Polynomial prod = Polynomial::monomial(I.dom, n, A.basis_[i].mul(A.basis_[j]), 1);
      std::vector<Rat> v = A.coords(normal_form(prod, A.gb_));
      A.sconst_[i * d + j] = v;
      A.sconst_[j * d + i] = std::move(v);
    }
  return A;
}

std::vector<Rat> FieldAlgebra::coords(const Polynomial& f) const {
  Polynomial nf = normal_form(f.domain() == ideal_.dom ? f : f.map_domain(ideal_.dom), gb_);
  std::vector<Rat> v(dim(), Rat(0));
  for (auto& [t, c] : nf.terms()) {
    auto it = index_.find(t);
    if (it == index_.end()) throw InternalError("FieldAlgebra: normal form leaves the basis span");
    v[it->second] = c;
  }
  return v;
}

Polynomial FieldAlgebra::from_coords(const std::vector<Rat>& v) const {
  Polynomial f = Polynomial::zero(ideal_.dom, nvars());
  for (std::size_t i = 0; i < dim(); ++i)
    if (v[i] != 0) f = f + Polynomial::monomial(ideal_.dom, nvars(), basis_[i], v[i]);
  return f;
}

std::vector<Rat> FieldAlgebra::one() const {
  std::vector<Rat> v(dim(), Rat(0));
  if (!v.empty()) v[0] = 1;
  return v;
}

std::vector<Rat> FieldAlgebra::mul(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
  std::size_t d = dim();
  std::vector<Rat> v(d, Rat(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      Rat c = a[i] * b[j];
      const std::vector<Rat>& row = sconst_[i * d + j];
      for (std::size_t k = 0; k < d; ++k)
        if (row[k] != 0) v[k] += c * row[k];
    }
  }
  for (auto& x : v) x = k_norm(ideal_.dom, x);
  return v;
}

std::vector<Rat> FieldAlgebra::power(const std::vector<Rat>& a, const Int& e) const {
  if (e < 0) throw InternalError("FieldAlgebra::power: negative exponent");
  std::vector<Rat> r = one(), b = a;
  Int k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

std::optional<std::vector<Rat>> FieldAlgebra::inverse(const std::vector<Rat>& a) const {
  std::size_t d = dim();
  // rows of the linear system M x = e_1 with M the multiplication-by-a matrix
  std::vector<std::vector<Rat>> rows(d, std::vector<Rat>(d, Rat(0)));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      if (a[i] == 0) continue;
      const std::vector<Rat>& row = sconst_[i * d + j];
      for (std::size_t k = 0; k < d; ++k) rows[k][j] += a[i] * row[k];
    }
  auto x = k_solve(ideal_.dom, rows, one());
  if (!x) return std::nullopt;
  if (!(mul(a, *x) == one())) return std::nullopt;
  return x;
}

bool FieldAlgebra::is_zero(const std::vector<Rat>& a) const {
  for (auto& x : a)
    if (x != 0) return false;
  return true;
}

std::vector<Rat> FieldAlgebra::minpoly(const std::vector<Rat>& a) const {
  std::size_t d = dim();
  std::vector<std::vector<Rat>> powers = {one()};
  std::vector<Rat> cur = one();
  for (std::size_t k = 1; k <= d; ++k) {
    cur = mul(cur, a);
    // solve sum c_j powers[j] = cur
    std::vector<std::vector<Rat>> rows(d, std::vector<Rat>(powers.size(), Rat(0)));
    for (std::size_t j = 0; j < powers.size(); ++j)
      for (std::size_t i = 0; i < d; ++i) rows[i][j] = powers[j][i];
    std::vector<Rat> rhs = cur;
    auto sol = k_solve(ideal_.dom, rows, rhs);
    if (sol) {
      std::vector<Rat> mp(k + 1, Rat(0));
      mp[k] = 1;
      for (std::size_t j = 0; j < k; ++j) mp[j] = k_norm(ideal_.dom, -(*sol)[j]);
      return mp;
    }
    powers.push_back(cur);
  }
  throw InternalError("minpoly: no dependence found up to the dimension");
}

// ---------------------------------------------------------- factorization

namespace {

int single_variable_of(const Polynomial& f) {
  int var = -1;
  for (auto& [t, c] : f.terms())
    for (int i = 0; i < f.nvars(); ++i)
      if (t.e[i] > 0) {
        if (var >= 0 && var != i)
          throw InternalError("factor_univariate: polynomial uses several variables");
        var = i;
      }
  return var;
}

uni::ZPoly dense_z_of(const Polynomial& f, int var) {
  uni::ZPoly c;
  for (auto& [t, v] : f.terms()) {
    std::size_t e = var < 0 ? 0 : static_cast<std::size_t>(t.e[var]);
    if (c.size() <= e) c.resize(e + 1, Int(0));
    c[e] = v.get_num();
  }
  return uni::trim(std::move(c));
}

Polynomial sparse_of_dense(const Domain& dom, int nvars, int var, const std::vector<Rat>& c) {
  Polynomial f = Polynomial::zero(dom, nvars);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Term t = Term::one(nvars);
    if (var >= 0) t.e[var] = static_cast<int>(i);
    f = f + Polynomial::monomial(dom, nvars, t, c[i]);
  }
  return f;
}

}  // namespace

std::vector<std::pair<Polynomial, int>> factor_univariate(const Polynomial& f, std::uint64_t seed) {
  if (f.is_zero()) throw InternalError("factor_univariate: zero polynomial");
  const Domain& dom = f.domain();
  if (!dom.is_field()) throw InternalError("factor_univariate: domain must be Q or Fp");
  int var = single_variable_of(f);
  std::vector<std::pair<Polynomial, int>> out;
  if (var < 0) return out;
  if (dom.kind == Domain::Kind::Q) {
    Int den = 1;
    for (auto& [t, c] : f.terms()) den = lcm_int(den, c.get_den());
    uni::ZPoly z = dense_z_of(f.scaled(Rat(den)).map_domain(Domain::ZZ()), var);
    for (auto& [g, m] : uni::factor_over_Z(z, seed)) {
      std::vector<Rat> qc(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) qc[i] = Rat(g[i], g.back());
      for (auto& q : qc) q.canonicalize();
      out.push_back({sparse_of_dense(dom, f.nvars(), var, qc), m});
    }
  } else {
    uni::PPoly pp{dom.p, {}};
    for (auto& [t, c] : f.terms()) {
      std::size_t e = static_cast<std::size_t>(t.e[var]);
      if (pp.c.size() <= e) pp.c.resize(e + 1, Int(0));
      pp.c[e] = c.get_num();
    }
    pp = uni::p_trim(std::move(pp));
    for (auto& [g, m] : uni::factor_over_Fp(pp, seed)) {
      std::vector<Rat> qc(g.c.begin(), g.c.end());
      out.push_back({sparse_of_dense(dom, f.nvars(), var, qc), m});
    }
  }
  return out;
}

// ---------------------------------------------------------- decomposition

namespace {

std::vector<Rat> var_minpoly(const FieldAlgebra& A, int v) {
  std::vector<Rat> xv = A.coords(Polynomial::variable(A.field(), A.nvars(), v));
  return A.minpoly(xv);
}

// squarefree part of a monic minimal polynomial, as a monic dense vector
std::vector<Rat> squarefree_part(const Domain& K, const std::vector<Rat>& mp,
                                 std::uint64_t seed) {
  if (K.kind == Domain::Kind::Q) {
    Int den = 1;
    for (auto& c : mp) den = lcm_int(den, c.get_den());
    uni::ZPoly z(mp.size());
    for (std::size_t i = 0; i < mp.size(); ++i) z[i] = Rat(mp[i] * den).get_num();
    z = uni::trim(std::move(z));
    uni::ZPoly g = uni::z_gcd(z, uni::z_derivative(z));
    uni::ZPoly sf;
    if (uni::degz(g) == 0)
      sf = z;
    else if (!uni::z_divides(g, z, &sf))
      throw InternalError("squarefree_part: division failed");
    sf = uni::z_primitive(sf);
    std::vector<Rat> out(sf.size());
    for (std::size_t i = 0; i < sf.size(); ++i) {
      out[i] = Rat(sf[i], sf.back());
      out[i].canonicalize();
    }
    return out;
  }
  uni::PPoly pp{K.p, {}};
  pp.c.resize(mp.size());
  for (std::size_t i = 0; i < mp.size(); ++i) pp.c[i] = mp[i].get_num();
  pp = uni::p_trim(std::move(pp));
  uni::PPoly prod = uni::p_one(K.p);
  for (auto& [g, m] : uni::factor_over_Fp(pp, seed)) prod = uni::p_mul(prod, g);
  std::vector<Rat> out(prod.c.begin(), prod.c.end());
  return out;
}

Polynomial compose_dense(const Domain& K, const std::vector<Rat>& dense, const Polynomial& u) {
  // dense(u) by Horner
  Polynomial r = Polynomial::zero(K, u.nvars());
  for (std::size_t i = dense.size(); i-- > 0;)
    r = r * u + Polynomial::constant(K, u.nvars(), dense[i]);
  return r;
}

// recursive splitting of a reduced zero-dimensional algebra into maximal ideals
void split_reduced(const Ideal& I_red, std::uint64_t seed, std::vector<Ideal>& out) {
  FieldAlgebra A = FieldAlgebra::build(I_red);
  if (A.dim() == 0) return;
  if (A.dim() == 1) {
    out.push_back(I_red);
    return;
  }
  const Domain& K = A.field();
  int n = A.nvars();
  if (K.kind == Domain::Kind::Fp) {
    // Berlekamp subalgebra: fixed points of Frobenius
    std::size_t d = A.dim();
    std::vector<std::vector<Rat>> rows(d, std::vector<Rat>(d, Rat(0)));
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Rat> b(d, Rat(0));
      b[i] = 1;
      std::vector<Rat> im = A.power(b, K.p);
      for (std::size_t j = 0; j < d; ++j) rows[j][i] = k_norm(K, im[j] - (i == j ? Rat(1) : Rat(0)));
    }
    std::vector<std::vector<Rat>> fixed = k_kernel(K, rows, d);
    if (fixed.size() <= 1) {
      out.push_back(I_red);  // a finite field
      return;
    }
    // any non-constant fixed element has a completely split minimal polynomial
    for (auto& v : fixed) {
      bool constant = true;
      for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] != 0) constant = false;
      if (constant) continue;
      std::vector<Rat> mp = A.minpoly(v);
      auto roots = factor_univariate(sparse_of_dense(K, 1, 0, mp), seed);
      if (roots.size() < 2) continue;
      Polynomial u = A.from_coords(v);
      for (auto& [fac, m] : roots) {
        std::vector<Rat> dense(fac.total_degree() + 1, Rat(0));
        for (auto& [t, c] : fac.terms()) dense[t.e[0]] = c;
        std::vector<Polynomial> gens = I_red.gens;
        gens.push_back(compose_dense(K, dense, u));
        split_reduced(Ideal::make(K, n, gens, I_red.ord), seed, out);
      }
      return;
    }
    throw InternalError("split_reduced: Berlekamp subalgebra had no usable element");
  }
  // K = Q: try coordinates, then seeded random combinations
  Rng rng(seed ^ 0x5eedc0deULL);
  for (int attempt = 0; attempt < 60; ++attempt) {
    Polynomial u = Polynomial::zero(K, n);
    if (attempt < n) {
      u = Polynomial::variable(K, n, attempt);
    } else {
      for (int i = 0; i < n; ++i)
        u = u + Polynomial::variable(K, n, i).scaled(Rat(rng.uniform(-3, 3)));
    }
    if (u.is_zero()) continue;
    std::vector<Rat> mp = A.minpoly(A.coords(u));
    auto factors = factor_univariate(sparse_of_dense(K, 1, 0, mp), seed);
    if (factors.size() == 1 && factors[0].second == 1) {
      if (static_cast<std::size_t>(factors[0].first.total_degree()) == A.dim()) {
        out.push_back(I_red);  // u is a primitive element of a field
        return;
      }
      continue;
    }
    for (auto& [fac, m] : factors) {
      std::vector<Rat> dense(fac.total_degree() + 1, Rat(0));
      for (auto& [t, c] : fac.terms()) dense[t.e[0]] = c;
      std::vector<Polynomial> gens = I_red.gens;
      gens.push_back(compose_dense(K, dense, u));
      split_reduced(Ideal::make(K, n, gens, I_red.ord), seed, out);
    }
    return;
  }
  throw InternalError("split_reduced: failed to find a splitting element over Q");
}

std::string ideal_key(const Ideal& I) {
  StrongGroebnerBasis G = strong_groebner(I);
  std::string s;
  for (auto& g : G.elements) s += g.to_string() + ";";
  return s;
}

}  // namespace

std::vector<ZeroDimComponent> zerodim_decompose(const Ideal& I_K, std::uint64_t seed) {
  if (!I_K.dom.is_field()) throw InternalError("zerodim_decompose: domain must be a field");
  const Domain& K = I_K.dom;
  FieldAlgebra A = FieldAlgebra::build(I_K);
  std::vector<ZeroDimComponent> out;
  if (A.dim() == 0) return out;

  // radical from the squarefree parts of the coordinate minimal polynomials
  std::vector<Polynomial> radgens = I_K.gens;
  bool reduced = true;
  for (int v = 0; v < A.nvars(); ++v) {
    std::vector<Rat> mp = var_minpoly(A, v);
    std::vector<Rat> sf = squarefree_part(K, mp, seed);
    if (sf.size() < mp.size()) {
      reduced = false;
      radgens.push_back(compose_dense(K, sf, Polynomial::variable(K, A.nvars(), v)));
    }
  }
  Ideal I_red = reduced ? I_K : Ideal::make(K, I_K.nvars, radgens, I_K.ord);

  std::vector<Ideal> maximals;
  split_reduced(I_red, seed, maximals);
  std::vector<std::pair<std::string, Ideal>> keyed;
  for (auto& m : maximals) keyed.push_back({ideal_key(m), m});
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  if (keyed.size() == 1 && reduced) {
    ZeroDimComponent c;
    c.maximal_ideal = keyed[0].second;
    c.local_ideal = I_K;
    c.idempotent = Polynomial::constant(K, I_K.nvars, 1);
    c.residue_degree = static_cast<int>(A.dim());
    out.push_back(std::move(c));
    return out;
  }

  // images of the maximal ideals inside A
  std::vector<KEchelon> images;
  std::vector<std::vector<std::vector<Rat>>> image_rows;
  for (auto& [key, m] : keyed) {
    std::vector<std::vector<Rat>> rows;
    for (auto& t : A.basis())
      for (auto& g : m.gens) {
        Polynomial tg = Polynomial::monomial(K, A.nvars(), t, 1) * g;
        rows.push_back(A.coords(tg));
      }
    image_rows.push_back(rows);
    images.push_back(k_echelon(K, rows));
  }

  for (std::size_t l = 0; l < keyed.size(); ++l) {
    // U = product of the other maximal ideals' images (as a subspace of A)
    std::vector<std::vector<Rat>> u_rows = {A.one()};
    bool first = true;
    for (std::size_t j = 0; j < keyed.size(); ++j) {
      if (j == l) continue;
      if (first) {
        u_rows = k_echelon(K, image_rows[j]).rows;
        first = false;
        continue;
      }
      std::vector<std::vector<Rat>> prod;
      for (auto& a : u_rows)
        for (auto& b : images[j].rows) prod.push_back(A.mul(a, b));
      u_rows = k_echelon(K, prod).rows;
    }
    // solve 1 = u + w with u in U, w in the image of m_l
    std::size_t d = A.dim();
    const auto& w_rows = images[l].rows;
    std::vector<std::vector<Rat>> sys(d, std::vector<Rat>(u_rows.size() + w_rows.size(), Rat(0)));
    for (std::size_t c = 0; c < u_rows.size(); ++c)
      for (std::size_t r = 0; r < d; ++r) sys[r][c] = u_rows[c][r];
    for (std::size_t c = 0; c < w_rows.size(); ++c)
      for (std::size_t r = 0; r < d; ++r) sys[r][u_rows.size() + c] = w_rows[c][r];
    auto sol = k_solve(K, sys, A.one());
    if (!sol) throw InternalError("zerodim_decompose: CRT solve failed");
    std::vector<Rat> e(d, Rat(0));
    for (std::size_t c = 0; c < u_rows.size(); ++c)
      for (std::size_t r = 0; r < d; ++r) e[r] = k_norm(K, e[r] + (*sol)[c] * u_rows[c][r]);
    // Hensel lifting to an exact idempotent
    for (int it = 0; it < 64; ++it) {
      std::vector<Rat> e2 = A.mul(e, e);
      if (e2 == e) break;
      std::vector<Rat> e3 = A.mul(e2, e);
      for (std::size_t r = 0; r < d; ++r) e[r] = k_norm(K, 3 * e2[r] - 2 * e3[r]);
    }
    if (!(A.mul(e, e) == e)) throw InternalError("zerodim_decompose: idempotent lift failed");
    ZeroDimComponent c;
    c.maximal_ideal = keyed[l].second;
    Polynomial ep = A.from_coords(e);
    std::vector<Polynomial> lgens = I_K.gens;
    lgens.push_back(Polynomial::constant(K, I_K.nvars, 1) - ep);
    c.local_ideal = Ideal::make(K, I_K.nvars, lgens, I_K.ord);
    c.idempotent = ep;
    c.residue_degree = static_cast<int>(FieldAlgebra::build(keyed[l].second).dim());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Polynomial> primitive_idempotents_Q(const Ideal& I_Q, std::uint64_t seed) {
  if (I_Q.dom.kind != Domain::Kind::Q)
    throw InternalError("primitive_idempotents_Q: domain must be Q");
  FieldAlgebra A = FieldAlgebra::build(I_Q);
  for (int v = 0; v < A.nvars(); ++v) {
    std::vector<Rat> mp = var_minpoly(A, v);
    if (squarefree_part(I_Q.dom, mp, seed).size() < mp.size())
      throw NotReduced("algebra has nilpotents");
  }
  std::vector<Polynomial> out;
  for (auto& c : zerodim_decompose(I_Q, seed)) out.push_back(c.idempotent);
  return out;
}

FiniteFieldRep finite_field_rep(const Ideal& maximal_ideal_Fp, std::uint64_t seed) {
  const Domain& K = maximal_ideal_Fp.dom;
  if (K.kind != Domain::Kind::Fp) throw InternalError("finite_field_rep: domain must be Fp");
  FieldAlgebra A = FieldAlgebra::build(maximal_ideal_Fp);
  std::size_t d = A.dim();
  int n = A.nvars();
  Rng rng(seed ^ 0xf1e1dULL);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Polynomial theta = Polynomial::zero(K, n);
    if (attempt < n)
      theta = Polynomial::variable(K, n, attempt);
    else if (n > 0)
      for (int i = 0; i < n; ++i)
        theta = theta + Polynomial::variable(K, n, i).scaled(Rat(rng.below(K.p)));
    std::vector<Rat> tc = A.coords(theta);
    std::vector<Rat> mp = A.minpoly(tc);
    if (mp.size() != d + 1 && n > 0) continue;
    FiniteFieldRep rep;
    rep.p = K.p;
    rep.deg = static_cast<int>(d);
    rep.theta_poly = theta;
    rep.modulus.p = K.p;
    rep.modulus.c.resize(mp.size());
    for (std::size_t i = 0; i < mp.size(); ++i) rep.modulus.c[i] = mp[i].get_num();
    rep.modulus = uni::p_trim(std::move(rep.modulus));
    // express each variable in the power basis of theta
    std::vector<std::vector<Rat>> powers(d, std::vector<Rat>(d, Rat(0)));
    std::vector<Rat> cur = A.one();
    for (std::size_t j = 0; j < d; ++j) {
      powers[j] = cur;
      cur = A.mul(cur, tc);
    }
    std::vector<std::vector<Rat>> rows(d, std::vector<Rat>(d, Rat(0)));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) rows[i][j] = powers[j][i];
    rep.var_images.resize(n);
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      auto sol = k_solve(K, rows, A.coords(Polynomial::variable(K, n, v)));
      if (!sol) {
        ok = false;
        break;
      }
      uni::PPoly img{K.p, {}};
      img.c.resize(d);
      for (std::size_t j = 0; j < d; ++j) img.c[j] = (*sol)[j].get_num();
      rep.var_images[v] = uni::p_trim(std::move(img));
    }
    if (ok) return rep;
  }
  throw InternalError("finite_field_rep: no primitive element found");
}

Int ff_card(const FiniteFieldRep& F) { return pow_int(F.p, static_cast<unsigned long>(F.deg)); }

uni::PPoly ff_one(const FiniteFieldRep& F) { return uni::p_one(F.p); }

bool ff_is_one(const FiniteFieldRep& F, const uni::PPoly& a) {
  return uni::degp(a) == 0 && a.c[0] == 1;
}

uni::PPoly ff_mul(const FiniteFieldRep& F, const uni::PPoly& a, const uni::PPoly& b) {
  return uni::p_mulmod(a, b, F.modulus);
}

uni::PPoly ff_pow(const FiniteFieldRep& F, const uni::PPoly& a, const Int& e) {
  if (e < 0) return uni::p_powmod(uni::p_inv_mod(a, F.modulus), -e, F.modulus);
  return uni::p_powmod(a, e, F.modulus);
}

uni::PPoly ff_image(const FiniteFieldRep& F, const Polynomial& f) {
  uni::PPoly acc = uni::p_zero(F.p);
  for (auto& [t, c] : f.terms()) {
    uni::PPoly term{F.p, {mod_pos(c.get_num(), F.p)}};
    term = uni::p_trim(std::move(term));
    for (int v = 0; v < f.nvars(); ++v)
      for (int k = 0; k < t.e[v]; ++k) term = ff_mul(F, term, F.var_images[v]);
    acc = uni::p_add(acc, term);
  }
  return acc;
}

std::vector<PrimeComponent> minimal_primes(const ExplicitAlgebra& R, std::uint64_t seed) {
  const Ideal& I = R.presentation();
  Int q = ideal_meet_Z(R.gb());
  std::vector<PrimeComponent> out;
  std::vector<StrongGroebnerBasis> char0_gbs;
  if (q == 0) {
    Ideal I_Q = I.map_domain(Domain::QQ());
    for (auto& comp : zerodim_decompose(I_Q, seed)) {
      // contract the maximal ideal to P: clear denominators, then saturate
      std::vector<Polynomial> gens;
      for (auto& g : comp.maximal_ideal.gens) {
        if (g.is_zero()) continue;
        Int den = 1;
        for (auto& [t, c] : g.terms()) den = lcm_int(den, c.get_den());
        Polynomial z = g.scaled(Rat(den)).map_domain(Domain::ZZ());
        gens.push_back(z.content_primitive().second);
      }
      Ideal p0 = Ideal::make(Domain::ZZ(), I.nvars, gens, I.ord);
      StrongGroebnerBasis g0 = strong_groebner(p0);
      Ideal contracted = contract_from_Q(p0, g0);
      PrimeComponent pc;
      pc.prime_ideal = contracted;
      pc.characteristic = 0;
      char0_gbs.push_back(strong_groebner(contracted));
      out.push_back(std::move(pc));
    }
  }
  Int split = q != 0 ? q : R.module_structure().torsion_exponent;
  if (split > 1) {
    for (auto& [p, e] : factor_integer(split)) {
      Ideal I_p = I.map_domain(Domain::GF(p));
      for (auto& comp : zerodim_decompose(I_p, seed)) {
        std::vector<Polynomial> gens = {Polynomial::constant(Domain::ZZ(), I.nvars, Rat(p))};
        for (auto& g : comp.maximal_ideal.gens)
          if (!g.is_zero()) gens.push_back(lift_to_Z(g));
        Ideal m = Ideal::make(Domain::ZZ(), I.nvars, gens, I.ord);
        if (q == 0) {
          StrongGroebnerBasis gm = strong_groebner(m);
          bool contains_char0 = false;
          for (std::size_t i = 0; i < char0_gbs.size() && !contains_char0; ++i)
            if (ideal_contains(gm, out[i].prime_ideal)) contains_char0 = true;
          if (contains_char0) continue;  // not minimal
        }
        PrimeComponent pc;
        pc.prime_ideal = m;
        pc.characteristic = p;
        pc.finite_field = finite_field_rep(comp.maximal_ideal, seed);
        out.push_back(std::move(pc));
      }
    }
  }
  return out;
}

Nilradical nilradical(const ExplicitAlgebra& R, std::uint64_t seed) {
  std::vector<PrimeComponent> primes = minimal_primes(R, seed);
  const Ideal& I = R.presentation();
  Nilradical out;
  if (primes.empty()) {
    out.ideal = Ideal::make(Domain::ZZ(), I.nvars,
                            {Polynomial::constant(Domain::ZZ(), I.nvars, 1)}, I.ord);
    out.nilpotency_index = 1;
    return out;
  }
  Ideal rad = primes[0].prime_ideal;
  for (std::size_t i = 1; i < primes.size(); ++i)
    rad = ideal_intersect(rad, primes[i].prime_ideal);
  out.ideal = rad;
  // least s with rad^s contained in I
  std::vector<Polynomial> powgens = rad.gens;
  int s = 1;
  const StrongGroebnerBasis& G = R.gb();
  auto contained = [&](const std::vector<Polynomial>& gens) {
    for (auto& g : gens)
      if (!normal_form(g, G).is_zero()) return false;
    return true;
  };
  std::size_t guard = R.dim() + 2;
  while (!contained(powgens)) {
    std::vector<Polynomial> next;
    for (auto& a : powgens)
      for (auto& b : rad.gens) next.push_back(a * b);
    powgens = std::move(next);
    ++s;
    if (static_cast<std::size_t>(s) > guard)
      throw InternalError("nilradical: nilpotency index exceeded the module bound");
  }
  out.nilpotency_index = s;
  return out;
}

std::vector<AlgebraElement> crt_orthogonal_idempotents(const ExplicitAlgebra& R,
                                                       const std::vector<Ideal>& ideals) {
  std::size_t t = ideals.size();
  std::size_t d = R.dim();
  if (t == 0) throw InternalError("crt_orthogonal_idempotents: no ideals");
  std::vector<AlgebraElement> out;
  if (t == 1) {
    out.push_back(R.one());
    return out;
  }
  // image of an ideal inside R as a lattice (syzygy rows included)
  auto image_lattice = [&](const Ideal& J) {
    std::vector<std::vector<Int>> rows;
    for (auto& tm : R.macaulay())
      for (auto& g : J.gens) {
        if (g.is_zero()) continue;
        Polynomial tg = Polynomial::monomial(Domain::ZZ(), R.nvars(), tm, 1) * g;
        rows.push_back(R.from_poly(tg).c);
      }
    for (std::size_t i = 0; i < R.syzygy().rows(); ++i) rows.push_back(R.syzygy().row(i));
    return IntegerLattice::from_vectors(d, rows);
  };
  auto lattice_product = [&](const IntegerLattice& a, const IntegerLattice& b) {
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < a.rank(); ++i)
      for (std::size_t j = 0; j < b.rank(); ++j)
        rows.push_back(R.mul(AlgebraElement{a.basis().row(i)}, AlgebraElement{b.basis().row(j)}).c);
    for (std::size_t i = 0; i < R.syzygy().rows(); ++i) rows.push_back(R.syzygy().row(i));
    return IntegerLattice::from_vectors(d, rows);
  };
  std::vector<IntegerLattice> images;
  for (auto& J : ideals) images.push_back(image_lattice(J));

  for (std::size_t i = 0; i + 1 < t; ++i) {
    IntegerLattice prod;
    bool first = true;
    for (std::size_t j = 0; j < t; ++j) {
      if (j == i) continue;
      prod = first ? images[j] : lattice_product(prod, images[j]);
      first = false;
    }
    // solve 1 = u + w with u in prod, w in images[i]
    IntMat sys(d, prod.rank() + images[i].rank());
    for (std::size_t c = 0; c < prod.rank(); ++c)
      for (std::size_t r = 0; r < d; ++r) sys.at(r, c) = prod.basis().at(c, r);
    for (std::size_t c = 0; c < images[i].rank(); ++c)
      for (std::size_t r = 0; r < d; ++r) sys.at(r, prod.rank() + c) = images[i].basis().at(c, r);
    ZSolve s = solve_integer(sys, R.one().c);
    if (!s.particular)
      throw NotComaximal("ideals are not pairwise comaximal modulo the presentation");
    std::vector<Int> u(d, 0);
    for (std::size_t c = 0; c < prod.rank(); ++c)
      for (std::size_t r = 0; r < d; ++r) u[r] += (*s.particular)[c] * prod.basis().at(c, r);
    out.push_back(R.from_coords(std::move(u)));
  }
  AlgebraElement last = R.one();
  for (auto& e : out) last = R.sub(last, e);
  out.push_back(last);
  // exactness of the idempotent identities
  for (std::size_t i = 0; i < t; ++i) {
    if (!(R.mul(out[i], out[i]) == out[i]))
      throw NotComaximal("CRT idempotent is not idempotent; intersection exceeds the presentation");
    for (std::size_t j = i + 1; j < t; ++j)
      if (!R.is_zero(R.mul(out[i], out[j])))
        throw NotComaximal("CRT idempotents are not orthogonal");
  }
  return out;
}

}  // namespace zalg
