#include "zalg/explat.hpp"

#include <algorithm>
#include <map>

#include "zalg/nfunits.hpp"
#include "zalg/numeric.hpp"

namespace zalg {

// ------------------------------------------------------------ finite fields

namespace {

// discrete log in the order-ell subgroup generated by gamma
Int dlog_prime_order(const FiniteFieldRep& F, const uni::PPoly& gamma, const uni::PPoly& target,
                     const Int& ell) {
  Int m = isqrt(ell - 1) + 1;
  std::map<std::vector<Int>, Int> baby;
  uni::PPoly cur = ff_one(F);
  for (Int j = 0; j < m; ++j) {
    baby.emplace(cur.c, j);
    cur = ff_mul(F, cur, gamma);
  }
  uni::PPoly giant = ff_pow(F, gamma, -m);
  cur = target;
  for (Int i = 0; i <= m; ++i) {
    auto it = baby.find(cur.c);
    if (it != baby.end()) return mod_pos(i * m + it->second, ell);
    cur = ff_mul(F, cur, giant);
  }
  throw InternalError("dlog_prime_order: target outside the subgroup");
}

// Pohlig-Hellman for the full multiplicative group of order M = q - 1
Int ff_dlog(const FiniteFieldRep& F, const uni::PPoly& g, const uni::PPoly& h, const Int& M,
            const std::map<Int, int>& fact) {
  Int x = 0, mod = 1;
  for (auto& [ell, e] : fact) {
    Int pe = pow_int(ell, e);
    uni::PPoly gamma = ff_pow(F, g, M / ell);
    Int xi = 0, lj = 1;
    for (int j = 0; j < e; ++j) {
      uni::PPoly shifted = ff_mul(F, h, ff_pow(F, g, -xi));
      uni::PPoly c = ff_pow(F, shifted, M / (lj * ell));
      Int dj = dlog_prime_order(F, gamma, c, ell);
      xi += dj * lj;
      lj *= ell;
    }
    // combine with the running CRT residue
    XGcd eg = xgcd(mod, pe);
    Int step = (xi - x) / eg.g * eg.s % (pe / eg.g);
    if ((xi - x) % eg.g != 0) throw InternalError("ff_dlog: inconsistent residues");
    x = mod_pos(x + mod * step, mod * (pe / eg.g));
    mod *= pe / eg.g;
  }
  return x;
}

}  // namespace

ExpLatticeResult explattice_finite_field(const FiniteFieldRep& F,
                                         const std::vector<uni::PPoly>& units) {
  std::size_t k = units.size();
  for (auto& u : units)
    if (uni::degp(u) < 0) throw NonUnitElement("zero element in a finite-field unit tuple");
  Int M = ff_card(F) - 1;
  ExpLatticeResult out;
  if (M == 1) {
    out.lattice = IntegerLattice::full(k);
    return out;
  }
  uni::PPoly g = finite_field_unit_gen(F);
  std::map<Int, int> fact = factor_integer(M);
  IntMat dlogs(1, k);
  for (std::size_t i = 0; i < k; ++i) dlogs.at(0, i) = ff_dlog(F, g, units[i], M, fact);
  out.lattice = solve_linear_mod(dlogs, {Int(0)}, M).homogeneous;
  for (std::size_t r = 0; r < out.lattice.rank(); ++r) {
    uni::PPoly prod = ff_one(F);
    for (std::size_t i = 0; i < k; ++i)
      prod = ff_mul(F, prod, ff_pow(F, units[i], out.lattice.basis().at(r, i)));
    if (!ff_is_one(F, prod))
      throw InternalError("explattice_finite_field: unsound relation");
  }
  return out;
}

// ------------------------------------------------------- number field part

namespace {

using QVec = std::vector<Rat>;

QVec qp_trim(QVec a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

QVec qp_mod(QVec a, const std::vector<Int>& m) {
  int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    Rat c = a.back() / Rat(m.back());
    int shift = static_cast<int>(a.size()) - 1 - dm;
    for (int i = 0; i <= dm; ++i) a[shift + i] -= c * Rat(m[i]);
    a = qp_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

QVec qp_mulmod(const QVec& a, const QVec& b, const std::vector<Int>& m) {
  if (a.empty() || b.empty()) return {};
  QVec r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return qp_mod(qp_trim(std::move(r)), m);
}

QVec qp_one() { return {Rat(1)}; }

bool qp_is_one(const QVec& a) { return a.size() == 1 && a[0] == 1; }

QVec qp_inv(const QVec& a, const std::vector<Int>& m) {
  // extended Euclid over Q[t]
  QVec r0(m.begin(), m.end()), r1 = qp_trim(a);
  QVec s0 = {}, s1 = qp_one();
  auto divmod = [](QVec a_, const QVec& b_) {
    QVec q(a_.size() > b_.size() ? a_.size() - b_.size() + 1 : 1, Rat(0));
    while (a_.size() >= b_.size() && !a_.empty()) {
      Rat c = a_.back() / b_.back();
      std::size_t shift = a_.size() - b_.size();
      q[shift] = c;
      for (std::size_t i = 0; i < b_.size(); ++i) a_[shift + i] -= c * b_[i];
      a_ = qp_trim(std::move(a_));
    }
    return std::make_pair(qp_trim(std::move(q)), a_);
  };
  while (!r1.empty()) {
    auto [q, r2] = divmod(r0, r1);
    // s2 = s0 - q s1
    QVec qs(q.size() + (s1.empty() ? 0 : s1.size() - 1) + 1, Rat(0));
    if (!s1.empty()) {
      qs.assign(q.size() + s1.size() - 1, Rat(0));
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    } else {
      qs.clear();
    }
    QVec s2(std::max(s0.size(), qs.size()), Rat(0));
    for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    s2 = qp_trim(std::move(s2));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw NonUnitElement("element is not invertible in the number field");
  QVec out = s0;
  for (auto& c : out) c /= r0[0];
  return qp_trim(std::move(out));
}

QVec qp_pow(const QVec& a, const Int& e, const std::vector<Int>& m) {
  QVec base = e < 0 ? qp_inv(a, m) : qp_trim(a);
  Int k = e < 0 ? Int(-e) : e;
  QVec r = qp_one();
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = qp_mulmod(r, base, m);
    base = qp_mulmod(base, base, m);
    k >>= 1;
  }
  return r;
}

// candidate orders of roots of unity in a degree-d field, ascending
std::vector<Int> torsion_order_candidates(int d) {
  std::vector<Int> out;
  for (long m = 1; m <= 6L * d * d + 4; ++m)
    if (euler_phi(m) <= d) out.push_back(m);
  return out;
}

std::optional<Int> torsion_order(const QVec& u, const std::vector<Int>& minpoly, int d) {
  for (const Int& m : torsion_order_candidates(d)) {
    if (qp_is_one(qp_pow(u, m, minpoly))) return m;
  }
  return std::nullopt;
}

}  // namespace

ExpLatticeResult nf_exponent_lattice(const std::vector<Int>& minpoly,
                                     const std::vector<std::vector<Rat>>& units,
                                     std::uint64_t seed) {
  std::size_t k = units.size();
  int d = static_cast<int>(minpoly.size()) - 1;
  ExpLatticeResult out;
  if (k == 0) {
    out.lattice = IntegerLattice::zero(0);
    return out;
  }
  std::vector<QVec> us;
  for (auto& u : units) us.push_back(qp_trim(u));
  std::vector<std::optional<Int>> orders;
  bool all_torsion = true;
  for (auto& u : us) {
    orders.push_back(torsion_order(u, minpoly, d));
    if (!orders.back()) all_torsion = false;
  }
  if (all_torsion) {
    // the group generated is cyclic: merge a generator, then take dlogs
    QVec g = qp_one();
    Int og = 1;
    for (std::size_t i = 0; i < k; ++i) {
      Int oi = *orders[i];
      if (oi == 1) continue;
      Int target = lcm_int(og, oi);
      bool found = false;
      for (Int a = 0; a < og && !found; ++a)
        for (Int b = 0; b < oi && !found; ++b) {
          QVec cand = qp_mulmod(qp_pow(g, a, minpoly), qp_pow(us[i], b, minpoly), minpoly);
          // order test
          bool ok = qp_is_one(qp_pow(cand, target, minpoly));
          if (ok)
            for (auto& [ell, e] : factor_integer(target))
              if (qp_is_one(qp_pow(cand, target / ell, minpoly))) ok = false;
          if (ok) {
            g = cand;
            og = target;
            found = true;
          }
        }
      if (!found) throw InternalError("nf_exponent_lattice: cyclic merge failed");
    }
    if (og == 1) {
      out.lattice = IntegerLattice::full(k);
      return out;
    }
    IntMat dl(1, k);
    for (std::size_t i = 0; i < k; ++i) {
      bool found = false;
      QVec cur = qp_one();
      for (Int j = 0; j < og && !found; ++j) {
        if (cur == us[i]) {
          dl.at(0, i) = j;
          found = true;
        }
        cur = qp_mulmod(cur, g, minpoly);
      }
      if (!found) throw InternalError("nf_exponent_lattice: dlog in cyclic torsion failed");
    }
    out.lattice = solve_linear_mod(dl, {Int(0)}, og).homogeneous;
    return out;
  }

  // archimedean search: verified-sound, heuristic-complete
  out.heuristic_nf_search = true;
  std::vector<std::vector<Int>> relations;
  for (std::size_t i = 0; i < k; ++i)
    if (orders[i]) {
      std::vector<Int> v(k, 0);
      v[i] = *orders[i];
      relations.push_back(std::move(v));
    }
  IntegerLattice prev = IntegerLattice::zero(k);
  long bits = 128;
  for (int round = 0; round < 6; ++round, bits *= 2) {
    Int scale = Int(1) << static_cast<unsigned long>(bits / 2);
    std::vector<std::vector<Rat>> elems;
    for (auto& u : us) elems.push_back(u);
    std::vector<LogEmbedRow> rows = log_embeddings(minpoly, elems, bits, scale);
    std::size_t cols = k + 2 * static_cast<std::size_t>(d);
    IntMat basis(k + d, cols);
    for (std::size_t i = 0; i < k; ++i) {
      basis.at(i, i) = 1;
      for (int j = 0; j < d; ++j) {
        basis.at(i, k + j) = rows[i].logabs[j];
        basis.at(i, k + d + j) = rows[i].arg[j];
      }
    }
    for (int j = 0; j < d; ++j) basis.at(k + j, k + d + j) = scale;
    IntMat red = lll_reduce(basis);
    Int threshold = Int(1) << 24;
    for (std::size_t r = 0; r < red.rows(); ++r) {
      std::vector<Int> a(k);
      bool nonzero = false, small = true;
      for (std::size_t i = 0; i < k; ++i) {
        a[i] = red.at(r, i);
        if (a[i] != 0) nonzero = true;
        if (a[i] > threshold || a[i] < -threshold) small = false;
      }
      for (std::size_t c = k; c < cols && small; ++c)
        if (red.at(r, c) > threshold || red.at(r, c) < -threshold) small = false;
      if (!nonzero || !small) continue;
      QVec prod = qp_one();
      for (std::size_t i = 0; i < k; ++i)
        prod = qp_mulmod(prod, qp_pow(us[i], a[i], minpoly), minpoly);
      if (qp_is_one(prod)) {
        relations.push_back(a);
      } else if (auto mo = torsion_order(prod, minpoly, d)) {
        std::vector<Int> ma(k);
        for (std::size_t i = 0; i < k; ++i) ma[i] = a[i] * *mo;
        relations.push_back(std::move(ma));
      }
    }
    IntegerLattice cur = IntegerLattice::from_vectors(k, relations);
    if (round > 0 && cur == prev) {
      out.lattice = cur;
      return out;
    }
    prev = cur;
  }
  out.lattice = prev;
  return out;
}

// -------------------------------------------------------------- zero dim

namespace {

struct PowerBasisCtx {
  std::vector<Int> minpoly;          // integral monic
  std::vector<QVec> unit_coords;     // power-basis coordinates of the units
};

// primitive element with integral minimal polynomial for a maximal ideal of
// a zero-dimensional Q-algebra
PowerBasisCtx power_basis_ctx(const Ideal& maximal_Q, const std::vector<Polynomial>& units,
                              std::uint64_t seed) {
  FieldAlgebra Fm = FieldAlgebra::build(maximal_Q);
  std::size_t d = Fm.dim();
  int n = Fm.nvars();
  Rng rng(seed ^ 0x9dbadULL);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Polynomial theta = Polynomial::zero(Domain::QQ(), n);
    if (attempt < n)
      theta = Polynomial::variable(Domain::QQ(), n, attempt);
    else
      for (int i = 0; i < n; ++i)
        theta = theta + Polynomial::variable(Domain::QQ(), n, i).scaled(Rat(rng.uniform(-4, 4)));
    if (theta.is_zero()) continue;
    std::vector<Rat> tc = Fm.coords(theta);
    std::vector<Rat> mp = Fm.minpoly(tc);
    if (mp.size() != d + 1) continue;
    // scale theta so that the minimal polynomial becomes integral
    Int N = 1;
    for (auto& c : mp) N = lcm_int(N, c.get_den());
    PowerBasisCtx ctx;
    ctx.minpoly.resize(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
      Rat scaled = mp[i] * Rat(pow_int(N, static_cast<unsigned long>(d - i)));
      if (scaled.get_den() != 1) throw InternalError("power_basis_ctx: scaling failed");
      ctx.minpoly[i] = scaled.get_num();
    }
    // powers of theta as field coordinates
    std::vector<std::vector<Rat>> powers(d);
    std::vector<Rat> cur = Fm.coords(Polynomial::constant(Domain::QQ(), n, 1));
    for (std::size_t j = 0; j < d; ++j) {
      powers[j] = cur;
      cur = Fm.mul(cur, tc);
    }
    std::vector<std::vector<Rat>> rows(d, std::vector<Rat>(d, Rat(0)));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) rows[i][j] = powers[j][i];
    PowerBasisCtx result = std::move(ctx);
    bool ok = true;
    for (auto& u : units) {
      auto sol = k_solve(Domain::QQ(), rows, Fm.coords(u));
      if (!sol) {
        ok = false;
        break;
      }
      // rescale to the power basis of N*theta
      QVec v(d, Rat(0));
      Int nj = 1;
      for (std::size_t j = 0; j < d; ++j) {
        v[j] = (*sol)[j] / Rat(nj);
        nj *= N;
      }
      result.unit_coords.push_back(qp_trim(std::move(v)));
    }
    if (ok) return result;
  }
  throw InternalError("power_basis_ctx: no primitive element found");
}

// span of the image of an ideal inside a zero-dimensional field algebra
KEchelon ideal_image_span(const FieldAlgebra& L, const Ideal& J) {
  std::vector<std::vector<Rat>> rows;
  for (auto& t : L.basis())
    for (auto& g : J.gens) {
      if (g.is_zero()) continue;
      rows.push_back(L.coords(Polynomial::monomial(L.field(), L.nvars(), t, 1) * g));
    }
  return k_echelon(L.field(), rows);
}

std::vector<Rat> power_product(const FieldAlgebra& L, const std::vector<std::vector<Rat>>& us,
                               const std::vector<std::vector<Rat>>& us_inv,
                               const std::vector<Int>& exps) {
  std::vector<Rat> r = L.one();
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (exps[i] == 0) continue;
    const std::vector<Rat>& base = exps[i] > 0 ? us[i] : us_inv[i];
    Int e = exps[i] > 0 ? exps[i] : Int(-exps[i]);
    r = L.mul(r, L.power(base, e));
  }
  return r;
}

// refinement of the reduced-part lattice inside a local component
IntegerLattice unipotent_refine(const FieldAlgebra& L, const Ideal& maximal,
                                const std::vector<Polynomial>& units,
                                const IntegerLattice& red) {
  std::size_t k = units.size();
  if (red.rank() == 0) return red;
  const Domain& K = L.field();
  std::vector<std::vector<Rat>> us, us_inv;
  for (auto& u : units) {
    std::vector<Rat> cu = L.coords(u);
    auto inv = L.inverse(cu);
    if (!inv) throw NonUnitElement("tuple entry is not a unit in a local component");
    us.push_back(cu);
    us_inv.push_back(*inv);
  }
  IntMat B = red.basis();
  if (K.kind == Domain::Kind::Q) {
    // kernel of the truncated logarithms over Q
    std::size_t m = B.rows();
    std::vector<std::vector<Rat>> logs;
    for (std::size_t s = 0; s < m; ++s) {
      std::vector<Rat> u = power_product(L, us, us_inv, B.row(s));
      std::vector<Rat> nil = u;
      nil[0] -= 1;  // u - 1 in coordinates (basis element 0 is the constant term)
      std::vector<Rat> lg(L.dim(), Rat(0));
      std::vector<Rat> pw = nil;
      for (std::size_t i = 1; i <= L.dim() + 1; ++i) {
        if (L.is_zero(pw)) break;
        for (std::size_t c = 0; c < L.dim(); ++c)
          lg[c] += pw[c] * Rat((i % 2) ? 1 : -1, static_cast<long>(i));
        pw = L.mul(pw, nil);
        if (i == L.dim() + 1 && !L.is_zero(pw))
          throw InternalError("unipotent_refine: non-nilpotent logarithm argument");
      }
      logs.push_back(std::move(lg));
    }
    // integer kernel of the coordinate matrix
    IntMat mat(L.dim(), m);
    for (std::size_t r = 0; r < L.dim(); ++r) {
      Int den = 1;
      for (std::size_t s = 0; s < m; ++s) den = lcm_int(den, logs[s][r].get_den());
      for (std::size_t s = 0; s < m; ++s) {
        Rat scaled = logs[s][r] * Rat(den);
        mat.at(r, s) = scaled.get_num();
      }
    }
    IntegerLattice ker = int_kernel(mat);
    if (ker.rank() == 0) return IntegerLattice::zero(k);
    return IntegerLattice::from_rows(k, ker.basis() * B);
  }

  // K = Fp: one linear solve per layer of the 1 + N filtration
  const Int& p = K.p;
  KEchelon nspan = ideal_image_span(L, maximal);
  std::vector<std::vector<Rat>> layer_rows;  // basis of N^{t+1}
  {
    std::vector<std::vector<Rat>> prods;
    for (auto& a : nspan.rows)
      for (auto& b : nspan.rows) prods.push_back(L.mul(a, b));
    layer_rows = k_echelon(K, prods).rows;
  }
  for (std::size_t iter = 0; iter <= L.dim() + 3; ++iter) {
    std::size_t m = B.rows();
    std::vector<std::vector<Rat>> nils;
    bool all_one = true;
    for (std::size_t s = 0; s < m; ++s) {
      std::vector<Rat> u = power_product(L, us, us_inv, B.row(s));
      u[0] -= 1;
      for (auto& c : u)
        if (c != 0) all_one = false;
      nils.push_back(std::move(u));
    }
    if (all_one) return IntegerLattice::from_rows(k, B);
    // solve sum c_s nil_s in span(layer) over F_p
    std::size_t extra = layer_rows.size();
    std::vector<std::vector<Rat>> rows(L.dim(), std::vector<Rat>(m + extra, Rat(0)));
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t r = 0; r < L.dim(); ++r) rows[r][s] = nils[s][r];
    for (std::size_t c = 0; c < extra; ++c)
      for (std::size_t r = 0; r < L.dim(); ++r) rows[r][m + c] = layer_rows[c][r];
    std::vector<std::vector<Rat>> ker = k_kernel(K, rows, m + extra);
    std::vector<std::vector<Int>> crows;
    for (auto& v : ker) {
      std::vector<Int> c(m);
      for (std::size_t s = 0; s < m; ++s) c[s] = v[s].get_num();
      crows.push_back(std::move(c));
    }
    for (std::size_t s = 0; s < m; ++s) {
      std::vector<Int> c(m, 0);
      c[s] = p;
      crows.push_back(std::move(c));
    }
    IntegerLattice mprime = IntegerLattice::from_vectors(m, crows);
    B = IntegerLattice::from_rows(k, mprime.basis() * B).basis();
    // next layer: multiply by N once more
    std::vector<std::vector<Rat>> prods;
    for (auto& a : layer_rows)
      for (auto& b : nspan.rows) prods.push_back(L.mul(a, b));
    layer_rows = k_echelon(K, prods).rows;
  }
  throw InternalError("unipotent_refine: filtration did not terminate");
}

}  // namespace

ExpLatticeResult explattice_zerodim(const Ideal& I_K, const std::vector<Polynomial>& units,
                                    std::uint64_t seed) {
  if (!I_K.dom.is_field()) throw InternalError("explattice_zerodim: field domains only");
  std::size_t k = units.size();
  ExpLatticeResult out;
  out.lattice = IntegerLattice::full(k);
  std::vector<ZeroDimComponent> comps = zerodim_decompose(I_K, seed);
  for (auto& comp : comps) {
    IntegerLattice red(IntegerLattice::full(k));
    if (I_K.dom.kind == Domain::Kind::Fp) {
      FiniteFieldRep rep = finite_field_rep(comp.maximal_ideal, seed);
      std::vector<uni::PPoly> ffu;
      for (auto& u : units) {
        uni::PPoly img = ff_image(rep, u.map_domain(I_K.dom));
        if (uni::degp(img) < 0)
          throw NonUnitElement("tuple entry vanishes in a residue field");
        ffu.push_back(std::move(img));
      }
      red = explattice_finite_field(rep, ffu).lattice;
    } else {
      std::vector<Polynomial> qunits;
      for (auto& u : units) qunits.push_back(u.map_domain(Domain::QQ()));
      PowerBasisCtx ctx = power_basis_ctx(comp.maximal_ideal, qunits, seed);
      ExpLatticeResult nf = nf_exponent_lattice(ctx.minpoly, ctx.unit_coords, seed);
      out.heuristic_nf_search = out.heuristic_nf_search || nf.heuristic_nf_search;
      red = nf.lattice;
    }
    FieldAlgebra L = FieldAlgebra::build(comp.local_ideal);
    FieldAlgebra Fm = FieldAlgebra::build(comp.maximal_ideal);
    IntegerLattice comp_lattice = red;
    if (L.dim() != Fm.dim()) {
      std::vector<Polynomial> kunits;
      for (auto& u : units) kunits.push_back(u.map_domain(I_K.dom));
      comp_lattice = unipotent_refine(L, comp.maximal_ideal, kunits, red);
    }
    out.lattice = lattice_intersect(out.lattice, comp_lattice);
  }
  return out;
}

// ---------------------------------------------------------------- lifting

IntegerLattice lift_lattice_step(const ExplicitAlgebra& R, const Int& p, int e,
                                 const IntegerLattice& basis,
                                 const std::vector<AlgebraElement>& units) {
  std::size_t m = basis.rank();
  std::size_t k = units.size();
  if (m == 0) return basis;
  Int pe = pow_int(p, static_cast<unsigned long>(e));
  FieldAlgebra Ap = FieldAlgebra::build(R.presentation().map_domain(Domain::GF(p)));
  IntMat sys(Ap.dim(), m);
  for (std::size_t s = 0; s < m; ++s) {
    AlgebraElement prod = R.one();
    for (std::size_t i = 0; i < k; ++i)
      prod = R.mul(prod, R.pow(units[i], basis.basis().at(s, i)));
    AlgebraElement h = R.divide_exact(R.sub(prod, R.one()), pe);
    std::vector<Rat> hc = Ap.coords(R.to_poly(h).map_domain(Domain::GF(p)));
    for (std::size_t r = 0; r < Ap.dim(); ++r) sys.at(r, s) = hc[r].get_num();
  }
  std::vector<Int> zero(Ap.dim(), 0);
  IntegerLattice mprime = solve_linear_mod(sys, zero, p).homogeneous;
  return IntegerLattice::from_rows(k, mprime.basis() * basis.basis());
}

// ----------------------------------------------------------------- master

namespace {

IntegerLattice explat_rec(const ExplicitAlgebra& R, const std::vector<AlgebraElement>& units,
                          std::uint64_t seed, ExplatTrace* trace, bool* heuristic) {
  std::size_t k = units.size();
  Int q = ideal_meet_Z(R.gb());
  std::vector<Polynomial> polys;
  for (auto& u : units) polys.push_back(R.to_poly(u));
  if (q == 0) {
    ExpLatticeResult zr =
        explattice_zerodim(R.presentation().map_domain(Domain::QQ()), polys, seed);
    *heuristic = *heuristic || zr.heuristic_nf_search;
    if (trace) trace->rational_lattice = zr.lattice;
    Int tau = R.module_structure().torsion_exponent;
    if (tau == 1) return zr.lattice;
    Ideal rec_ideal = ideal_sum(
        R.presentation(),
        Ideal::make(Domain::ZZ(), R.nvars(),
                    {Polynomial::constant(Domain::ZZ(), R.nvars(), Rat(tau))},
                    R.presentation().ord));
    ExplicitAlgebra Rp = ExplicitAlgebra::from_presentation(rec_ideal);
    std::vector<AlgebraElement> up;
    for (auto& f : polys) up.push_back(Rp.from_poly(f));
    IntegerLattice M = explat_rec(Rp, up, seed, trace, heuristic);
    return lattice_intersect(zr.lattice, M);
  }
  std::map<Int, int> fact = factor_integer(q);
  IntegerLattice result = IntegerLattice::full(k);
  for (auto& [p, e] : fact) {
    ExpLatticeResult base =
        explattice_zerodim(R.presentation().map_domain(Domain::GF(p)), polys, seed);
    IntegerLattice M = base.lattice;
    ExplatTrace::PrimeBranch branch;
    branch.p = p;
    branch.e = e;
    branch.lattices.push_back(M);
    for (int j = 1; j < e; ++j) {
      M = lift_lattice_step(R, p, j, M, units);
      branch.lattices.push_back(M);
    }
    if (trace) trace->branches.push_back(std::move(branch));
    result = lattice_intersect(result, M);
  }
  return result;
}

}  // namespace

ExpLatticeResult explattice(const ExplicitAlgebra& R, const std::vector<AlgebraElement>& units,
                            std::uint64_t seed, ExplatTrace* trace) {
  for (auto& u : units)
    if (!R.element_inverse(u))
      throw NonUnitElement("exponent lattice requested for a non-unit");
  ExpLatticeResult out;
  bool heuristic = false;
  out.lattice = explat_rec(R, units, seed, trace, &heuristic);
  out.heuristic_nf_search = heuristic;
  // soundness certificates: every basis vector maps the tuple to 1
  for (std::size_t r = 0; r < out.lattice.rank(); ++r) {
    AlgebraElement prod = R.one();
    for (std::size_t i = 0; i < units.size(); ++i)
      prod = R.mul(prod, R.pow(units[i], out.lattice.basis().at(r, i)));
    if (!R.is_one(prod)) throw InternalError("explattice: unsound relation in the result");
  }
  return out;
}

}  // namespace zalg
