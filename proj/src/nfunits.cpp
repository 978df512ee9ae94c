#include "zalg/nfunits.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "zalg/explat.hpp"
#include "zalg/numeric.hpp"

namespace zalg {

std::vector<Rat> NumberFieldOrder::power_coords(const AlgebraElement& a) const {
  std::size_t d = to_power_basis.size();
  std::vector<Rat> v(d, Rat(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) v[j] += Rat(a.c[i]) * to_power_basis[i][j];
  }
  return v;
}

NumberFieldOrder primitive_element(const Ideal& char0_prime, std::uint64_t seed) {
  NumberFieldOrder O;
  O.alg = ExplicitAlgebra::from_presentation(char0_prime);
  if (!O.alg.module_structure().invariant_factors.empty())
    throw InternalError("primitive_element: component has additive torsion");
  std::size_t d = O.alg.dim();
  int n = O.alg.nvars();
  Rng rng(seed ^ 0x7e7aULL);
  for (int attempt = 0; attempt < 300; ++attempt) {
    Polynomial theta_poly = Polynomial::zero(Domain::ZZ(), n);
    if (attempt < n) {
      theta_poly = Polynomial::variable(Domain::ZZ(), n, attempt);
    } else if (attempt < n + n * n) {
      int i = (attempt - n) / n, j = (attempt - n) % n;
      theta_poly = Polynomial::variable(Domain::ZZ(), n, i) +
                   (i == j ? Polynomial::zero(Domain::ZZ(), n)
                           : Polynomial::variable(Domain::ZZ(), n, j));
    } else {
      for (int i = 0; i < n; ++i)
        theta_poly =
            theta_poly + Polynomial::variable(Domain::ZZ(), n, i).scaled(Rat(rng.uniform(-3, 3)));
    }
    if (theta_poly.is_zero()) continue;
    AlgebraElement theta = O.alg.from_poly(theta_poly);
    // Krylov sequence of integer coordinate rows
    std::vector<std::vector<Rat>> powers;
    AlgebraElement cur = O.alg.one();
    for (std::size_t j = 0; j <= d; ++j) {
      std::vector<Rat> row(d);
      for (std::size_t c = 0; c < d; ++c) row[c] = Rat(cur.c[c]);
      powers.push_back(std::move(row));
      if (j < d) cur = O.alg.mul(cur, theta);
    }
    // first dependence must occur exactly at degree d
    std::vector<std::vector<Rat>> rows(d, std::vector<Rat>(d, Rat(0)));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t c = 0; c < d; ++c) rows[c][j] = powers[j][c];
    KEchelon ech = k_echelon(Domain::QQ(), rows);
    auto sol = k_solve(Domain::QQ(), rows, powers[d]);
    if (!sol) continue;
    // solvable; ensure the lower powers are independent
    std::vector<std::vector<Rat>> lower;
    for (std::size_t j = 0; j < d; ++j) lower.push_back(powers[j]);
    if (k_echelon(Domain::QQ(), lower).rows.size() != d) continue;
    O.theta = theta;
    O.minpoly.assign(d + 1, Int(0));
    O.minpoly[d] = 1;
    bool integral = true;
    for (std::size_t j = 0; j < d; ++j) {
      Rat c = -(*sol)[j];
      if (c.get_den() != 1) integral = false;
      O.minpoly[j] = c.get_num();
    }
    if (!integral)
      throw InternalError("primitive_element: non-integral minimal polynomial");
    // Macaulay -> power basis transform
    O.to_power_basis.assign(d, std::vector<Rat>(d, Rat(0)));
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Rat> e(d, Rat(0));
      e[i] = 1;
      auto c = k_solve(Domain::QQ(), rows, e);
      if (!c) throw InternalError("primitive_element: power basis solve failed");
      O.to_power_basis[i] = *c;
    }
    O.r1 = uni::real_root_count(O.minpoly);
    O.r2 = (static_cast<int>(d) - O.r1) / 2;
    return O;
  }
  throw InternalError("primitive_element: retry budget exhausted");
}

uni::PPoly finite_field_unit_gen(const FiniteFieldRep& F, std::uint64_t seed) {
  Int q = ff_card(F);
  if (q > (Int(1) << 40))
    throw TooLarge("finite field exceeds the 2^40 factorization cap");
  Int M = q - 1;
  if (M == 1) return ff_one(F);
  std::map<Int, int> fact = factor_integer(M);
  auto is_generator = [&](const uni::PPoly& g) {
    if (uni::degp(g) < 0) return false;
    for (auto& [ell, e] : fact)
      if (ff_is_one(F, ff_pow(F, g, M / ell))) return false;
    return true;
  };
  // deterministic candidates first, then seeded random ones
  std::vector<uni::PPoly> cands;
  if (F.deg == 1) {
    for (long c = 2; c < 40 && c < F.p; ++c) cands.push_back(uni::PPoly{F.p, {Int(c)}});
  } else {
    for (long c = 0; c < 20; ++c) {
      uni::PPoly g{F.p, {Int(c), Int(1)}};
      cands.push_back(uni::p_trim(std::move(g)));
    }
  }
  for (auto& g : cands)
    if (is_generator(g)) return g;
  Rng rng(seed ^ 0x9e0fULL);
  for (int it = 0; it < 4000; ++it) {
    uni::PPoly g{F.p, {}};
    g.c.resize(F.deg);
    for (auto& c : g.c) c = rng.below(F.p);
    g = uni::p_trim(std::move(g));
    if (is_generator(g)) return g;
  }
  throw InternalError("finite_field_unit_gen: no generator found");
}

namespace {

std::vector<Int> torsion_candidates_desc(int d) {
  std::vector<Int> out;
  for (long m = 2; m <= 6L * d * d + 4; ++m)
    if (euler_phi(m) <= d) out.push_back(m);
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<Int> element_torsion_order(const ExplicitAlgebra& A, const AlgebraElement& u,
                                         int d) {
  for (long m = 1; m <= 6L * d * d + 4; ++m) {
    if (euler_phi(m) > d) continue;
    if (A.is_one(A.pow(u, m))) return Int(m);
  }
  return std::nullopt;
}

}  // namespace

TorsionUnit torsion_units(const NumberFieldOrder& O, std::uint64_t seed) {
  int d = O.degree();
  int n = O.alg.nvars();
  Domain Q = Domain::QQ();
  for (const Int& m : torsion_candidates_desc(d)) {
    if (euler_phi(m) > d) continue;
    // F tensor Q(zeta_m): adjoin s with Phi_m(s) = 0, s is the front variable
    uni::ZPoly phi = uni::cyclotomic(m.get_ui());
    std::vector<Polynomial> gens;
    for (auto& g : O.alg.presentation().gens)
      gens.push_back(g.map_domain(Q).shift_vars(1));
    Polynomial phis = Polynomial::zero(Q, n + 1);
    for (std::size_t i = 0; i < phi.size(); ++i) {
      Term t = Term::one(n + 1);
      t.e[0] = static_cast<int>(i);
      phis = phis + Polynomial::monomial(Q, n + 1, t, Rat(phi[i]));
    }
    gens.push_back(phis);
    Ideal J = Ideal::make(Q, n + 1, gens, TermOrdering::elim(n + 1, 1));
    std::vector<ZeroDimComponent> comps;
    try {
      comps = zerodim_decompose(J, seed);
    } catch (const ZalgError&) {
      continue;
    }
    for (auto& comp : comps) {
      if (comp.residue_degree != d) continue;  // no embedding of zeta_m into F
      StrongGroebnerBasis G = strong_groebner(comp.maximal_ideal);
      Polynomial s = Polynomial::variable(Q, n + 1, 0);
      Polynomial root = normal_form(s, G);
      if (root.uses_front_vars(1)) continue;
      Polynomial rho = root.drop_front_vars(1);
      // integral coordinates over the Macaulay basis decide membership in O
      Int den = 1;
      for (auto& [t, c] : rho.terms()) den = lcm_int(den, c.get_den());
      AlgebraElement scaled = O.alg.from_poly(rho.scaled(Rat(den)).map_domain(Domain::ZZ()));
      bool integral = true;
      std::vector<Int> coords(O.alg.dim());
      for (std::size_t i = 0; i < O.alg.dim(); ++i) {
        if (scaled.c[i] % den != 0) {
          integral = false;
          break;
        }
        coords[i] = scaled.c[i] / den;
      }
      if (!integral) continue;
      AlgebraElement zeta = O.alg.from_coords(coords);
      if (!O.alg.is_one(O.alg.pow(zeta, m))) continue;
      bool primitive = true;
      for (auto& [ell, e] : factor_integer(m))
        if (O.alg.is_one(O.alg.pow(zeta, m / ell))) primitive = false;
      if (!primitive) continue;
      return {zeta, m};
    }
  }
  throw InternalError("torsion_units: not even -1 was found");
}

// ------------------------------------------------------------- quadratics

namespace {

// minimal convergent solution of x^2 - N y^2 = +-1
std::pair<Int, Int> pell_pm1(const Int& N) {
  Int a0 = isqrt(N);
  Int P = 0, Q = 1, a = a0;
  Int hprev = 1, h = a0, kprev = 0, k = 1;
  for (int guard = 0; guard < 200000; ++guard) {
    Int t = h * h - N * k * k;
    if (k >= 1 && (t == 1 || t == -1)) return {h, k};
    P = a * Q - P;
    Q = (N - P * P) / Q;
    a = (a0 + P) / Q;
    Int hn = a * h + hprev, kn = a * k + kprev;
    hprev = h;
    h = hn;
    kprev = k;
    k = kn;
    check_deadline();
  }
  throw InternalError("pell_pm1: convergent guard tripped");
}

// elements (x + y sqrt(D))/2 with x = y D (mod 2)
struct QuadElt {
  Int x, y;
};

QuadElt quad_mul(const QuadElt& a, const QuadElt& b, const Int& D) {
  Int nx = a.x * b.x + a.y * b.y * D;
  Int ny = a.x * b.y + a.y * b.x;
  if (nx % 2 != 0 || ny % 2 != 0) throw InternalError("quad_mul: parity violated");
  return {nx / 2, ny / 2};
}

QuadElt quad_pow(QuadElt a, long e, const Int& D) {
  QuadElt r{2, 0};  // the element 1
  while (e > 0) {
    if (e & 1) r = quad_mul(r, a, D);
    a = quad_mul(a, a, D);
    e >>= 1;
  }
  return r;
}

Int quad_norm4(const QuadElt& a, const Int& D) { return a.x * a.x - D * a.y * a.y; }  // 4*N(a)

// replace u by an exact ell-th root when one exists in the order of
// discriminant D; approximation guides, exact arithmetic decides
bool quad_take_root(QuadElt& u, long ell, const Int& D) {
  mpfr_t t, sq, v, tmp;
  mpfr_inits2(256, t, sq, v, tmp, (mpfr_ptr) nullptr);
  mpfr_set_z(sq, D.get_mpz_t(), MPFR_RNDN);
  mpfr_sqrt(sq, sq, MPFR_RNDN);
  mpfr_set_z(v, u.x.get_mpz_t(), MPFR_RNDN);
  mpfr_set_z(tmp, u.y.get_mpz_t(), MPFR_RNDN);
  mpfr_mul(tmp, tmp, sq, MPFR_RNDN);
  mpfr_add(v, v, tmp, MPFR_RNDN);
  mpfr_div_ui(v, v, 2, MPFR_RNDN);  // value of u (assume > 1)
  bool ok = false;
  if (mpfr_cmp_ui(v, 1) > 0) {
    mpfr_rootn_ui(t, v, static_cast<unsigned long>(ell), MPFR_RNDN);
    for (int sigma : {1, -1}) {
      // candidate root (a + b sqrt(D))/2 with a = t + sigma/t, b = (t - sigma/t)/sqrt(D)
      mpfr_ui_div(tmp, 1, t, MPFR_RNDN);
      mpfr_t acand, bcand;
      mpfr_inits2(256, acand, bcand, (mpfr_ptr) nullptr);
      if (sigma == 1)
        mpfr_add(acand, t, tmp, MPFR_RNDN);
      else
        mpfr_sub(acand, t, tmp, MPFR_RNDN);
      if (sigma == 1)
        mpfr_sub(bcand, t, tmp, MPFR_RNDN);
      else
        mpfr_add(bcand, t, tmp, MPFR_RNDN);
      mpfr_div(bcand, bcand, sq, MPFR_RNDN);
      Int a, b;
      mpfr_round(acand, acand);
      mpfr_round(bcand, bcand);
      mpfr_get_z(a.get_mpz_t(), acand, MPFR_RNDN);
      mpfr_get_z(b.get_mpz_t(), bcand, MPFR_RNDN);
      mpfr_clears(acand, bcand, (mpfr_ptr) nullptr);
      if (mod_pos(a - b * D, 2) != 0) continue;
      QuadElt cand{a, b};
      if (quad_norm4(cand, D) != 4 && quad_norm4(cand, D) != -4) continue;
      for (QuadElt c2 : {cand, QuadElt{-cand.x, -cand.y}}) {
        QuadElt pw = quad_pow(c2, ell, D);
        if (pw.x == u.x && pw.y == u.y) {
          u = c2;
          ok = true;
          break;
        }
      }
      if (ok) break;
    }
  }
  mpfr_clears(t, sq, v, tmp, (mpfr_ptr) nullptr);
  mpfr_free_cache();
  return ok;
}

AlgebraElement real_quadratic_fundamental(const NumberFieldOrder& O) {
  // Macaulay basis is {1, gamma}; D = disc of gamma's minimal polynomial
  if (O.alg.dim() != 2) throw InternalError("real_quadratic_fundamental: degree must be 2");
  AlgebraElement gamma = O.alg.from_coords({Int(0), Int(1)});
  AlgebraElement g2 = O.alg.mul(gamma, gamma);
  // gamma^2 = -c - b gamma
  Int b = -g2.c[1], c = -g2.c[0];
  Int D = b * b - 4 * c;
  if (D <= 0 || is_square(D))
    throw InternalError("real_quadratic_fundamental: not a real quadratic domain");
  // a starting unit from the Pell equation, then root refinement
  QuadElt u{0, 0};
  bool have = false;
  for (Int y = 1; y < 3000 && !have; ++y) {
    for (int s : {4, -4}) {
      Int x2 = D * y * y + s;
      if (x2 > 0 && is_square(x2)) {
        u = QuadElt{isqrt(x2), y};
        have = true;
        break;
      }
    }
  }
  if (!have) {
    auto [x, y] = pell_pm1(D);
    u = QuadElt{2 * x, 2 * y};
  }
  // normalize to the value > 1 representative
  if (u.x < 0) u = QuadElt{-u.x, -u.y};
  if (u.y < 0) {
    // conjugate has value +-1/value; flip the sign of y
    u = QuadElt{u.x, -u.y};
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (long ell : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
      while (quad_take_root(u, ell, D)) {
        if (u.x < 0) u = QuadElt{-u.x, -u.y};
        if (u.y < 0) u = QuadElt{u.x, -u.y};
        changed = true;
      }
    }
  }
  // express (x + y sqrt(D))/2 over {1, gamma}: sqrt(D) = 2 gamma + b
  Int lin = u.y;
  Int con2 = u.x + u.y * b;
  if (mod_pos(con2, 2) != 0) throw InternalError("real_quadratic_fundamental: integrality failed");
  AlgebraElement eps = O.alg.from_coords({con2 / 2, lin});
  if (!O.alg.element_inverse(eps))
    throw InternalError("real_quadratic_fundamental: result is not a unit");
  return eps;
}

// ------------------------------------------------------- bounded search

int bounded_search_radius(int d) {
  switch (d) {
    case 3:
    case 4:
      return 32;
    case 5:
      return 11;
    default:
      return 6;
  }
}

Int order_element_norm(const ExplicitAlgebra& A, const AlgebraElement& u) {
  std::size_t d = A.dim();
  IntMat m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Int> col(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (u.c[i] == 0) continue;
      const std::vector<Int>& row = A.product_row(i, j);
      for (std::size_t r = 0; r < d; ++r) col[r] += u.c[i] * row[r];
    }
    for (std::size_t r = 0; r < d; ++r) m.at(r, j) = col[r];
  }
  return det(m);
}

struct SearchUnit {
  AlgebraElement elem;
  std::vector<double> logvec;
  double size = 0;
};

UnitGroupData bounded_search_units(const NumberFieldOrder& O, const TorsionUnit& torsion,
                                   std::uint64_t seed) {
  int d = O.degree();
  int rank = O.unit_rank();
  int B = bounded_search_radius(d);
  std::vector<std::complex<double>> roots = complex_roots(O.minpoly);
  // embeddings of the Macaulay basis
  std::vector<std::vector<std::complex<double>>> sigma(d,
                                                       std::vector<std::complex<double>>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::complex<double> v = 0, z = roots[j];
      for (int t = d - 1; t >= 0; --t) v = v * z + O.to_power_basis[i][t].get_d();
      sigma[i][j] = v;
    }
  std::vector<SearchUnit> found;
  std::vector<long> c(d, -B);
  while (true) {
    bool zero = true;
    for (long v : c)
      if (v) zero = false;
    if (!zero) {
      double logsum = 0;
      bool degenerate = false;
      std::vector<double> lv(d);
      for (int j = 0; j < d && !degenerate; ++j) {
        std::complex<double> z = 0;
        for (int i = 0; i < d; ++i) z += static_cast<double>(c[i]) * sigma[i][j];
        double a = std::abs(z);
        if (a < 1e-12) degenerate = true;
        lv[j] = std::log(a);
        logsum += lv[j];
      }
      if (!degenerate && std::abs(logsum) < 0.03) {
        std::vector<Int> coords(d);
        for (int i = 0; i < d; ++i) coords[i] = c[i];
        AlgebraElement u = O.alg.from_coords(coords);
        Int nm = order_element_norm(O.alg, u);
        if (nm == 1 || nm == -1) {
          double sz = 0;
          for (double x : lv) sz += x * x;
          if (sz > 1e-12) found.push_back({u, lv, sz});
        }
      }
    }
    int pos = d - 1;
    while (pos >= 0 && c[pos] == B) {
      c[pos] = -B;
      --pos;
    }
    if (pos < 0) break;
    ++c[pos];
  }
  if (rank == 0) return {torsion, {}, UnitProvenance::BoundedSearch};
  std::sort(found.begin(), found.end(),
            [](const SearchUnit& a, const SearchUnit& b) { return a.size < b.size; });

  auto numeric_rank = [&](const std::vector<const SearchUnit*>& sel) {
    // Gram-Schmidt rank of the log vectors
    std::vector<std::vector<double>> gs;
    for (auto* s : sel) {
      std::vector<double> v = s->logvec;
      for (auto& w : gs) {
        double dot = 0, nn = 0;
        for (int j = 0; j < d; ++j) {
          dot += v[j] * w[j];
          nn += w[j] * w[j];
        }
        for (int j = 0; j < d; ++j) v[j] -= dot / nn * w[j];
      }
      double nv = 0;
      for (double x : v) nv += x * x;
      if (nv > 1e-12) gs.push_back(v);
    }
    return static_cast<int>(gs.size());
  };

  std::vector<const SearchUnit*> sel;
  for (auto& su : found) {
    if (static_cast<int>(sel.size()) == rank) break;
    sel.push_back(&su);
    if (numeric_rank(sel) != static_cast<int>(sel.size())) sel.pop_back();
  }
  if (static_cast<int>(sel.size()) < rank)
    throw UnsupportedOrder("bounded search found fewer units than the rank requires");

  std::vector<AlgebraElement> gens;
  for (auto* s : sel) gens.push_back(s->elem);
  std::vector<std::vector<double>> genlogs;
  for (auto* s : sel) genlogs.push_back(s->logvec);

  // saturation at small primes within the enumerated set
  auto in_group_residual = [&](const std::vector<double>& target, std::vector<double>& coeffs) {
    // least squares via normal equations on the selected log vectors
    int r = static_cast<int>(genlogs.size());
    std::vector<std::vector<double>> m(r, std::vector<double>(r + 1, 0));
    for (int a = 0; a < r; ++a) {
      for (int b = 0; b < r; ++b)
        for (int j = 0; j < d; ++j) m[a][b] += genlogs[a][j] * genlogs[b][j];
      for (int j = 0; j < d; ++j) m[a][r] += genlogs[a][j] * target[j];
    }
    for (int col = 0; col < r; ++col) {
      int piv = col;
      for (int rr = col + 1; rr < r; ++rr)
        if (std::abs(m[rr][col]) > std::abs(m[piv][col])) piv = rr;
      std::swap(m[col], m[piv]);
      if (std::abs(m[col][col]) < 1e-12) return false;
      for (int rr = 0; rr < r; ++rr) {
        if (rr == col) continue;
        double f = m[rr][col] / m[col][col];
        for (int cc = col; cc <= r; ++cc) m[rr][cc] -= f * m[col][cc];
      }
    }
    coeffs.resize(r);
    double res = 0;
    std::vector<double> recon(d, 0);
    for (int a = 0; a < r; ++a) {
      coeffs[a] = m[a][r] / m[a][a];
      for (int j = 0; j < d; ++j) recon[j] += coeffs[a] * genlogs[a][j];
    }
    for (int j = 0; j < d; ++j) res += (recon[j] - target[j]) * (recon[j] - target[j]);
    return res < 1e-9;
  };

  bool changed = true;
  int guard = 64;
  while (changed && guard-- > 0) {
    changed = false;
    for (long ell : {2L, 3L, 5L, 7L}) {
      for (auto& su : found) {
        std::vector<double> target(d), coeffs;
        for (int j = 0; j < d; ++j) target[j] = su.logvec[j] * ell;
        if (!in_group_residual(target, coeffs)) continue;
        std::vector<Int> a(genlogs.size());
        bool integral = true, nontrivial = false;
        for (std::size_t i = 0; i < a.size(); ++i) {
          double r = std::round(coeffs[i]);
          if (std::abs(coeffs[i] - r) > 1e-6) integral = false;
          a[i] = Int(static_cast<long>(r));
          if (mod_pos(a[i], ell) != 0) nontrivial = true;
        }
        if (!integral || !nontrivial) continue;
        // w = v^ell * prod g^-a must be torsion for v to be an ell-th root witness
        AlgebraElement w = O.alg.pow(su.elem, ell);
        for (std::size_t i = 0; i < gens.size(); ++i) w = O.alg.mul(w, O.alg.pow(gens[i], -a[i]));
        if (!element_torsion_order(O.alg, w, d)) continue;
        // swap v into the generating set at a coordinate with a_i nonzero mod ell
        for (std::size_t i = 0; i < a.size(); ++i)
          if (mod_pos(a[i], ell) != 0) {
            gens[i] = su.elem;
            genlogs[i] = su.logvec;
            changed = true;
            break;
          }
        if (changed) break;
      }
      if (changed) break;
    }
  }

  // independence certificate through the relation machinery
  std::vector<std::vector<Rat>> pw;
  for (auto& g : gens) pw.push_back(O.power_coords(g));
  ExpLatticeResult rel = nf_exponent_lattice(O.minpoly, pw, seed);
  if (rel.lattice.rank() != 0)
    throw InternalError("bounded_search_units: generators are not independent");
  return {torsion, gens, UnitProvenance::BoundedSearch};
}

}  // namespace

UnitGroupData order_units(const NumberFieldOrder& O, std::uint64_t seed) {
  TorsionUnit torsion = torsion_units(O, seed);
  int rank = O.unit_rank();
  if (rank == 0) return {torsion, {}, UnitProvenance::Exact};
  if (O.degree() == 2 && O.r1 == 2) {
    AlgebraElement eps = real_quadratic_fundamental(O);
    return {torsion, {eps}, UnitProvenance::Exact};
  }
  if (O.degree() > 6)
    throw UnsupportedOrder("no provider for positive unit rank in degree " +
                           std::to_string(O.degree()));
  return bounded_search_units(O, torsion, seed);
}

}  // namespace zalg
