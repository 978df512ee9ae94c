#include "zalg/unipoly.hpp"

#include <algorithm>
#include <map>

namespace zalg::uni {

int degz(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly trim(ZPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

ZPoly z_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return trim(std::move(r));
}

ZPoly z_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return trim(std::move(r));
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(std::move(r));
}

ZPoly z_scale(const ZPoly& a, const Int& c) {
  if (c == 0) return {};
  ZPoly r = a;
  for (Int& x : r) x *= c;
  return r;
}

ZPoly z_derivative(const ZPoly& f) {
  if (f.size() <= 1) return {};
  ZPoly r(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = Int(static_cast<long>(i)) * f[i];
  return trim(std::move(r));
}

Int z_content(const ZPoly& f) {
  Int g = 0;
  for (const Int& c : f) g = gcd_int(g, c);
  return g < 0 ? Int(-g) : g;
}

ZPoly z_primitive(const ZPoly& f) {
  Int c = z_content(f);
  if (c == 0) return {};
  ZPoly r = f;
  for (Int& x : r) x /= c;
  if (!r.empty() && r.back() < 0)
    for (Int& x : r) x = -x;
  return r;
}

bool z_divides(const ZPoly& d, const ZPoly& f, ZPoly* quotient) {
  if (d.empty()) return f.empty();
  ZPoly rem = f;
  ZPoly q(f.size() > d.size() ? f.size() - d.size() + 1 : 1, 0);
  while (degz(rem) >= degz(d)) {
    if (rem.back() % d.back() != 0) return false;
    Int c = rem.back() / d.back();
    int shift = degz(rem) - degz(d);
    q[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) rem[shift + i] -= c * d[i];
    rem = trim(std::move(rem));
    if (rem.empty()) break;
    if (degz(rem) < degz(d)) break;
  }
  if (!rem.empty()) return false;
  if (quotient) *quotient = trim(std::move(q));
  return true;
}

Int z_eval(const ZPoly& f, const Int& x) {
  Int r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

namespace {

// pseudo-remainder based primitive PRS
ZPoly z_prem(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  int db = degz(b);
  while (degz(r) >= db) {
    int dr = degz(r);
    ZPoly t(dr - db + 1, 0);
    t[dr - db] = r.back();
    r = z_sub(z_scale(r, b.back()), z_mul(t, b));
    if (degz(r) == dr) throw InternalError("z_prem: no progress");
  }
  return r;
}

}  // namespace

ZPoly z_gcd(ZPoly a, ZPoly b) {
  a = z_primitive(trim(std::move(a)));
  b = z_primitive(trim(std::move(b)));
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (degz(a) < degz(b)) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = z_primitive(z_prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0)
    for (Int& x : a) x = -x;
  return a;
}

int degp(const PPoly& f) { return static_cast<int>(f.c.size()) - 1; }

PPoly p_trim(PPoly f) {
  for (Int& x : f.c) x = mod_pos(x, f.p);
  while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
  return f;
}

PPoly p_from_z(const ZPoly& f, const Int& p) { return p_trim(PPoly{p, f}); }
PPoly p_zero(const Int& p) { return PPoly{p, {}}; }
PPoly p_one(const Int& p) { return PPoly{p, {Int(1)}}; }
PPoly p_x(const Int& p) { return PPoly{p, {Int(0), Int(1)}}; }

PPoly p_add(const PPoly& a, const PPoly& b) {
  PPoly r{a.p, std::vector<Int>(std::max(a.c.size(), b.c.size()), 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  return p_trim(std::move(r));
}

PPoly p_sub(const PPoly& a, const PPoly& b) {
  PPoly r{a.p, std::vector<Int>(std::max(a.c.size(), b.c.size()), 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  return p_trim(std::move(r));
}

PPoly p_mul(const PPoly& a, const PPoly& b) {
  if (a.c.empty() || b.c.empty()) return p_zero(a.p);
  PPoly r{a.p, std::vector<Int>(a.c.size() + b.c.size() - 1, 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  return p_trim(std::move(r));
}

PPoly p_scale(const PPoly& a, const Int& c) {
  PPoly r = a;
  for (Int& x : r.c) x *= c;
  return p_trim(std::move(r));
}

PPoly p_monic(const PPoly& f) {
  if (f.c.empty()) return f;
  auto inv = invmod(f.c.back(), f.p);
  if (!inv) throw InternalError("p_monic: leading coefficient not invertible");
  return p_scale(f, *inv);
}

std::pair<PPoly, PPoly> p_divmod(const PPoly& a, const PPoly& b) {
  if (b.c.empty()) throw InternalError("p_divmod: division by zero");
  auto invl = invmod(b.c.back(), b.p);
  if (!invl) throw InternalError("p_divmod: leading coefficient not invertible");
  PPoly rem = a;
  PPoly q{a.p, std::vector<Int>(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 1, 0)};
  while (degp(rem) >= degp(b)) {
    Int c = mod_pos(rem.c.back() * *invl, a.p);
    int shift = degp(rem) - degp(b);
    q.c[shift] = c;
    for (std::size_t i = 0; i < b.c.size(); ++i)
      rem.c[shift + i] = mod_pos(rem.c[shift + i] - c * b.c[i], a.p);
    rem = p_trim(std::move(rem));
  }
  return {p_trim(std::move(q)), std::move(rem)};
}

PPoly p_mod(const PPoly& a, const PPoly& b) { return p_divmod(a, b).second; }

PPoly p_gcd(PPoly a, PPoly b) {
  a = p_trim(std::move(a));
  b = p_trim(std::move(b));
  while (!b.c.empty()) {
    PPoly r = p_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.c.empty() ? a : p_monic(a);
}

PPoly p_derivative(const PPoly& f) {
  if (f.c.size() <= 1) return p_zero(f.p);
  PPoly r{f.p, std::vector<Int>(f.c.size() - 1)};
  for (std::size_t i = 1; i < f.c.size(); ++i) r.c[i - 1] = Int(static_cast<long>(i)) * f.c[i];
  return p_trim(std::move(r));
}

PPoly p_mulmod(const PPoly& a, const PPoly& b, const PPoly& f) { return p_mod(p_mul(a, b), f); }

PPoly p_powmod(PPoly a, Int e, const PPoly& f) {
  if (e < 0) throw InternalError("p_powmod: negative exponent");
  PPoly r = p_one(a.p);
  a = p_mod(a, f);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = p_mulmod(r, a, f);
    a = p_mulmod(a, a, f);
    e >>= 1;
  }
  return r;
}

PPoly p_inv_mod(const PPoly& a, const PPoly& f) {
  // extended Euclid over F_p
  PPoly r0 = f, r1 = p_mod(a, f);
  PPoly s0 = p_zero(a.p), s1 = p_one(a.p);
  while (!r1.c.empty()) {
    auto [q, r2] = p_divmod(r0, r1);
    PPoly s2 = p_sub(s0, p_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (degp(r0) != 0) throw InternalError("p_inv_mod: element not invertible");
  auto inv = invmod(r0.c[0], a.p);
  return p_scale(s0, *inv);
}

ZPoly p_lift(const PPoly& f) { return f.c; }

// ------------------------------------------------------------ factor mod p

namespace {

// squarefree decomposition of monic f over F_p
void p_squarefree(const PPoly& f, int mult, std::vector<std::pair<PPoly, int>>& out) {
  if (degp(f) <= 0) return;
  PPoly d = p_derivative(f);
  if (d.c.empty()) {
    // f = g(x^p); over the prime field the p-th root just contracts exponents
    unsigned long p = f.p.get_ui();
    PPoly g{f.p, {}};
    g.c.resize((f.c.size() - 1) / p + 1);
    for (std::size_t i = 0; i < g.c.size(); ++i) g.c[i] = f.c[i * p];
    p_squarefree(p_trim(std::move(g)), mult * static_cast<int>(p), out);
    return;
  }
  PPoly w = p_gcd(f, d);
  PPoly s = p_divmod(f, w).first;  // squarefree part with multiplicity-1 content
  int i = 1;
  while (degp(s) > 0) {
    PPoly y = p_gcd(s, w);
    PPoly part = p_divmod(s, y).first;  // factors of exact multiplicity i
    if (degp(part) > 0) out.push_back({p_monic(part), mult * i});
    s = std::move(y);
    w = p_divmod(w, s).first;
    ++i;
  }
  if (degp(w) > 0) p_squarefree(p_monic(w), mult, out);
}

// distinct-degree on squarefree monic f
std::vector<std::pair<PPoly, int>> p_ddf(PPoly f) {
  std::vector<std::pair<PPoly, int>> out;
  PPoly h = p_x(f.p);
  int d = 0;
  while (degp(f) > 0) {
    ++d;
    if (2 * d > degp(f)) {
      out.push_back({f, degp(f)});
      break;
    }
    h = p_powmod(h, f.p, f);
    PPoly g = p_gcd(p_sub(h, p_x(f.p)), f);
    if (degp(g) > 0) {
      out.push_back({p_monic(g), d});
      f = p_divmod(f, g).first;
      h = p_mod(h, f);
    }
  }
  return out;
}

// equal-degree splitting of monic squarefree f, all factors of degree d
void p_edf(const PPoly& f, int d, Rng& rng, std::vector<PPoly>& out) {
  if (degp(f) == d) {
    out.push_back(p_monic(f));
    return;
  }
  const Int& p = f.p;
  while (true) {
    check_deadline();
    PPoly a{p, {}};
    a.c.resize(degp(f));
    for (auto& c : a.c) c = rng.below(p);
    a = p_trim(std::move(a));
    if (degp(a) <= 0) continue;
    PPoly g = p_gcd(a, f);
    if (degp(g) > 0 && degp(g) < degp(f)) {
      p_edf(g, d, rng, out);
      p_edf(p_divmod(f, g).first, d, rng, out);
      return;
    }
    PPoly b;
    if (p == 2) {
      // trace map over F_{2^d}
      PPoly t = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        t = p_mulmod(t, t, f);
        b = p_add(b, t);
      }
    } else {
      Int e = (pow_int(p, static_cast<unsigned long>(d)) - 1) / 2;
      b = p_sub(p_powmod(a, e, f), p_one(p));
    }
    g = p_gcd(b, f);
    if (degp(g) > 0 && degp(g) < degp(f)) {
      p_edf(g, d, rng, out);
      p_edf(p_divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<PPoly, int>> factor_over_Fp(const PPoly& f_in, std::uint64_t seed) {
  PPoly f = p_trim(f_in);
  if (f.c.empty()) throw InternalError("factor_over_Fp: zero polynomial");
  std::vector<std::pair<PPoly, int>> out;
  if (degp(f) == 0) return out;
  f = p_monic(f);
  Rng rng(seed ^ 0xfac703ULL);
  std::vector<std::pair<PPoly, int>> sqf;
  p_squarefree(f, 1, sqf);
  for (auto& [part, mult] : sqf) {
    for (auto& [g, d] : p_ddf(part)) {
      std::vector<PPoly> irr;
      p_edf(g, d, rng, irr);
      for (auto& h : irr) out.push_back({h, mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (degp(a.first) != degp(b.first)) return degp(a.first) < degp(b.first);
    return a.first.c < b.first.c;
  });
  return out;
}

// ------------------------------------------------------------ factor over Z

namespace {

// linear multifactor Hensel: f = lc * prod(g_i) mod p^k, g_i monic and
// pairwise coprime mod p
std::vector<PPoly> hensel_lift(const ZPoly& f, const std::vector<PPoly>& factors_p, const Int& p,
                               int k) {
  std::size_t r = factors_p.size();
  const Int lc = f.back();
  // Bezout data mod p: tau_i = (lc * prod_{j != i} g_j)^{-1} mod (g_i, p)
  std::vector<PPoly> tau(r);
  for (std::size_t i = 0; i < r; ++i) {
    PPoly prod = p_from_z({lc}, p);
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) prod = p_mulmod(prod, factors_p[j], factors_p[i]);
    tau[i] = p_inv_mod(prod, factors_p[i]);
  }
  // lifted factors as integer polys with coefficients mod p^j
  std::vector<ZPoly> g(r);
  for (std::size_t i = 0; i < r; ++i) g[i] = factors_p[i].c;
  Int pj = p;
  for (int j = 1; j < k; ++j) {
    Int pj1 = pj * p;
    ZPoly prod = {lc};
    for (std::size_t i = 0; i < r; ++i) prod = z_mul(prod, g[i]);
    ZPoly err = z_sub(f, prod);
    ZPoly u(err.size());
    for (std::size_t i = 0; i < err.size(); ++i) {
      if (err[i] % pj != 0) throw InternalError("hensel_lift: error not divisible");
      u[i] = err[i] / pj;
    }
    PPoly up = p_from_z(trim(std::move(u)), p);
    for (std::size_t i = 0; i < r; ++i) {
      PPoly gi = p_from_z(g[i], p);
      PPoly delta = p_mod(p_mul(up, tau[i]), gi);
      for (std::size_t t = 0; t < delta.c.size(); ++t) {
        if (t >= g[i].size()) throw InternalError("hensel_lift: degree overflow");
        g[i][t] = mod_pos(g[i][t] + pj * delta.c[t], pj1);
      }
    }
    pj = pj1;
  }
  std::vector<PPoly> out(r);
  for (std::size_t i = 0; i < r; ++i) out[i] = PPoly{pj, g[i]};
  return out;
}

Int balanced(const Int& a, const Int& m) {
  Int r = mod_pos(a, m);
  if (2 * r > m) r -= m;
  return r;
}

// factor a primitive squarefree polynomial
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f, std::uint64_t seed) {
  if (degz(f) == 1) return {f};
  // choose a prime keeping f squarefree with unchanged degree
  Int p = 2;
  std::vector<std::pair<PPoly, int>> modular;
  while (true) {
    while (f.back() % p == 0) mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    PPoly fp = p_from_z(f, p);
    if (degp(fp) == degz(f) && degp(p_gcd(fp, p_derivative(fp))) == 0) {
      modular = factor_over_Fp(fp, seed);
      break;
    }
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  if (modular.size() == 1) return {f};
  // lift beyond twice the Landau-Mignotte-style bound
  Int height = 0;
  for (const Int& c : f) height = std::max(height, Int(abs(c)));
  Int bound = (Int(1) << (degz(f) + 2)) * isqrt(Int(degz(f) + 1) + 1) * height;
  Int lcabs = abs(f.back());
  bound *= lcabs;
  int k = 1;
  Int pk = p;
  while (pk <= 2 * bound) {
    pk *= p;
    ++k;
  }
  std::vector<PPoly> monic;
  for (auto& [g, m] : modular) monic.push_back(g);
  std::vector<PPoly> lifted = hensel_lift(f, monic, p, k);
  Int modulus = pk;

  std::vector<ZPoly> found;
  ZPoly rest = f;
  std::vector<ZPoly> pool;
  for (auto& g : lifted) pool.push_back(g.c);
  std::size_t take = 1;
  while (2 * take <= pool.size()) {
    bool again = false;
    std::vector<std::size_t> idx(take);
    for (std::size_t i = 0; i < take; ++i) idx[i] = i;
    while (true) {
      check_deadline();
      // candidate = lc * prod(subset) with balanced coefficients
      ZPoly cand = {rest.back()};
      for (std::size_t i : idx) cand = z_mul(cand, pool[i]);
      for (Int& c : cand) c = balanced(c, modulus);
      cand = z_primitive(trim(std::move(cand)));
      ZPoly quotient;
      if (!cand.empty() && z_divides(cand, rest, &quotient)) {
        found.push_back(cand);
        rest = z_primitive(quotient);
        std::vector<ZPoly> np;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) np.push_back(pool[i]);
        pool = std::move(np);
        again = true;
        break;
      }
      // next combination
      int pos = static_cast<int>(take) - 1;
      while (pos >= 0 && idx[pos] == pool.size() - take + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (std::size_t i = pos + 1; i < take; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!again) ++take;
  }
  if (degz(rest) > 0) found.push_back(rest);
  return found;
}

}  // namespace

std::vector<std::pair<ZPoly, int>> factor_over_Z(const ZPoly& f_in, std::uint64_t seed) {
  ZPoly f = z_primitive(trim(f_in));
  if (f.empty()) throw InternalError("factor_over_Z: zero polynomial");
  std::vector<std::pair<ZPoly, int>> out;
  if (degz(f) == 0) return out;
  ZPoly g = z_gcd(f, z_derivative(f));
  ZPoly w = f;
  if (degz(g) > 0) {
    if (!z_divides(g, f, &w)) throw InternalError("factor_over_Z: gcd division failed");
    w = z_primitive(w);  // product of the distinct irreducible factors
  }
  for (auto& h : factor_squarefree_z(w, seed)) {
    int mult = 0;
    ZPoly rest = f, q;
    while (z_divides(h, rest, &q)) {
      ++mult;
      rest = trim(std::move(q));
      if (degz(rest) < degz(h)) break;
    }
    out.push_back({h, mult});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (degz(a.first) != degz(b.first)) return degz(a.first) < degz(b.first);
    return a.first < b.first;
  });
  return out;
}

ZPoly cyclotomic(unsigned long m) {
  static std::map<unsigned long, ZPoly> memo;
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  ZPoly f(m + 1, 0);
  f[0] = -1;
  f[m] = 1;  // x^m - 1
  for (unsigned long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    ZPoly phi_d = cyclotomic(d);
    ZPoly q;
    if (!z_divides(phi_d, f, &q)) throw InternalError("cyclotomic: division failed");
    f = q;
  }
  memo[m] = f;
  return f;
}

int real_root_count(const ZPoly& f_in) {
  ZPoly f = z_primitive(trim(f_in));
  if (f.empty()) throw InternalError("real_root_count: zero polynomial");
  if (degz(f) == 0) return 0;
  ZPoly sf;
  {
    ZPoly g = z_gcd(f, z_derivative(f));
    if (!z_divides(g, f, &sf)) throw InternalError("real_root_count: gcd division failed");
    sf = z_primitive(sf);
  }
  // Sturm chain with pseudo-remainders; scaling kept an even power of lc(b)
  std::vector<ZPoly> chain = {sf, z_derivative(sf)};
  while (degz(chain.back()) > 0) {
    const ZPoly& a = chain[chain.size() - 2];
    const ZPoly& b = chain.back();
    ZPoly r = a;
    Int lb = b.back();
    int scalings = 0;
    while (degz(r) >= degz(b)) {
      int dr = degz(r);
      ZPoly t(dr - degz(b) + 1, 0);
      t[dr - degz(b)] = r.back();
      r = trim(z_sub(z_scale(r, lb), z_mul(t, b)));
      ++scalings;
    }
    if (scalings % 2 == 1) r = z_scale(r, lb);
    if (r.empty()) break;
    for (Int& c : r) c = -c;
    Int cont = z_content(r);  // positive, so the sign survives
    for (Int& c : r) c /= cont;
    chain.push_back(r);
  }
  auto sign_at_inf = [](const ZPoly& g, int dir) {
    if (g.empty()) return 0;
    int s = g.back() > 0 ? 1 : -1;
    if (dir < 0 && degz(g) % 2 == 1) s = -s;
    return s;
  };
  auto variations = [&](int dir) {
    int v = 0, last = 0;
    for (auto& g : chain) {
      int s = sign_at_inf(g, dir);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  return variations(-1) - variations(+1);
}

}  // namespace zalg::uni
