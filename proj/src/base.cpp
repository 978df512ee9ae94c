#include "zalg/base.hpp"

namespace zalg {

namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> g_deadline;
}

void set_deadline(std::chrono::milliseconds budget) {
  g_deadline = std::chrono::steady_clock::now() + budget;
}

void clear_deadline() { g_deadline.reset(); }

void check_deadline() {
  if (g_deadline && std::chrono::steady_clock::now() > *g_deadline)
    throw TimeoutError("computation exceeded the configured time budget");
}

Int Rng::below(const Int& m) {
  if (m <= 0) throw InternalError("Rng::below: nonpositive bound");
  std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
  while (true) {
    Int r = 0;
    for (std::size_t got = 0; got < bits; got += 64) {
      r <<= 64;
      r += Int(static_cast<unsigned long>(next_u64() & 0xffffffffULL)) +
           (Int(static_cast<unsigned long>(next_u64() >> 32)) << 32);
    }
    r = mod_pos(r, Int(1) << bits);
    if (r < m) return r;
  }
}

XGcd xgcd(const Int& a, const Int& b) {
  XGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm_int(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_pos(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int exact_div(const Int& a, const Int& b) {
  if (b == 0 || a % b != 0) throw InternalError("exact_div: not divisible");
  return a / b;
}

bool divides(const Int& a, const Int& b) {
  if (a == 0) return b == 0;
  return b % a == 0;
}

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::optional<Int> invmod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
  return r;
}

namespace {

Int pollard_brent(const Int& n, Rng& rng) {
  if (n % 2 == 0) return 2;
  while (true) {
    Int y = rng.below(n - 1) + 1;
    Int c = rng.below(n - 1) + 1;
    Int m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
      x = y;
      for (Int i = 0; i < r; ++i) y = mod_pos(y * y + c, n);
      Int k = 0;
      while (k < r && g == 1) {
        ys = y;
        Int rk = r - k;
        Int lim = m < rk ? m : rk;
        for (Int i = 0; i < lim; ++i) {
          y = mod_pos(y * y + c, n);
          q = mod_pos(q * (x - y), n);
        }
        g = gcd_int(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = mod_pos(ys * ys + c, n);
        g = gcd_int(x - ys, n);
      }
    }
    if (g != n) return g;
  }
}

void factor_rec(Int n, std::map<Int, int>& out, Rng& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Int d = pollard_brent(n, rng);
  factor_rec(d, out, rng);
  factor_rec(n / d, out, rng);
}

}  // namespace

std::map<Int, int> factor_integer(Int n) {
  if (n < 1) throw InternalError("factor_integer: needs n >= 1");
  std::map<Int, int> out;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    while (n % p == 0) {
      out[Int(p)] += 1;
      n /= p;
    }
  }
  Int p = 41;
  while (n > 1 && p * p <= n && p < 1000000) {
    while (n % p == 0) {
      out[p] += 1;
      n /= p;
    }
    p += 2;
  }
  if (n > 1) {
    Rng rng(0x5eedULL);
    factor_rec(n, out, rng);
  }
  return out;
}

Int euler_phi(const Int& m) {
  Int r = 1;
  for (auto& [p, e] : factor_integer(m)) r *= pow_int(p, e - 1) * (p - 1);
  return r;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace zalg
