#pragma once

#include <gmpxx.h>

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace zalg {

using Int = mpz_class;
using Rat = mpq_class;

// ---------------------------------------------------------------- errors

class ZalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public ZalgError {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : ZalgError(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

#define ZALG_DEFINE_ERROR(NAME)                 \
  class NAME : public ZalgError {               \
   public:                                      \
    using ZalgError::ZalgError;                 \
  }

ZALG_DEFINE_ERROR(NotModuleFinite);
ZALG_DEFINE_ERROR(NotDivisible);
ZALG_DEFINE_ERROR(NotComaximal);
ZALG_DEFINE_ERROR(NotReduced);
ZALG_DEFINE_ERROR(HasTorsion);
ZALG_DEFINE_ERROR(NonUnitElement);
ZALG_DEFINE_ERROR(UnsupportedOrder);
ZALG_DEFINE_ERROR(InfiniteRing);
ZALG_DEFINE_ERROR(TooLarge);
ZALG_DEFINE_ERROR(TimeoutError);
ZALG_DEFINE_ERROR(InternalError);

#undef ZALG_DEFINE_ERROR

// ---------------------------------------------------------------- deadline
// A process-wide soft deadline checked inside the long-running pair loops.

void set_deadline(std::chrono::milliseconds budget);
void clear_deadline();
void check_deadline();

// ---------------------------------------------------------------- rng

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next_u64() { return eng_(); }

  // inclusive bounds
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> d(lo, hi);
    return d(eng_);
  }

  // uniform in [0, m), m > 0
  Int below(const Int& m);

  Rng fork() { return Rng(next_u64()); }

 private:
  std::mt19937_64 eng_;
};

// ---------------------------------------------------------------- integers

struct XGcd {
  Int g, s, t;  // g = s*a + t*b
};
XGcd xgcd(const Int& a, const Int& b);

Int gcd_int(const Int& a, const Int& b);
Int lcm_int(const Int& a, const Int& b);
Int fdiv(const Int& a, const Int& b);       // floor quotient
Int mod_pos(const Int& a, const Int& m);    // representative in [0, m)
Int exact_div(const Int& a, const Int& b);  // throws InternalError when b does not divide a
bool divides(const Int& a, const Int& b);   // a | b (a != 0)
Int isqrt(const Int& n);
bool is_square(const Int& n);
bool is_prime(const Int& n);
Int pow_int(const Int& base, unsigned long e);
std::optional<Int> invmod(const Int& a, const Int& m);

// Prime factorization of n >= 1 (trial division then Pollard-Brent rho).
std::map<Int, int> factor_integer(Int n);

Int euler_phi(const Int& m);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace zalg
