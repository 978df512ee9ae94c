#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zalg/intmat.hpp"

using namespace zalg;

namespace {

IntMat mat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Int>> v;
  for (auto& r : rows) v.emplace_back(r.begin(), r.end());
  return IntMat::from_rows(v);
}

std::vector<Int> vec(const std::vector<long>& v) { return std::vector<Int>(v.begin(), v.end()); }

IntMat random_mat(Rng& rng, std::size_t r, std::size_t c, long lo = -9, long hi = 9) {
  IntMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Int(rng.uniform(lo, hi));
  return m;
}

bool is_hnf(const IntMat& h) {
  long last_pivot = -1;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t p = 0;
    while (p < h.cols() && h.at(i, p) == 0) ++p;
    if (p == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (static_cast<long>(p) <= last_pivot) return false;
    last_pivot = static_cast<long>(p);
    if (h.at(i, p) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h.at(k, p) < 0 || h.at(k, p) >= h.at(i, p)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("hnf identity fixed point") {
  IntMat a = mat({{1, 0}, {0, 1}});
  auto r = hnf(a);
  CHECK(r.h == a);
  CHECK(r.u * a == r.h);
}

TEST_CASE("hnf gcd-forced row reduction") {
  IntMat a = mat({{2, 0}, {4, 0}});
  auto r = hnf(a);
  CHECK(r.h == mat({{2, 0}, {0, 0}}));
}

TEST_CASE("hnf random 5x5: U*A=H, canonical, |det U| = 1") {
  Rng rng(42);
  for (int it = 0; it < 50; ++it) {
    IntMat a = random_mat(rng, 5, 5);
    auto r = hnf(a);
    CHECK(r.u * a == r.h);
    CHECK(is_hnf(r.h));
    Int d = det(r.u);
    CHECK((d == 1 || d == -1));
  }
}

TEST_CASE("snf diag(2,3) -> diag(1,6)") {
  auto s = snf(mat({{2, 0}, {0, 3}}));
  REQUIRE(s.invariant_factors.size() == 2);
  CHECK(s.invariant_factors[0] == 1);
  CHECK(s.invariant_factors[1] == 6);
  CHECK(s.u * mat({{2, 0}, {0, 3}}) * s.v == s.s);
}

TEST_CASE("snf zero matrix") {
  auto s = snf(IntMat::zero(3, 2));
  CHECK(s.rank == 0);
  CHECK(s.invariant_factors.empty());
}

TEST_CASE("snf random 4x6 properties") {
  Rng rng(7);
  for (int it = 0; it < 50; ++it) {
    IntMat a = random_mat(rng, 4, 6);
    auto s = snf(a);
    CHECK(s.u * a * s.v == s.s);
    Int du = det(s.u), dv = det(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
      CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        if (i != j) CHECK(s.s.at(i, j) == 0);
  }
}

TEST_CASE("int_kernel simple cases") {
  auto k1 = int_kernel(mat({{1, 1}}));
  CHECK(k1.rank() == 1);
  CHECK(k1.contains(vec({1, -1})));

  auto k2 = int_kernel(mat({{0, 0}}));
  CHECK(k2 == IntegerLattice::full(2));
}

TEST_CASE("int_kernel random properties") {
  Rng rng(11);
  for (int it = 0; it < 40; ++it) {
    std::size_t r = 2 + it % 3, c = 3 + it % 3;
    IntMat a = random_mat(rng, r, c, -4, 4);
    auto k = int_kernel(a);
    for (std::size_t i = 0; i < k.rank(); ++i) {
      auto v = k.basis().row(i);
      for (const Int& x : a.apply(v)) CHECK(x == 0);
    }
    auto s = snf(a);
    CHECK(k.rank() == c - s.rank);
    // every small kernel vector lies in the returned lattice
    if (c == 3) {
      for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y)
          for (long z = -3; z <= 3; ++z) {
            std::vector<Int> v = vec({x, y, z});
            bool in_ker = true;
            for (const Int& w : a.apply(v))
              if (w != 0) in_ker = false;
            if (in_ker) CHECK(k.contains(v));
          }
    }
  }
}

TEST_CASE("lattice_intersect paper instance") {
  auto lam = IntegerLattice::from_vectors(3, {vec({0, 6, 0}), vec({0, 0, 3})});
  auto m1 = IntegerLattice::from_vectors(3, {vec({4, 0, 0}), vec({0, 3, 0}), vec({0, 0, 3})});
  auto m2 = IntegerLattice::from_vectors(3, {vec({3, 0, 0}), vec({0, 6, 0}), vec({0, 0, 3})});
  auto r = lattice_intersect(lattice_intersect(lam, m1), m2);
  CHECK(r == lam);
}

TEST_CASE("lattice_intersect with full lattice") {
  Rng rng(3);
  IntMat a = random_mat(rng, 2, 4);
  auto l = IntegerLattice::from_rows(4, a);
  CHECK(lattice_intersect(l, IntegerLattice::full(4)) == l);
  CHECK(lattice_intersect(l, l) == l);
}

TEST_CASE("lattice_intersect random: membership and small-vector maximality") {
  Rng rng(17);
  for (int it = 0; it < 20; ++it) {
    auto l1 = IntegerLattice::from_rows(3, random_mat(rng, 2, 3, -3, 3));
    auto l2 = IntegerLattice::from_rows(3, random_mat(rng, 2, 3, -3, 3));
    auto li = lattice_intersect(l1, l2);
    for (std::size_t i = 0; i < li.rank(); ++i) {
      CHECK(l1.contains(li.basis().row(i)));
      CHECK(l2.contains(li.basis().row(i)));
    }
    for (long x = -5; x <= 5; ++x)
      for (long y = -5; y <= 5; ++y)
        for (long z = -5; z <= 5; ++z) {
          auto v = vec({x, y, z});
          if (l1.contains(v) && l2.contains(v)) CHECK(li.contains(v));
        }
  }
}

TEST_CASE("lattice_intersect commutative and associative") {
  Rng rng(23);
  for (int it = 0; it < 15; ++it) {
    auto a = IntegerLattice::from_rows(3, random_mat(rng, 3, 3, -4, 4));
    auto b = IntegerLattice::from_rows(3, random_mat(rng, 3, 3, -4, 4));
    auto c = IntegerLattice::from_rows(3, random_mat(rng, 3, 3, -4, 4));
    CHECK(lattice_intersect(a, b) == lattice_intersect(b, a));
    CHECK(lattice_intersect(lattice_intersect(a, b), c) ==
          lattice_intersect(a, lattice_intersect(b, c)));
  }
}

TEST_CASE("lattice canonical form: equal sets iff identical bases") {
  Rng rng(31);
  for (int it = 0; it < 20; ++it) {
    IntMat a = random_mat(rng, 3, 4, -5, 5);
    // same lattice from shuffled generators plus a combination
    IntMat b(4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
      b.at(0, j) = a.at(2, j);
      b.at(1, j) = a.at(0, j);
      b.at(2, j) = a.at(1, j);
      b.at(3, j) = a.at(0, j) + 3 * a.at(1, j) - 2 * a.at(2, j);
    }
    CHECK(IntegerLattice::from_rows(4, a) == IntegerLattice::from_rows(4, b));
  }
}

TEST_CASE("solve_integer basic") {
  IntMat a = mat({{2, 0}, {0, 3}});
  auto r = solve_integer(a, vec({4, 9}));
  REQUIRE(r.particular.has_value());
  CHECK((*r.particular)[0] == 2);
  CHECK((*r.particular)[1] == 3);
  auto none = solve_integer(a, vec({1, 0}));
  CHECK(!none.particular.has_value());
}

TEST_CASE("solve_linear_mod trivial full space") {
  auto r = solve_linear_mod(IntMat::zero(1, 2), vec({0}), 5);
  REQUIRE(r.particular.has_value());
  CHECK(r.homogeneous == IntegerLattice::full(2));
}

TEST_CASE("solve_linear_mod random mod 3: soundness and completeness") {
  Rng rng(5);
  for (int it = 0; it < 25; ++it) {
    IntMat a = random_mat(rng, 2, 3, -4, 4);
    std::vector<Int> x0 = vec({rng.uniform(0, 2), rng.uniform(0, 2), rng.uniform(0, 2)});
    std::vector<Int> b = a.apply(x0);
    auto r = solve_linear_mod(a, b, 3);
    REQUIRE(r.particular.has_value());
    // soundness of the particular solution and of the homogeneous basis
    auto check_sol = [&](const std::vector<Int>& y) {
      auto ay = a.apply(y);
      for (std::size_t i = 0; i < ay.size(); ++i) CHECK(mod_pos(ay[i] - b[i], 3) == 0);
    };
    check_sol(*r.particular);
    for (std::size_t i = 0; i < r.homogeneous.rank(); ++i) {
      auto h = r.homogeneous.basis().row(i);
      auto ah = a.apply(h);
      for (const Int& w : ah) CHECK(mod_pos(w, 3) == 0);
    }
    // completeness over (Z/3)^3
    for (long x = 0; x < 3; ++x)
      for (long y = 0; y < 3; ++y)
        for (long z = 0; z < 3; ++z) {
          std::vector<Int> v = vec({x, y, z});
          auto av = a.apply(v);
          bool sol = true;
          for (std::size_t i = 0; i < av.size(); ++i)
            if (mod_pos(av[i] - b[i], 3) != 0) sol = false;
          if (sol) {
            std::vector<Int> diff(3);
            for (int j = 0; j < 3; ++j) diff[j] = v[j] - (*r.particular)[j];
            CHECK(r.homogeneous.contains(diff));
          }
        }
  }
}

TEST_CASE("hnf and snf on empty-ish shapes") {
  auto r = hnf(IntMat::zero(0, 3));
  CHECK(r.h.rows() == 0);
  auto s = snf(IntMat::zero(2, 0));
  CHECK(s.rank == 0);
}
