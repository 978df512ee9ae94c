#include "zalg/oracle.hpp"

#include <map>
#include <set>

namespace zalg {

FiniteRingTable FiniteRingTable::enumerate_ring(const ExplicitAlgebra& R) {
  FiniteRingTable t;
  t.alg_ = &R;
  if (R.module_structure().rank != 0)
    throw InfiniteRing("additive group has positive rank");
  std::size_t d = R.dim();
  std::vector<Int> bounds(d);
  const IntMat& syz = R.syzygy();
  if (syz.rows() != d) throw InfiniteRing("syzygy matrix is not full rank");
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t p = 0;
    while (p < d && syz.at(i, p) == 0) ++p;
    if (p != i) throw InternalError("enumerate_ring: unexpected pivot structure");
    bounds[i] = syz.at(i, i);
  }
  Int card = 1;
  for (auto& b : bounds) card *= b;
  if (card > 1000000) throw TooLarge("ring has more than 10^6 elements");
  t.card_ = card;
  std::vector<Int> cur(d, 0);
  while (true) {
    t.elements_.push_back(AlgebraElement{cur});
    bool wrapped = true;
    std::size_t p = d;
    while (p > 0) {
      --p;
      cur[p] += 1;
      if (cur[p] < bounds[p]) {
        wrapped = false;
        break;
      }
      cur[p] = 0;
    }
    if (wrapped) break;
  }
  // unit test by power cycles: a is a unit iff some power equals 1
  for (auto& a : t.elements_) {
    std::set<std::vector<Int>> seen;
    AlgebraElement cur_pow = a;
    bool unit = false;
    while (seen.insert(cur_pow.c).second) {
      if (R.is_one(cur_pow)) {
        unit = true;
        break;
      }
      cur_pow = R.mul(cur_pow, a);
    }
    if (unit) t.units_.push_back(a);
  }
  return t;
}

bool FiniteRingTable::is_unit(const AlgebraElement& a) const {
  for (auto& u : units_)
    if (u == a) return true;
  return false;
}

namespace {

Int element_order(const ExplicitAlgebra& R, const AlgebraElement& u, const Int& cap) {
  AlgebraElement cur = u;
  Int ord = 1;
  while (!R.is_one(cur)) {
    cur = R.mul(cur, u);
    ++ord;
    if (ord > cap) throw TooLarge("element order exceeds the oracle cap");
  }
  return ord;
}

}  // namespace

BruteUnitGroup brute_unit_group(const FiniteRingTable& t) {
  const ExplicitAlgebra& R = t.algebra();
  BruteUnitGroup out;
  std::set<std::vector<Int>> subgroup;
  subgroup.insert(R.one().c);
  for (auto& u : t.units()) {
    if (subgroup.count(u.c)) continue;
    out.generators.push_back(u);
    // closure under the new generator
    std::vector<AlgebraElement> base;
    for (auto& c : subgroup) base.push_back(AlgebraElement{c});
    Int ord = element_order(R, u, t.cardinality());
    for (auto& b : base) {
      AlgebraElement cur = b;
      for (Int j = 1; j < ord; ++j) {
        cur = R.mul(cur, u);
        subgroup.insert(cur.c);
      }
    }
  }
  out.order = Int(static_cast<long>(subgroup.size()));
  if (out.order != Int(static_cast<long>(t.units().size())))
    throw InternalError("brute_unit_group: closure missed some units");
  if (!out.generators.empty()) {
    IntegerLattice rel = brute_explattice(t, out.generators);
    SmithDecomposition s = snf(rel.basis());
    for (auto& f : s.invariant_factors)
      if (f > 1) out.invariant_factors.push_back(f);
    out.rank = out.generators.size() - s.rank;  // zero on a finite ring
  }
  return out;
}

IntegerLattice brute_explattice(const FiniteRingTable& t,
                                const std::vector<AlgebraElement>& units) {
  const ExplicitAlgebra& R = t.algebra();
  std::size_t k = units.size();
  for (auto& u : units) {
    if (!t.is_unit(u)) throw NonUnitElement("brute_explattice: tuple entry is not a unit");
    element_order(R, u, Int(10000));
  }
  // BFS over the generated subgroup, recording one exponent vector per element
  std::map<std::vector<Int>, std::vector<Int>> expvec;
  std::vector<std::vector<Int>> relations;
  std::vector<AlgebraElement> frontier = {R.one()};
  expvec[R.one().c] = std::vector<Int>(k, 0);
  while (!frontier.empty()) {
    std::vector<AlgebraElement> next;
    for (auto& e : frontier) {
      std::vector<Int> ve = expvec[e.c];
      for (std::size_t i = 0; i < k; ++i) {
        AlgebraElement w = R.mul(e, units[i]);
        std::vector<Int> vw = ve;
        vw[i] += 1;
        auto it = expvec.find(w.c);
        if (it == expvec.end()) {
          expvec[w.c] = vw;
          next.push_back(w);
        } else {
          std::vector<Int> rel(k);
          for (std::size_t j = 0; j < k; ++j) rel[j] = vw[j] - it->second[j];
          relations.push_back(std::move(rel));
        }
      }
    }
    frontier = std::move(next);
  }
  return IntegerLattice::from_vectors(k, relations);
}

}  // namespace zalg
