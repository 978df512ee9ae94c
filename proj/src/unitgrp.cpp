#include "zalg/unitgrp.hpp"

#include <algorithm>
#include <set>

namespace zalg {

namespace {

// subspace e*A of a zero-dimensional Q-algebra, with component-local powers
struct IdempotentComponent {
  std::vector<Rat> idem;
  KEchelon span;  // basis of e*A
};

IdempotentComponent make_component(const FieldAlgebra& A, const std::vector<Rat>& idem) {
  std::vector<std::vector<Rat>> rows;
  for (std::size_t t = 0; t < A.dim(); ++t) {
    std::vector<Rat> e(A.dim(), Rat(0));
    e[t] = 1;
    rows.push_back(A.mul(idem, e));
  }
  return {idem, k_echelon(A.field(), rows)};
}

// inverse of x inside e*A (x = e*x assumed); the identity of the component is e
std::vector<Rat> component_inverse(const FieldAlgebra& A, const IdempotentComponent& C,
                                   const std::vector<Rat>& x) {
  std::size_t d = A.dim();
  const auto& w = C.span.rows;
  std::vector<std::vector<Rat>> sys(d, std::vector<Rat>(w.size(), Rat(0)));
  for (std::size_t c = 0; c < w.size(); ++c) {
    std::vector<Rat> xc = A.mul(x, w[c]);
    for (std::size_t r = 0; r < d; ++r) sys[r][c] = xc[r];
  }
  auto sol = k_solve(A.field(), sys, C.idem);
  if (!sol) throw InternalError("component_inverse: element not invertible in the component");
  std::vector<Rat> out(d, Rat(0));
  for (std::size_t c = 0; c < w.size(); ++c)
    for (std::size_t r = 0; r < d; ++r) out[r] += (*sol)[c] * w[c][r];
  return out;
}

std::vector<Rat> component_pow(const FieldAlgebra& A, const IdempotentComponent& C,
                               const std::vector<Rat>& x, const Int& e) {
  std::vector<Rat> base = e < 0 ? component_inverse(A, C, x) : x;
  Int k = e < 0 ? Int(-e) : e;
  std::vector<Rat> r = C.idem;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = A.mul(r, base);
    base = A.mul(base, base);
    k >>= 1;
  }
  return r;
}

// rational A-coordinates -> canonical integer element of the Z-side quotient
AlgebraElement rational_to_integral(const ExplicitAlgebra& R, const FieldAlgebra& A,
                                    const std::vector<Rat>& coords) {
  Polynomial w = A.from_coords(coords);
  Int den = 1;
  for (auto& [t, c] : w.terms()) den = lcm_int(den, c.get_den());
  AlgebraElement scaled = R.from_poly(w.scaled(Rat(den)).map_domain(Domain::ZZ()));
  std::vector<Int> out(R.dim());
  for (std::size_t i = 0; i < R.dim(); ++i) {
    if (scaled.c[i] % den != 0)
      throw InternalError("gluing produced a non-integral element");
    out[i] = scaled.c[i] / den;
  }
  return R.from_coords(std::move(out));
}

std::vector<Polynomial> order_unit_polys(const NumberFieldOrder& O, const UnitGroupData& data) {
  std::vector<Polynomial> out;
  out.push_back(O.alg.to_poly(data.torsion.zeta));
  for (auto& u : data.fundamental_units) out.push_back(O.alg.to_poly(u));
  return out;
}

}  // namespace

std::vector<Polynomial> units_order(const Ideal& J, std::uint64_t seed, bool* bounded_search_used,
                                    bool* heuristic) {
  Ideal J_Q = J.map_domain(Domain::QQ());
  FieldAlgebra A = FieldAlgebra::build(J_Q);
  std::vector<ZeroDimComponent> comps = zerodim_decompose(J_Q, seed);
  if (comps.empty()) throw InternalError("units_order: the order is the zero ring");

  // contracted primes aligned with the primitive idempotents
  std::vector<Ideal> primes;
  for (auto& comp : comps) {
    std::vector<Polynomial> gens;
    for (auto& g : comp.maximal_ideal.gens) {
      if (g.is_zero()) continue;
      Int den = 1;
      for (auto& [t, c] : g.terms()) den = lcm_int(den, c.get_den());
      gens.push_back(g.scaled(Rat(den)).map_domain(Domain::ZZ()).content_primitive().second);
    }
    Ideal p0 = Ideal::make(Domain::ZZ(), J.nvars, gens, J.ord);
    primes.push_back(contract_from_Q(p0, strong_groebner(p0)));
  }
  std::vector<std::vector<Rat>> q;
  for (auto& comp : comps) q.push_back(A.coords(comp.idempotent));

  auto order_data = [&](std::size_t i) {
    NumberFieldOrder O = primitive_element(primes[i], seed);
    UnitGroupData data = order_units(O, seed);
    if (data.provenance == UnitProvenance::BoundedSearch && bounded_search_used)
      *bounded_search_used = true;
    return std::make_pair(std::move(O), std::move(data));
  };

  auto [O1, D1] = order_data(0);
  std::vector<Polynomial> U = order_unit_polys(O1, D1);
  Ideal C = primes[0];

  for (std::size_t j = 1; j < comps.size(); ++j) {
    Ideal glue = ideal_sum(C, primes[j]);
    ExplicitAlgebra Rg = ExplicitAlgebra::from_presentation(glue);
    auto [Oj, Dj] = order_data(j);
    std::vector<Polynomial> H = order_unit_polys(Oj, Dj);
    std::size_t k = U.size(), l = H.size();
    std::vector<AlgebraElement> tuple;
    for (auto& g : U) tuple.push_back(Rg.from_poly(g));
    for (auto& h : H) {
      auto inv = Rg.element_inverse(Rg.from_poly(h));
      if (!inv) throw InternalError("units_order: unit image fails to invert in the glue ring");
      tuple.push_back(*inv);
    }
    ExpLatticeResult B = explattice(Rg, tuple, seed);
    if (heuristic && B.heuristic_nf_search) *heuristic = true;

    Ideal C_next = ideal_intersect(C, primes[j]);
    ExplicitAlgebra Rn = ExplicitAlgebra::from_presentation(C_next);
    // f = q_1 + ... + q_{j-1}
    std::vector<Rat> f(A.dim(), Rat(0));
    for (std::size_t i = 0; i < j; ++i)
      for (std::size_t r = 0; r < A.dim(); ++r) f[r] += q[i][r];
    IdempotentComponent Cf = make_component(A, f);
    IdempotentComponent Cj = make_component(A, q[j]);
    std::vector<std::vector<Rat>> gA, hA;
    for (auto& g : U) gA.push_back(A.mul(f, A.coords(g.map_domain(Domain::QQ()))));
    for (auto& h : H) hA.push_back(A.mul(q[j], A.coords(h.map_domain(Domain::QQ()))));

    std::vector<Polynomial> newU;
    std::set<std::vector<Int>> seen;
    for (std::size_t r = 0; r < B.lattice.rank(); ++r) {
      // exactness of the gluing relation in the finite quotient
      AlgebraElement lhs = Rg.one(), rhs = Rg.one();
      for (std::size_t i = 0; i < k; ++i)
        lhs = Rg.mul(lhs, Rg.pow(Rg.from_poly(U[i]), B.lattice.basis().at(r, i)));
      for (std::size_t i = 0; i < l; ++i)
        rhs = Rg.mul(rhs, Rg.pow(Rg.from_poly(H[i]), B.lattice.basis().at(r, k + i)));
      if (!(lhs == rhs)) throw InternalError("units_order: gluing equality check failed");

      std::vector<Rat> left = Cf.idem;
      for (std::size_t i = 0; i < k; ++i)
        left = A.mul(left, component_pow(A, Cf, gA[i], B.lattice.basis().at(r, i)));
      std::vector<Rat> right = Cj.idem;
      for (std::size_t i = 0; i < l; ++i)
        right = A.mul(right, component_pow(A, Cj, hA[i], B.lattice.basis().at(r, k + i)));
      std::vector<Rat> w(A.dim());
      for (std::size_t c = 0; c < A.dim(); ++c) w[c] = left[c] + right[c];
      AlgebraElement u = rational_to_integral(Rn, A, w);
      if (!Rn.element_inverse(u))
        throw InternalError("units_order: glued element is not a unit");
      if (Rn.is_one(u)) continue;  // redundant identity generator
      if (seen.insert(u.c).second) newU.push_back(Rn.to_poly(u));
    }
    U = std::move(newU);
    C = std::move(C_next);
  }
  return U;
}

std::vector<Polynomial> units_torsion_free_reduced(const ExplicitAlgebra& R, std::uint64_t seed,
                                                   bool* bounded_search_used, bool* heuristic) {
  if (!R.module_structure().invariant_factors.empty())
    throw HasTorsion("algebra has additive torsion");
  Nilradical rad = nilradical(R, seed);
  if (!ideal_equal(rad.ideal, R.presentation())) throw NotReduced("algebra has nilpotents");
  return units_order(R.presentation(), seed, bounded_search_used, heuristic);
}

std::vector<Polynomial> units_reduced(const ExplicitAlgebra& R, std::uint64_t seed,
                                      bool* bounded_search_used, bool* heuristic) {
  Nilradical rad = nilradical(R, seed);
  if (!ideal_equal(rad.ideal, R.presentation())) throw NotReduced("algebra has nilpotents");
  std::vector<PrimeComponent> primes = minimal_primes(R, seed);
  std::vector<PrimeComponent> maximal, char0;
  for (auto& pc : primes)
    (pc.characteristic == 0 ? char0 : maximal).push_back(pc);
  if (maximal.empty())
    return units_torsion_free_reduced(R, seed, bounded_search_used, heuristic);

  std::vector<Ideal> crt_ideals;
  for (auto& m : maximal) crt_ideals.push_back(m.prime_ideal);
  std::optional<Ideal> J;
  if (!char0.empty()) {
    J = char0[0].prime_ideal;
    for (std::size_t i = 1; i < char0.size(); ++i) J = ideal_intersect(*J, char0[i].prime_ideal);
    crt_ideals.push_back(*J);
  }
  std::vector<AlgebraElement> es = crt_orthogonal_idempotents(R, crt_ideals);

  std::vector<Polynomial> G;
  if (J) {
    std::vector<Polynomial> H = units_order(*J, seed, bounded_search_used, heuristic);
    const AlgebraElement& eJ = es.back();
    AlgebraElement rest = R.sub(R.one(), eJ);
    for (auto& h : H) {
      AlgebraElement u = R.add(R.mul(eJ, R.from_poly(h)), rest);
      G.push_back(R.to_poly(u));
    }
  }
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    const FiniteFieldRep& F = *maximal[i].finite_field;
    uni::PPoly gen = finite_field_unit_gen(F, seed);
    // evaluate the generator at a preimage of theta
    Polynomial theta_z = lift_to_Z(F.theta_poly);
    Polynomial gpoly = Polynomial::zero(Domain::ZZ(), R.nvars());
    for (std::size_t t = gen.c.size(); t-- > 0;)
      gpoly = gpoly * theta_z + Polynomial::constant(Domain::ZZ(), R.nvars(), Rat(gen.c[t]));
    AlgebraElement u =
        R.add(R.mul(es[i], R.from_poly(gpoly)), R.sub(R.one(), es[i]));
    if (!R.element_inverse(u))
      throw InternalError("units_reduced: glued finite-field generator is not a unit");
    G.push_back(R.to_poly(u));
  }
  return G;
}

std::vector<Polynomial> one_plus_radical_gens(const ExplicitAlgebra& R, std::uint64_t seed) {
  Nilradical rad = nilradical(R, seed);
  if (ideal_equal(rad.ideal, R.presentation())) return {};
  std::vector<Polynomial> out;
  std::set<std::vector<Int>> seen;
  for (auto& t : R.macaulay())
    for (auto& f : rad.ideal.gens) {
      if (f.is_zero()) continue;
      Polynomial tf = Polynomial::monomial(Domain::ZZ(), R.nvars(), t, 1) * f;
      AlgebraElement u = R.add(R.one(), R.from_poly(tf));
      if (R.is_one(u)) continue;
      if (seen.insert(u.c).second) out.push_back(R.to_poly(u));
    }
  return out;
}

namespace {

std::pair<std::size_t, std::vector<Int>> structure_from_lattice(std::size_t k,
                                                                const IntegerLattice& lat) {
  if (lat.rank() == 0) return {k, {}};
  SmithDecomposition s = snf(lat.basis());
  std::vector<Int> factors;
  for (auto& f : s.invariant_factors)
    if (f > 1) factors.push_back(f);
  return {k - s.rank, factors};
}

}  // namespace

UnitGroupDescription units(const ExplicitAlgebra& R, std::uint64_t seed) {
  UnitGroupDescription out;
  Nilradical rad = nilradical(R, seed);
  std::vector<Polynomial> gens;
  {
    ExplicitAlgebra R_red = ExplicitAlgebra::from_presentation(rad.ideal);
    gens = units_reduced(R_red, seed, &out.bounded_search_used, &out.heuristic_lattice);
  }
  for (auto& g : one_plus_radical_gens(R, seed)) gens.push_back(g);

  // canonical representatives in R, dropping exact duplicates
  std::vector<Polynomial> reps;
  std::set<std::vector<Int>> seen;
  for (auto& g : gens) {
    AlgebraElement e = R.from_poly(g);
    if (!R.element_inverse(e)) throw InternalError("units: generator is not a unit upstairs");
    if (seen.insert(e.c).second) reps.push_back(R.to_poly(e));
  }

  // relation lattice, then prune generators that reduce to the identity
  while (true) {
    std::vector<AlgebraElement> tuple;
    for (auto& g : reps) tuple.push_back(R.from_poly(g));
    ExpLatticeResult rel = explattice(R, tuple, seed);
    out.heuristic_lattice = out.heuristic_lattice || rel.heuristic_nf_search;
    std::size_t drop = reps.size();
    for (std::size_t r = 0; r < rel.lattice.rank() && drop == reps.size(); ++r) {
      // a basis row equal to a standard vector marks a trivial generator
      std::size_t nz = 0, at = 0;
      for (std::size_t i = 0; i < reps.size(); ++i)
        if (rel.lattice.basis().at(r, i) != 0) {
          ++nz;
          at = i;
        }
      if (nz == 1 && rel.lattice.basis().at(r, at) == 1) drop = at;
    }
    if (drop == reps.size() || reps.size() == 1) {
      out.relation_lattice = rel.lattice;
      break;
    }
    reps.erase(reps.begin() + drop);
  }
  out.generators = reps;
  auto [rank, factors] = structure_from_lattice(reps.size(), out.relation_lattice);
  out.rank = rank;
  out.invariant_factors = factors;
  return out;
}

std::pair<std::size_t, std::vector<Int>> unit_group_structure(
    const ExplicitAlgebra& R, const std::vector<Polynomial>& generators, std::uint64_t seed,
    IntegerLattice* relation_lattice, bool* heuristic) {
  std::vector<AlgebraElement> tuple;
  for (auto& g : generators) tuple.push_back(R.from_poly(g));
  ExpLatticeResult rel = explattice(R, tuple, seed);
  if (relation_lattice) *relation_lattice = rel.lattice;
  if (heuristic) *heuristic = rel.heuristic_nf_search;
  return structure_from_lattice(generators.size(), rel.lattice);
}

bool in_generated_subgroup(const ExplicitAlgebra& R, const Polynomial& g,
                           const std::vector<Polynomial>& gens, std::uint64_t seed) {
  std::vector<AlgebraElement> tuple;
  tuple.push_back(R.from_poly(g));  // tested element first
  for (auto& h : gens) tuple.push_back(R.from_poly(h));
  ExpLatticeResult rel = explattice(R, tuple, seed);
  // membership iff some lattice vector has first coordinate 1, i.e. the HNF
  // pivot in the first column is 1
  if (rel.lattice.rank() == 0) return false;
  return rel.lattice.basis().at(0, 0) == 1;
}

}  // namespace zalg
