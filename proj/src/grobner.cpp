#include "zalg/grobner.hpp"

#include <algorithm>
#include <optional>

namespace zalg {

namespace {

Rat field_div(const Domain& dom, const Rat& a, const Rat& b) {
  if (dom.kind == Domain::Kind::Q) return a / b;
  auto inv = invmod(b.get_num(), dom.p);
  if (!inv) throw InternalError("field_div: non-invertible element mod p");
  return Rat(mod_pos(a.get_num() * *inv, dom.p));
}

struct Reducer {
  const Domain& dom;
  const TermOrdering& ord;
  const std::vector<Polynomial>& basis;
  std::vector<std::pair<Term, Rat>> leads;  // cached leading monomials

  explicit Reducer(const Domain& d, const TermOrdering& o, const std::vector<Polynomial>& b)
      : dom(d), ord(o), basis(b) {
    leads.reserve(b.size());
    for (auto& g : b) leads.push_back(g.leading(o));
  }

  // Strong reduction of f: full steps over fields; over Z coefficient residues
  // are canonicalized into [0, d) with d the gcd of the applicable leading
  // coefficients.
  Polynomial reduce(const Polynomial& f) const {
    Polynomial work = f;
    Polynomial rem = Polynomial::zero(f.domain(), f.nvars());
    while (!work.is_zero()) {
      check_deadline();
      auto [t, c] = work.leading(ord);
      std::vector<std::size_t> div;
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (leads[i].first.divides(t)) div.push_back(i);
      if (div.empty()) {
        Polynomial mono = Polynomial::monomial(f.domain(), f.nvars(), t, c);
        rem = rem + mono;
        work = work - mono;
        continue;
      }
      if (dom.is_field()) {
        std::size_t i = div[0];
        Rat q = field_div(dom, c, leads[i].second);
        work = work - basis[i].mul_term(t.div(leads[i].first), q);
        continue;
      }
      // domain Z: gcd of the applicable leading coefficients with cofactors
      Int d = leads[div[0]].second.get_num();
      std::vector<Int> cof(div.size(), 0);
      cof[0] = 1;
      for (std::size_t k = 1; k < div.size(); ++k) {
        XGcd e = xgcd(d, leads[div[k]].second.get_num());
        for (std::size_t j = 0; j < k; ++j) cof[j] *= e.s;
        cof[k] = e.t;
        d = e.g;
      }
      Int cnum = c.get_num();
      Int r = mod_pos(cnum, d);
      Int q = (cnum - r) / d;
      if (q != 0) {
        for (std::size_t k = 0; k < div.size(); ++k) {
          if (cof[k] == 0) continue;
          std::size_t i = div[k];
          work = work - basis[i].mul_term(t.div(leads[i].first), Rat(q * cof[k]));
        }
      }
      if (r != 0) {
        Polynomial mono = Polynomial::monomial(f.domain(), f.nvars(), t, Rat(r));
        rem = rem + mono;
        work = work - mono;
      }
    }
    return rem;
  }
};

Polynomial normalize_sign(const Domain& dom, const TermOrdering& ord, const Polynomial& f) {
  if (f.is_zero()) return f;
  auto [t, c] = f.leading(ord);
  if (dom.is_field()) {
    if (c == 1) return f;
    return f.scaled(field_div(dom, Rat(1), c));
  }
  if (c < 0) return -f;
  return f;
}

Polynomial spoly(const Domain& dom, const TermOrdering& ord, const Polynomial& f,
                 const std::pair<Term, Rat>& lf, const Polynomial& g,
                 const std::pair<Term, Rat>& lg) {
  Term t = Term::lcm(lf.first, lg.first);
  if (dom.is_field()) {
    Polynomial a = f.mul_term(t.div(lf.first), field_div(dom, Rat(1), lf.second));
    Polynomial b = g.mul_term(t.div(lg.first), field_div(dom, Rat(1), lg.second));
    return a - b;
  }
  Int c = lcm_int(lf.second.get_num(), lg.second.get_num());
  Polynomial a = f.mul_term(t.div(lf.first), Rat(c / lf.second.get_num()));
  Polynomial b = g.mul_term(t.div(lg.first), Rat(c / lg.second.get_num()));
  return a - b;
}

Polynomial gcdpoly(const TermOrdering& ord, const Polynomial& f, const std::pair<Term, Rat>& lf,
                   const Polynomial& g, const std::pair<Term, Rat>& lg) {
  Term t = Term::lcm(lf.first, lg.first);
  XGcd e = xgcd(lf.second.get_num(), lg.second.get_num());
  Polynomial a = f.mul_term(t.div(lf.first), Rat(e.s));
  Polynomial b = g.mul_term(t.div(lg.first), Rat(e.t));
  return a + b;
}

}  // namespace

bool StrongGroebnerBasis::contains(const Polynomial& f) const {
  return normal_form(f, *this).is_zero();
}

bool StrongGroebnerBasis::is_unit_ideal() const {
  for (auto& g : elements)
    if (g.is_constant() && !g.is_zero() &&
        (dom.is_field() ? true : (g.constant_value() == 1 || g.constant_value() == -1)))
      return true;
  return false;
}

StrongGroebnerBasis strong_groebner(const Ideal& I) {
  const Domain& dom = I.dom;
  const TermOrdering& ord = I.ord;
  std::vector<Polynomial> basis;
  for (auto& g : I.gens)
    if (!g.is_zero()) basis.push_back(normalize_sign(dom, ord, g));

  struct PairEntry {
    std::size_t i, j;
    bool gcd_pair;
    Term lcm_t;
  };
  std::vector<PairEntry> queue;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      auto li = basis[i].leading(ord);
      auto lj = basis[j].leading(ord);
      Term t = Term::lcm(li.first, lj.first);
      bool coprime_mono = Term::gcd(li.first, lj.first).is_one();
      if (dom.is_field()) {
        if (!coprime_mono) queue.push_back({i, j, false, t});
        continue;
      }
      queue.push_back({i, j, false, t});
      const Int& a = li.second.get_num();
      const Int& b = lj.second.get_num();
      if (!divides(a, b) && !divides(b, a)) queue.push_back({i, j, true, t});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  auto pop_best = [&]() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < queue.size(); ++k)
      if (ord.less(queue[k].lcm_t, queue[best].lcm_t)) best = k;
    PairEntry e = queue[best];
    queue.erase(queue.begin() + best);
    return e;
  };

  while (!queue.empty()) {
    check_deadline();
    PairEntry e = pop_best();
    auto li = basis[e.i].leading(ord);
    auto lj = basis[e.j].leading(ord);
    Polynomial h = e.gcd_pair ? gcdpoly(ord, basis[e.i], li, basis[e.j], lj)
                              : spoly(dom, ord, basis[e.i], li, basis[e.j], lj);
    Reducer red(dom, ord, basis);
    Polynomial nf = red.reduce(h);
    if (!nf.is_zero()) {
      basis.push_back(normalize_sign(dom, ord, nf));
      push_pairs(basis.size() - 1);
    }
  }

  // interreduction: drop head-reducible elements, then canonicalize tails
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      if (others.empty()) break;
      Reducer red(dom, ord, others);
      Polynomial h = red.reduce(basis[i]);
      Polynomial hn = normalize_sign(dom, ord, h);
      if (h.is_zero()) {
        basis.erase(basis.begin() + i);
        changed = true;
        break;
      }
      if (!(hn == basis[i])) {
        basis[i] = hn;
        changed = true;
        break;
      }
    }
  }

  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading(ord).first, b.leading(ord).first);
  });

  StrongGroebnerBasis G;
  G.dom = dom;
  G.nvars = I.nvars;
  G.ord = ord;
  G.elements = std::move(basis);
  G.is_reduced = true;
  return G;
}

Polynomial normal_form(const Polynomial& f, const StrongGroebnerBasis& G) {
  if (f.domain() != G.dom || f.nvars() != G.nvars)
    throw InternalError("normal_form: domain or arity mismatch");
  if (G.elements.empty()) return f;
  Reducer red(G.dom, G.ord, G.elements);
  return red.reduce(f);
}

Int ideal_meet_Z(const StrongGroebnerBasis& G) {
  if (G.dom.kind != Domain::Kind::Z) throw InternalError("ideal_meet_Z: domain must be Z");
  for (auto& g : G.elements)
    if (!g.is_zero() && g.is_constant()) {
      Int v = g.constant_value().get_num();
      return v < 0 ? -v : v;
    }
  return 0;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (a.dom != b.dom || a.nvars != b.nvars) throw InternalError("ideal_sum: mismatch");
  std::vector<Polynomial> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return Ideal::make(a.dom, a.nvars, std::move(gens), a.ord);
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  if (a.dom != b.dom || a.nvars != b.nvars) throw InternalError("ideal_intersect: mismatch");
  int n = a.nvars;
  // classic t-trick: <t*a, (1-t)*b> cap K[x]
  Polynomial t = Polynomial::variable(a.dom, n + 1, 0);
  Polynomial one = Polynomial::constant(a.dom, n + 1, 1);
  std::vector<Polynomial> gens;
  for (auto& f : a.gens)
    if (!f.is_zero()) gens.push_back(t * f.shift_vars(1));
  for (auto& g : b.gens)
    if (!g.is_zero()) gens.push_back((one - t) * g.shift_vars(1));
  if (gens.empty()) return Ideal::make(a.dom, n, {}, a.ord);
  Ideal lifted = Ideal::make(a.dom, n + 1, std::move(gens), TermOrdering::elim(n + 1, 1));
  StrongGroebnerBasis G = strong_groebner(lifted);
  std::vector<Polynomial> out;
  for (auto& g : G.elements)
    if (!g.uses_front_vars(1)) out.push_back(g.drop_front_vars(1));
  return Ideal::make(a.dom, n, std::move(out), a.ord);
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (a.dom != b.dom || a.nvars != b.nvars) throw InternalError("ideal_product: mismatch");
  std::vector<Polynomial> gens;
  for (auto& f : a.gens)
    for (auto& g : b.gens)
      if (!f.is_zero() && !g.is_zero()) gens.push_back(f * g);
  return Ideal::make(a.dom, a.nvars, std::move(gens), a.ord);
}

Ideal ideal_ops(const Ideal& a, const Ideal& b, IdealOpKind kind) {
  return kind == IdealOpKind::Sum ? ideal_sum(a, b) : ideal_intersect(a, b);
}

Ideal colon_integer(const Ideal& I, const Int& N) {
  if (N <= 0) throw InternalError("colon_integer: N must be positive");
  if (N == 1) return I;
  Ideal principal =
      Ideal::make(I.dom, I.nvars, {Polynomial::constant(I.dom, I.nvars, Rat(N))}, I.ord);
  Ideal inter = ideal_intersect(I, principal);
  std::vector<Polynomial> out;
  for (auto& g : inter.gens) {
    if (g.is_zero()) continue;
    out.push_back(g.scaled(Rat(1, N)).map_domain(I.dom));
  }
  return Ideal::make(I.dom, I.nvars, std::move(out), I.ord);
}

ColonSat colon_and_saturate(const Ideal& I, const Int& N, bool verify_split) {
  if (N < 1) throw InternalError("colon_and_saturate: N must be >= 1");
  ColonSat r{I, 0};
  if (N == 1) return r;
  Ideal prev = I;
  int m = 0;
  while (true) {
    check_deadline();
    Ideal next = colon_integer(prev, N);
    if (ideal_equal(next, prev)) break;
    prev = next;
    ++m;
  }
  r.colon = prev;
  r.stable_exponent = m;
  if (verify_split) {
    // Rad-splitting identity: I = (I : N^m) cap <I, N^m>
    Int nm = 1;
    for (int i = 0; i < std::max(m, 1); ++i) nm *= N;
    Ideal with_nm = ideal_sum(
        I, Ideal::make(I.dom, I.nvars, {Polynomial::constant(I.dom, I.nvars, Rat(nm))}, I.ord));
    Ideal inter = ideal_intersect(r.colon, with_nm);
    if (!ideal_equal(inter, I)) throw InternalError("colon_and_saturate: splitting identity failed");
  }
  return r;
}

Ideal contract_from_Q(const Ideal& I, const StrongGroebnerBasis& G) {
  if (ideal_meet_Z(G) != 0)
    throw InternalError("contract_from_Q: requires I cap Z = <0>");
  Int N = 1;
  for (auto& g : G.elements) N = lcm_int(N, g.leading(G.ord).second.get_num());
  if (N < 0) N = -N;
  return colon_integer(I, N);
}

bool ideal_contains(const StrongGroebnerBasis& G, const Polynomial& f) {
  return normal_form(f, G).is_zero();
}

bool ideal_contains(const StrongGroebnerBasis& G, const Ideal& sub) {
  for (auto& g : sub.gens)
    if (!normal_form(g, G).is_zero()) return false;
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  StrongGroebnerBasis ga = strong_groebner(a);
  StrongGroebnerBasis gb = strong_groebner(b);
  return ideal_contains(ga, b) && ideal_contains(gb, a);
}

}  // namespace zalg
