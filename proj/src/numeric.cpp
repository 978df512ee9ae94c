#include "zalg/numeric.hpp"

#include <mpfr.h>

#include <algorithm>

namespace zalg {

std::vector<std::complex<double>> complex_roots(const std::vector<Int>& poly) {
  int n = static_cast<int>(poly.size()) - 1;
  if (n < 1) return {};
  std::vector<std::complex<double>> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = poly[i].get_d();
  for (int i = 0; i <= n; ++i) c[i] /= poly[n].get_d();
  double radius = 1.0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, 2.0 * std::abs(c[i]));
  std::vector<std::complex<double>> z(n);
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> w = seed;
  for (int i = 0; i < n; ++i) {
    z[i] = w * radius;
    w *= seed;
  }
  auto eval = [&](std::complex<double> x) {
    std::complex<double> v = 0;
    for (int i = n; i >= 0; --i) v = v * x + c[i];
    return v;
  };
  for (int it = 0; it < 400; ++it) {
    double moved = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> denom = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      std::complex<double> step = eval(z[i]) / denom;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-14) break;
  }
  std::sort(z.begin(), z.end(), [](auto a, auto b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return z;
}

namespace {

struct Cplx {
  mpfr_t re, im;
  explicit Cplx(mpfr_prec_t p) {
    mpfr_init2(re, p);
    mpfr_init2(im, p);
    mpfr_set_ui(re, 0, MPFR_RNDN);
    mpfr_set_ui(im, 0, MPFR_RNDN);
  }
  Cplx(const Cplx&) = delete;
  Cplx& operator=(const Cplx&) = delete;
  ~Cplx() {
    mpfr_clear(re);
    mpfr_clear(im);
  }
};

void c_set(Cplx& d, const Cplx& a) {
  mpfr_set(d.re, a.re, MPFR_RNDN);
  mpfr_set(d.im, a.im, MPFR_RNDN);
}

void c_add(Cplx& d, const Cplx& a, const Cplx& b) {
  mpfr_add(d.re, a.re, b.re, MPFR_RNDN);
  mpfr_add(d.im, a.im, b.im, MPFR_RNDN);
}

void c_sub(Cplx& d, const Cplx& a, const Cplx& b) {
  mpfr_sub(d.re, a.re, b.re, MPFR_RNDN);
  mpfr_sub(d.im, a.im, b.im, MPFR_RNDN);
}

// d = a * b; d must alias neither input
void c_mul(Cplx& d, const Cplx& a, const Cplx& b, mpfr_t t1, mpfr_t t2) {
  mpfr_mul(t1, a.re, b.re, MPFR_RNDN);
  mpfr_mul(t2, a.im, b.im, MPFR_RNDN);
  mpfr_sub(d.re, t1, t2, MPFR_RNDN);
  mpfr_mul(t1, a.re, b.im, MPFR_RNDN);
  mpfr_mul(t2, a.im, b.re, MPFR_RNDN);
  mpfr_add(d.im, t1, t2, MPFR_RNDN);
}

// d = a / b
void c_div(Cplx& d, const Cplx& a, const Cplx& b, mpfr_t t1, mpfr_t t2, mpfr_t t3) {
  mpfr_mul(t1, b.re, b.re, MPFR_RNDN);
  mpfr_mul(t2, b.im, b.im, MPFR_RNDN);
  mpfr_add(t3, t1, t2, MPFR_RNDN);  // |b|^2
  mpfr_mul(t1, a.re, b.re, MPFR_RNDN);
  mpfr_mul(t2, a.im, b.im, MPFR_RNDN);
  mpfr_add(t1, t1, t2, MPFR_RNDN);
  mpfr_div(d.re, t1, t3, MPFR_RNDN);
  mpfr_mul(t1, a.im, b.re, MPFR_RNDN);
  mpfr_mul(t2, a.re, b.im, MPFR_RNDN);
  mpfr_sub(t1, t1, t2, MPFR_RNDN);
  mpfr_div(d.im, t1, t3, MPFR_RNDN);
}

}  // namespace

std::vector<LogEmbedRow> log_embeddings(const std::vector<Int>& minpoly,
                                        const std::vector<std::vector<Rat>>& elements,
                                        long bits, const Int& scale) {
  int n = static_cast<int>(minpoly.size()) - 1;
  if (n < 1) throw InternalError("log_embeddings: constant minimal polynomial");
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits);
  mpfr_t t1, t2, t3, mod2, pi;
  mpfr_inits2(prec, t1, t2, t3, mod2, pi, (mpfr_ptr) nullptr);
  mpfr_const_pi(pi, MPFR_RNDN);

  // Durand-Kerner at full precision, seeded from the double-precision roots
  std::vector<std::complex<double>> seeds = complex_roots(minpoly);
  std::vector<Cplx*> roots;
  for (int i = 0; i < n; ++i) {
    auto* z = new Cplx(prec);
    mpfr_set_d(z->re, seeds[i].real(), MPFR_RNDN);
    mpfr_set_d(z->im, seeds[i].imag(), MPFR_RNDN);
    roots.push_back(z);
  }
  std::vector<Cplx*> coeff;
  for (int i = 0; i <= n; ++i) {
    auto* c = new Cplx(prec);
    mpfr_set_z(c->re, minpoly[i].get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(c->re, c->re, minpoly[n].get_mpz_t(), MPFR_RNDN);
    coeff.push_back(c);
  }
  Cplx val(prec), denom(prec), step(prec), tmp(prec), tmp2(prec);
  auto eval_poly = [&](const Cplx& x, Cplx& out) {
    mpfr_set_ui(out.re, 0, MPFR_RNDN);
    mpfr_set_ui(out.im, 0, MPFR_RNDN);
    for (int i = n; i >= 0; --i) {
      c_mul(tmp, out, x, t1, t2);
      c_add(out, tmp, *coeff[i]);
    }
  };
  long iters = 60 + bits / 2;
  for (long it = 0; it < iters; ++it) {
    bool small = true;
    for (int i = 0; i < n; ++i) {
      eval_poly(*roots[i], val);
      mpfr_set_ui(denom.re, 1, MPFR_RNDN);
      mpfr_set_ui(denom.im, 0, MPFR_RNDN);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c_sub(tmp, *roots[i], *roots[j]);
        c_mul(tmp2, denom, tmp, t1, t2);
        c_set(denom, tmp2);
      }
      c_div(step, val, denom, t1, t2, t3);
      c_sub(tmp, *roots[i], step);
      c_set(*roots[i], tmp);
      mpfr_mul(t1, step.re, step.re, MPFR_RNDN);
      mpfr_mul(t2, step.im, step.im, MPFR_RNDN);
      mpfr_add(t1, t1, t2, MPFR_RNDN);
      if (mpfr_cmp_d(t1, 0) != 0) {
        mpfr_log2(t2, t1, MPFR_RNDN);
        if (mpfr_get_d(t2, MPFR_RNDN) > -static_cast<double>(bits)) small = false;
      }
    }
    if (small && it > 4) break;
  }
  // stable ordering by (re, im)
  std::sort(roots.begin(), roots.end(), [](const Cplx* a, const Cplx* b) {
    int c = mpfr_cmp(a->re, b->re);
    if (c != 0) return c < 0;
    return mpfr_cmp(a->im, b->im) < 0;
  });

  std::vector<LogEmbedRow> out;
  Cplx ev(prec), x(prec);
  mpfr_t cre, scaled;
  mpfr_inits2(prec, cre, scaled, (mpfr_ptr) nullptr);
  for (auto& el : elements) {
    LogEmbedRow row;
    for (int j = 0; j < n; ++j) {
      // Horner over the rational coefficients
      mpfr_set_ui(ev.re, 0, MPFR_RNDN);
      mpfr_set_ui(ev.im, 0, MPFR_RNDN);
      for (std::size_t i = el.size(); i-- > 0;) {
        c_mul(tmp, ev, *roots[j], t1, t2);
        mpfr_set_q(cre, el[i].get_mpq_t(), MPFR_RNDN);
        mpfr_add(ev.re, tmp.re, cre, MPFR_RNDN);
        mpfr_set(ev.im, tmp.im, MPFR_RNDN);
      }
      mpfr_mul(t1, ev.re, ev.re, MPFR_RNDN);
      mpfr_mul(t2, ev.im, ev.im, MPFR_RNDN);
      mpfr_add(mod2, t1, t2, MPFR_RNDN);
      if (mpfr_zero_p(mod2))
        throw InternalError("log_embeddings: element vanishes at an embedding");
      mpfr_log(t3, mod2, MPFR_RNDN);
      mpfr_div_ui(t3, t3, 2, MPFR_RNDN);
      mpfr_mul_z(scaled, t3, scale.get_mpz_t(), MPFR_RNDN);
      Int li;
      mpfr_get_z(li.get_mpz_t(), scaled, MPFR_RNDN);
      row.logabs.push_back(li);
      mpfr_atan2(t3, ev.im, ev.re, MPFR_RNDN);
      mpfr_div(t3, t3, pi, MPFR_RNDN);
      mpfr_div_ui(t3, t3, 2, MPFR_RNDN);
      mpfr_mul_z(scaled, t3, scale.get_mpz_t(), MPFR_RNDN);
      Int ai;
      mpfr_get_z(ai.get_mpz_t(), scaled, MPFR_RNDN);
      row.arg.push_back(ai);
    }
    out.push_back(std::move(row));
  }
  for (auto* r : roots) delete r;
  for (auto* c : coeff) delete c;
  mpfr_clears(t1, t2, t3, mod2, pi, cre, scaled, (mpfr_ptr) nullptr);
  mpfr_free_cache();
  return out;
}

namespace {

Int round_rat(const Rat& q) {
  // nearest integer, ties toward +infinity
  Int two_num = 2 * q.get_num() + q.get_den();
  return fdiv(two_num, 2 * q.get_den());
}

}  // namespace

IntMat lll_reduce(IntMat basis) {
  std::size_t n = basis.rows(), m = basis.cols();
  if (n <= 1) return basis;
  std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
  std::vector<Rat> bnorm(n, Rat(0));
  std::vector<std::vector<Rat>> star(n, std::vector<Rat>(m, Rat(0)));

  auto recompute = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < m; ++c) star[i][c] = Rat(basis.at(i, c));
      for (std::size_t j = 0; j < i; ++j) {
        Rat dot(0);
        for (std::size_t c = 0; c < m; ++c) dot += Rat(basis.at(i, c)) * star[j][c];
        if (bnorm[j] == 0) throw InternalError("lll_reduce: dependent rows");
        mu[i][j] = dot / bnorm[j];
        for (std::size_t c = 0; c < m; ++c) star[i][c] -= mu[i][j] * star[j][c];
      }
      bnorm[i] = 0;
      for (std::size_t c = 0; c < m; ++c) bnorm[i] += star[i][c] * star[i][c];
      if (bnorm[i] == 0) throw InternalError("lll_reduce: dependent rows");
    }
  };
  recompute();
  std::size_t k = 1;
  long guard = 20000;
  while (k < n) {
    if (--guard < 0) throw InternalError("lll_reduce: iteration guard tripped");
    for (std::size_t j = k; j-- > 0;) {
      Int q = round_rat(mu[k][j]);
      if (q != 0) {
        basis.row_axpy(k, j, -q);
        recompute();
      }
    }
    Rat lhs = bnorm[k];
    Rat rhs = (Rat(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * bnorm[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      basis.swap_rows(k, k - 1);
      recompute();
      k = k > 1 ? k - 1 : 1;
    }
  }
  return basis;
}

}  // namespace zalg
