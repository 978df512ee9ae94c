#pragma once

#include <complex>

#include "zalg/intmat.hpp"

namespace zalg {

// Complex roots of a squarefree integer polynomial, double precision
// (Durand-Kerner); roots sorted by (re, im).
std::vector<std::complex<double>> complex_roots(const std::vector<Int>& poly);

// High-precision archimedean data for elements of Q[t]/minpoly, given in the
// power basis. For every element and every root z_j of minpoly the row holds
// round(scale * log|e(z_j)|) and round(scale * arg(e(z_j)) / (2 pi)).
struct LogEmbedRow {
  std::vector<Int> logabs;
  std::vector<Int> arg;
};
std::vector<LogEmbedRow> log_embeddings(const std::vector<Int>& minpoly,
                                        const std::vector<std::vector<Rat>>& elements,
                                        long bits, const Int& scale);

// Exact-arithmetic LLL with delta = 3/4 on independent basis rows.
IntMat lll_reduce(IntMat basis);

}  // namespace zalg
