#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "agbcyl/cylindric.hpp"
#include "agbcyl/qseries.hpp"

namespace agbcyl {

using rational = mpq_class;

// Laurent polynomial in x_1..x_r (sum-zero exponent tuples) with truncated
// q-series coefficients.
struct XQLaurent {
  int r = 0;
  int truncation = 0;
  std::map<std::vector<int>, QSeries> terms;

  // Adds c x^exps q^e, normalising exps to sum zero.
  void add(std::vector<int> exps, int e, const bigint& c);
  // Multiplies by (1 - x^v q^n).
  void mul_one_minus(const std::vector<int>& v, int n);
  // Drops keys whose series vanished.
  void prune();
  friend bool operator==(const XQLaurent& a, const XQLaurent& b);
};

std::vector<int> normalize_exponents(std::vector<int> exps);

// Sum over k_1+...+k_r = 0. The window radius is chosen so that every omitted
// term has q-order above the truncation; extra_window widens it for
// stability re-runs.
QSeries gk_determinant_gf(const AffineWeight& w, int a, int truncation, int extra_window = 0);
QSeries gk_limit_gf(const AffineWeight& w, int truncation, int extra_window = 0);

struct MacdonaldSides {
  XQLaurent lhs;
  XQLaurent rhs;
};
MacdonaldSides macdonald_sides(int r, int truncation, int extra_window = 0);

// Numerator of the principal specialisation as a determinant sum. The zero
// weight of rank r is passed as AffineWeight{std::vector<int>(r, 0)}.
QSeries principal_numerator(const AffineWeight& w, int truncation, int extra_window = 0);
QSeries principal_char(const AffineWeight& w, int truncation);

// Rank-2 forms for w = [d-i, i]; a may be INFINITE.
QSeries bosonic_r2(const AffineWeight& w, int a, int truncation);
QSeries product_r2(const AffineWeight& w, int truncation);

rational conformal_weight(const AffineWeight& xi, const AffineWeight& zeta, int p, int pp);
QSeries wr_normalized_char(const AffineWeight& xi, const AffineWeight& zeta, int p, int pp,
                           int truncation, int extra_window = 0);

// Smallest K such that every sum-zero tuple with some |k_s| > K has an
// exponent above `limit`, given lower bounds twice_lb[s](k) on twice the
// contribution of coordinate s.
int lattice_window(const std::vector<std::function<long(int)>>& twice_lb, long limit);

}  // namespace agbcyl
