#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "agbcyl/partitions.hpp"

namespace agbcyl {

using bigint = mpz_class;

// Marks an unbounded Pochhammer count or an a -> infinity limit.
inline constexpr int INFINITE = -1;

// Truncated power series in q with exact integer coefficients: the value is
// known modulo q^{N+1}, where N is the truncation.
class QSeries {
 public:
  QSeries() : coeffs_(1) {}
  explicit QSeries(int truncation);
  QSeries(int truncation, std::vector<bigint> coeffs);

  static QSeries one(int truncation) { return monomial(0, 1, truncation); }
  // c q^e truncated; exponents above the truncation give the zero series.
  static QSeries monomial(int e, const bigint& c, int truncation);
  static QSeries from_ints(int truncation, const std::vector<long>& coeffs);

  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<bigint>& coeffs() const { return coeffs_; }
  const bigint& operator[](int n) const { return coeffs_[n]; }
  bigint& operator[](int n) { return coeffs_[n]; }

  bool is_zero() const;
  // Lowest exponent with a non-zero coefficient, -1 for the zero series.
  int order() const;

  QSeries truncated(int n) const;  // n may only lower the truncation
  QSeries shifted(int m) const;    // multiply by q^m, m >= 0
  QSeries scaled(const bigint& c) const;

  QSeries& operator+=(const QSeries& y);
  QSeries& operator-=(const QSeries& y);
  QSeries& operator*=(const QSeries& y);
  // Adds c q^e in place; exponents past the truncation are dropped.
  void add_term(int e, const bigint& c);
  // this += c q^shift * y, restricted to this series' truncation.
  void add_scaled_shifted(const QSeries& y, int shift, const bigint& c);

  friend QSeries operator+(QSeries x, const QSeries& y) { return x += y; }
  friend QSeries operator-(QSeries x, const QSeries& y) { return x -= y; }
  friend QSeries operator*(const QSeries& x, const QSeries& y);
  friend QSeries operator-(const QSeries& x);
  friend bool operator==(const QSeries& x, const QSeries& y) {
    return x.coeffs_ == y.coeffs_;
  }

  std::string to_string() const;  // human-readable, "1 + q - 2q^3"

 private:
  std::vector<bigint> coeffs_;
};

QSeries invert(const QSeries& x);
// x^e; negative e goes through invert.
QSeries power(const QSeries& x, int e);

// (q^offset; q^modulus)_count, count may be INFINITE.
struct PochSpec {
  int offset = 1;
  int modulus = 1;
  int count = INFINITE;
};

QSeries pochhammer(const PochSpec& spec, int truncation);
// 1 / (q^offset; q^modulus)_count.
QSeries inverse_pochhammer(const PochSpec& spec, int truncation);

// Generalised q-multinomial of level f. Zero when lambda_1 > a.
QSeries q_multinomial(int a, const Partition& lambda, int k, int f, int truncation);

// Exact polynomial helpers used by q_multinomial.
using Poly = std::vector<bigint>;
Poly poly_mul(const Poly& x, const Poly& y);
// Exact division; throws std::logic_error when the remainder is non-zero.
Poly poly_exact_div(const Poly& num, const Poly& den);
Poly poly_pochhammer(int offset, int modulus, int count);

}  // namespace agbcyl
