#pragma once

#include <climits>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "agbcyl/partitions.hpp"
#include "agbcyl/qseries.hpp"

namespace agbcyl {

// Level-d dominant integral weight [m_0, ..., m_{r-1}] of affine sl_r.
struct AffineWeight {
  std::vector<int> marks;

  int rank() const { return static_cast<int>(marks.size()); }
  int level() const;
  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
  friend auto operator<=>(const AffineWeight&, const AffineWeight&) = default;
};

// Throws errc::rank_error / invalid_argument on rank < 2 or negative marks.
void check_weight(const AffineWeight& w);
// All weights of rank r and level d, marks in lexicographically descending order.
std::vector<AffineWeight> all_weights(int r, int d);
std::string to_string(const AffineWeight& w);

// mu_j = m_j + ... + m_{r-1}, zero parts dropped.
Partition lambda_hat(const AffineWeight& w);
// Inverse of lambda_hat for a given rank and level.
AffineWeight weight_from_profile(int r, int d, const Partition& mu);
// r zeros and d ones, as a string of '0'/'1'.
std::string omega_word(const AffineWeight& w);

// Cylindric partition of type (inf^r)/mu/d. rows[i] holds the non-zero entries
// of row i+1, whose first entry sits in column mu_{i+1}+1.
struct CylPart {
  int r = 2;
  int d = 0;
  Partition mu;
  std::vector<std::vector<int>> rows;

  // 1-based row (1..r), absolute column. Left of the row start the value is
  // treated as +infinity (INT_MAX), right of its last entry as 0.
  int mu_at(int row) const;
  int entry(int row, int col) const;
  AffineWeight weight() const { return weight_from_profile(r, d, mu); }
  int max_entry() const;

  static CylPart empty(const AffineWeight& w);
  friend bool operator==(const CylPart&, const CylPart&) = default;
};

// (0, beta)-cylindric partition: columns may rise by at most xi's marks.
struct GeneralCylPart {
  CylPart base;
  std::vector<int> xi;  // n_0, ..., n_{r-1}
  friend bool operator==(const GeneralCylPart&, const GeneralCylPart&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::string rule;  // PlaneRow1, PlaneRow2, PlaneCyl or Shape
  int row = 0;
  int col = 0;
  std::string message;
};

ValidationReport validate(const CylPart& p);
ValidationReport validate(const GeneralCylPart& p);
long norm(const CylPart& p);

// Depth-first enumeration. xi is the relaxation vector (all zero for ordinary
// cylindric partitions); max_entry may be UNBOUNDED. The visitor sees each
// array once, in no particular order, possibly from several threads.
using CylVisitor = std::function<void(const CylPart&)>;
void for_each_cyl(const AffineWeight& w, const std::vector<int>& xi, int max_norm, int max_entry,
                  const CylVisitor& visit);

// Every valid array up to max_norm, sorted by norm and then rows.
std::vector<CylPart> enumerate(const AffineWeight& w, int max_norm, int max_entry = UNBOUNDED);
std::vector<CylPart> enumerate_general(const AffineWeight& xi, const AffineWeight& zeta,
                                       int max_norm);
void sort_canonical(std::vector<CylPart>& v);

QSeries gf_brute(const AffineWeight& w, int truncation, int max_entry = UNBOUNDED);
QSeries gf_general_brute(const AffineWeight& xi, const AffineWeight& zeta, int truncation);

struct BorodinFactor {
  int exponent;
  int modulus;
  friend auto operator<=>(const BorodinFactor&, const BorodinFactor&) = default;
};

// Sorted multiset, including the leading (r+d, r+d) factor.
std::vector<BorodinFactor> borodin_exponents(const AffineWeight& w);
QSeries borodin_product(const AffineWeight& w, int truncation);

struct BurgeReport {
  std::vector<Partition> rows;  // rows re-indexed from their own start
  bool ok = true;
  std::string message;
};
BurgeReport burge_view(const GeneralCylPart& p);

}  // namespace agbcyl
