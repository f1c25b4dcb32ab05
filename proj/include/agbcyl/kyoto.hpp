#pragma once

#include <vector>

#include "agbcyl/cylindric.hpp"

namespace agbcyl {

// Cylindrical multipartition with normalisation offsets
// 0 <= gamma_1 <= ... <= gamma_d < r. It stands for the pattern
// t_{jk} = gamma_j - lambda^{(j)}_{k+1}, extended by t_{j+d,k} = t_{jk} + r.
struct Multipartition {
  int r = 2;
  std::vector<int> gammas;
  std::vector<Partition> components;

  int level() const { return static_cast<int>(gammas.size()); }
  friend bool operator==(const Multipartition&, const Multipartition&) = default;
};

// Throws errc::not_normalised unless the offsets and components are in range.
void check_normalised(const Multipartition& m);

// Column c of the cylinder (c = 1..d, continued through the shifted row
// copies) carries the parts of lambda^{(c)}; the profile has conjugate
// mu'_c = r - 1 - gamma_c. Throws errc::not_normalised on bad offsets and
// errc::invalid_argument when the components do not interlock into a valid
// cylindric partition.
CylPart multipartition_to_cyl(const Multipartition& m);
Multipartition cyl_to_multipartition(const CylPart& p);

// t_{jk} for any integer j and k >= 0.
long pattern_entry(const Multipartition& m, long j, int k);

// For every value 1..max entry, some row lacks that value.
bool pattern_highest_lift(const CylPart& p);

}  // namespace agbcyl
