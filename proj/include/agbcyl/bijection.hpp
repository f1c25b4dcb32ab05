#pragma once

#include "agbcyl/cylindric.hpp"
#include "agbcyl/paths.hpp"

namespace agbcyl {

// Rank-2 data for Lambda = [d - x, x]: k = floor(d/2) and the path start b.
struct BijectionParams {
  int d = 0;
  int parity = 0;
  int k = 0;
  int x = 0;
  int b = 0;
  bool even() const { return parity == 0; }
};

// Throws errc::rank_error for rank != 2 and errc::parity_domain_error for even
// d with x > k.
BijectionParams bijection_params(const AffineWeight& w);
int side_b(int k, int x);  // b_j from x_j

AffineWeight mirror_weight(const AffineWeight& w);
// Swaps the two rows; the result lives over mirror_weight(weight()).
CylPart mirror_cyl(const CylPart& p);

// a is the number of peaks plus deaks of the image; it defaults to the largest
// entry of p and must not be smaller. allow_mirror routes even d with x > k
// through mirror_cyl.
DecoratedPath cyl_to_path(const CylPart& p, int a = -1, bool allow_mirror = true);
CylPart path_to_cyl(const DecoratedPath& h, const AffineWeight& w, bool allow_mirror = true);

}  // namespace agbcyl
