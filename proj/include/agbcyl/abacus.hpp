#pragma once

#include <string>
#include <vector>

#include "agbcyl/cylindric.hpp"
#include "agbcyl/qseries.hpp"

namespace agbcyl {

// Bead-and-yoke encoding of a cylindric partition.
//
// Coordinates: string t carries row t. Its j-th bead from the right sits at
// column B_t(j) = L_t(j) - j, where L_t(j) is the last column of row t holding
// an entry >= j (or mu_t when there is none). The j-th yoke joins
// B_1(j), ..., B_r(j); its weight is read from the horizontal offsets
// m_t = L_t(j) - L_{t+1}(j) and m_0 = d + L_r(j) - L_1(j). With the empty
// array every yoke has the shape of the tail weight (the Dirac sea).
//
// Index 0 of yokel/formation is yoke 1, the rightmost one; positions past the
// stored length carry the tail weight and zero vacancies.
struct AbacusState {
  AffineWeight tail;
  std::vector<AffineWeight> yokel;
  std::vector<int> formation;

  friend bool operator==(const AbacusState&, const AbacusState&) = default;
};

AbacusState cyl_to_abacus(const CylPart& p);
// Throws errc::inadmissible_pair when the pair cannot be realised.
CylPart abacus_to_cyl(const AbacusState& s);
// Drops trailing (tail, 0) positions.
AbacusState canonical(AbacusState s);
long abacus_norm(const AbacusState& s);  // sum of j * delta_j

// Minimal vacancy count between a left yoke w_left and a right yoke w_right.
int delta_min(const AffineWeight& w_left, const AffineWeight& w_right);

// Moves yoke j (1-based) one step left (lift, norm - r) or right
// (inverse_lift, norm + r). Throws errc::illegal_move.
AbacusState lift(const AbacusState& s, int j);
AbacusState inverse_lift(const AbacusState& s, int j);

bool is_highest_lift(const CylPart& p);
QSeries hl_gf_brute(const AffineWeight& w, int truncation);

// Bead columns B_t(j) for j = 1..depth, used by the renderer.
std::vector<std::vector<int>> bead_columns(const CylPart& p, int depth);

}  // namespace agbcyl
