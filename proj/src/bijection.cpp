#include "agbcyl/bijection.hpp"
#include "agbcyl/abacus.hpp"
#include "agbcyl/error.hpp"

#include <algorithm>

namespace agbcyl {

namespace {

BijectionParams raw_params(const AffineWeight& w) {
  check_weight(w);
  if (w.rank() != 2) fail(errc::rank_error, "the path bijection needs rank 2");
  BijectionParams p;
  p.d = w.level();
  p.parity = p.d % 2;
  p.k = p.d / 2;
  p.x = w.marks[1];
  p.b = side_b(p.k, p.x);
  return p;
}

bool needs_mirror(const BijectionParams& p) { return p.even() && p.x > p.k; }

}  // namespace

int side_b(int k, int x) { return x <= k ? k - x : x - k - 1; }

BijectionParams bijection_params(const AffineWeight& w) {
  BijectionParams p = raw_params(w);
  if (needs_mirror(p))
    fail(errc::parity_domain_error, "even level with x > floor(d/2); mirror the weight first");
  return p;
}

AffineWeight mirror_weight(const AffineWeight& w) {
  check_weight(w);
  if (w.rank() != 2) fail(errc::rank_error, "mirror_weight needs rank 2");
  return AffineWeight{{w.marks[1], w.marks[0]}};
}

CylPart mirror_cyl(const CylPart& p) {
  if (p.r != 2) fail(errc::rank_error, "mirror_cyl needs rank 2");
  const AffineWeight mw = mirror_weight(p.weight());
  CylPart out = CylPart::empty(mw);
  out.rows = {p.rows[1], p.rows[0]};
  return out;
}

DecoratedPath cyl_to_path(const CylPart& p, int a, bool allow_mirror) {
  if (p.r != 2) fail(errc::rank_error, "the path bijection needs rank 2");
  const BijectionParams bp = raw_params(p.weight());
  if (needs_mirror(bp)) {
    if (!allow_mirror)
      fail(errc::parity_domain_error, "even level with x > floor(d/2) and mirroring disabled");
    return cyl_to_path(mirror_cyl(p), a, false);
  }
  const AbacusState s = cyl_to_abacus(p);
  const int len = static_cast<int>(s.formation.size());
  if (a < 0) a = len;
  if (a < len) fail(errc::invalid_argument, "a is smaller than the largest entry");

  PeakList pl{bp.k, bp.b, {}};
  long i_j = 0;
  std::vector<std::pair<int, int>> rev;  // j = a, ..., 1
  for (int j = a; j >= 1; --j) {
    const int delta = j <= len ? s.formation[j - 1] : 0;
    const int xj = j <= len ? s.yokel[j - 1].marks[1] : bp.x;
    i_j += delta;
    rev.emplace_back(static_cast<int>(i_j), side_b(bp.k, xj));
  }
  pl.points.assign(rev.rbegin(), rev.rend());
  return from_peaklist(pl, bp.even());
}

CylPart path_to_cyl(const DecoratedPath& h, const AffineWeight& w, bool allow_mirror) {
  const BijectionParams bp = raw_params(w);
  if (needs_mirror(bp)) {
    if (!allow_mirror)
      fail(errc::parity_domain_error, "even level with x > floor(d/2) and mirroring disabled");
    return mirror_cyl(path_to_cyl(h, mirror_weight(w), false));
  }
  if (h.path.k != bp.k || h.path.start() != bp.b)
    fail(errc::invalid_peak_list, "path ceiling or start does not match the weight");
  if (auto e = check_path(h, bp.even())) fail(errc::invalid_peak_list, *e);
  const PeakList pl = to_peaklist(h);
  const int a = pl.a();

  AbacusState s;
  s.tail = w;
  s.yokel.resize(a);
  s.formation.resize(a);
  int x_next = bp.x, b_next = bp.b, i_next = 0;
  for (int j = a; j >= 1; --j) {
    const auto [i, bj] = pl.points[j - 1];
    const int delta = i - i_next;
    const bool next_low = x_next <= bp.k;
    const bool same_side = (delta - bj - b_next) % 2 == 0;
    const bool low = same_side ? next_low : !next_low;
    const int xj = low ? bp.k - bj : bj + bp.k + 1;
    if (xj > bp.d)
      fail(errc::invalid_peak_list, "reconstructed yoke lies outside the weight lattice");
    s.yokel[j - 1] = AffineWeight{{bp.d - xj, xj}};
    s.formation[j - 1] = delta;
    x_next = xj;
    b_next = bj;
    i_next = i;
  }
  return abacus_to_cyl(canonical(s));
}

}  // namespace agbcyl
