#include "agbcyl/kyoto.hpp"
#include "agbcyl/error.hpp"

#include <algorithm>

namespace agbcyl {

namespace {

// mu'_c for c = 1..d (index 0..d-1)
std::vector<int> column_depths(const Multipartition& m) {
  std::vector<int> out;
  for (int g : m.gammas) out.push_back(m.r - 1 - g);
  return out;
}

int part(const Partition& p, long k) {  // 1-based, zero past the end
  return k >= 1 && k <= static_cast<long>(p.size()) ? p[k - 1] : 0;
}

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

void check_normalised(const Multipartition& m) {
  if (m.r < 2) fail(errc::not_normalised, "rank must be at least 2");
  if (m.gammas.empty()) fail(errc::not_normalised, "level must be at least 1");
  if (m.components.size() != m.gammas.size())
    fail(errc::not_normalised, "need one component per offset");
  for (std::size_t j = 0; j < m.gammas.size(); ++j) {
    if (m.gammas[j] < 0 || m.gammas[j] >= m.r)
      fail(errc::not_normalised, "offsets must lie in [0, r)");
    if (j > 0 && m.gammas[j] < m.gammas[j - 1])
      fail(errc::not_normalised, "offsets must be weakly increasing");
  }
  for (const auto& c : m.components)
    if (!is_partition(c)) fail(errc::not_normalised, "components must be partitions");
}

CylPart multipartition_to_cyl(const Multipartition& m) {
  check_normalised(m);
  const int r = m.r, d = m.level();
  const auto depth = column_depths(m);
  Partition conj_mu;
  for (int v : depth)
    if (v > 0) conj_mu.push_back(v);
  CylPart p = CylPart::empty(weight_from_profile(r, d, conjugate(conj_mu)));

  std::size_t longest = 0;
  for (const auto& c : m.components) longest = std::max(longest, c.size());
  // every part of every component sits in one of these columns
  const int max_col = d * (static_cast<int>(longest) / r + 3);
  for (int i = 1; i <= r; ++i) {
    auto& row = p.rows[i - 1];
    bool ended = false;
    for (int c = p.mu_at(i) + 1; c <= max_col; ++c) {
      const int cm = (c - 1) % d;  // component index
      const int shift = (c - 1) / d;
      const long k = i - (1 + depth[cm]) + 1 + static_cast<long>(r) * shift;
      const int v = part(m.components[cm], k);
      if (v == 0) {
        ended = true;
      } else {
        if (ended) fail(errc::invalid_argument, "components do not form a cylindrical multipartition");
        row.push_back(v);
      }
    }
  }
  const auto rep = validate(p);
  if (!rep.ok) fail(errc::invalid_argument, "components do not form a cylindrical multipartition: " + rep.message);
  return p;
}

Multipartition cyl_to_multipartition(const CylPart& p) {
  Multipartition m;
  m.r = p.r;
  const Partition conj_mu = conjugate(p.mu);
  for (int c = 1; c <= p.d; ++c) {
    const int depth = c <= static_cast<int>(conj_mu.size()) ? conj_mu[c - 1] : 0;
    m.gammas.push_back(p.r - 1 - depth);
    Partition comp;
    for (long k = 1;; ++k) {
      const long idx0 = k - 1 + depth;  // extended 0-based row
      const int i = static_cast<int>(idx0 % p.r) + 1;
      const int col = c + static_cast<int>(idx0 / p.r) * p.d;
      const int v = p.entry(i, col);
      if (v == 0) break;
      comp.push_back(v);
    }
    m.components.push_back(std::move(comp));
  }
  return m;
}

long pattern_entry(const Multipartition& m, long j, int k) {
  check_normalised(m);
  const int d = m.level();
  const long shift = floor_div(j - 1, d);
  const int jj = static_cast<int>(j - shift * d);  // 1..d
  return m.gammas[jj - 1] - part(m.components[jj - 1], k + 1) + shift * m.r;
}

bool pattern_highest_lift(const CylPart& p) {
  const int top = p.max_entry();
  for (int k = 1; k <= top; ++k) {
    bool every_row = true;
    for (const auto& row : p.rows)
      if (std::find(row.begin(), row.end(), k) == row.end()) {
        every_row = false;
        break;
      }
    if (every_row) return false;
  }
  return true;
}

}  // namespace agbcyl
