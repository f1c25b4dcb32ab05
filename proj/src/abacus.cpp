#include "agbcyl/abacus.hpp"
#include "agbcyl/config.hpp"
#include "agbcyl/error.hpp"
#include "cyl_search.hpp"

#include <algorithm>
#include <sstream>

namespace agbcyl {

namespace {

std::vector<long> padded(const AffineWeight& w) {
  Partition mu = lambda_hat(w);
  std::vector<long> out(w.rank(), 0);
  for (std::size_t i = 0; i < mu.size(); ++i) out[i] = mu[i];
  return out;
}

long size_of(const std::vector<long>& mu) {
  long s = 0;
  for (long v : mu) s += v;
  return s;
}

// L_t(j) for t = 1..r (0-based vector), from the array.
std::vector<long> level_columns(const CylPart& p, int j) {
  std::vector<long> out(p.r);
  for (int t = 1; t <= p.r; ++t) {
    const auto& row = p.rows[t - 1];
    long cnt = std::count_if(row.begin(), row.end(), [j](int v) { return v >= j; });
    out[t - 1] = p.mu_at(t) + cnt;
  }
  return out;
}

AbacusState padded_state(const AbacusState& s, std::size_t len) {
  AbacusState out = s;
  if (out.yokel.size() < len) out.yokel.resize(len, s.tail);
  if (out.formation.size() < len) out.formation.resize(len, 0);
  return out;
}

}  // namespace

AbacusState canonical(AbacusState s) {
  const std::size_t len = std::max(s.yokel.size(), s.formation.size());
  s = padded_state(s, len);
  while (!s.yokel.empty() && s.yokel.back() == s.tail && s.formation.back() == 0) {
    s.yokel.pop_back();
    s.formation.pop_back();
  }
  return s;
}

long abacus_norm(const AbacusState& s) {
  long n = 0;
  for (std::size_t j = 0; j < s.formation.size(); ++j) n += static_cast<long>(j + 1) * s.formation[j];
  return n;
}

AbacusState cyl_to_abacus(const CylPart& p) {
  AbacusState s;
  s.tail = p.weight();
  const int top = p.max_entry();
  for (int j = 1; j <= top; ++j) {
    const auto lc = level_columns(p, j);
    AffineWeight w{std::vector<int>(p.r)};
    for (int t = 1; t < p.r; ++t) w.marks[t] = static_cast<int>(lc[t - 1] - lc[t]);
    w.marks[0] = static_cast<int>(p.d + lc[p.r - 1] - lc[0]);
    s.yokel.push_back(w);
    int delta = 0;
    for (const auto& row : p.rows) delta += static_cast<int>(std::count(row.begin(), row.end(), j));
    s.formation.push_back(delta);
  }
  return s;
}

CylPart abacus_to_cyl(const AbacusState& s0) {
  check_weight(s0.tail);
  const int r = s0.tail.rank(), d = s0.tail.level();
  const std::size_t len = std::max(s0.yokel.size(), s0.formation.size());
  const AbacusState s = padded_state(s0, len);
  for (const auto& w : s.yokel)
    if (w.rank() != r || w.level() != d)
      fail(errc::inadmissible_pair, "yoke " + to_string(w) + " differs in rank or level from the tail");
  for (const auto& w : s.yokel)
    for (int m : w.marks)
      if (m < 0) fail(errc::inadmissible_pair, "negative mark in yoke " + to_string(w));
  for (int v : s.formation)
    if (v < 0) fail(errc::inadmissible_pair, "negative vacancy count");

  // cols[j][t] = L_t(j+1); cols[len] belongs to the tail
  std::vector<std::vector<long>> cols(len + 1);
  cols[len] = padded(s.tail);
  long c_next = 0;
  long size_next = size_of(cols[len]);
  for (std::size_t jj = len; jj-- > 0;) {
    const auto mu = padded(s.yokel[jj]);
    const long diff = s.formation[jj] - size_of(mu) + size_next;
    if (diff % r != 0) {
      std::ostringstream os;
      os << "vacancy count " << s.formation[jj] << " at yoke " << jj + 1
         << " is not realisable (wrong residue mod " << r << ")";
      fail(errc::inadmissible_pair, os.str());
    }
    const long c = c_next + diff / r;
    cols[jj].resize(r);
    for (int t = 0; t < r; ++t) {
      cols[jj][t] = c + mu[t];
      if (cols[jj][t] < cols[jj + 1][t]) {
        std::ostringstream os;
        os << "yoke " << jj + 1 << " overlaps yoke " << jj + 2 << " on string " << t + 1;
        fail(errc::inadmissible_pair, os.str());
      }
    }
    c_next = c;
    size_next = size_of(mu);
  }

  CylPart p = CylPart::empty(s.tail);
  for (int t = 0; t < r; ++t) {
    auto& row = p.rows[t];
    for (std::size_t jj = len; jj-- > 0;) {
      const long count = cols[jj][t] - cols[jj + 1][t];
      row.insert(row.end(), count, static_cast<int>(jj + 1));
    }
  }
  const auto rep = validate(p);
  if (!rep.ok) fail(errc::inadmissible_pair, "reconstructed array is invalid: " + rep.message);
  return p;
}

AbacusState lift(const AbacusState& s0, int j) {
  if (j < 1) fail(errc::illegal_move, "yoke index must be positive");
  const int r = s0.tail.rank();
  AbacusState s = padded_state(s0, std::max<std::size_t>(j, s0.yokel.size()));
  if (s.formation[j - 1] < r) fail(errc::illegal_move, "not enough vacancies left of the yoke");
  s.formation[j - 1] -= r;
  if (j > 1) s.formation[j - 2] += r;
  try {
    abacus_to_cyl(s);
  } catch (const error& e) {
    if (e.code() != errc::inadmissible_pair) throw;
    fail(errc::illegal_move, "lift would make yokes collide");
  }
  return canonical(s);
}

AbacusState inverse_lift(const AbacusState& s0, int j) {
  if (j < 1) fail(errc::illegal_move, "yoke index must be positive");
  const int r = s0.tail.rank();
  AbacusState s = padded_state(s0, std::max<std::size_t>(j, s0.yokel.size()));
  if (j > 1) {
    if (s.formation[j - 2] < r) fail(errc::illegal_move, "not enough vacancies right of the yoke");
    s.formation[j - 2] -= r;
  }
  s.formation[j - 1] += r;
  try {
    abacus_to_cyl(s);
  } catch (const error& e) {
    if (e.code() != errc::inadmissible_pair) throw;
    fail(errc::illegal_move, "inverse lift would make yokes collide");
  }
  return canonical(s);
}

int delta_min(const AffineWeight& left, const AffineWeight& right) {
  check_weight(left);
  check_weight(right);
  if (left.rank() != right.rank() || left.level() != right.level())
    fail(errc::invalid_argument, "delta_min needs equal rank and level");
  const int r = left.rank(), d = left.level();
  const long base = size_of(padded(right)) - size_of(padded(left));
  long k = d + 1;
  while (base + r * k < 0) ++k;
  // start well separated, then lift the right yoke until it is blocked
  AbacusState s{left, {right, left}, {static_cast<int>(base + r * k), 0}};
  abacus_to_cyl(s);
  for (;;) {
    try {
      s = padded_state(lift(s, 1), 2);
    } catch (const error& e) {
      if (e.code() != errc::illegal_move) throw;
      break;
    }
  }
  return s.formation[0];
}

bool is_highest_lift(const CylPart& p) {
  const AbacusState s = cyl_to_abacus(p);
  for (std::size_t j = 1; j <= s.yokel.size(); ++j) {
    try {
      lift(s, static_cast<int>(j));
      return false;
    } catch (const error& e) {
      if (e.code() != errc::illegal_move) throw;
    }
  }
  return true;
}

QSeries hl_gf_brute(const AffineWeight& w, int truncation) {
  const int threads = thread_count();
  std::vector<std::vector<std::uint64_t>> counts(threads,
                                                 std::vector<std::uint64_t>(truncation + 1, 0));
  detail::search_cyl(w, {}, truncation, UNBOUNDED, threads, [&](int worker, const CylPart& p) {
    if (is_highest_lift(p)) ++counts[worker][norm(p)];
  });
  QSeries s(truncation);
  for (const auto& c : counts)
    for (int n = 0; n <= truncation; ++n) s[n] += static_cast<unsigned long>(c[n]);
  return s;
}

std::vector<std::vector<int>> bead_columns(const CylPart& p, int depth) {
  std::vector<std::vector<int>> out(p.r, std::vector<int>(depth));
  for (int j = 1; j <= depth; ++j) {
    const auto lc = level_columns(p, j);
    for (int t = 0; t < p.r; ++t) out[t][j - 1] = static_cast<int>(lc[t] - j);
  }
  return out;
}

}  // namespace agbcyl
