#include "agbcyl/paths.hpp"
#include "agbcyl/config.hpp"
#include "agbcyl/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace agbcyl {

namespace {

bool parity_ok(int i, int k, int b) { return ((i - (k - b)) % 2 + 2) % 2 == 0; }

bool is_peak_at(const std::vector<int>& h, int i) {
  if (i <= 0 || i + 1 >= static_cast<int>(h.size())) return false;
  return h[i - 1] < h[i] && h[i + 1] < h[i];
}

void require_kb(int k, int b) {
  if (k < 0 || b < 0 || b > k)
    fail(errc::invalid_argument, "need 0 <= b <= k (k=" + std::to_string(k) +
                                     ", b=" + std::to_string(b) + ")");
}

}  // namespace

int BPath::at(int i) const {
  return i >= 0 && i < static_cast<int>(heights.size()) ? heights[i] : 0;
}

BPath make_path(int k, std::vector<int> heights) {
  if (heights.empty()) heights.push_back(0);
  while (heights.back() > 0) heights.push_back(heights.back() - 1);
  while (heights.size() >= 2 && heights[heights.size() - 1] == 0 &&
         heights[heights.size() - 2] == 0)
    heights.pop_back();
  return BPath{k, std::move(heights)};
}

std::optional<std::string> check_path(const BPath& h, bool even) {
  if (h.k < 0) return "negative ceiling";
  if (h.heights.empty()) return "empty height list";
  if (h.heights.back() != 0) return "path does not settle at 0";
  const int b = h.heights.front();
  for (std::size_t i = 0; i < h.heights.size(); ++i) {
    const int v = h.heights[i];
    if (v < 0 || v > h.k) return "height out of range at " + std::to_string(i);
    if (i > 0) {
      const int step = v - h.heights[i - 1];
      if (step < -1 || step > 1) return "step larger than 1 at " + std::to_string(i);
      if (step == 0 && v != 0) return "flat step above 0 at " + std::to_string(i);
    }
    if (even && h.k >= 1 && v == h.k && !parity_ok(static_cast<int>(i), h.k, b))
      return "vertex at the ceiling has the wrong parity at " + std::to_string(i);
  }
  return std::nullopt;
}

std::optional<std::string> check_path(const DecoratedPath& h, bool even) {
  if (auto e = check_path(h.path, even)) return e;
  for (const auto& [i, m] : h.deaks) {
    if (i < 0) return "negative deak position";
    if (m <= 0) return "non-positive deak multiplicity at " + std::to_string(i);
    if (even) {
      if (h.path.k == 0 && i % 2 != 0) return "odd deak position " + std::to_string(i);
      if (h.path.k >= 1 && h.path.at(i) == h.path.k && !parity_ok(i, h.path.k, h.path.start()))
        return "deak at the ceiling has the wrong parity at " + std::to_string(i);
    }
  }
  return std::nullopt;
}

std::vector<int> peaks(const BPath& h) {
  std::vector<int> out;
  for (int i = 1; i + 1 < static_cast<int>(h.heights.size()); ++i)
    if (is_peak_at(h.heights, i)) out.push_back(i);
  return out;
}

PathStats path_stats(const BPath& h) {
  PathStats s;
  for (int i : peaks(h)) {
    ++s.np;
    s.wt += i;
  }
  return s;
}

PathStats path_stats(const DecoratedPath& h) {
  PathStats s = path_stats(h.path);
  for (const auto& [i, m] : h.deaks) {
    s.np += m;
    s.wt += static_cast<long>(i) * m;
  }
  return s;
}

std::vector<BPath> enumerate_bpaths(int k, int b, int a, int max_wt, bool even) {
  require_kb(k, b);
  std::vector<BPath> out;
  if (a < 0 || max_wt < 0) return out;
  std::vector<int> h{b};
  std::uint64_t nodes = 0;
  const std::uint64_t budget = enumeration_budget();

  auto ceiling_ok = [&](int i, int v) {
    return !even || k == 0 || v != k || parity_ok(i, k, b);
  };
  // np and wt count the peaks strictly before the last vertex
  std::function<void(int, long)> dfs = [&](int np, long wt) {
    if (++nodes > budget) fail(errc::resource_limit, "path enumeration exceeded its node budget");
    const int i = static_cast<int>(h.size()) - 1;
    const int cur = h[i];
    const bool rising = i > 0 && h[i - 1] < cur;
    if (np == a) {
      // only a plain descent avoids further peaks
      if (rising) return;
      std::vector<int> full = h;
      while (full.back() > 0) full.push_back(full.back() - 1);
      out.push_back(make_path(k, std::move(full)));
      return;
    }
    // the remaining a - np peaks sit at distinct positions >= i, two apart
    const long left = a - np;
    const long first = rising ? i : i + 1;
    if (wt + left * first + left * (left - 1) > max_wt) return;
    for (int v : {cur - 1, cur + 1, cur}) {
      if (v < 0 || v > k) continue;
      if (v == cur && cur != 0) continue;
      if (!ceiling_ok(i + 1, v)) continue;
      const bool peak = rising && v < cur;
      const long nwt = wt + (peak ? i : 0);
      if (nwt > max_wt) continue;
      h.push_back(v);
      dfs(np + (peak ? 1 : 0), nwt);
      h.pop_back();
    }
  };
  dfs(0, 0);
  return out;
}

std::vector<DecoratedPath> enumerate_paths(int k, int b, int a, int max_wt, bool even) {
  require_kb(k, b);
  std::vector<DecoratedPath> out;
  if (a < 0 || max_wt < 0) return out;
  for (int n = 0; n <= a; ++n) {
    for (const auto& p : enumerate_bpaths(k, b, n, max_wt, even)) {
      const long base = path_stats(p).wt;
      auto allowed = [&](int i) {
        if (!even) return true;
        if (k == 0) return i % 2 == 0;
        return p.at(i) != k || parity_ok(i, k, b);
      };
      // non-increasing deak positions, a - n of them, total weight bounded
      std::vector<int> pos;
      std::function<void(int, long)> place = [&](int hi, long wt) {
        if (static_cast<int>(pos.size()) == a - n) {
          DecoratedPath d{p, {}};
          for (int i : pos) ++d.deaks[i];
          out.push_back(std::move(d));
          return;
        }
        for (int i = std::min<long>(hi, max_wt - wt); i >= 0; --i) {
          if (!allowed(i)) continue;
          pos.push_back(i);
          place(i, wt + i);
          pos.pop_back();
        }
      };
      place(static_cast<int>(max_wt - base), base);
    }
  }
  return out;
}

QSeries path_gf(const std::vector<DecoratedPath>& v, int truncation) {
  QSeries s(truncation);
  for (const auto& p : v) s.add_term(static_cast<int>(path_stats(p).wt), 1);
  return s;
}

QSeries path_gf(const std::vector<BPath>& v, int truncation) {
  QSeries s(truncation);
  for (const auto& p : v) s.add_term(static_cast<int>(path_stats(p).wt), 1);
  return s;
}

BPath b_transform(const DecoratedPath& h) {
  if (auto e = check_path(h)) fail(errc::invalid_argument, "b_transform: " + *e);
  std::vector<int> base = h.path.heights;
  if (!h.deaks.empty()) {
    const int last = h.deaks.rbegin()->first;
    if (last >= static_cast<int>(base.size())) base.resize(last + 1, 0);
  }
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(base.size()); ++i) {
    out.push_back(base[i]);
    auto it = h.deaks.find(i);
    const int plus = (it == h.deaks.end() ? 0 : it->second) + (is_peak_at(base, i) ? 1 : 0);
    for (int t = 0; t < plus; ++t) {
      out.push_back(base[i] + 1);
      out.push_back(base[i]);
    }
  }
  return make_path(h.path.k + 1, std::move(out));
}

DecoratedPath inverse_b_transform(const BPath& hp) {
  if (auto e = check_path(hp)) fail(errc::invalid_argument, "inverse_b_transform: " + *e);
  if (hp.k < 1) fail(errc::invalid_argument, "inverse_b_transform needs ceiling >= 1");
  if (hp.start() > hp.k - 1)
    fail(errc::invalid_argument, "inverse_b_transform needs a start below the ceiling");
  const auto& h = hp.heights;
  std::vector<int> out{h[0]};
  std::vector<int> count{0};
  std::size_t pos = 0;
  while (pos + 1 < h.size()) {
    if (is_peak_at(h, static_cast<int>(pos + 1))) {
      ++count.back();
      pos += 2;
    } else {
      out.push_back(h[pos + 1]);
      count.push_back(0);
      ++pos;
    }
  }
  DecoratedPath res{make_path(hp.k - 1, out), {}};
  for (int i = 0; i < static_cast<int>(count.size()); ++i) {
    const int m = count[i] - (is_peak_at(out, i) ? 1 : 0);
    if (m < 0) fail(errc::invalid_argument, "inverse_b_transform: peak without an inserted pair");
    if (m > 0) res.deaks[i] = m;
  }
  if (auto e = check_path(res)) fail(errc::invalid_argument, "inverse_b_transform: " + *e);
  return res;
}

PeakList to_peaklist(const DecoratedPath& h) {
  PeakList pl{h.path.k, h.path.start(), {}};
  std::vector<int> pos = peaks(h.path);
  for (const auto& [i, m] : h.deaks) pos.insert(pos.end(), m, i);
  std::sort(pos.begin(), pos.end(), std::greater<>());
  for (int i : pos) pl.points.emplace_back(i, h.path.at(i));
  return pl;
}

DecoratedPath from_peaklist(const PeakList& pl, bool even) {
  const int k = pl.k, b = pl.b, a = pl.a();
  if (k < 0 || b < 0 || b > k) fail(errc::invalid_peak_list, "need 0 <= b <= k");
  auto pt = [&](int j) {  // 1-based, j = a+1 is the start
    return j == a + 1 ? std::pair<int, int>{0, b} : pl.points[j - 1];
  };
  for (int j = 1; j <= a; ++j) {
    const auto [i, bj] = pt(j);
    const auto [i_next, b_next] = pt(j + 1);
    std::ostringstream where;
    where << " at point " << j << " (" << i << ", " << bj << ")";
    if (bj < 0 || bj > k) fail(errc::invalid_peak_list, "height out of range" + where.str());
    const int delta = i - i_next;
    if (delta < 0) fail(errc::invalid_peak_list, "positions not non-increasing" + where.str());
    if (delta <= bj + b_next) {
      const int gap = std::abs(bj - b_next);
      if (delta < gap || (delta - gap) % 2 != 0)
        fail(errc::invalid_peak_list, "spacing violates the step constraints" + where.str());
    }
    if (even && bj == k && !parity_ok(i, k, b))
      fail(errc::invalid_peak_list, "point at the ceiling has the wrong parity" + where.str());
  }
  std::vector<int> h{b};
  for (int j = a; j >= 1; --j) {
    const auto [i, bj] = pt(j);
    const int from = pt(j + 1).second;
    const int delta = i - pt(j + 1).first;
    int down, flat, up;
    if (delta > bj + from) {
      down = from;
      flat = delta - bj - from;
      up = bj;
    } else {
      down = (delta + from - bj) / 2;
      flat = 0;
      up = delta - down;
    }
    int v = from;
    for (int t = 0; t < down; ++t) h.push_back(--v);
    for (int t = 0; t < flat; ++t) h.push_back(v);
    for (int t = 0; t < up; ++t) h.push_back(++v);
  }
  DecoratedPath res{make_path(k, h), {}};
  std::map<int, int> mult;
  for (const auto& p : pl.points) ++mult[p.first];
  for (const auto& [i, m] : mult) {
    const int d = m - (is_peak_at(res.path.heights, i) ? 1 : 0);
    if (d > 0) res.deaks[i] = d;
  }
  if (auto e = check_path(res, even)) fail(errc::invalid_peak_list, *e);
  if (path_stats(res).np != a) fail(errc::invalid_peak_list, "points do not match the peak count");
  return res;
}

QSeries fermionic_sum(int k, int b, int a, bool even, int truncation) {
  require_kb(k, b);
  if (a != INFINITE && a < 0) fail(errc::invalid_argument, "a must be >= 0 or INFINITE");
  const int N = truncation;
  const int top = a == INFINITE ? N : std::min(a, N);
  // inv[m] = 1/(q;q)_m, inv2[m] = 1/(q^2;q^2)_m; counts past N all equal the
  // infinite product modulo q^{N+1}
  std::vector<QSeries> inv, inv2;
  for (int m = 0; m <= top; ++m) {
    inv.push_back(inverse_pochhammer({1, 1, m}, N));
    inv2.push_back(inverse_pochhammer({2, 2, m}, N));
  }
  auto inv_at = [&](int m) -> const QSeries& { return inv[std::min(m, top)]; };
  auto inv2_at = [&](int m) -> const QSeries& { return inv2[std::min(m, top)]; };
  auto innermost = [&](int m) -> const QSeries& { return even ? inv2_at(m) : inv_at(m); };

  if (k == 0) {
    if (a == INFINITE) return even ? inverse_pochhammer({2, 2, INFINITE}, N) : inverse_pochhammer({1, 1, INFINITE}, N);
    return innermost(a).truncated(N);
  }

  QSeries total(N);
  std::vector<int> n(k + 1, 0);  // n[1..k]
  // chooses n_j for j = level, descending from n_{j+1}
  std::function<void(int, int, long)> rec = [&](int level, int cap, long expo) {
    for (int v = 0; v <= cap; ++v) {
      const long e = expo + static_cast<long>(v) * v + (level <= b ? v : 0);
      if (e > N) break;
      n[level] = v;
      if (level > 1) {
        rec(level - 1, v, e);
        continue;
      }
      QSeries term = QSeries::monomial(static_cast<int>(e), 1, N);
      term *= innermost(n[1]);
      for (int j = 1; j < k; ++j) term *= inv_at(n[j + 1] - n[j]);
      if (a != INFINITE) term *= inv_at(a - n[k]);
      total += term;
    }
  };
  rec(k, top, 0);
  if (a == INFINITE) total *= inverse_pochhammer({1, 1, INFINITE}, N);
  return total;
}

QSeries cpag_sum(int d, int i, int a, int truncation) {
  if (d < 2) fail(errc::invalid_argument, "cpag_sum needs d >= 2");
  const int k = d / 2;
  if (i < 0 || i > k) fail(errc::invalid_argument, "cpag_sum needs 0 <= i <= floor(d/2)");
  if (a < 0) fail(errc::invalid_argument, "cpag_sum needs a finite a >= 0");
  const int f = d % 2 == 1 ? 1 : 2;
  const int N = truncation;
  QSeries sum(N);
  for (int size = 0;; ++size) {
    // sum of squares is at least size^2 / k
    if (static_cast<long>(size) * size > static_cast<long>(N) * k) break;
    for (const auto& lam : enumerate_partitions(size, k, a)) {
      long e = 0;
      for (int v : lam) e += static_cast<long>(v) * v;
      for (int t = i; t < static_cast<int>(lam.size()); ++t) e += lam[t];
      if (e > N) continue;
      sum.add_scaled_shifted(q_multinomial(a, lam, k, f, N), static_cast<int>(e), 1);
    }
  }
  return sum * inverse_pochhammer({f, f, a}, N);
}

}  // namespace agbcyl
