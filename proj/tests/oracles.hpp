#pragma once

// Naive reference implementations used only by the tests. They follow the
// definitions literally and share no code with the library.

#include <algorithm>
#include <functional>
#include <vector>

namespace oracle {

// Partitions of n into at most max_parts parts, each at most max_part, by
// direct recursion; negative bounds mean unbounded.
inline void for_each_partition(int n, int max_parts, int max_part,
                               const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      visit(cur);
      return;
    }
    if (max_parts >= 0 && static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, max_part < 0 ? n : max_part);
}

inline long partition_count(int n, int max_parts = -1, int max_part = -1) {
  long c = 0;
  for_each_partition(n, max_parts, max_part, [&](const std::vector<int>&) { ++c; });
  return c;
}

// Counts by norm 0..n of arrays over profile mu (at most r-1 parts) whose
// rows are weakly decreasing, satisfy pi[t][c] >= pi[t+1][c] where both rows
// exist, and pi[r][c] >= pi[1][c+d]. Rows start at column mu_t + 1.
inline std::vector<long> cylindric_counts(int r, int d, std::vector<int> mu, int n,
                                          int max_entry = -1) {
  mu.resize(r, 0);
  std::vector<long> counts(n + 1, 0);
  std::vector<std::vector<int>> rows(r);
  auto at = [&](int t, int c) {  // 0-based row, 1-based column
    const int idx = c - mu[t] - 1;
    return idx < static_cast<int>(rows[t].size()) ? rows[t][idx] : 0;
  };
  auto ok = [&] {
    for (int t = 0; t + 1 < r; ++t) {
      const int last = mu[t] + static_cast<int>(rows[t].size()) + 1;
      const int last2 = mu[t + 1] + static_cast<int>(rows[t + 1].size()) + 1;
      for (int c = mu[t] + 1; c <= std::max(last, last2); ++c)
        if (at(t, c) < at(t + 1, c)) return false;
    }
    const int span = static_cast<int>(rows[0].size()) + mu[0] + 1;
    for (int c = 1; c + d <= span; ++c)
      if (at(r - 1, c) < at(0, c + d)) return false;
    return true;
  };
  std::function<void(int, int)> rec = [&](int t, int used) {
    if (t == r) {
      if (ok()) ++counts[used];
      return;
    }
    for (int m = 0; used + m <= n; ++m)
      for_each_partition(m, -1, max_entry, [&](const std::vector<int>& p) {
        rows[t] = p;
        rec(t + 1, used + m);
      });
    rows[t].clear();
  };
  rec(0, 0);
  return counts;
}

// Counts by weight 0..n of decorated paths with ceiling k, start b and
// exactly a peaks plus deaks. Every height sequence of length n + k + 2 is
// generated step by step; a peak is a vertex entered by an up step and left
// by a down step, and a deak sits at any position. In even mode every vertex
// at height k >= 1 must have i = k - b (mod 2), including deak positions, and
// for k = 0 the deaks sit at even positions.
inline std::vector<long> decorated_path_counts(int k, int b, int a, int n, bool even) {
  std::vector<long> counts(n + 1, 0);
  const int len = n + k + 2;
  std::vector<int> h{b};
  auto parity_ok = [&](int i) { return ((i - (k - b)) % 2 + 2) % 2 == 0; };
  // add deak multisets of the given size to a path of weight wt
  auto add_deaks = [&](int size, int wt) {
    std::function<void(int, int, int)> rec = [&](int left, int from, int w) {
      if (left == 0) {
        ++counts[w];
        return;
      }
      for (int i = from; w + i <= n; ++i) {
        if (even && k == 0 && i % 2 != 0) continue;
        const int hi = i < static_cast<int>(h.size()) ? h[i] : 0;
        if (even && k >= 1 && hi == k && !parity_ok(i)) continue;
        rec(left - 1, i, w + i);
      }
    };
    rec(size, 0, wt);
  };
  std::function<void(int, int)> rec = [&](int np, int wt) {
    const int i = static_cast<int>(h.size()) - 1;
    if (i == len) {
      if (h.back() == 0 && np <= a) add_deaks(a - np, wt);
      return;
    }
    for (int step : {-1, 0, 1}) {
      const int v = h[i] + step;
      if (v < 0 || v > k) continue;
      if (step == 0 && v != 0) continue;
      if (even && k >= 1 && v == k && !parity_ok(i + 1)) continue;
      const bool peak = i > 0 && h[i - 1] < h[i] && v < h[i];
      const int nwt = wt + (peak ? i : 0);
      if (nwt > n || np + peak > a) continue;
      h.push_back(v);
      rec(np + peak, nwt);
      h.pop_back();
    }
  };
  if (!(even && k >= 1 && b == k && !parity_ok(0))) rec(0, 0);
  return counts;
}

// Coefficients of a formal power series given as numerator / denominator
// polynomials with integer coefficients, denominator constant term 1.
inline std::vector<long> rational_series(std::vector<long> num, const std::vector<long>& den, int n) {
  num.resize(n + 1, 0);
  std::vector<long> out(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    long v = num[i];
    for (int j = 1; j < static_cast<int>(den.size()) && j <= i; ++j) v -= den[j] * out[i - j];
    out[i] = v;
  }
  return out;
}

}  // namespace oracle
