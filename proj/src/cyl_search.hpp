#pragma once

// Depth-first row-by-row search over cylindric partitions, shared by the
// enumerators. Rows are generated top to bottom; every later row gets a lower
// bound from the cyclic condition on row 1 chained down the columns, which
// both enforces the wrap condition on row r and prunes the budget early.

#include <algorithm>
#include <atomic>
#include <climits>
#include <thread>
#include <vector>

#include "agbcyl/config.hpp"
#include "agbcyl/cylindric.hpp"
#include "agbcyl/error.hpp"

namespace agbcyl::detail {

template <class Found>
class CylSearch {
 public:
  CylSearch(const AffineWeight& w, const std::vector<int>& xi, int max_norm, int max_entry,
            std::atomic<std::uint64_t>& nodes, int worker, Found& found)
      : r_(w.rank()), d_(w.level()), max_norm_(max_norm), nodes_(nodes), worker_(worker),
        found_(found) {
    cur_ = CylPart::empty(w);
    mu_.assign(r_, 0);
    for (int i = 0; i < r_; ++i) mu_[i] = cur_.mu_at(i + 1);
    n_ = xi;
    n_.resize(r_, 0);
    amax_ = max_entry == UNBOUNDED ? max_norm : std::min(max_entry, max_norm);
    lb_.assign(r_, {});
    lb_suffix_.assign(r_, {});
    need_after_.assign(r_ + 1, 0);
  }

  // All choices for row 1, used to split work between threads.
  std::vector<std::vector<int>> first_rows() {
    std::vector<std::vector<int>> out;
    std::vector<int> row;
    collect_first(row, amax_, 0, out);
    return out;
  }

  void run_from_first(const std::vector<int>& row) {
    cur_.rows[0] = row;
    long used = 0;
    for (int v : row) used += v;
    prepare_bounds();
    if (used + need_after_[0] > max_norm_) return;
    if (r_ == 1) {
      found_(worker_, cur_);
      return;
    }
    gen(1, 0, used);
  }

 private:
  void tick() {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) > enumeration_budget())
      fail(errc::resource_limit, "cylindric enumeration exceeded its node budget");
  }

  void collect_first(std::vector<int>& row, int prev, long used,
                     std::vector<std::vector<int>>& out) {
    out.push_back(row);
    for (int v = 1; v <= std::min<long>(prev, max_norm_ - used); ++v) {
      row.push_back(v);
      collect_first(row, v, used + v, out);
      row.pop_back();
    }
  }

  int entry(int i, int c) const {  // 0-based row
    if (c <= mu_[i]) return INT_MAX;
    const auto& v = cur_.rows[i];
    const int pos = c - mu_[i] - 1;
    return pos < static_cast<int>(v.size()) ? v[pos] : 0;
  }

  void prepare_bounds() {
    // slack for row i: n_{i+1} + ... + n_{r-1} + n_0 (0-based relaxations)
    long slack = n_[0];
    std::vector<long> need(r_, 0);
    for (int i = r_ - 1; i >= 1; --i) {
      lb_[i].clear();
      for (int j = 0;; ++j) {
        const int c = mu_[i] + 1 + j;
        const long v = static_cast<long>(entry(0, c + d_)) - slack;
        if (v <= 0) break;
        lb_[i].push_back(static_cast<int>(v));
      }
      lb_suffix_[i].assign(lb_[i].size() + 2, 0);
      for (int j = static_cast<int>(lb_[i].size()) - 1; j >= 0; --j)
        lb_suffix_[i][j] = lb_suffix_[i][j + 1] + lb_[i][j];
      need[i] = lb_suffix_[i][0];
      if (i >= 1) slack += n_[i];
    }
    need_after_[r_] = 0;
    for (int i = r_ - 1; i >= 0; --i) need_after_[i] = need_after_[i + 1] + (i + 1 < r_ ? need[i + 1] : 0);
  }

  long suffix_need(int i, int j) const {
    return j < static_cast<int>(lb_suffix_[i].size()) ? lb_suffix_[i][j] : 0;
  }

  void gen(int i, int j, long used) {
    tick();
    const int c = mu_[i] + 1 + j;
    const int lbv = j < static_cast<int>(lb_[i].size()) ? lb_[i][j] : 0;
    if (lbv <= 0) {
      if (i == r_ - 1) found_(worker_, cur_);
      else gen(i + 1, 0, used);
    }
    auto& row = cur_.rows[i];
    long hi = j > 0 ? row[j - 1] : amax_;
    if (c > mu_[i - 1]) hi = std::min<long>(hi, static_cast<long>(entry(i - 1, c)) + n_[i]);
    hi = std::min<long>(hi, amax_);
    hi = std::min<long>(hi, max_norm_ - used - need_after_[i] - suffix_need(i, j + 1));
    for (long v = std::max(1, lbv); v <= hi; ++v) {
      row.push_back(static_cast<int>(v));
      gen(i, j + 1, used + v);
      row.pop_back();
    }
  }

  int r_, d_, max_norm_, amax_ = 0;
  std::atomic<std::uint64_t>& nodes_;
  int worker_;
  Found& found_;
  CylPart cur_;
  std::vector<int> mu_, n_;
  std::vector<std::vector<int>> lb_;
  std::vector<std::vector<long>> lb_suffix_;
  std::vector<long> need_after_;
};

// found(worker, const CylPart&) is invoked once per valid array; calls made
// with the same worker index never overlap.
template <class Found>
void search_cyl(const AffineWeight& w, const std::vector<int>& xi, int max_norm, int max_entry,
                int threads, Found&& found) {
  check_weight(w);
  if (!xi.empty() && static_cast<int>(xi.size()) != w.rank())
    fail(errc::rank_error, "relaxation vector must have r marks");
  for (int v : xi)
    if (v < 0) fail(errc::invalid_argument, "relaxation marks must be non-negative");
  if (max_norm < 0) return;
  std::atomic<std::uint64_t> nodes{0};
  using F = std::remove_reference_t<Found>;
  CylSearch<F> seed(w, xi, max_norm, max_entry, nodes, 0, found);
  const auto firsts = seed.first_rows();
  threads = std::max(1, std::min<int>(threads, static_cast<int>(firsts.size())));
  if (threads == 1) {
    for (const auto& row : firsts) seed.run_from_first(row);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        CylSearch<F> s(w, xi, max_norm, max_entry, nodes, t, found);
        for (std::size_t k = next++; k < firsts.size(); k = next++) s.run_from_first(firsts[k]);
      } catch (...) {
        errors[t] = std::current_exception();
        next = firsts.size();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace agbcyl::detail
