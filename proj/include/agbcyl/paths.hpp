#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agbcyl/qseries.hpp"

namespace agbcyl {

// Bressoud path with ceiling k: heights h_0 = b, h_1, ..., ending in a single
// 0 after which the path stays at 0 forever.
struct BPath {
  int k = 0;
  std::vector<int> heights;

  int start() const { return heights.empty() ? 0 : heights.front(); }
  // h_i, zero past the stored prefix.
  int at(int i) const;
  friend bool operator==(const BPath&, const BPath&) = default;
};

// A path together with deak multiplicities: position -> count (> 0).
struct DecoratedPath {
  BPath path;
  std::map<int, int> deaks;
  friend bool operator==(const DecoratedPath&, const DecoratedPath&) = default;
};

// Peaks and deaks as points (i_j, b_j), j = 1..a, with i_1 >= ... >= i_a.
struct PeakList {
  int k = 0;
  int b = 0;
  std::vector<std::pair<int, int>> points;
  int a() const { return static_cast<int>(points.size()); }
  friend bool operator==(const PeakList&, const PeakList&) = default;
};

struct PathStats {
  long np = 0;
  long wt = 0;
  friend bool operator==(const PathStats&, const PathStats&) = default;
};

// Trims trailing zeros to a single final 0 and fills in the descent when the
// prefix stops above 0.
BPath make_path(int k, std::vector<int> heights);

// Empty optional when valid, else a reason. even adds the parity condition:
// every vertex at height k sits at i = k - b (mod 2) when k >= 1, and for
// k = 0 every deak position is even.
std::optional<std::string> check_path(const BPath& h, bool even = false);
std::optional<std::string> check_path(const DecoratedPath& h, bool even = false);

std::vector<int> peaks(const BPath& h);
PathStats path_stats(const BPath& h);
PathStats path_stats(const DecoratedPath& h);

// All (decorated) paths with exactly a peaks (plus deaks) and weight <= max_wt,
// in a deterministic order. Throws errc::resource_limit past the node budget.
std::vector<BPath> enumerate_bpaths(int k, int b, int a, int max_wt, bool even);
std::vector<DecoratedPath> enumerate_paths(int k, int b, int a, int max_wt, bool even);
// Generating function by weight of a population.
QSeries path_gf(const std::vector<DecoratedPath>& v, int truncation);
QSeries path_gf(const std::vector<BPath>& v, int truncation);

// Raises the ceiling by one, inserting an up-down pair at every peak and deak.
BPath b_transform(const DecoratedPath& h);
// Exact inverse; needs ceiling >= 1 and a start below the ceiling.
DecoratedPath inverse_b_transform(const BPath& h);

PeakList to_peaklist(const DecoratedPath& h);
// Throws errc::invalid_peak_list when the points do not describe a path of the
// family (even selects the extra parity condition).
DecoratedPath from_peaklist(const PeakList& pl, bool even = false);

// Multi-sum over a >= n_k >= ... >= n_1 >= 0; a may be INFINITE.
QSeries fermionic_sum(int k, int b, int a, bool even, int truncation);
// Sum over partitions with at most k = floor(d/2) parts weighted by the
// level-f q-multinomial, for Lambda = [d-i, i].
QSeries cpag_sum(int d, int i, int a, int truncation);

}  // namespace agbcyl
