#include "agbcyl/partitions.hpp"

#include <algorithm>
#include <numeric>

namespace agbcyl {

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition conjugate(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  out.resize(p.front(), 0);
  for (int part : p)
    for (int j = 0; j < part; ++j) ++out[j];
  return out;
}

std::map<int, int> multiplicities(const Partition& p) {
  std::map<int, int> m;
  for (int part : p) ++m[part];
  return m;
}

namespace {

void rec(int n, int max_parts, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  if (max_parts == 0) return;
  for (int part = std::min(n, max_part); part >= 1; --part) {
    // remaining parts are at most `part`, so they can hold at most part*(max_parts-1)
    if (max_parts != UNBOUNDED &&
        static_cast<long>(part) * max_parts < static_cast<long>(n))
      break;
    cur.push_back(part);
    rec(n - part, max_parts == UNBOUNDED ? UNBOUNDED : max_parts - 1, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int max_parts, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition cur;
  rec(n, max_parts, max_part == UNBOUNDED ? n : max_part, cur, out);
  return out;
}

}  // namespace agbcyl
