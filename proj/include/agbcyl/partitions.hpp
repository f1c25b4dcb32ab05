#pragma once

#include <map>
#include <vector>

namespace agbcyl {

// Weakly decreasing list of positive parts.
using Partition = std::vector<int>;

inline constexpr int UNBOUNDED = -1;

bool is_partition(const Partition& p);
int weight(const Partition& p);
Partition conjugate(const Partition& p);
// part -> multiplicity
std::map<int, int> multiplicities(const Partition& p);

// All partitions of n with at most max_parts parts, each at most max_part,
// in lexicographically descending order.
std::vector<Partition> enumerate_partitions(int n, int max_parts = UNBOUNDED,
                                            int max_part = UNBOUNDED);

}  // namespace agbcyl
