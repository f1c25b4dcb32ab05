#include <doctest.h>

#include "agbcyl/partitions.hpp"
#include "agbcyl/qseries.hpp"
#include "../oracles.hpp"

using namespace agbcyl;

TEST_CASE("conjugate") {
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate({}) == Partition{});
  CHECK(conjugate({6, 3, 3, 1}) == Partition{4, 3, 3, 1, 1, 1});
  for (int n = 0; n <= 10; ++n)
    for (const auto& p : enumerate_partitions(n)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("enumerate partitions") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{{}});
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(3, 1) == std::vector<Partition>{{3}});
  CHECK(enumerate_partitions(4) == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  const QSeries gf = inverse_pochhammer({1, 1, INFINITE}, 30);
  for (int n = 0; n <= 30; ++n) {
    CHECK(gf[n] == static_cast<long>(enumerate_partitions(n).size()));
    CHECK(static_cast<long>(enumerate_partitions(n).size()) == oracle::partition_count(n));
  }
  for (int n = 0; n <= 12; ++n)
    CHECK(static_cast<long>(enumerate_partitions(n, 3, 4).size()) == oracle::partition_count(n, 3, 4));
}

TEST_CASE("weight and multiplicities") {
  CHECK(weight({5, 2, 2}) == 9);
  CHECK(is_partition({3, 3, 1}));
  CHECK_FALSE(is_partition({1, 3}));
  CHECK_FALSE(is_partition({2, 0}));
  CHECK(multiplicities({3, 3, 1}) == std::map<int, int>{{1, 1}, {3, 2}});
}
