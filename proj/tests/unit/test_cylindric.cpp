#include <doctest.h>

#include <set>

#include "agbcyl/config.hpp"
#include "agbcyl/cylindric.hpp"
#include "agbcyl/error.hpp"
#include "helpers.hpp"
#include "../oracles.hpp"

using namespace agbcyl;

namespace {

// r = 3, d = 4, mu = (1,1): norm 38.
CylPart sample_array() {
  return CylPart{3, 4, {1, 1}, {{5, 4, 4, 2, 2, 1, 1}, {3, 2, 2, 2, 1}, {4, 2, 2, 1}}};
}

std::vector<long> counts_of(const std::vector<CylPart>& v, int n) {
  std::vector<long> c(n + 1, 0);
  for (const auto& p : v) ++c[norm(p)];
  return c;
}

}  // namespace

TEST_CASE("weights and profiles") {
  CHECK(lambda_hat(AffineWeight{{1, 3, 0, 2, 1}}) == Partition{6, 3, 3, 1});
  CHECK(lambda_hat(AffineWeight{{4, 0, 0}}) == Partition{});
  CHECK(lambda_hat(AffineWeight{{3, 2}}) == Partition{2});
  CHECK(weight_from_profile(5, 7, {6, 3, 3, 1}) == AffineWeight{{1, 3, 0, 2, 1}});
  CHECK(omega_word(AffineWeight{{1, 3, 0, 2, 1}}) == "101110011010");
  CHECK(omega_word(AffineWeight{{3, 0, 0}}) == "111000");
  CHECK(omega_word(AffineWeight{{0, 3}}) == "01110");
  CHECK(all_weights(3, 2).size() == 6);
  CHECK(all_weights(2, 4).front() == AffineWeight{{4, 0}});
  CHECK_THROWS_AS(check_weight(AffineWeight{{3}}), error);
  CHECK_THROWS_AS(check_weight(AffineWeight{{3, -1}}), error);
}

TEST_CASE("validate") {
  const CylPart p = sample_array();
  CHECK(validate(p).ok);
  CHECK(norm(p) == 38);
  CHECK(p.weight() == AffineWeight{{3, 0, 1}});
  CylPart bad = p;
  std::swap(bad.rows[0][0], bad.rows[0][1]);
  const ValidationReport rep = validate(bad);
  CHECK_FALSE(rep.ok);
  CHECK(rep.rule == "PlaneRow1");
  CylPart col = p;
  col.rows[1][0] = 6;
  CHECK(validate(col).rule == "PlaneRow2");
  CylPart wrap = p;
  wrap.rows[2] = {1};
  CHECK(validate(wrap).rule == "PlaneCyl");
  CHECK(validate(CylPart::empty(AffineWeight{{1, 1, 2}})).ok);
  CHECK(norm(CylPart::empty(AffineWeight{{2, 0}})) == 0);
  CHECK(norm(CylPart{2, 1, {}, {{5}, {}}}) == 5);
}

TEST_CASE("enumerate agrees with the naive oracle") {
  for (int r = 2; r <= 3; ++r)
    for (int d = 1; d <= 3; ++d)
      for (const auto& w : all_weights(r, d)) {
        CAPTURE(to_string(w));
        const int n = r == 2 ? 9 : 7;
        CHECK(counts_of(enumerate(w, n), n) == oracle::cylindric_counts(r, d, lambda_hat(w), n));
        CHECK(counts_of(enumerate(w, n, 2), n) == oracle::cylindric_counts(r, d, lambda_hat(w), n, 2));
      }
  const AffineWeight w4{{1, 0, 1, 1}};
  CHECK(as_longs(gf_brute(w4, 6)) == oracle::cylindric_counts(4, 3, lambda_hat(w4), 6));
}

TEST_CASE("enumerate order and examples") {
  CHECK(enumerate(AffineWeight{{2, 1}}, 0).size() == 1);
  CHECK(counts_of(enumerate(AffineWeight{{3, 0}}, 5, 1), 5) == std::vector<long>{1, 1, 2, 2, 2, 2});
  CHECK(counts_of(enumerate(AffineWeight{{2, 0}}, 5, 1), 5) == std::vector<long>{1, 1, 2, 1, 2, 1});
  CHECK(oracle::cylindric_counts(2, 3, {}, 5, 1) == std::vector<long>{1, 1, 2, 2, 2, 2});
  const auto all = enumerate(AffineWeight{{1, 1, 1}}, 8);
  std::set<std::vector<std::vector<int>>> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(validate(all[i]).ok);
    CHECK(seen.insert(all[i].rows).second);
    if (i > 0) {
      const auto key = [](const CylPart& p) { return std::make_pair(norm(p), p.rows); };
      CHECK(key(all[i - 1]) < key(all[i]));
    }
  }
}

TEST_CASE("gf_brute") {
  CHECK(as_longs(gf_brute(AffineWeight{{1, 0}}, 5)) == std::vector<long>{1, 1, 2, 3, 5, 7});
  CHECK(as_longs(gf_brute(AffineWeight{{2, 0}}, 5, 1)) == std::vector<long>{1, 1, 2, 1, 2, 1});
  CHECK(as_longs(gf_brute(AffineWeight{{2, 2, 1}}, 0)) == std::vector<long>{1});
  // bounded counts grow with a and agree with the unbounded ones up to q^a
  const AffineWeight w{{1, 2, 0}};
  const QSeries full = gf_brute(w, 10);
  QSeries prev = gf_brute(w, 10, 0);
  for (int a = 1; a <= 10; ++a) {
    const QSeries cur = gf_brute(w, 10, a);
    for (int n = 0; n <= 10; ++n) {
      CHECK(cur[n] >= prev[n]);
      if (n <= a) CHECK(cur[n] == full[n]);
    }
    prev = cur;
  }
}

TEST_CASE("borodin") {
  const auto ex = borodin_exponents(AffineWeight{{1, 3, 0, 2, 1}});
  std::map<int, int> mult;
  for (const auto& f : ex) {
    CHECK(f.modulus == 12);
    ++mult[f.exponent];
  }
  const std::map<int, int> expected{{1, 4}, {3, 4}, {9, 4},  {11, 4}, {2, 3},  {5, 3}, {6, 3},
                                    {7, 3}, {10, 3}, {4, 2}, {8, 2},  {12, 1}};
  CHECK(mult == expected);
  std::vector<int> small;
  for (const auto& f : borodin_exponents(AffineWeight{{1, 0}})) small.push_back(f.exponent);
  CHECK(small == std::vector<int>{1, 2, 3});
  for (int r = 2; r <= 4; ++r)
    for (int d = 1; d <= 3; ++d)
      for (const auto& w : all_weights(r, d)) CHECK(borodin_exponents(w).size() == std::size_t(r * d + 1));
  CHECK(as_longs(borodin_product(AffineWeight{{1, 0}}, 5)) == std::vector<long>{1, 1, 2, 3, 5, 7});
  CHECK(borodin_product(AffineWeight{{3, 0, 1}}, 12) == gf_brute(AffineWeight{{3, 0, 1}}, 12));
  CHECK(as_longs(borodin_product(AffineWeight{{2, 2}}, 0)) == std::vector<long>{1});
}

TEST_CASE("general cylindric partitions") {
  for (const auto& z : all_weights(2, 3)) CHECK(gf_general_brute(AffineWeight{{0, 0}}, z, 10) == gf_brute(z, 10));
  CHECK(as_longs(gf_general_brute(AffineWeight{{1, 0}}, AffineWeight{{2, 0}}, 0)) == std::vector<long>{1});
  const auto pop = enumerate_general(AffineWeight{{1, 0}}, AffineWeight{{2, 0}}, 6);
  for (const auto& p : pop) {
    const GeneralCylPart g{p, {1, 0}};
    CHECK(validate(g).ok);
    CHECK(burge_view(g).ok);
  }
  CHECK(pop.size() > enumerate(AffineWeight{{2, 0}}, 6).size());
  const BurgeReport rep = burge_view(GeneralCylPart{sample_array(), {0, 0, 0}});
  CHECK(rep.ok);
  CHECK(rep.rows == std::vector<Partition>{{5, 4, 4, 2, 2, 1, 1}, {3, 2, 2, 2, 1}, {4, 2, 2, 1}});
  CHECK(burge_view(GeneralCylPart{CylPart::empty(AffineWeight{{1, 1}}), {0, 0}}).rows.size() == 2);
}

TEST_CASE("enumeration budget") {
  const auto saved = enumeration_budget();
  set_enumeration_budget(50);
  try {
    enumerate(AffineWeight{{2, 1, 1}}, 20);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::resource_limit);
  }
  set_enumeration_budget(saved);
}
