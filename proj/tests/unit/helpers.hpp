#pragma once

#include <vector>

#include "agbcyl/qseries.hpp"

inline std::vector<long> as_longs(const agbcyl::QSeries& s) {
  std::vector<long> out;
  for (const auto& c : s.coeffs()) out.push_back(c.get_si());
  return out;
}

inline agbcyl::QSeries series_of(const std::vector<long>& v) {
  return agbcyl::QSeries::from_ints(static_cast<int>(v.size()) - 1, v);
}
