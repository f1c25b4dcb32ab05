#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agbcyl/json_io.hpp"
#include "agbcyl/qseries.hpp"

namespace agbcyl {

// Parameters shared by the CLI and the C API; unset fields take
// check-specific defaults.
struct RunParams {
  std::optional<int> r, d, order, max_entry, max_norm, k, b, a;
  std::optional<std::vector<int>> weight, xi;
  bool even = false;

  static RunParams from_json(const json& j);
  json to_json() const;
};

struct Mismatch {
  int exponent = 0;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string check;
  json params;
  int truncation = 0;
  bool ok = true;
  std::optional<Mismatch> first_mismatch;
  std::string detail;  // which case failed, for non-series checks the reason
  double elapsed_ms = 0;

  json to_json() const;
};

const std::vector<std::string>& check_names();
// Throws errc::invalid_argument for an unknown check name.
VerificationReport run_check(const std::string& name, const RunParams& params);

// Index of the first differing coefficient up to the common truncation.
std::optional<Mismatch> compare_series(const QSeries& lhs, const QSeries& rhs);

// gf methods: brute, general, borodin, determinant, limit, bosonic, product,
// fermionic, cpag, principal, highest-lift.
const std::vector<std::string>& gf_methods();
QSeries compute_gf(const std::string& method, const RunParams& params);

}  // namespace agbcyl
