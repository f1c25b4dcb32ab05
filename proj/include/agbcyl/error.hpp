#pragma once

#include <stdexcept>
#include <string>

namespace agbcyl {

enum class errc {
  non_unit_series = 1,
  resource_limit,
  inadmissible_pair,
  illegal_move,
  invalid_peak_list,
  invalid_levels,
  not_coprime,
  rank_error,
  parity_domain_error,
  not_normalised,
  invalid_argument,
};

const char* errc_name(errc e) noexcept;

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace agbcyl
