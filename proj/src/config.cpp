#include "agbcyl/config.hpp"
#include "agbcyl/error.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace agbcyl {

const char* errc_name(errc e) noexcept {
  switch (e) {
    case errc::non_unit_series: return "NonUnitSeries";
    case errc::resource_limit: return "ResourceLimit";
    case errc::inadmissible_pair: return "InadmissiblePair";
    case errc::illegal_move: return "IllegalMove";
    case errc::invalid_peak_list: return "InvalidPeakList";
    case errc::invalid_levels: return "InvalidLevels";
    case errc::not_coprime: return "NotCoprime";
    case errc::rank_error: return "RankError";
    case errc::parity_domain_error: return "ParityDomainError";
    case errc::not_normalised: return "NotNormalised";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

int thread_count() {
  static const int n = [] {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("AGBCYL_THREADS")) {
      int v = std::atoi(env);
      if (v >= 1) return std::min(v, 256);
    }
    return hw;
  }();
  return n;
}

namespace {
std::atomic<std::uint64_t> g_budget{2'000'000'000ULL};
}

std::uint64_t enumeration_budget() { return g_budget.load(); }
void set_enumeration_budget(std::uint64_t nodes) { g_budget.store(nodes); }

}  // namespace agbcyl
