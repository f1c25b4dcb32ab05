#pragma once

#include <cstdint>

namespace agbcyl {

// Worker threads used by the enumerators. Reads AGBCYL_THREADS once; falls back
// to the hardware concurrency.
int thread_count();

// Upper bound on search nodes visited by a single enumeration call before it
// gives up with errc::resource_limit.
std::uint64_t enumeration_budget();
void set_enumeration_budget(std::uint64_t nodes);

}  // namespace agbcyl
