#pragma once

#include <cstddef>
#include <cstdint>

namespace mvl {

// Caps on the exponential enumerations. Overridable through the environment:
//   MVL_ENUM_CAP          largest n for which ZS_n is enumerated (default 16)
//   MVL_SUBSET_CAP        largest family size for inclusion-exclusion (default 20)
//   MVL_BASE_POINT_CAP    largest number of base points a gate may have (default 2^20)
//   MVL_COVER_SEARCH_CAP  largest number of candidate subsets in a cover search (default 2*10^7)
struct Limits {
    std::size_t max_enum_n = 16;
    std::size_t max_inclusion_exclusion = 20;
    std::uint64_t max_base_points = std::uint64_t{1} << 20;
    std::uint64_t max_cover_candidates = 20'000'000;

    static Limits from_environment();
};

// Process-wide limits, read from the environment on first use.
const Limits& default_limits();
void set_default_limits(const Limits& limits);

}  // namespace mvl
