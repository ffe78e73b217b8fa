#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mvl {

struct SelftestOptions {
    std::uint64_t seed = 1;
    std::size_t exhaustive_max_n = 4;
    std::size_t exhaustive_max_size = 3;
    std::size_t random_instances = 1000;
    std::size_t random_max_n = 6;
    std::size_t random_max_size = 4;
};

struct SelftestResult {
    std::size_t checks = 0;
    std::vector<std::string> failures;
    bool ok() const noexcept { return failures.empty(); }
};

// Compares every closed-form count (single, intersection, inclusion-exclusion, pair profile)
// with the enumeration oracle, exhaustively for small n and on random families beyond that.
SelftestResult run_oracle_selftest(const SelftestOptions& options = {});

}  // namespace mvl
