#include "mvl/limits.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

namespace mvl {

namespace {

template <typename T>
void read_env(const char* name, T& target) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return;
    try {
        target = static_cast<T>(std::stoull(raw));
    } catch (const std::exception&) {
        // unparsable overrides are ignored
    }
}

std::mutex limits_mutex;
Limits* installed = nullptr;

}  // namespace

Limits Limits::from_environment() {
    Limits limits;
    read_env("MVL_ENUM_CAP", limits.max_enum_n);
    read_env("MVL_SUBSET_CAP", limits.max_inclusion_exclusion);
    read_env("MVL_BASE_POINT_CAP", limits.max_base_points);
    read_env("MVL_COVER_SEARCH_CAP", limits.max_cover_candidates);
    return limits;
}

const Limits& default_limits() {
    std::lock_guard lock(limits_mutex);
    if (installed == nullptr) installed = new Limits(Limits::from_environment());
    return *installed;
}

void set_default_limits(const Limits& limits) {
    std::lock_guard lock(limits_mutex);
    if (installed == nullptr) {
        installed = new Limits(limits);
    } else {
        *installed = limits;
    }
}

}  // namespace mvl
