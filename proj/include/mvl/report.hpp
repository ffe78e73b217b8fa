#pragma once

#include "mvl/elim_count.hpp"
#include "mvl/gate.hpp"
#include "mvl/sensitivity.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace mvl {

inline constexpr const char* tool_version = "0.1.0";

using Json = nlohmann::ordered_json;

Json to_json(const SignSet& set);
Json to_json(const CsValue& value);
Json to_json(const BasePoint& z);
Json to_json(const Witness& w);
Json to_json(const Certificate& c);
Json to_json(const SensitivityReport& r);
Json to_json(const DataBound& bound);

// Exact integers as JSON numbers when they fit in 64 bits, otherwise as decimal strings.
Json integer_json(const Integer& value);

// Coefficient tensor with monomial names built from the input labels (t<i>_<j> without labels).
Json expansion_json(const Gate& gate, const MultilinearExpansion& e);

struct CrossCheck {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

// For each base point, recounts |ZE(ZS_N - sens_lower)| by inclusion-exclusion and compares it to
// the enumeration count behind cs_lower. Complements larger than max_terms are skipped.
CrossCheck cross_check_counts(const GateSensitivity& analysis, std::size_t max_terms = 12,
                              const Limits& limits = default_limits());

struct AnalysisInputs {
    const Gate& gate;
    std::string functional_source;  // "sign-family" or a file name
    std::size_t functional_count = 0;
    const GateSensitivity& sensitivity;
    const std::optional<DataBound>& data;
    const std::optional<Certificate>& certificate;
    CrossCheck cross_check;
    double elapsed_ms = 0;
};

// Field order is fixed; only "timing_ms" varies between identical runs.
Json analysis_document(const AnalysisInputs& in);

}  // namespace mvl
