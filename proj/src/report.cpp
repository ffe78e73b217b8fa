#include "mvl/report.hpp"

#include "mvl/errors.hpp"

#include <limits>

namespace mvl {

namespace {

Json numerals(const RationalVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

std::string monomial_name(const Gate& gate, std::span<const std::size_t> index) {
    std::string name;
    for (std::size_t b = 0; b < index.size(); ++b) {
        if (b) name += "*";
        if (!gate.input_labels().empty()) {
            name += gate.input_labels()[b][index[b]];
        } else {
            name += "t" + std::to_string(b + 1) + "_" + std::to_string(index[b]);
        }
    }
    return name;
}

}  // namespace

Json integer_json(const Integer& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
        return Json(value.convert_to<std::int64_t>());
    }
    return Json(value.str());
}

Json to_json(const SignSet& set) {
    Json out = Json::array();
    for (const auto& s : set) out.push_back(s.str());
    return out;
}

Json to_json(const CsValue& value) {
    Json out;
    out["value"] = integer_json(value.value);
    out["log3"] = value.log3_text();
    return out;
}

Json to_json(const BasePoint& z) { return Json(z.indices); }

Json to_json(const Witness& w) {
    Json out;
    out["functional"] = numerals(w.functional);
    out["total_sign"] = w.total_sign.str();
    return out;
}

Json to_json(const Certificate& c) {
    Json out;
    out["base_point"] = to_json(c.base_point);
    Json ws = Json::array();
    for (const auto& w : c.witnesses) ws.push_back(to_json(w));
    out["witnesses"] = std::move(ws);
    return out;
}

Json to_json(const SensitivityReport& r) {
    Json out;
    out["base_point"] = to_json(r.base_point);
    out["functionals_evaluated"] = r.functionals_evaluated;
    Json ws = Json::array();
    for (const auto& w : r.witness_signs) ws.push_back(to_json(w));
    out["witness_signs"] = std::move(ws);
    out["sens_lower_size"] = r.sens_lower.size();
    out["sens_lower"] = to_json(r.sens_lower);
    out["cs_lower_bound"] = to_json(r.cs_lower);
    out["cs_upper_bound"] = r.cs_upper ? to_json(*r.cs_upper) : Json(nullptr);
    return out;
}

Json to_json(const DataBound& bound) {
    Json out;
    out["cs_upper_bound"] = bound.bound ? to_json(*bound.bound) : Json(nullptr);
    out["heuristic"] = bound.heuristic;
    out["collisions"] = bound.collisions;
    Json per = Json::array();
    for (const auto& p : bound.per_point) per.push_back(p ? to_json(*p) : Json(nullptr));
    out["per_base_point"] = std::move(per);
    Json rejected = Json::array();
    for (const auto& r : bound.rejected) {
        Json item;
        item["record"] = r.record;
        item["reason"] = r.reason;
        rejected.push_back(std::move(item));
    }
    out["rejected"] = std::move(rejected);
    return out;
}

Json expansion_json(const Gate& gate, const MultilinearExpansion& e) {
    Json out;
    out["arities"] = e.arities();
    out["output_dim"] = e.output_dim();
    out["N"] = n_of(e);
    Json terms = Json::array();
    for (std::size_t flat = 0; flat < e.term_count(); ++flat) {
        const auto index = e.index_of(flat);
        Json item;
        item["index"] = index;
        item["monomial"] = monomial_name(gate, index);
        item["coefficient"] = numerals(e.coefficient(flat));
        terms.push_back(std::move(item));
    }
    out["coefficients"] = std::move(terms);
    return out;
}

CrossCheck cross_check_counts(const GateSensitivity& analysis, std::size_t max_terms, const Limits& limits) {
    CrossCheck out;
    const std::size_t n = analysis.n;
    for (const auto& report : analysis.reports) {
        SignSet complement;
        for_each_zs(
            n, [&](const SignVector& s) { if (!report.sens_lower.contains(s)) complement.insert(complement.end(), s); },
            limits);
        if (complement.empty() || complement.size() > max_terms || complement.size() > limits.max_inclusion_exclusion) {
            ++out.skipped;
            continue;
        }
        const Integer closed = count_ze_set(complement, limits);
        const Integer from_cs = (pow_int(3, n) - report.cs_lower.value) / 2;
        if (closed == from_cs) {
            ++out.passed;
        } else {
            ++out.failed;
        }
    }
    return out;
}

Json analysis_document(const AnalysisInputs& in) {
    const Gate& gate = in.gate;
    Json doc;
    doc["tool_version"] = tool_version;
    Json g;
    g["arities"] = gate.arities();
    g["output_dim"] = gate.output_dim();
    g["N"] = n_of(gate.arities());
    g["base_points"] = gate.base_point_count();
    doc["gate"] = std::move(g);
    Json fam;
    fam["source"] = in.functional_source;
    fam["size"] = in.functional_count;
    doc["projection_family"] = std::move(fam);
    Json lower = to_json(in.sensitivity.cs_lower);
    lower["base_point"] = in.sensitivity.reports.empty() ? Json(nullptr) : to_json(in.sensitivity.argmax);
    lower["kind"] = "lower bound (linear projections only)";
    doc["cs_lower_bound"] = std::move(lower);
    doc["data"] = in.data ? to_json(*in.data) : Json(nullptr);
    doc["certificate"] = in.certificate ? to_json(*in.certificate) : Json(nullptr);
    Json reports = Json::array();
    for (const auto& r : in.sensitivity.reports) reports.push_back(to_json(r));
    doc["reports"] = std::move(reports);
    Json cc;
    cc["passed"] = in.cross_check.passed;
    cc["failed"] = in.cross_check.failed;
    cc["skipped"] = in.cross_check.skipped;
    doc["counting_cross_check"] = std::move(cc);
    doc["timing_ms"] = in.elapsed_ms;
    return doc;
}

}  // namespace mvl
