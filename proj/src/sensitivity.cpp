#include "mvl/sensitivity.hpp"

#include "mvl/elim_count.hpp"
#include "mvl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace mvl {

namespace {

void check_sens_subset(std::size_t n, const SignSet& subset) {
    for (const auto& s : subset) {
        if (s.size() != n || !s.is_canonical()) {
            throw DomainError("'" + s.str() + "' is not a member of ZS_" + std::to_string(n));
        }
    }
}

CsValue cs_from_eliminated(std::size_t n, std::uint64_t eliminated) {
    return CsValue{pow_int(3, n) - 2 * Integer(eliminated)};
}

// A total sign with a definite entry at i eliminates at least e_i.
bool eliminates_anything(const TotalSignVector& t) {
    return std::any_of(t.entries().begin(), t.entries().end(),
                       [](Sign s) { return s == Sign::positive || s == Sign::negative; });
}

}  // namespace

ProjectionFamily::ProjectionFamily(std::vector<RationalVector> functionals) {
    if (functionals.empty()) throw DomainError("a projection family needs at least one functional");
    const std::size_t m = functionals.front().size();
    for (auto& w : functionals) {
        if (w.size() != m) throw DomainError("functionals in a family must share one dimension");
        auto first = std::find_if(w.begin(), w.end(), [](const Rational& v) { return v != 0; });
        if (first == w.end()) throw DomainError("the zero functional is not a projection");
        if (*first < 0) {
            for (auto& v : w) v = -v;
        }
        if (std::find(functionals_.begin(), functionals_.end(), w) != functionals_.end()) {
            throw DomainError("duplicate functional (up to sign) in projection family");
        }
        functionals_.push_back(std::move(w));
    }
}

ProjectionFamily ProjectionFamily::sign_family(std::size_t m, const Limits& limits) {
    std::vector<RationalVector> functionals;
    for_each_zs(
        m,
        [&](const SignVector& s) { functionals.emplace_back(s.entries().begin(), s.entries().end()); },
        limits);
    return ProjectionFamily(std::move(functionals));
}

double CsValue::log3() const {
    return static_cast<double>(std::log(value.convert_to<long double>()) / std::log(3.0L));
}

std::string CsValue::log3_text() const {
    if (value < 1) throw DomainError("continuous sensitivity integer must be >= 1");
    Integer p = 1;
    std::size_t k = 0;
    while (p < value) {
        p *= 3;
        ++k;
    }
    char buf[64];
    if (p == value) {
        std::snprintf(buf, sizeof buf, "%zu.000000000000", k);
    } else {
        std::snprintf(buf, sizeof buf, "%.12f", log3());
    }
    return buf;
}

Sign sign_over_region(const MultilinearExpansion& form, const BasePoint& base) {
    if (form.output_dim() != 1) throw DomainError("sign_over_region needs a scalar form");
    if (base.indices.size() != form.num_blocks()) {
        throw DomainError("base point has " + std::to_string(base.indices.size()) + " blocks, the form has " +
                          std::to_string(form.num_blocks()));
    }
    // On C every base coordinate is positive and the rest are nonnegative, so each monomial is
    // nonnegative and the all-base monomial is strictly positive. The form is positive on C
    // exactly when no coefficient is negative and the base coefficient is positive; vertex
    // values are the coefficients and every vertex lies in the closure of C.
    const Rational& base_coef = form.coefficient(base.indices).front();
    bool any_pos = false;
    bool any_neg = false;
    for (const auto& c : form.coefficients()) {
        any_pos = any_pos || c.front() > 0;
        any_neg = any_neg || c.front() < 0;
    }
    if (!any_pos && !any_neg) return Sign::zero;
    if (!any_neg && base_coef > 0) return Sign::positive;
    if (!any_pos && base_coef < 0) return Sign::negative;
    return Sign::undetermined;
}

TotalSignVector total_sign(const MultilinearExpansion& e, const BasePoint& z, std::span<const Rational> w) {
    if (z.indices.size() != e.num_blocks()) throw DomainError("base point does not match the gate's inputs");
    const MultilinearExpansion scalar = e.project(w);
    std::vector<Sign> signs;
    signs.reserve(n_of(e));
    for (std::size_t block = 0; block < e.num_blocks(); ++block) {
        const BasePoint rest = z.without(block);
        for (std::size_t coord = 0; coord < e.arities()[block]; ++coord) {
            if (coord == z.indices[block]) continue;
            signs.push_back(sign_over_region(scalar.reduced_partial(z, block, coord), rest));
        }
    }
    return TotalSignVector(std::move(signs));
}

SignSet sens_lower(const MultilinearExpansion& e, const BasePoint& z, const ProjectionFamily& family,
                   const Limits& limits) {
    std::vector<TotalSignVector> signs;
    for (const auto& w : family.functionals()) signs.push_back(total_sign(e, z, w));
    return ze(signs, n_of(e), limits);
}

CsValue cs_at(std::size_t n, const SignSet& sens_subset, const Limits& limits) {
    check_sens_subset(n, sens_subset);
    std::vector<TotalSignVector> complement;
    for_each_zs(
        n, [&](const SignVector& s) { if (!sens_subset.contains(s)) complement.emplace_back(s); }, limits);
    return cs_from_eliminated(n, count_ze_oracle(complement, n, limits));
}

CsValue cs_at(const MultilinearExpansion& e, const SignSet& sens_subset, const Limits& limits) {
    return cs_at(n_of(e), sens_subset, limits);
}

SensitivityReport analyze_base_point(const MultilinearExpansion& e, const BasePoint& z, const ProjectionFamily& family,
                                     const Limits& limits) {
    if (family.dimension() != e.output_dim()) {
        throw DomainError("functionals have dimension " + std::to_string(family.dimension()) +
                          " but the gate outputs live in dimension " + std::to_string(e.output_dim()));
    }
    const std::size_t n = n_of(e);
    SensitivityReport report;
    report.base_point = z;
    report.functionals_evaluated = family.size();
    std::vector<TotalSignVector> signs;
    for (const auto& w : family.functionals()) {
        TotalSignVector t = total_sign(e, z, w);
        if (eliminates_anything(t)) report.witness_signs.push_back({w, t});
        signs.push_back(std::move(t));
    }
    report.sens_lower = ze(signs, n, limits);
    report.cs_lower = cs_at(n, report.sens_lower, limits);
    return report;
}

GateSensitivity cs_gate(const MultilinearExpansion& e, const ProjectionFamily& family, const Limits& limits) {
    if (e.term_count() > limits.max_base_points) {
        throw ResourceLimitError("gate has " + std::to_string(e.term_count()) +
                                 " base points, above the cap of " + std::to_string(limits.max_base_points) +
                                 " (MVL_BASE_POINT_CAP)");
    }
    GateSensitivity out;
    out.n = n_of(e);
    out.cs_lower = CsValue{0};
    for (std::size_t flat = 0; flat < e.term_count(); ++flat) {
        BasePoint z{e.index_of(flat)};
        SensitivityReport report = analyze_base_point(e, z, family, limits);
        if (report.cs_lower.value > out.cs_lower.value) {
            out.cs_lower = report.cs_lower;
            out.argmax = z;
        }
        out.reports.push_back(std::move(report));
    }
    return out;
}

std::optional<Certificate> reversibility_certificate(const MultilinearExpansion& e, const ProjectionFamily& family,
                                                     const Limits& limits) {
    if (e.term_count() > limits.max_base_points) {
        throw ResourceLimitError("gate has too many base points for a certificate search (MVL_BASE_POINT_CAP)");
    }
    const std::size_t n = n_of(e);
    const std::uint64_t universe = zs_size(n);
    for (std::size_t flat = 0; flat < e.term_count(); ++flat) {
        BasePoint z{e.index_of(flat)};
        std::vector<Witness> candidates;
        std::vector<SignSet> eliminated;
        SignSet covered;
        for (const auto& w : family.functionals()) {
            TotalSignVector t = total_sign(e, z, w);
            std::vector<TotalSignVector> single{t};
            SignSet hit = ze(single, n, limits);
            if (hit.empty()) continue;
            covered.insert(hit.begin(), hit.end());
            candidates.push_back({w, std::move(t)});
            eliminated.push_back(std::move(hit));
        }
        if (covered.size() != universe) continue;

        // Greedy set cover over the candidates, ties broken by family order.
        std::vector<std::size_t> chosen;
        SignSet so_far;
        while (so_far.size() != universe) {
            std::size_t best = candidates.size();
            std::size_t best_gain = 0;
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                std::size_t gain = 0;
                for (const auto& s : eliminated[i]) gain += so_far.contains(s) ? 0 : 1;
                if (gain > best_gain) {
                    best_gain = gain;
                    best = i;
                }
            }
            chosen.push_back(best);
            so_far.insert(eliminated[best].begin(), eliminated[best].end());
        }
        // Drop witnesses made redundant by later picks.
        for (std::size_t k = 0; k < chosen.size();) {
            SignSet rest;
            for (std::size_t r = 0; r < chosen.size(); ++r) {
                if (r != k) rest.insert(eliminated[chosen[r]].begin(), eliminated[chosen[r]].end());
            }
            if (rest.size() == universe) {
                chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(k));
            } else {
                ++k;
            }
        }
        std::sort(chosen.begin(), chosen.end());
        Certificate cert;
        cert.base_point = z;
        for (auto i : chosen) cert.witnesses.push_back(candidates[i]);
        return cert;
    }
    return std::nullopt;
}

bool verify_certificate(const MultilinearExpansion& e, const Certificate& certificate, const Limits& limits) {
    if (certificate.witnesses.empty()) return false;
    std::vector<TotalSignVector> signs;
    for (const auto& w : certificate.witnesses) {
        TotalSignVector replay = total_sign(e, certificate.base_point, w.functional);
        if (!(replay == w.total_sign)) return false;
        signs.push_back(std::move(replay));
    }
    const std::size_t n = n_of(e);
    return count_ze_oracle(signs, n, limits) == zs_size(n);
}

BooleanSensitivity boolean_sensitivity(const Gate& gate) {
    for (auto a : gate.arities()) {
        if (a != 2) throw DomainError("boolean_sensitivity needs every input to have exactly two truth values");
    }
    std::vector<RationalVector> distinct;
    for (const auto& out : gate.table()) {
        if (std::find(distinct.begin(), distinct.end(), out) == distinct.end()) distinct.push_back(out);
    }
    if (distinct.size() > 2) throw DomainError("boolean_sensitivity needs at most two distinct output values");

    BooleanSensitivity result;
    for (std::size_t flat = 0; flat < gate.base_point_count(); ++flat) {
        std::vector<std::size_t> z = gate.index_of(flat);
        const RationalVector& here = gate.table()[flat];
        std::size_t sensitive = 0;
        std::vector<std::size_t> stable;
        for (std::size_t i = 0; i < z.size(); ++i) {
            std::vector<std::size_t> flipped = z;
            flipped[i] = 1 - flipped[i];
            if (gate.output(flipped) != here) {
                ++sensitive;
            } else {
                stable.push_back(i);
            }
        }
        result.per_point.push_back(sensitive);
        result.stable_inputs.push_back(std::move(stable));
        result.max = std::max(result.max, sensitive);
    }
    return result;
}

RationalVector reduced_difference(const BarycentricPoint& x, const BarycentricPoint& y, const BasePoint& z) {
    if (x.size() != y.size() || x.size() != z.indices.size()) throw DomainError("reduced_difference: block mismatch");
    RationalVector out;
    for (std::size_t b = 0; b < x.size(); ++b) {
        if (x[b].size() != y[b].size()) throw DomainError("reduced_difference: arity mismatch");
        for (std::size_t j = 0; j < x[b].size(); ++j) {
            if (j != z.indices[b]) out.push_back(y[b][j] - x[b][j]);
        }
    }
    return out;
}

DataBound data_upper_bound(std::span<const ExperimentRecord> records, const MultilinearExpansion& e,
                           const Rational& collision_tol, const Rational& interior_margin, const Limits& limits) {
    if (interior_margin <= 0) throw DomainError("interior margin delta must be positive");
    if (collision_tol < 0) throw DomainError("collision tolerance eps must be nonnegative");
    if (e.term_count() > limits.max_base_points) {
        throw ResourceLimitError("gate has too many base points for a data bound (MVL_BASE_POINT_CAP)");
    }
    DataBound out;
    out.heuristic = collision_tol > 0;

    std::vector<std::size_t> accepted;
    for (std::size_t r = 0; r < records.size(); ++r) {
        const auto& rec = records[r];
        std::string reason;
        if (rec.point.size() != e.num_blocks()) {
            reason = "point has " + std::to_string(rec.point.size()) + " blocks, gate has " +
                     std::to_string(e.num_blocks());
        } else if (rec.output.size() != e.output_dim()) {
            reason = "output has dimension " + std::to_string(rec.output.size()) + ", gate has " +
                     std::to_string(e.output_dim());
        } else {
            for (std::size_t b = 0; b < rec.point.size() && reason.empty(); ++b) {
                if (rec.point[b].size() != e.arities()[b]) {
                    reason = "block " + std::to_string(b + 1) + " has the wrong number of coordinates";
                    break;
                }
                Rational sum = 0;
                for (const auto& t : rec.point[b]) {
                    sum += t;
                    if (t < interior_margin) {
                        reason = "coordinate " + to_string(t) + " in block " + std::to_string(b + 1) +
                                 " is below the interior margin " + to_string(interior_margin);
                        break;
                    }
                }
                if (reason.empty() && sum != 1) {
                    reason = "block " + std::to_string(b + 1) + " coordinates sum to " + to_string(sum);
                }
            }
        }
        if (reason.empty()) {
            accepted.push_back(r);
        } else {
            out.rejected.push_back({r, std::move(reason)});
        }
    }

    auto collide = [&](const RationalVector& a, const RationalVector& b) {
        for (std::size_t d = 0; d < a.size(); ++d) {
            Rational diff = a[d] - b[d];
            if (diff < 0) diff = -diff;
            if (diff > collision_tol) return false;
        }
        return true;
    };

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < accepted.size(); ++i) {
        for (std::size_t k = i + 1; k < accepted.size(); ++k) {
            const auto& a = records[accepted[i]];
            const auto& b = records[accepted[k]];
            if (a.point == b.point) continue;
            if (collide(a.output, b.output)) pairs.emplace_back(accepted[i], accepted[k]);
        }
    }
    out.collisions = pairs.size();
    if (pairs.empty()) return out;

    const std::size_t n = n_of(e);
    for (std::size_t flat = 0; flat < e.term_count(); ++flat) {
        BasePoint z{e.index_of(flat)};
        SignSet forbidden;
        for (const auto& [i, k] : pairs) {
            forbidden.insert(canonicalize(reduced_difference(records[i].point, records[k].point, z)).vector);
        }
        CsValue bound = cs_from_eliminated(n, count_ze_oracle(forbidden, n, limits));
        if (!out.bound || bound.value > out.bound->value) out.bound = bound;
        out.per_point.emplace_back(std::move(bound));
    }
    return out;
}

}  // namespace mvl
