#include "mvl/elim_count.hpp"

#include "mvl/errors.hpp"

#include <algorithm>

namespace mvl {

namespace {

void check_rows(const std::vector<SignVector>& rows) {
    if (rows.empty()) throw DomainError("a sign matrix needs at least one row");
    const std::size_t n = rows.front().size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != n) throw DomainError("sign matrix rows have different lengths");
        if (!rows[i].is_canonical()) {
            throw DomainError("sign matrix row '" + rows[i].str() + "' is not a canonical member of ZS_n");
        }
        for (std::size_t k = 0; k < i; ++k) {
            if (rows[k] == rows[i]) throw DomainError("sign matrix has duplicate row '" + rows[i].str() + "'");
        }
    }
}

Integer pow2(std::size_t e) { return Integer(1) << static_cast<unsigned>(e); }

}  // namespace

SignMatrix::SignMatrix(std::vector<SignVector> rows) : rows_(std::move(rows)) { check_rows(rows_); }

SignMatrix::SignMatrix(const SignSet& rows) : rows_(rows.begin(), rows.end()) { check_rows(rows_); }

std::vector<int> SignMatrix::column(std::size_t j) const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r[j]);
    return out;
}

std::size_t zero_columns(const SignMatrix& m) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < m.rows() && zero; ++i) zero = m.at(i, j) == 0;
        count += zero ? 1 : 0;
    }
    return count;
}

Integer count_ze_single(const SignVector& x) {
    if (!x.is_canonical()) throw DomainError("count_ze_single: '" + x.str() + "' is not canonical");
    const std::size_t z = x.zero_count();
    return pow_int(3, z) * (pow2(x.size() - z) - 1);
}

std::vector<std::size_t> bsp(const SignMatrix& m, const SignVector& alpha) {
    if (alpha.size() != m.rows()) {
        throw DomainError("bsp: alpha has length " + std::to_string(alpha.size()) + " but the matrix has " +
                          std::to_string(m.rows()) + " rows");
    }
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        bool nonzero = false;
        bool plus = true;   // every c_i in {0, alpha_i}
        bool minus = true;  // every c_i in {0, -alpha_i}
        for (std::size_t i = 0; i < m.rows(); ++i) {
            int c = m.at(i, j);
            if (c == 0) continue;
            nonzero = true;
            if (c != alpha[i]) plus = false;
            if (c != -alpha[i]) minus = false;
        }
        if (nonzero && (plus || minus)) out.push_back(j);
    }
    return out;
}

Integer count_ze_intersection(const SignMatrix& m, const Limits& limits) {
    const std::size_t rows = m.rows();
    // -(-2)^(m-1)
    Integer sum = (rows - 1) % 2 == 0 ? Integer(-pow2(rows - 1)) : pow2(rows - 1);
    for_each_zs(
        rows,
        [&](const SignVector& alpha) {
            const std::size_t z = alpha.zero_count();
            Integer term = pow2(z + bsp(m, alpha).size());
            if (z % 2 == 1) term = -term;
            sum += term;
        },
        limits);
    return pow_int(3, zero_columns(m)) * sum;
}

Integer count_ze_set(const SignSet& xs, const Limits& limits) {
    if (xs.empty()) throw DomainError("count_ze_set: X must be nonempty");
    const std::size_t m = xs.size();
    if (m > limits.max_inclusion_exclusion || m >= 63) {
        throw ResourceLimitError("inclusion-exclusion over " + std::to_string(m) +
                                 " vectors exceeds the subset cap m <= " +
                                 std::to_string(limits.max_inclusion_exclusion) + " (MVL_SUBSET_CAP)");
    }
    std::vector<SignVector> members(xs.begin(), xs.end());
    const std::size_t n = members.front().size();
    for (const auto& x : members) {
        if (x.size() != n) throw DomainError("count_ze_set: members have different lengths");
    }
    Integer total = 0;
    std::vector<SignVector> chosen;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        chosen.clear();
        for (std::size_t i = 0; i < m; ++i) {
            if (mask & (std::uint64_t{1} << i)) chosen.push_back(members[i]);
        }
        Integer term = count_ze_intersection(SignMatrix(chosen), limits);
        if (chosen.size() % 2 == 1) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

PairCounts count_pair(const PairColumnProfile& p) {
    if (p.a1 + p.a2 + p.b1 == 0 || p.a1 + p.a2 + p.b2 == 0) {
        throw DomainError("count_pair: profile describes a zero row, which is not in ZS_n");
    }
    if (p.b1 == 0 && p.b2 == 0 && (p.a1 == 0 || p.a2 == 0)) {
        throw DomainError("count_pair: profile describes two equal rows");
    }
    const Integer three_c = pow_int(3, p.c);
    const Integer split = pow2(p.b1 + p.b2) * (pow2(p.a1) + pow2(p.a2));
    PairCounts out;
    out.intersection = three_c * (split - pow2(p.b1 + 1) - pow2(p.b2 + 1) + 2);
    out.union_size = three_c * (pow_int(3, p.b1) * pow2(p.a1 + p.a2 + p.b2) +
                                pow_int(3, p.b2) * pow2(p.a1 + p.a2 + p.b1) - split - pow_int(3, p.b1) -
                                pow_int(3, p.b2) + pow2(p.b1 + 1) + pow2(p.b2 + 1) - 2);
    return out;
}

PairColumnProfile profile_pair(const SignMatrix& m) {
    if (m.rows() != 2) throw DomainError("profile_pair: needs exactly two rows");
    PairColumnProfile p;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const int top = m.at(0, j);
        const int bottom = m.at(1, j);
        if (top == 0 && bottom == 0) {
            ++p.c;
        } else if (bottom == 0) {
            ++p.b1;
        } else if (top == 0) {
            ++p.b2;
        } else if (top == bottom) {
            ++p.a1;
        } else {
            ++p.a2;
        }
    }
    return p;
}

std::uint64_t count_ze_oracle(std::span<const TotalSignVector> xs, std::size_t n, const Limits& limits) {
    for (const auto& t : xs) {
        if (t.size() != n) throw DomainError("count_ze_oracle: eliminator length differs from n");
    }
    std::uint64_t count = 0;
    if (xs.empty()) return 0;
    for_each_zs(
        n,
        [&](const SignVector& s) {
            if (std::any_of(xs.begin(), xs.end(), [&](const TotalSignVector& t) { return eliminates(t, s); })) {
                ++count;
            }
        },
        limits);
    return count;
}

std::uint64_t count_ze_oracle(const SignSet& xs, std::size_t n, const Limits& limits) {
    std::vector<TotalSignVector> ts(xs.begin(), xs.end());
    return count_ze_oracle(ts, n, limits);
}

std::uint64_t intersect_ze_oracle(const SignMatrix& m, const Limits& limits) {
    std::vector<TotalSignVector> rows(m.row_vectors().begin(), m.row_vectors().end());
    std::uint64_t count = 0;
    for_each_zs(
        m.cols(),
        [&](const SignVector& s) {
            if (std::all_of(rows.begin(), rows.end(), [&](const TotalSignVector& t) { return eliminates(t, s); })) {
                ++count;
            }
        },
        limits);
    return count;
}

}  // namespace mvl
