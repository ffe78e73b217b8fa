#include "mvl/cover_poset.hpp"

#include "mvl/errors.hpp"

#include <algorithm>
#include <cstdint>

namespace mvl {

namespace {

// Bitset over the members of ZS_n, indexed by enumeration position.
class MemberBits {
public:
    explicit MemberBits(std::size_t bits) : words_((bits + 63) / 64, 0), bits_(bits) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

    MemberBits& operator|=(const MemberBits& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
        return *this;
    }

    bool full() const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t expect = ~std::uint64_t{0};
            if (w + 1 == words_.size() && bits_ % 64 != 0) expect = (std::uint64_t{1} << (bits_ % 64)) - 1;
            if (words_[w] != expect) return false;
        }
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
    std::size_t bits_;
};

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i stays integral at each step
        unsigned __int128 next = static_cast<unsigned __int128>(result) * (n - k + i) / i;
        if (next > cap) return cap + 1;
        result = static_cast<std::uint64_t>(next);
    }
    return result;
}

class CoverSearch {
public:
    CoverSearch(std::size_t n, const Limits& limits) : members_(enumerate_zs(n, limits)) {
        for (const auto& t : members_) {
            MemberBits bits(members_.size());
            TotalSignVector tt(t);
            for (std::size_t i = 0; i < members_.size(); ++i) {
                if (eliminates(tt, members_[i])) bits.set(i);
            }
            eliminated_.push_back(std::move(bits));
        }
    }

    std::size_t universe() const { return members_.size(); }

    void run(std::size_t size, std::vector<SignSet>& out) {
        chosen_.clear();
        target_ = size;
        out_ = &out;
        recurse(0, MemberBits(members_.size()));
    }

private:
    void recurse(std::size_t start, const MemberBits& covered) {
        if (chosen_.size() == target_) {
            if (covered.full() && is_minimal()) {
                SignSet set;
                for (auto i : chosen_) set.insert(members_[i]);
                out_->push_back(std::move(set));
            }
            return;
        }
        const std::size_t remaining = target_ - chosen_.size();
        for (std::size_t i = start; i + remaining <= members_.size(); ++i) {
            MemberBits next = covered;
            next |= eliminated_[i];
            chosen_.push_back(i);
            recurse(i + 1, next);
            chosen_.pop_back();
        }
    }

    bool is_minimal() const {
        for (std::size_t skip = 0; skip < chosen_.size(); ++skip) {
            MemberBits rest(members_.size());
            for (std::size_t k = 0; k < chosen_.size(); ++k) {
                if (k != skip) rest |= eliminated_[chosen_[k]];
            }
            if (rest.full()) return false;
        }
        return true;
    }

    std::vector<SignVector> members_;
    std::vector<MemberBits> eliminated_;
    std::vector<std::size_t> chosen_;
    std::size_t target_ = 0;
    std::vector<SignSet>* out_ = nullptr;
};

void check_members(const SignSet& xs, std::size_t n) {
    for (const auto& x : xs) {
        if (x.size() != n) throw DomainError("cover member '" + x.str() + "' does not have length " + std::to_string(n));
        if (!x.is_canonical()) throw DomainError("cover member '" + x.str() + "' is not canonical");
    }
}

}  // namespace

bool is_eliminating_cover(const SignSet& xs, std::size_t n, const Limits& limits) {
    check_members(xs, n);
    return ze(xs, n, limits).size() == zs_size(n);
}

bool is_minimal_cover(const SignSet& xs, std::size_t n, const Limits& limits) {
    if (!is_eliminating_cover(xs, n, limits)) {
        throw DomainError("is_minimal_cover: the given set is not an eliminating cover");
    }
    for (const auto& x : xs) {
        SignSet rest = xs;
        rest.erase(x);
        if (is_eliminating_cover(rest, n, limits)) return false;
    }
    return true;
}

SignSet zs0(std::size_t n, const Limits& limits) {
    SignSet out;
    for_each_zs(
        n, [&](const SignVector& v) { if (v.has_no_zeros()) out.insert(out.end(), v); }, limits);
    return out;
}

std::size_t column_rank(const SignMatrix& m) {
    // Gaussian elimination on the transpose (columns as rows); row rank equals column rank.
    std::vector<RationalVector> a(m.rows(), RationalVector(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < a.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Rational factor = a[r][col] / a[rank][col];
            for (std::size_t c = col; c < m.cols(); ++c) a[r][c] -= factor * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::vector<SignSet> minimal_covers(std::size_t n, std::optional<std::size_t> max_size, const Limits& limits) {
    if (n == 0) throw DomainError("minimal_covers: n must be >= 1");
    const std::uint64_t universe = zs_size(n);
    if (!max_size) {
        if (n > 3) {
            throw ResourceLimitError("exhaustive cover search is limited to n <= 3; pass a maximum size for n = " +
                                     std::to_string(n));
        }
        max_size = static_cast<std::size_t>(universe);
    }
    const std::size_t top = static_cast<std::size_t>(std::min<std::uint64_t>(*max_size, universe));
    std::uint64_t candidates = 0;
    for (std::size_t k = 1; k <= top; ++k) {
        candidates += binomial_saturating(universe, k, limits.max_cover_candidates);
        if (candidates > limits.max_cover_candidates) {
            throw ResourceLimitError("cover search over subsets of ZS_" + std::to_string(n) + " of size <= " +
                                     std::to_string(top) + " exceeds the search cap of " +
                                     std::to_string(limits.max_cover_candidates) + " candidates (MVL_COVER_SEARCH_CAP)");
        }
    }
    CoverSearch search(n, limits);
    std::vector<SignSet> out;
    for (std::size_t k = 1; k <= top; ++k) search.run(k, out);
    return out;
}

CoverReport analyze_cover(const SignSet& xs, std::size_t n, const Limits& limits) {
    CoverReport report;
    report.subset = xs;
    report.is_cover = is_eliminating_cover(xs, n, limits);
    if (report.is_cover) report.is_minimal = is_minimal_cover(xs, n, limits);
    report.rank = xs.empty() ? 0 : column_rank(SignMatrix(xs));
    return report;
}

bool check_orthogonality(const SignVector& x, std::span<const Rational> v) {
    if (v.size() != x.size()) throw DomainError("check_orthogonality: length mismatch");
    const SignVector s = canonicalize(v).vector;  // throws on v = 0
    // eliminates is symmetric under s -> -s, so one test covers "s or -s".
    const bool premise = eliminates(TotalSignVector(x), s);
    RationalVector xr(x.entries().begin(), x.entries().end());
    return !premise || dot(v, xr) != 0;
}

}  // namespace mvl
