#include "mvl/sign_vector.hpp"

#include "mvl/errors.hpp"

#include <algorithm>

namespace mvl {

namespace {

// Position of a sign in the per-coordinate order 0 < +1 < -1.
int order_key(std::int8_t v) { return v == 0 ? 0 : (v == 1 ? 1 : 2); }

void check_enum_cap(std::size_t n, const Limits& limits) {
    if (n == 0) throw DomainError("sign vectors need length n >= 1");
    if (n > limits.max_enum_n) {
        throw ResourceLimitError("enumerating ZS_" + std::to_string(n) + " exceeds the enumeration cap n <= " +
                                 std::to_string(limits.max_enum_n) + " (MVL_ENUM_CAP)");
    }
}

CanonicalForm canonical_from_signs(std::vector<std::int8_t> signs) {
    auto first = std::find_if(signs.begin(), signs.end(), [](std::int8_t v) { return v != 0; });
    if (first == signs.end()) throw DomainError("the zero vector has no canonical sign class");
    int flip = 1;
    if (*first < 0) {
        flip = -1;
        for (auto& v : signs) v = static_cast<std::int8_t>(-v);
    }
    return {SignVector(std::move(signs)), flip};
}

}  // namespace

SignVector::SignVector(std::vector<std::int8_t> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DomainError("sign vectors need length n >= 1");
    for (auto v : entries_) {
        if (v < -1 || v > 1) throw DomainError("sign vector entries must lie in {-1, 0, +1}");
    }
}

SignVector SignVector::parse(std::string_view text) {
    std::vector<std::int8_t> entries;
    entries.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '+': entries.push_back(1); break;
            case '0': entries.push_back(0); break;
            case '-': entries.push_back(-1); break;
            default:
                throw ParseError("bad sign vector '" + std::string(text) + "': expected characters from {+,0,-}");
        }
    }
    if (entries.empty()) throw ParseError("empty sign vector");
    return SignVector(std::move(entries));
}

SignVector SignVector::unit(std::size_t n, std::size_t index) {
    if (index >= n) throw DomainError("unit vector index out of range");
    std::vector<std::int8_t> entries(n, 0);
    entries[index] = 1;
    return SignVector(std::move(entries));
}

bool SignVector::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](std::int8_t v) { return v == 0; });
}

bool SignVector::is_canonical() const noexcept {
    for (auto v : entries_) {
        if (v != 0) return v == 1;
    }
    return false;
}

std::size_t SignVector::zero_count() const noexcept {
    return static_cast<std::size_t>(std::count(entries_.begin(), entries_.end(), std::int8_t{0}));
}

SignVector SignVector::negated() const {
    std::vector<std::int8_t> out(entries_);
    for (auto& v : out) v = static_cast<std::int8_t>(-v);
    return SignVector(std::move(out));
}

std::string SignVector::str() const {
    std::string out;
    out.reserve(entries_.size());
    for (auto v : entries_) out.push_back(v > 0 ? '+' : (v < 0 ? '-' : '0'));
    return out;
}

std::strong_ordering operator<=>(const SignVector& lhs, const SignVector& rhs) {
    if (lhs.size() != rhs.size()) return lhs.size() <=> rhs.size();
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        int a = order_key(lhs.entries_[i]);
        int b = order_key(rhs.entries_[i]);
        if (a != b) return a <=> b;
    }
    return std::strong_ordering::equal;
}

char to_char(Sign s) {
    switch (s) {
        case Sign::negative: return '-';
        case Sign::zero: return '0';
        case Sign::positive: return '+';
        case Sign::undetermined: return 'u';
    }
    return '?';
}

TotalSignVector::TotalSignVector(std::vector<Sign> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DomainError("total sign vectors need length n >= 1");
}

TotalSignVector::TotalSignVector(const SignVector& v) {
    entries_.reserve(v.size());
    for (auto e : v.entries()) entries_.push_back(static_cast<Sign>(e));
}

TotalSignVector TotalSignVector::parse(std::string_view text) {
    std::vector<Sign> entries;
    for (char c : text) {
        switch (c) {
            case '+': entries.push_back(Sign::positive); break;
            case '0': entries.push_back(Sign::zero); break;
            case '-': entries.push_back(Sign::negative); break;
            case 'u': entries.push_back(Sign::undetermined); break;
            default:
                throw ParseError("bad total sign '" + std::string(text) + "': expected characters from {+,0,-,u}");
        }
    }
    if (entries.empty()) throw ParseError("empty total sign vector");
    return TotalSignVector(std::move(entries));
}

TotalSignVector TotalSignVector::negated() const {
    std::vector<Sign> out(entries_);
    for (auto& s : out) {
        if (s == Sign::positive) s = Sign::negative;
        else if (s == Sign::negative) s = Sign::positive;
    }
    return TotalSignVector(std::move(out));
}

std::string TotalSignVector::str() const {
    std::string out;
    out.reserve(entries_.size());
    for (auto s : entries_) out.push_back(to_char(s));
    return out;
}

CanonicalForm canonicalize(std::span<const Rational> values) {
    std::vector<std::int8_t> signs;
    signs.reserve(values.size());
    for (const auto& v : values) signs.push_back(static_cast<std::int8_t>(sgn(v)));
    if (signs.empty()) throw DomainError("cannot canonicalize an empty vector");
    return canonical_from_signs(std::move(signs));
}

CanonicalForm canonicalize(std::span<const int> values) {
    std::vector<std::int8_t> signs;
    signs.reserve(values.size());
    for (int v : values) signs.push_back(static_cast<std::int8_t>((v > 0) - (v < 0)));
    if (signs.empty()) throw DomainError("cannot canonicalize an empty vector");
    return canonical_from_signs(std::move(signs));
}

CanonicalForm canonicalize(const SignVector& v) {
    return canonical_from_signs(std::vector<std::int8_t>(v.entries().begin(), v.entries().end()));
}

std::uint64_t zs_size(std::size_t n) {
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < n; ++i) p *= 3;
    return (p - 1) / 2;
}

void for_each_zs(std::size_t n, const std::function<void(const SignVector&)>& visit, const Limits& limits) {
    check_enum_cap(n, limits);
    // Odometer over {0, +1, -1}^n in lexicographic order; digit d maps to 0, +1, -1.
    static constexpr std::int8_t digit_value[3] = {0, 1, -1};
    std::vector<int> digits(n, 0);
    std::vector<std::int8_t> entries(n, 0);
    while (true) {
        std::size_t pos = n;
        while (pos > 0 && digits[pos - 1] == 2) {
            digits[pos - 1] = 0;
            entries[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) return;
        ++digits[pos - 1];
        entries[pos - 1] = digit_value[digits[pos - 1]];
        auto first = std::find_if(entries.begin(), entries.end(), [](std::int8_t v) { return v != 0; });
        if (*first == 1) visit(SignVector(entries));
    }
}

std::vector<SignVector> enumerate_zs(std::size_t n, const Limits& limits) {
    check_enum_cap(n, limits);
    std::vector<SignVector> out;
    out.reserve(static_cast<std::size_t>(zs_size(n)));
    for_each_zs(n, [&](const SignVector& v) { out.push_back(v); }, limits);
    return out;
}

bool shares_definite_support(const TotalSignVector& t, const SignVector& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        Sign ti = t[i];
        if ((ti == Sign::positive || ti == Sign::negative) && s[i] != 0) return true;
    }
    return false;
}

bool eliminates(const TotalSignVector& t, const SignVector& s) {
    if (t.size() != s.size()) {
        throw DomainError("eliminates: length mismatch (" + std::to_string(t.size()) + " vs " +
                          std::to_string(s.size()) + ")");
    }
    int k = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        Sign ti = t[i];
        int si = s[i];
        if (ti == Sign::undetermined) {
            if (si != 0) return false;
            continue;
        }
        if (ti == Sign::zero || si == 0) continue;
        int ratio = static_cast<int>(ti) * si;
        if (k == 0) {
            k = ratio;
        } else if (k != ratio) {
            return false;
        }
    }
    return shares_definite_support(t, s);
}

SignSet ze(std::span<const TotalSignVector> eliminators, std::size_t n, const Limits& limits) {
    for (const auto& t : eliminators) {
        if (t.size() != n) throw DomainError("ze: eliminator '" + t.str() + "' does not have length " + std::to_string(n));
    }
    SignSet out;
    if (eliminators.empty()) return out;
    for_each_zs(
        n,
        [&](const SignVector& s) {
            for (const auto& t : eliminators) {
                if (eliminates(t, s)) {
                    out.insert(out.end(), s);
                    return;
                }
            }
        },
        limits);
    return out;
}

SignSet ze(const SignSet& eliminators, std::size_t n, const Limits& limits) {
    std::vector<TotalSignVector> ts(eliminators.begin(), eliminators.end());
    return ze(ts, n, limits);
}

SignVector permute(std::span<const std::size_t> sigma, const SignVector& x) {
    const std::size_t n = x.size();
    if (sigma.size() != n) throw DomainError("permute: permutation length differs from vector length");
    std::vector<bool> seen(n, false);
    std::vector<std::int8_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sigma[i] >= n || seen[sigma[i]]) throw DomainError("permute: argument is not a permutation");
        seen[sigma[i]] = true;
        out[i] = static_cast<std::int8_t>(x[sigma[i]]);
    }
    return canonical_from_signs(std::move(out)).vector;
}

SignSet permute(std::span<const std::size_t> sigma, const SignSet& xs) {
    SignSet out;
    for (const auto& x : xs) out.insert(permute(sigma, x));
    return out;
}

SignVector negate_column(const SignVector& x, std::size_t j) {
    if (j >= x.size()) throw DomainError("negate_column: index " + std::to_string(j) + " out of range");
    std::vector<std::int8_t> out(x.entries().begin(), x.entries().end());
    out[j] = static_cast<std::int8_t>(-out[j]);
    return canonical_from_signs(std::move(out)).vector;
}

SignSet negate_column(const SignSet& xs, std::size_t j) {
    SignSet out;
    for (const auto& x : xs) out.insert(negate_column(x, j));
    return out;
}

}  // namespace mvl
