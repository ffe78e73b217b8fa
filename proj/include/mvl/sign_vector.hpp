#pragma once

#include "mvl/limits.hpp"
#include "mvl/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mvl {

// An n-tuple over {-1, 0, +1}. Ordered by the enumeration order of ZS_n:
// lexicographic, leading coordinate first, with 0 < +1 < -1 per coordinate.
class SignVector {
public:
    explicit SignVector(std::vector<std::int8_t> entries);

    // Parses the compact alphabet {+,0,-}.
    static SignVector parse(std::string_view text);
    // The unit vector e_index (0-based) of length n.
    static SignVector unit(std::size_t n, std::size_t index);

    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    std::span<const std::int8_t> entries() const noexcept { return entries_; }

    bool is_zero() const noexcept;
    // Nonzero with first nonzero entry +1, i.e. a member of ZS_n.
    bool is_canonical() const noexcept;
    std::size_t zero_count() const noexcept;
    bool has_no_zeros() const noexcept { return zero_count() == 0; }

    SignVector negated() const;
    std::string str() const;

    friend bool operator==(const SignVector&, const SignVector&) = default;
    friend std::strong_ordering operator<=>(const SignVector& lhs, const SignVector& rhs);

private:
    std::vector<std::int8_t> entries_;
};

using SignSet = std::set<SignVector>;

enum class Sign : std::int8_t { negative = -1, zero = 0, positive = 1, undetermined = 2 };

char to_char(Sign s);

// An n-tuple over {-1, 0, +1, u}: the value of a total sign Sign_C(g).
class TotalSignVector {
public:
    explicit TotalSignVector(std::vector<Sign> entries);
    TotalSignVector(const SignVector& v);  // NOLINT: every sign vector is a total sign

    // Parses the alphabet {+,0,-,u}.
    static TotalSignVector parse(std::string_view text);

    std::size_t size() const noexcept { return entries_.size(); }
    Sign operator[](std::size_t i) const { return entries_[i]; }
    std::span<const Sign> entries() const noexcept { return entries_; }

    // Replaces every definite entry by its negative; u entries stay.
    TotalSignVector negated() const;
    std::string str() const;

    friend bool operator==(const TotalSignVector&, const TotalSignVector&) = default;

private:
    std::vector<Sign> entries_;
};

struct CanonicalForm {
    SignVector vector;
    int flip;  // -1 when the entrywise signs were negated to reach canonical form
};

// Entrywise sgn, negated when the first nonzero entry is negative. Throws DomainError on zero input.
CanonicalForm canonicalize(std::span<const Rational> values);
CanonicalForm canonicalize(std::span<const int> values);
CanonicalForm canonicalize(const SignVector& v);

// Number of elements of ZS_n, (3^n - 1) / 2.
std::uint64_t zs_size(std::size_t n);

// Visits ZS_n in enumeration order without materializing it.
void for_each_zs(std::size_t n, const std::function<void(const SignVector&)>& visit,
                 const Limits& limits = default_limits());

std::vector<SignVector> enumerate_zs(std::size_t n, const Limits& limits = default_limits());

// Condition (i) of elimination: t and s share a definite nonzero coordinate.
// An undetermined entry of t never witnesses it, since (iii) forces s to vanish there.
bool shares_definite_support(const TotalSignVector& t, const SignVector& s);

bool eliminates(const TotalSignVector& t, const SignVector& s);

// ZE(X): all members of ZS_n eliminated by some member of X.
SignSet ze(std::span<const TotalSignVector> eliminators, std::size_t n,
           const Limits& limits = default_limits());
SignSet ze(const SignSet& eliminators, std::size_t n, const Limits& limits = default_limits());

// Column permutation: result[i] = x[sigma[i]] (0-based), re-canonicalized.
SignVector permute(std::span<const std::size_t> sigma, const SignVector& x);
SignSet permute(std::span<const std::size_t> sigma, const SignSet& xs);

// x_j^-: negate entry j (0-based) and re-canonicalize.
SignVector negate_column(const SignVector& x, std::size_t j);
SignSet negate_column(const SignSet& xs, std::size_t j);

inline std::size_t zero_count(const SignVector& x) { return x.zero_count(); }

}  // namespace mvl
