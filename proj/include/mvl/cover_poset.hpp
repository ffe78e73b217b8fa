#pragma once

#include "mvl/elim_count.hpp"
#include "mvl/limits.hpp"
#include "mvl/rational.hpp"
#include "mvl/sign_vector.hpp"

#include <optional>
#include <span>
#include <vector>

namespace mvl {

struct CoverReport {
    SignSet subset;
    bool is_cover = false;
    std::optional<bool> is_minimal;  // unset when not checked
    std::size_t rank = 0;            // column rank of M_X over the rationals
};

// X is in E(ZS_n), i.e. ZE(X) = ZS_n.
bool is_eliminating_cover(const SignSet& xs, std::size_t n, const Limits& limits = default_limits());

// No proper subset of X is a cover. Removing one element at a time suffices because ZE is monotone.
// Throws DomainError when X is not a cover.
bool is_minimal_cover(const SignSet& xs, std::size_t n, const Limits& limits = default_limits());

// ZS_n^0: the 2^(n-1) canonical vectors without zero entries.
SignSet zs0(std::size_t n, const Limits& limits = default_limits());

std::size_t column_rank(const SignMatrix& m);

// All minimal covers with at most max_size elements, ordered by size and then by the
// enumeration order of their members. Without max_size the search is exhaustive (n <= 3).
std::vector<SignSet> minimal_covers(std::size_t n, std::optional<std::size_t> max_size,
                                    const Limits& limits = default_limits());

CoverReport analyze_cover(const SignSet& xs, std::size_t n, const Limits& limits = default_limits());

// Holds iff "s or -s in ZE({x}) implies v . x != 0", where s is the sign vector of v.
bool check_orthogonality(const SignVector& x, std::span<const Rational> v);

}  // namespace mvl
