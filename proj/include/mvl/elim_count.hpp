#pragma once

#include "mvl/limits.hpp"
#include "mvl/rational.hpp"
#include "mvl/sign_vector.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace mvl {

// M_X: the m x n matrix whose rows are the members of X. Rows are canonical and pairwise distinct.
class SignMatrix {
public:
    explicit SignMatrix(std::vector<SignVector> rows);
    explicit SignMatrix(const SignSet& rows);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return rows_.front().size(); }
    const SignVector& row(std::size_t i) const { return rows_[i]; }
    const std::vector<SignVector>& row_vectors() const noexcept { return rows_; }
    int at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    std::vector<int> column(std::size_t j) const;

private:
    std::vector<SignVector> rows_;
};

struct PairColumnProfile {
    std::size_t a1 = 0;  // columns +-(1, 1)
    std::size_t a2 = 0;  // columns +-(1, -1)
    std::size_t b1 = 0;  // columns +-(1, 0)
    std::size_t b2 = 0;  // columns +-(0, 1)
    std::size_t c = 0;   // zero columns

    std::size_t n() const noexcept { return a1 + a2 + b1 + b2 + c; }
    friend bool operator==(const PairColumnProfile&, const PairColumnProfile&) = default;
};

struct PairCounts {
    Integer intersection;
    Integer union_size;
};

std::size_t zero_columns(const SignMatrix& m);

// |ZE({x})| = 3^z(x) * (2^(n - z(x)) - 1).
Integer count_ze_single(const SignVector& x);

// BSp(X, alpha): positions j whose column c is nonzero with every c_i in {0, alpha_i},
// or every c_i in {0, -alpha_i}. Positions are counted, so equal columns count separately.
std::vector<std::size_t> bsp(const SignMatrix& m, const SignVector& alpha);

// |ZE(X^1) cap ... cap ZE(X^m)| by the closed form summing over alpha in ZS_m.
Integer count_ze_intersection(const SignMatrix& m, const Limits& limits = default_limits());

// |ZE(X)| by inclusion-exclusion over the nonempty subfamilies of X.
Integer count_ze_set(const SignSet& xs, const Limits& limits = default_limits());

// Closed forms for a two-row matrix described by its column profile.
PairCounts count_pair(const PairColumnProfile& profile);

// Classifies each column of a two-row matrix up to sign.
PairColumnProfile profile_pair(const SignMatrix& m);

// Brute force: filter ZS_n through eliminates. No closed forms involved.
std::uint64_t count_ze_oracle(std::span<const TotalSignVector> xs, std::size_t n,
                              const Limits& limits = default_limits());
std::uint64_t count_ze_oracle(const SignSet& xs, std::size_t n, const Limits& limits = default_limits());
std::uint64_t intersect_ze_oracle(const SignMatrix& m, const Limits& limits = default_limits());

}  // namespace mvl
