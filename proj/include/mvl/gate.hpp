#pragma once

#include "mvl/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mvl {

// A vertex tuple z = (w(1, j(z,1)), ..., w(k, j(z,k))), stored as the indices j(z, i).
struct BasePoint {
    std::vector<std::size_t> indices;

    // The same base point with block `block` dropped.
    BasePoint without(std::size_t block) const;
    friend bool operator==(const BasePoint&, const BasePoint&) = default;
};

// One list of barycentric coordinates per input block.
using BarycentricPoint = std::vector<RationalVector>;

// Homogeneous coefficient tensor of a multilinear map on a product of simplices: the
// coefficient at index (j_1, ..., j_k) multiplies the monomial t_{1,j_1} * ... * t_{k,j_k}.
// Index tuples are stored row-major (last block varies fastest). With zero blocks the
// expansion is a single constant.
class MultilinearExpansion {
public:
    MultilinearExpansion(std::vector<std::size_t> arities, std::size_t output_dim,
                         std::vector<RationalVector> coefficients);

    const std::vector<std::size_t>& arities() const noexcept { return arities_; }
    std::size_t num_blocks() const noexcept { return arities_.size(); }
    std::size_t output_dim() const noexcept { return output_dim_; }
    std::size_t term_count() const noexcept { return coefficients_.size(); }

    const RationalVector& coefficient(std::size_t flat) const { return coefficients_[flat]; }
    const RationalVector& coefficient(std::span<const std::size_t> index) const;
    const std::vector<RationalVector>& coefficients() const noexcept { return coefficients_; }

    std::size_t flat_index(std::span<const std::size_t> index) const;
    std::vector<std::size_t> index_of(std::size_t flat) const;

    // Exact value at a point of the product of simplices. Each block must be a list of
    // nonnegative rationals summing to 1.
    RationalVector evaluate(const BarycentricPoint& point) const;

    // The scalar form w . e.
    MultilinearExpansion project(std::span<const Rational> w) const;

    // Partial derivative of the reduced map (base coordinate of block `block` eliminated via
    // t_{block, z} = 1 - sum of the others) with respect to t_{block, coord}: the coefficient
    // slice at coord minus the slice at the base index. The result lives on the remaining blocks.
    MultilinearExpansion reduced_partial(const BasePoint& z, std::size_t block, std::size_t coord) const;

    bool is_zero() const;

    friend bool operator==(const MultilinearExpansion&, const MultilinearExpansion&) = default;

private:
    std::vector<std::size_t> arities_;
    std::size_t output_dim_;
    std::vector<RationalVector> coefficients_;
};

// N = n_1 + ... + n_k - k, the number of reduced variables.
std::size_t n_of(const MultilinearExpansion& e);
std::size_t n_of(std::span<const std::size_t> arities);

struct OutputLabel {
    std::string name;
    RationalVector output;
};

// A complete truth table from T_1 x ... x T_k into R^m.
class Gate {
public:
    struct Entry {
        std::vector<std::size_t> index;
        RationalVector output;
    };

    // Validates arities (each >= 2), output dimensions, completeness and uniqueness of the
    // entries, and label shapes. Missing tuples are listed in the ValidationError message.
    static Gate from_entries(std::vector<std::size_t> arities, std::size_t output_dim, std::vector<Entry> entries,
                             std::vector<std::vector<std::string>> input_labels = {},
                             std::vector<OutputLabel> output_labels = {});

    // Row-major table (last input varies fastest).
    Gate(std::vector<std::size_t> arities, std::size_t output_dim, std::vector<RationalVector> table,
         std::vector<std::vector<std::string>> input_labels = {}, std::vector<OutputLabel> output_labels = {});

    const std::vector<std::size_t>& arities() const noexcept { return arities_; }
    std::size_t num_inputs() const noexcept { return arities_.size(); }
    std::size_t output_dim() const noexcept { return output_dim_; }
    const std::vector<RationalVector>& table() const noexcept { return table_; }
    const RationalVector& output(std::span<const std::size_t> index) const;
    const std::vector<std::vector<std::string>>& input_labels() const noexcept { return input_labels_; }
    const std::vector<OutputLabel>& output_labels() const noexcept { return output_labels_; }

    std::size_t flat_index(std::span<const std::size_t> index) const;
    std::vector<std::size_t> index_of(std::size_t flat) const;
    std::size_t base_point_count() const noexcept { return table_.size(); }
    std::vector<BasePoint> base_points() const;

    // Name of the output vector, if labelled.
    std::optional<std::string> output_name(const RationalVector& output) const;

private:
    std::vector<std::size_t> arities_;
    std::size_t output_dim_;
    std::vector<RationalVector> table_;
    std::vector<std::vector<std::string>> input_labels_;
    std::vector<OutputLabel> output_labels_;
};

MultilinearExpansion expand(const Gate& gate);

}  // namespace mvl
