#include "mvl/gate.hpp"

#include "mvl/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace mvl {

namespace {

std::size_t tensor_size(std::span<const std::size_t> arities) {
    std::size_t size = 1;
    for (auto a : arities) {
        if (a != 0 && size > std::numeric_limits<std::size_t>::max() / a) {
            throw ResourceLimitError("truth table size overflows");
        }
        size *= a;
    }
    return size;
}

std::size_t flatten(std::span<const std::size_t> arities, std::span<const std::size_t> index) {
    if (index.size() != arities.size()) {
        throw DomainError("index tuple has " + std::to_string(index.size()) + " entries, expected " +
                          std::to_string(arities.size()));
    }
    std::size_t flat = 0;
    for (std::size_t b = 0; b < arities.size(); ++b) {
        if (index[b] >= arities[b]) {
            throw DomainError("index " + std::to_string(index[b]) + " out of range for input " + std::to_string(b + 1) +
                              " of arity " + std::to_string(arities[b]));
        }
        flat = flat * arities[b] + index[b];
    }
    return flat;
}

std::vector<std::size_t> unflatten(std::span<const std::size_t> arities, std::size_t flat) {
    std::vector<std::size_t> index(arities.size());
    for (std::size_t b = arities.size(); b-- > 0;) {
        index[b] = flat % arities[b];
        flat /= arities[b];
    }
    return index;
}

std::string format_index(std::span<const std::size_t> index) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < index.size(); ++i) os << (i ? "," : "") << index[i];
    os << ')';
    return os.str();
}

void validate_labels(const std::vector<std::size_t>& arities, std::size_t output_dim,
                     const std::vector<std::vector<std::string>>& input_labels,
                     const std::vector<OutputLabel>& output_labels) {
    if (!input_labels.empty()) {
        if (input_labels.size() != arities.size()) {
            throw ValidationError("input_labels must give one label list per input");
        }
        for (std::size_t b = 0; b < arities.size(); ++b) {
            if (input_labels[b].size() != arities[b]) {
                throw ValidationError("input_labels for input " + std::to_string(b + 1) + " must have " +
                                      std::to_string(arities[b]) + " entries");
            }
        }
    }
    for (std::size_t i = 0; i < output_labels.size(); ++i) {
        if (output_labels[i].output.size() != output_dim) {
            throw ValidationError("output label '" + output_labels[i].name + "' has the wrong dimension");
        }
        for (std::size_t k = 0; k < i; ++k) {
            if (output_labels[k].output == output_labels[i].output || output_labels[k].name == output_labels[i].name) {
                throw ValidationError("output label '" + output_labels[i].name + "' duplicates an earlier label");
            }
        }
    }
}

}  // namespace

BasePoint BasePoint::without(std::size_t block) const {
    if (block >= indices.size()) throw DomainError("base point has no block " + std::to_string(block));
    BasePoint out;
    out.indices.reserve(indices.size() - 1);
    for (std::size_t b = 0; b < indices.size(); ++b) {
        if (b != block) out.indices.push_back(indices[b]);
    }
    return out;
}

MultilinearExpansion::MultilinearExpansion(std::vector<std::size_t> arities, std::size_t output_dim,
                                           std::vector<RationalVector> coefficients)
    : arities_(std::move(arities)), output_dim_(output_dim), coefficients_(std::move(coefficients)) {
    if (output_dim_ == 0) throw DomainError("expansions need output dimension >= 1");
    for (auto a : arities_) {
        if (a < 1) throw DomainError("expansion blocks need at least one coordinate");
    }
    if (coefficients_.size() != tensor_size(arities_)) {
        throw DomainError("coefficient tensor has " + std::to_string(coefficients_.size()) + " entries, expected " +
                          std::to_string(tensor_size(arities_)));
    }
    for (const auto& c : coefficients_) {
        if (c.size() != output_dim_) throw DomainError("coefficient vector has the wrong output dimension");
    }
}

const RationalVector& MultilinearExpansion::coefficient(std::span<const std::size_t> index) const {
    return coefficients_[flat_index(index)];
}

std::size_t MultilinearExpansion::flat_index(std::span<const std::size_t> index) const {
    return flatten(arities_, index);
}

std::vector<std::size_t> MultilinearExpansion::index_of(std::size_t flat) const {
    return unflatten(arities_, flat);
}

RationalVector MultilinearExpansion::evaluate(const BarycentricPoint& point) const {
    if (point.size() != arities_.size()) {
        throw DomainError("point has " + std::to_string(point.size()) + " blocks, expected " +
                          std::to_string(arities_.size()));
    }
    for (std::size_t b = 0; b < arities_.size(); ++b) {
        if (point[b].size() != arities_[b]) {
            throw DomainError("block " + std::to_string(b + 1) + " has " + std::to_string(point[b].size()) +
                              " coordinates, expected " + std::to_string(arities_[b]));
        }
        Rational sum = 0;
        for (const auto& t : point[b]) {
            if (t < 0) throw DomainError("barycentric coordinate " + to_string(t) + " is negative");
            sum += t;
        }
        if (sum != 1) {
            throw DomainError("barycentric coordinates of block " + std::to_string(b + 1) + " sum to " + to_string(sum));
        }
    }
    RationalVector value(output_dim_, Rational(0));
    std::vector<std::size_t> index(arities_.size(), 0);
    for (std::size_t flat = 0; flat < coefficients_.size(); ++flat) {
        Rational weight = 1;
        for (std::size_t b = 0; b < arities_.size() && weight != 0; ++b) weight *= point[b][index[b]];
        if (weight != 0) {
            for (std::size_t d = 0; d < output_dim_; ++d) value[d] += weight * coefficients_[flat][d];
        }
        for (std::size_t b = arities_.size(); b-- > 0;) {
            if (++index[b] < arities_[b]) break;
            index[b] = 0;
        }
    }
    return value;
}

MultilinearExpansion MultilinearExpansion::project(std::span<const Rational> w) const {
    if (w.size() != output_dim_) {
        throw DomainError("functional has length " + std::to_string(w.size()) + ", expected " +
                          std::to_string(output_dim_));
    }
    std::vector<RationalVector> scalar;
    scalar.reserve(coefficients_.size());
    for (const auto& c : coefficients_) scalar.push_back({dot(w, c)});
    return MultilinearExpansion(arities_, 1, std::move(scalar));
}

MultilinearExpansion MultilinearExpansion::reduced_partial(const BasePoint& z, std::size_t block,
                                                           std::size_t coord) const {
    if (z.indices.size() != arities_.size()) throw DomainError("base point does not match the expansion's blocks");
    flatten(arities_, z.indices);  // bounds check
    if (block >= arities_.size()) throw DomainError("block " + std::to_string(block) + " out of range");
    if (coord >= arities_[block]) throw DomainError("coordinate " + std::to_string(coord) + " out of range");
    if (coord == z.indices[block]) {
        throw DomainError("coordinate " + std::to_string(coord) + " of block " + std::to_string(block + 1) +
                          " is the base coordinate and is substituted away");
    }
    std::vector<std::size_t> rest_arities;
    for (std::size_t b = 0; b < arities_.size(); ++b) {
        if (b != block) rest_arities.push_back(arities_[b]);
    }
    const std::size_t rest_size = tensor_size(rest_arities);
    std::vector<RationalVector> slice(rest_size);
    std::vector<std::size_t> full(arities_.size());
    for (std::size_t r = 0; r < rest_size; ++r) {
        auto rest = unflatten(rest_arities, r);
        for (std::size_t b = 0, k = 0; b < arities_.size(); ++b) {
            if (b != block) full[b] = rest[k++];
        }
        full[block] = coord;
        const RationalVector& hi = coefficients_[flatten(arities_, full)];
        full[block] = z.indices[block];
        const RationalVector& lo = coefficients_[flatten(arities_, full)];
        RationalVector diff(output_dim_);
        for (std::size_t d = 0; d < output_dim_; ++d) diff[d] = hi[d] - lo[d];
        slice[r] = std::move(diff);
    }
    return MultilinearExpansion(std::move(rest_arities), output_dim_, std::move(slice));
}

bool MultilinearExpansion::is_zero() const {
    return std::all_of(coefficients_.begin(), coefficients_.end(), [](const RationalVector& c) {
        return std::all_of(c.begin(), c.end(), [](const Rational& v) { return v == 0; });
    });
}

std::size_t n_of(std::span<const std::size_t> arities) {
    std::size_t total = 0;
    for (auto a : arities) total += a - 1;
    return total;
}

std::size_t n_of(const MultilinearExpansion& e) { return n_of(e.arities()); }

Gate Gate::from_entries(std::vector<std::size_t> arities, std::size_t output_dim, std::vector<Entry> entries,
                        std::vector<std::vector<std::string>> input_labels, std::vector<OutputLabel> output_labels) {
    if (arities.empty()) throw ValidationError("a gate needs at least one input");
    for (std::size_t b = 0; b < arities.size(); ++b) {
        if (arities[b] < 2) {
            throw ValidationError("input " + std::to_string(b + 1) + " has arity " + std::to_string(arities[b]) +
                                  "; truth-value sets need at least 2 values");
        }
    }
    if (output_dim == 0) throw ValidationError("output_dim must be >= 1");
    const std::size_t size = tensor_size(arities);
    std::vector<std::optional<RationalVector>> slots(size);
    for (auto& entry : entries) {
        std::size_t flat = 0;
        try {
            flat = flatten(arities, entry.index);
        } catch (const DomainError& e) {
            throw ValidationError(std::string("entry ") + format_index(entry.index) + ": " + e.what());
        }
        if (entry.output.size() != output_dim) {
            throw ValidationError("entry " + format_index(entry.index) + " has an output of dimension " +
                                  std::to_string(entry.output.size()) + ", expected " + std::to_string(output_dim));
        }
        if (slots[flat]) throw ValidationError("entry " + format_index(entry.index) + " appears twice");
        slots[flat] = std::move(entry.output);
    }
    std::vector<std::string> missing;
    for (std::size_t flat = 0; flat < size; ++flat) {
        if (!slots[flat]) missing.push_back(format_index(unflatten(arities, flat)));
    }
    if (!missing.empty()) {
        std::string msg = "incomplete truth table: missing " + std::to_string(missing.size()) + " index tuple(s):";
        for (const auto& m : missing) msg += " " + m;
        throw ValidationError(msg);
    }
    std::vector<RationalVector> table;
    table.reserve(size);
    for (auto& s : slots) table.push_back(std::move(*s));
    return Gate(std::move(arities), output_dim, std::move(table), std::move(input_labels), std::move(output_labels));
}

Gate::Gate(std::vector<std::size_t> arities, std::size_t output_dim, std::vector<RationalVector> table,
           std::vector<std::vector<std::string>> input_labels, std::vector<OutputLabel> output_labels)
    : arities_(std::move(arities)),
      output_dim_(output_dim),
      table_(std::move(table)),
      input_labels_(std::move(input_labels)),
      output_labels_(std::move(output_labels)) {
    if (arities_.empty()) throw ValidationError("a gate needs at least one input");
    for (std::size_t b = 0; b < arities_.size(); ++b) {
        if (arities_[b] < 2) {
            throw ValidationError("input " + std::to_string(b + 1) + " has arity " + std::to_string(arities_[b]) +
                                  "; truth-value sets need at least 2 values");
        }
    }
    if (output_dim_ == 0) throw ValidationError("output_dim must be >= 1");
    if (table_.size() != tensor_size(arities_)) {
        throw ValidationError("truth table has " + std::to_string(table_.size()) + " entries, expected " +
                              std::to_string(tensor_size(arities_)));
    }
    for (const auto& row : table_) {
        if (row.size() != output_dim_) throw ValidationError("truth table output has the wrong dimension");
    }
    validate_labels(arities_, output_dim_, input_labels_, output_labels_);
}

const RationalVector& Gate::output(std::span<const std::size_t> index) const { return table_[flat_index(index)]; }

std::size_t Gate::flat_index(std::span<const std::size_t> index) const { return flatten(arities_, index); }

std::vector<std::size_t> Gate::index_of(std::size_t flat) const { return unflatten(arities_, flat); }

std::vector<BasePoint> Gate::base_points() const {
    std::vector<BasePoint> out;
    out.reserve(table_.size());
    for (std::size_t flat = 0; flat < table_.size(); ++flat) out.push_back({index_of(flat)});
    return out;
}

std::optional<std::string> Gate::output_name(const RationalVector& output) const {
    for (const auto& label : output_labels_) {
        if (label.output == output) return label.name;
    }
    return std::nullopt;
}

MultilinearExpansion expand(const Gate& gate) {
    return MultilinearExpansion(gate.arities(), gate.output_dim(), gate.table());
}

}  // namespace mvl
