#pragma once

#include "prefdiag/dataset.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace prefdiag {

/// Exact count ratio. `den == 0` is the 0/0 case.
struct CountRatio {
    std::uint64_t num = 0;
    std::uint64_t den = 0;

    double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
    /// Equality of rationals by cross-multiplication; 0/0 equals 0/x.
    bool same_value(const CountRatio& other) const {
        return (den == 0 ? 0 : num) * (other.den == 0 ? 1 : other.den) ==
               (other.den == 0 ? 0 : other.num) * (den == 0 ? 1 : den);
    }
};

/// Symmetric, dense, row-major Jaccard matrix over catalog items.
class SimilarityMatrix {
public:
    SimilarityMatrix() = default;
    explicit SimilarityMatrix(std::size_t size) : size_(size), values_(size * size, 0.0) {}
    SimilarityMatrix(std::size_t size, std::vector<double> values);

    std::size_t size() const { return size_; }
    double operator()(std::size_t i, std::size_t j) const { return values_[i * size_ + j]; }
    double& at(std::size_t i, std::size_t j) { return values_[i * size_ + j]; }
    double operator()(ItemId i, ItemId j) const { return (*this)(i.index, j.index); }
    const std::vector<double>& values() const { return values_; }

    bool operator==(const SimilarityMatrix&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<double> values_;
};

/// Number of subjects who selected `item`.
std::size_t occurrence_frequency(const Dataset& dataset, ItemId item);

/// (subjects selecting both) / (subjects selecting at least one), as counts.
CountRatio jaccard_counts(const Dataset& dataset, ItemId i, ItemId j);

/// Jaccard coefficient; 0 when neither item was selected.
double jaccard(const Dataset& dataset, ItemId i, ItemId j);

/// All pairs at once. Rows are computed in parallel; the result is
/// bit-identical to similarity_matrix_serial.
SimilarityMatrix similarity_matrix(const Dataset& dataset);
SimilarityMatrix similarity_matrix_serial(const Dataset& dataset);

/// Tab-separated dump, one row per item in id order.
void write_similarity_tsv(std::ostream& out, const SimilarityMatrix& sim);

}  // namespace prefdiag
