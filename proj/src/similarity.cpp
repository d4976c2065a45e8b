#include "prefdiag/similarity.hpp"

#include "prefdiag/errors.hpp"
#include "prefdiag/kernels.hpp"

#include <cstdio>
#include <ostream>

namespace prefdiag {

namespace {

void check_item(const Dataset& dataset, ItemId item) {
    if (item.index >= dataset.catalog_size()) {
        throw IndexError("item id " + std::to_string(item.index) + " outside catalog of " +
                         std::to_string(dataset.catalog_size()));
    }
}

}  // namespace

SimilarityMatrix::SimilarityMatrix(std::size_t size, std::vector<double> values)
    : size_(size), values_(std::move(values)) {
    if (values_.size() != size_ * size_) {
        throw InvalidArgument("similarity values do not form a square matrix");
    }
}

std::size_t occurrence_frequency(const Dataset& dataset, ItemId item) {
    check_item(dataset, item);
    std::size_t count = 0;
    for (const auto& r : dataset.responses()) {
        count += r.contains(item) ? 1 : 0;
    }
    return count;
}

CountRatio jaccard_counts(const Dataset& dataset, ItemId i, ItemId j) {
    check_item(dataset, i);
    check_item(dataset, j);
    CountRatio ratio;
    for (const auto& r : dataset.responses()) {
        const bool has_i = r.contains(i);
        const bool has_j = r.contains(j);
        ratio.num += (has_i && has_j) ? 1 : 0;
        ratio.den += (has_i || has_j) ? 1 : 0;
    }
    return ratio;
}

double jaccard(const Dataset& dataset, ItemId i, ItemId j) {
    return jaccard_counts(dataset, i, j).value();
}

SimilarityMatrix similarity_matrix(const Dataset& dataset) {
    const auto inc = kernels::build_incidence(dataset);
    std::vector<double> values(inc.items * inc.items);
    kernels::jaccard_matrix(inc, values);
    return SimilarityMatrix(inc.items, std::move(values));
}

SimilarityMatrix similarity_matrix_serial(const Dataset& dataset) {
    const auto inc = kernels::build_incidence(dataset);
    std::vector<double> values(inc.items * inc.items);
    kernels::jaccard_matrix_serial(inc, values);
    return SimilarityMatrix(inc.items, std::move(values));
}

void write_similarity_tsv(std::ostream& out, const SimilarityMatrix& sim) {
    char buf[32];
    for (std::size_t i = 0; i < sim.size(); ++i) {
        for (std::size_t j = 0; j < sim.size(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", sim(i, j));
            out << (j ? "\t" : "") << buf;
        }
        out << '\n';
    }
}

}  // namespace prefdiag
