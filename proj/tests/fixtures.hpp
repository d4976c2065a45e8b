#pragma once

#include "prefdiag/dataset.hpp"
#include "prefdiag/random.hpp"

#include <cstdint>
#include <vector>

namespace fixtures {

using prefdiag::ItemId;
using prefdiag::SubjectId;

// Reference micro-dataset: four subjects, six items, two planted blocks.
//   s0 = {a0, a1}, s1 = {a0, a1, a2}, s2 = {a3, a4}, s3 = {a4, a5, a1}
inline prefdiag::Dataset rmd(std::size_t catalog = 6) {
    return prefdiag::Dataset::from_selections(catalog, {{0, 1}, {0, 1, 2}, {3, 4}, {4, 5, 1}});
}

inline ItemId item(std::uint32_t j) { return ItemId{j}; }
inline SubjectId subject(std::uint32_t i) { return SubjectId{i}; }

/// Random single-response dataset with up to `max_items` items and
/// `max_subjects` subjects; each subject selects each item with probability p.
inline prefdiag::Dataset random_dataset(prefdiag::Rng& rng, std::size_t max_items, std::size_t max_subjects,
                                        double p = 0.35) {
    const std::size_t n = 1 + prefdiag::uniform_index(rng, max_items);
    const std::size_t s = 1 + prefdiag::uniform_index(rng, max_subjects);
    std::vector<std::vector<std::uint32_t>> sel(s);
    for (auto& row : sel) {
        for (std::uint32_t j = 0; j < n; ++j) {
            if (prefdiag::uniform_unit(rng) < p) row.push_back(j);
        }
    }
    return prefdiag::Dataset::from_selections(n, sel);
}

}  // namespace fixtures
