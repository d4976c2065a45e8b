#include "fixtures.hpp"

#include "prefdiag/kernels.hpp"
#include "prefdiag/similarity.hpp"

#include <doctest.h>
#include <omp.h>

using namespace prefdiag;

TEST_CASE("parallel jaccard kernel matches the serial one bit for bit") {
    Rng rng(2);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(4);
    for (std::size_t items : {5u, 200u, 300u}) {
        std::vector<std::vector<std::uint32_t>> sel(150);
        for (auto& row : sel) {
            for (std::uint32_t j = 0; j < items; ++j) {
                if (uniform_unit(rng) < 0.05) row.push_back(j);
            }
        }
        const auto d = Dataset::from_selections(items, sel);
        CHECK(similarity_matrix(d) == similarity_matrix_serial(d));
    }
    omp_set_num_threads(saved);
}

TEST_CASE("parallel repulsion kernel matches the serial one bit for bit") {
    Rng rng(9);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(4);
    for (std::size_t n : {3u, 130u, 400u}) {
        std::vector<kernels::Vec2> pos(n);
        for (auto& p : pos) p = {1000.0 * uniform_unit(rng), 1000.0 * uniform_unit(rng)};
        pos[1] = pos[0];  // coincident pair
        std::vector<kernels::Vec2> f1(n), f2(n);
        std::vector<double> k1(n), k2(n);
        kernels::repulsion(pos, 123.0, f1, k1);
        kernels::repulsion_serial(pos, 123.0, f2, k2);
        CHECK(f1 == f2);
        CHECK(k1 == k2);
        CHECK_FALSE(f1[0] == f1[1]);  // coincident nodes still get pushed apart
    }
    omp_set_num_threads(saved);
}

TEST_CASE("incidence rows and frequencies") {
    const auto inc = kernels::build_incidence(fixtures::rmd());
    CHECK(inc.words == 1);
    CHECK(inc.frequency == std::vector<std::uint32_t>{2, 3, 1, 1, 2, 1});
    CHECK(inc.row(1)[0] == 0b1011);
}
