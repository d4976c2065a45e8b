#include "fixtures.hpp"

#include "prefdiag/errors.hpp"
#include "prefdiag/oracle.hpp"
#include "prefdiag/profile.hpp"

#include <doctest.h>

#include <set>

using namespace prefdiag;
using fixtures::item;
using fixtures::subject;

namespace {

// {a0,a1,a2} -> 0, {a3,a4,a5} -> 1, medoids a0 / a4.
Clustering rmd_blocks() {
    return Clustering{2, {0, 0, 0, 1, 1, 1}, {item(0), item(4)}, 13.0 / 6};
}

// Three clusters: A = {x0,x1}, B = {x2,x3}, C = {x4,x5}. Subject 0 picks x0
// (F = 2) and x2 (F = 4), so its cluster maxima are A 1/2, B 1/4, C 0.
Dataset three_cluster_data() {
    return Dataset::from_selections(6, {{0, 2}, {0}, {2}, {2}, {2}, {4, 5}});
}
Clustering three_clusters() {
    return Clustering{3, {0, 0, 1, 1, 2, 2}, {item(0), item(2), item(4)}, 0.0};
}

}  // namespace

TEST_CASE("preference strength") {
    const auto d = fixtures::rmd(7);
    CHECK(preference_strength(d, subject(0), item(0)) == 0.5);
    CHECK(preference_strength(d, subject(0), item(1)) == doctest::Approx(1.0 / 3));
    CHECK(preference_strength(d, subject(0), item(3)) == 0.0);
    CHECK(preference_strength(d, subject(0), item(6)) == 0.0);
    CHECK_THROWS_AS(preference_strength(d, subject(9), item(0)), IndexError);
}

TEST_CASE("primary cluster") {
    const auto d = fixtures::rmd();
    const auto c = rmd_blocks();
    CHECK(cluster_scores(d, c, subject(0)) == std::vector<double>{0.5, 0.0});
    CHECK(primary_cluster(d, c, subject(0)) == 0);
    CHECK(primary_cluster(d, c, subject(2)) == 1);
    CHECK(primary_cluster(d, c, subject(3)) == 1);

    // everybody selects everything: uniform scores, lowest index wins
    const auto all = Dataset::from_selections(4, {{0, 1, 2, 3}, {0, 1, 2, 3}});
    const Clustering two{2, {0, 0, 1, 1}, {item(0), item(2)}, 0.0};
    CHECK(primary_cluster(all, two, subject(1)) == 0);

    const auto empty = Dataset::from_selections(2, {{}, {0}});
    CHECK_THROWS_AS(primary_cluster(empty, Clustering{1, {0, 0}, {item(0)}, 0.0}, subject(0)), DegenerateSubject);
}

TEST_CASE("gateway items") {
    const auto d = fixtures::rmd();
    const auto c = rmd_blocks();
    CHECK(gateway_items(d, c, subject(0), 0) == std::vector<ItemId>{item(0)});
    CHECK(gateway_items(d, c, subject(0), 1) == std::vector<ItemId>{item(4)});  // all zero -> medoid
    CHECK(gateway_items(d, c, subject(3), 1) == std::vector<ItemId>{item(5)});

    // two items tied at the maximum are both gateways
    const auto tie = Dataset::from_selections(3, {{0, 1}, {2}});
    const Clustering one{1, {0, 0, 0}, {item(2)}, 0.0};
    CHECK(gateway_items(tie, one, subject(0), 0) == std::vector<ItemId>{item(0), item(1)});

    CHECK_THROWS_AS(gateway_items(d, Clustering{3, {0, 0, 0, 1, 1, 1}, {item(0), item(4), item(5)}, 0.0},
                                  subject(0), 2),
                    EmptyCluster);
}

TEST_CASE("secondary cluster modes") {
    const auto d = three_cluster_data();
    const auto c = three_clusters();
    CHECK(primary_cluster(d, c, subject(0)) == 0);
    CHECK(secondary_cluster(d, c, subject(0), SecondaryMode::weakest) == 2);
    CHECK(secondary_cluster(d, c, subject(0), SecondaryMode::runner_up) == 1);

    // subject 1 only touches A: B and C tie at zero
    CHECK(secondary_cluster(d, c, subject(1), SecondaryMode::weakest) == 1);
    CHECK(secondary_cluster(d, c, subject(1), SecondaryMode::runner_up) == 1);

    const auto r = fixtures::rmd();
    for (auto mode : {SecondaryMode::weakest, SecondaryMode::runner_up}) {
        CHECK(secondary_cluster(r, rmd_blocks(), subject(0), mode) == 1);
        CHECK(secondary_cluster(r, rmd_blocks(), subject(2), mode) == 0);
    }
    CHECK_THROWS_AS(secondary_cluster(r, Clustering{1, std::vector<std::size_t>(6, 0), {item(1)}, 0.0}, subject(0),
                                      SecondaryMode::weakest),
                    NoSecondaryCluster);
}

TEST_CASE("build profiles on rmd") {
    const auto d = fixtures::rmd();
    const auto set = build_profiles(d, rmd_blocks(), SecondaryMode::weakest);
    REQUIRE(set.profiles.size() == 4);
    CHECK(set.skipped.empty());

    const auto& p2 = set.profiles[2];
    CHECK(p2.subject == subject(2));
    CHECK(p2.primary_cluster == 1);
    CHECK(p2.primary_gateways == std::vector<ItemId>{item(3)});
    CHECK(p2.secondary_cluster == 0);
    CHECK(p2.secondary_gateways == std::vector<ItemId>{item(0)});

    const auto& p3 = set.profiles[3];
    CHECK(p3.primary_gateways == std::vector<ItemId>{item(5)});
    CHECK(p3.secondary_gateways == std::vector<ItemId>{item(1)});

    std::set<std::string> switches;
    for (const auto& p : set.profiles) switches.insert(p.switch_id);
    CHECK(switches.size() == 4);

    CHECK_THROWS_AS(build_profiles(d, Clustering{1, std::vector<std::size_t>(6, 0), {item(1)}, 0.0},
                                   SecondaryMode::weakest),
                    NoSecondaryCluster);
}

TEST_CASE("subjects without selections are skipped") {
    const auto d = Dataset::from_selections(4, {{0, 1}, {}, {2, 3}});
    const Clustering c{2, {0, 0, 1, 1}, {item(0), item(2)}, 0.0};
    const auto set = build_profiles(d, c, SecondaryMode::weakest);
    CHECK(set.profiles.size() == 2);
    CHECK(set.skipped == std::vector<SubjectId>{subject(1)});
}

TEST_CASE("primary-only profiles work with a single cluster") {
    const auto d = fixtures::rmd();
    const auto set = build_primary_profiles(d, Clustering{1, std::vector<std::size_t>(6, 0), {item(1)}, 0.0});
    REQUIRE(set.profiles.size() == 4);
    for (const auto& p : set.profiles) {
        CHECK(p.primary_cluster == 0);
        CHECK_FALSE(p.secondary_cluster.has_value());
    }
}

TEST_CASE("strength properties on random data") {
    Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const auto d = fixtures::random_dataset(rng, 10, 10);
        for (std::uint32_t j = 0; j < d.catalog_size(); ++j) {
            double column = 0.0;
            const auto f = occurrence_frequency(d, item(j));
            for (std::uint32_t i = 0; i < d.num_subjects(); ++i) {
                const double w = preference_strength(d, subject(i), item(j));
                column += w;
                REQUIRE((w > 0.0) == d.response(subject(i)).contains(item(j)));
                if (w > 0.0) REQUIRE(w == 1.0 / static_cast<double>(f));
                const auto general = oracle::general_preference_strength(d, subject(i), item(j));
                REQUIRE(general.value() == w);
            }
            if (f > 0) {
                REQUIRE(column == doctest::Approx(1.0).epsilon(1e-12));
            } else {
                REQUIRE(column == 0.0);
            }
        }
    }
}

TEST_CASE("profile invariants on random clusterings") {
    Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const auto d = fixtures::random_dataset(rng, 12, 10);
        if (d.catalog_size() < 2) continue;
        const std::size_t k = 2 + uniform_index(rng, std::min<std::size_t>(d.catalog_size() - 1, 3));
        const auto c = k_medoids(similarity_matrix(d), {k, rng(), 50, 3});
        for (auto mode : {SecondaryMode::weakest, SecondaryMode::runner_up}) {
            const auto set = build_profiles(d, c, mode);
            for (const auto& p : set.profiles) {
                REQUIRE(p.secondary_cluster.has_value());
                REQUIRE(*p.secondary_cluster != p.primary_cluster);
                REQUIRE(cluster_scores(d, c, p.subject)[p.primary_cluster] > 0.0);
                for (auto g : p.primary_gateways) REQUIRE(c.assignment[g.index] == p.primary_cluster);
                for (auto g : p.secondary_gateways) REQUIRE(c.assignment[g.index] == *p.secondary_cluster);
                REQUIRE_FALSE(p.primary_gateways.empty());
                REQUIRE_FALSE(p.secondary_gateways.empty());
            }
        }
    }
}

TEST_CASE("mode names") {
    CHECK(parse_secondary_mode("runner-up") == SecondaryMode::runner_up);
    CHECK(parse_secondary_mode("weakest") == SecondaryMode::weakest);
    CHECK_FALSE(parse_secondary_mode("strongest").has_value());
}
