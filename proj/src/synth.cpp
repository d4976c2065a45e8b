#include "prefdiag/synth.hpp"

#include "prefdiag/errors.hpp"
#include "prefdiag/random.hpp"

#include <algorithm>

namespace prefdiag {

void SynthParams::check() const {
    if (num_items == 0 || num_subjects == 0) {
        throw InvalidArgument("need at least one item and one subject");
    }
    if (num_planted_clusters == 0 || num_planted_clusters > num_items) {
        throw InvalidArgument("planted cluster count must lie in [1, num_items]");
    }
    if (!(primary_select_prob > 0.0 && primary_select_prob <= 1.0)) {
        throw InvalidArgument("primary_select_prob must lie in (0, 1]");
    }
    if (!(switch_prob >= 0.0 && switch_prob < 1.0)) {
        throw InvalidArgument("switch_prob must lie in [0, 1)");
    }
}

namespace {

// Uniform pick among the not-yet-chosen items of `pool`; false if none left.
bool pick_from(const std::vector<std::uint32_t>& pool, std::vector<bool>& chosen, Rng& rng,
               std::vector<std::uint32_t>& out) {
    std::vector<std::uint32_t> free;
    for (auto j : pool) {
        if (!chosen[j]) free.push_back(j);
    }
    if (free.empty()) return false;
    const auto j = free[uniform_index(rng, free.size())];
    chosen[j] = true;
    out.push_back(j);
    return true;
}

}  // namespace

SynthResult generate(const SynthParams& params) {
    params.check();
    const std::size_t n = params.num_items;
    const std::size_t k = params.num_planted_clusters;
    Rng rng(params.seed);

    PlantedTruth truth;
    truth.k = k;
    truth.item_cluster.resize(n);
    std::vector<std::vector<std::uint32_t>> blocks(k);
    std::vector<std::uint32_t> everything(n);
    for (std::size_t j = 0; j < n; ++j) {
        truth.item_cluster[j] = j * k / n;
        blocks[truth.item_cluster[j]].push_back(static_cast<std::uint32_t>(j));
        everything[j] = static_cast<std::uint32_t>(j);
    }

    std::vector<std::vector<std::uint32_t>> selections(params.num_subjects);
    for (std::size_t i = 0; i < params.num_subjects; ++i) {
        const std::size_t home = uniform_index(rng, k);
        std::optional<std::size_t> away;
        if (k > 1) {
            const std::size_t offset = 1 + uniform_index(rng, k - 1);
            away = (home + offset) % k;
        }
        truth.home.push_back(home);
        truth.away.push_back(away);

        const std::size_t pool = blocks[home].size() + (away ? blocks[*away].size() : 0);
        const std::size_t want = std::min(
            {kMinSelection + static_cast<std::size_t>(uniform_index(rng, kMaxSelection - kMinSelection + 1)), pool});
        std::vector<bool> chosen(n, false);
        auto& picked = selections[i];
        while (picked.size() < want) {
            const double u = uniform_unit(rng);
            const double v = uniform_unit(rng);
            const std::vector<std::uint32_t>* source = &blocks[home];
            if (away && u < params.switch_prob) {
                source = &blocks[*away];
            } else if (v >= params.primary_select_prob) {
                source = &everything;
            }
            // Exhausted sources fall back to home, then away.
            if (!pick_from(*source, chosen, rng, picked) && !pick_from(blocks[home], chosen, rng, picked)) {
                pick_from(blocks[*away], chosen, rng, picked);
            }
        }
        std::sort(picked.begin(), picked.end());
    }
    return {Dataset::from_selections(n, selections), std::move(truth)};
}

}  // namespace prefdiag
