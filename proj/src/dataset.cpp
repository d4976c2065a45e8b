#include "prefdiag/dataset.hpp"

#include "prefdiag/errors.hpp"

#include <algorithm>

namespace prefdiag {

bool ResponseDatum::contains(ItemId item) const {
    return std::binary_search(selected.begin(), selected.end(), item);
}

std::uint32_t LabelTable::intern(std::string_view label) {
    auto it = index_.find(std::string(label));
    if (it != index_.end()) {
        return it->second;
    }
    const auto id = static_cast<std::uint32_t>(labels_.size());
    labels_.emplace_back(label);
    index_.emplace(labels_.back(), id);
    return id;
}

bool LabelTable::insert(std::string_view label) {
    if (find(label) >= 0) {
        return false;
    }
    intern(label);
    return true;
}

std::int64_t LabelTable::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

Dataset::Dataset(LabelTable items, LabelTable subjects, std::vector<ResponseDatum> responses)
    : items_(std::move(items)), subjects_(std::move(subjects)), responses_(std::move(responses)) {
    if (items_.size() == 0) {
        throw InvalidArgument("dataset needs at least one catalog item");
    }
    if (subjects_.size() != responses_.size()) {
        throw InvalidArgument("one response per subject required: " + std::to_string(subjects_.size()) +
                              " subjects, " + std::to_string(responses_.size()) + " responses");
    }
    for (std::size_t l = 0; l < responses_.size(); ++l) {
        auto& r = responses_[l];
        if (r.subject.index != l) {
            throw DuplicateSubject("response " + std::to_string(l) + " belongs to subject " +
                                   std::to_string(r.subject.index));
        }
        std::sort(r.selected.begin(), r.selected.end());
        if (std::adjacent_find(r.selected.begin(), r.selected.end()) != r.selected.end()) {
            throw InvalidArgument("subject " + subjects_.label(l) + " selects an item twice");
        }
        if (!r.selected.empty() && r.selected.back().index >= items_.size()) {
            throw IndexError("subject " + subjects_.label(l) + " selects item id " +
                             std::to_string(r.selected.back().index) + " outside the catalog");
        }
    }
}

Dataset Dataset::from_selections(std::size_t catalog_size,
                                 const std::vector<std::vector<std::uint32_t>>& selections) {
    LabelTable items;
    for (std::size_t j = 0; j < catalog_size; ++j) {
        items.intern("a" + std::to_string(j));
    }
    LabelTable subjects;
    std::vector<ResponseDatum> responses;
    responses.reserve(selections.size());
    for (std::size_t i = 0; i < selections.size(); ++i) {
        subjects.intern("s" + std::to_string(i));
        ResponseDatum r{SubjectId{static_cast<std::uint32_t>(i)}, {}};
        for (auto j : selections[i]) {
            r.selected.push_back(ItemId{j});
        }
        responses.push_back(std::move(r));
    }
    return Dataset(std::move(items), std::move(subjects), std::move(responses));
}

const ResponseDatum& Dataset::response(SubjectId s) const {
    if (s.index >= responses_.size()) {
        throw IndexError("subject id " + std::to_string(s.index) + " out of range");
    }
    return responses_[s.index];
}

std::vector<Warning> validate(const Dataset& dataset) {
    std::vector<Warning> warnings;
    std::vector<bool> seen(dataset.catalog_size(), false);
    for (const auto& r : dataset.responses()) {
        if (r.selected.empty()) {
            warnings.push_back({Warning::Kind::EmptySelection, r.subject.index,
                                "subject '" + dataset.subject_label(r.subject) + "' selected nothing"});
        }
        for (auto item : r.selected) {
            seen[item.index] = true;
        }
    }
    for (std::uint32_t j = 0; j < seen.size(); ++j) {
        if (!seen[j]) {
            warnings.push_back({Warning::Kind::NeverSelected, j,
                                "item '" + dataset.item_label(ItemId{j}) + "' was never selected"});
        }
    }
    return warnings;
}

}  // namespace prefdiag
