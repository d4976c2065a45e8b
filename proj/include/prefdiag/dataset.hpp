#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace prefdiag {

struct ItemId {
    std::uint32_t index = 0;
    auto operator<=>(const ItemId&) const = default;
};

struct SubjectId {
    std::uint32_t index = 0;
    auto operator<=>(const SubjectId&) const = default;
};

/// One subject's answer: the set of items they selected (sorted, unique).
struct ResponseDatum {
    SubjectId subject;
    std::vector<ItemId> selected;

    bool contains(ItemId item) const;
    bool operator==(const ResponseDatum&) const = default;
};

/// Interned string labels <-> dense ids.
class LabelTable {
public:
    /// Returns the id for `label`, adding it if new.
    std::uint32_t intern(std::string_view label);
    /// Adds a label that must not exist yet; returns false on duplicates.
    bool insert(std::string_view label);
    const std::string& label(std::uint32_t id) const { return labels_.at(id); }
    /// Id for a known label, or -1.
    std::int64_t find(std::string_view label) const;
    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const LabelTable& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

/// The full survey input: one response per subject, responses[l].subject == l.
/// Immutable after construction.
class Dataset {
public:
    Dataset() = default;

    /// Validates the invariants; throws InvalidArgument / IndexError / DuplicateSubject.
    Dataset(LabelTable items, LabelTable subjects, std::vector<ResponseDatum> responses);

    /// Convenience for tests and generators: items and subjects get labels
    /// "a<j>" and "s<i>".
    static Dataset from_selections(std::size_t catalog_size,
                                   const std::vector<std::vector<std::uint32_t>>& selections);

    std::size_t catalog_size() const { return items_.size(); }
    std::size_t num_subjects() const { return responses_.size(); }
    const std::vector<ResponseDatum>& responses() const { return responses_; }
    const ResponseDatum& response(SubjectId s) const;
    const LabelTable& item_labels() const { return items_; }
    const LabelTable& subject_labels() const { return subjects_; }
    const std::string& item_label(ItemId item) const { return items_.label(item.index); }
    const std::string& subject_label(SubjectId s) const { return subjects_.label(s.index); }

    bool operator==(const Dataset&) const = default;

private:
    LabelTable items_;
    LabelTable subjects_;
    std::vector<ResponseDatum> responses_;
};

enum class InputFormat { csv, json };

/// Parses CSV (`subject,item;item;...`, optional `#catalog: a;b;...` header)
/// or JSON (`{"catalog": [...], "responses": [{"subject", "selected"}]}`).
/// When a catalog is declared, selections outside it raise UnknownItem.
Dataset parse_dataset(std::istream& input, InputFormat format);
Dataset parse_dataset(std::string_view text, InputFormat format);

/// Writes the CSV form, always with a `#catalog:` header so that
/// never-selected items and catalog order survive a round trip.
std::string serialize_csv(const Dataset& dataset);
std::string serialize_json(const Dataset& dataset);

struct Warning {
    enum class Kind { EmptySelection, NeverSelected };
    Kind kind;
    std::uint32_t index;  // SubjectId for EmptySelection, ItemId for NeverSelected
    std::string message;

    bool operator==(const Warning&) const = default;
};

std::vector<Warning> validate(const Dataset& dataset);

}  // namespace prefdiag
