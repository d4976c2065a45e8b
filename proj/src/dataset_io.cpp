#include "prefdiag/dataset.hpp"

#include "prefdiag/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>

namespace prefdiag {

namespace {

constexpr std::string_view kCatalogTag = "#catalog:";

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

// Trimmed view plus the offset of its first character in `s`.
std::pair<std::string_view, std::size_t> trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return {s.substr(b, e - b), b};
}

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> split_labels(std::string_view field, std::size_t column0) {
    std::vector<Token> out;
    std::size_t start = 0;
    while (start <= field.size()) {
        auto end = field.find(';', start);
        if (end == std::string_view::npos) end = field.size();
        auto [tok, off] = trim(field.substr(start, end - start));
        if (!tok.empty()) {
            out.push_back({tok, column0 + start + off});
        }
        start = end + 1;
    }
    return out;
}

// Shared assembly for both formats: labels in, validated Dataset out.
class Builder {
public:
    void declare_catalog(const std::vector<std::string_view>& labels, std::size_t line, std::size_t col) {
        if (catalog_declared_) {
            throw ParseError("catalog declared twice", line, col);
        }
        if (!subjects_.labels().empty()) {
            throw ParseError("catalog must precede the responses", line, col);
        }
        catalog_declared_ = true;
        for (auto label : labels) {
            if (!items_.insert(label)) {
                throw ParseError("duplicate catalog item '" + std::string(label) + "'", line, col);
            }
        }
    }

    void add_response(std::string_view subject, const std::vector<Token>& selected, std::size_t line,
                      std::size_t col) {
        if (subject.empty()) {
            throw ParseError("empty subject label", line, col);
        }
        if (subjects_.find(subject) >= 0) {
            throw DuplicateSubject("subject '" + std::string(subject) + "' answers more than once (line " +
                                   std::to_string(line) + ")");
        }
        const auto sid = subjects_.intern(subject);
        ResponseDatum r{SubjectId{sid}, {}};
        for (const auto& tok : selected) {
            std::int64_t id = items_.find(tok.text);
            if (id < 0) {
                if (catalog_declared_) {
                    throw UnknownItem("item '" + std::string(tok.text) + "' is not in the catalog (line " +
                                      std::to_string(line) + ", col " + std::to_string(tok.column) + ")");
                }
                id = items_.intern(tok.text);
            }
            r.selected.push_back(ItemId{static_cast<std::uint32_t>(id)});
        }
        std::sort(r.selected.begin(), r.selected.end());
        if (std::adjacent_find(r.selected.begin(), r.selected.end()) != r.selected.end()) {
            throw ParseError("subject '" + std::string(subject) + "' lists an item twice", line, col);
        }
        responses_.push_back(std::move(r));
    }

    Dataset finish(std::size_t line) {
        if (items_.size() == 0) {
            throw ParseError("no items in input", line, 1);
        }
        return Dataset(std::move(items_), std::move(subjects_), std::move(responses_));
    }

private:
    bool catalog_declared_ = false;
    LabelTable items_;
    LabelTable subjects_;
    std::vector<ResponseDatum> responses_;
};

Dataset parse_csv(std::string_view text) {
    Builder builder;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const auto raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto [line, off] = trim(raw);
        if (line.empty()) continue;
        if (line.substr(0, kCatalogTag.size()) == kCatalogTag) {
            std::vector<std::string_view> labels;
            for (const auto& tok : split_labels(line.substr(kCatalogTag.size()), 0)) {
                labels.push_back(tok.text);
            }
            builder.declare_catalog(labels, line_no, off + 1);
            continue;
        }
        if (line.front() == '#') continue;  // comment

        const auto comma = line.find(',');
        if (comma == std::string_view::npos) {
            throw ParseError("expected 'subject,item;item;...'", line_no, off + line.size() + 1);
        }
        const auto rest = line.substr(comma + 1);
        if (auto extra = rest.find(','); extra != std::string_view::npos) {
            throw ParseError("unexpected ',' in selection list", line_no, off + comma + 2 + extra);
        }
        auto [subject, soff] = trim(line.substr(0, comma));
        builder.add_response(subject, split_labels(rest, off + comma + 2), line_no, off + soff + 1);
    }
    return builder.finish(line_no + 1);
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Dataset parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(e.what(), line, col);
    }
    // Structural errors carry the record index as the "line".
    if (!doc.is_object()) {
        throw ParseError("top level must be an object", 1, 1);
    }
    Builder builder;
    if (doc.contains("catalog")) {
        const auto& cat = doc["catalog"];
        if (!cat.is_array()) throw ParseError("'catalog' must be an array", 0, 0);
        std::vector<std::string_view> labels;
        for (std::size_t k = 0; k < cat.size(); ++k) {
            if (!cat[k].is_string()) throw ParseError("catalog entry must be a string", 0, k);
            labels.push_back(cat[k].get_ref<const std::string&>());
        }
        builder.declare_catalog(labels, 0, 0);
    }
    if (!doc.contains("responses") || !doc["responses"].is_array()) {
        throw ParseError("'responses' array missing", 0, 0);
    }
    const auto& responses = doc["responses"];
    for (std::size_t l = 0; l < responses.size(); ++l) {
        const auto& r = responses[l];
        if (!r.is_object() || !r.contains("subject") || !r["subject"].is_string()) {
            throw ParseError("response needs a string 'subject'", l, 0);
        }
        std::vector<Token> selected;
        if (r.contains("selected")) {
            const auto& sel = r["selected"];
            if (!sel.is_array()) throw ParseError("'selected' must be an array", l, 0);
            for (std::size_t k = 0; k < sel.size(); ++k) {
                if (!sel[k].is_string()) throw ParseError("selected entry must be a string", l, k);
                selected.push_back({sel[k].get_ref<const std::string&>(), k});
            }
        }
        builder.add_response(r["subject"].get_ref<const std::string&>(), selected, l, 0);
    }
    return builder.finish(responses.size());
}

void check_csv_label(const std::string& label) {
    if (label.empty() || label.find_first_of(",;\n\r") != std::string::npos || label.front() == '#' ||
        is_space(label.front()) || is_space(label.back())) {
        throw InvalidArgument("label '" + label + "' cannot be written as CSV; use JSON");
    }
}

}  // namespace

Dataset parse_dataset(std::string_view text, InputFormat format) {
    return format == InputFormat::csv ? parse_csv(text) : parse_json(text);
}

Dataset parse_dataset(std::istream& input, InputFormat format) {
    std::string text{std::istreambuf_iterator<char>(input), std::istreambuf_iterator<char>()};
    return parse_dataset(std::string_view(text), format);
}

std::string serialize_csv(const Dataset& dataset) {
    std::ostringstream out;
    out << kCatalogTag << ' ';
    const auto& items = dataset.item_labels().labels();
    for (std::size_t j = 0; j < items.size(); ++j) {
        check_csv_label(items[j]);
        out << (j ? ";" : "") << items[j];
    }
    out << '\n';
    for (const auto& r : dataset.responses()) {
        const auto& subject = dataset.subject_label(r.subject);
        check_csv_label(subject);
        out << subject << ',';
        for (std::size_t k = 0; k < r.selected.size(); ++k) {
            out << (k ? ";" : "") << dataset.item_label(r.selected[k]);
        }
        out << '\n';
    }
    return out.str();
}

std::string serialize_json(const Dataset& dataset) {
    nlohmann::ordered_json doc;
    doc["catalog"] = dataset.item_labels().labels();
    auto responses = nlohmann::ordered_json::array();
    for (const auto& r : dataset.responses()) {
        auto selected = nlohmann::ordered_json::array();
        for (auto item : r.selected) selected.push_back(dataset.item_label(item));
        responses.push_back({{"subject", dataset.subject_label(r.subject)}, {"selected", selected}});
    }
    doc["responses"] = std::move(responses);
    return doc.dump(2) + "\n";
}

}  // namespace prefdiag
