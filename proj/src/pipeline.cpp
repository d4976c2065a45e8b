#include "prefdiag/pipeline.hpp"

#include "prefdiag/clustering.hpp"
#include "prefdiag/diagram.hpp"
#include "prefdiag/errors.hpp"
#include "prefdiag/random.hpp"
#include "prefdiag/render.hpp"
#include "prefdiag/similarity.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

namespace fs = std::filesystem;

namespace prefdiag {

std::string_view to_string(Parts parts) {
    switch (parts) {
        case Parts::part1: return "part1";
        case Parts::part2: return "part2";
        case Parts::both: return "both";
    }
    return "both";
}

std::optional<Parts> parse_parts(std::string_view text) {
    for (auto p : {Parts::part1, Parts::part2, Parts::both}) {
        if (to_string(p) == text) return p;
    }
    return std::nullopt;
}

std::optional<OutputFormats> parse_formats(std::string_view text) {
    OutputFormats f{false, false, false};
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        const auto name = text.substr(start, end - start);
        if (name == "svg") f.svg = true;
        else if (name == "dot") f.dot = true;
        else if (name == "json") f.json = true;
        else return std::nullopt;
        start = end + 1;
    }
    return f;
}

namespace {

std::string formats_string(const OutputFormats& f) {
    std::string out;
    for (auto [on, name] : {std::pair{f.svg, "svg"}, {f.dot, "dot"}, {f.json, "json"}}) {
        if (!on) continue;
        if (!out.empty()) out += ',';
        out += name;
    }
    return out;
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) h = (h ^ c) * 0x100000001b3ULL;
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::optional<std::string> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    return std::string{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

InputFormat infer_format(const RunConfig& config) {
    if (config.format) return *config.format;
    return config.input.extension() == ".json" ? InputFormat::json : InputFormat::csv;
}

int severity_of(const std::exception& e) {
    if (dynamic_cast<const NoSecondaryCluster*>(&e) || dynamic_cast<const InvalidArgument*>(&e)) {
        return kExitConfigInvalid;
    }
    return kExitInternal;
}

void note(RunReport& report, const std::string& message) { report.diagnostics.push_back(message); }

}  // namespace

void write_file_atomic(const fs::path& path, std::string_view contents) {
    fs::create_directories(path.parent_path());
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) throw Error("short write to " + tmp.string());
    }
    fs::rename(tmp, path);
}

Json config_to_json(const RunConfig& config) {
    Json doc;
    doc["input"] = config.input.generic_string();
    doc["format_in"] = infer_format(config) == InputFormat::json ? "json" : "csv";
    doc["clusters"] = config.granularities;
    doc["mode"] = std::string(to_string(config.mode));
    doc["seed"] = config.seed;
    doc["restarts"] = config.restarts;
    doc["max_iterations"] = config.max_iterations;
    doc["emit"] = formats_string(config.formats);
    doc["parts"] = std::string(to_string(config.parts));
    doc["images"] = config.images ? Json(config.images->generic_string()) : Json(nullptr);
    doc["hide_isolated"] = config.hide_isolated;
    doc["dump_similarity"] = config.dump_similarity;
    doc["layout"] = {{"iterations", config.layout.iterations},
                     {"tolerance", config.layout.tolerance},
                     {"width", config.layout.width},
                     {"height", config.layout.height},
                     {"repulsion_scale", config.layout.repulsion_scale},
                     {"attraction_scale", config.layout.attraction_scale},
                     {"cooling", config.layout.cooling}};
    return doc;
}

RunConfig config_from_json(const Json& doc) {
    try {
        RunConfig c;
        c.input = doc.at("input").get<std::string>();
        c.format = doc.at("format_in").get<std::string>() == "json" ? InputFormat::json : InputFormat::csv;
        c.granularities = doc.at("clusters").get<std::vector<std::size_t>>();
        auto mode = parse_secondary_mode(doc.at("mode").get<std::string>());
        auto formats = parse_formats(doc.at("emit").get<std::string>());
        auto parts = parse_parts(doc.at("parts").get<std::string>());
        if (!mode || !formats || !parts) throw InvalidArgument("manifest has an unknown mode, format or part");
        c.mode = *mode;
        c.formats = *formats;
        c.parts = *parts;
        c.seed = doc.at("seed").get<std::uint64_t>();
        c.restarts = doc.at("restarts").get<std::size_t>();
        c.max_iterations = doc.at("max_iterations").get<std::size_t>();
        if (!doc.at("images").is_null()) c.images = doc["images"].get<std::string>();
        c.hide_isolated = doc.at("hide_isolated").get<bool>();
        c.dump_similarity = doc.value("dump_similarity", false);
        const auto& l = doc.at("layout");
        c.layout.iterations = l.at("iterations").get<std::size_t>();
        c.layout.tolerance = l.at("tolerance").get<double>();
        c.layout.width = l.at("width").get<double>();
        c.layout.height = l.at("height").get<double>();
        c.layout.repulsion_scale = l.at("repulsion_scale").get<double>();
        c.layout.attraction_scale = l.at("attraction_scale").get<double>();
        c.layout.cooling = l.at("cooling").get<double>();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed run configuration: ") + e.what());
    }
}

RunReport run(const RunConfig& config) {
    RunReport report;
    auto fail = [&](int code, const std::string& message) {
        report.exit_code = code;
        note(report, message);
        return report;
    };

    if (config.granularities.empty()) return fail(kExitConfigInvalid, "no granularities given");
    for (auto k : config.granularities) {
        if (k == 0) return fail(kExitConfigInvalid, "granularity must be at least 1");
    }
    if (!config.formats.any()) return fail(kExitConfigInvalid, "no output format selected");
    if (config.restarts == 0 || config.max_iterations == 0) {
        return fail(kExitConfigInvalid, "restarts and max iterations must be at least 1");
    }
    if (config.output.empty()) return fail(kExitConfigInvalid, "no output directory given");
    try {
        config.layout.check();
    } catch (const Error& e) {
        return fail(kExitConfigInvalid, e.what());
    }
    std::error_code ec;
    fs::create_directories(config.output, ec);
    if (ec || !fs::is_directory(config.output)) {
        return fail(kExitConfigInvalid, "output directory " + config.output.string() + " is not writable");
    }

    const auto text = read_file(config.input);
    if (!text) return fail(kExitInputUnreadable, "cannot read " + config.input.string());
    std::map<std::string, std::string> images;
    if (config.images) {
        const auto manifest_text = read_file(*config.images);
        if (!manifest_text) return fail(kExitInputUnreadable, "cannot read " + config.images->string());
        try {
            images = parse_image_manifest(*manifest_text);
        } catch (const Error& e) {
            return fail(kExitInputUnreadable, "image manifest: " + std::string(e.what()));
        }
    }
    Dataset dataset;
    try {
        dataset = parse_dataset(std::string_view(*text), infer_format(config));
    } catch (const Error& e) {
        return fail(kExitInputUnreadable, config.input.string() + ": " + e.what());
    }

    Json& manifest = report.manifest;
    manifest["tool"] = "prefdiag";
    manifest["config"] = config_to_json(config);
    manifest["input_digest"] = {{"bytes", text->size()}, {"fnv1a64", hex64(fnv1a(*text))}};
    manifest["dataset"] = {{"items", dataset.catalog_size()}, {"subjects", dataset.num_subjects()}};
    auto warnings = Json::array();
    for (const auto& w : validate(dataset)) {
        warnings.push_back(w.message);
        note(report, "warning: " + w.message);
    }
    manifest["warnings"] = std::move(warnings);

    const auto sim = similarity_matrix(dataset);
    auto files = Json::array();
    auto emit = [&](const fs::path& relative, std::string_view contents) {
        write_file_atomic(config.output / relative, contents);
        files.push_back(relative.generic_string());
        return relative.generic_string();
    };
    if (config.dump_similarity) {
        std::ostringstream tsv;
        write_similarity_tsv(tsv, sim);
        emit("similarity.tsv", tsv.str());
    }

    auto granularities = Json::array();
    for (const auto k : config.granularities) {
        Json record;
        record["k"] = k;
        const fs::path dir = std::to_string(k);
        int severity = kExitOk;
        auto diagnostics = Json::array();
        auto failed = [&](const std::string& where, const std::exception& e) {
            const std::string message = "k=" + std::to_string(k) + " " + where + ": " + e.what();
            diagnostics.push_back(message);
            note(report, message);
            severity = std::max(severity, severity_of(e));
        };
        try {
            ClusteringParams cp;
            cp.k = k;
            cp.seed = derive_seed(config.seed, "cluster", k);
            cp.restarts = config.restarts;
            cp.max_iterations = config.max_iterations;
            record["seeds"] = {{"cluster", cp.seed}};
            const auto clustering = k_medoids(sim, cp);
            record["objective"] = clustering.objective;

            const auto profiles =
                k >= 2 ? build_profiles(dataset, clustering, config.mode) : build_primary_profiles(dataset, clustering);
            if (!profiles.skipped.empty()) {
                auto skipped = Json::array();
                for (auto s : profiles.skipped) skipped.push_back(dataset.subject_label(s));
                record["skipped_subjects"] = std::move(skipped);
            }
            auto outputs = Json::array();
            if (config.formats.json) {
                outputs.push_back(emit(dir / "clustering.json", clustering_to_json(dataset, clustering).dump(2) + "\n"));
                outputs.push_back(emit(dir / "profiles.json", profiles_to_json(dataset, profiles).dump(2) + "\n"));
            }

            Json parts = Json::object();
            for (int part = 1; part <= 2; ++part) {
                if ((part == 1 && config.parts == Parts::part2) || (part == 2 && config.parts == Parts::part1)) continue;
                const std::string name = "part" + std::to_string(part);
                try {
                    if (part == 2 && k < 2) {
                        throw NoSecondaryCluster("switch diagrams need at least two clusters");
                    }
                    auto diagram = build_diagram(dataset, clustering, profiles, sim, part == 2);
                    attach_images(diagram, images);
                    if (config.hide_isolated) diagram = without_isolated(diagram);
                    LayoutParams lp = config.layout;
                    lp.seed = derive_seed(config.seed, "layout", k * 2 + static_cast<std::size_t>(part));
                    const auto layout = spring_layout(diagram, lp);
                    Json info;
                    info["status"] = "ok";
                    info["layout_seed"] = lp.seed;
                    info["layout"] = {{"converged", layout.converged},
                                      {"iterations", layout.iterations},
                                      {"residual", layout.residual}};
                    info["stats"] = stats_to_json(diagram_stats(diagram));
                    StyleOptions style;
                    style.width = lp.width;
                    style.height = lp.height;
                    if (config.formats.svg) outputs.push_back(emit(dir / (name + ".svg"), render_svg(diagram, layout, style)));
                    if (config.formats.dot) outputs.push_back(emit(dir / (name + ".dot"), render_dot(diagram)));
                    if (config.formats.json) {
                        outputs.push_back(emit(dir / (name + ".json"), diagram_to_json(diagram, &layout).dump(2) + "\n"));
                    }
                    parts[name] = std::move(info);
                } catch (const Error& e) {
                    failed(name, e);
                    parts[name] = {{"status", "error"}, {"error", e.what()}};
                }
            }
            record["parts"] = std::move(parts);
            record["outputs"] = std::move(outputs);
        } catch (const Error& e) {
            failed("clustering", e);
        } catch (const fs::filesystem_error& e) {
            failed("output", e);
        }
        record["status"] = severity == kExitOk ? "ok" : "error";
        record["diagnostics"] = std::move(diagnostics);
        report.exit_code = std::max(report.exit_code, severity);
        granularities.push_back(std::move(record));
    }
    manifest["granularities"] = std::move(granularities);
    manifest["files"] = std::move(files);
    try {
        write_file_atomic(config.output / "manifest.json", manifest.dump(2) + "\n");
    } catch (const std::exception& e) {
        return fail(kExitInternal, std::string("writing manifest: ") + e.what());
    }
    return report;
}

RunReport replay(const fs::path& manifest_path, const fs::path& output) {
    RunReport report;
    const auto text = read_file(manifest_path);
    if (!text) {
        report.exit_code = kExitInputUnreadable;
        note(report, "cannot read " + manifest_path.string());
        return report;
    }
    RunConfig config;
    Json doc;
    try {
        doc = Json::parse(*text);
        config = config_from_json(doc.at("config"));
    } catch (const std::exception& e) {
        report.exit_code = kExitConfigInvalid;
        note(report, manifest_path.string() + ": " + e.what());
        return report;
    }
    config.output = output;
    if (const auto input = read_file(config.input)) {
        const auto expected = doc.value("input_digest", Json::object()).value("fnv1a64", std::string{});
        if (!expected.empty() && expected != hex64(fnv1a(*input))) {
            report.exit_code = kExitInputUnreadable;
            note(report, "input " + config.input.string() + " changed since the manifest was written");
            return report;
        }
    }
    return run(config);
}

std::vector<fs::path> write_synthetic(const SynthParams& params, const fs::path& output, InputFormat format) {
    const auto synth = generate(params);
    const fs::path data = output / (format == InputFormat::json ? "dataset.json" : "dataset.csv");
    const fs::path truth = output / "truth.json";
    write_file_atomic(data, format == InputFormat::json ? serialize_json(synth.dataset) : serialize_csv(synth.dataset));
    Json doc = truth_to_json(synth.dataset, synth.truth);
    doc["params"] = {{"items", params.num_items},
                     {"subjects", params.num_subjects},
                     {"clusters", params.num_planted_clusters},
                     {"primary_select_prob", params.primary_select_prob},
                     {"switch_prob", params.switch_prob},
                     {"seed", params.seed}};
    write_file_atomic(truth, doc.dump(2) + "\n");
    return {data, truth};
}

}  // namespace prefdiag
