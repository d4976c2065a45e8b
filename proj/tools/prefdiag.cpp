// prefdiag: survey selections in, multi-granularity preference diagrams out.

#include "prefdiag/errors.hpp"
#include "prefdiag/pipeline.hpp"
#include "prefdiag/random.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace prefdiag;

namespace {

int report(const RunReport& r) {
    for (const auto& d : r.diagnostics) std::cerr << "prefdiag: " << d << '\n';
    return r.exit_code;
}

std::vector<std::size_t> parse_cluster_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        const auto token = text.substr(start, end - start);
        std::size_t used = 0;
        const auto value = std::stoull(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        out.push_back(value);
        start = end + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Preference diagrams from subject-item selection data"};
    app.require_subcommand(1);

    RunConfig config;
    std::string input;
    std::string format_in;
    std::string clusters = "3,5,7,8";
    std::string mode = "weakest";
    std::string emit = "svg,json";
    std::string parts = "both";
    std::string out;
    std::string images;
    auto* run_cmd = app.add_subcommand("run", "Cluster, profile, lay out and render diagrams");
    run_cmd->add_option("--input", input, "Response file (CSV or JSON)")->required();
    run_cmd->add_option("--format-in", format_in, "csv|json (default: from extension)")
        ->check(CLI::IsMember({"csv", "json"}));
    run_cmd->add_option("--clusters", clusters, "Comma-separated granularities")->capture_default_str();
    run_cmd->add_option("--mode", mode, "Secondary cluster rule: weakest|runner-up")
        ->check(CLI::IsMember({"weakest", "runner-up"}))
        ->capture_default_str();
    run_cmd->add_option("--seed", config.seed, "Master seed")->capture_default_str();
    run_cmd->add_option("--restarts", config.restarts, "k-medoids restarts")->capture_default_str();
    run_cmd->add_option("--max-iterations", config.max_iterations, "k-medoids iteration cap")->capture_default_str();
    run_cmd->add_option("--layout-iterations", config.layout.iterations, "Spring layout iteration cap")
        ->capture_default_str();
    run_cmd->add_option("--out", out, "Output directory")->required();
    run_cmd->add_option("--emit,--format", emit, "Comma-separated subset of svg,dot,json")->capture_default_str();
    run_cmd->add_option("--parts", parts, "part1|part2|both")
        ->check(CLI::IsMember({"part1", "part2", "both"}))
        ->capture_default_str();
    run_cmd->add_option("--images", images, "JSON manifest {item_label: image path}");
    run_cmd->add_flag("--hide-isolated", config.hide_isolated, "Drop nodes without links");
    run_cmd->add_flag("--dump-similarity", config.dump_similarity, "Also write similarity.tsv");

    std::string manifest;
    std::string replay_out;
    auto* replay_cmd = app.add_subcommand("replay", "Re-run the configuration recorded in a manifest");
    replay_cmd->add_option("--manifest", manifest, "manifest.json from an earlier run")->required();
    replay_cmd->add_option("--out", replay_out, "Output directory")->required();

    SynthParams synth;
    std::string gen_out;
    std::string gen_format = "csv";
    std::uint64_t gen_seed = 7;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a planted-partition synthetic dataset");
    gen_cmd->add_option("--items", synth.num_items)->capture_default_str();
    gen_cmd->add_option("--subjects", synth.num_subjects)->capture_default_str();
    gen_cmd->add_option("--clusters", synth.num_planted_clusters, "Planted clusters")->capture_default_str();
    gen_cmd->add_option("--primary-prob", synth.primary_select_prob, "Chance a non-switch pick comes from home")
        ->capture_default_str();
    gen_cmd->add_option("--switch-prob", synth.switch_prob, "Chance a pick comes from the away cluster")
        ->capture_default_str();
    gen_cmd->add_option("--seed", gen_seed, "Master seed")->capture_default_str();
    gen_cmd->add_option("--format", gen_format, "csv|json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    gen_cmd->add_option("--out", gen_out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigInvalid;
    }

    if (run_cmd->parsed()) {
        config.input = input;
        config.output = out;
        if (!format_in.empty()) config.format = format_in == "json" ? InputFormat::json : InputFormat::csv;
        if (!images.empty()) config.images = images;
        config.mode = *parse_secondary_mode(mode);
        config.parts = *parse_parts(parts);
        try {
            config.granularities = parse_cluster_list(clusters);
        } catch (const std::exception&) {
            std::cerr << "prefdiag: --clusters expects a comma-separated list of counts\n";
            return kExitConfigInvalid;
        }
        const auto formats = parse_formats(emit);
        if (!formats) {
            std::cerr << "prefdiag: --emit accepts svg, dot, json\n";
            return kExitConfigInvalid;
        }
        config.formats = *formats;
        return report(run(config));
    }
    if (replay_cmd->parsed()) {
        return report(replay(manifest, replay_out));
    }
    if (gen_cmd->parsed()) {
        synth.seed = derive_seed(gen_seed, "synth");
        try {
            for (const auto& path : write_synthetic(synth, gen_out, gen_format == "json" ? InputFormat::json : InputFormat::csv)) {
                std::cout << path.string() << '\n';
            }
        } catch (const InvalidArgument& e) {
            std::cerr << "prefdiag: " << e.what() << '\n';
            return kExitConfigInvalid;
        } catch (const std::exception& e) {
            std::cerr << "prefdiag: " << e.what() << '\n';
            return kExitInternal;
        }
        return kExitOk;
    }
    return kExitConfigInvalid;
}
