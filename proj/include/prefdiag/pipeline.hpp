#pragma once

#include "prefdiag/dataset.hpp"
#include "prefdiag/dumps.hpp"
#include "prefdiag/layout.hpp"
#include "prefdiag/profile.hpp"
#include "prefdiag/synth.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace prefdiag {

enum class Parts { part1, part2, both };

std::string_view to_string(Parts parts);
std::optional<Parts> parse_parts(std::string_view text);

struct OutputFormats {
    bool svg = true;
    bool dot = false;
    bool json = true;

    bool any() const { return svg || dot || json; }
};

/// Parses "svg,dot,json"-style lists; nullopt on unknown names.
std::optional<OutputFormats> parse_formats(std::string_view text);

struct RunConfig {
    std::filesystem::path input;
    std::optional<InputFormat> format;  // inferred from the extension when empty
    std::vector<std::size_t> granularities{3, 5, 7, 8};
    SecondaryMode mode = SecondaryMode::weakest;
    std::uint64_t seed = 0;
    std::size_t restarts = 10;
    std::size_t max_iterations = 100;
    std::filesystem::path output;
    OutputFormats formats;
    Parts parts = Parts::both;
    std::optional<std::filesystem::path> images;
    bool hide_isolated = false;
    bool dump_similarity = false;
    LayoutParams layout;  // seed is overridden per diagram
};

/// Process exit codes (sysexits-style where applicable).
enum ExitCode : int {
    kExitOk = 0,
    kExitInputUnreadable = 2,
    kExitConfigInvalid = 64,
    kExitInternal = 70,
};

struct RunReport {
    int exit_code = kExitOk;
    std::vector<std::string> diagnostics;
    Json manifest;
};

/// Everything except the output directory, which the caller chooses.
Json config_to_json(const RunConfig& config);
/// Throws InvalidArgument on malformed or missing fields.
RunConfig config_from_json(const Json& doc);

/// Clusters, profiles, builds, lays out, and renders every requested
/// granularity/part into `output/<k>/part{1,2}.<fmt>`, then writes
/// `output/manifest.json`. A failure at one granularity is recorded and the
/// others still run.
RunReport run(const RunConfig& config);

/// Re-runs the configuration stored in a manifest into `output`.
RunReport replay(const std::filesystem::path& manifest, const std::filesystem::path& output);

/// Writes `dataset.<csv|json>` and `truth.json` into `output`; returns the
/// written paths.
std::vector<std::filesystem::path> write_synthetic(const SynthParams& params, const std::filesystem::path& output,
                                                   InputFormat format);

/// Write-then-rename so readers never see a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace prefdiag
