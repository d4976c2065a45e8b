#include "prefdiag/dumps.hpp"
#include "prefdiag/errors.hpp"
#include "prefdiag/pipeline.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

using namespace prefdiag;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("prefdiag_test_" + tag + "_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void spit(const fs::path& p, std::string_view text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

const char* kRmdCsv =
    "#catalog: a0;a1;a2;a3;a4;a5\n"
    "s0,a0;a1\n"
    "s1,a0;a1;a2\n"
    "s2,a3;a4\n"
    "s3,a4;a5;a1\n";

int cli(const std::string& args) {
    const std::string cmd = std::string(PREFDIAG_CLI) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("run writes the full bundle") {
    TempDir tmp("bundle");
    spit(tmp.path / "rmd.csv", kRmdCsv);
    RunConfig config;
    config.input = tmp.path / "rmd.csv";
    config.output = tmp.path / "out";
    config.granularities = {2, 3};
    config.formats = {true, true, true};
    config.dump_similarity = true;
    const auto report = run(config);
    CHECK(report.exit_code == kExitOk);
    for (const char* f : {"manifest.json", "similarity.tsv", "2/clustering.json", "2/profiles.json", "2/part1.svg",
                          "2/part2.svg", "2/part1.dot", "2/part2.json", "3/part2.svg"}) {
        INFO(f);
        CHECK(fs::exists(config.output / f));
    }
    const auto manifest = Json::parse(slurp(config.output / "manifest.json"));
    CHECK(manifest["granularities"].size() == 2);
    CHECK(manifest["granularities"][0]["status"] == "ok");
    CHECK(manifest["dataset"]["items"] == 6);
    CHECK(manifest["granularities"][0]["objective"].get<double>() == doctest::Approx(13.0 / 6));

    const auto diagram = diagram_from_json(Json::parse(slurp(config.output / "2/part2.json")));
    CHECK(diagram.include_switches);
    CHECK(diagram.granularity == 2);
}

TEST_CASE("reruns are byte-identical and replay reproduces them") {
    TempDir tmp("rerun");
    spit(tmp.path / "rmd.csv", kRmdCsv);
    RunConfig config;
    config.input = tmp.path / "rmd.csv";
    config.granularities = {2, 3};
    config.seed = 11;
    config.output = tmp.path / "a";
    REQUIRE(run(config).exit_code == kExitOk);
    config.output = tmp.path / "b";
    REQUIRE(run(config).exit_code == kExitOk);
    REQUIRE(replay(tmp.path / "a" / "manifest.json", tmp.path / "c").exit_code == kExitOk);
    for (const auto& entry : fs::recursive_directory_iterator(tmp.path / "a")) {
        if (!entry.is_regular_file()) continue;
        const auto rel = fs::relative(entry.path(), tmp.path / "a");
        INFO(rel.string());
        CHECK(slurp(entry.path()) == slurp(tmp.path / "b" / rel));
        CHECK(slurp(entry.path()) == slurp(tmp.path / "c" / rel));
    }

    spit(tmp.path / "rmd.csv", std::string(kRmdCsv) + "s4,a2\n");
    CHECK(replay(tmp.path / "a" / "manifest.json", tmp.path / "d").exit_code == kExitInputUnreadable);
}

TEST_CASE("single cluster yields part 1 and a diagnostic for part 2") {
    TempDir tmp("k1");
    spit(tmp.path / "rmd.csv", kRmdCsv);
    RunConfig config;
    config.input = tmp.path / "rmd.csv";
    config.output = tmp.path / "out";
    config.granularities = {1};
    const auto report = run(config);
    CHECK(report.exit_code != kExitOk);
    CHECK(fs::exists(config.output / "1/part1.svg"));
    CHECK_FALSE(fs::exists(config.output / "1/part2.svg"));
    CHECK_FALSE(report.diagnostics.empty());
    const auto manifest = Json::parse(slurp(config.output / "manifest.json"));
    CHECK(manifest["granularities"][0]["parts"]["part1"]["status"] == "ok");
    CHECK(manifest["granularities"][0]["parts"]["part2"]["status"] == "error");
}

TEST_CASE("one bad granularity does not stop the others") {
    TempDir tmp("partial");
    spit(tmp.path / "rmd.csv", kRmdCsv);
    RunConfig config;
    config.input = tmp.path / "rmd.csv";
    config.output = tmp.path / "out";
    config.granularities = {2, 9};
    const auto report = run(config);
    CHECK(report.exit_code == kExitConfigInvalid);
    CHECK(fs::exists(config.output / "2/part2.svg"));
    const auto manifest = Json::parse(slurp(config.output / "manifest.json"));
    CHECK(manifest["granularities"][1]["status"] == "error");
}

TEST_CASE("input and config errors map to exit codes") {
    TempDir tmp("errors");
    RunConfig config;
    config.input = tmp.path / "missing.csv";
    config.output = tmp.path / "out";
    CHECK(run(config).exit_code == kExitInputUnreadable);

    spit(tmp.path / "bad.csv", "s0,a0\ns1\n");
    config.input = tmp.path / "bad.csv";
    const auto bad = run(config);
    CHECK(bad.exit_code == kExitInputUnreadable);
    REQUIRE_FALSE(bad.diagnostics.empty());
    CHECK(bad.diagnostics.front().find("line 2") != std::string::npos);

    spit(tmp.path / "rmd.csv", kRmdCsv);
    config.input = tmp.path / "rmd.csv";
    config.granularities = {};
    CHECK(run(config).exit_code == kExitConfigInvalid);
    config.granularities = {0};
    CHECK(run(config).exit_code == kExitConfigInvalid);
    config.granularities = {2};
    config.restarts = 0;
    CHECK(run(config).exit_code == kExitConfigInvalid);
}

TEST_CASE("config survives a json round trip") {
    RunConfig config;
    config.input = "x.csv";
    config.format = InputFormat::csv;
    config.granularities = {4, 2};
    config.mode = SecondaryMode::runner_up;
    config.seed = 99;
    config.parts = Parts::part2;
    config.hide_isolated = true;
    config.layout.iterations = 42;
    const auto doc = config_to_json(config);
    CHECK(config_to_json(config_from_json(doc)) == doc);
    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"input": 3})")), InvalidArgument);
}

TEST_CASE("synthetic files re-parse") {
    TempDir tmp("synth");
    SynthParams p;
    for (auto fmt : {InputFormat::csv, InputFormat::json}) {
        const auto out = tmp.path / (fmt == InputFormat::csv ? "csv" : "json");
        const auto files = write_synthetic(p, out, fmt);
        REQUIRE(files.size() == 2);
        const auto text = slurp(files[0]);
        CHECK(parse_dataset(std::string_view(text), fmt) == generate(p).dataset);
        const auto truth = Json::parse(slurp(files[1]));
        CHECK(truth["item_cluster"].size() == p.num_items);
    }
}

TEST_CASE("cli end to end") {
    TempDir tmp("cli");
    const auto dir = tmp.path.string();
    REQUIRE(cli("gen --seed 3 --out " + dir + "/gen") == 0);
    REQUIRE(cli("gen --seed 3 --out " + dir + "/gen2") == 0);
    CHECK(slurp(tmp.path / "gen/dataset.csv") == slurp(tmp.path / "gen2/dataset.csv"));

    CHECK(cli("run --input " + dir + "/gen/dataset.csv --clusters 3,4 --emit svg,dot,json --out " + dir + "/run") == 0);
    CHECK(cli("run --input " + dir + "/gen/dataset.csv --clusters 3 --mode weakest --format svg,json --out " + dir + "/alias") == 0);
    CHECK(fs::exists(tmp.path / "alias/3/part1.json"));
    CHECK(fs::exists(tmp.path / "run/4/part2.dot"));
    CHECK(cli("replay --manifest " + dir + "/run/manifest.json --out " + dir + "/again") == 0);
    CHECK(slurp(tmp.path / "run/4/part2.svg") == slurp(tmp.path / "again/4/part2.svg"));

    CHECK(cli("run --input " + dir + "/nope.csv --out " + dir + "/x") == kExitInputUnreadable);
    CHECK(cli("run --input " + dir + "/gen/dataset.csv --clusters 3 --mode sideways --out " + dir + "/x") ==
          kExitConfigInvalid);
    CHECK(cli("run --input " + dir + "/gen/dataset.csv --clusters 1 --out " + dir + "/k1") != 0);
    CHECK(fs::exists(tmp.path / "k1/1/part1.svg"));
    CHECK(cli("bogus") == kExitConfigInvalid);
}
