#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "bcp/io.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kBin = BCPACK_BIN;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "bcp_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run(const std::string& args) {
    fs::path out_path = work_dir() / "stdout.txt";
    std::string cmd = "\"" + kBin + "\" " + args + " > \"" + out_path.string() + "\" 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = bcp::read_text_file(out_path.string());
    return result;
}

std::string write_file(const std::string& name, const std::string& text) {
    std::string path = (work_dir() / name).string();
    bcp::write_text_file(path, text);
    return path;
}

}  // namespace

TEST_CASE("solve prints a report and writes the packing") {
    std::string inst = write_file("pair.json",
                                  R"({"charts": [{"heights": [0.9, 0.1]}, {"heights": [0.1, 0.9]}]})");
    std::string out = (work_dir() / "pair_packing.json").string();
    RunResult r = run("solve --alg ga_lo --in \"" + inst + "\" --out \"" + out + "\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("length=2") != std::string::npos);
    CHECK(r.out.find("feasible=true") != std::string::npos);
    bcp::Packing packing = bcp::read_packing_file(out);
    CHECK(packing.at(0) == 1);
    CHECK(packing.at(1) == 1);
}

TEST_CASE("solve exits 3 when a two-bar algorithm meets a wider chart") {
    std::string inst = write_file("three.json", R"({"charts": [{"heights": [0.2, 0.9, 0.4]}]})");
    CHECK(run("solve --alg a --in \"" + inst + "\"").exit_code == 3);
    CHECK(run("solve --alg ga --in \"" + inst + "\"").exit_code == 3);
    // g handles any width
    RunResult g = run("solve --alg g --in \"" + inst + "\"");
    CHECK(g.exit_code == 0);
    CHECK(g.out.find("length=3") != std::string::npos);
}

TEST_CASE("solve exits 2 on malformed input") {
    std::string bad = write_file("bad.json", "{\"charts\": [{\"heights\": [");
    CHECK(run("solve --alg g --in \"" + bad + "\"").exit_code == 2);
    std::string zero = write_file("zero.json", R"({"charts": [{"heights": [0]}]})");
    CHECK(run("solve --alg g --in \"" + zero + "\"").exit_code == 2);
    CHECK(run("solve --alg nope --in \"" + zero + "\"").exit_code == 2);
    CHECK(run("solve --alg g --in \"" + (work_dir() / "absent.json").string() + "\"").exit_code ==
          2);
}

TEST_CASE("solve --order lex reorders before packing") {
    std::string inst = write_file("lex.json",
                                  R"({"charts": [{"heights": [0.5, 0.9]}, {"heights": [0.7, 0.1]}]})");
    RunResult r = run("solve --alg ga --order lex --in \"" + inst + "\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("feasible=true") != std::string::npos);
    RunResult rmax = run("solve --alg ga --order lex --lex-key max --in \"" + inst + "\"");
    CHECK(rmax.exit_code == 0);
    CHECK(run("solve --alg ga --order crooked --in \"" + inst + "\"").exit_code == 2);
}

TEST_CASE("generate is deterministic and feeds back into solve") {
    std::string out1 = (work_dir() / "gen1.json").string();
    std::string out2 = (work_dir() / "gen2.json").string();
    CHECK(run("generate --n 10 --seed 7 --out \"" + out1 + "\"").exit_code == 0);
    CHECK(run("generate --n 10 --seed 7 --out \"" + out2 + "\"").exit_code == 0);
    CHECK(bcp::read_text_file(out1) == bcp::read_text_file(out2));

    RunResult solved = run("solve --alg a --in \"" + out1 + "\"");
    CHECK(solved.exit_code == 0);
    CHECK(solved.out.find("feasible=true") != std::string::npos);

    RunResult to_stdout = run("generate --n 2 --seed 3");
    CHECK(to_stdout.exit_code == 0);
    CHECK(to_stdout.out.find("\"charts\"") != std::string::npos);
}

TEST_CASE("exact solves and reports the lower bound") {
    std::string inst = write_file("exact.json",
                                  R"({"charts": [{"heights": [0.6, 0.6]}, {"heights": [0.4, 0.4]}]})");
    RunResult r = run("exact --in \"" + inst + "\" --time-limit 10");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("length=2") != std::string::npos);
    CHECK(r.out.find("proven_optimal=true") != std::string::npos);
    CHECK(r.out.find("lower_bound=2") != std::string::npos);
}

TEST_CASE("export-lp writes a model in LP format") {
    std::string inst = write_file("lp.json",
                                  R"({"charts": [{"heights": [0.9, 0.1]}, {"heights": [0.1, 0.9]}]})");
    std::string out = (work_dir() / "model.lp").string();
    CHECK(run("export-lp --in \"" + inst + "\" --out \"" + out + "\"").exit_code == 0);
    std::string lp = bcp::read_text_file(out);
    CHECK(lp.rfind("Minimize", 0) == 0);
    CHECK(lp.find("Subject To") != std::string::npos);
    CHECK(lp.find("Binary") != std::string::npos);
    CHECK(lp.find("x_0_1") != std::string::npos);
}

TEST_CASE("bench writes csv and prints a markdown table") {
    std::string config = write_file("bench.json", R"({
        "sizes": [2],
        "instances_per_size": 5,
        "seed": 11,
        "algorithms": ["ga", "ffd"],
        "denominator": "lower_bound"
    })");
    std::string csv = (work_dir() / "bench.csv").string();
    RunResult r = run("bench --config \"" + config + "\" --csv \"" + csv + "\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("| n |") != std::string::npos);
    std::string csv_text = bcp::read_text_file(csv);
    CHECK(csv_text.rfind("algorithm,n,R_av,R_sd,mean_runtime_ms,denominator_kind\n", 0) == 0);
    CHECK(csv_text.find("ga,2,") != std::string::npos);
}

TEST_CASE("render writes an svg and honors --force") {
    std::string inst = write_file("render.json",
                                  R"({"charts": [{"heights": [0.9, 0.1]}, {"heights": [0.1, 0.9]}]})");
    std::string packing = write_file("render_packing.json", R"({"start_cell": {"0": 1, "1": 1}})");
    std::string svg = (work_dir() / "out.svg").string();
    CHECK(run("render --in \"" + inst + "\" --packing \"" + packing + "\" --out \"" + svg +
              "\"").exit_code == 0);
    CHECK(bcp::read_text_file(svg).rfind("<svg", 0) == 0);

    std::string clash = write_file("clash_packing.json", R"({"start_cell": {"0": 1, "1": 2}})");
    std::string inst2 = write_file("clash.json",
                                   R"({"charts": [{"heights": [0.9, 0.9]}, {"heights": [0.9, 0.9]}]})");
    std::string svg2 = (work_dir() / "clash.svg").string();
    CHECK(run("render --in \"" + inst2 + "\" --packing \"" + clash + "\" --out \"" + svg2 +
              "\"").exit_code == 2);
    CHECK(run("render --in \"" + inst2 + "\" --packing \"" + clash + "\" --out \"" + svg2 +
              "\" --force").exit_code == 0);
}

TEST_CASE("the cli requires a subcommand") {
    CHECK(run("").exit_code != 0);
    CHECK(run("conjure").exit_code != 0);
}
