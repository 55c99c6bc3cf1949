// bcpack: solve, bound, export, generate, benchmark and render strip
// packings of bar charts. Exit codes: 0 success, 2 malformed input,
// 3 algorithm/instance mismatch.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bcp/baseline.hpp"
#include "bcp/bench.hpp"
#include "bcp/exact.hpp"
#include "bcp/greedy.hpp"
#include "bcp/io.hpp"
#include "bcp/render.hpp"
#include "bcp/twobar.hpp"

namespace {

bcp::LexKey lex_key_from_name(const std::string& name) {
    if (name == "first") return bcp::LexKey::first_bar;
    if (name == "max") return bcp::LexKey::max_bar;
    throw bcp::ValidationError("unknown lex key: \"" + name + "\"");
}

void print_report(const bcp::PackingReport& report) {
    std::printf("length=%d, density=%.6f, feasible=%s\n", report.length, report.density,
                report.feasible ? "true" : "false");
}

struct SolveArgs {
    std::string alg, in, out;
    std::string order = "input";
    std::string lex_key = "first";
};

int cmd_solve(const SolveArgs& args) {
    bcp::Instance instance = bcp::read_instance_file(args.in);
    bcp::Algorithm algorithm = bcp::algorithm_from_name(args.alg);
    bcp::LexKey key = lex_key_from_name(args.lex_key);
    if (args.order == "lex") {
        // --order lex promotes the plain variants to their _lo form
        if (algorithm == bcp::Algorithm::g) {
            bcp::Packing packing = bcp::pack_g(instance, bcp::lex_order(instance, key));
            print_report(bcp::evaluate(instance, packing));
            if (!args.out.empty()) bcp::write_text_file(args.out, bcp::packing_to_json_text(packing));
            return 0;
        }
        if (algorithm == bcp::Algorithm::ga) algorithm = bcp::Algorithm::ga_lo;
        if (algorithm == bcp::Algorithm::a) algorithm = bcp::Algorithm::a_lo;
        if (algorithm == bcp::Algorithm::a1) algorithm = bcp::Algorithm::a1_lo;
    } else if (args.order != "input") {
        throw bcp::ValidationError("unknown order: \"" + args.order + "\"");
    }
    bcp::Packing packing = bcp::run_algorithm(algorithm, instance, key);
    print_report(bcp::evaluate(instance, packing));
    if (!args.out.empty()) bcp::write_text_file(args.out, bcp::packing_to_json_text(packing));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strip packing of bar charts"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "run a packing algorithm on an instance");
    solve->add_option("--alg", solve_args.alg, "one of: g ga ga_lo a a_lo a1 a1_lo ffd")->required();
    solve->add_option("--in", solve_args.in, "instance JSON file")->required();
    solve->add_option("--out", solve_args.out, "write the packing JSON here");
    solve->add_option("--order", solve_args.order, "input|lex (default input)");
    solve->add_option("--lex-key", solve_args.lex_key, "first|max (default first)");

    std::string exact_in, exact_out;
    double exact_limit = 60.0;
    auto* exact = app.add_subcommand("exact", "branch-and-bound optimum for two-bar instances");
    exact->add_option("--in", exact_in, "instance JSON file")->required();
    exact->add_option("--out", exact_out, "write the packing JSON here");
    exact->add_option("--time-limit", exact_limit, "seconds before returning the incumbent");

    std::string lp_in, lp_out;
    auto* export_lp = app.add_subcommand("export-lp", "write the binary program in LP format");
    export_lp->add_option("--in", lp_in, "instance JSON file")->required();
    export_lp->add_option("--out", lp_out, "LP output file")->required();

    int gen_n = 0;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    auto* generate = app.add_subcommand("generate", "emit a seeded random two-bar instance");
    generate->add_option("--n", gen_n, "number of charts")->required();
    generate->add_option("--seed", gen_seed, "generator seed");
    generate->add_option("--out", gen_out, "instance output file (default stdout)");

    std::string bench_config, bench_csv, bench_md;
    int bench_jobs = -1;
    auto* bench = app.add_subcommand("bench", "sweep seeded instances and tabulate R statistics");
    bench->add_option("--config", bench_config, "bench config JSON file")->required();
    bench->add_option("--csv", bench_csv, "write CSV records here");
    bench->add_option("--md", bench_md, "write a markdown table here");
    bench->add_option("--jobs", bench_jobs, "parallel workers (1 = serial, 0 = all cores)");

    std::string render_in, render_packing, render_out;
    bool render_force = false;
    auto* render = app.add_subcommand("render", "draw an instance + packing as SVG");
    render->add_option("--in", render_in, "instance JSON file")->required();
    render->add_option("--packing", render_packing, "packing JSON file")->required();
    render->add_option("--out", render_out, "SVG output file")->required();
    render->add_flag("--force", render_force, "render even if the packing is infeasible");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(solve_args);

        if (exact->parsed()) {
            bcp::Instance instance = bcp::read_instance_file(exact_in);
            bcp::ExactResult result = bcp::solve_exact(instance, exact_limit);
            std::printf("length=%d, proven_optimal=%s, lower_bound=%d\n", result.length,
                        result.proven_optimal ? "true" : "false",
                        bcp::packing_lower_bound(instance));
            if (!exact_out.empty())
                bcp::write_text_file(exact_out, bcp::packing_to_json_text(result.packing));
            return 0;
        }

        if (export_lp->parsed()) {
            bcp::Instance instance = bcp::read_instance_file(lp_in);
            bcp::write_text_file(lp_out, bcp::export_blp(instance));
            std::printf("wrote %s\n", lp_out.c_str());
            return 0;
        }

        if (generate->parsed()) {
            bcp::Instance instance = bcp::generate(gen_n, gen_seed);
            std::string text = bcp::instance_to_json_text(instance);
            if (gen_out.empty())
                std::fputs(text.c_str(), stdout);
            else
                bcp::write_text_file(gen_out, text);
            return 0;
        }

        if (bench->parsed()) {
            bcp::BenchConfig config = bcp::read_bench_config_file(bench_config);
            if (bench_jobs >= 0) config.jobs = bench_jobs;
            auto records = bcp::run_bench(config);
            std::string csv = bcp::records_to_csv(records);
            std::string md = bcp::records_to_markdown(records);
            std::fputs(md.c_str(), stdout);
            if (!bench_csv.empty()) bcp::write_text_file(bench_csv, csv);
            if (!bench_md.empty()) bcp::write_text_file(bench_md, md);
            return 0;
        }

        if (render->parsed()) {
            bcp::Instance instance = bcp::read_instance_file(render_in);
            bcp::Packing packing = bcp::read_packing_file(render_packing);
            bcp::write_text_file(render_out, bcp::render_svg(instance, packing, render_force));
            std::printf("wrote %s\n", render_out.c_str());
            return 0;
        }
    } catch (const bcp::MismatchError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const bcp::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "unexpected error: %s\n", e.what());
        return 1;
    }
    return 0;
}
