// Command-line front end over the ccp C API.
//
// Exit codes: 0 optimal, 2 limit hit, 3 infeasible, 10 input error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccp.h"

namespace {

constexpr int kExitOptimal = 0;
constexpr int kExitLimit = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInputError = 10;

int run_solve(const std::string& file, const std::string& options_json, bool show_solution) {
    CcpInstanceHandle* inst = nullptr;
    if (ccp_instance_read(file.c_str(), &inst) != CCP_OK) {
        std::cerr << "error: " << ccp_last_error() << "\n";
        return kExitInputError;
    }
    CcpReportHandle* report = nullptr;
    if (ccp_solve(inst, options_json.c_str(), &report) != CCP_OK) {
        std::cerr << "error: " << ccp_last_error() << "\n";
        ccp_instance_free(inst);
        return kExitInputError;
    }
    std::string status = ccp_report_status(report);
    std::printf("instance        %s\n", ccp_instance_name(inst));
    std::printf("status          %s\n", status.c_str());
    std::printf("objective       %.9g\n", ccp_report_primal_bound(report));
    std::printf("dual bound      %.9g\n", ccp_report_dual_bound(report));
    std::printf("gap %%           %.4g\n", ccp_report_gap(report));
    std::printf("nodes           %ld\n", ccp_report_nodes(report));
    std::printf("fixings/node    %.3f\n", ccp_report_fixings_per_node(report));
    std::printf("pruned bound    %ld\n", ccp_report_pruned(report, "bound"));
    std::printf("pruned infeas   %ld\n", ccp_report_pruned(report, "infeasible"));
    std::printf("pruned overlap  %ld\n", ccp_report_pruned(report, "overlap"));
    std::printf("wall time       %.3fs\n", ccp_report_wall_time(report));
    std::printf("prop time       %.3fs\n", ccp_report_propagation_time(report));
    if (show_solution && ccp_report_has_solution(report)) {
        int d = ccp_instance_num_vars(inst);
        int n = ccp_instance_num_scenarios(inst);
        std::vector<double> x(d);
        std::vector<int> z(n);
        ccp_report_solution(report, x.data(), nullptr, z.data());
        std::printf("x              ");
        for (double v : x) std::printf(" %.6g", v);
        std::printf("\nz              ");
        for (int v : z) std::printf(" %d", v);
        std::printf("\n");
    }
    int code = kExitOptimal;
    if (status == "INFEASIBLE") code = kExitInfeasible;
    else if (status != "OPTIMAL") code = kExitLimit;
    ccp_report_free(report);
    ccp_instance_free(inst);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Branch-and-cut solver for chance-constrained programs"};
    app.require_subcommand(1);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
    std::string solve_file, branching = "dominance", propagation = "approx", cuts = "mixing";
    std::string node_select = "best-bound", branch_rule = "most-infeasible", trace_file;
    double time_limit = 3600.0, gap_limit = 0.0, inject = 0.0;
    long node_limit = 50000000;
    int replay_figure = 0;
    bool show_solution = false, inject_set = false;
    solve_cmd->add_option("file", solve_file)->required();
    solve_cmd->add_option("--branching", branching)->check(CLI::IsMember({"classic", "dominance"}));
    solve_cmd->add_option("--propagation", propagation)
        ->check(CLI::IsMember({"off", "approx", "exact"}));
    solve_cmd->add_option("--cuts", cuts)->check(CLI::IsMember({"off", "mixing"}));
    solve_cmd->add_option("--node-select", node_select)
        ->check(CLI::IsMember({"best-bound", "dfs"}));
    solve_cmd->add_option("--branch-rule", branch_rule)
        ->check(CLI::IsMember({"most-infeasible", "pseudocost"}));
    solve_cmd->add_option("--time-limit", time_limit, "seconds");
    solve_cmd->add_option("--node-limit", node_limit);
    solve_cmd->add_option("--gap-limit", gap_limit, "relative gap percent");
    solve_cmd->add_option("--replay-figure", replay_figure)->check(CLI::Range(1, 3));
    auto* inj = solve_cmd->add_option("--inject-incumbent", inject, "prime the primal bound");
    solve_cmd->add_option("--trace", trace_file, "node trace log file");
    solve_cmd->add_flag("--solution", show_solution, "print the incumbent");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a benchmark instance");
    std::string family, eps = "1/10", out_file = "instance.json";
    int gen_n = 100, periods = 10, resources = 20, customers = 30;
    double nuclear_fraction = 0.2;
    unsigned long long seed = 1;
    gen_cmd->add_option("family", family)->required()
        ->check(CLI::IsMember({"ccrp", "ccmpp", "ccls"}));
    gen_cmd->add_option("--n", gen_n, "scenario count")->required();
    gen_cmd->add_option("--eps", eps, "epsilon as num/den")->required();
    gen_cmd->add_option("--seed", seed)->required();
    gen_cmd->add_option("--periods", periods, "ccmpp/ccls horizon");
    gen_cmd->add_option("--resources", resources, "ccrp |I|");
    gen_cmd->add_option("--customers", customers, "ccrp |J|");
    gen_cmd->add_option("--nuclear-fraction", nuclear_fraction, "ccmpp f");
    gen_cmd->add_option("-o,--out", out_file)->required();

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force optimum (n <= 20)");
    std::string oracle_file;
    oracle_cmd->add_option("file", oracle_file)->required();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "run a config sweep over a directory");
    std::string bench_dir, configs_list = "classic:off:off,dominance:off:off,dominance:approx:off";
    std::string bench_out = "bench.csv";
    double bench_time_limit = 60.0;
    long bench_node_limit = 1000000;
    bench_cmd->add_option("dir", bench_dir)->required();
    bench_cmd->add_option("--configs", configs_list, "comma-separated labels");
    bench_cmd->add_option("--out", bench_out)->required();
    bench_cmd->add_option("--time-limit", bench_time_limit);
    bench_cmd->add_option("--node-limit", bench_node_limit);

    // dominance dump
    auto* dom_cmd = app.add_subcommand("dominance", "dump the dominance pairs of an instance");
    std::string dom_file;
    bool dom_raw = false;
    dom_cmd->add_option("file", dom_file)->required();
    dom_cmd->add_flag("--raw", dom_raw, "use the raw scenario matrix");

    CLI11_PARSE(app, argc, argv);
    inject_set = inj->count() > 0;

    if (solve_cmd->parsed()) {
        std::ostringstream opts;
        opts << "{\"branching\":\"" << branching << "\",\"propagation\":\"" << propagation
             << "\",\"cuts\":\"" << cuts << "\",\"node_select\":\"" << node_select
             << "\",\"branch_rule\":\"" << branch_rule << "\",\"time_limit\":" << time_limit
             << ",\"node_limit\":" << node_limit << ",\"gap_limit\":" << gap_limit;
        if (replay_figure) opts << ",\"replay_figure\":" << replay_figure;
        if (inject_set) opts << ",\"inject_incumbent\":" << inject;
        if (!trace_file.empty()) opts << ",\"trace_file\":\"" << trace_file << "\"";
        opts << "}";
        return run_solve(solve_file, opts.str(), show_solution);
    }

    if (gen_cmd->parsed()) {
        std::ostringstream params;
        params << "{\"periods\":" << periods << ",\"resources\":" << resources
               << ",\"customers\":" << customers << ",\"nuclear_fraction\":" << nuclear_fraction
               << "}";
        CcpInstanceHandle* inst = nullptr;
        if (ccp_generate(family.c_str(), gen_n, eps.c_str(), seed, params.str().c_str(), &inst) !=
            CCP_OK) {
            std::cerr << "error: " << ccp_last_error() << "\n";
            return kExitInputError;
        }
        if (ccp_instance_write(inst, out_file.c_str()) != CCP_OK) {
            std::cerr << "error: " << ccp_last_error() << "\n";
            ccp_instance_free(inst);
            return kExitInputError;
        }
        std::printf("wrote %s (%s: d=%d m=%d n=%d)\n", out_file.c_str(), ccp_instance_name(inst),
                    ccp_instance_num_vars(inst), ccp_instance_num_rows(inst),
                    ccp_instance_num_scenarios(inst));
        ccp_instance_free(inst);
        return kExitOptimal;
    }

    if (oracle_cmd->parsed()) {
        CcpInstanceHandle* inst = nullptr;
        if (ccp_instance_read(oracle_file.c_str(), &inst) != CCP_OK) {
            std::cerr << "error: " << ccp_last_error() << "\n";
            return kExitInputError;
        }
        int feasible = 0;
        double objective = 0.0;
        char* support = nullptr;
        if (ccp_oracle(inst, &feasible, &objective, &support) != CCP_OK) {
            std::cerr << "error: " << ccp_last_error() << "\n";
            ccp_instance_free(inst);
            return kExitInputError;
        }
        if (feasible) {
            std::printf("objective %.9g\nkept scenarios %s\n", objective, support);
        } else {
            std::printf("INFEASIBLE\n");
        }
        ccp_string_free(support);
        ccp_instance_free(inst);
        return feasible ? kExitOptimal : kExitInfeasible;
    }

    if (bench_cmd->parsed()) {
        std::vector<std::string> files;
        std::error_code ec;
        for (const auto& entry : std::filesystem::directory_iterator(bench_dir, ec)) {
            if (entry.path().extension() == ".json") files.push_back(entry.path().string());
        }
        if (ec || files.empty()) {
            std::cerr << "error: no .json instances under " << bench_dir << "\n";
            return kExitInputError;
        }
        std::sort(files.begin(), files.end());
        std::vector<std::string> labels;
        std::stringstream ss(configs_list);
        std::string label;
        while (std::getline(ss, label, ',')) labels.push_back(label);
        std::vector<const char*> file_ptrs, label_ptrs;
        for (const auto& f : files) file_ptrs.push_back(f.c_str());
        for (const auto& l : labels) label_ptrs.push_back(l.c_str());
        char* csv = nullptr;
        if (ccp_run_bench(file_ptrs.data(), (int)file_ptrs.size(), label_ptrs.data(),
                          (int)label_ptrs.size(), bench_time_limit, bench_node_limit,
                          &csv) != CCP_OK) {
            std::cerr << "error: " << ccp_last_error() << "\n";
            return kExitInputError;
        }
        std::ofstream out(bench_out);
        out << csv;
        std::printf("%s", csv);
        ccp_string_free(csv);
        std::printf("wrote %s\n", bench_out.c_str());
        return kExitOptimal;
    }

    if (dom_cmd->parsed()) {
        CcpInstanceHandle* inst = nullptr;
        if (ccp_instance_read(dom_file.c_str(), &inst) != CCP_OK) {
            std::cerr << "error: " << ccp_last_error() << "\n";
            return kExitInputError;
        }
        char* text = nullptr;
        if (ccp_dominance_dump(inst, dom_raw ? 0 : 1, &text) != CCP_OK) {
            std::cerr << "error: " << ccp_last_error() << "\n";
            ccp_instance_free(inst);
            return kExitInputError;
        }
        std::printf("%s", text);
        ccp_string_free(text);
        ccp_instance_free(inst);
        return kExitOptimal;
    }
    return kExitInputError;
}
