#include "ccp.h"

#include <cstring>
#include <sstream>
#include <string>

#include "ccps/engine.hpp"
#include "ccps/instance.hpp"
#include "ccps/oracle.hpp"
#include "ccps/preprocess.hpp"
#include "ccps/toolkit.hpp"
#include "json.hpp"

using nlohmann::json;

struct CcpInstanceHandle {
    ccps::CcpInstance inst;
};

struct CcpReportHandle {
    ccps::SolveReport report;
};

namespace {

thread_local std::string g_last_error;

CcpStatus fail(CcpStatus code, const std::string& message) {
    g_last_error = message;
    return code;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
CcpStatus guarded(F&& body) {
    try {
        return body();
    } catch (const ccps::SchemaError& e) {
        return fail(CCP_ERR_SCHEMA, e.what());
    } catch (const ccps::ValidationError& e) {
        return fail(CCP_ERR_VALIDATION, e.what());
    } catch (const ccps::ParamError& e) {
        return fail(CCP_ERR_PARAM, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(CCP_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(CCP_ERR_INTERNAL, e.what());
    }
}

}  // namespace

extern "C" {

const char* ccp_last_error(void) { return g_last_error.c_str(); }

const char* ccp_version(void) { return "1.0.0"; }

CcpStatus ccp_instance_read(const char* path, CcpInstanceHandle** out) {
    if (!path || !out) return fail(CCP_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto* h = new CcpInstanceHandle{ccps::load_instance_file(path)};
        *out = h;
        return CCP_OK;
    });
}

CcpStatus ccp_instance_parse(const char* json_text, CcpInstanceHandle** out) {
    if (!json_text || !out) return fail(CCP_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto* h = new CcpInstanceHandle{ccps::load_instance_text(json_text)};
        *out = h;
        return CCP_OK;
    });
}

CcpStatus ccp_instance_write(const CcpInstanceHandle* inst, const char* path) {
    if (!inst || !path) return fail(CCP_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        ccps::save_instance_file(inst->inst, path);
        return CCP_OK;
    });
}

CcpStatus ccp_instance_to_json(const CcpInstanceHandle* inst, char** out_text) {
    if (!inst || !out_text) return fail(CCP_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out_text = dup_string(ccps::instance_to_text(inst->inst));
        return CCP_OK;
    });
}

void ccp_instance_free(CcpInstanceHandle* inst) { delete inst; }

int ccp_instance_num_vars(const CcpInstanceHandle* inst) { return inst ? inst->inst.d : -1; }
int ccp_instance_num_rows(const CcpInstanceHandle* inst) { return inst ? inst->inst.m : -1; }
int ccp_instance_num_scenarios(const CcpInstanceHandle* inst) { return inst ? inst->inst.n : -1; }
const char* ccp_instance_name(const CcpInstanceHandle* inst) {
    return inst ? inst->inst.name.c_str() : "";
}

CcpStatus ccp_instance_example(CcpInstanceHandle** out) {
    if (!out) return fail(CCP_ERR_INVALID_ARGUMENT, "null argument");
    *out = new CcpInstanceHandle{ccps::example_instance()};
    return CCP_OK;
}

CcpStatus ccp_generate(const char* family, int n, const char* eps, unsigned long long seed,
                       const char* params_json, CcpInstanceHandle** out) {
    if (!family || !eps || !out) return fail(CCP_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        ccps::GenSpec spec;
        spec.family = family;
        spec.n = n;
        spec.epsilon = ccps::Rational::parse(eps);
        spec.seed = seed;
        if (params_json && *params_json) {
            json params = json::parse(params_json);
            spec.periods = params.value("periods", spec.periods);
            spec.resources = params.value("resources", spec.resources);
            spec.customers = params.value("customers", spec.customers);
            spec.nuclear_fraction = params.value("nuclear_fraction", spec.nuclear_fraction);
        }
        *out = new CcpInstanceHandle{ccps::generate(spec)};
        return CCP_OK;
    });
}

CcpStatus ccp_solve(const CcpInstanceHandle* inst, const char* options_json,
                    CcpReportHandle** out) {
    if (!inst || !out) return fail(CCP_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        ccps::SolverConfig cfg;
        if (options_json && *options_json) {
            json opts = json::parse(options_json);
            int replay_figure = opts.value("replay_figure", 0);
            if (replay_figure) cfg = ccps::SolverConfig::replay_figure(replay_figure);
            auto text = [&](const char* key, const std::string& dflt) {
                return opts.value(key, dflt);
            };
            if (opts.contains("branching"))
                cfg.branching = text("branching", "") == "classic" ? ccps::Branching::Classic
                                                                   : ccps::Branching::Dominance;
            if (opts.contains("propagation")) {
                std::string p = text("propagation", "");
                cfg.propagation = p == "off"      ? ccps::PropagationMode::Off
                                  : p == "approx" ? ccps::PropagationMode::Approx
                                                  : ccps::PropagationMode::Exact;
            }
            if (opts.contains("cuts"))
                cfg.cuts = text("cuts", "") == "mixing" ? ccps::CutMode::Mixing
                                                        : ccps::CutMode::Off;
            if (opts.contains("node_select"))
                cfg.node_select = text("node_select", "") == "dfs" ? ccps::NodeSelect::Dfs
                                                                   : ccps::NodeSelect::BestBound;
            if (opts.contains("branch_rule"))
                cfg.branch_rule = text("branch_rule", "") == "pseudocost"
                                      ? ccps::BranchRule::Pseudocost
                                      : ccps::BranchRule::MostInfeasible;
            cfg.time_limit = opts.value("time_limit", cfg.time_limit);
            cfg.node_limit = opts.value("node_limit", cfg.node_limit);
            cfg.gap_limit = opts.value("gap_limit", cfg.gap_limit);
            cfg.rng_seed = opts.value("seed", cfg.rng_seed);
            if (opts.contains("inject_incumbent") && opts["inject_incumbent"].is_number())
                cfg.inject_incumbent = opts["inject_incumbent"].get<double>();
            cfg.trace_path = opts.value("trace_file", cfg.trace_path);
        }
        *out = new CcpReportHandle{ccps::solve(inst->inst, cfg)};
        return CCP_OK;
    });
}

void ccp_report_free(CcpReportHandle* report) { delete report; }

const char* ccp_report_status(const CcpReportHandle* report) {
    return report ? ccps::to_string(report->report.status) : "INVALID";
}
double ccp_report_primal_bound(const CcpReportHandle* report) {
    return report->report.primal_bound;
}
double ccp_report_dual_bound(const CcpReportHandle* report) { return report->report.dual_bound; }
double ccp_report_gap(const CcpReportHandle* report) { return report->report.gap(); }
long ccp_report_nodes(const CcpReportHandle* report) { return report->report.nodes_explored; }
double ccp_report_fixings_per_node(const CcpReportHandle* report) {
    return report->report.fixings_per_node;
}
long ccp_report_pruned(const CcpReportHandle* report, const char* cause) {
    if (!report || !cause) return -1;
    std::string c = cause;
    if (c == "bound") return report->report.pruned_bound;
    if (c == "infeasible") return report->report.pruned_infeasible;
    if (c == "overlap") return report->report.pruned_overlap;
    return -1;
}
double ccp_report_wall_time(const CcpReportHandle* report) { return report->report.wall_time; }
double ccp_report_propagation_time(const CcpReportHandle* report) {
    return report->report.propagation_time;
}
int ccp_report_has_solution(const CcpReportHandle* report) {
    return report && report->report.incumbent ? 1 : 0;
}

CcpStatus ccp_report_solution(const CcpReportHandle* report, double* x, double* v, int* z) {
    if (!report) return fail(CCP_ERR_INVALID_ARGUMENT, "null report");
    if (!report->report.incumbent) return fail(CCP_ERR_INVALID_ARGUMENT, "no incumbent attached");
    const auto& sol = *report->report.incumbent;
    if (x) std::memcpy(x, sol.x.data(), sol.x.size() * sizeof(double));
    if (v) std::memcpy(v, sol.v.data(), sol.v.size() * sizeof(double));
    if (z)
        for (size_t i = 0; i < sol.z.size(); ++i) z[i] = sol.z[i];
    return CCP_OK;
}

CcpStatus ccp_oracle(const CcpInstanceHandle* inst, int* feasible, double* objective,
                     char** support_json) {
    if (!inst) return fail(CCP_ERR_INVALID_ARGUMENT, "null instance");
    return guarded([&] {
        ccps::OracleResult res = ccps::brute_force_optimum(inst->inst);
        if (feasible) *feasible = res.objective.has_value() ? 1 : 0;
        if (objective) *objective = res.objective.value_or(0.0);
        if (support_json) {
            json arr = json::array();
            for (int i : res.support0) arr.push_back(i + 1);
            *support_json = dup_string(arr.dump());
        }
        return CCP_OK;
    });
}

CcpStatus ccp_dominance_dump(const CcpInstanceHandle* inst, int use_strengthened,
                             char** out_text) {
    if (!inst || !out_text) return fail(CCP_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        ccps::QuantileBounds qb = ccps::quantile_bounds(inst->inst);
        ccps::DominanceGraph g =
            ccps::build_dominance_graph(inst->inst, qb, use_strengthened != 0);
        ccps::transitive_reduction(g);
        std::ostringstream out;
        ccps::dump_dominance(g, inst->inst.n, out);
        *out_text = dup_string(out.str());
        return CCP_OK;
    });
}

CcpStatus ccp_run_bench(const char* const* instance_paths, int num_instances,
                        const char* const* config_labels, int num_configs, double time_limit,
                        long node_limit, char** csv_text) {
    if (!instance_paths || !config_labels || !csv_text)
        return fail(CCP_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::vector<std::string> files(instance_paths, instance_paths + num_instances);
        std::vector<std::string> labels(config_labels, config_labels + num_configs);
        ccps::BenchResult result = ccps::run_bench(files, labels, time_limit, node_limit);
        std::ostringstream out;
        ccps::write_bench_csv(result, out);
        *csv_text = dup_string(out.str());
        return CCP_OK;
    });
}

double ccp_shifted_geomean(const double* xs, int count, double shift) {
    std::vector<double> v(xs, xs + count);
    return ccps::shifted_geomean(v, shift);
}

void ccp_string_free(char* text) { delete[] text; }

}  // extern "C"
