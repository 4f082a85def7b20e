/* C API for the chance-constrained branch-and-cut solver.
 *
 * All functions return CCP_OK on success or an error code; the message for
 * the most recent failure on the calling thread is available through
 * ccp_last_error().  Handles are opaque and must be released with the
 * matching *_free function.
 */
#ifndef CCP_H
#define CCP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct CcpInstanceHandle CcpInstanceHandle;
typedef struct CcpReportHandle CcpReportHandle;

typedef enum {
    CCP_OK = 0,
    CCP_ERR_IO = 1,
    CCP_ERR_SCHEMA = 2,
    CCP_ERR_VALIDATION = 3,
    CCP_ERR_PARAM = 4,
    CCP_ERR_INVALID_ARGUMENT = 5,
    CCP_ERR_INTERNAL = 6
} CcpStatus;

const char* ccp_last_error(void);
const char* ccp_version(void);

/* ---- instances ---- */
CcpStatus ccp_instance_read(const char* path, CcpInstanceHandle** out);
CcpStatus ccp_instance_parse(const char* json_text, CcpInstanceHandle** out);
CcpStatus ccp_instance_write(const CcpInstanceHandle* inst, const char* path);
CcpStatus ccp_instance_to_json(const CcpInstanceHandle* inst, char** out_text);
void ccp_instance_free(CcpInstanceHandle* inst);

int ccp_instance_num_vars(const CcpInstanceHandle* inst);
int ccp_instance_num_rows(const CcpInstanceHandle* inst);
int ccp_instance_num_scenarios(const CcpInstanceHandle* inst);
const char* ccp_instance_name(const CcpInstanceHandle* inst);

/* The built-in 7-scenario illustration instance. */
CcpStatus ccp_instance_example(CcpInstanceHandle** out);

/* ---- generators ----
 * family: "ccrp" | "ccmpp" | "ccls"; eps: "num/den";
 * params_json (optional, may be NULL): {"periods":10,"resources":20,
 * "customers":30,"nuclear_fraction":0.2}
 */
CcpStatus ccp_generate(const char* family, int n, const char* eps, unsigned long long seed,
                       const char* params_json, CcpInstanceHandle** out);

/* ---- solving ----
 * options_json (optional, may be NULL), all fields optional:
 *   {"branching":"classic|dominance", "propagation":"off|approx|exact",
 *    "cuts":"off|mixing", "node_select":"best-bound|dfs",
 *    "branch_rule":"most-infeasible|pseudocost", "time_limit":3600,
 *    "node_limit":1000000, "gap_limit":0.0, "seed":0,
 *    "replay_figure":0, "inject_incumbent":59.0, "trace_file":"..."}
 */
CcpStatus ccp_solve(const CcpInstanceHandle* inst, const char* options_json,
                    CcpReportHandle** out);
void ccp_report_free(CcpReportHandle* report);

/* "OPTIMAL" | "INFEASIBLE" | "TIME_LIMIT" | "NODE_LIMIT" | "GAP_LIMIT" */
const char* ccp_report_status(const CcpReportHandle* report);
double ccp_report_primal_bound(const CcpReportHandle* report);
double ccp_report_dual_bound(const CcpReportHandle* report);
double ccp_report_gap(const CcpReportHandle* report);
long ccp_report_nodes(const CcpReportHandle* report);
double ccp_report_fixings_per_node(const CcpReportHandle* report);
long ccp_report_pruned(const CcpReportHandle* report, const char* cause); /* bound|infeasible|overlap */
double ccp_report_wall_time(const CcpReportHandle* report);
double ccp_report_propagation_time(const CcpReportHandle* report);
/* 1 when an incumbent solution is attached, 0 otherwise */
int ccp_report_has_solution(const CcpReportHandle* report);
/* buffers sized d / m / n; any pointer may be NULL */
CcpStatus ccp_report_solution(const CcpReportHandle* report, double* x, double* v, int* z);

/* ---- brute-force oracle (n <= 20) ---- */
CcpStatus ccp_oracle(const CcpInstanceHandle* inst, int* feasible, double* objective,
                     char** support_json);

/* ---- dominance diagnostics ---- */
CcpStatus ccp_dominance_dump(const CcpInstanceHandle* inst, int use_strengthened, char** out_text);

/* ---- benchmark harness ---- */
CcpStatus ccp_run_bench(const char* const* instance_paths, int num_instances,
                        const char* const* config_labels, int num_configs, double time_limit,
                        long node_limit, char** csv_text);

double ccp_shifted_geomean(const double* xs, int count, double shift);

void ccp_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* CCP_H */
