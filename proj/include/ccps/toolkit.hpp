#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ccps/engine.hpp"
#include "ccps/instance.hpp"

namespace ccps {

/// Deterministic random source: mt19937_64 with fixed derivations, so equal
/// seeds give byte-identical instances on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// uniform double in [a, b): a + (b - a) * (next() >> 11) * 2^-53
    double uniform(double a, double b) {
        double u = (next() >> 11) * 0x1.0p-53;
        return a + (b - a) * u;
    }

    /// uniform integer in {a, ..., b} by rejection
    std::int64_t uniform_int(std::int64_t a, std::int64_t b) {
        std::uint64_t span = (std::uint64_t)(b - a) + 1;
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return a + (std::int64_t)(x % span);
    }

private:
    std::mt19937_64 gen_;
};

struct GenSpec {
    std::string family;  // "ccrp", "ccmpp" or "ccls"
    int n = 100;
    Rational epsilon{1, 10};
    std::uint64_t seed = 1;
    int periods = 10;              // ccmpp horizon T or ccls periods
    int resources = 20;            // ccrp |I|
    int customers = 30;            // ccrp |J|
    double nuclear_fraction = 0.2; // ccmpp threshold f
};

struct ParamError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

CcpInstance gen_ccrp(const GenSpec& spec);
CcpInstance gen_ccmpp(const GenSpec& spec);
CcpInstance gen_ccls(const GenSpec& spec);
CcpInstance generate(const GenSpec& spec);  // dispatch on family

/// (prod (x_k + s))^(1/n) - s
double shifted_geomean(const std::vector<double>& xs, double shift);

/// "branching:propagation:cuts" -> config; also the shorthands
/// bc+mix = classic:off:mixing, db = dominance:off:mixing,
/// db+opf = dominance:approx:mixing.
SolverConfig parse_config_label(const std::string& label);

struct BenchRow {
    std::string instance;
    std::string config;
    std::string status;
    double time = 0.0;
    long nodes = 0;
    double fixings_per_node = 0.0;
    long prunings = 0;
    double prop_time = 0.0;
    double gap = 0.0;
    bool failed = false;
};

struct BenchSummary {
    std::string config;
    double time_sgm = 0.0;   // shift 1 second
    double nodes_sgm = 0.0;  // shift 100 nodes
    int solved = 0;
};

struct BenchResult {
    std::vector<BenchRow> rows;
    std::vector<BenchSummary> summary;
};

BenchResult run_bench(const std::vector<std::string>& instance_files,
                      const std::vector<std::string>& config_labels, double time_limit,
                      long node_limit);

void write_bench_csv(const BenchResult& result, std::ostream& out);

}  // namespace ccps
