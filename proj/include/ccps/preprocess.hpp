#pragma once

#include <iosfwd>
#include <vector>

#include "ccps/instance.hpp"

namespace ccps {

/// Per-row quantile lower bounds xi0 on v derived from the knapsack budget,
/// with the defining permutations and prefix lengths.
struct QuantileBounds {
    std::vector<double> xi0;               // length m
    std::vector<int> tau;                  // length m, 1-based prefix length
    std::vector<std::vector<int>> perm;    // per row: scenarios sorted by xi_k desc
};

QuantileBounds quantile_bounds(const CcpInstance& inst);

/// One strengthened big-M entry: either dropped or v_k >= rhs - slope * z_i.
struct StrengthenedEntry {
    int scenario;
    int row;
    bool dropped;
    double rhs;    // xi_ik
    double slope;  // xi_ik - xi0_k
};

struct StrengthenedModel {
    std::vector<StrengthenedEntry> entries;         // n*m, row-major by scenario
    std::vector<double> global_lower;               // v_k >= xi0_k
    std::vector<std::vector<double>> xibar;         // n x m, max(xi, xi0)
};

StrengthenedModel strengthen_coefficients(const CcpInstance& inst, const QuantileBounds& qb);

/// Scenario dominance DAG: pairs (i,j) with mat^i <= mat^j componentwise
/// (equal rows oriented by index), its transitive reduction, and the
/// below/above sets used by dominance-based branching.
struct DominanceGraph {
    bool used_bar = false;
    std::vector<std::pair<int, int>> pairs;    // i dominated-by j
    std::vector<std::pair<int, int>> reduced;
    std::vector<std::vector<int>> below;       // N_j^-, includes j
    std::vector<std::vector<int>> above;       // N_j^+, includes j
    std::vector<std::vector<double>> matrix;   // the matrix the relation was built from
};

DominanceGraph build_dominance_graph(const CcpInstance& inst, const QuantileBounds& qb,
                                     bool use_bar);
void transitive_reduction(DominanceGraph& g);

/// Edge-list debug dump, one "i -> j" per line (1-based), plus %DP and %NDI.
void dump_dominance(const DominanceGraph& g, int n, std::ostream& out);

/// Everything the engine precomputes once per instance.
struct Preprocessed {
    QuantileBounds qb;
    StrengthenedModel strong;
    DominanceGraph graph;  // on xibar, reduced populated
};

Preprocessed preprocess(const CcpInstance& inst);

}  // namespace ccps
