#pragma once

#include <optional>
#include <vector>

#include "ccps/lp.hpp"

namespace ccps {

/// One search-tree node, characterized by branching sets (B0,B1) and the
/// full fixing sets (N0,N1) with B0 <= N0, B1 <= N1, N0 and N1 disjoint.
struct NodeState {
    long id = 0;
    std::optional<long> parent;
    std::vector<int> B0, B1;   // branched to 0 / 1
    std::vector<int> N0, N1;   // all fixings (branching, dominance, propagation, ...)
    std::vector<double> local_lower;  // current xi^{N0,N1}, length m
    double dual_bound = -1e300;
    int depth = 0;
    Basis basis_hint;
};

inline bool set_contains(const std::vector<int>& sorted, int x) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    return it != sorted.end() && *it == x;
}

inline void set_insert(std::vector<int>& sorted, int x) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    if (it == sorted.end() || *it != x) sorted.insert(it, x);
}

inline std::vector<int> set_union(std::vector<int> a, const std::vector<int>& b) {
    for (int x : b) set_insert(a, x);
    return a;
}

}  // namespace ccps
