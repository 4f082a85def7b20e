#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ccps {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterLimit };

/// Variable status in a simplex basis.
enum class VarStat : std::int8_t { Basic = 0, AtLower = 1, AtUpper = 2, NonbasicFree = 3 };

/// Warm-start token: one status per structural column followed by one per row
/// logical.  Positions of basic variables are reconstructed on adoption.
struct Basis {
    std::vector<VarStat> stat;
    bool empty() const { return stat.empty(); }
};

struct LpResult {
    LpStatus status = LpStatus::IterLimit;
    double objective = 0.0;
    std::vector<double> primal;         // structural columns
    std::vector<double> duals;          // one per row
    std::vector<double> reduced_costs;  // structural columns
    Basis basis;
    int iterations = 0;
};

struct LpMark {
    std::size_t journal_size = 0;
    int rows = 0;
    int cols = 0;
};

/// LP in computational form: columns with bounds and objective, rows with
/// range bounds [lo,hi] (sense encoded by the range).  Bound edits are
/// journaled so node processing can rewind to a checkpoint.
class LpModel {
public:
    int add_col(double lo, double hi, double obj);
    int add_row(const std::vector<std::pair<int, double>>& coeffs, double lo, double hi);

    void change_col_bounds(int j, double lo, double hi);
    void change_row_bounds(int i, double lo, double hi);

    LpMark checkpoint() const;
    void revert(const LpMark& mark);         // undoes bound edits and drops rows
    void revert_bounds(const LpMark& mark);  // undoes bound edits, keeps rows

    int num_cols() const { return (int)col_lo_.size(); }
    int num_rows() const { return (int)row_lo_.size(); }
    double col_lower(int j) const { return col_lo_[j]; }
    double col_upper(int j) const { return col_hi_[j]; }
    double row_lower(int i) const { return row_lo_[i]; }
    double row_upper(int i) const { return row_hi_[i]; }
    double col_obj(int j) const { return obj_[j]; }
    const std::vector<std::pair<int, double>>& col(int j) const { return cols_[j]; }

    void write_mps(std::ostream& out, const std::string& name = "CCPSNODE") const;

private:
    friend class Simplex;
    std::vector<std::vector<std::pair<int, double>>> cols_;  // (row, coef) per column
    std::vector<double> col_lo_, col_hi_, obj_;
    std::vector<double> row_lo_, row_hi_;

    struct BoundEdit {
        bool is_col;
        int index;
        double old_lo, old_hi;
    };
    std::vector<BoundEdit> journal_;
};

/// Bounded-variable revised simplex.  Primal (two-phase) for cold starts,
/// dual for warm restarts after bound tightenings or row additions.
class Simplex {
public:
    LpResult solve(const LpModel& model, const Basis* warm = nullptr);

    /// Bland-rule tableau simplex over exact rationals; last-resort fallback
    /// for numerically stuck models.  Slow, terminating, small models only.
    static LpResult solve_exact(const LpModel& model);
};

}  // namespace ccps
