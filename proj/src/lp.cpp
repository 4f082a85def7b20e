#include "ccps/lp.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cassert>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include <boost/multiprecision/cpp_int.hpp>

namespace ccps {

namespace {
constexpr double kInfD = std::numeric_limits<double>::infinity();
constexpr double kTolPivot = 1e-9;
constexpr double kTolDj = 1e-7;
constexpr double kTolX = 1e-7;
}  // namespace

int LpModel::add_col(double lo, double hi, double obj) {
    cols_.emplace_back();
    col_lo_.push_back(lo);
    col_hi_.push_back(hi);
    obj_.push_back(obj);
    return num_cols() - 1;
}

int LpModel::add_row(const std::vector<std::pair<int, double>>& coeffs, double lo, double hi) {
    int i = num_rows();
    row_lo_.push_back(lo);
    row_hi_.push_back(hi);
    for (auto [j, a] : coeffs) {
        assert(j >= 0 && j < num_cols());
        if (a != 0.0) cols_[j].emplace_back(i, a);
    }
    return i;
}

void LpModel::change_col_bounds(int j, double lo, double hi) {
    journal_.push_back({true, j, col_lo_[j], col_hi_[j]});
    col_lo_[j] = lo;
    col_hi_[j] = hi;
}

void LpModel::change_row_bounds(int i, double lo, double hi) {
    journal_.push_back({false, i, row_lo_[i], row_hi_[i]});
    row_lo_[i] = lo;
    row_hi_[i] = hi;
}

LpMark LpModel::checkpoint() const { return {journal_.size(), num_rows(), num_cols()}; }

void LpModel::revert_bounds(const LpMark& mark) {
    while (journal_.size() > mark.journal_size) {
        const BoundEdit& e = journal_.back();
        if (e.is_col) {
            col_lo_[e.index] = e.old_lo;
            col_hi_[e.index] = e.old_hi;
        } else {
            row_lo_[e.index] = e.old_lo;
            row_hi_[e.index] = e.old_hi;
        }
        journal_.pop_back();
    }
}

void LpModel::revert(const LpMark& mark) {
    revert_bounds(mark);
    assert(mark.cols == num_cols());
    if (mark.rows < num_rows()) {
        row_lo_.resize(mark.rows);
        row_hi_.resize(mark.rows);
        for (auto& col : cols_)
            col.erase(std::remove_if(col.begin(), col.end(),
                                     [&](const auto& e) { return e.first >= mark.rows; }),
                      col.end());
    }
}

void LpModel::write_mps(std::ostream& out, const std::string& name) const {
    out << "NAME          " << name << "\n";
    out << "ROWS\n N  COST\n";
    auto rowname = [](int i) { return "R" + std::to_string(i); };
    auto colname = [](int j) { return "C" + std::to_string(j); };
    for (int i = 0; i < num_rows(); ++i) {
        char t = 'E';
        if (row_lo_[i] == -kInfD && row_hi_[i] < kInfD) t = 'L';
        else if (row_hi_[i] == kInfD && row_lo_[i] > -kInfD) t = 'G';
        else if (row_lo_[i] != row_hi_[i]) t = 'L';  // ranged, RANGES section below
        out << " " << t << "  " << rowname(i) << "\n";
    }
    out << "COLUMNS\n";
    out << std::setprecision(12);
    for (int j = 0; j < num_cols(); ++j) {
        if (obj_[j] != 0.0)
            out << "    " << colname(j) << "  COST  " << obj_[j] << "\n";
        for (auto [i, a] : cols_[j])
            out << "    " << colname(j) << "  " << rowname(i) << "  " << a << "\n";
    }
    out << "RHS\n";
    for (int i = 0; i < num_rows(); ++i) {
        double rhs = (row_lo_[i] == -kInfD) ? row_hi_[i] : row_lo_[i];
        if (row_lo_[i] == -kInfD && row_hi_[i] == kInfD) continue;
        if (row_lo_[i] == -kInfD) rhs = row_hi_[i];
        else if (row_hi_[i] == kInfD) rhs = row_lo_[i];
        out << "    RHS  " << rowname(i) << "  " << rhs << "\n";
    }
    bool ranged = false;
    for (int i = 0; i < num_rows(); ++i)
        if (row_lo_[i] > -kInfD && row_hi_[i] < kInfD && row_lo_[i] != row_hi_[i]) ranged = true;
    if (ranged) {
        out << "RANGES\n";
        for (int i = 0; i < num_rows(); ++i)
            if (row_lo_[i] > -kInfD && row_hi_[i] < kInfD && row_lo_[i] != row_hi_[i])
                out << "    RNG  " << rowname(i) << "  " << (row_hi_[i] - row_lo_[i]) << "\n";
    }
    out << "BOUNDS\n";
    for (int j = 0; j < num_cols(); ++j) {
        if (col_lo_[j] == col_hi_[j]) {
            out << " FX BND  " << colname(j) << "  " << col_lo_[j] << "\n";
            continue;
        }
        if (col_lo_[j] != 0.0) {
            if (col_lo_[j] == -kInfD) out << " MI BND  " << colname(j) << "\n";
            else out << " LO BND  " << colname(j) << "  " << col_lo_[j] << "\n";
        }
        if (col_hi_[j] < kInfD) out << " UP BND  " << colname(j) << "  " << col_hi_[j] << "\n";
    }
    out << "ENDATA\n";
}

// ---------------------------------------------------------------------------
// Revised simplex over [A | -I] with bounded variables and PFI eta updates.
// ---------------------------------------------------------------------------

namespace {

struct Eta {
    int r;
    Eigen::VectorXd d;
};

class SimplexImpl {
public:
    explicit SimplexImpl(const LpModel& model) : model_(model) {
        nc_ = model.num_cols();
        nr_ = model.num_rows();
        nt_ = nc_ + nr_;
        lo_.resize(nt_);
        hi_.resize(nt_);
        cost_.assign(nt_, 0.0);
        for (int j = 0; j < nc_; ++j) {
            lo_[j] = model.col_lower(j);
            hi_[j] = model.col_upper(j);
            cost_[j] = model.col_obj(j);
        }
        for (int i = 0; i < nr_; ++i) {
            lo_[nc_ + i] = model.row_lower(i);
            hi_[nc_ + i] = model.row_upper(i);
        }
        iter_limit_ = 50 * (nt_ + nr_) + 200;
        stall_limit_ = 2 * (nt_ + nr_) + 20;
    }

    LpResult run(const Basis* warm) {
        adopt_basis(warm);
        factorize();
        compute_x();

        LpResult res;
        if (!primal_feasible() && dual_feasible_now()) {
            if (!dual_simplex(res)) return res;
        }
        if (!primal_feasible()) {
            if (!phase1(res)) return res;
        }
        if (!phase2(res)) return res;

        finish(res, LpStatus::Optimal);
        return res;
    }

private:
    const LpModel& model_;
    int nc_, nr_, nt_;
    std::vector<double> lo_, hi_, cost_;
    std::vector<int> basic_;           // var index per basis position
    std::vector<int> pos_in_basis_;    // var -> basis position or -1
    std::vector<VarStat> stat_;
    Eigen::VectorXd xb_;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
    std::vector<Eta> etas_;
    int iterations_ = 0;
    int iter_limit_, stall_limit_;
    bool bland_ = false;
    int stall_ = 0;
    double last_merit_ = kInfD;

    // column access of the full matrix [A | -I]
    template <typename F>
    void for_col(int j, F&& f) const {
        if (j < nc_) {
            for (auto [i, a] : model_.col(j)) f(i, a);
        } else {
            f(j - nc_, -1.0);
        }
    }

    double nb_value(int j) const {
        switch (stat_[j]) {
            case VarStat::AtLower: return lo_[j];
            case VarStat::AtUpper: return hi_[j];
            default: return 0.0;
        }
    }

    void adopt_basis(const Basis* warm) {
        stat_.assign(nt_, VarStat::AtLower);
        basic_.clear();
        bool ok = warm != nullptr;
        if (ok) {
            int wsz = (int)warm->stat.size();
            if (wsz == nt_) {
                stat_ = warm->stat;
            } else if (wsz < nt_ && wsz > nc_) {
                // rows were appended since the basis was taken: keep the old
                // statuses and make each new logical basic
                std::copy(warm->stat.begin(), warm->stat.end(), stat_.begin());
                for (int j = wsz; j < nt_; ++j) stat_[j] = VarStat::Basic;
            } else {
                ok = false;
            }
            if (ok) {
                for (int j = 0; j < nt_; ++j)
                    if (stat_[j] == VarStat::Basic) basic_.push_back(j);
                if ((int)basic_.size() != nr_) ok = false;
            }
        }
        if (!ok) {
            // all-logical start
            for (int j = 0; j < nt_; ++j) stat_[j] = VarStat::AtLower;
            basic_.clear();
            for (int i = 0; i < nr_; ++i) {
                stat_[nc_ + i] = VarStat::Basic;
                basic_.push_back(nc_ + i);
            }
        }
        for (int j = 0; j < nt_; ++j) {
            if (stat_[j] == VarStat::Basic) continue;
            if (lo_[j] == -kInfD && hi_[j] == kInfD) stat_[j] = VarStat::NonbasicFree;
            else if (stat_[j] == VarStat::AtUpper && hi_[j] == kInfD) stat_[j] = VarStat::AtLower;
            else if (stat_[j] == VarStat::AtLower && lo_[j] == -kInfD) stat_[j] = VarStat::AtUpper;
            else if (stat_[j] == VarStat::NonbasicFree && (lo_[j] > -kInfD || hi_[j] < kInfD))
                stat_[j] = lo_[j] > -kInfD ? VarStat::AtLower : VarStat::AtUpper;
        }
        pos_in_basis_.assign(nt_, -1);
        for (int p = 0; p < nr_; ++p) pos_in_basis_[basic_[p]] = p;
    }

    void factorize() {
        Eigen::MatrixXd B = Eigen::MatrixXd::Zero(nr_, nr_);
        for (int p = 0; p < nr_; ++p)
            for_col(basic_[p], [&](int i, double a) { B(i, p) = a; });
        lu_.compute(B);
        etas_.clear();
        // singular-basis guard: fall back to the all-logical basis
        Eigen::VectorXd probe = Eigen::VectorXd::Ones(nr_);
        Eigen::VectorXd sol = lu_.solve(probe);
        if (!sol.allFinite() || (B * sol - probe).cwiseAbs().maxCoeff() > 1e-6 * (1 + nr_)) {
            for (int j = 0; j < nt_; ++j)
                if (stat_[j] == VarStat::Basic)
                    stat_[j] = (lo_[j] > -kInfD) ? VarStat::AtLower
                               : (hi_[j] < kInfD ? VarStat::AtUpper : VarStat::NonbasicFree);
            basic_.clear();
            for (int i = 0; i < nr_; ++i) {
                stat_[nc_ + i] = VarStat::Basic;
                basic_.push_back(nc_ + i);
            }
            pos_in_basis_.assign(nt_, -1);
            for (int p = 0; p < nr_; ++p) pos_in_basis_[basic_[p]] = p;
            Eigen::MatrixXd L = Eigen::MatrixXd::Zero(nr_, nr_);
            for (int i = 0; i < nr_; ++i) L(i, i) = -1.0;
            lu_.compute(L);
        }
    }

    Eigen::VectorXd ftran(Eigen::VectorXd rhs) const {
        Eigen::VectorXd y = lu_.solve(rhs);
        for (const Eta& e : etas_) {
            double t = y[e.r] / e.d[e.r];
            y -= t * e.d;
            y[e.r] = t;
        }
        return y;
    }

    Eigen::VectorXd btran(Eigen::VectorXd rhs) const {
        for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
            const Eta& e = *it;
            double t = rhs[e.r];
            double dot = 0.0;
            for (int i = 0; i < nr_; ++i)
                if (i != e.r) dot += e.d[i] * rhs[i];
            rhs[e.r] = (t - dot) / e.d[e.r];
        }
        return lu_.transpose().solve(rhs);
    }

    void compute_x() {
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nr_);
        for (int j = 0; j < nt_; ++j) {
            if (stat_[j] == VarStat::Basic) continue;
            double v = nb_value(j);
            if (v != 0.0) for_col(j, [&](int i, double a) { rhs[i] -= a * v; });
        }
        xb_ = ftran(rhs);
    }

    bool primal_feasible() const {
        for (int p = 0; p < nr_; ++p) {
            int j = basic_[p];
            if (xb_[p] < lo_[j] - kTolX || xb_[p] > hi_[j] + kTolX) return false;
        }
        return true;
    }

    Eigen::VectorXd basic_costs(const std::vector<double>& c) const {
        Eigen::VectorXd cb(nr_);
        for (int p = 0; p < nr_; ++p) cb[p] = c[basic_[p]];
        return cb;
    }

    double reduced_cost(int j, const Eigen::VectorXd& y, const std::vector<double>& c) const {
        double d = c[j];
        for_col(j, [&](int i, double a) { d -= y[i] * a; });
        return d;
    }

    bool dual_feasible_now() {
        Eigen::VectorXd y = btran(basic_costs(cost_));
        for (int j = 0; j < nt_; ++j) {
            if (stat_[j] == VarStat::Basic) continue;
            double d = reduced_cost(j, y, cost_);
            if (stat_[j] == VarStat::AtLower && d < -kTolDj) return false;
            if (stat_[j] == VarStat::AtUpper && d > kTolDj) return false;
            if (stat_[j] == VarStat::NonbasicFree && std::abs(d) > kTolDj) return false;
        }
        return true;
    }

    void pivot(int q, int r, const Eigen::VectorXd& w) {
        int leaving = basic_[r];
        pos_in_basis_[leaving] = -1;
        basic_[r] = q;
        pos_in_basis_[q] = r;
        stat_[q] = VarStat::Basic;
        etas_.push_back({r, w});
        if ((int)etas_.size() > 100) {
            factorize();
            compute_x();
        }
    }

    void track_merit(double merit) {
        if (merit < last_merit_ - 1e-12 * (1.0 + std::abs(last_merit_))) {
            stall_ = 0;
            bland_ = false;
        } else if (++stall_ > stall_limit_) {
            bland_ = true;
        }
        last_merit_ = merit;
    }

    double objective_now() const {
        double obj = 0.0;
        for (int j = 0; j < nt_; ++j)
            if (stat_[j] != VarStat::Basic) obj += cost_[j] * nb_value(j);
        for (int p = 0; p < nr_; ++p) obj += cost_[basic_[p]] * xb_[p];
        return obj;
    }

    // ----- primal simplex on the given cost vector; phase1 = true uses the
    // infeasibility costs recomputed every iteration.
    enum class PrimalOutcome { Optimal, Unbounded, IterLimit };

    PrimalOutcome primal_loop(bool phase1_mode) {
        last_merit_ = kInfD;
        stall_ = 0;
        bland_ = false;
        std::vector<double> c(nt_, 0.0);
        while (true) {
            if (++iterations_ > iter_limit_) return PrimalOutcome::IterLimit;
            double infeas = 0.0;
            if (phase1_mode) {
                std::fill(c.begin(), c.end(), 0.0);
                for (int p = 0; p < nr_; ++p) {
                    int j = basic_[p];
                    if (xb_[p] < lo_[j] - kTolX) { c[j] = -1.0; infeas += lo_[j] - xb_[p]; }
                    else if (xb_[p] > hi_[j] + kTolX) { c[j] = 1.0; infeas += xb_[p] - hi_[j]; }
                }
                if (infeas == 0.0) return PrimalOutcome::Optimal;
                track_merit(infeas);
            } else {
                track_merit(objective_now());
            }
            const std::vector<double>& cc = phase1_mode ? c : cost_;
            Eigen::VectorXd y = btran(basic_costs(cc));

            int q = -1;
            double best = 0.0;
            int sigma = +1;
            for (int j = 0; j < nt_; ++j) {
                if (stat_[j] == VarStat::Basic) continue;
                if (lo_[j] == hi_[j]) continue;  // fixed
                double d = reduced_cost(j, y, cc);
                double score = 0.0;
                int s = 0;
                if (stat_[j] == VarStat::AtLower && d < -kTolDj) { score = -d; s = +1; }
                else if (stat_[j] == VarStat::AtUpper && d > kTolDj) { score = d; s = -1; }
                else if (stat_[j] == VarStat::NonbasicFree && std::abs(d) > kTolDj) {
                    score = std::abs(d);
                    s = d < 0 ? +1 : -1;
                }
                if (s == 0) continue;
                if (bland_) { q = j; sigma = s; break; }
                if (score > best + 1e-12) { best = score; q = j; sigma = s; }
            }
            if (q < 0) return PrimalOutcome::Optimal;

            Eigen::VectorXd a = Eigen::VectorXd::Zero(nr_);
            for_col(q, [&](int i, double v) { a[i] = v; });
            Eigen::VectorXd w = ftran(a);

            double tmax = hi_[q] - lo_[q];  // inf when unbounded range
            int r = -1;
            double limit = tmax;
            double bestpiv = 0.0;
            for (int p = 0; p < nr_; ++p) {
                int j = basic_[p];
                double delta = -sigma * w[p];
                if (std::abs(delta) < kTolPivot) continue;
                double cap;
                if (phase1_mode && xb_[p] < lo_[j] - kTolX) {
                    // infeasible below: blocked only when rising to its lower bound
                    if (delta <= 0) continue;
                    cap = (lo_[j] - xb_[p]) / delta;
                } else if (phase1_mode && xb_[p] > hi_[j] + kTolX) {
                    if (delta >= 0) continue;
                    cap = (hi_[j] - xb_[p]) / delta;
                } else if (delta > 0) {
                    if (hi_[j] == kInfD) continue;
                    cap = (hi_[j] - xb_[p]) / delta;
                } else {
                    if (lo_[j] == -kInfD) continue;
                    cap = (xb_[p] - lo_[j]) / (-delta);
                }
                if (cap < -1e-12) cap = 0.0;
                if (cap < limit - 1e-12 ||
                    (cap < limit + 1e-12 &&
                     (r < 0 || std::abs(w[p]) > bestpiv + 1e-12 ||
                      (std::abs(w[p]) > bestpiv - 1e-12 && bland_ && j < basic_[r])))) {
                    limit = cap;
                    r = p;
                    bestpiv = std::abs(w[p]);
                }
            }
            if (r < 0 && limit == kInfD) {
                return phase1_mode ? PrimalOutcome::Optimal : PrimalOutcome::Unbounded;
            }
            if (r < 0 || tmax <= limit + 1e-12) {
                // bound flip
                double t = tmax;
                xb_ -= sigma * t * w;
                stat_[q] = (stat_[q] == VarStat::AtLower) ? VarStat::AtUpper : VarStat::AtLower;
                continue;
            }
            double t = limit;
            double enter_val = nb_value(q) + sigma * t;
            int leaving = basic_[r];
            double leave_val;
            double delta_r = -sigma * w[r];
            if (phase1_mode && xb_[r] < lo_[leaving] - kTolX) leave_val = lo_[leaving];
            else if (phase1_mode && xb_[r] > hi_[leaving] + kTolX) leave_val = hi_[leaving];
            else leave_val = (delta_r > 0) ? hi_[leaving] : lo_[leaving];
            xb_ -= sigma * t * w;
            stat_[leaving] = (leave_val == hi_[leaving] && hi_[leaving] < kInfD)
                                 ? VarStat::AtUpper
                                 : VarStat::AtLower;
            if (lo_[leaving] == -kInfD && hi_[leaving] == kInfD)
                stat_[leaving] = VarStat::NonbasicFree;
            pivot(q, r, w);
            xb_[r] = enter_val;
        }
    }

    bool phase1(LpResult& res) {
        PrimalOutcome out = primal_loop(true);
        if (out == PrimalOutcome::IterLimit) {
            finish(res, LpStatus::IterLimit);
            return false;
        }
        if (!primal_feasible()) {
            finish(res, LpStatus::Infeasible);
            return false;
        }
        return true;
    }

    bool phase2(LpResult& res) {
        PrimalOutcome out = primal_loop(false);
        if (out == PrimalOutcome::IterLimit) {
            finish(res, LpStatus::IterLimit);
            return false;
        }
        if (out == PrimalOutcome::Unbounded) {
            finish(res, LpStatus::Unbounded);
            return false;
        }
        return true;
    }

    // ----- dual simplex used for warm restarts after bound changes
    bool dual_simplex(LpResult& res) {
        last_merit_ = -kInfD;
        stall_ = 0;
        bland_ = false;
        int stall_dual = 0;
        double last_obj = -kInfD;
        while (true) {
            if (++iterations_ > iter_limit_) {
                finish(res, LpStatus::IterLimit);
                return false;
            }
            int r = -1;
            double worst = kTolX;
            for (int p = 0; p < nr_; ++p) {
                int j = basic_[p];
                double viol = std::max(lo_[j] - xb_[p], xb_[p] - hi_[j]);
                if (viol > worst + 1e-12) { worst = viol; r = p; }
            }
            if (r < 0) return true;  // primal feasible again

            double obj = objective_now();
            if (obj > last_obj + 1e-12 * (1 + std::abs(last_obj))) stall_dual = 0;
            else if (++stall_dual > stall_limit_) {
                // stuck: restart with primal phases
                factorize();
                compute_x();
                if (!phase1(res)) return false;
                return true;
            }
            last_obj = obj;

            int jr = basic_[r];
            bool below = xb_[r] < lo_[jr];
            Eigen::VectorXd e = Eigen::VectorXd::Zero(nr_);
            e[r] = 1.0;
            Eigen::VectorXd rho = btran(e);
            Eigen::VectorXd y = btran(basic_costs(cost_));

            int q = -1;
            double best_ratio = kInfD;
            double best_alpha = 0.0;
            for (int j = 0; j < nt_; ++j) {
                if (stat_[j] == VarStat::Basic || lo_[j] == hi_[j]) continue;
                double alpha = 0.0;
                for_col(j, [&](int i, double a) { alpha += rho[i] * a; });
                if (std::abs(alpha) < kTolPivot) continue;
                bool ok;
                if (below)
                    ok = (stat_[j] == VarStat::AtLower && alpha < 0) ||
                         (stat_[j] == VarStat::AtUpper && alpha > 0) ||
                         stat_[j] == VarStat::NonbasicFree;
                else
                    ok = (stat_[j] == VarStat::AtLower && alpha > 0) ||
                         (stat_[j] == VarStat::AtUpper && alpha < 0) ||
                         stat_[j] == VarStat::NonbasicFree;
                if (!ok) continue;
                double d = reduced_cost(j, y, cost_);
                double ratio = std::abs(d) / std::abs(alpha);
                if (ratio < best_ratio - 1e-12 ||
                    (ratio < best_ratio + 1e-12 && std::abs(alpha) > best_alpha + 1e-12)) {
                    best_ratio = ratio;
                    best_alpha = std::abs(alpha);
                    q = j;
                }
            }
            if (q < 0) {
                finish(res, LpStatus::Infeasible);
                return false;
            }

            Eigen::VectorXd a = Eigen::VectorXd::Zero(nr_);
            for_col(q, [&](int i, double v) { a[i] = v; });
            Eigen::VectorXd w = ftran(a);
            double alpha_q = w[r];
            double target = below ? lo_[jr] : hi_[jr];
            double step = (xb_[r] - target) / alpha_q;  // change in x_q
            double enter_val = nb_value(q) + step;
            xb_ -= step * w;
            stat_[jr] = (target == hi_[jr] && hi_[jr] < kInfD) ? VarStat::AtUpper : VarStat::AtLower;
            if (lo_[jr] == -kInfD && hi_[jr] == kInfD) stat_[jr] = VarStat::NonbasicFree;
            pivot(q, r, w);
            xb_[r] = enter_val;
        }
    }

    void finish(LpResult& res, LpStatus status) {
        factorize();
        compute_x();
        res.status = status;
        res.iterations = iterations_;
        res.primal.assign(nc_, 0.0);
        for (int j = 0; j < nc_; ++j)
            if (stat_[j] != VarStat::Basic) res.primal[j] = nb_value(j);
        for (int p = 0; p < nr_; ++p)
            if (basic_[p] < nc_) res.primal[basic_[p]] = xb_[p];
        Eigen::VectorXd y = btran(basic_costs(cost_));
        res.duals.assign(y.data(), y.data() + nr_);
        res.reduced_costs.assign(nc_, 0.0);
        for (int j = 0; j < nc_; ++j)
            res.reduced_costs[j] = stat_[j] == VarStat::Basic ? 0.0 : reduced_cost(j, y, cost_);
        res.objective = 0.0;
        for (int j = 0; j < nc_; ++j) res.objective += cost_[j] * res.primal[j];
        res.basis.stat = stat_;
    }
};

}  // namespace

LpResult Simplex::solve(const LpModel& model, const Basis* warm) {
    SimplexImpl impl(model);
    return impl.run(warm);
}

// ---------------------------------------------------------------------------
// Exact-rational tableau fallback (Bland's rule, guaranteed termination).
// ---------------------------------------------------------------------------

namespace {

using BigRat = boost::multiprecision::cpp_rational;

struct ExactLp {
    int nc, nr, nt;
    std::vector<BigRat> lo, hi, cost;
    std::vector<bool> lo_inf, hi_inf;
    std::vector<std::vector<BigRat>> tab;  // nr x nt, current B^-1 [A|-I]
    std::vector<BigRat> xb;
    std::vector<int> basic;
    std::vector<VarStat> stat;

    BigRat nbval(int j) const {
        if (stat[j] == VarStat::AtLower) return lo[j];
        if (stat[j] == VarStat::AtUpper) return hi[j];
        return 0;
    }
};

}  // namespace

LpResult Simplex::solve_exact(const LpModel& model) {
    ExactLp E;
    E.nc = model.num_cols();
    E.nr = model.num_rows();
    E.nt = E.nc + E.nr;
    auto conv = [](double x) { return BigRat(x); };
    for (int j = 0; j < E.nc; ++j) {
        E.lo_inf.push_back(model.col_lower(j) == -kInfD);
        E.hi_inf.push_back(model.col_upper(j) == kInfD);
        E.lo.push_back(E.lo_inf.back() ? 0 : conv(model.col_lower(j)));
        E.hi.push_back(E.hi_inf.back() ? 0 : conv(model.col_upper(j)));
        E.cost.push_back(conv(model.col_obj(j)));
    }
    for (int i = 0; i < E.nr; ++i) {
        E.lo_inf.push_back(model.row_lower(i) == -kInfD);
        E.hi_inf.push_back(model.row_upper(i) == kInfD);
        E.lo.push_back(E.lo_inf.back() ? 0 : conv(model.row_lower(i)));
        E.hi.push_back(E.hi_inf.back() ? 0 : conv(model.row_upper(i)));
        E.cost.push_back(0);
    }
    // initial tableau: basis = logicals, tableau = -1 * [A | -I]
    E.tab.assign(E.nr, std::vector<BigRat>(E.nt, 0));
    for (int j = 0; j < E.nc; ++j)
        for (auto [i, a] : model.col(j)) E.tab[i][j] = -conv(a);
    for (int i = 0; i < E.nr; ++i) E.tab[i][E.nc + i] = 1;
    E.stat.assign(E.nt, VarStat::AtLower);
    for (int j = 0; j < E.nt; ++j) {
        if (E.lo_inf[j] && E.hi_inf[j]) E.stat[j] = VarStat::NonbasicFree;
        else if (E.lo_inf[j]) E.stat[j] = VarStat::AtUpper;
    }
    for (int i = 0; i < E.nr; ++i) {
        E.stat[E.nc + i] = VarStat::Basic;
        E.basic.push_back(E.nc + i);
    }
    auto recompute_xb = [&]() {
        E.xb.assign(E.nr, 0);
        for (int p = 0; p < E.nr; ++p) {
            BigRat s = 0;
            for (int j = 0; j < E.nt; ++j)
                if (E.stat[j] != VarStat::Basic && E.tab[p][j] != 0) s -= E.tab[p][j] * E.nbval(j);
            E.xb[p] = s;
        }
    };
    // note tab rows here store B^-1[A|-I] with sign such that
    // x_B = -sum_nonbasic tab[.,j] * x_j; keep that convention throughout.
    recompute_xb();

    auto do_pivot = [&](int q, int r) {
        BigRat piv = E.tab[r][q];
        for (int j = 0; j < E.nt; ++j) E.tab[r][j] /= piv;
        for (int p = 0; p < E.nr; ++p) {
            if (p == r || E.tab[p][q] == 0) continue;
            BigRat f = E.tab[p][q];
            for (int j = 0; j < E.nt; ++j) E.tab[p][j] -= f * E.tab[r][j];
        }
        int leaving = E.basic[r];
        E.basic[r] = q;
        E.stat[q] = VarStat::Basic;
        return leaving;
    };

    LpResult res;
    long guard = 0;
    const long guard_max = 400L * (E.nt + 4) * (E.nt + 4);
    // phase 1 + phase 2 with Bland's rule, exact arithmetic
    for (int phase = 1; phase <= 2; ++phase) {
        while (true) {
            if (++guard > guard_max) {
                res.status = LpStatus::IterLimit;
                return res;
            }
            std::vector<BigRat> c(E.nt, 0);
            bool infeasible_now = false;
            if (phase == 1) {
                for (int p = 0; p < E.nr; ++p) {
                    int j = E.basic[p];
                    if (!E.lo_inf[j] && E.xb[p] < E.lo[j]) { c[j] = -1; infeasible_now = true; }
                    else if (!E.hi_inf[j] && E.xb[p] > E.hi[j]) { c[j] = 1; infeasible_now = true; }
                }
                if (!infeasible_now) break;  // go to phase 2
            } else {
                c = E.cost;
            }
            // reduced costs via the maintained tableau: d_j = c_j - sum_p c_B[p] * tab[p][j]
            int q = -1;
            int sigma = 0;
            for (int j = 0; j < E.nt && q < 0; ++j) {
                if (E.stat[j] == VarStat::Basic) continue;
                if (!E.lo_inf[j] && !E.hi_inf[j] && E.lo[j] == E.hi[j]) continue;
                BigRat d = c[j];
                for (int p = 0; p < E.nr; ++p)
                    if (E.tab[p][j] != 0 && c[E.basic[p]] != 0) d -= c[E.basic[p]] * E.tab[p][j];
                if (E.stat[j] == VarStat::AtLower && d < 0) { q = j; sigma = 1; }
                else if (E.stat[j] == VarStat::AtUpper && d > 0) { q = j; sigma = -1; }
                else if (E.stat[j] == VarStat::NonbasicFree && d != 0) { q = j; sigma = d < 0 ? 1 : -1; }
            }
            if (q < 0) {
                if (phase == 1) {
                    res.status = LpStatus::Infeasible;
                    return res;
                }
                break;  // optimal
            }
            // ratio test (Bland: first blocking row by basic variable index)
            bool has_limit = false;
            BigRat limit = 0;
            int r = -1;
            bool entering_flip = false;
            if (!E.lo_inf[q] && !E.hi_inf[q]) {
                limit = E.hi[q] - E.lo[q];
                has_limit = true;
                entering_flip = true;
            }
            for (int p = 0; p < E.nr; ++p) {
                int j = E.basic[p];
                BigRat delta = BigRat(sigma) * E.tab[p][q] * BigRat(-1);
                // x_B[p] moves by delta per unit increase of t
                if (delta == 0) continue;
                BigRat cap;
                bool capped = false;
                bool below = !E.lo_inf[j] && E.xb[p] < E.lo[j];
                bool above = !E.hi_inf[j] && E.xb[p] > E.hi[j];
                if (phase == 1 && below) {
                    if (delta > 0) { cap = (E.lo[j] - E.xb[p]) / delta; capped = true; }
                } else if (phase == 1 && above) {
                    if (delta < 0) { cap = (E.hi[j] - E.xb[p]) / delta; capped = true; }
                } else if (delta > 0) {
                    if (!E.hi_inf[j]) { cap = (E.hi[j] - E.xb[p]) / delta; capped = true; }
                } else {
                    if (!E.lo_inf[j]) { cap = (E.xb[p] - E.lo[j]) / (-delta); capped = true; }
                }
                if (!capped) continue;
                if (cap < 0) cap = 0;
                if (!has_limit || cap < limit || (cap == limit && entering_flip) ||
                    (cap == limit && r >= 0 && j < E.basic[r])) {
                    if (!has_limit || cap < limit || r < 0 || j < E.basic[r] || entering_flip) {
                        limit = cap;
                        r = p;
                        has_limit = true;
                        entering_flip = false;
                    }
                }
            }
            if (!has_limit) {
                if (phase == 2) {
                    res.status = LpStatus::Unbounded;
                    return res;
                }
                res.status = LpStatus::IterLimit;
                return res;
            }
            if (r < 0) {
                // bound flip of the entering variable
                E.stat[q] = (E.stat[q] == VarStat::AtLower) ? VarStat::AtUpper : VarStat::AtLower;
                recompute_xb();
                continue;
            }
            BigRat enter_val = E.nbval(q) + BigRat(sigma) * limit;
            int leaving = E.basic[r];
            bool below = !E.lo_inf[leaving] && E.xb[r] < E.lo[leaving];
            bool above = !E.hi_inf[leaving] && E.xb[r] > E.hi[leaving];
            BigRat delta_r = BigRat(sigma) * E.tab[r][q] * BigRat(-1);
            VarStat leave_stat;
            if (phase == 1 && below) leave_stat = VarStat::AtLower;
            else if (phase == 1 && above) leave_stat = VarStat::AtUpper;
            else if (delta_r > 0) leave_stat = VarStat::AtUpper;
            else leave_stat = VarStat::AtLower;
            if (E.lo_inf[leaving] && E.hi_inf[leaving]) leave_stat = VarStat::NonbasicFree;
            do_pivot(q, r);
            E.stat[leaving] = leave_stat;
            (void)enter_val;
            recompute_xb();
        }
    }
    res.status = LpStatus::Optimal;
    res.primal.assign(E.nc, 0.0);
    std::vector<BigRat> xs(E.nt, 0);
    for (int j = 0; j < E.nt; ++j)
        if (E.stat[j] != VarStat::Basic) xs[j] = E.nbval(j);
    for (int p = 0; p < E.nr; ++p) xs[E.basic[p]] = E.xb[p];
    BigRat obj = 0;
    for (int j = 0; j < E.nc; ++j) {
        res.primal[j] = xs[j].convert_to<double>();
        obj += E.cost[j] * xs[j];
    }
    res.objective = obj.convert_to<double>();
    res.duals.assign(E.nr, 0.0);
    res.reduced_costs.assign(E.nc, 0.0);
    return res;
}

}  // namespace ccps
