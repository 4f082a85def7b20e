#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccps/rational.hpp"

namespace ccps {

// Feasibility tolerance for all real-valued constraint checks.  Strict
// comparisons "a < b" on constraint data are implemented as a < b - kTolFeas.
inline constexpr double kTolFeas = 1e-6;
inline constexpr double kTolInt = 1e-6;
inline constexpr double kTolOpt = 1e-7;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool strictly_less(double a, double b) { return a < b - kTolFeas; }

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Sense { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
    std::vector<double> coeffs;  // length d
    Sense sense = Sense::LessEqual;
    double rhs = 0.0;
};

/// A chance-constrained program with random right-hand side over a finite
/// discrete distribution:  min c'x  s.t.  P{Tx >= xi} >= 1 - eps,  x in X.
struct CcpInstance {
    std::string name;
    int d = 0;  // x-variables
    int m = 0;  // rows of T
    int n = 0;  // scenarios
    std::vector<double> c;                  // length d
    std::vector<std::vector<double>> T;     // m x d
    std::vector<LinearConstraint> polyX;
    std::vector<double> lower, upper;       // x bounds, +-inf allowed
    std::vector<std::vector<double>> scenarios;  // n x m, all >= 0
    std::vector<Rational> probs;            // length n, sums to 1 exactly
    Rational epsilon;                       // in (0,1)
    std::string meta;                       // generator notes, free-form

    void validate() const;  // throws ValidationError

    /// Row activity T x restricted to row k.
    double row_activity(int k, const std::vector<double>& x) const;
};

struct CandidateSolution {
    std::vector<double> x;
    std::vector<double> v;
    std::vector<int> z;
    double objective = 0.0;
};

struct FeasibilityCheck {
    bool feasible = false;
    std::vector<std::string> violations;
};

CcpInstance load_instance(std::istream& in);
CcpInstance load_instance_file(const std::string& path);
CcpInstance load_instance_text(const std::string& json_text);
void save_instance(const CcpInstance& inst, std::ostream& out);
void save_instance_file(const CcpInstance& inst, const std::string& path);
std::string instance_to_text(const CcpInstance& inst);

/// Total probability of scenarios violated by v:  sum over {i : v !>= xi^i}.
Rational chance_violation(const CcpInstance& inst, const std::vector<double>& v);

/// Literal re-evaluation of the big-M formulation at the candidate.
FeasibilityCheck check_feasible(const CcpInstance& inst, const CandidateSolution& cand);

/// The 7-scenario illustration instance used throughout the test suite.
CcpInstance example_instance();

}  // namespace ccps
