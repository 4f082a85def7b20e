#include "ccps/toolkit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ccps {

namespace {

std::string spec_name(const GenSpec& spec, const std::string& dims) {
    std::ostringstream s;
    s << spec.family << "_" << dims << "_n" << spec.n << "_eps" << spec.epsilon.num() << "-"
      << spec.epsilon.den() << "_seed" << spec.seed;
    return s.str();
}

}  // namespace

CcpInstance gen_ccrp(const GenSpec& spec) {
    int I = spec.resources, J = spec.customers;
    if (I < 1 || J < 1 || spec.n < 1) throw ParamError("ccrp: sizes must be positive");
    Rng rng(spec.seed);
    CcpInstance inst;
    inst.name = spec_name(spec, "I" + std::to_string(I) + "J" + std::to_string(J));
    inst.d = I + I * J;  // x_i then y_ij (resource-major)
    inst.m = J;
    inst.n = spec.n;
    inst.c.assign(inst.d, 0.0);
    std::vector<double> rho(I);
    for (int i = 0; i < I; ++i) inst.c[i] = rng.uniform(1.0, 10.0);
    for (int i = 0; i < I; ++i) rho[i] = rng.uniform(0.8, 1.0);
    std::vector<std::vector<double>> mu(I, std::vector<double>(J));
    for (int i = 0; i < I; ++i)
        for (int j = 0; j < J; ++j) mu[i][j] = rng.uniform(0.5, 2.0);

    auto ycol = [&](int i, int j) { return I + i * J + j; };
    inst.T.assign(J, std::vector<double>(inst.d, 0.0));
    for (int j = 0; j < J; ++j)
        for (int i = 0; i < I; ++i) inst.T[j][ycol(i, j)] = mu[i][j];
    for (int i = 0; i < I; ++i) {
        LinearConstraint cap;
        cap.coeffs.assign(inst.d, 0.0);
        for (int j = 0; j < J; ++j) cap.coeffs[ycol(i, j)] = 1.0;
        cap.coeffs[i] = -rho[i];
        cap.sense = Sense::LessEqual;
        cap.rhs = 0.0;
        inst.polyX.push_back(std::move(cap));
    }
    inst.lower.assign(inst.d, 0.0);
    inst.upper.assign(inst.d, kInf);
    inst.scenarios.assign(spec.n, std::vector<double>(J));
    for (int s = 0; s < spec.n; ++s)
        for (int j = 0; j < J; ++j) inst.scenarios[s][j] = rng.uniform(10.0, 100.0);
    inst.probs.assign(spec.n, Rational(1, spec.n));
    inst.epsilon = spec.epsilon;
    inst.validate();
    return inst;
}

CcpInstance gen_ccmpp(const GenSpec& spec) {
    int T = spec.periods;
    if (T < 1 || spec.n < 1) throw ParamError("ccmpp: sizes must be positive");
    double f = spec.nuclear_fraction;
    if (!(f > 0.0 && f < 1.0)) throw ParamError("ccmpp: nuclear fraction must lie in (0,1)");
    const int Tc = 15, Tn = 10;
    Rng rng(spec.seed);
    CcpInstance inst;
    inst.name = spec_name(spec, "T" + std::to_string(T));
    inst.d = 2 * T;  // x_t then y_t
    inst.m = T;
    inst.n = spec.n;
    inst.c.resize(inst.d);
    for (int t = 0; t < T; ++t) inst.c[t] = (double)rng.uniform_int(100, 300);
    for (int t = 0; t < T; ++t) inst.c[T + t] = (double)rng.uniform_int(100, 200);
    double e1 = (double)rng.uniform_int(100, 500);
    double r = rng.uniform(0.7, 1.0);
    std::vector<double> e(T);
    for (int t = 0; t < T; ++t) e[t] = e1 * std::pow(r, t);

    auto tau_c = [&](int t) { return std::max(0, t - Tc + 1); };  // 0-based
    auto tau_n = [&](int t) { return std::max(0, t - Tn + 1); };
    inst.T.assign(T, std::vector<double>(inst.d, 0.0));
    for (int t = 0; t < T; ++t) {
        for (int i = tau_c(t); i <= t; ++i) inst.T[t][i] = 1.0;
        for (int i = tau_n(t); i <= t; ++i) inst.T[t][T + i] = 1.0;
    }
    for (int t = 0; t < T; ++t) {  // (1-f) sum y - f sum x <= f e_t
        LinearConstraint con;
        con.coeffs.assign(inst.d, 0.0);
        for (int i = tau_n(t); i <= t; ++i) con.coeffs[T + i] = 1.0 - f;
        for (int i = tau_c(t); i <= t; ++i) con.coeffs[i] = -f;
        con.sense = Sense::LessEqual;
        con.rhs = f * e[t];
        inst.polyX.push_back(std::move(con));
    }
    inst.lower.assign(inst.d, 0.0);
    inst.upper.assign(inst.d, kInf);
    inst.scenarios.assign(spec.n, std::vector<double>(T));
    for (int s = 0; s < spec.n; ++s)
        for (int t = 0; t < T; ++t) {
            double demand = (double)rng.uniform_int(300, 700);
            inst.scenarios[s][t] = std::max(0.0, demand - e[t]);
        }
    inst.probs.assign(spec.n, Rational(1, spec.n));
    inst.epsilon = spec.epsilon;
    std::ostringstream meta;
    meta << "ccmpp shift: xi_t = max(0, demand_t - e_t); f=" << f << "; e=";
    for (int t = 0; t < T; ++t) meta << (t ? "," : "") << e[t];
    inst.meta = meta.str();
    inst.validate();
    return inst;
}

CcpInstance gen_ccls(const GenSpec& spec) {
    int T = spec.periods;
    if (T < 1 || spec.n < 1) throw ParamError("ccls: sizes must be positive");
    Rng rng(spec.seed);
    CcpInstance inst;
    inst.name = spec_name(spec, "T" + std::to_string(T));
    inst.d = T;  // production y_t; cumulative output u_t = sum_{j<=t} y_j
    inst.m = T;
    inst.n = spec.n;
    std::vector<double> setup(T), unit(T), holding(T);
    for (int t = 0; t < T; ++t) setup[t] = rng.uniform(1.0, 1000.0);
    for (int t = 0; t < T; ++t) unit[t] = rng.uniform(1.0, 10.0);
    for (int t = 0; t < T; ++t) holding[t] = rng.uniform(1.0, 5.0);
    // linear-cost variant: holding h_t u_t folds into the production costs
    inst.c.resize(T);
    for (int t = 0; t < T; ++t) {
        double tail = 0.0;
        for (int u = t; u < T; ++u) tail += holding[u];
        inst.c[t] = unit[t] + tail;
    }
    inst.T.assign(T, std::vector<double>(T, 0.0));
    for (int t = 0; t < T; ++t)
        for (int j = 0; j <= t; ++j) inst.T[t][j] = 1.0;
    inst.lower.assign(T, 0.0);
    inst.upper.assign(T, kInf);
    inst.scenarios.assign(spec.n, std::vector<double>(T));
    for (int s = 0; s < spec.n; ++s) {
        double cum = 0.0;
        for (int t = 0; t < T; ++t) {
            cum += rng.uniform(1.0, 100.0);
            inst.scenarios[s][t] = cum;
        }
    }
    inst.probs.assign(spec.n, Rational(1, spec.n));
    inst.epsilon = spec.epsilon;
    std::ostringstream meta;
    meta << "ccls uncapacitated linear-cost variant; setup costs unused:";
    for (int t = 0; t < T; ++t) meta << (t ? "," : " ") << setup[t];
    inst.meta = meta.str();
    inst.validate();
    return inst;
}

CcpInstance generate(const GenSpec& spec) {
    if (spec.family == "ccrp") return gen_ccrp(spec);
    if (spec.family == "ccmpp") return gen_ccmpp(spec);
    if (spec.family == "ccls") return gen_ccls(spec);
    throw ParamError("unknown family: " + spec.family);
}

double shifted_geomean(const std::vector<double>& xs, double shift) {
    if (xs.empty()) return 0.0;
    double acc = 0.0;
    for (double x : xs) acc += std::log(x + shift);
    return std::exp(acc / xs.size()) - shift;
}

SolverConfig parse_config_label(const std::string& label) {
    SolverConfig cfg;
    std::string text = label;
    if (label == "bc+mix") text = "classic:off:mixing";
    else if (label == "db") text = "dominance:off:mixing";
    else if (label == "db+opf") text = "dominance:approx:mixing";
    std::istringstream in(text);
    std::string b, p, c;
    std::getline(in, b, ':');
    std::getline(in, p, ':');
    std::getline(in, c, ':');
    if (b == "classic") cfg.branching = Branching::Classic;
    else if (b == "dominance") cfg.branching = Branching::Dominance;
    else throw ParamError("bad branching in config label: " + label);
    if (p == "off" || p.empty()) cfg.propagation = PropagationMode::Off;
    else if (p == "approx") cfg.propagation = PropagationMode::Approx;
    else if (p == "exact") cfg.propagation = PropagationMode::Exact;
    else throw ParamError("bad propagation in config label: " + label);
    if (c == "off" || c.empty()) cfg.cuts = CutMode::Off;
    else if (c == "mixing") cfg.cuts = CutMode::Mixing;
    else throw ParamError("bad cuts in config label: " + label);
    return cfg;
}

}  // namespace ccps
