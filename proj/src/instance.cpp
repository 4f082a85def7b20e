#include "ccps/instance.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ccps {

using nlohmann::json;

void CcpInstance::validate() const {
    if (d <= 0 || m <= 0 || n <= 0)
        throw ValidationError("dimensions must be positive");
    if ((int)c.size() != d) throw ValidationError("c has wrong length");
    if ((int)T.size() != m) throw ValidationError("T has wrong row count");
    for (const auto& row : T)
        if ((int)row.size() != d) throw ValidationError("T row has wrong length");
    for (const auto& con : polyX)
        if ((int)con.coeffs.size() != d) throw ValidationError("polyX row has wrong length");
    if ((int)lower.size() != d || (int)upper.size() != d)
        throw ValidationError("bounds have wrong length");
    for (int j = 0; j < d; ++j)
        if (lower[j] > upper[j]) throw ValidationError("crossed variable bounds");
    if ((int)scenarios.size() != n) throw ValidationError("scenario count mismatch");
    for (const auto& row : scenarios) {
        if ((int)row.size() != m) throw ValidationError("scenario row has wrong length");
        for (double v : row) {
            if (!(v >= 0.0)) throw ValidationError("scenario entries must be nonnegative");
            if (!std::isfinite(v)) throw ValidationError("scenario entries must be finite");
        }
    }
    if ((int)probs.size() != n) throw ValidationError("probability count mismatch");
    Rational total(0);
    for (const auto& p : probs) {
        if (p < Rational(0)) throw ValidationError("negative probability");
        total += p;
    }
    if (total != Rational(1)) throw ValidationError("probabilities must sum to 1 exactly");
    if (!(epsilon > Rational(0) && epsilon < Rational(1)))
        throw ValidationError("epsilon must lie in (0,1)");
}

double CcpInstance::row_activity(int k, const std::vector<double>& x) const {
    double s = 0.0;
    for (int j = 0; j < d; ++j) s += T[k][j] * x[j];
    return s;
}

namespace {

double parse_bound(const json& j, double sign) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "inf" || s == "+inf") return kInf;
        if (s == "-inf") return -kInf;
        throw SchemaError("bad bound sentinel: " + s);
    }
    if (!j.is_number()) throw SchemaError("bound must be number or inf sentinel");
    (void)sign;
    return j.get<double>();
}

Rational parse_rational(const json& j, const char* what) {
    if (j.is_object()) {
        if (!j.contains("num") || !j.contains("den"))
            throw SchemaError(std::string(what) + " needs num/den fields");
        return Rational(j["num"].get<std::int64_t>(), j["den"].get<std::int64_t>());
    }
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw SchemaError(std::string(what) + " must be {num,den}");
}

Sense parse_sense(const std::string& s) {
    if (s == "<=") return Sense::LessEqual;
    if (s == "=" || s == "==") return Sense::Equal;
    if (s == ">=") return Sense::GreaterEqual;
    throw SchemaError("bad sense: " + s);
}

const char* sense_text(Sense s) {
    switch (s) {
        case Sense::LessEqual: return "<=";
        case Sense::Equal: return "=";
        default: return ">=";
    }
}

}  // namespace

CcpInstance load_instance(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed instance document: ") + e.what());
    }
    try {
        CcpInstance inst;
        inst.name = doc.value("name", "unnamed");
        inst.d = doc.at("d").get<int>();
        inst.m = doc.at("m").get<int>();
        inst.n = doc.at("n").get<int>();
        inst.c = doc.at("c").get<std::vector<double>>();
        inst.T = doc.at("T").get<std::vector<std::vector<double>>>();
        for (const auto& row : doc.value("polyX", json::array())) {
            LinearConstraint con;
            con.coeffs = row.at("coeffs").get<std::vector<double>>();
            con.sense = parse_sense(row.at("sense").get<std::string>());
            con.rhs = row.at("rhs").get<double>();
            inst.polyX.push_back(std::move(con));
        }
        if (doc.contains("bounds")) {
            for (const auto& b : doc["bounds"].at("lower")) inst.lower.push_back(parse_bound(b, -1));
            for (const auto& b : doc["bounds"].at("upper")) inst.upper.push_back(parse_bound(b, +1));
        } else {
            inst.lower.assign(inst.d, 0.0);
            inst.upper.assign(inst.d, kInf);
        }
        inst.scenarios = doc.at("scenarios").get<std::vector<std::vector<double>>>();
        for (const auto& p : doc.at("probs")) inst.probs.push_back(parse_rational(p, "probs entry"));
        inst.epsilon = parse_rational(doc.at("epsilon"), "epsilon");
        inst.meta = doc.value("meta", "");
        inst.validate();
        return inst;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("instance document: ") + e.what());
    }
}

CcpInstance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open instance file: " + path);
    return load_instance(in);
}

CcpInstance load_instance_text(const std::string& json_text) {
    std::istringstream in(json_text);
    return load_instance(in);
}

void save_instance(const CcpInstance& inst, std::ostream& out) {
    json doc;
    doc["name"] = inst.name;
    doc["d"] = inst.d;
    doc["m"] = inst.m;
    doc["n"] = inst.n;
    doc["c"] = inst.c;
    doc["T"] = inst.T;
    json rows = json::array();
    for (const auto& con : inst.polyX)
        rows.push_back({{"coeffs", con.coeffs}, {"sense", sense_text(con.sense)}, {"rhs", con.rhs}});
    doc["polyX"] = rows;
    json lo = json::array(), hi = json::array();
    for (double b : inst.lower) {
        if (b == -kInf) lo.push_back("-inf"); else lo.push_back(b);
    }
    for (double b : inst.upper) {
        if (b == kInf) hi.push_back("inf"); else hi.push_back(b);
    }
    doc["bounds"] = {{"lower", lo}, {"upper", hi}};
    doc["scenarios"] = inst.scenarios;
    json probs = json::array();
    for (const auto& p : inst.probs) probs.push_back({{"num", p.num()}, {"den", p.den()}});
    doc["probs"] = probs;
    doc["epsilon"] = {{"num", inst.epsilon.num()}, {"den", inst.epsilon.den()}};
    if (!inst.meta.empty()) doc["meta"] = inst.meta;
    out << doc.dump(1) << "\n";
}

void save_instance_file(const CcpInstance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot open output file: " + path);
    save_instance(inst, out);
}

std::string instance_to_text(const CcpInstance& inst) {
    std::ostringstream out;
    save_instance(inst, out);
    return out.str();
}

Rational chance_violation(const CcpInstance& inst, const std::vector<double>& v) {
    if ((int)v.size() != inst.m) throw DimensionError("v has wrong length");
    Rational total(0);
    for (int i = 0; i < inst.n; ++i) {
        bool violated = false;
        for (int k = 0; k < inst.m && !violated; ++k)
            if (strictly_less(v[k], inst.scenarios[i][k])) violated = true;
        if (violated) total += inst.probs[i];
    }
    return total;
}

FeasibilityCheck check_feasible(const CcpInstance& inst, const CandidateSolution& cand) {
    FeasibilityCheck result;
    if ((int)cand.x.size() != inst.d || (int)cand.v.size() != inst.m ||
        (int)cand.z.size() != inst.n)
        throw DimensionError("candidate has wrong dimensions");
    auto note = [&](const std::string& s) { result.violations.push_back(s); };

    for (int j = 0; j < inst.d; ++j) {
        if (cand.x[j] < inst.lower[j] - kTolFeas || cand.x[j] > inst.upper[j] + kTolFeas)
            note("x" + std::to_string(j + 1) + " out of bounds");
    }
    for (size_t r = 0; r < inst.polyX.size(); ++r) {
        const auto& con = inst.polyX[r];
        double lhs = 0.0;
        for (int j = 0; j < inst.d; ++j) lhs += con.coeffs[j] * cand.x[j];
        bool ok = true;
        switch (con.sense) {
            case Sense::LessEqual: ok = lhs <= con.rhs + kTolFeas; break;
            case Sense::Equal: ok = std::abs(lhs - con.rhs) <= kTolFeas; break;
            case Sense::GreaterEqual: ok = lhs >= con.rhs - kTolFeas; break;
        }
        if (!ok) note("polyX row " + std::to_string(r + 1) + " violated");
    }
    for (int k = 0; k < inst.m; ++k) {
        if (std::abs(inst.row_activity(k, cand.x) - cand.v[k]) > kTolFeas)
            note("v" + std::to_string(k + 1) + " != (Tx)_" + std::to_string(k + 1));
        if (cand.v[k] < -kTolFeas) note("v" + std::to_string(k + 1) + " negative");
    }
    Rational mass(0);
    for (int i = 0; i < inst.n; ++i) {
        if (cand.z[i] != 0 && cand.z[i] != 1) {
            note("z" + std::to_string(i + 1) + " not binary");
            continue;
        }
        if (cand.z[i] == 1) {
            mass += inst.probs[i];
            continue;
        }
        for (int k = 0; k < inst.m; ++k)
            if (cand.v[k] < inst.scenarios[i][k] - kTolFeas) {
                note("big-M row violated: v >= xi^" + std::to_string(i + 1) +
                     " fails in component " + std::to_string(k + 1));
                break;
            }
    }
    if (mass > inst.epsilon)
        note("knapsack violated: sum p_i z_i = " + mass.str() + " > " + inst.epsilon.str());
    result.feasible = result.violations.empty();
    return result;
}

CcpInstance example_instance() {
    CcpInstance inst;
    inst.name = "example1";
    inst.d = 3;
    inst.m = 3;
    inst.n = 7;
    inst.c = {6, 1, 3};
    inst.T = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    inst.lower = {0, 0, 0};
    inst.upper = {kInf, kInf, kInf};
    inst.scenarios = {{2, 1, 12}, {3, 1, 10}, {4, 2, 7}, {5, 2, 6},
                      {6, 2, 6}, {7, 1, 4}, {12, 1, 2}};
    inst.probs.assign(7, Rational(1, 7));
    inst.epsilon = Rational(4, 7);
    return inst;
}

}  // namespace ccps
