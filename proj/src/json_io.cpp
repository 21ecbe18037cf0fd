#include "fracfactor/json_io.hpp"

#include <sstream>

namespace fracfactor {

Json to_json(const DeficiencyWitness& w)
{
    return Json{{"S", w.s.members()},
                {"T", w.t.members()},
                {"theta", w.theta},
                {"epsilon", w.epsilon},
                {"rule", w.rule == WitnessRule::deleted ? "deleted" : "factor"}};
}

Json to_json(const FractionalAssignment& h)
{
    Json out = Json::array();
    for (const auto& e : h.weights)
        if (e.halves > 0)
            out.push_back(Json{{"u", e.u}, {"v", e.v}, {"h", e.halves / 2.0}});
    return out;
}

namespace {

Json oracle_json(OracleOutcome o)
{
    switch (o) {
    case OracleOutcome::holds:
        return true;
    case OracleOutcome::fails:
        return false;
    case OracleOutcome::skipped:
        break;
    }
    return to_string(o);
}

}  // namespace

Json to_json(const TheoremReport& r)
{
    Json values = Json::object();
    for (const auto& [name, v] : r.hypothesis_values)
        values[name] = v;
    return Json{{"theorem", to_string(r.theorem)},
                {"n", r.n},
                {"a", r.a},
                {"b", r.b},
                {"applicable", r.applicable},
                {"hypothesis_met", r.hypothesis_met},
                {"hypothesis_values", values},
                {"oracle", oracle_json(r.oracle)},
                {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
                {"size_chain_ok", r.size_chain_ok},
                {"consistent", r.consistent},
                {"margin", r.margin}};
}

Json to_json(const SharpnessReport& r)
{
    return Json{{"n", r.n},
                {"a", r.a},
                {"b", r.b},
                {"graph6", r.graph6},
                {"oracle", r.oracle_holds},
                {"witness", to_json(r.witness)},
                {"rho", r.rho},
                {"rho_extremal", r.rho_extremal},
                {"rho_hypothesis_met", r.rho_hypothesis_met},
                {"q", r.q},
                {"q_extremal", r.q_extremal},
                {"q_hypothesis_met", r.q_hypothesis_met},
                {"passed", true}};
}

Json to_json(const ScanSummary& s)
{
    Json out{{"lines", s.lines},
             {"checked", s.checked},
             {"errors", s.errors},
             {"applicable", s.applicable},
             {"hypothesis_met", s.hypothesis_met},
             {"oracle_skipped", s.oracle_skipped},
             {"counterexamples", s.counterexamples}};
    if (!s.io_error.empty())
        out["io_error"] = s.io_error;
    return Json{{"summary", out}};
}

Json to_json(const ScanRecord& r)
{
    Json out{{"line", r.line}, {"graph6", r.graph6}};
    if (r.report) {
        out["report"] = to_json(*r.report);
        out["counterexample"] = r.report->counterexample();
    } else {
        out["error"] = r.error;
    }
    return out;
}

std::string tsv_header() { return "id\ttheorem\thypothesis_met\toracle\tconsistent\trho\tq\te\tdelta"; }

std::string to_tsv(const ScanRecord& r, TheoremId theorem)
{
    std::ostringstream os;
    os.precision(17);
    os << r.line << '\t' << to_string(theorem) << '\t';
    if (!r.report) {
        std::string msg = r.error;
        for (char& c : msg)
            if (c == '\t' || c == '\n')
                c = ' ';
        os << "error\t" << msg;
        return os.str();
    }
    const TheoremReport& rep = *r.report;
    auto lookup = [&rep](const char* name) -> std::string {
        for (const auto& [key, v] : rep.hypothesis_values)
            if (key == name) {
                std::ostringstream x;
                x.precision(17);
                x << v;
                return x.str();
            }
        return "-";
    };
    os << (rep.hypothesis_met ? "true" : "false") << '\t' << to_string(rep.oracle) << '\t'
       << (rep.counterexample() ? "false" : "true") << '\t' << lookup("rho") << '\t' << lookup("q") << '\t'
       << lookup("e") << '\t' << lookup("delta");
    return os.str();
}

}  // namespace fracfactor
