#pragma once

#include "ravenlab/mixture.hpp"
#include "ravenlab/rules.hpp"
#include "ravenlab/sweep.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace ravenlab {

// JSON shapes for the result types. Rationals travel as "p/q" strings;
// reports round-trip exactly (parse(dump(x)) == x).

inline nlohmann::json rat_to_json(const std::optional<Rat>& r) {
    if (!r) return nullptr;
    return to_fraction_string(*r);
}

inline std::optional<Rat> rat_from_json(const nlohmann::json& j) {
    if (j.is_null()) return std::nullopt;
    return parse_rational(j.get<std::string>());
}

inline nlohmann::json verdict_to_json(const Verdict& v) {
    return {{"relation", relation_name(v.relation)},
            {"lhs", rat_to_json(v.lhs)},
            {"rhs", rat_to_json(v.rhs)}};
}

inline Verdict verdict_from_json(const nlohmann::json& j) {
    Verdict v;
    auto rel = relation_from_name(j.at("relation").get<std::string>());
    if (!rel) throw std::invalid_argument("bad relation name in verdict");
    v.relation = *rel;
    v.lhs = rat_from_json(j.at("lhs"));
    v.rhs = rat_from_json(j.at("rhs"));
    return v;
}

inline bool operator==(const Verdict& a, const Verdict& b) {
    return a.relation == b.relation && a.lhs == b.lhs && a.rhs == b.rhs;
}

inline nlohmann::json guarded_to_json(const GuardedResult& g) {
    return {{"premise", g.premise_holds},
            {"conclusion", conclusion_name(g.conclusion)},
            {"lhs", rat_to_json(g.lhs)},
            {"rhs", rat_to_json(g.rhs)},
            {"witnesses", g.witnesses}};
}

inline GuardedResult guarded_from_json(const nlohmann::json& j) {
    GuardedResult g;
    g.premise_holds = j.at("premise").get<bool>();
    std::string c = j.at("conclusion").get<std::string>();
    if (c == "holds")
        g.conclusion = Conclusion::holds;
    else if (c == "fails")
        g.conclusion = Conclusion::fails;
    else if (c == "not_evaluated")
        g.conclusion = Conclusion::not_evaluated;
    else
        throw std::invalid_argument("bad conclusion name");
    g.lhs = rat_from_json(j.at("lhs"));
    g.rhs = rat_from_json(j.at("rhs"));
    g.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    return g;
}

inline bool operator==(const GuardedResult& a, const GuardedResult& b) {
    return a.premise_holds == b.premise_holds && a.conclusion == b.conclusion && a.lhs == b.lhs &&
           a.rhs == b.rhs && a.witnesses == b.witnesses;
}

inline nlohmann::json xi_to_json(const XiFactors& x) {
    return {{"xi1", to_fraction_string(x.xi1)},
            {"xi2", to_fraction_string(x.xi2)},
            {"product", to_fraction_string(x.product)}};
}

inline nlohmann::json theorem2_to_json(const Theorem2Result& t) {
    return {{"restriction_strict_confirmation", t.restriction_strict_confirmation},
            {"restriction_tail_bound", t.restriction_tail_bound},
            {"nc", verdict_to_json(t.nc)},
            {"implication", guarded_to_json(t.implication)}};
}

inline nlohmann::json setting2_to_json(const Setting2Report& s) {
    return {{"k", s.k},
            {"a", s.a},
            {"theorem4", guarded_to_json(s.theorem4)},
            {"theorem3_pj", guarded_to_json(s.theorem3_pj)},
            {"theorem5_pj", guarded_to_json(s.theorem5_pj)},
            {"theorem3_ra", guarded_to_json(s.theorem3_ra)},
            {"theorem5_ra", guarded_to_json(s.theorem5_ra)},
            {"violated", s.violated()}};
}

inline nlohmann::json table1_to_json(const Table1& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < 4; ++r) {
        nlohmann::json row = {{"observation", t.row_labels[r]}};
        nlohmann::json cols = nlohmann::json::array();
        for (int c = 0; c < 2; ++c)
            cols.push_back({{"column", t.column_labels[c]},
                            {"verdict", verdict_to_json(t.cells[r][c].verdict)},
                            {"expected", t.cells[r][c].expected}});
        row["cells"] = std::move(cols);
        rows.push_back(std::move(row));
    }
    return {{"k", t.k}, {"rows", std::move(rows)}};
}

inline nlohmann::json trial_report_to_json(const TrialReport& r) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"property", v.property},
                              {"seed", v.seed},
                              {"trial", v.trial},
                              {"witness", v.witness}});
    return {{"seed", r.config.seed},
            {"trials", r.trials_run},
            {"violations", std::move(violations)},
            {"informative_counterexamples", r.informative_counterexamples},
            {"notes", r.notes}};
}

inline nlohmann::json assumption_to_json(const AssumptionCheck& a) {
    return {{"holds", a.holds}, {"max_deviation", to_fraction_string(a.max_deviation)}};
}

inline nlohmann::json bisect_to_json(const BisectResult& b) {
    return {{"lo", to_fraction_string(b.lo)},
            {"hi", to_fraction_string(b.hi)},
            {"lo_dec", to_decimal_string(b.lo)},
            {"hi_dec", to_decimal_string(b.hi)},
            {"lo_value", b.lo_value},
            {"hi_value", b.hi_value},
            {"evaluations", b.evaluations}};
}

inline nlohmann::json maher_deviation_to_json(const MaherDeviation& d) {
    return {{"displayed_formula", to_fraction_string(d.displayed)},
            {"mixture", to_fraction_string(d.mixture)},
            {"difference", to_fraction_string(d.difference)},
            {"difference_dec", to_decimal_string(d.difference)}};
}

}  // namespace ravenlab
