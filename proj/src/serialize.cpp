#include "striphom/serialize.hpp"

#include <stdexcept>

namespace striphom {

std::string rational_str(const Rational& q) {
    return q.get_str();
}

Json chain_to_json(const Chain& c) {
    Json out = Json::array();
    for (const auto& [sym, coef] : c.terms())
        out.push_back({{"coefficient", rational_str(coef)}, {"symbol", sym.text()}});
    return out;
}

Chain chain_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("chain JSON must be a list");
    Chain c;
    for (const auto& term : j) {
        Rational coef(term.at("coefficient").get<std::string>());
        coef.canonicalize();
        c.add(Symbol::parse(term.at("symbol").get<std::string>()), coef);
    }
    return c;
}

Json class_values_json(const ClassFunction& f) {
    Json out = Json::array();
    const auto& parts = partition_list(f.n);
    for (size_t i = 0; i < parts.size(); ++i)
        out.push_back(
            {{"partition", parts[i]}, {"value", rational_str(f.values[i])}});
    return out;
}

Json decomposition_json(const std::map<Partition, long>& mults) {
    Json out = Json::array();
    for (const auto& [lambda, m] : mults)
        if (m != 0) out.push_back({{"mult", m}, {"partition", lambda}});
    return out;
}

Json h1_report_json(const H1Verification& rep) {
    Json fams = Json::array();
    for (const auto& f : rep.families)
        fams.push_back({{"character_ok", f.character_ok},
                        {"count", f.count},
                        {"expected", f.expected},
                        {"m", f.m},
                        {"stable", f.stable}});
    return {{"betti", rep.betti},       {"families", fams},
            {"independent", rep.independent}, {"n", rep.n},
            {"ok", rep.ok()},           {"spans", rep.spans},
            {"total", rep.total}};
}

Json direct_sum_report_json(const DirectSumReport& rep) {
    Json tuples = Json::array();
    for (const auto& tc : rep.tuples)
        tuples.push_back({{"count", tc.count},
                          {"expected", tc.expected},
                          {"tuple", tc.sizes}});
    return {{"betti", rep.betti},
            {"character_ok", rep.character_ok},
            {"independent", rep.independent},
            {"k", rep.k},
            {"n", rep.n},
            {"ok", rep.ok()},
            {"total", rep.total},
            {"tuples", tuples}};
}

}  // namespace striphom
