#include "splitgen/export.hpp"

namespace splitgen {

nlohmann::json system_to_json(const DeterminingSystem& sys) {
    nlohmann::json j;
    j["scheme"] = sys.scheme.name();
    if (sys.scheme.is_recursive()) j["l"] = sys.scheme.l;
    j["order"] = sys.order;
    j["stages"] = sys.stages;
    j["simplified"] = sys.simplified;
    j["variables"] = nlohmann::json::array();
    for (int i = 1; i <= sys.stages; ++i) j["variables"].push_back("p" + std::to_string(i));
    j["var_of_stage"] = sys.var_of_stage;
    j["normalization"] = "p1 + ... + pr = 1";
    j["equations"] = nlohmann::json::array();
    for (const auto& [label, poly] : sys.equations) {
        nlohmann::json eq;
        eq["label"] = label;
        eq["monomials"] = nlohmann::json::array();
        for (const auto& [exps, coeff] : poly.terms)
            eq["monomials"].push_back(
                {{"exponents", exps}, {"coefficient", to_fraction_string(coeff)}});
        j["equations"].push_back(std::move(eq));
    }
    return j;
}

DeterminingSystem system_from_json(const nlohmann::json& j) {
    DeterminingSystem sys;
    sys.scheme = Scheme::parse(j.at("scheme").get<std::string>(), j.value("l", 0));
    sys.order = j.at("order").get<int>();
    sys.stages = j.at("stages").get<int>();
    sys.simplified = j.value("simplified", false);
    sys.var_of_stage = j.at("var_of_stage").get<std::vector<int>>();
    for (const auto& eq : j.at("equations")) {
        ParamPoly poly(sys.stages);
        for (const auto& mono : eq.at("monomials"))
            poly.add_term(mono.at("exponents").get<std::vector<int>>(),
                          parse_rational(mono.at("coefficient").get<std::string>()));
        sys.equations.emplace_back(eq.at("label").get<std::vector<int>>(), std::move(poly));
    }
    return sys;
}

}  // namespace splitgen
