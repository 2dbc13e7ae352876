#pragma once

#include "charvar.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace skewlink {

using Json = nlohmann::json;

inline Json poly_to_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (auto& [e, c] : p.terms()) {
        Json t;
        t["exps"] = e;
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    return Json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

inline LaurentPoly poly_from_json(const Json& j) {
    LaurentPoly p(j.at("nvars").get<int>());
    for (auto& t : j.at("terms")) {
        Exps e = t.at("exps").get<Exps>();
        Int c(t.at("coeff").get<std::string>());
        p.add_term(e, c);
    }
    return p;
}

// Aggregated invariants of one arrangement, as printed by the CLI.
struct Report {
    std::string spec;
    int n = 0;
    std::optional<LaurentPoly> alexander;       // multivariable, unit-normalized
    std::optional<LaurentPoly> link_alexander;  // meridian coordinates, unit-normalized
    LaurentPoly single_var{1};
    int delta = 0;
    std::vector<TorsionCount> tors;

    std::optional<std::vector<int>> normal_form_sizes;  // S(A)
    std::optional<int> normal_form_j;
    std::optional<std::string> sigma;            // full Sigma list, "3,4_2,5_3"
    std::optional<std::string> sigma_through_1;
    std::vector<std::string> components;         // bottom-variety component equations
    std::vector<std::pair<std::string, bool>> verifications;
    std::vector<std::string> notes;              // e.g. out-of-scope annotations

    Json to_json() const {
        Json j;
        j["spec"] = spec;
        j["n"] = n;
        if (alexander) {
            j["alexander_poly"] = poly_to_json(*alexander);
            j["alexander_poly_text"] = alexander->str();
        }
        if (link_alexander) {
            j["link_alexander_poly"] = poly_to_json(*link_alexander);
            j["link_alexander_poly_text"] = link_alexander->str();
        }
        j["single_var_poly"] = poly_to_json(single_var);
        j["single_var_poly_text"] = single_var.str();
        j["delta"] = delta;
        Json jt = Json::array();
        for (auto& t : tors)
            jt.push_back(Json{{"p", t.p}, {"k", t.k}, {"count", t.count}});
        j["tors"] = std::move(jt);
        if (normal_form_sizes) {
            j["normal_form"] = Json{{"negative_block_sizes", *normal_form_sizes},
                                    {"positive_block_size", normal_form_j.value_or(0)}};
        }
        if (sigma) j["sigma"] = *sigma;
        if (sigma_through_1) j["sigma_through_1"] = *sigma_through_1;
        if (!components.empty()) j["components"] = components;
        if (!verifications.empty()) {
            Json jv = Json::array();
            for (auto& [torus, ok] : verifications)
                jv.push_back(Json{{"torus", torus}, {"contained", ok}});
            j["verifications"] = std::move(jv);
        }
        if (!notes.empty()) j["notes"] = notes;
        return j;
    }

    static Report from_json(const Json& j) {
        Report r;
        r.spec = j.at("spec").get<std::string>();
        r.n = j.at("n").get<int>();
        if (j.contains("alexander_poly")) r.alexander = poly_from_json(j["alexander_poly"]);
        if (j.contains("link_alexander_poly"))
            r.link_alexander = poly_from_json(j["link_alexander_poly"]);
        r.single_var = poly_from_json(j.at("single_var_poly"));
        r.delta = j.at("delta").get<int>();
        for (auto& t : j.at("tors"))
            r.tors.push_back({t.at("p").get<int>(), t.at("k").get<int>(),
                              t.at("count").get<long long>()});
        if (j.contains("normal_form")) {
            r.normal_form_sizes =
                j["normal_form"].at("negative_block_sizes").get<std::vector<int>>();
            r.normal_form_j = j["normal_form"].at("positive_block_size").get<int>();
        }
        if (j.contains("sigma")) r.sigma = j["sigma"].get<std::string>();
        if (j.contains("sigma_through_1"))
            r.sigma_through_1 = j["sigma_through_1"].get<std::string>();
        if (j.contains("components"))
            r.components = j["components"].get<std::vector<std::string>>();
        if (j.contains("verifications"))
            for (auto& v : j["verifications"])
                r.verifications.push_back(
                    {v.at("torus").get<std::string>(), v.at("contained").get<bool>()});
        if (j.contains("notes")) r.notes = j["notes"].get<std::vector<std::string>>();
        return r;
    }
};

}  // namespace skewlink
