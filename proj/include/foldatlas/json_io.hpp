#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "foldatlas/bounds.hpp"
#include "foldatlas/curve.hpp"
#include "foldatlas/harness.hpp"
#include "foldatlas/invariants.hpp"
#include "foldatlas/splitting.hpp"
#include "foldatlas/witness.hpp"
#include "foldatlas/words.hpp"

namespace foldatlas {

using nlohmann::json;

class MalformedInput : public std::runtime_error {
  public:
    explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

// Curve JSON: { "components": [ { "vertices": [[x,y],...], "basepoint": int } ] }
inline json to_json(const PlanarCurve& curve) {
    json comps = json::array();
    for (const auto& c : curve.components) {
        json verts = json::array();
        for (const Vec2& v : c.vertices) verts.push_back({v.x, v.y});
        comps.push_back({{"vertices", std::move(verts)}, {"basepoint", c.basepoint}});
    }
    return {{"components", std::move(comps)}};
}

inline PlanarCurve curve_from_json(const json& j) {
    try {
        PlanarCurve curve;
        for (const auto& jc : j.at("components")) {
            CurveComponent comp;
            for (const auto& jv : jc.at("vertices"))
                comp.vertices.push_back({jv.at(0).get<double>(), jv.at(1).get<double>()});
            comp.basepoint = jc.at("basepoint").get<std::size_t>();
            if (comp.basepoint >= comp.vertices.size())
                throw MalformedInput("basepoint index out of range");
            curve.components.push_back(std::move(comp));
        }
        return curve;
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("bad curve JSON: ") + e.what());
    }
}

// Splitting JSON: { "plus": [{"label","genus"}], "minus": [...],
//                   "sigma": [{"plus","minus"}] }
inline json to_json(const SplitSurface& s) {
    json plus = json::array(), minus = json::array(), sigma = json::array();
    for (const auto& c : s.plus_components) plus.push_back({{"label", c.label}, {"genus", c.genus}});
    for (const auto& c : s.minus_components) minus.push_back({{"label", c.label}, {"genus", c.genus}});
    for (const auto& c : s.sigma_circles) {
        json jc = {{"plus", c.plus_ref}, {"minus", c.minus_ref}};
        if (c.weight)
            jc["weight"] = {{"i_plus", c.weight->i_plus},
                            {"i_minus", c.weight->i_minus},
                            {"n_plus", c.weight->n_plus},
                            {"n_minus", c.weight->n_minus}};
        sigma.push_back(std::move(jc));
    }
    return {{"plus", std::move(plus)}, {"minus", std::move(minus)}, {"sigma", std::move(sigma)}};
}

inline SplitSurface splitting_from_json(const json& j) {
    try {
        SplitSurface s;
        for (const auto& jc : j.at("plus"))
            s.plus_components.push_back({jc.at("label").get<std::string>(), jc.at("genus").get<int>()});
        for (const auto& jc : j.at("minus"))
            s.minus_components.push_back({jc.at("label").get<std::string>(), jc.at("genus").get<int>()});
        for (const auto& jc : j.at("sigma")) {
            SigmaCircle c{jc.at("plus").get<std::string>(), jc.at("minus").get<std::string>(), {}};
            if (jc.contains("weight")) {
                const auto& w = jc.at("weight");
                c.weight = CircleWeight{w.at("i_plus").get<int>(), w.at("i_minus").get<int>(),
                                        w.at("n_plus").get<int>(), w.at("n_minus").get<int>()};
            }
            s.sigma_circles.push_back(std::move(c));
        }
        return s;
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("bad splitting JSON: ") + e.what());
    }
}

inline json to_json(const InvariantRecord& r) {
    json per = json::array();
    for (const auto& t : r.per_component)
        per.push_back({{"w", t.w},
                       {"inner_outer", to_string(t.inner_outer)},
                       {"n_plus", t.n_plus},
                       {"n_minus", t.n_minus}});
    return {{"per_component", std::move(per)},
            {"I_plus", r.I_plus},
            {"I_minus", r.I_minus},
            {"N_plus", r.N_plus},
            {"N_minus", r.N_minus},
            {"N_ij_plus", r.N_ij_plus},
            {"N_ij_minus", r.N_ij_minus},
            {"Delta", r.Delta},
            {"W", r.collection_winding()}};
}

inline json to_json(const SplitSummary& s) {
    return {{"num_plus", s.num_plus},   {"num_minus", s.num_minus}, {"sigma_count", s.sigma_count},
            {"n_diff", s.n_diff},       {"rho", s.rho},             {"chi_plus", s.chi_plus},
            {"chi_minus", s.chi_minus}, {"chi_s", s.chi_s},         {"genus_s", s.genus_s}};
}

inline json to_json(const BoundReport& r) {
    json j = {{"max_form", r.max_form},
              {"tree_form", r.tree_form},
              {"gromov_form", r.gromov_form},
              {"refined_gromov_form", r.refined_gromov_form},
              {"identities", {{"max_equals_tree", r.max_form == r.tree_form},
                              {"refined_equals_tree", r.refined_gromov_form == r.tree_form}}}};
    if (r.per_side_form) j["per_side_form"] = *r.per_side_form;
    return j;
}

inline json to_json(const WordMultiset& ws) {
    json arr = json::array();
    for (const auto& w : ws.words) arr.push_back(to_string(w));
    return arr;
}

inline WordMultiset words_from_json(const json& j) {
    try {
        WordMultiset ws;
        for (const auto& jw : j) ws.words.push_back(parse_word(jw.get<std::string>()));
        std::sort(ws.words.begin(), ws.words.end());
        return ws;
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("bad word list JSON: ") + e.what());
    }
}

// Timing is deliberately omitted: a fixed seed yields a byte-identical report.
inline json to_json(const FuzzReport& r) {
    return {{"seed", r.seed},
            {"trials", r.trials},
            {"performed", r.performed},
            {"skipped", r.skipped},
            {"whitney_mismatches", r.whitney_mismatches},
            {"oracle_mismatches", r.oracle_mismatches},
            {"lemma_violations", r.lemma_violations}};
}

inline json to_json(const SweepReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"g", f.combo.g},
                            {"sigma", f.combo.sigma_count},
                            {"plus", f.combo.num_plus},
                            {"minus", f.combo.num_minus},
                            {"what", f.what}});
    return {{"g_max", r.g_max},
            {"combos_tested", r.combos.size()},
            {"failures", std::move(failures)},
            {"seconds", r.seconds}};
}

inline json to_json(const WitnessCertificate& cert) {
    json anatomy = json::array();
    for (const auto a : cert.anatomy) anatomy.push_back(to_string(a));
    json words = json::array();
    for (const auto& w : cert.assignment) words.push_back(to_string(w));
    return {{"combo",
             {{"g", cert.combo.g},
              {"sigma", cert.combo.sigma_count},
              {"plus", cert.combo.num_plus},
              {"minus", cert.combo.num_minus}}},
            {"swapped", cert.swapped},
            {"splitting", to_json(cert.splitting)},
            {"anatomy", std::move(anatomy)},
            {"assignment", std::move(words)},
            {"delta_sigma", cert.delta_sigma},
            {"bound", to_json(cert.bound)}};
}

}  // namespace foldatlas
