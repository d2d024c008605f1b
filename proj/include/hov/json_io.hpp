#pragma once

// JSON serialization for instance files and reports. Coordinates travel as
// strings ("1", "-2/3", "0.25") because no common numeric JSON type holds
// exact rationals. Report schemas carry a "schema": 1 field.

#include "hov/dimension.hpp"
#include "hov/neighbors.hpp"
#include "hov/polytope.hpp"
#include "hov/relations.hpp"
#include "hov/voronoi.hpp"

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

namespace hov {

using Json = nlohmann::ordered_json;

inline Json point_to_json(const Point& p) {
    Json a = Json::array();
    for (const auto& c : p) a.push_back(to_string(c));
    return a;
}

inline Point point_from_json(const Json& a) {
    Point p;
    for (const auto& c : a) p.push_back(parse_scalar(c.get<std::string>()));
    return p;
}

inline Json spec_to_json(const CellSpec& spec) {
    Json j;
    j["dimension"] = spec.ambient_dim();
    j["sites"] = Json::array();
    for (const auto& s : spec.sites.sites)
        j["sites"].push_back({{"id", s.id}, {"coords", point_to_json(s.point)}});
    j["S"] = Json::array();
    for (const auto& id : spec.s_ids) j["S"].push_back(id);
    return j;
}

inline CellSpec spec_from_json(const Json& j) {
    const std::size_t n = j.at("dimension").get<std::size_t>();
    std::vector<Site> sites;
    for (const auto& s : j.at("sites"))
        sites.push_back({s.at("id").get<std::string>(), point_from_json(s.at("coords"))});
    std::set<std::string> s_ids;
    for (const auto& id : j.at("S")) s_ids.insert(id.get<std::string>());
    return CellSpec(SiteSet(n, std::move(sites)), std::move(s_ids));
}

inline Json constraint_to_json(const LinearConstraint& c) {
    Json j;
    j["normal"] = point_to_json(c.normal);
    j["rhs"] = to_string(c.rhs);
    j["relation"] = c.rel == Rel::Eq ? "eq" : "leq";
    return j;
}

inline Json hpoly_to_json(const HPolyhedron& P) {
    Json j;
    j["ambient_dim"] = P.ambient_dim;
    j["equalities"] = Json::array();
    for (const auto& c : P.equalities) j["equalities"].push_back(constraint_to_json(c));
    j["inequalities"] = Json::array();
    for (std::size_t i = 0; i < P.inequalities.size(); ++i) {
        Json c = constraint_to_json(P.inequalities[i]);
        auto it = P.provenance.find(i);
        if (it != P.provenance.end()) c["pair"] = {it->second.first, it->second.second};
        j["inequalities"].push_back(std::move(c));
    }
    return j;
}

inline Json ball_to_json(const Ball& b) {
    return {{"center", point_to_json(b.center)}, {"sq_radius", to_string(b.sq_radius)}};
}

inline Json certificate_to_json(const BallCertificate& cert) {
    Json j;
    j["ball"] = ball_to_json(cert.ball);
    j["on_boundary_S"] = cert.on_boundary_S;
    j["on_boundary_T"] = cert.on_boundary_T;
    return j;
}

inline Json dimension_report_to_json(const DimensionReport& rep) {
    Json j;
    j["schema"] = 1;
    j["cell_empty"] = rep.cell_empty;
    if (rep.ball) j["ball"] = certificate_to_json(*rep.ball);
    j["C_empty"] = rep.C_empty;
    const auto poly_json = [](const VPolytope& p) {
        Json a = Json::array();
        for (const auto& v : p.vertices) a.push_back(point_to_json(v));
        return a;
    };
    if (rep.F_S) j["F_S"] = poly_json(*rep.F_S);
    if (rep.F_T) j["F_T"] = poly_json(*rep.F_T);
    j["dim_co_faces"] = rep.dim_co_faces;
    j["predicted_dim"] = rep.predicted_dim;
    j["lp_dim"] = rep.lp_dim;
    j["agree"] = rep.agree;
    return j;
}

inline Json neighbor_report_to_json(const NeighborReport& rep) {
    Json j;
    j["schema"] = 1;
    j["minimal_sets"] = Json::array();
    for (const auto& s : rep.minimal_sets) j["minimal_sets"].push_back(s);
    j["neighbor_set"] = rep.neighbor_set;
    j["unique"] = rep.unique;
    j["interior_nonempty"] = rep.interior_nonempty;
    j["facet_pairs"] = Json::array();
    for (const auto& [s, t] : rep.facet_pairs) j["facet_pairs"].push_back({s, t});
    return j;
}

inline Json chain_report_to_json(const ChainReport& rep) {
    Json j;
    j["schema"] = 1;
    j["holds"] = rep.holds;
    j["constructive_ok"] = rep.constructive_ok;
    j["links"] = Json::array();
    for (const auto& l : rep.links)
        j["links"].push_back({{"from_card", l.from_card},
                              {"to_card", l.to_card},
                              {"points_tested", l.points_tested},
                              {"holds", l.holds},
                              {"strict_on_evidence", l.strict_evidence}});
    if (rep.violation_witness) j["violation_witness"] = point_to_json(*rep.violation_witness);
    if (!rep.violation_detail.empty()) j["violation_detail"] = rep.violation_detail;
    return j;
}

// One cell, everything we know about it.
inline Json cell_report(const CellSpec& spec) {
    Json j;
    j["schema"] = 1;
    j["order"] = spec.s_ids.size();
    const auto H = cell_halfspaces(spec);
    j["h_representation"] = hpoly_to_json(H);
    const auto rep = predicted_dimension(spec);
    j["dimension"] = dimension_report_to_json(rep);
    if (!rep.cell_empty && !spec.t_minus_s_sites().empty() &&
        spec.t_minus_s_sites().size() <= neighbor_search_budget())
        j["neighbors"] = neighbor_report_to_json(all_minimal_neighbor_sets(spec));
    return j;
}

}  // namespace hov
