#include "descent3/report.hpp"

#include <json.hpp>

namespace descent3 {

using json = nlohmann::ordered_json;

namespace {

json subgroup_obj(const Subgroup& s) {
    json j;
    j["order"] = s.order();
    j["members"] = s.members;
    return j;
}

json grt_obj(const GrtReport& rep) {
    json j;
    j["q"] = rep.q;
    j["supported"] = rep.supported;
    if (!rep.supported) j["unsupported_reason"] = rep.unsupported_reason;
    j["condition_i"] = rep.cond_i;
    j["condition_ii"] = rep.cond_ii;
    j["condition_iii"] = rep.cond_iii;
    j["verdict"] = rep.verdict();
    if (rep.xi) j["xi_witness"] = rep.xi->values;
    if (rep.failing_kernel_element) {
        json terms = json::array();
        for (const auto& t : rep.failing_kernel_element->tensor_part) {
            json term;
            term["coeff"] = t.coeff;
            term["left"] = t.left.values;
            term["right"] = t.right.values;
            terms.push_back(term);
        }
        j["failing_kernel_element"] = terms;
    }
    return j;
}

}  // namespace

std::string to_json(const GrtReport& rep) {
    json j;
    j["group_spec"] = rep.group->name();
    j["grt"] = grt_obj(rep);
    return j.dump();
}

std::string to_json(const MainTheoremReport& rep) {
    json j;
    j["group_spec"] = rep.group->name();
    j["p"] = rep.p;
    j["grt"] = grt_obj(rep.grt);
    j["series"] = json::array();
    j["series"].push_back(subgroup_obj(rep.g2));
    j["series"].push_back(subgroup_obj(rep.g3));
    j["delta"] = rep.delta.members;
    json dist = json::array();
    for (const auto& d : rep.distinguished) {
        json e;
        e["members"] = d.subgroup.members;
        e["quotient_name"] = d.quotient_name;
        dist.push_back(e);
    }
    j["distinguished"] = dist;
    json verdicts;
    verdicts["sandwich"] = rep.sandwich;
    verdicts["equality"] = rep.equality;
    verdicts["verdict"] = rep.verdict;
    j["verdicts"] = verdicts;
    json witnesses;
    witnesses["g2_order"] = rep.g2.order();
    witnesses["g3_order"] = rep.g3.order();
    witnesses["delta_order"] = rep.delta.order();
    j["witnesses"] = witnesses;
    return j.dump();
}

std::string to_json(const CentralSeries& s) {
    json j;
    j["group_spec"] = s.group->name();
    j["q"] = s.q;
    json terms = json::array();
    for (const auto& t : s.terms) terms.push_back(t.members);
    j["terms"] = terms;
    return j.dump();
}

std::string to_json(const WGroupReport& rep) {
    json j;
    j["wgroup_order"] = rep.wgroup->order();
    j["grt"] = rep.grt;
    j["nonabelian"] = rep.wg_nonabelian;
    j["has_modular_quotient"] = rep.has_modular_quotient;
    j["order_p_inside_second"] = rep.order_p_inside_second;
    j["order_p_outside"] = rep.order_p_outside;
    j["has_zp_direct_factor"] = rep.has_zp_direct_factor;
    j["realization_premise"] = rep.realization_premise;
    j["realization_conclusion"] = rep.realization_conclusion;
    return j.dump();
}

std::string to_json(const LiftReport& rep) {
    json j;
    j["preconditions_ok"] = rep.preconditions_ok;
    if (!rep.precondition_note.empty()) j["note"] = rep.precondition_note;
    j["epimorphism_count"] = rep.epimorphisms.size();
    json routes = json::array();
    for (std::size_t i = 0; i < rep.routes.size(); ++i) {
        json r;
        r["psi"] = rep.epimorphisms[i].values;
        r["via"] = rep.routes[i].via;
        if (rep.routes[i].via != "none") r["witness"] = rep.routes[i].witness.images;
        routes.push_back(r);
    }
    j["routes"] = routes;
    j["all_factor"] = rep.all_factor;
    return j.dump();
}

std::string to_json(const EmbeddingReport& rep) {
    json j;
    j["solutions"] = rep.solutions.size();
    j["trg_fiber"] = rep.trg_fiber.size();
    j["distinct_restrictions"] = rep.distinct_restrictions;
    j["inflation_count"] = rep.inflation_count;
    j["correspondence"] = rep.correspondence;
    return j.dump();
}

std::string subgroup_json(const Subgroup& s) { return subgroup_obj(s).dump(); }

}  // namespace descent3
