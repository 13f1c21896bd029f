#include "chordcycle/spec_json.hpp"

#include <json.hpp>

namespace chordcycle {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON spec");
    return j;
}

json tent_to_json(const TentSpec& t) {
    json j{{"apex", t.apex_index}, {"base", t.base_indices}};
    if (!t.shape_parent.empty()) j["shape"] = t.shape_parent;
    return j;
}

TentSpec tent_from_json(const json& j) {
    TentSpec t;
    t.apex_index = j.at("apex").get<int>();
    t.base_indices = j.at("base").get<std::vector<int>>();
    if (j.contains("shape")) t.shape_parent = j.at("shape").get<std::vector<int>>();
    return t;
}

}  // namespace

std::string to_json_string(const BlowupCycleSpec& spec) {
    json j{{"ell", spec.ell}, {"sizes", spec.sizes}};
    if (!spec.boundaries.empty()) j["boundaries"] = spec.boundaries;
    return j.dump();
}

BlowupCycleSpec blowup_spec_from_json(const std::string& text) {
    json j = parse(text);
    BlowupCycleSpec spec;
    spec.ell = j.at("ell").get<int>();
    spec.sizes = j.at("sizes").get<std::vector<int>>();
    if (j.contains("boundaries"))
        spec.boundaries = j.at("boundaries").get<std::vector<std::vector<int>>>();
    return spec;
}

std::string to_json_string(const FrameworkSpec& spec) {
    json j{{"ell", spec.ell}, {"k", spec.k}, {"m", spec.m}};
    j["upper_tents"] = json::array();
    for (const auto& t : spec.upper_tents) j["upper_tents"].push_back(tent_to_json(t));
    j["lower_tents"] = json::array();
    for (const auto& t : spec.lower_tents) j["lower_tents"].push_back(tent_to_json(t));
    if (!spec.blow_sizes.empty()) j["blow_sizes"] = spec.blow_sizes;
    if (!spec.boundary_profiles.empty()) j["boundary_profiles"] = spec.boundary_profiles;
    return j.dump();
}

FrameworkSpec framework_spec_from_json(const std::string& text) {
    json j = parse(text);
    FrameworkSpec spec;
    spec.ell = j.at("ell").get<int>();
    spec.k = j.at("k").get<int>();
    spec.m = j.value("m", 0);
    if (j.contains("upper_tents"))
        for (const auto& t : j.at("upper_tents")) spec.upper_tents.push_back(tent_from_json(t));
    if (j.contains("lower_tents"))
        for (const auto& t : j.at("lower_tents")) spec.lower_tents.push_back(tent_from_json(t));
    if (j.contains("blow_sizes"))
        spec.blow_sizes = j.at("blow_sizes").get<std::map<std::string, int>>();
    if (j.contains("boundary_profiles"))
        spec.boundary_profiles =
            j.at("boundary_profiles").get<std::map<std::string, std::vector<int>>>();
    return spec;
}

std::string to_json_string(const CycleWitness& w) {
    json j{{"vertices", w.vertices}, {"length", w.length()}, {"chordless", w.chordless}};
    return j.dump();
}

}  // namespace chordcycle
