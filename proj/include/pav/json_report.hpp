#pragma once

#include <json.hpp>

#include "pav/census.hpp"
#include "pav/rational.hpp"
#include "pav/screen.hpp"
#include "pav/search.hpp"

namespace pav {

// All reports use nlohmann::ordered_json so keys appear in the documented
// order and output bytes are stable run to run.
using json = nlohmann::ordered_json;

inline json set_json(const ElementSet& s) {
    json a = json::array();
    for (int e : s) a.push_back(e);
    return a;
}

inline json census_json(const CensusReport& report) {
    json j;
    j["schema"] = "census-v1";
    j["name"] = report.matroid_name;
    j["n"] = report.n;
    j["rank"] = report.r;
    j["counts"] = {{"hyperplanes", report.counts.hyperplanes},
                   {"independent", report.counts.independent},
                   {"simple", report.counts.simple},
                   {"multiple", report.counts.multiple}};
    json hyps = json::array();
    for (const HyperplaneRecord& rec : report.hyperplanes) {
        json h;
        h["elements"] = set_json(rec.elements);
        h["size"] = rec.size;
        h["class"] = std::string(class_name(rec.classification));
        hyps.push_back(std::move(h));
    }
    j["hyperplanes"] = std::move(hyps);
    if (report.per_subset_profiles) {
        json profiles = json::array();
        for (const SubsetProfile& p : *report.per_subset_profiles) {
            json row;
            row["subset"] = set_json(p.subset);
            row["simple"] = p.simple_count;
            row["multiple"] = p.multiple_count;
            profiles.push_back(std::move(row));
        }
        j["profiles"] = std::move(profiles);
    }
    return j;
}

inline json screen_json(const ScreenVerdict& verdict, const std::string& name, int n, int r) {
    json j;
    j["schema"] = "screen-v1";
    j["name"] = name;
    j["n"] = n;
    j["rank"] = r;
    j["applicable"] = verdict.applicable;
    j["reason"] = verdict.reason_if_not ? json(std::string(reason_name(*verdict.reason_if_not))) : json(nullptr);
    j["independent_count"] = verdict.independent_count;
    j["bound"] = verdict.bound_value ? json(fraction_string(*verdict.bound_value)) : json(nullptr);
    j["bound_decimal"] = verdict.bound_value ? json(decimal_string(*verdict.bound_value)) : json(nullptr);
    j["verdict"] = std::string(verdict_name(verdict.verdict));
    // a negative verdict ships its evidence
    j["certificate"] = verdict.certificate ? census_json(*verdict.certificate) : json(nullptr);
    return j;
}

inline json search_header_json(const SearchOptions& opt) {
    json j;
    j["schema"] = "pav-search-v1";
    j["n"] = opt.n;
    j["r"] = opt.r;
    j["mode"] = std::string(mode_name(opt.mode));
    j["seed"] = opt.seed;
    j["budget"] = opt.budget;
    return j;
}

inline json search_record_json(const SearchRecord& rec) {
    json j;
    j["n"] = rec.n;
    j["r"] = rec.r;
    json blocks = json::array();
    for (const ElementSet& b : rec.blocks) blocks.push_back(set_json(b));
    j["blocks"] = std::move(blocks);
    j["independent_count"] = rec.independent_count;
    j["hyperplane_total"] = rec.hyperplane_total;
    j["bound"] = fraction_string(rec.bound_value);
    j["problem2_witness"] = rec.problem2_witness ? set_json(*rec.problem2_witness) : json(nullptr);
    j["seed"] = rec.seed;
    j["generation_mode"] = rec.generation_mode;
    j["not_orientable"] = rec.not_orientable;
    j["ratio_bound_norm"] = fraction_string(rec.ratio_bound_norm);
    j["ratio_cubic"] = fraction_string(rec.ratio_cubic);
    return j;
}

}  // namespace pav
