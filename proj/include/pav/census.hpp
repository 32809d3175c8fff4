#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pav/matroid.hpp"
#include "pav/subsets.hpp"

namespace pav {

/// Three-way classification of a hyperplane H of a rank-r matroid:
///   independent - |H| = r-1 (simple for every element)
///   simple      - some e in H leaves a flat H\{e}, but |H| > r-1
///   multiple    - neither
enum class HyperplaneClass { independent, simple, multiple };

inline std::string_view class_name(HyperplaneClass c) {
    switch (c) {
        case HyperplaneClass::independent: return "independent";
        case HyperplaneClass::simple: return "simple";
        case HyperplaneClass::multiple: return "multiple";
    }
    return "?";
}

struct HyperplaneRecord {
    ElementSet elements;
    int size = 0;
    HyperplaneClass classification = HyperplaneClass::multiple;
};

/// counts.simple includes the independent hyperplanes (an independent
/// hyperplane is simple for every removal), so simple + multiple = total and
/// independent <= simple.
struct CensusCounts {
    std::int64_t hyperplanes = 0;
    std::int64_t independent = 0;
    std::int64_t simple = 0;
    std::int64_t multiple = 0;
};

struct SubsetProfile {
    ElementSet subset;
    std::int64_t simple_count = 0;
    std::int64_t multiple_count = 0;
};

struct CensusReport {
    std::string matroid_name;
    int n = 0;
    int r = 0;
    std::vector<HyperplaneRecord> hyperplanes;  // lex-sorted
    CensusCounts counts;
    std::optional<std::vector<SubsetProfile>> per_subset_profiles;
};

/// All hyperplanes (rank-(r-1) flats), lex-sorted. Needs r >= 1.
inline std::vector<ElementSet> hyperplanes(const Matroid& m, int workers = 1) {
    return m.hyperplane_flats(workers);
}

inline HyperplaneClass classify(const Matroid& m, const ElementSet& h) {
    ElementSet inside = ElementSet::from_bits(m.ground_size(), h.bits());
    if (m.rank_of(inside) != m.rank() - 1 || !m.is_flat(inside))
        fail(errc::not_a_hyperplane, inside.to_string() + " is not a hyperplane");
    if (inside.size() == m.rank() - 1) return HyperplaneClass::independent;
    for (int e : inside)
        if (m.is_flat(inside.without(e))) return HyperplaneClass::simple;
    return HyperplaneClass::multiple;
}

inline std::pair<std::int64_t, std::int64_t> subset_profile(const Matroid& m, const ElementSet& s) {
    ElementSet inside = ElementSet::from_bits(m.ground_size(), s.bits());
    if (inside.size() != m.rank() - 2)
        fail(errc::wrong_subset_size, "subset profiles are over (r-2)-subsets; " + inside.to_string() +
                                          " has " + std::to_string(inside.size()) + " elements");
    std::int64_t simple = 0, multiple = 0;
    for (const ElementSet& h : hyperplanes(m)) {
        if (!inside.subset_of(h)) continue;
        if (classify(m, h) == HyperplaneClass::multiple)
            ++multiple;
        else
            ++simple;
    }
    return {simple, multiple};
}

inline CensusReport census(const Matroid& m, int workers = 1, bool with_profiles = false) {
    CensusReport report;
    report.matroid_name = m.name();
    report.n = m.ground_size();
    report.r = m.rank();

    for (const ElementSet& h : hyperplanes(m, workers)) {
        HyperplaneRecord rec{h, h.size(), classify(m, h)};
        report.counts.hyperplanes += 1;
        switch (rec.classification) {
            case HyperplaneClass::independent:
                report.counts.independent += 1;
                report.counts.simple += 1;
                break;
            case HyperplaneClass::simple:
                report.counts.simple += 1;
                break;
            case HyperplaneClass::multiple:
                report.counts.multiple += 1;
                break;
        }
        report.hyperplanes.push_back(std::move(rec));
    }

    if (with_profiles && m.rank() >= 2) {
        std::vector<SubsetProfile> profiles;
        for_each_subset(m.ground_size(), m.rank() - 2, [&](const ElementSet& s) {
            std::int64_t simple = 0, multiple = 0;
            for (const HyperplaneRecord& rec : report.hyperplanes) {
                if (!s.subset_of(rec.elements)) continue;
                if (rec.classification == HyperplaneClass::multiple)
                    ++multiple;
                else
                    ++simple;
            }
            profiles.push_back(SubsetProfile{s, simple, multiple});
        });
        report.per_subset_profiles = std::move(profiles);
    }
    return report;
}

}  // namespace pav
