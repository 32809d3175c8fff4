#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pav/census.hpp"
#include "pav/linalg.hpp"
#include "pav/matroid.hpp"
#include "pav/rational.hpp"

namespace pav {

enum class PointMode { affine, linear };

/// Finite point (or vector) configuration with exact rational coordinates.
/// In affine mode rank computations prepend a homogenizing 1-coordinate.
struct PointConfiguration {
    std::vector<std::vector<Rational>> points;
    int dimension = 0;
    PointMode mode = PointMode::affine;
};

namespace detail {

inline std::vector<Rational> config_row(const PointConfiguration& cfg, std::size_t idx) {
    std::vector<Rational> row;
    row.reserve(cfg.points[idx].size() + 1);
    if (cfg.mode == PointMode::affine) row.push_back(1);
    for (const Rational& x : cfg.points[idx]) row.push_back(x);
    return row;
}

inline int config_rank(const PointConfiguration& cfg, const ElementSet& s) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(s.size()));
    for (int e : s) rows.push_back(config_row(cfg, static_cast<std::size_t>(e - 1)));
    return rational_matrix_rank(rows);
}

}  // namespace detail

/// Matroid of a point configuration: rank of a subset is the rank of the
/// corresponding coordinate submatrix, computed fraction-free, so the result
/// is exact. Circuits are recovered as the minimal dependent subsets (their
/// size is at most rank+1).
inline Matroid from_points(const PointConfiguration& cfg, std::string name = "") {
    if (cfg.points.empty()) fail(errc::parameter_out_of_range, "a configuration needs at least one point");
    for (const auto& p : cfg.points)
        if (static_cast<int>(p.size()) != cfg.dimension)
            fail(errc::dimension_mismatch,
                 "point with " + std::to_string(p.size()) + " coordinates in dimension " +
                     std::to_string(cfg.dimension));

    const int m = static_cast<int>(cfg.points.size());
    ElementSet::full_set(m);  // enforce the n <= 64 limit
    const int r = detail::config_rank(cfg, ElementSet::full_set(m));

    std::uint64_t work = 0;
    for (int k = 1; k <= r + 1; ++k) work += subset_count(m, k);
    if (work > 2'000'000)
        fail(errc::parameter_out_of_range, "circuit recovery over " + std::to_string(work) +
                                               " subsets is not supported");

    std::vector<ElementSet> circuits;
    for (int k = 1; k <= r + 1 && k <= m; ++k) {
        for_each_subset(m, k, [&](const ElementSet& s) {
            for (const ElementSet& c : circuits)
                if (c.subset_of(s)) return;  // not minimal
            if (detail::config_rank(cfg, s) < s.size()) circuits.push_back(s);
        });
    }
    return Matroid::from_circuits(m, std::move(circuits), std::move(name));
}

/// The general-position-plus-apex family: n-1 points on the rational moment
/// curve t -> (t, t^2, ..., t^(d-1)) laid in the hyperplane x_d = 0, plus the
/// apex (0,...,0,1). Rank d+1, paving, exactly one multiple hyperplane (the
/// base points) and C(n-1, d-1) independent ones.
inline Matroid apex(int d, int n) {
    if (d < 2) fail(errc::parameter_out_of_range, "apex family needs dimension d >= 2");
    if (n < d + 2) fail(errc::parameter_out_of_range, "apex family needs n >= d+2");

    PointConfiguration cfg;
    cfg.dimension = d;
    cfg.mode = PointMode::affine;
    for (int t = 1; t <= n - 1; ++t) {
        std::vector<Rational> p;
        Rational power = 1;
        for (int j = 1; j <= d - 1; ++j) {
            power *= t;
            p.push_back(power);
        }
        p.push_back(0);
        cfg.points.push_back(std::move(p));
    }
    std::vector<Rational> tip(static_cast<std::size_t>(d), Rational(0));
    tip.back() = 1;
    cfg.points.push_back(std::move(tip));

    Matroid out = from_points(cfg, "apex(" + std::to_string(d) + "," + std::to_string(n) + ")");
    assert(out.rank() == d + 1);
    return out;
}

struct CatalogEntry {
    std::string name;
    Matroid matroid;
    std::string provenance;
    std::optional<CensusCounts> expected_census;
};

namespace detail {

inline Matroid make_ag32() {
    // cube labeling: 4=(0,0,0) 1=(0,0,1) 2=(1,0,1) 3=(1,0,0)
    //                8=(0,1,0) 5=(0,1,1) 6=(1,1,1) 7=(1,1,0)
    const int n = 8;
    std::vector<ElementSet> planes = {
        // faces
        ElementSet::of(n, {1, 2, 3, 4}), ElementSet::of(n, {5, 6, 7, 8}),
        ElementSet::of(n, {1, 2, 5, 6}), ElementSet::of(n, {3, 4, 7, 8}),
        ElementSet::of(n, {1, 4, 5, 8}), ElementSet::of(n, {2, 3, 6, 7}),
        // diagonal planes
        ElementSet::of(n, {1, 2, 7, 8}), ElementSet::of(n, {3, 4, 5, 6}),
        ElementSet::of(n, {1, 3, 5, 7}), ElementSet::of(n, {2, 4, 6, 8}),
        ElementSet::of(n, {1, 4, 6, 7}), ElementSet::of(n, {2, 3, 5, 8}),
        // twisted planes
        ElementSet::of(n, {1, 3, 6, 8}), ElementSet::of(n, {2, 4, 5, 7})};
    return Matroid::from_paving(n, 4, std::move(planes), "ag32");
}

inline Matroid make_ag32_prime() {
    // the 13 planes that survive relaxing {2 4 5 7}; listed literally so the
    // relaxation relationship stays an actual regression check
    const int n = 8;
    std::vector<ElementSet> planes = {
        ElementSet::of(n, {1, 2, 3, 4}), ElementSet::of(n, {5, 6, 7, 8}),
        ElementSet::of(n, {1, 2, 5, 6}), ElementSet::of(n, {3, 4, 7, 8}),
        ElementSet::of(n, {1, 4, 5, 8}), ElementSet::of(n, {2, 3, 6, 7}),
        ElementSet::of(n, {1, 2, 7, 8}), ElementSet::of(n, {3, 4, 5, 6}),
        ElementSet::of(n, {1, 3, 5, 7}), ElementSet::of(n, {2, 4, 6, 8}),
        ElementSet::of(n, {1, 4, 6, 7}), ElementSet::of(n, {2, 3, 5, 8}),
        ElementSet::of(n, {1, 3, 6, 8})};
    return Matroid::from_paving(n, 4, std::move(planes), "ag32_prime");
}

inline Matroid make_hansen() {
    PointConfiguration cfg;
    cfg.dimension = 3;
    cfg.mode = PointMode::affine;
    // first three points on one line, last three on a skew line
    cfg.points = {{0, 0, 0},           {0, -1, 0},          {0, Rational(-1, 2), 0},
                  {0, 0, -1},          {Rational(-1, 2), 0, -1}, {-1, 0, -1}};
    return from_points(cfg, "hansen");
}

inline Matroid make_kelly_moser() {
    // seven lines of a complete quadrilateral with its three diagonals,
    // as dual homogeneous coordinates (Ax + By + C = 0  ->  (A, B, C)):
    //   1: x = 0       2: y = 0       3: x + y = 1    4: x - y = 2
    //   5: x + 3y = 0  6: x + 2y = 2  7: 2x - y = 2
    // concurrences (triple points): {1,2,5} {1,3,6} {1,4,7} {2,3,7} {2,4,6}
    // {3,4,5}; the diagonals 5,6,7 cross pairwise in simple points.
    PointConfiguration cfg;
    cfg.dimension = 3;
    cfg.mode = PointMode::linear;
    cfg.points = {{1, 0, 0}, {0, 1, 0}, {1, 1, -1}, {1, -1, -2}, {1, 3, 0}, {1, 2, -2}, {2, -1, -2}};
    return from_points(cfg, "kelly_moser");
}

inline Matroid make_k4() {
    // vertices A,B,C,D; edges 1=AB 2=AC 3=AD 4=BC 5=BD 6=CD
    const int n = 6;
    std::vector<ElementSet> circuits = {
        // triangles
        ElementSet::of(n, {1, 2, 4}), ElementSet::of(n, {1, 3, 5}),
        ElementSet::of(n, {2, 3, 6}), ElementSet::of(n, {4, 5, 6}),
        // 4-cycles
        ElementSet::of(n, {1, 3, 4, 6}), ElementSet::of(n, {1, 2, 5, 6}),
        ElementSet::of(n, {2, 3, 4, 5})};
    return Matroid::from_circuits(n, std::move(circuits), "k4");
}

inline std::optional<std::pair<int, int>> parse_two_ints(const std::string& name, const std::string& head) {
    if (name.size() < head.size() + 4 || name.compare(0, head.size(), head) != 0) return std::nullopt;
    if (name[head.size()] != '(' || name.back() != ')') return std::nullopt;
    std::string inner = name.substr(head.size() + 1, name.size() - head.size() - 2);
    std::size_t comma = inner.find(',');
    if (comma == std::string::npos) return std::nullopt;
    try {
        std::size_t used = 0;
        int a = std::stoi(inner.substr(0, comma), &used);
        if (used != comma) return std::nullopt;
        std::string second = inner.substr(comma + 1);
        int b = std::stoi(second, &used);
        if (used != second.size()) return std::nullopt;
        return std::make_pair(a, b);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace detail

inline std::vector<std::string> catalog_names() {
    return {"ag32", "ag32_prime", "hansen", "k4", "kelly_moser"};
}

/// Named reference matroids. Beyond the fixed entries, the two families
/// "uniform(N,R)" and "apex(D,N)" are addressable by name.
inline CatalogEntry get(const std::string& name) {
    if (name == "ag32")
        return CatalogEntry{name, detail::make_ag32(),
                            "binary affine cube AG(3,2): all fourteen 4-point planes of F_2^3 under the "
                            "cube labeling",
                            CensusCounts{14, 0, 0, 14}};
    if (name == "ag32_prime")
        return CatalogEntry{name, detail::make_ag32_prime(),
                            "unique relaxation of AG(3,2): the twisted plane {2 4 5 7} becomes a basis and "
                            "13 four-point planes remain",
                            CensusCounts{17, 4, 4, 13}};
    if (name == "hansen")
        return CatalogEntry{name, detail::make_hansen(),
                            "Hansen (1965) configuration: six points, three on each of two skew lines in "
                            "3-space",
                            CensusCounts{6, 0, 6, 0}};
    if (name == "k4")
        return CatalogEntry{name, detail::make_k4(),
                            "graphic matroid of the complete graph K4 on edge labels 1=AB 2=AC 3=AD 4=BC "
                            "5=BD 6=CD",
                            CensusCounts{7, 3, 3, 4}};
    if (name == "kelly_moser")
        return CatalogEntry{name, detail::make_kelly_moser(),
                            "Kelly-Moser configuration: complete quadrilateral of 4 general-position lines "
                            "plus its 3 diagonals, as the rank-3 matroid of the 7 lines",
                            CensusCounts{9, 3, 3, 6}};
    if (auto nr = detail::parse_two_ints(name, "uniform")) {
        auto [n, r] = *nr;
        Matroid m = Matroid::uniform(n, r, name);
        std::optional<CensusCounts> expected;
        if (r >= 1) {
            auto c = static_cast<std::int64_t>(subset_count(n, r - 1));
            expected = CensusCounts{c, c, c, 0};
        }
        return CatalogEntry{name, std::move(m), "uniform matroid: every r-subset is a basis", expected};
    }
    if (auto dn = detail::parse_two_ints(name, "apex")) {
        auto [d, n] = *dn;
        Matroid m = apex(d, n);
        auto c = static_cast<std::int64_t>(subset_count(n - 1, d - 1));
        return CatalogEntry{name, std::move(m),
                            "n-1 points on the moment curve inside a hyperplane plus one apex point off it",
                            CensusCounts{c + 1, c, c, 1}};
    }
    fail(errc::unknown_name, "no catalog entry named '" + name + "'");
}

}  // namespace pav
