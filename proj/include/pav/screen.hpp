#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "pav/census.hpp"
#include "pav/matroid.hpp"
#include "pav/rational.hpp"

namespace pav {

/// Lower bound on the number of independent hyperplanes of an orientable
/// paving matroid of rank r on n elements (valid for r >= 3, n >= 5+r):
///
///     f(n, r) = 12 / (13 (r-1)) * C(n, r-2)
///
/// Exact rational; f(8,4) reduces from 336/39 to 112/13.
inline Rational bound(int n, int r) {
    if (r < 3) fail(errc::rank_out_of_range, "the bound is defined for rank >= 3, got " + std::to_string(r));
    if (n < r) fail(errc::parameter_out_of_range, "need n >= r, got n = " + std::to_string(n));
    return Rational(12 * big_binomial(n, r - 2), BigInt(13) * (r - 1));
}

/// Ground-set threshold for applying the bound as a test. The rank-3 case
/// rests on the simple-point bound for pseudoline arrangements, whose unique
/// exception is the seven-line Kelly-Moser configuration, so n >= 8 is
/// required there. For rank >= 4 the threshold is n >= r+4, which admits the
/// eight-element rank-4 cube relaxation this screen exists to catch.
inline bool bound_hypotheses_met(int n, int r) {
    if (r < 3) return false;
    return r == 3 ? n >= 8 : n >= r + 4;
}

enum class ScreenReason { not_paving, rank_too_small, too_few_elements };

inline std::string_view reason_name(ScreenReason r) {
    switch (r) {
        case ScreenReason::not_paving: return "not_paving";
        case ScreenReason::rank_too_small: return "rank_too_small";
        case ScreenReason::too_few_elements: return "too_few_elements";
    }
    return "?";
}

enum class Verdict { not_orientable, inconclusive };

inline std::string_view verdict_name(Verdict v) {
    return v == Verdict::not_orientable ? "not_orientable" : "inconclusive";
}

/// Outcome of the necessary-condition test. The test can only ever rule
/// orientability out: an applicable paving matroid with fewer than f(n,r)
/// independent hyperplanes is not orientable; everything else is
/// inconclusive (equality included, since the bound says "at least").
struct ScreenVerdict {
    bool applicable = false;
    std::optional<ScreenReason> reason_if_not;
    std::optional<Rational> bound_value;  // present whenever r >= 3 and n >= r
    std::int64_t independent_count = 0;
    Verdict verdict = Verdict::inconclusive;
    std::optional<CensusReport> certificate;  // the census backing the count
};

inline ScreenVerdict screen(const Matroid& m, int workers = 1) {
    ScreenVerdict out;
    const int n = m.ground_size();
    const int r = m.rank();

    if (!m.is_paving())
        out.reason_if_not = ScreenReason::not_paving;
    else if (r < 3)
        out.reason_if_not = ScreenReason::rank_too_small;
    else if (!bound_hypotheses_met(n, r))
        out.reason_if_not = ScreenReason::too_few_elements;
    out.applicable = !out.reason_if_not.has_value();

    if (r >= 3 && n >= r) out.bound_value = bound(n, r);
    if (r >= 1) {
        out.certificate = census(m, workers);
        out.independent_count = out.certificate->counts.independent;
    }

    if (out.applicable && Rational(out.independent_count) < *out.bound_value)
        out.verdict = Verdict::not_orientable;
    else
        out.verdict = Verdict::inconclusive;
    return out;
}

/// Independent hyperplanes of a matroid, as plain sets.
inline std::vector<ElementSet> independent_hyperplanes(const Matroid& m) {
    std::vector<ElementSet> out;
    for (const ElementSet& h : m.hyperplane_flats())
        if (h.size() == m.rank() - 1) out.push_back(h);
    return out;
}

/// Checks the lifting step of the census recurrence: every independent
/// hyperplane H' of M/e extends by e to an independent hyperplane of M, and
/// H' -> H' + e is a bijection onto the independent hyperplanes of M that
/// contain e. Holds in any matroid for any non-loop e; returning false means
/// a bug, not a property of the input.
inline bool verify_extension(const Matroid& m, int e) {
    if (m.rank() < 2)
        fail(errc::parameter_out_of_range, "extension check needs rank >= 2");
    MinorResult minor = m.contraction(e);  // throws LoopContraction on loops

    std::vector<ElementSet> lifted;
    for (const ElementSet& h : independent_hyperplanes(minor.matroid)) {
        ElementSet candidate = minor.relabel.lift(h).with(e);
        // direct re-check against M, not just set comparison
        if (candidate.size() != m.rank() - 1) return false;
        if (m.rank_of(candidate) != m.rank() - 1) return false;
        if (!m.is_flat(candidate)) return false;
        lifted.push_back(candidate);
    }
    std::sort(lifted.begin(), lifted.end(), LexLess{});

    std::vector<ElementSet> through_e;
    for (const ElementSet& h : independent_hyperplanes(m))
        if (h.contains(e)) through_e.push_back(h);
    std::sort(through_e.begin(), through_e.end(), LexLess{});

    return lifted == through_e;
}

/// Double count over all single-element contractions: each independent
/// hyperplane of a simple matroid shows up in exactly r-1 of them, so
/// sum_e indep(M/e) = (r-1) * indep(M).
inline bool verify_double_count(const Matroid& m) {
    if (m.rank() < 2)
        fail(errc::parameter_out_of_range, "double-count check needs rank >= 2");
    std::int64_t total = 0;
    for (int e = 1; e <= m.ground_size(); ++e)
        total += static_cast<std::int64_t>(independent_hyperplanes(m.contraction(e).matroid).size());
    std::int64_t direct = static_cast<std::int64_t>(independent_hyperplanes(m).size());
    return total == static_cast<std::int64_t>(m.rank() - 1) * direct;
}

/// Exact check of the recurrence f(n,r) = (n/(r-1)) * f(n-1, r-1) over
/// 4 <= r <= r_max, r <= n <= n_max.
inline bool verify_recurrence(int r_max, int n_max) {
    if (r_max < 4 || n_max < r_max)
        fail(errc::parameter_out_of_range, "need r_max >= 4 and n_max >= r_max");
    for (int r = 4; r <= r_max; ++r)
        for (int n = r; n <= n_max; ++n)
            if (bound(n, r) != Rational(n, r - 1) * bound(n - 1, r - 1)) return false;
    return true;
}

}  // namespace pav
