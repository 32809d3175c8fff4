#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "pav/census.hpp"
#include "pav/matroid.hpp"
#include "pav/rational.hpp"
#include "pav/screen.hpp"
#include "pav/subsets.hpp"

namespace pav {

enum class GenMode { random, greedy, exhaustive };

inline std::string_view mode_name(GenMode m) {
    switch (m) {
        case GenMode::random: return "random";
        case GenMode::greedy: return "greedy";
        case GenMode::exhaustive: return "exhaustive";
    }
    return "?";
}

inline GenMode parse_mode(const std::string& s) {
    if (s == "random") return GenMode::random;
    if (s == "greedy") return GenMode::greedy;
    if (s == "exhaustive") return GenMode::exhaustive;
    fail(errc::parameter_out_of_range, "unknown generation mode '" + s + "'");
}

struct SearchOptions {
    int n = 8;
    int r = 4;
    GenMode mode = GenMode::random;
    std::uint64_t seed = 0;
    std::uint64_t budget = 1;
};

namespace detail {

/// Two-word bitset for the candidate-block graph (at most C(8,4) = 70
/// vertices in exhaustive mode).
struct VertexSet {
    std::uint64_t w0 = 0, w1 = 0;

    static VertexSet first_k(int k) {
        VertexSet s;
        if (k >= 64) {
            s.w0 = ~std::uint64_t{0};
            s.w1 = (k == 64) ? 0 : (std::uint64_t{1} << (k - 64)) - 1;
        } else {
            s.w0 = (std::uint64_t{1} << k) - 1;
        }
        return s;
    }
    void set(int i) { (i < 64 ? w0 : w1) |= std::uint64_t{1} << (i & 63); }
    void clear(int i) { (i < 64 ? w0 : w1) &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return ((i < 64 ? w0 : w1) >> (i & 63)) & 1u; }
    bool none() const { return w0 == 0 && w1 == 0; }
    int lowest() const {  // -1 when empty
        if (w0) return std::countr_zero(w0);
        if (w1) return 64 + std::countr_zero(w1);
        return -1;
    }
    bool intersects(const VertexSet& o) const { return (w0 & o.w0) || (w1 & o.w1); }
    VertexSet minus(const VertexSet& o) const { return {w0 & ~o.w0, w1 & ~o.w1}; }
    VertexSet plus(const VertexSet& o) const { return {w0 | o.w0, w1 | o.w1}; }

    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t rest = w0; rest; rest &= rest - 1) f(std::countr_zero(rest));
        for (std::uint64_t rest = w1; rest; rest &= rest - 1) f(64 + std::countr_zero(rest));
    }
};

/// Deterministic Fisher-Yates; std::shuffle's draw sequence is
/// implementation-defined, and the JSONL outputs must be reproducible
/// byte-for-byte across toolchains.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[static_cast<std::size_t>(rng() % i)]);
}

/// Candidate circuit-hyperplanes: all r-subsets except the full ground set.
inline std::vector<ElementSet> candidate_blocks(int n, int r) {
    std::vector<ElementSet> out;
    for_each_subset(n, r, [&](const ElementSet& s) {
        if (s.size() < n) out.push_back(s);
    });
    return out;
}

/// Streams every maximal stable set of the conflict graph in lexicographic
/// order (conflict = two r-sets sharing r-1 elements). DFS over the lex-lowest
/// free vertex; a skipped vertex becomes an obligation that some later chosen
/// vertex must conflict with, which both guarantees maximality and prunes
/// dead branches early.
class MaximalFamilyEnumerator {
public:
    MaximalFamilyEnumerator(const std::vector<ElementSet>& blocks, int r) : blocks_(blocks) {
        const int v = static_cast<int>(blocks.size());
        conflict_.resize(static_cast<std::size_t>(v));
        for (int i = 0; i < v; ++i)
            for (int j = i + 1; j < v; ++j)
                if (blocks_[static_cast<std::size_t>(i)].intersection_size(blocks_[static_cast<std::size_t>(j)]) >
                    r - 2) {
                    conflict_[static_cast<std::size_t>(i)].set(j);
                    conflict_[static_cast<std::size_t>(j)].set(i);
                }
    }

    /// sink gets the chosen block indices (ascending); returns false to stop.
    void run(const std::function<bool(const std::vector<int>&)>& sink) {
        sink_ = &sink;
        stopped_ = false;
        chosen_.clear();
        walk(VertexSet::first_k(static_cast<int>(blocks_.size())), VertexSet{});
    }

private:
    bool viable(const VertexSet& obligations, const VertexSet& free) const {
        bool ok = true;
        obligations.for_each([&](int o) {
            if (ok && !conflict_[static_cast<std::size_t>(o)].intersects(free)) ok = false;
        });
        return ok;
    }

    void walk(VertexSet free, VertexSet obligations) {
        if (stopped_) return;
        int v = free.lowest();
        if (v < 0) {
            if (obligations.none() && !chosen_.empty())
                if (!(*sink_)(chosen_)) stopped_ = true;
            return;
        }
        VertexSet rest = free;
        rest.clear(v);

        // include v
        const VertexSet& nbr = conflict_[static_cast<std::size_t>(v)];
        VertexSet free_in = rest.minus(nbr);
        VertexSet obl_in = obligations.minus(nbr);
        if (viable(obl_in, free_in)) {
            chosen_.push_back(v);
            walk(free_in, obl_in);
            chosen_.pop_back();
        }
        if (stopped_) return;

        // exclude v: some later pick must conflict with it
        if (nbr.intersects(rest)) {
            VertexSet obl_out = obligations;
            obl_out.set(v);
            if (viable(obl_out, rest)) walk(rest, obl_out);
        }
    }

    const std::vector<ElementSet>& blocks_;
    std::vector<VertexSet> conflict_;
    std::vector<int> chosen_;
    const std::function<bool(const std::vector<int>&)>* sink_ = nullptr;
    bool stopped_ = false;
};

}  // namespace detail

/// Streams sparse paving matroids of rank r on n elements into sink (return
/// false to stop early). Families are stable sets of the graph on r-subsets
/// where two subsets conflict iff they share r-1 elements.
///   random     - seeded shuffle of the candidate list, then greedy insertion;
///                repeated budget times with the evolving generator state
///   greedy     - the single lexicographic maximal family
///   exhaustive - every maximal nonempty family, lex order (n <= 8 only)
/// At most `budget` matroids are emitted; runs are reproducible for a fixed
/// (mode, seed, budget, n, r).
inline void enumerate_sparse_paving(const SearchOptions& opt,
                                    const std::function<bool(Matroid)>& sink) {
    if (opt.r < 3 || opt.r > opt.n || opt.n > 16)
        fail(errc::parameter_out_of_range, "generation needs 3 <= r <= n <= 16");
    if (opt.budget < 1) fail(errc::parameter_out_of_range, "budget must be at least 1");
    if (opt.mode == GenMode::exhaustive && opt.n > 8)
        fail(errc::exhaustive_too_large, "exhaustive generation is limited to n <= 8");

    std::vector<ElementSet> candidates = detail::candidate_blocks(opt.n, opt.r);

    auto greedy_insert = [&](const std::vector<ElementSet>& order) {
        std::vector<ElementSet> family;
        for (const ElementSet& c : order) {
            bool ok = true;
            for (const ElementSet& b : family)
                if (c.intersection_size(b) > opt.r - 2) {
                    ok = false;
                    break;
                }
            if (ok) family.push_back(c);
        }
        std::sort(family.begin(), family.end(), LexLess{});
        return family;
    };

    switch (opt.mode) {
        case GenMode::greedy: {
            sink(Matroid::from_paving(opt.n, opt.r, greedy_insert(candidates)));
            return;
        }
        case GenMode::random: {
            std::mt19937_64 rng(opt.seed);
            std::vector<ElementSet> order = candidates;
            for (std::uint64_t i = 0; i < opt.budget; ++i) {
                detail::deterministic_shuffle(order, rng);
                if (!sink(Matroid::from_paving(opt.n, opt.r, greedy_insert(order)))) return;
            }
            return;
        }
        case GenMode::exhaustive: {
            detail::MaximalFamilyEnumerator enumerator(candidates, opt.r);
            std::uint64_t emitted = 0;
            enumerator.run([&](const std::vector<int>& picked) {
                std::vector<ElementSet> family;
                family.reserve(picked.size());
                for (int i : picked) family.push_back(candidates[static_cast<std::size_t>(i)]);
                if (!sink(Matroid::from_paving(opt.n, opt.r, std::move(family)))) return false;
                return ++emitted < opt.budget;
            });
            return;
        }
    }
}

inline std::vector<Matroid> generate_sparse_paving(const SearchOptions& opt) {
    std::vector<Matroid> out;
    enumerate_sparse_paving(opt, [&](Matroid m) {
        out.push_back(std::move(m));
        return true;
    });
    return out;
}

/// First (r-2)-subset (lex order) lying in at least as many simple as
/// multiple hyperplanes, if any.
inline std::optional<ElementSet> problem2_scan(const Matroid& m) {
    if (!m.is_paving()) fail(errc::not_paving, "problem2 scan is defined for paving matroids");
    if (m.rank() < 3) fail(errc::parameter_out_of_range, "problem2 scan needs rank >= 3");

    CensusReport report = census(m);
    std::optional<ElementSet> witness;
    for_each_subset(m.ground_size(), m.rank() - 2, [&](const ElementSet& s) {
        std::int64_t simple = 0, multiple = 0;
        for (const HyperplaneRecord& rec : report.hyperplanes) {
            if (!s.subset_of(rec.elements)) continue;
            if (rec.classification == HyperplaneClass::multiple)
                ++multiple;
            else
                ++simple;
        }
        if (simple >= multiple) {
            witness = s;
            return false;
        }
        return true;
    });
    return witness;
}

/// One generated matroid with the quantities the open problems care about.
struct SearchRecord {
    int n = 0;
    int r = 0;
    std::vector<ElementSet> blocks;
    std::int64_t independent_count = 0;
    std::int64_t hyperplane_total = 0;
    Rational bound_value;
    std::optional<ElementSet> problem2_witness;
    std::uint64_t seed = 0;
    std::string generation_mode;
    bool not_orientable = false;       // count below bound with hypotheses met
    Rational ratio_bound_norm;         // independent_count / C(n, r-2)
    Rational ratio_cubic;              // independent_count / n^3
};

inline SearchRecord make_search_record(const Matroid& m, std::uint64_t seed, GenMode mode) {
    SearchRecord rec;
    rec.n = m.ground_size();
    rec.r = m.rank();
    rec.blocks = m.paving_blocks();
    CensusReport report = census(m);
    rec.independent_count = report.counts.independent;
    rec.hyperplane_total = report.counts.hyperplanes;
    rec.bound_value = bound(rec.n, rec.r);
    rec.problem2_witness = (rec.r >= 3) ? problem2_scan(m) : std::nullopt;
    rec.seed = seed;
    rec.generation_mode = std::string(mode_name(mode));
    rec.not_orientable = bound_hypotheses_met(rec.n, rec.r) && Rational(rec.independent_count) < rec.bound_value;
    rec.ratio_bound_norm = Rational(rec.independent_count, big_binomial(rec.n, rec.r - 2));
    rec.ratio_cubic = Rational(rec.independent_count, BigInt(rec.n) * rec.n * rec.n);
    return rec;
}

namespace detail {

/// Census work fans out across workers by matroid index; the output order is
/// the generation order, so the result is identical for every worker count.
inline std::vector<SearchRecord> records_for(const std::vector<Matroid>& generated, std::uint64_t seed,
                                             GenMode mode, int workers) {
    std::vector<SearchRecord> records(generated.size());
    if (workers <= 1 || generated.size() < 2) {
        for (std::size_t i = 0; i < generated.size(); ++i)
            records[i] = make_search_record(generated[i], seed, mode);
    } else {
        std::size_t parts = std::min<std::size_t>(static_cast<std::size_t>(workers), generated.size());
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(parts);
        for (std::size_t p = 0; p < parts; ++p) {
            pool.emplace_back([&, p] {
                try {
                    for (std::size_t i = p; i < generated.size(); i += parts)
                        records[i] = make_search_record(generated[i], seed, mode);
                } catch (...) {
                    errors[p] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const std::exception_ptr& e : errors)
            if (e) std::rethrow_exception(e);
    }
    return records;
}

inline bool record_order(const SearchRecord& a, const SearchRecord& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.independent_count != b.independent_count) return a.independent_count < b.independent_count;
    return std::lexicographical_compare(a.blocks.begin(), a.blocks.end(), b.blocks.begin(), b.blocks.end(),
                                        LexLess{});
}

}  // namespace detail

/// Generate and measure, sorted by ascending independent count within each n.
inline std::vector<SearchRecord> search_records(const SearchOptions& opt, int workers = 1) {
    std::vector<Matroid> generated = generate_sparse_paving(opt);
    std::vector<SearchRecord> records = detail::records_for(generated, opt.seed, opt.mode, workers);
    std::stable_sort(records.begin(), records.end(), detail::record_order);
    return records;
}

/// Sweep of rank-4 sparse paving matroids over a range of ground-set sizes.
inline std::vector<SearchRecord> problem1_scan(int n_lo, int n_hi, GenMode mode, std::uint64_t seed,
                                               std::uint64_t budget, int workers = 1) {
    if (n_lo > n_hi) fail(errc::parameter_out_of_range, "empty ground-set range");
    std::vector<SearchRecord> all;
    for (int n = n_lo; n <= n_hi; ++n) {
        SearchOptions opt{n, 4, mode, seed, budget};
        std::vector<SearchRecord> part = search_records(opt, workers);
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    std::stable_sort(all.begin(), all.end(), detail::record_order);
    return all;
}

}  // namespace pav
