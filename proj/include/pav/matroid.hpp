#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <exception>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "pav/element_set.hpp"
#include "pav/error.hpp"
#include "pav/subsets.hpp"

namespace pav {

/// Paving representation: the nontrivial hyperplanes (size >= r), pairwise
/// intersecting in at most r-2 elements. Every (r-1)-set is independent,
/// which pins the whole rank function.
struct PavingFamily {
    int r = 0;
    std::vector<ElementSet> blocks;  // lex-sorted, pairwise distinct
};

/// General representation: the list of circuits (an antichain).
struct CircuitList {
    std::vector<ElementSet> circuits;  // lex-sorted
};

/// Records how a one-element minor was compacted to ground set 1..n-1.
struct Relabeling {
    int removed = 0;
    int old_n = 0;

    int to_original(int minor_element) const {
        return minor_element < removed ? minor_element : minor_element + 1;
    }
    /// 0 when asked about the removed element itself.
    int to_minor(int original_element) const {
        if (original_element == removed) return 0;
        return original_element < removed ? original_element : original_element - 1;
    }
    /// Minor-labeled set back to original labels (removed element not added).
    ElementSet lift(const ElementSet& minor_set) const { return minor_set.expand_at(removed); }
};

struct MinorResult;

/// Immutable matroid on ground set {1..n}. All queries are pure; sharing a
/// Matroid across threads needs no synchronization.
class Matroid {
public:
    static Matroid from_paving(int n, int r, std::vector<ElementSet> blocks, std::string name = "");
    static Matroid from_circuits(int n, std::vector<ElementSet> circuits, std::string name = "");
    static Matroid uniform(int n, int r, std::string name = "");

    int ground_size() const { return n_; }
    int rank() const { return r_; }
    ElementSet ground_set() const { return ElementSet::full_set(n_); }

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    bool is_paving_rep() const { return std::holds_alternative<PavingFamily>(rep_); }
    /// Blocks of the paving representation; only valid when is_paving_rep().
    const std::vector<ElementSet>& paving_blocks() const {
        if (!is_paving_rep()) fail(errc::parameter_out_of_range, "matroid is not in paving representation");
        return std::get<PavingFamily>(rep_).blocks;
    }
    /// Stored circuits; only valid for the circuit representation.
    const std::vector<ElementSet>& stored_circuits() const {
        if (is_paving_rep()) fail(errc::parameter_out_of_range, "matroid is not in circuit representation");
        return std::get<CircuitList>(rep_).circuits;
    }

    int rank_of(const ElementSet& s) const;
    ElementSet closure(const ElementSet& s) const;
    bool independent(const ElementSet& s) const { return rank_of(s) == s.size(); }
    bool is_flat(const ElementSet& s) const;
    bool is_basis(const ElementSet& s) const { return s.size() == r_ && rank_of(s) == r_; }
    bool is_loop(int e) const { return rank_of(ElementSet::of(n_, {e})) == 0; }
    bool is_coloop(int e) const { return rank_of(ground_set().without(e)) == r_ - 1; }

    MinorResult contraction(int e) const;
    MinorResult deletion(int e) const;
    Matroid dual() const;
    /// Relax a circuit-hyperplane (a block of size exactly r) into a basis.
    Matroid relaxation(const ElementSet& circuit_hyperplane) const;

    bool is_paving() const;
    bool is_sparse_paving() const;
    bool is_simple() const;

    /// Materialize all circuits. For the paving representation that means the
    /// r-subsets of blocks plus the block-free (r+1)-sets; guarded against
    /// ground sets where that count explodes.
    std::vector<ElementSet> circuits() const;

    /// All rank-(r-1) flats, i.e. hyperplanes, as deduplicated closures of
    /// the independent (r-1)-subsets, lex-sorted. workers > 1 shards the
    /// candidate range; the merged output is identical for every worker
    /// count.
    std::vector<ElementSet> hyperplane_flats(int workers = 1) const;

    /// Exhaustive weak-elimination check of a circuit representation.
    /// from_circuits runs this automatically for n <= 12; call it explicitly
    /// for larger ground sets (slow).
    static void validate_circuit_axioms(int n, const std::vector<ElementSet>& circuits);

private:
    Matroid(int n, int r, std::string name, std::variant<PavingFamily, CircuitList> rep)
        : n_(n), r_(r), name_(std::move(name)), rep_(std::move(rep)) {}

    static int circuit_rank(const std::vector<ElementSet>& circuits, const ElementSet& s);
    static std::vector<ElementSet> minimal_sets(std::vector<ElementSet> sets);

    int n_ = 0;
    int r_ = 0;
    std::string name_;
    std::variant<PavingFamily, CircuitList> rep_;
};

struct MinorResult {
    Matroid matroid;
    Relabeling relabel;
};

// ---------------------------------------------------------------------------
// construction

inline Matroid Matroid::from_paving(int n, int r, std::vector<ElementSet> blocks, std::string name) {
    if (n < 0) fail(errc::parameter_out_of_range, "ground-set size must be nonnegative");
    if (r < 0 || r > n)
        fail(errc::parameter_out_of_range,
             "rank " + std::to_string(r) + " outside 0..n for n = " + std::to_string(n));
    ElementSet::full_set(n);  // rejects n > 64 with UniverseTooLarge

    std::vector<ElementSet> normalized;
    normalized.reserve(blocks.size());
    for (const ElementSet& b : blocks)
        normalized.push_back(ElementSet::from_bits(n, b.bits()));  // range check

    for (const ElementSet& b : normalized) {
        if (b.size() < r)
            fail(errc::block_too_small,
                 "block " + b.to_string() + " has " + std::to_string(b.size()) +
                     " elements, need at least r = " + std::to_string(r));
        if (b.size() >= n || r == 0)
            fail(errc::block_too_large,
                 "block " + b.to_string() + " cannot be a proper flat of rank r-1 (r = " +
                     std::to_string(r) + ", n = " + std::to_string(n) + ")");
    }
    for (std::size_t i = 0; i < normalized.size(); ++i)
        for (std::size_t j = i + 1; j < normalized.size(); ++j)
            if (normalized[i].intersection_size(normalized[j]) > r - 2)
                fail(errc::block_overlap, "blocks " + normalized[i].to_string() + " and " +
                                              normalized[j].to_string() + " share more than r-2 elements");

    std::sort(normalized.begin(), normalized.end(), LexLess{});
    return Matroid(n, r, std::move(name), PavingFamily{r, std::move(normalized)});
}

inline Matroid Matroid::uniform(int n, int r, std::string name) {
    return from_paving(n, r, {}, std::move(name));
}

inline Matroid Matroid::from_circuits(int n, std::vector<ElementSet> circuits, std::string name) {
    if (n < 0) fail(errc::parameter_out_of_range, "ground-set size must be nonnegative");
    ElementSet::full_set(n);

    std::vector<ElementSet> normalized;
    normalized.reserve(circuits.size());
    for (const ElementSet& c : circuits)
        normalized.push_back(ElementSet::from_bits(n, c.bits()));

    for (const ElementSet& c : normalized)
        if (c.empty()) fail(errc::axiom_violation, "the empty set cannot be a circuit");
    for (std::size_t i = 0; i < normalized.size(); ++i)
        for (std::size_t j = 0; j < normalized.size(); ++j)
            if (i != j && normalized[i].subset_of(normalized[j]))
                fail(errc::not_an_antichain, "circuit " + normalized[i].to_string() +
                                                 " is contained in circuit " + normalized[j].to_string());

    if (n <= 12) validate_circuit_axioms(n, normalized);

    std::sort(normalized.begin(), normalized.end(), LexLess{});
    int r = circuit_rank(normalized, ElementSet::full_set(n));
    return Matroid(n, r, std::move(name), CircuitList{std::move(normalized)});
}

inline void Matroid::validate_circuit_axioms(int n, const std::vector<ElementSet>& circuits) {
    if (n > 26)
        fail(errc::parameter_out_of_range, "exhaustive circuit-axiom validation needs n <= 26");
    // dep[mask] = some circuit is contained in mask (subset-sum DP).
    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<char> dep(size, 0);
    for (const ElementSet& c : circuits) dep[c.bits()] = 1;
    for (std::uint64_t mask = 1; mask < size; ++mask) {
        if (dep[mask]) continue;
        for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
            if (dep[mask ^ (rest & ~(rest - 1))]) {
                dep[mask] = 1;
                break;
            }
        }
    }
    // weak elimination: common element removed from the union leaves a
    // dependent set
    for (std::size_t i = 0; i < circuits.size(); ++i) {
        for (std::size_t j = i + 1; j < circuits.size(); ++j) {
            std::uint64_t common = circuits[i].bits() & circuits[j].bits();
            std::uint64_t both = circuits[i].bits() | circuits[j].bits();
            for (std::uint64_t rest = common; rest; rest &= rest - 1) {
                std::uint64_t e = rest & ~(rest - 1);
                if (!dep[both & ~e])
                    fail(errc::axiom_violation,
                         "weak elimination fails for circuits " + circuits[i].to_string() + " and " +
                             circuits[j].to_string());
            }
        }
    }
}

// ---------------------------------------------------------------------------
// rank / closure

inline int Matroid::circuit_rank(const std::vector<ElementSet>& circuits, const ElementSet& s) {
    // greedy works because the independence system is a matroid
    std::uint64_t picked = 0;
    int rank = 0;
    for (int e : s) {
        std::uint64_t cand = picked | (std::uint64_t{1} << (e - 1));
        bool dependent = false;
        for (const ElementSet& c : circuits) {
            if ((c.bits() & ~cand) == 0) {
                dependent = true;
                break;
            }
        }
        if (!dependent) {
            picked = cand;
            ++rank;
        }
    }
    return rank;
}

inline int Matroid::rank_of(const ElementSet& s) const {
    ElementSet inside = ElementSet::from_bits(n_, s.bits());
    if (const auto* pav = std::get_if<PavingFamily>(&rep_)) {
        int k = inside.size();
        if (k <= r_ - 1) return k;
        for (const ElementSet& b : pav->blocks)
            if (inside.subset_of(b)) return r_ - 1;
        return r_;
    }
    return circuit_rank(std::get<CircuitList>(rep_).circuits, inside);
}

inline ElementSet Matroid::closure(const ElementSet& s) const {
    ElementSet inside = ElementSet::from_bits(n_, s.bits());
    int base = rank_of(inside);
    ElementSet out = inside;
    for (int x : inside.complement())
        if (rank_of(inside.with(x)) == base) out = out.with(x);
    return out;
}

inline bool Matroid::is_flat(const ElementSet& s) const { return closure(s) == ElementSet::from_bits(n_, s.bits()); }

// ---------------------------------------------------------------------------
// minors, dual, relaxation

inline MinorResult Matroid::contraction(int e) const {
    if (is_loop(e)) fail(errc::loop_contraction, "element " + std::to_string(e) + " is a loop");
    Relabeling map{e, n_};
    std::string minor_name = name_.empty() ? "" : name_ + "/" + std::to_string(e);

    if (const auto* pav = std::get_if<PavingFamily>(&rep_)) {
        // hyperplanes of M/e are the hyperplanes of M through e, minus e
        std::vector<ElementSet> blocks;
        for (const ElementSet& b : pav->blocks)
            if (b.contains(e)) blocks.push_back(b.without(e).compact_without(e));
        std::sort(blocks.begin(), blocks.end(), LexLess{});
        return MinorResult{Matroid(n_ - 1, r_ - 1, std::move(minor_name), PavingFamily{r_ - 1, std::move(blocks)}),
                           map};
    }

    std::vector<ElementSet> traces;
    for (const ElementSet& c : std::get<CircuitList>(rep_).circuits) {
        ElementSet t = c.contains(e) ? c.without(e) : c;
        traces.push_back(t.compact_without(e));
    }
    std::vector<ElementSet> minors = minimal_sets(std::move(traces));
    return MinorResult{Matroid(n_ - 1, r_ - 1, std::move(minor_name), CircuitList{std::move(minors)}), map};
}

inline MinorResult Matroid::deletion(int e) const {
    ElementSet rest = ground_set().without(e);
    Relabeling map{e, n_};
    std::string minor_name = name_.empty() ? "" : name_ + "\\" + std::to_string(e);

    if (const auto* pav = std::get_if<PavingFamily>(&rep_)) {
        if (r_ == n_)  // free matroid: every element is a coloop
            return MinorResult{Matroid(n_ - 1, r_ - 1, std::move(minor_name), PavingFamily{r_ - 1, {}}), map};
        for (const ElementSet& b : pav->blocks) {
            if (b == rest)  // spanning block: e is a coloop, restriction is uniform
                return MinorResult{Matroid(n_ - 1, r_ - 1, std::move(minor_name), PavingFamily{r_ - 1, {}}),
                                   map};
        }
        std::vector<ElementSet> blocks;
        for (const ElementSet& b : pav->blocks) {
            if (!b.contains(e))
                blocks.push_back(b.compact_without(e));
            else if (b.size() - 1 >= r_)
                blocks.push_back(b.without(e).compact_without(e));
            // blocks shrinking to r-1 elements become independent hyperplanes
        }
        std::sort(blocks.begin(), blocks.end(), LexLess{});
        return MinorResult{Matroid(n_ - 1, r_, std::move(minor_name), PavingFamily{r_, std::move(blocks)}), map};
    }

    int new_rank = rank_of(rest);
    std::vector<ElementSet> kept;
    for (const ElementSet& c : std::get<CircuitList>(rep_).circuits)
        if (!c.contains(e)) kept.push_back(c.compact_without(e));
    return MinorResult{Matroid(n_ - 1, new_rank, std::move(minor_name), CircuitList{std::move(kept)}), map};
}

inline Matroid Matroid::dual() const {
    std::string dual_name = name_.empty() ? "" : name_ + "*";
    if (n_ == 0) return Matroid(0, 0, std::move(dual_name), CircuitList{});
    if (r_ == 0)  // all loops; the dual is free
        return Matroid(n_, n_, std::move(dual_name), CircuitList{});

    // cocircuits are exactly the complements of hyperplanes
    std::vector<ElementSet> cocircuits;
    for (const ElementSet& h : hyperplane_flats()) cocircuits.push_back(h.complement());
    std::sort(cocircuits.begin(), cocircuits.end(), LexLess{});
    assert(circuit_rank(cocircuits, ElementSet::full_set(n_)) == n_ - r_);
    return Matroid(n_, n_ - r_, std::move(dual_name), CircuitList{std::move(cocircuits)});
}

inline Matroid Matroid::relaxation(const ElementSet& circuit_hyperplane) const {
    const auto* pav = std::get_if<PavingFamily>(&rep_);
    if (!pav) fail(errc::parameter_out_of_range, "relaxation requires the paving representation");
    ElementSet target = ElementSet::from_bits(n_, circuit_hyperplane.bits());
    if (target.size() != r_)
        fail(errc::not_a_hyperplane, target.to_string() + " is not a circuit-hyperplane (size must be r)");
    std::vector<ElementSet> blocks;
    bool found = false;
    for (const ElementSet& b : pav->blocks) {
        if (b == target)
            found = true;
        else
            blocks.push_back(b);
    }
    if (!found) fail(errc::not_a_hyperplane, target.to_string() + " is not a block of this matroid");
    std::string new_name = name_.empty() ? "" : name_ + "'";
    return Matroid(n_, r_, std::move(new_name), PavingFamily{r_, std::move(blocks)});
}

inline std::vector<ElementSet> Matroid::minimal_sets(std::vector<ElementSet> sets) {
    std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return lex_less(a, b);
    });
    std::vector<ElementSet> kept;
    for (const ElementSet& s : sets) {
        bool covered = false;
        for (const ElementSet& k : kept) {
            if (k.subset_of(s)) {
                covered = true;
                break;
            }
        }
        if (!covered) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end(), LexLess{});
    return kept;
}

// ---------------------------------------------------------------------------
// predicates

inline bool Matroid::is_paving() const {
    if (is_paving_rep()) return true;
    for (const ElementSet& c : std::get<CircuitList>(rep_).circuits)
        if (c.size() != r_ && c.size() != r_ + 1) return false;
    return true;
}

inline bool Matroid::is_sparse_paving() const {
    if (!is_paving()) return false;
    if (const auto* pav = std::get_if<PavingFamily>(&rep_)) {
        // a block of size > r carries two r-subsets sharing r-1 elements
        for (const ElementSet& b : pav->blocks)
            if (b.size() != r_) return false;
        return true;
    }
    const auto& circuits = std::get<CircuitList>(rep_).circuits;
    for (std::size_t i = 0; i < circuits.size(); ++i) {
        if (circuits[i].size() != r_) continue;
        for (std::size_t j = i + 1; j < circuits.size(); ++j) {
            if (circuits[j].size() != r_) continue;
            if (circuits[i].intersection_size(circuits[j]) > r_ - 2) return false;
        }
    }
    return true;
}

inline bool Matroid::is_simple() const {
    if (is_paving_rep() && r_ >= 3) return true;  // every circuit has >= r elements
    for (int e = 1; e <= n_; ++e)
        if (is_loop(e)) return false;
    for (int a = 1; a <= n_; ++a)
        for (int b = a + 1; b <= n_; ++b)
            if (rank_of(ElementSet::of(n_, {a, b})) < 2) return false;
    return true;
}

// ---------------------------------------------------------------------------
// circuits / hyperplanes

inline std::vector<ElementSet> Matroid::circuits() const {
    if (const auto* gen = std::get_if<CircuitList>(&rep_)) return gen->circuits;
    const auto& pav = std::get<PavingFamily>(rep_);

    if (subset_count(n_, r_ + 1) > 5'000'000)
        fail(errc::parameter_out_of_range, "circuit materialization too large for n = " + std::to_string(n_) +
                                               ", r = " + std::to_string(r_));
    std::vector<ElementSet> out;
    // r-subsets of blocks (blocks overlap in <= r-2 elements, so no dupes)
    for (const ElementSet& b : pav.blocks) {
        std::vector<int> elems = b.elements();
        for_each_subset(b.size(), r_, [&](const ElementSet& pos) {
            ElementSet c = ElementSet::empty_set(n_);
            for (int i : pos) c = c.with(elems[static_cast<std::size_t>(i - 1)]);
            out.push_back(c);
        });
    }
    // block-free (r+1)-sets
    for_each_subset(n_, r_ + 1, [&](const ElementSet& s) {
        for (const ElementSet& b : pav.blocks)
            if (s.intersection_size(b) >= r_) return;
        out.push_back(s);
    });
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

inline std::vector<ElementSet> Matroid::hyperplane_flats(int workers) const {
    if (r_ < 1) fail(errc::rank_zero, "a rank-0 matroid has no hyperplanes");
    std::uint64_t candidates = subset_count(n_, r_ - 1);
    if (candidates > 2'000'000)
        fail(errc::parameter_out_of_range,
             "hyperplane enumeration over " + std::to_string(candidates) + " candidate subsets is not supported");

    std::vector<ElementSet> subsets = subsets_of_size(n_, r_ - 1);
    auto scan = [this, &subsets](std::size_t begin, std::size_t end, std::vector<ElementSet>& out) {
        for (std::size_t i = begin; i < end; ++i) {
            if (rank_of(subsets[i]) != r_ - 1) continue;  // dependent candidate
            out.push_back(closure(subsets[i]));
        }
    };

    std::vector<ElementSet> found;
    if (workers <= 1 || subsets.size() < 1024) {
        scan(0, subsets.size(), found);
    } else {
        std::size_t parts = std::min<std::size_t>(static_cast<std::size_t>(workers), subsets.size());
        std::vector<std::vector<ElementSet>> shard(parts);
        std::vector<std::exception_ptr> errors(parts);
        std::vector<std::thread> pool;
        std::size_t chunk = (subsets.size() + parts - 1) / parts;
        for (std::size_t p = 0; p < parts; ++p) {
            std::size_t begin = p * chunk;
            std::size_t end = std::min(subsets.size(), begin + chunk);
            pool.emplace_back([&, begin, end, p] {
                try {
                    scan(begin, end, shard[p]);
                } catch (...) {
                    errors[p] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const std::exception_ptr& e : errors)
            if (e) std::rethrow_exception(e);
        for (auto& s : shard) found.insert(found.end(), s.begin(), s.end());
    }

    std::sort(found.begin(), found.end(), LexLess{});
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

}  // namespace pav
