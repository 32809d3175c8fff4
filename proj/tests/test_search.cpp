#include <algorithm>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "pav/catalog.hpp"
#include "pav/search.hpp"
#include "support/oracle.hpp"

using pav::ElementSet;
using pav::GenMode;
using pav::Matroid;
using pav::SearchOptions;

namespace {

std::vector<std::vector<std::uint64_t>> family_masks(const std::vector<Matroid>& ms) {
    std::vector<std::vector<std::uint64_t>> out;
    for (const Matroid& m : ms) {
        std::vector<std::uint64_t> fam;
        for (const ElementSet& b : m.paving_blocks()) fam.push_back(b.bits());
        std::sort(fam.begin(), fam.end());
        out.push_back(std::move(fam));
    }
    return out;
}

}  // namespace

TEST_CASE("generated matroids are sparse paving") {
    for (GenMode mode : {GenMode::random, GenMode::greedy}) {
        for (const Matroid& m :
             pav::generate_sparse_paving(SearchOptions{8, 4, mode, 3, mode == GenMode::random ? 20u : 1u})) {
            CHECK(m.is_paving());
            CHECK(m.is_sparse_paving());
            const auto& blocks = m.paving_blocks();
            for (std::size_t i = 0; i < blocks.size(); ++i)
                for (std::size_t j = i + 1; j < blocks.size(); ++j)
                    CHECK(blocks[i].intersection_size(blocks[j]) <= 2);
        }
    }
}

TEST_CASE("random generation is deterministic per seed") {
    SearchOptions opt{8, 4, GenMode::random, 7, 15};
    auto a = family_masks(pav::generate_sparse_paving(opt));
    auto b = family_masks(pav::generate_sparse_paving(opt));
    CHECK(a == b);
    opt.seed = 8;
    CHECK(family_masks(pav::generate_sparse_paving(opt)) != a);
}

TEST_CASE("greedy generation is the lexicographic maximal family") {
    auto out = pav::generate_sparse_paving(SearchOptions{7, 3, GenMode::greedy, 0, 5});
    REQUIRE(out.size() == 1);  // greedy is a single deterministic family
    const auto& blocks = out[0].paving_blocks();
    REQUIRE(!blocks.empty());
    CHECK(blocks[0] == ElementSet::of(7, {1, 2, 3}));  // lex-first candidate always enters
    // no candidate can be added: the family is maximal
    pav::for_each_subset(7, 3, [&](const ElementSet& c) {
        bool conflicts = false;
        for (const ElementSet& b : blocks)
            if (c != b && c.intersection_size(b) == 2) conflicts = true;
        bool member = std::find(blocks.begin(), blocks.end(), c) != blocks.end();
        CHECK((member || conflicts));
    });
}

TEST_CASE("exhaustive enumeration matches brute force at tiny scale") {
    for (int n : {4, 5, 6}) {
        auto families =
            family_masks(pav::generate_sparse_paving(SearchOptions{n, 3, GenMode::exhaustive, 0, 4000000}));
        auto brute = oracle::brute_force_maximal_families(n, 3);
        for (auto& fam : brute) std::sort(fam.begin(), fam.end());
        std::set<std::vector<std::uint64_t>> got(families.begin(), families.end());
        std::set<std::vector<std::uint64_t>> want(brute.begin(), brute.end());
        INFO("n = " << n);
        CHECK(families.size() == brute.size());  // no duplicates either
        CHECK(got == want);
    }
    // rank 4 flavor as well
    auto families =
        family_masks(pav::generate_sparse_paving(SearchOptions{6, 4, GenMode::exhaustive, 0, 4000000}));
    auto brute = oracle::brute_force_maximal_families(6, 4);
    for (auto& fam : brute) std::sort(fam.begin(), fam.end());
    CHECK(family_masks(pav::generate_sparse_paving(SearchOptions{6, 4, GenMode::exhaustive, 0, 4000000}))
              .size() == brute.size());
    std::set<std::vector<std::uint64_t>> got(families.begin(), families.end());
    std::set<std::vector<std::uint64_t>> want(brute.begin(), brute.end());
    CHECK(got == want);
}

TEST_CASE("exhaustive mode streams lexicographically and respects budget") {
    std::vector<std::vector<ElementSet>> families;
    pav::enumerate_sparse_paving(SearchOptions{6, 3, GenMode::exhaustive, 0, 1u << 30}, [&](Matroid m) {
        families.push_back(m.paving_blocks());
        return true;
    });
    REQUIRE(families.size() > 3);
    CHECK(std::is_sorted(families.begin(), families.end(),
                         [](const std::vector<ElementSet>& a, const std::vector<ElementSet>& b) {
                             return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                                                 pav::LexLess{});
                         }));

    auto capped = pav::generate_sparse_paving(SearchOptions{6, 3, GenMode::exhaustive, 0, 3});
    REQUIRE(capped.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(capped[i].paving_blocks() == families[i]);
}

TEST_CASE("greedy at (8,4) emits the binary affine cube's plane family") {
    // the lex-least maximal sparse paving family on 8 elements at rank 4 is
    // exactly the 14 planes of AG(3,2); its census has no independent
    // hyperplane and the record is flagged below the bound
    auto out = pav::generate_sparse_paving(SearchOptions{8, 4, GenMode::greedy, 0, 1});
    REQUIRE(out.size() == 1);
    CHECK(out[0].paving_blocks() == pav::get("ag32").matroid.paving_blocks());
    pav::SearchRecord rec = pav::make_search_record(out[0], 0, GenMode::greedy);
    CHECK(rec.independent_count == 0);
    CHECK(rec.hyperplane_total == 14);
    CHECK(rec.not_orientable);
}

TEST_CASE("the fourteen cube planes form a maximal family the generator accepts") {
    Matroid ag = pav::get("ag32").matroid;
    const auto& blocks = ag.paving_blocks();
    // pairwise compatible (sparse paving) and maximal: every other 4-set of
    // an 8-set shares 3 elements with some plane
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            REQUIRE(blocks[i].intersection_size(blocks[j]) <= 2);
    pav::for_each_subset(8, 4, [&](const ElementSet& c) {
        if (std::find(blocks.begin(), blocks.end(), c) != blocks.end()) return;
        bool conflicts = false;
        for (const ElementSet& b : blocks)
            if (c.intersection_size(b) == 3) conflicts = true;
        CHECK(conflicts);
    });
    // and its census has no independent hyperplane at all
    CHECK(pav::census(ag).counts.independent == 0);
}

TEST_CASE("problem2 scans") {
    CHECK_FALSE(pav::problem2_scan(pav::get("k4").matroid).has_value());

    auto u = pav::problem2_scan(Matroid::uniform(9, 4));
    REQUIRE(u.has_value());
    CHECK(*u == ElementSet::of(9, {1, 2}));  // lexicographically first witness

    auto ag = pav::problem2_scan(pav::get("ag32_prime").matroid);
    REQUIRE(ag.has_value());
    CHECK(*ag == ElementSet::of(8, {2, 4}));  // profile (2,2); earlier pairs are (0,3)

    CHECK_THROWS_AS(pav::problem2_scan(pav::get("hansen").matroid), pav::error);
    try {
        pav::problem2_scan(pav::get("hansen").matroid);
        FAIL("expected NotPaving");
    } catch (const pav::error& e) {
        CHECK(e.code() == pav::errc::not_paving);
    }
}

TEST_CASE("search records carry reconstructible counts") {
    std::vector<pav::SearchRecord> records =
        pav::search_records(SearchOptions{8, 4, GenMode::random, 11, 10});
    REQUIRE(records.size() == 10);
    CHECK(std::is_sorted(records.begin(), records.end(),
                         [](const pav::SearchRecord& a, const pav::SearchRecord& b) {
                             return a.independent_count < b.independent_count;
                         }));
    for (const pav::SearchRecord& rec : records) {
        CHECK(rec.independent_count <= rec.hyperplane_total);
        CHECK(rec.bound_value == pav::bound(8, 4));
        CHECK(rec.seed == 11);
        CHECK(rec.generation_mode == "random");
        // the recorded blocks rebuild a matroid with the recorded census
        pav::CensusReport rep = pav::census(Matroid::from_paving(rec.n, rec.r, rec.blocks));
        CHECK(rep.counts.independent == rec.independent_count);
        CHECK(rep.counts.hyperplanes == rec.hyperplane_total);
        CHECK(rec.ratio_bound_norm == pav::Rational(rec.independent_count, 28));  // C(8,2)
        CHECK(rec.ratio_cubic == pav::Rational(rec.independent_count, 512));
        if (rec.problem2_witness) {
            auto [s, m] = pav::subset_profile(Matroid::from_paving(rec.n, rec.r, rec.blocks),
                                              *rec.problem2_witness);
            CHECK(s >= m);
        }
    }
}

TEST_CASE("records are identical for any worker count") {
    SearchOptions opt{9, 4, GenMode::random, 5, 12};
    auto one = pav::search_records(opt, 1);
    auto four = pav::search_records(opt, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].blocks == four[i].blocks);
        CHECK(one[i].independent_count == four[i].independent_count);
        CHECK(one[i].problem2_witness == four[i].problem2_witness);
    }
}

TEST_CASE("the uniform matroid is the independent-count maximum") {
    // empty block family: every 3-subset is an independent hyperplane
    pav::SearchRecord top = pav::make_search_record(Matroid::uniform(10, 4), 0, GenMode::greedy);
    CHECK(top.independent_count == 120);  // C(10,3)
    CHECK(top.hyperplane_total == 120);
    CHECK_FALSE(top.not_orientable);
    for (const auto& rec : pav::search_records(SearchOptions{10, 4, GenMode::random, 1, 8}))
        CHECK(rec.independent_count <= 120);
}

TEST_CASE("problem1 scan sweeps a range and flags sub-bound records") {
    auto records = pav::problem1_scan(8, 9, GenMode::random, 3, 5);
    REQUIRE(records.size() == 10);
    // grouped by n ascending, by count within each group
    for (std::size_t i = 1; i < records.size(); ++i) {
        CHECK(records[i - 1].n <= records[i].n);
        if (records[i - 1].n == records[i].n)
            CHECK(records[i - 1].independent_count <= records[i].independent_count);
    }
    for (const auto& rec : records)
        CHECK(rec.not_orientable ==
              (pav::bound_hypotheses_met(rec.n, rec.r) &&
               pav::Rational(rec.independent_count) < rec.bound_value));
}

TEST_CASE("generation parameter validation") {
    CHECK_THROWS_AS(pav::generate_sparse_paving(SearchOptions{8, 2, GenMode::random, 0, 1}), pav::error);
    CHECK_THROWS_AS(pav::generate_sparse_paving(SearchOptions{17, 4, GenMode::random, 0, 1}), pav::error);
    CHECK_THROWS_AS(pav::generate_sparse_paving(SearchOptions{8, 4, GenMode::random, 0, 0}), pav::error);
    try {
        pav::generate_sparse_paving(SearchOptions{9, 4, GenMode::exhaustive, 0, 1});
        FAIL("expected ExhaustiveTooLarge");
    } catch (const pav::error& e) {
        CHECK(e.code() == pav::errc::exhaustive_too_large);
    }
    // n == r: no candidate blocks; greedy emits the uniform (free) matroid
    auto free_only = pav::generate_sparse_paving(SearchOptions{4, 4, GenMode::greedy, 0, 1});
    REQUIRE(free_only.size() == 1);
    CHECK(free_only[0].paving_blocks().empty());
    // exhaustive never emits the empty family
    CHECK(pav::generate_sparse_paving(SearchOptions{4, 4, GenMode::exhaustive, 0, 10}).empty());
}
