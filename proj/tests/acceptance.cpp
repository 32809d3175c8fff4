// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Everything asserted here is exact; the only tolerances are the stated
// wall-clock limits.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pav/catalog.hpp"
#include "pav/census.hpp"
#include "pav/cli.hpp"
#include "pav/matroid.hpp"
#include "pav/screen.hpp"
#include "pav/search.hpp"
#include "support/oracle.hpp"

using pav::ElementSet;
using pav::Matroid;
using pav::Rational;
namespace fs = std::filesystem;

namespace {

int failures = 0;

double run_criterion(int number, const char* label, const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" [exception: ") + e.what() + "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  criterion %2d: %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", number, label, secs,
                note.c_str());
    if (!ok) ++failures;
    return secs;
}

ElementSet es(int n, std::initializer_list<int> e) { return ElementSet::of(n, e); }

std::set<std::uint64_t> mask_set(const std::vector<ElementSet>& sets) {
    std::set<std::uint64_t> out;
    for (const ElementSet& s : sets) out.insert(s.bits());
    return out;
}

std::vector<Matroid> paving_catalog() {
    std::vector<Matroid> out;
    for (const char* name : {"ag32", "ag32_prime", "k4", "kelly_moser"})
        out.push_back(pav::get(name).matroid);
    out.push_back(pav::get("uniform(8,4)").matroid);
    out.push_back(pav::get("uniform(6,3)").matroid);
    out.push_back(pav::get("apex(3,8)").matroid);
    out.push_back(pav::get("apex(2,5)").matroid);
    return out;
}

bool criterion1() {
    Matroid ag = pav::get("ag32_prime").matroid;
    pav::CensusReport rep = pav::census(ag);
    if (rep.counts.hyperplanes != 17 || rep.counts.multiple != 13 || rep.counts.independent != 4)
        return false;

    std::vector<ElementSet> independents, multiples;
    for (const pav::HyperplaneRecord& rec : rep.hyperplanes)
        (rec.classification == pav::HyperplaneClass::multiple ? multiples : independents)
            .push_back(rec.elements);
    if (mask_set(independents) !=
        mask_set({es(8, {2, 4, 5}), es(8, {2, 4, 7}), es(8, {2, 5, 7}), es(8, {4, 5, 7})}))
        return false;
    // the 13 multiples: six faces, six diagonals, the twisted plane {1 8 3 6}
    std::vector<ElementSet> planes = {
        es(8, {1, 2, 3, 4}), es(8, {5, 6, 7, 8}), es(8, {1, 2, 5, 6}), es(8, {3, 4, 7, 8}),
        es(8, {1, 4, 5, 8}), es(8, {2, 3, 6, 7}), es(8, {1, 2, 7, 8}), es(8, {3, 4, 5, 6}),
        es(8, {1, 3, 5, 7}), es(8, {2, 4, 6, 8}), es(8, {1, 4, 6, 7}), es(8, {2, 3, 5, 8}),
        es(8, {1, 3, 6, 8})};
    if (mask_set(multiples) != mask_set(planes)) return false;

    if (pav::bound(8, 4) != Rational(112, 13)) return false;
    pav::ScreenVerdict v = pav::screen(ag);
    return v.applicable && v.verdict == pav::Verdict::not_orientable;
}

bool criterion2() {
    if (pav::bound(8, 4) != Rational(336, 39)) return false;
    if (numerator(pav::bound(8, 4)) != 112 || denominator(pav::bound(8, 4)) != 13) return false;
    for (int n = 8; n <= 30; ++n)
        if (pav::bound(n, 3) != Rational(6 * n, 13)) return false;
    return pav::verify_recurrence(8, 25);
}

bool criterion3() {
    pav::PointConfiguration cfg;
    cfg.dimension = 3;
    cfg.mode = pav::PointMode::affine;
    cfg.points = {{0, 0, 0},  {0, -1, 0},              {0, Rational(-1, 2), 0},
                  {0, 0, -1}, {Rational(-1, 2), 0, -1}, {-1, 0, -1}};
    Matroid hansen = pav::from_points(cfg, "hansen");
    if (hansen.rank() != 4 || hansen.is_paving()) return false;

    std::vector<ElementSet> three_circuits;
    for (const ElementSet& c : hansen.circuits())
        if (c.size() == 3) three_circuits.push_back(c);
    if (mask_set(three_circuits) != mask_set({es(6, {1, 2, 3}), es(6, {4, 5, 6})})) return false;

    if (pav::census(hansen).counts.independent != 0) return false;
    pav::ScreenVerdict v = pav::screen(hansen);
    return !v.applicable && v.reason_if_not == pav::ScreenReason::not_paving;
}

bool criterion4() {
    pav::CatalogEntry entry = pav::get("kelly_moser");
    if (entry.matroid.ground_size() != 7 || entry.matroid.rank() != 3) return false;
    if (pav::census(entry.matroid).counts.independent != 3) return false;  // 3n/7 at n = 7
    pav::ScreenVerdict v = pav::screen(entry.matroid);
    return !v.applicable && v.reason_if_not == pav::ScreenReason::too_few_elements;
}

bool criterion5() {
    for (int n : {8, 9, 10}) {
        Matroid a = pav::apex(3, n);
        if (a.rank() != 4 || !a.is_paving()) return false;
        pav::CensusReport rep = pav::census(a);
        if (rep.counts.independent != static_cast<std::int64_t>(pav::subset_count(n - 1, 2))) return false;
        if (rep.counts.multiple != 1) return false;
        if (n >= 9 && pav::screen(a).verdict != pav::Verdict::inconclusive) return false;
    }
    return true;
}

bool criterion6() {
    std::vector<Matroid> pool;
    for (const Matroid& m : paving_catalog())
        if (m.is_simple()) pool.push_back(m);
    pool.push_back(pav::get("hansen").matroid);  // simple too, only not paving
    std::vector<Matroid> randoms =
        pav::generate_sparse_paving(pav::SearchOptions{10, 4, pav::GenMode::random, 2024, 50});
    if (randoms.size() != 50) return false;
    for (Matroid& m : randoms) pool.push_back(std::move(m));

    for (const Matroid& m : pool) {
        std::int64_t total = 0;
        for (int e = 1; e <= m.ground_size(); ++e) {
            if (m.is_loop(e)) return false;  // all pool members are simple
            if (!pav::verify_extension(m, e)) return false;
            total += pav::census(m.contraction(e).matroid).counts.independent;
        }
        if (total != (m.rank() - 1) * pav::census(m).counts.independent) return false;
    }
    return true;
}

bool criterion7() {
    for (const Matroid& m : paving_catalog()) {
        if (!m.is_paving()) return false;
        for (int e = 1; e <= m.ground_size(); ++e) {
            if (!m.contraction(e).matroid.is_paving()) return false;
            if (!m.deletion(e).matroid.is_paving()) return false;
        }
    }
    return true;
}

bool criterion8() {
    // exhaustively generated sparse paving families, r = 3, n <= 7: the
    // paving rank formula must match the circuit-based rank on every subset,
    // and hyperplane enumeration must match the maximal-proper-flat oracle
    for (int n = 3; n <= 7; ++n) {
        bool all_ok = true;
        long families = 0;
        pav::enumerate_sparse_paving(
            pav::SearchOptions{n, 3, pav::GenMode::exhaustive, 0, UINT64_MAX}, [&](Matroid m) {
                ++families;
                std::vector<std::uint64_t> blocks;
                for (const ElementSet& b : m.paving_blocks()) blocks.push_back(b.bits());
                oracle::Tables t =
                    oracle::from_circuit_masks(n, oracle::circuits_of_blocks(n, 3, blocks));
                const std::uint64_t size = std::uint64_t{1} << n;
                for (std::uint64_t mask = 0; mask < size; ++mask) {
                    if (m.rank_of(ElementSet::from_bits(n, mask)) != t.rank[mask]) {
                        all_ok = false;
                        return false;
                    }
                }
                auto lib = mask_set(pav::hyperplanes(m));
                auto ora = oracle::hyperplane_masks(t);
                if (lib != std::set<std::uint64_t>(ora.begin(), ora.end())) {
                    all_ok = false;
                    return false;
                }
                return true;
            });
        if (!all_ok || (n >= 4 && families == 0)) return false;
    }
    return true;
}

bool criterion9() {
    Matroid k4 = pav::get("k4").matroid;
    if (pav::problem2_scan(k4).has_value()) return false;
    for (int edge = 1; edge <= 6; ++edge) {
        auto [simple, multiple] = pav::subset_profile(k4, es(6, {edge}));
        if (simple != 1 || multiple != 2) return false;
    }
    return true;
}

bool criterion10() {
    auto run_search = [](const fs::path& out_path, const char* workers) {
        std::ostringstream out, err;
        std::vector<std::string> args = {"search", "--n",     "8",   "--rank",   "4",
                                         "--mode", "random",  "--seed", "7",     "--budget", "100",
                                         "--out",  out_path.string(), "--workers", workers};
        return pav::cli::run(args, out, err) == 0;
    };
    auto slurp = [](const fs::path& p) {
        std::ifstream f(p, std::ios::binary);
        std::ostringstream buf;
        buf << f.rdbuf();
        return buf.str();
    };
    fs::path base = fs::temp_directory_path();
    fs::path a = base / "pav_accept_a.jsonl", b = base / "pav_accept_b.jsonl",
             c = base / "pav_accept_c.jsonl";
    if (!run_search(a, "1") || !run_search(b, "1") || !run_search(c, "4")) return false;
    std::string bytes = slurp(a);
    bool ok = !bytes.empty() && bytes == slurp(b) && bytes == slurp(c);
    fs::remove(a);
    fs::remove(b);
    fs::remove(c);
    return ok;
}

}  // namespace

int main() {
    run_criterion(1, "AG(3,2)' census, bound 112/13, verdict not_orientable, < 1s", [] {
        auto start = std::chrono::steady_clock::now();
        if (!criterion1()) return false;
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 1.0;
    });
    run_criterion(2, "exact bound values and recurrence, zero tolerance", criterion2);
    run_criterion(3, "Hansen configuration: rank 4, not paving, 0 independent", criterion3);
    run_criterion(4, "Kelly-Moser: 3 independent, screened out by element count", criterion4);
    run_criterion(5, "apex(3,n) census C(n-1,2)+1 and inconclusive screen, < 5s", [] {
        auto start = std::chrono::steady_clock::now();
        if (!criterion5()) return false;
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 5.0;
    });
    run_criterion(6, "extension bijection and (r-1) double count, catalog + 50 random", criterion6);
    run_criterion(7, "paving closed under single-element minors across the catalog", criterion7);
    run_criterion(8, "rank and hyperplane oracle equivalence, exhaustive families n <= 7", criterion8);
    run_criterion(9, "K4: no problem-2 witness, every edge profile (1,2)", criterion9);
    run_criterion(10, "search JSONL byte-identical across runs and worker counts", criterion10);

    // performance smoke, stated limits
    double census_secs = 0;
    {
        auto start = std::chrono::steady_clock::now();
        pav::CensusReport rep = pav::census(Matroid::uniform(16, 4));
        census_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = rep.counts.hyperplanes == 560 && census_secs < 2.0;
        std::printf("%s  criterion 11a: census of U(16,4) has 560 hyperplanes in < 2s (%.2fs)\n",
                    ok ? "PASS" : "FAIL", census_secs);
        if (!ok) ++failures;
    }
    {
        auto start = std::chrono::steady_clock::now();
        long families = 0;
        pav::enumerate_sparse_paving(pav::SearchOptions{7, 3, pav::GenMode::exhaustive, 0, UINT64_MAX},
                                     [&](const Matroid&) {
                                         ++families;
                                         return true;
                                     });
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = families > 0 && secs < 60.0;
        std::printf("%s  criterion 11b: exhaustive families at n=7, r=3 in < 60s (%ld families, %.2fs)\n",
                    ok ? "PASS" : "FAIL", families, secs);
        if (!ok) ++failures;
    }

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
