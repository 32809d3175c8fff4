#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pav/catalog.hpp"
#include "pav/census.hpp"
#include "pav/json_report.hpp"
#include "pav/matroid.hpp"
#include "pav/matroid_io.hpp"
#include "pav/screen.hpp"
#include "pav/search.hpp"

namespace pav::cli {

/// Malformed command line (unknown flag, missing argument, ...): exit 1.
/// pav::error (bad file or parameter values): exit 2. Anything else: exit 3.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> values;
    std::set<std::string> switches;

    bool has(const std::string& flag) const { return switches.count(flag) || values.count(flag); }
    std::string value(const std::string& flag, const std::string& fallback = "") const {
        auto it = values.find(flag);
        return it == values.end() ? fallback : it->second;
    }
};

inline Args parse_args(const std::vector<std::string>& tokens, const std::set<std::string>& value_flags,
                       const std::set<std::string>& switch_flags) {
    Args args;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string& tok = tokens[i];
        if (tok.rfind("--", 0) == 0) {
            if (switch_flags.count(tok)) {
                args.switches.insert(tok);
            } else if (value_flags.count(tok)) {
                if (i + 1 >= tokens.size()) throw usage_error("flag " + tok + " needs a value");
                args.values[tok] = tokens[++i];
            } else {
                throw usage_error("unknown flag " + tok);
            }
        } else {
            args.positional.push_back(tok);
        }
    }
    return args;
}

inline std::int64_t parse_int_flag(const Args& args, const std::string& flag, std::int64_t fallback,
                                   bool required = false) {
    auto it = args.values.find(flag);
    if (it == args.values.end()) {
        if (required) throw usage_error("missing required flag " + flag);
        return fallback;
    }
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(it->second, &used);
        if (used != it->second.size()) throw usage_error("flag " + flag + " needs an integer");
        return v;
    } catch (const usage_error&) {
        throw;
    } catch (const std::exception&) {
        throw usage_error("flag " + flag + " needs an integer, got '" + it->second + "'");
    }
}

inline int parse_workers(const Args& args) {
    std::int64_t w = parse_int_flag(args, "--workers", 1);
    if (w < 1 || w > 256) throw usage_error("--workers must be in 1..256");
    return static_cast<int>(w);
}

inline Matroid load_matroid(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::semantic_error, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return to_matroid(parse_matroid_file(buf.str()));
}

inline void print_census_text(std::ostream& out, const CensusReport& report) {
    out << "matroid " << (report.matroid_name.empty() ? "(unnamed)" : report.matroid_name) << ": n="
        << report.n << " rank=" << report.r << "\n";
    out << "hyperplanes: " << report.counts.hyperplanes << " (independent " << report.counts.independent
        << ", simple " << report.counts.simple << ", multiple " << report.counts.multiple << ")\n";
    for (const HyperplaneRecord& rec : report.hyperplanes)
        out << "  " << rec.elements.to_string() << "  " << class_name(rec.classification) << "\n";
    if (report.per_subset_profiles)
        for (const SubsetProfile& p : *report.per_subset_profiles)
            out << "  profile " << p.subset.to_string() << ": simple " << p.simple_count << ", multiple "
                << p.multiple_count << "\n";
}

inline void print_screen_text(std::ostream& out, const ScreenVerdict& v, const std::string& name, int n,
                              int r) {
    out << "matroid " << (name.empty() ? "(unnamed)" : name) << ": n=" << n << " rank=" << r << "\n";
    if (v.applicable)
        out << "applicable: yes\n";
    else
        out << "applicable: no (" << reason_name(*v.reason_if_not) << ")\n";
    out << "independent hyperplanes: " << v.independent_count << "\n";
    if (v.bound_value)
        out << "bound f(" << n << "," << r << "): " << fraction_string(*v.bound_value) << " (~"
            << decimal_string(*v.bound_value) << ")\n";
    out << "verdict: " << verdict_name(v.verdict) << "\n";
}

inline const char* help_text() {
    return R"(pav - paving-matroid hyperplane census and orientability screening

Usage: pav <subcommand> [options]

Subcommands:
  census FILE [--json] [--profiles] [--workers K]
      Enumerate and classify all hyperplanes of the matroid in FILE.
  screen FILE [--json] [--workers K]
      Apply the independent-hyperplane lower bound f(n,r) as a
      non-orientability test.
  bound --n N --r R
      Print f(N,R) = 12/(13(R-1)) * C(N,R-2) exactly, plus a decimal
      approximation (display only).
  catalog list | show NAME | export NAME
      Built-in reference matroids. NAME is one of the fixed entries or
      uniform(N,R) / apex(D,N).
  search --n N --rank R [--mode random|greedy|exhaustive] [--seed S]
         [--budget B] --out PATH [--workers K]
      Generate sparse paving matroids and record their hyperplane counts
      as JSON lines (PATH '-' writes to stdout).
  verify --suite axioms|extension|recurrence|minors [--seed S]
      Run a property suite; exits 3 when any check fails.

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 internal failure.
)";
}

inline int cmd_census(const Args& args, std::ostream& out) {
    if (args.positional.size() != 1) throw usage_error("census needs exactly one FILE argument");
    Matroid m = load_matroid(args.positional[0]);
    CensusReport report = census(m, parse_workers(args), args.has("--profiles"));
    if (args.has("--json"))
        out << census_json(report).dump(2) << "\n";
    else
        print_census_text(out, report);
    return 0;
}

inline int cmd_screen(const Args& args, std::ostream& out) {
    if (args.positional.size() != 1) throw usage_error("screen needs exactly one FILE argument");
    Matroid m = load_matroid(args.positional[0]);
    ScreenVerdict v = screen(m, parse_workers(args));
    if (args.has("--json"))
        out << screen_json(v, m.name(), m.ground_size(), m.rank()).dump(2) << "\n";
    else
        print_screen_text(out, v, m.name(), m.ground_size(), m.rank());
    return 0;
}

inline int cmd_bound(const Args& args, std::ostream& out) {
    int n = static_cast<int>(parse_int_flag(args, "--n", 0, true));
    int r = static_cast<int>(parse_int_flag(args, "--r", 0, true));
    Rational f = bound(n, r);
    out << fraction_string(f) << " (~" << decimal_string(f) << ")\n";
    return 0;
}

inline int cmd_catalog(const Args& args, std::ostream& out) {
    if (args.positional.empty()) throw usage_error("catalog needs a verb: list, show NAME, export NAME");
    const std::string& verb = args.positional[0];
    if (verb == "list") {
        for (const std::string& name : catalog_names()) out << name << "\n";
        out << "uniform(N,R)\n";
        out << "apex(D,N)\n";
        return 0;
    }
    if (args.positional.size() != 2) throw usage_error("catalog " + verb + " needs a NAME");
    CatalogEntry entry = get(args.positional[1]);
    if (verb == "show") {
        out << "name: " << entry.name << "\n";
        out << "n: " << entry.matroid.ground_size() << "\n";
        out << "rank: " << entry.matroid.rank() << "\n";
        out << "provenance: " << entry.provenance << "\n";
        if (entry.matroid.rank() >= 1) {
            CensusReport report = census(entry.matroid);
            out << "census: hyperplanes " << report.counts.hyperplanes << ", independent "
                << report.counts.independent << ", simple " << report.counts.simple << ", multiple "
                << report.counts.multiple << "\n";
        }
        return 0;
    }
    if (verb == "export") {
        out << serialize(to_file(entry.matroid));
        return 0;
    }
    throw usage_error("unknown catalog verb '" + verb + "'");
}

inline int cmd_search(const Args& args, std::ostream& out) {
    SearchOptions opt;
    opt.n = static_cast<int>(parse_int_flag(args, "--n", 0, true));
    opt.r = static_cast<int>(parse_int_flag(args, "--rank", 0, true));
    opt.mode = parse_mode(args.value("--mode", "random"));
    opt.seed = static_cast<std::uint64_t>(parse_int_flag(args, "--seed", 0));
    std::int64_t budget = parse_int_flag(args, "--budget", 1);
    if (budget < 1 || budget > 1'000'000'000) throw usage_error("--budget must be in 1..1000000000");
    opt.budget = static_cast<std::uint64_t>(budget);
    int workers = parse_workers(args);
    std::string out_path = args.value("--out");
    if (out_path.empty()) throw usage_error("search needs --out PATH ('-' for stdout)");

    std::vector<SearchRecord> records = search_records(opt, workers);

    std::ofstream file_stream;
    std::ostream* sink = &out;
    if (out_path != "-") {
        file_stream.open(out_path, std::ios::binary | std::ios::trunc);
        if (!file_stream) fail(errc::semantic_error, "cannot write '" + out_path + "'");
        sink = &file_stream;
    }
    *sink << search_header_json(opt).dump() << "\n";
    for (const SearchRecord& rec : records) *sink << search_record_json(rec).dump() << "\n";
    if (out_path != "-")
        out << "wrote " << records.size() << " records to " << out_path << "\n";
    return 0;
}

// --- verify suites ---------------------------------------------------------

struct SuiteTally {
    std::int64_t passed = 0;
    std::int64_t failed = 0;

    void check(bool ok, std::ostream& out, const std::string& label) {
        if (ok) {
            ++passed;
        } else {
            ++failed;
            out << "FAIL " << label << "\n";
        }
    }
};

inline std::vector<Matroid> suite_matroids() {
    std::vector<Matroid> out;
    for (const std::string& name : catalog_names()) out.push_back(get(name).matroid);
    out.push_back(get("uniform(8,4)").matroid);
    out.push_back(get("uniform(7,3)").matroid);
    out.push_back(get("apex(3,8)").matroid);
    Matroid d = get("ag32_prime").matroid.dual();
    d.set_name("ag32_prime*");
    out.push_back(std::move(d));
    return out;
}

inline int cmd_verify(const Args& args, std::ostream& out) {
    const std::string suite = args.value("--suite");
    if (suite.empty()) throw usage_error("verify needs --suite axioms|extension|recurrence|minors");
    std::uint64_t seed = static_cast<std::uint64_t>(parse_int_flag(args, "--seed", 2024));
    SuiteTally tally;

    if (suite == "axioms") {
        std::mt19937_64 rng(seed);
        for (const Matroid& m : suite_matroids()) {
            const int n = m.ground_size();
            std::uint64_t all = ElementSet::full_set(n).bits();
            for (int trial = 0; trial < 200; ++trial) {
                ElementSet a = ElementSet::from_bits(n, rng() & all);
                ElementSet b = ElementSet::from_bits(n, rng() & all);
                int ra = m.rank_of(a), rb = m.rank_of(b);
                tally.check(0 <= ra && ra <= a.size(), out, m.name() + " rank unit on " + a.to_string());
                tally.check(m.rank_of(a | b) + m.rank_of(a & b) <= ra + rb, out,
                            m.name() + " submodularity on " + a.to_string() + "," + b.to_string());
                if (a.subset_of(b))
                    tally.check(ra <= rb, out, m.name() + " monotonicity");
                ElementSet cl = m.closure(a);
                tally.check(a.subset_of(cl), out, m.name() + " closure extensive");
                tally.check(m.closure(cl) == cl, out, m.name() + " closure idempotent");
                tally.check(cl.subset_of(m.closure(a | b)), out, m.name() + " closure monotone");
            }
        }
    } else if (suite == "extension") {
        std::vector<Matroid> pool = suite_matroids();
        for (const Matroid& m : generate_sparse_paving(SearchOptions{9, 4, GenMode::random, seed, 10}))
            pool.push_back(m);
        for (const Matroid& m : pool) {
            if (!m.is_simple() || m.rank() < 2) continue;
            for (int e = 1; e <= m.ground_size(); ++e)
                tally.check(verify_extension(m, e), out,
                            m.name() + " extension bijection at e=" + std::to_string(e));
            tally.check(verify_double_count(m), out, m.name() + " double count");
        }
    } else if (suite == "recurrence") {
        tally.check(verify_recurrence(8, 25), out, "recurrence f(n,r) = (n/(r-1)) f(n-1,r-1) up to (25,8)");
        for (int r = 3; r <= 6; ++r)
            for (int n = r; n < 30; ++n)
                tally.check(bound(n + 1, r) > bound(n, r), out,
                            "bound monotone at n=" + std::to_string(n) + ", r=" + std::to_string(r));
    } else if (suite == "minors") {
        for (const Matroid& m : suite_matroids()) {
            if (!m.is_paving()) continue;
            for (int e = 1; e <= m.ground_size(); ++e) {
                if (!m.is_loop(e))
                    tally.check(m.contraction(e).matroid.is_paving(), out,
                                m.name() + " contraction paving at e=" + std::to_string(e));
                tally.check(m.deletion(e).matroid.is_paving(), out,
                            m.name() + " deletion paving at e=" + std::to_string(e));
            }
        }
    } else {
        throw usage_error("unknown suite '" + suite + "'");
    }

    out << "suite " << suite << ": " << tally.passed << " passed, " << tally.failed << " failed\n";
    return tally.failed == 0 ? 0 : 3;
}

}  // namespace detail

/// Entry point behind main(); args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace detail;
    try {
        if (args.empty() || args[0] == "help" || args[0] == "--help" || args[0] == "-h") {
            out << help_text();
            return args.empty() ? 1 : 0;
        }
        const std::string& sub = args[0];
        std::vector<std::string> rest(args.begin() + 1, args.end());

        if (sub == "census") {
            Args a = parse_args(rest, {"--workers"}, {"--json", "--profiles"});
            return cmd_census(a, out);
        }
        if (sub == "screen") {
            Args a = parse_args(rest, {"--workers"}, {"--json"});
            return cmd_screen(a, out);
        }
        if (sub == "bound") {
            Args a = parse_args(rest, {"--n", "--r"}, {});
            return cmd_bound(a, out);
        }
        if (sub == "catalog") {
            Args a = parse_args(rest, {}, {});
            return cmd_catalog(a, out);
        }
        if (sub == "search") {
            Args a = parse_args(rest, {"--n", "--rank", "--mode", "--seed", "--budget", "--out", "--workers"}, {});
            return cmd_search(a, out);
        }
        if (sub == "verify") {
            Args a = parse_args(rest, {"--suite", "--seed"}, {});
            return cmd_verify(a, out);
        }
        throw usage_error("unknown subcommand '" + sub + "'");
    } catch (const usage_error& e) {
        err << "error: usage: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace pav::cli
