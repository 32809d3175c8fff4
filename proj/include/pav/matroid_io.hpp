#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pav/error.hpp"
#include "pav/matroid.hpp"

namespace pav {

enum class RepKind { paving, circuits };

/// In-memory image of a .pav file. Line-oriented text, '#' starts a comment,
/// blank lines are ignored, and the header lines come in a fixed order:
///
///     name <token>        (optional)
///     elements <int>
///     rank <int>
///     rep paving|circuits
///     set { 1 2 3 }       (one line per block or circuit)
///
/// Canonical form sorts each set ascending and the set list lexicographically;
/// serialize() always emits canonical bytes.
struct MatroidFile {
    std::optional<std::string> name;
    int elements = 0;
    int rank = 0;
    RepKind rep = RepKind::paving;
    std::vector<ElementSet> sets;

    friend bool operator==(const MatroidFile& a, const MatroidFile& b) {
        return a.name == b.name && a.elements == b.elements && a.rank == b.rank && a.rep == b.rep &&
               a.sets == b.sets;
    }
};

namespace detail {

[[noreturn]] inline void syntax_fail(int line, const std::string& msg) {
    fail(errc::syntax_error, "line " + std::to_string(line) + ": " + msg);
}

inline int parse_int(const std::string& tok, int line, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) syntax_fail(line, what + " must be an integer, got '" + tok + "'");
        return v;
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        syntax_fail(line, what + " must be an integer, got '" + tok + "'");
    }
}

inline std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace detail

inline MatroidFile parse_matroid_file(const std::string& text) {
    MatroidFile file;
    bool seen_elements = false, seen_rank = false, seen_rep = false, in_sets = false;

    std::istringstream input(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(input, raw)) {
        ++line_no;
        if (std::size_t hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::vector<std::string> toks = detail::tokens_of(raw);
        if (toks.empty()) continue;
        const std::string& key = toks[0];

        if (key == "set") {
            if (!seen_rep) detail::syntax_fail(line_no, "'set' before the rep line");
            if (toks.size() < 3 || toks[1] != "{" || toks.back() != "}")
                detail::syntax_fail(line_no, "expected 'set { a b c ... }'");
            ElementSet s = ElementSet::empty_set(file.elements);
            for (std::size_t i = 2; i + 1 < toks.size(); ++i) {
                int e = detail::parse_int(toks[i], line_no, "set element");
                try {
                    s = s.with(e);  // duplicates collapse; sets are sets
                } catch (const error& err) {
                    fail(errc::semantic_error, "line " + std::to_string(line_no) + ": " + err.what());
                }
            }
            file.sets.push_back(s);
            in_sets = true;
            continue;
        }
        if (in_sets) detail::syntax_fail(line_no, "header line '" + key + "' after the first set line");

        if (key == "name") {
            if (file.name || seen_elements) detail::syntax_fail(line_no, "'name' must be the first line");
            if (toks.size() != 2) detail::syntax_fail(line_no, "expected 'name <token>'");
            file.name = toks[1];
        } else if (key == "elements") {
            if (seen_elements) detail::syntax_fail(line_no, "duplicate 'elements' line");
            if (toks.size() != 2) detail::syntax_fail(line_no, "expected 'elements <int>'");
            file.elements = detail::parse_int(toks[1], line_no, "elements");
            seen_elements = true;
        } else if (key == "rank") {
            if (!seen_elements) detail::syntax_fail(line_no, "'rank' before 'elements'");
            if (seen_rank) detail::syntax_fail(line_no, "duplicate 'rank' line");
            if (toks.size() != 2) detail::syntax_fail(line_no, "expected 'rank <int>'");
            file.rank = detail::parse_int(toks[1], line_no, "rank");
            seen_rank = true;
        } else if (key == "rep") {
            if (!seen_rank) detail::syntax_fail(line_no, "'rep' before 'rank'");
            if (seen_rep) detail::syntax_fail(line_no, "duplicate 'rep' line");
            if (toks.size() != 2 || (toks[1] != "paving" && toks[1] != "circuits"))
                detail::syntax_fail(line_no, "expected 'rep paving' or 'rep circuits'");
            file.rep = toks[1] == "paving" ? RepKind::paving : RepKind::circuits;
            seen_rep = true;
        } else {
            detail::syntax_fail(line_no, "unknown directive '" + key + "'");
        }
    }

    if (!seen_elements) fail(errc::syntax_error, "missing 'elements' line");
    if (!seen_rank) fail(errc::syntax_error, "missing 'rank' line");
    if (!seen_rep) fail(errc::syntax_error, "missing 'rep' line");

    std::sort(file.sets.begin(), file.sets.end(), LexLess{});
    return file;
}

inline std::string serialize(const MatroidFile& file) {
    std::ostringstream out;
    if (file.name) out << "name " << *file.name << "\n";
    out << "elements " << file.elements << "\n";
    out << "rank " << file.rank << "\n";
    out << "rep " << (file.rep == RepKind::paving ? "paving" : "circuits") << "\n";
    std::vector<ElementSet> sets = file.sets;
    std::sort(sets.begin(), sets.end(), LexLess{});
    for (const ElementSet& s : sets) {
        out << "set {";
        for (int e : s) out << ' ' << e;
        out << " }\n";
    }
    return out.str();
}

/// Build the matroid a file describes; representation-level validation errors
/// surface as SemanticError wrapping the underlying reason.
inline Matroid to_matroid(const MatroidFile& file) {
    try {
        std::string name = file.name.value_or("");
        if (file.rep == RepKind::paving)
            return Matroid::from_paving(file.elements, file.rank, file.sets, std::move(name));
        Matroid m = Matroid::from_circuits(file.elements, file.sets, std::move(name));
        if (m.rank() != file.rank)
            fail(errc::semantic_error, "declared rank " + std::to_string(file.rank) +
                                           " but the circuits give rank " + std::to_string(m.rank()));
        return m;
    } catch (const error& e) {
        if (e.code() == errc::semantic_error) throw;
        fail(errc::semantic_error, e.what());
    }
}

inline MatroidFile to_file(const Matroid& m) {
    MatroidFile file;
    if (!m.name().empty()) {
        std::string token = m.name();
        for (char& c : token)
            if (c == ' ' || c == '\t') c = '_';  // names serialize as single tokens
        file.name = token;
    }
    file.elements = m.ground_size();
    file.rank = m.rank();
    if (m.is_paving_rep()) {
        file.rep = RepKind::paving;
        file.sets = m.paving_blocks();
    } else {
        file.rep = RepKind::circuits;
        file.sets = m.stored_circuits();
    }
    return file;
}

}  // namespace pav
