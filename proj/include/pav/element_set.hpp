#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pav/error.hpp"

namespace pav {

/// Subset of a ground set {1..n}, n <= 64, stored as a bitmask.
/// Element e occupies bit e-1. Immutable value type; all mutators return
/// a new set. Equality is extensional (same members).
class ElementSet {
public:
    static constexpr int max_universe = 64;

    ElementSet() = default;

    static ElementSet empty_set(int universe) {
        check_universe(universe);
        return ElementSet(universe, 0);
    }

    static ElementSet full_set(int universe) {
        check_universe(universe);
        return ElementSet(universe, universe == 64 ? ~std::uint64_t{0}
                                                   : (std::uint64_t{1} << universe) - 1);
    }

    static ElementSet of(int universe, std::initializer_list<int> elems) {
        ElementSet s = empty_set(universe);
        for (int e : elems) s = s.with(e);
        return s;
    }

    static ElementSet of(int universe, const std::vector<int>& elems) {
        ElementSet s = empty_set(universe);
        for (int e : elems) s = s.with(e);
        return s;
    }

    /// Construct from a raw mask. Bits beyond the universe are rejected.
    static ElementSet from_bits(int universe, std::uint64_t bits) {
        ElementSet s = full_set(universe);
        if ((bits & ~s.bits_) != 0)
            fail(errc::element_out_of_range, "bitmask exceeds universe of size " + std::to_string(universe));
        return ElementSet(universe, bits);
    }

    int universe() const { return n_; }
    std::uint64_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }

    bool contains(int e) const {
        check_element(e);
        return (bits_ >> (e - 1)) & 1u;
    }

    ElementSet with(int e) const {
        check_element(e);
        return ElementSet(n_, bits_ | (std::uint64_t{1} << (e - 1)));
    }

    ElementSet without(int e) const {
        check_element(e);
        return ElementSet(n_, bits_ & ~(std::uint64_t{1} << (e - 1)));
    }

    bool subset_of(const ElementSet& o) const { return (bits_ & ~o.bits_) == 0; }

    ElementSet complement() const { return ElementSet(n_, full_set(n_).bits_ & ~bits_); }

    int intersection_size(const ElementSet& o) const { return std::popcount(bits_ & o.bits_); }

    /// Smallest element, or 0 when empty.
    int min_element() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

    friend ElementSet operator|(const ElementSet& a, const ElementSet& b) {
        return ElementSet(a.n_, a.bits_ | b.bits_);
    }
    friend ElementSet operator&(const ElementSet& a, const ElementSet& b) {
        return ElementSet(a.n_, a.bits_ & b.bits_);
    }
    friend ElementSet operator-(const ElementSet& a, const ElementSet& b) {
        return ElementSet(a.n_, a.bits_ & ~b.bits_);
    }

    friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const ElementSet& a, const ElementSet& b) { return a.bits_ != b.bits_; }

    /// Input iterator over members in ascending order.
    class iterator {
    public:
        explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_) + 1; }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint64_t rest_;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int e : *this) out.push_back(e);
        return out;
    }

    /// Remove element slot e from the universe, shifting larger elements
    /// down by one. The set must not contain e.
    ElementSet compact_without(int e) const {
        check_element(e);
        if (contains(e)) fail(errc::parameter_out_of_range, "compact_without: set still contains " + std::to_string(e));
        std::uint64_t below = (std::uint64_t{1} << (e - 1)) - 1;
        std::uint64_t low = bits_ & below;
        std::uint64_t high = (e >= 64) ? 0 : (bits_ >> e) << (e - 1);
        return ElementSet(n_ - 1, low | high);
    }

    /// Inverse of compact_without: re-open slot e in a universe one larger.
    /// Elements >= e shift up by one; e itself is not added.
    ElementSet expand_at(int e) const {
        if (e < 1 || e > n_ + 1)
            fail(errc::element_out_of_range, "expand_at: slot " + std::to_string(e) + " outside 1..n+1");
        std::uint64_t below = (std::uint64_t{1} << (e - 1)) - 1;
        std::uint64_t low = bits_ & below;
        std::uint64_t high = (bits_ & ~below) << 1;
        return ElementSet(n_ + 1, low | high);
    }

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (int e : *this) {
            if (!first) out += ' ';
            out += std::to_string(e);
            first = false;
        }
        out += '}';
        return out;
    }

private:
    ElementSet(int n, std::uint64_t bits) : n_(n), bits_(bits) {}

    static void check_universe(int n) {
        if (n < 0) fail(errc::parameter_out_of_range, "universe size must be nonnegative");
        if (n > max_universe)
            fail(errc::universe_too_large,
                 "ground sets are limited to " + std::to_string(max_universe) + " elements, got " + std::to_string(n));
    }

    void check_element(int e) const {
        if (e < 1 || e > n_)
            fail(errc::element_out_of_range,
                 "element " + std::to_string(e) + " outside 1.." + std::to_string(n_));
    }

    int n_ = 0;
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending element sequences, the order used
/// for every sorted list of sets in reports and files. {1 2} < {1 2 3} and
/// {1 2 3} < {1 3}; a numeric comparison of the bitmasks would differ.
inline bool lex_less(const ElementSet& a, const ElementSet& b) {
    if (a.bits() == b.bits()) return false;
    std::uint64_t diff = a.bits() ^ b.bits();
    std::uint64_t low = diff & (~diff + 1);
    if (a.bits() & low) {
        // a owns the first differing element; a is smaller unless b is a
        // strict prefix of a (b has nothing beyond the common prefix).
        return (b.bits() & ~(low | (low - 1))) != 0 ? true : false;
    }
    return (a.bits() & ~(low | (low - 1))) != 0 ? false : true;
}

struct LexLess {
    bool operator()(const ElementSet& a, const ElementSet& b) const { return lex_less(a, b); }
};

}  // namespace pav
