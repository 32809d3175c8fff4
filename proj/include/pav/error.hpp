#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pav {

/// Machine-readable failure reasons. The CLI prints these names verbatim on
/// the error stream, so keep them stable.
enum class errc {
    element_out_of_range,
    universe_too_large,
    parameter_out_of_range,
    block_too_small,
    block_too_large,
    block_overlap,
    not_an_antichain,
    axiom_violation,
    loop_contraction,
    rank_zero,
    not_a_hyperplane,
    wrong_subset_size,
    rank_out_of_range,
    exhaustive_too_large,
    not_paving,
    unknown_name,
    dimension_mismatch,
    syntax_error,
    semantic_error,
};

inline std::string_view errc_name(errc c) {
    switch (c) {
        case errc::element_out_of_range: return "ElementOutOfRange";
        case errc::universe_too_large: return "UniverseTooLarge";
        case errc::parameter_out_of_range: return "ParameterOutOfRange";
        case errc::block_too_small: return "BlockTooSmall";
        case errc::block_too_large: return "BlockTooLarge";
        case errc::block_overlap: return "BlockOverlap";
        case errc::not_an_antichain: return "NotAnAntichain";
        case errc::axiom_violation: return "AxiomViolation";
        case errc::loop_contraction: return "LoopContraction";
        case errc::rank_zero: return "RankZero";
        case errc::not_a_hyperplane: return "NotAHyperplane";
        case errc::wrong_subset_size: return "WrongSubsetSize";
        case errc::rank_out_of_range: return "RankOutOfRange";
        case errc::exhaustive_too_large: return "ExhaustiveTooLarge";
        case errc::not_paving: return "NotPaving";
        case errc::unknown_name: return "UnknownName";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::syntax_error: return "SyntaxError";
        case errc::semantic_error: return "SemanticError";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

}  // namespace pav
