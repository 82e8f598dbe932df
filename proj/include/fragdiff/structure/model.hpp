#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fragdiff/geom/types.hpp"

namespace fragdiff::structure {

using geom::Vec3;

// Chain-continuity sanity window for consecutive alpha carbons (Ångström).
// Violations in a query motif are logged, not rejected: cis-prolines and
// low-resolution structures fall outside the ideal 3.8 Å spacing.
inline constexpr double kMinCaStep = 2.0;
inline constexpr double kMaxCaStep = 4.5;

struct Residue {
    char chain_id = ' ';
    int seq_number = 0;
    char insertion_code = ' ';  // ' ' when absent
    char aa = 'X';              // one of kAlphabet or 'X'
    Vec3 ca_coord{};
};

struct Chain {
    char id = ' ';
    std::vector<Residue> residues;  // file order

    std::string sequence() const;
};

struct BackboneStructure {
    std::string id;
    std::vector<Chain> chains;  // file order

    const Chain* find_chain(char chain_id) const;
    std::size_t residue_count() const;
};

struct CdrSpan {
    char chain_id = ' ';
    std::size_t start_index = 0;  // 0-based into the chain's residue list
    std::size_t length = 0;       // m >= 1
};

// Ordered, possibly multi-segment query coordinates.
struct MotifQuery {
    std::vector<std::vector<Vec3>> segments;
    std::size_t total_len = 0;
};

// Build a motif from explicit segments. Validates: non-empty segments,
// total length >= 4 (shortest searchable fragment), finite coordinates.
// Consecutive-CA spacing outside [2.0, 4.5] Å only logs a warning.
MotifQuery make_motif(std::vector<std::vector<Vec3>> segments);

// Coordinates of the spans, one segment per span, in residue order.
MotifQuery extract_motif(const BackboneStructure& s, const std::vector<CdrSpan>& spans);

// The chain's one-letter sequence with the span masked out by '?'.
std::string framework_sequence(const BackboneStructure& s, const CdrSpan& span);

}  // namespace fragdiff::structure
