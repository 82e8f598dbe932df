#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace fragdiff {

// The 20 canonical amino acids, in the fixed index order used everywhere
// (profiles, diffusion states, sequence encodings).
inline constexpr std::string_view kAlphabet = "ACDEFGHIKLMNPQRSTVWY";
inline constexpr int kAlphabetSize = 20;

// Mask symbol used for designed-region positions in framework sequences.
inline constexpr char kMaskChar = '?';

// One-letter code for residues outside the 20-letter alphabet.
inline constexpr char kUnknownAa = 'X';

// Index of a one-letter code in kAlphabet, or -1 if not a canonical residue.
constexpr int aa_index(char c) {
    for (int i = 0; i < kAlphabetSize; ++i) {
        if (kAlphabet[i] == c) return i;
    }
    return -1;
}

constexpr char aa_letter(int index) { return kAlphabet[static_cast<std::size_t>(index)]; }

constexpr bool is_canonical_aa(char c) { return aa_index(c) >= 0; }

// Three-letter residue name -> one-letter code; unknown names map to 'X'.
char three_to_one(std::string_view resn);

// Encode a sequence over kAlphabet as indices. Throws std::invalid_argument
// on any non-canonical letter.
std::basic_string<std::uint8_t> encode_sequence(std::string_view seq);

}  // namespace fragdiff
