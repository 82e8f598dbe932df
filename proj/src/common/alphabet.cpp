#include "fragdiff/common/alphabet.hpp"

#include <stdexcept>
#include <unordered_map>

namespace fragdiff {

char three_to_one(std::string_view resn) {
    static const std::unordered_map<std::string_view, char> table = {
        {"ALA", 'A'}, {"CYS", 'C'}, {"ASP", 'D'}, {"GLU", 'E'}, {"PHE", 'F'},
        {"GLY", 'G'}, {"HIS", 'H'}, {"ILE", 'I'}, {"LYS", 'K'}, {"LEU", 'L'},
        {"MET", 'M'}, {"ASN", 'N'}, {"PRO", 'P'}, {"GLN", 'Q'}, {"ARG", 'R'},
        {"SER", 'S'}, {"THR", 'T'}, {"VAL", 'V'}, {"TRP", 'W'}, {"TYR", 'Y'},
        // selenomethionine is the common modified residue worth folding in
        {"MSE", 'M'},
    };
    auto it = table.find(resn);
    return it == table.end() ? kUnknownAa : it->second;
}

std::basic_string<std::uint8_t> encode_sequence(std::string_view seq) {
    std::basic_string<std::uint8_t> out;
    out.reserve(seq.size());
    for (char c : seq) {
        int idx = aa_index(c);
        if (idx < 0) {
            throw std::invalid_argument(std::string("non-canonical amino acid letter '") + c +
                                        "' in sequence");
        }
        out.push_back(static_cast<std::uint8_t>(idx));
    }
    return out;
}

}  // namespace fragdiff
