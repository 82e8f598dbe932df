#include "fragdiff/structure/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fragdiff/common/alphabet.hpp"
#include "fragdiff/common/log.hpp"

namespace fragdiff::structure {

std::string Chain::sequence() const {
    std::string seq;
    seq.reserve(residues.size());
    for (const Residue& r : residues) seq.push_back(r.aa);
    return seq;
}

const Chain* BackboneStructure::find_chain(char chain_id) const {
    for (const Chain& c : chains)
        if (c.id == chain_id) return &c;
    return nullptr;
}

std::size_t BackboneStructure::residue_count() const {
    std::size_t n = 0;
    for (const Chain& c : chains) n += c.residues.size();
    return n;
}

namespace {

const Chain& chain_for_span(const BackboneStructure& s, const CdrSpan& span) {
    const Chain* chain = s.find_chain(span.chain_id);
    if (chain == nullptr)
        throw std::out_of_range(std::string("no chain '") + span.chain_id + "' in structure " +
                                s.id);
    if (span.length == 0) throw std::out_of_range("span length must be >= 1");
    if (span.start_index + span.length > chain->residues.size())
        throw std::out_of_range("span [" + std::to_string(span.start_index) + ", +" +
                                std::to_string(span.length) + ") exceeds chain length " +
                                std::to_string(chain->residues.size()));
    return *chain;
}

}  // namespace

MotifQuery make_motif(std::vector<std::vector<Vec3>> segments) {
    MotifQuery q;
    q.segments = std::move(segments);
    for (const auto& seg : q.segments) {
        if (seg.empty()) throw std::invalid_argument("motif segment must be non-empty");
        q.total_len += seg.size();
        for (const Vec3& p : seg)
            if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
                throw std::invalid_argument("motif coordinates must be finite");
    }
    if (q.total_len < 4)
        throw std::invalid_argument("motif too short: total length " +
                                    std::to_string(q.total_len) + " < 4");

    for (const auto& seg : q.segments) {
        for (std::size_t i = 0; i + 1 < seg.size(); ++i) {
            const double d = geom::distance(seg[i], seg[i + 1]);
            if (d < kMinCaStep || d > kMaxCaStep) {
                log::warn("structure", "motif CA step " + std::to_string(d) +
                                           " A outside [2.0, 4.5] at segment position " +
                                           std::to_string(i));
            }
        }
    }
    return q;
}

MotifQuery extract_motif(const BackboneStructure& s, const std::vector<CdrSpan>& spans) {
    std::vector<std::vector<Vec3>> segments;
    segments.reserve(spans.size());
    for (const CdrSpan& span : spans) {
        const Chain& chain = chain_for_span(s, span);
        std::vector<Vec3> seg;
        seg.reserve(span.length);
        for (std::size_t i = 0; i < span.length; ++i)
            seg.push_back(chain.residues[span.start_index + i].ca_coord);
        segments.push_back(std::move(seg));
    }
    return make_motif(std::move(segments));
}

std::string framework_sequence(const BackboneStructure& s, const CdrSpan& span) {
    const Chain& chain = chain_for_span(s, span);
    std::string seq = chain.sequence();
    for (std::size_t i = 0; i < span.length; ++i) seq[span.start_index + i] = kMaskChar;
    return seq;
}

}  // namespace fragdiff::structure
