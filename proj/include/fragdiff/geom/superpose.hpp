#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "fragdiff/geom/types.hpp"

namespace fragdiff::geom {

// Optimal proper rigid superposition of p onto q (least-squares over
// rotation + translation), rmsd measured at the optimum. Requires n >= 3
// (throws std::domain_error below that); degenerate point sets still
// return a valid minimizer.
AlignmentResult kabsch(std::span<const Vec3> p, std::span<const Vec3> q);

// Same, over SoA coordinate arrays (the corpus-scan fast path).
AlignmentResult kabsch_soa(const double* px, const double* py, const double* pz,
                           const double* qx, const double* qy, const double* qz, std::size_t n);

// Probe index pairs used by the superposition lower bound: ends and middle.
std::array<std::pair<std::size_t, std::size_t>, 3> bound_probes(std::size_t n);

// Admissible lower bound on kabsch(p, q).rmsd: intra-set distances are
// rigid invariants, and at the optimum |d_p(i,j) - d_q(i,j)| <= sqrt(2 n) * rmsd,
// so the max probe-pair gap over sqrt(2n) never exceeds the true rmsd.
// Requires n >= 2.
double rmsd_bound(std::span<const Vec3> p, std::span<const Vec3> q);

// Joint superposition of multiple paired segments under one shared rigid
// transform; rmsd is over all concatenated points. Segment counts and
// lengths must match (throws std::invalid_argument otherwise).
AlignmentResult multi_segment_rmsd(std::span<const std::vector<Vec3>> query_segments,
                                   std::span<const std::vector<Vec3>> candidate_segments);

}  // namespace fragdiff::geom
