#include "fragdiff/geom/superpose.hpp"

#include <cmath>
#include <stdexcept>

#include "fragdiff/geom/kernels.hpp"
#include "fragdiff/geom/svd3.hpp"

namespace fragdiff::geom {

namespace {

double sign_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

AlignmentResult solve_from_moments(const PairMoments& mom, const double* px, const double* py,
                                   const double* pz, const double* qx, const double* qy,
                                   const double* qz, std::size_t n) {
    const double inv_n = 1.0 / static_cast<double>(n);
    const Vec3 pbar{mom.sum_p[0] * inv_n, mom.sum_p[1] * inv_n, mom.sum_p[2] * inv_n};
    const Vec3 qbar{mom.sum_q[0] * inv_n, mom.sum_q[1] * inv_n, mom.sum_q[2] * inv_n};

    // centered cross-covariance H = sum of (p - pbar)(q - qbar)^T
    Mat3 h;
    const double np[3] = {pbar.x, pbar.y, pbar.z};
    const double nq[3] = {qbar.x, qbar.y, qbar.z};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            h(r, c) = mom.cross[r * 3 + c] - static_cast<double>(n) * np[r] * nq[c];

    Mat3 u, v;
    double s[3];
    svd3(h, u, s, v);

    // proper-rotation correction: flip the weakest direction if needed
    const double d = sign_of(v.det() * u.det());
    Mat3 ut = u.transposed();
    for (int c = 0; c < 3; ++c) ut(2, c) *= d;
    const Mat3 rotation = v * ut;

    const Vec3 translation = qbar - rotation.apply(pbar);

    const double t[3] = {translation.x, translation.y, translation.z};
    const double ssd = kernels().transformed_ssd(px, py, pz, qx, qy, qz, n, rotation.m.data(), t);
    const double rmsd = std::sqrt(std::max(ssd, 0.0) * inv_n);

    return AlignmentResult{RigidTransform{rotation, translation}, rmsd};
}

}  // namespace

AlignmentResult kabsch_soa(const double* px, const double* py, const double* pz,
                           const double* qx, const double* qy, const double* qz, std::size_t n) {
    if (n < 3) throw std::domain_error("kabsch: underdetermined, need at least 3 points");
    PairMoments mom;
    kernels().pair_moments(px, py, pz, qx, qy, qz, n, mom);
    return solve_from_moments(mom, px, py, pz, qx, qy, qz, n);
}

AlignmentResult kabsch(std::span<const Vec3> p, std::span<const Vec3> q) {
    if (p.size() != q.size()) throw std::invalid_argument("kabsch: point counts differ");
    const std::size_t n = p.size();
    if (n < 3) throw std::domain_error("kabsch: underdetermined, need at least 3 points");

    std::vector<double> soa(6 * n);
    double* px = soa.data();
    double* py = px + n;
    double* pz = py + n;
    double* qx = pz + n;
    double* qy = qx + n;
    double* qz = qy + n;
    for (std::size_t i = 0; i < n; ++i) {
        px[i] = p[i].x;
        py[i] = p[i].y;
        pz[i] = p[i].z;
        qx[i] = q[i].x;
        qy[i] = q[i].y;
        qz[i] = q[i].z;
    }
    return kabsch_soa(px, py, pz, qx, qy, qz, n);
}

std::array<std::pair<std::size_t, std::size_t>, 3> bound_probes(std::size_t n) {
    const std::size_t mid = n / 2;
    return {{{0, n - 1}, {0, mid}, {mid, n - 1}}};
}

double rmsd_bound(std::span<const Vec3> p, std::span<const Vec3> q) {
    if (p.size() != q.size()) throw std::invalid_argument("rmsd_bound: point counts differ");
    const std::size_t n = p.size();
    if (n < 2) throw std::domain_error("rmsd_bound: need at least 2 points");

    double max_gap = 0.0;
    for (auto [i, j] : bound_probes(n)) {
        const double gap = std::abs(distance(p[i], p[j]) - distance(q[i], q[j]));
        if (gap > max_gap) max_gap = gap;
    }
    return max_gap / std::sqrt(2.0 * static_cast<double>(n));
}

AlignmentResult multi_segment_rmsd(std::span<const std::vector<Vec3>> query_segments,
                                   std::span<const std::vector<Vec3>> candidate_segments) {
    if (query_segments.size() != candidate_segments.size())
        throw std::invalid_argument("multi_segment_rmsd: segment counts differ");

    std::size_t total = 0;
    for (std::size_t s = 0; s < query_segments.size(); ++s) {
        if (query_segments[s].size() != candidate_segments[s].size())
            throw std::invalid_argument("multi_segment_rmsd: segment lengths differ");
        total += query_segments[s].size();
    }

    std::vector<Vec3> p, q;
    p.reserve(total);
    q.reserve(total);
    for (std::size_t s = 0; s < query_segments.size(); ++s) {
        p.insert(p.end(), query_segments[s].begin(), query_segments[s].end());
        q.insert(q.end(), candidate_segments[s].begin(), candidate_segments[s].end());
    }
    return kabsch(p, q);
}

}  // namespace fragdiff::geom
