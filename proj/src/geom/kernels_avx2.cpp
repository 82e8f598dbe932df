#if defined(FRAGDIFF_HAVE_AVX2)

#include <immintrin.h>

#include "fragdiff/geom/kernels.hpp"

namespace fragdiff::geom {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

void pair_moments_avx2(const double* px, const double* py, const double* pz,
                       const double* qx, const double* qy, const double* qz,
                       std::size_t n, PairMoments& out) {
    __m256d spx = _mm256_setzero_pd(), spy = _mm256_setzero_pd(), spz = _mm256_setzero_pd();
    __m256d sqx = _mm256_setzero_pd(), sqy = _mm256_setzero_pd(), sqz = _mm256_setzero_pd();
    __m256d c00 = _mm256_setzero_pd(), c01 = _mm256_setzero_pd(), c02 = _mm256_setzero_pd();
    __m256d c10 = _mm256_setzero_pd(), c11 = _mm256_setzero_pd(), c12 = _mm256_setzero_pd();
    __m256d c20 = _mm256_setzero_pd(), c21 = _mm256_setzero_pd(), c22 = _mm256_setzero_pd();

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d ax = _mm256_loadu_pd(px + i);
        const __m256d ay = _mm256_loadu_pd(py + i);
        const __m256d az = _mm256_loadu_pd(pz + i);
        const __m256d bx = _mm256_loadu_pd(qx + i);
        const __m256d by = _mm256_loadu_pd(qy + i);
        const __m256d bz = _mm256_loadu_pd(qz + i);

        spx = _mm256_add_pd(spx, ax);
        spy = _mm256_add_pd(spy, ay);
        spz = _mm256_add_pd(spz, az);
        sqx = _mm256_add_pd(sqx, bx);
        sqy = _mm256_add_pd(sqy, by);
        sqz = _mm256_add_pd(sqz, bz);

        c00 = _mm256_fmadd_pd(ax, bx, c00);
        c01 = _mm256_fmadd_pd(ax, by, c01);
        c02 = _mm256_fmadd_pd(ax, bz, c02);
        c10 = _mm256_fmadd_pd(ay, bx, c10);
        c11 = _mm256_fmadd_pd(ay, by, c11);
        c12 = _mm256_fmadd_pd(ay, bz, c12);
        c20 = _mm256_fmadd_pd(az, bx, c20);
        c21 = _mm256_fmadd_pd(az, by, c21);
        c22 = _mm256_fmadd_pd(az, bz, c22);
    }

    out.sum_p[0] = hsum(spx); out.sum_p[1] = hsum(spy); out.sum_p[2] = hsum(spz);
    out.sum_q[0] = hsum(sqx); out.sum_q[1] = hsum(sqy); out.sum_q[2] = hsum(sqz);
    out.cross[0] = hsum(c00); out.cross[1] = hsum(c01); out.cross[2] = hsum(c02);
    out.cross[3] = hsum(c10); out.cross[4] = hsum(c11); out.cross[5] = hsum(c12);
    out.cross[6] = hsum(c20); out.cross[7] = hsum(c21); out.cross[8] = hsum(c22);

    for (; i < n; ++i) {
        const double ax = px[i], ay = py[i], az = pz[i];
        const double bx = qx[i], by = qy[i], bz = qz[i];
        out.sum_p[0] += ax; out.sum_p[1] += ay; out.sum_p[2] += az;
        out.sum_q[0] += bx; out.sum_q[1] += by; out.sum_q[2] += bz;
        out.cross[0] += ax * bx; out.cross[1] += ax * by; out.cross[2] += ax * bz;
        out.cross[3] += ay * bx; out.cross[4] += ay * by; out.cross[5] += ay * bz;
        out.cross[6] += az * bx; out.cross[7] += az * by; out.cross[8] += az * bz;
    }
}

double transformed_ssd_avx2(const double* px, const double* py, const double* pz,
                            const double* qx, const double* qy, const double* qz,
                            std::size_t n, const double* r, const double* t) {
    const __m256d r0 = _mm256_set1_pd(r[0]), r1 = _mm256_set1_pd(r[1]), r2 = _mm256_set1_pd(r[2]);
    const __m256d r3 = _mm256_set1_pd(r[3]), r4 = _mm256_set1_pd(r[4]), r5 = _mm256_set1_pd(r[5]);
    const __m256d r6 = _mm256_set1_pd(r[6]), r7 = _mm256_set1_pd(r[7]), r8 = _mm256_set1_pd(r[8]);
    const __m256d t0 = _mm256_set1_pd(t[0]), t1 = _mm256_set1_pd(t[1]), t2 = _mm256_set1_pd(t[2]);

    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d ax = _mm256_loadu_pd(px + i);
        const __m256d ay = _mm256_loadu_pd(py + i);
        const __m256d az = _mm256_loadu_pd(pz + i);

        __m256d ex = _mm256_fmadd_pd(r0, ax, _mm256_fmadd_pd(r1, ay, _mm256_fmadd_pd(r2, az, t0)));
        __m256d ey = _mm256_fmadd_pd(r3, ax, _mm256_fmadd_pd(r4, ay, _mm256_fmadd_pd(r5, az, t1)));
        __m256d ez = _mm256_fmadd_pd(r6, ax, _mm256_fmadd_pd(r7, ay, _mm256_fmadd_pd(r8, az, t2)));
        ex = _mm256_sub_pd(ex, _mm256_loadu_pd(qx + i));
        ey = _mm256_sub_pd(ey, _mm256_loadu_pd(qy + i));
        ez = _mm256_sub_pd(ez, _mm256_loadu_pd(qz + i));

        acc = _mm256_fmadd_pd(ex, ex, acc);
        acc = _mm256_fmadd_pd(ey, ey, acc);
        acc = _mm256_fmadd_pd(ez, ez, acc);
    }

    double total = hsum(acc);
    for (; i < n; ++i) {
        const double ax = px[i], ay = py[i], az = pz[i];
        const double ex = r[0] * ax + r[1] * ay + r[2] * az + t[0] - qx[i];
        const double ey = r[3] * ax + r[4] * ay + r[5] * az + t[1] - qy[i];
        const double ez = r[6] * ax + r[7] * ay + r[8] * az + t[2] - qz[i];
        total += ex * ex + ey * ey + ez * ez;
    }
    return total;
}

}  // namespace

const KernelTable kAvx2Kernels = {"avx2", pair_moments_avx2, transformed_ssd_avx2};

}  // namespace fragdiff::geom

#endif  // FRAGDIFF_HAVE_AVX2
