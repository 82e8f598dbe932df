#include "fragdiff/geom/kernels.hpp"

namespace fragdiff::geom {

namespace {

void pair_moments_scalar(const double* px, const double* py, const double* pz,
                         const double* qx, const double* qy, const double* qz,
                         std::size_t n, PairMoments& out) {
    double spx = 0, spy = 0, spz = 0;
    double sqx = 0, sqy = 0, sqz = 0;
    double c00 = 0, c01 = 0, c02 = 0;
    double c10 = 0, c11 = 0, c12 = 0;
    double c20 = 0, c21 = 0, c22 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ax = px[i], ay = py[i], az = pz[i];
        const double bx = qx[i], by = qy[i], bz = qz[i];
        spx += ax; spy += ay; spz += az;
        sqx += bx; sqy += by; sqz += bz;
        c00 += ax * bx; c01 += ax * by; c02 += ax * bz;
        c10 += ay * bx; c11 += ay * by; c12 += ay * bz;
        c20 += az * bx; c21 += az * by; c22 += az * bz;
    }
    out.sum_p[0] = spx; out.sum_p[1] = spy; out.sum_p[2] = spz;
    out.sum_q[0] = sqx; out.sum_q[1] = sqy; out.sum_q[2] = sqz;
    out.cross[0] = c00; out.cross[1] = c01; out.cross[2] = c02;
    out.cross[3] = c10; out.cross[4] = c11; out.cross[5] = c12;
    out.cross[6] = c20; out.cross[7] = c21; out.cross[8] = c22;
}

double transformed_ssd_scalar(const double* px, const double* py, const double* pz,
                              const double* qx, const double* qy, const double* qz,
                              std::size_t n, const double* r, const double* t) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ax = px[i], ay = py[i], az = pz[i];
        const double ex = r[0] * ax + r[1] * ay + r[2] * az + t[0] - qx[i];
        const double ey = r[3] * ax + r[4] * ay + r[5] * az + t[1] - qy[i];
        const double ez = r[6] * ax + r[7] * ay + r[8] * az + t[2] - qz[i];
        acc += ex * ex + ey * ey + ez * ez;
    }
    return acc;
}

}  // namespace

const KernelTable kScalarKernels = {"scalar", pair_moments_scalar, transformed_ssd_scalar};

}  // namespace fragdiff::geom
