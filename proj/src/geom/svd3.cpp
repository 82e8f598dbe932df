#include "fragdiff/geom/svd3.hpp"

#include <algorithm>
#include <cmath>

namespace fragdiff::geom {

namespace {

// One Jacobi rotation zeroing a(p,q); accumulates the rotation into v.
void jacobi_rotate(Mat3& a, Mat3& v, int p, int q) {
    const double apq = a(p, q);
    if (apq == 0.0) return;

    const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const double app = a(p, p), aqq = a(q, q);
    a(p, p) = app - t * apq;
    a(q, q) = aqq + t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    const int r = 3 - p - q;  // the remaining index
    const double arp = a(r, p), arq = a(r, q);
    a(r, p) = c * arp - s * arq;
    a(p, r) = a(r, p);
    a(r, q) = s * arp + c * arq;
    a(q, r) = a(r, q);

    for (int i = 0; i < 3; ++i) {
        const double vip = v(i, p), viq = v(i, q);
        v(i, p) = c * vip - s * viq;
        v(i, q) = s * vip + c * viq;
    }
}

double off_diag_sq(const Mat3& a) {
    return a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
}

Vec3 column(const Mat3& m, int c) { return {m(0, c), m(1, c), m(2, c)}; }

void set_column(Mat3& m, int c, const Vec3& v) {
    m(0, c) = v.x;
    m(1, c) = v.y;
    m(2, c) = v.z;
}

Vec3 normalized_or(const Vec3& v, const Vec3& fallback) {
    const double n = v.norm();
    if (n < 1e-300) return fallback;
    return v * (1.0 / n);
}

// Any unit vector orthogonal to the unit vector u.
Vec3 orthogonal_unit(const Vec3& u) {
    const Vec3 axis = std::abs(u.x) <= std::abs(u.y) && std::abs(u.x) <= std::abs(u.z)
                          ? Vec3{1, 0, 0}
                          : (std::abs(u.y) <= std::abs(u.z) ? Vec3{0, 1, 0} : Vec3{0, 0, 1});
    return normalized_or(axis - u * axis.dot(u), Vec3{1, 0, 0});
}

}  // namespace

void sym_eig3(const Mat3& a_in, double w[3], Mat3& v) {
    Mat3 a = a_in;
    v = Mat3::identity();

    for (int sweep = 0; sweep < 32 && off_diag_sq(a) > 0.0; ++sweep) {
        jacobi_rotate(a, v, 0, 1);
        jacobi_rotate(a, v, 0, 2);
        jacobi_rotate(a, v, 1, 2);
    }

    w[0] = a(0, 0);
    w[1] = a(1, 1);
    w[2] = a(2, 2);

    // selection-sort eigenpairs descending
    for (int i = 0; i < 2; ++i) {
        int best = i;
        for (int j = i + 1; j < 3; ++j)
            if (w[j] > w[best]) best = j;
        if (best != i) {
            std::swap(w[i], w[best]);
            for (int r = 0; r < 3; ++r) std::swap(v(r, i), v(r, best));
        }
    }
}

void svd3(const Mat3& m, Mat3& u, double s[3], Mat3& v) {
    // Eigendecompose m^T m for V and the squared singular values.
    Mat3 b;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 3; ++k) acc += m(k, i) * m(k, j);
            b(i, j) = acc;
            b(j, i) = acc;
        }

    double w[3];
    sym_eig3(b, w, v);
    for (int i = 0; i < 3; ++i) s[i] = std::sqrt(std::max(w[i], 0.0));

    const double rank_tol = std::max(s[0] * 1e-12, 1e-300);

    if (s[0] <= 1e-300) {  // zero matrix
        u = v;
        s[0] = s[1] = s[2] = 0.0;
        return;
    }

    Vec3 u0 = normalized_or(m.apply(column(v, 0)) * (1.0 / s[0]), Vec3{1, 0, 0});

    Vec3 u1;
    if (s[1] > rank_tol) {
        u1 = m.apply(column(v, 1)) * (1.0 / s[1]);
        u1 = normalized_or(u1 - u0 * u1.dot(u0), orthogonal_unit(u0));
    } else {
        u1 = orthogonal_unit(u0);
        s[1] = 0.0;
    }

    Vec3 u2;
    if (s[2] > rank_tol) {
        u2 = m.apply(column(v, 2)) * (1.0 / s[2]);
        u2 = u2 - u0 * u2.dot(u0);
        u2 = normalized_or(u2 - u1 * u2.dot(u1), u0.cross(u1));
    } else {
        u2 = u0.cross(u1);  // right-handed completion; the sign is free here
        s[2] = 0.0;
    }

    set_column(u, 0, u0);
    set_column(u, 1, u1);
    set_column(u, 2, u2);
}

}  // namespace fragdiff::geom
