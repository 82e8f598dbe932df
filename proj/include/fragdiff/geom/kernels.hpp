#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fragdiff::geom {

// Raw first/second moments of a paired point set, accumulated in one pass
// over SoA coordinate arrays. Centering happens downstream.
struct PairMoments {
    double sum_p[3];   // sum of p
    double sum_q[3];   // sum of q
    double cross[9];   // sum of p q^T, row-major (r = p component, c = q component)
};

using PairMomentsFn = void (*)(const double* px, const double* py, const double* pz,
                               const double* qx, const double* qy, const double* qz,
                               std::size_t n, PairMoments& out);

// Sum over i of |R p_i + t - q_i|^2. R row-major.
using TransformedSsdFn = double (*)(const double* px, const double* py, const double* pz,
                                    const double* qx, const double* qy, const double* qz,
                                    std::size_t n, const double* rotation,
                                    const double* translation);

struct KernelTable {
    const char* name;
    PairMomentsFn pair_moments;
    TransformedSsdFn transformed_ssd;
};

enum class Backend { auto_detect, scalar, avx2 };

// Active kernel table. Resolved once on first use: highest-ranked backend
// the CPU supports, unless overridden by set_backend() or the
// FRAGDIFF_BACKEND environment variable (values: "scalar", "avx2").
const KernelTable& kernels();

// Override the active backend. Throws std::invalid_argument if the backend
// was not compiled in or the CPU lacks it. Not thread-safe against
// concurrent kernel use; intended for process start and tests.
void set_backend(Backend backend);

// Backends compiled into this binary and usable on this CPU.
std::vector<std::string> available_backends();

extern const KernelTable kScalarKernels;
#if defined(FRAGDIFF_HAVE_AVX2)
extern const KernelTable kAvx2Kernels;
#endif

}  // namespace fragdiff::geom
