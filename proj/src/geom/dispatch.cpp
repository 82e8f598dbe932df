#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>

#include "fragdiff/common/log.hpp"
#include "fragdiff/geom/kernels.hpp"

namespace fragdiff::geom {

namespace {

bool cpu_has_avx2() {
#if defined(FRAGDIFF_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable* pick(Backend backend) {
    switch (backend) {
        case Backend::scalar:
            return &kScalarKernels;
        case Backend::avx2:
#if defined(FRAGDIFF_HAVE_AVX2)
            if (cpu_has_avx2()) return &kAvx2Kernels;
#endif
            return nullptr;
        case Backend::auto_detect:
#if defined(FRAGDIFF_HAVE_AVX2)
            if (cpu_has_avx2()) return &kAvx2Kernels;
#endif
            return &kScalarKernels;
    }
    return nullptr;
}

const KernelTable* resolve_initial() {
    if (const char* env = std::getenv("FRAGDIFF_BACKEND")) {
        std::string want(env);
        if (want == "scalar") return &kScalarKernels;
        if (want == "avx2") {
            if (const KernelTable* t = pick(Backend::avx2)) return t;
            log::warn("geom", "FRAGDIFF_BACKEND=avx2 requested but unavailable; using scalar");
            return &kScalarKernels;
        }
        if (!want.empty()) {
            log::warn("geom", "unknown FRAGDIFF_BACKEND value '" + want + "' ignored");
        }
    }
    return pick(Backend::auto_detect);
}

const KernelTable*& active_slot() {
    static const KernelTable* active = resolve_initial();
    return active;
}

}  // namespace

const KernelTable& kernels() { return *active_slot(); }

void set_backend(Backend backend) {
    const KernelTable* t = pick(backend);
    if (t == nullptr) throw std::invalid_argument("requested kernel backend is unavailable");
    active_slot() = t;
}

std::vector<std::string> available_backends() {
    std::vector<std::string> out{"scalar"};
#if defined(FRAGDIFF_HAVE_AVX2)
    if (cpu_has_avx2()) out.emplace_back("avx2");
#endif
    return out;
}

}  // namespace fragdiff::geom
