#include "gwalsh/kernels.hpp"

namespace gwalsh::kernels {

void stage_scalar(const cplx* kernel, std::size_t n, std::size_t block,
                  std::size_t outer, const cplx* in, cplx* out) {
    const std::size_t super = block * n;
    for (std::size_t i3 = 0; i3 < outer; ++i3) {
        const cplx* in3 = in + i3 * super;
        cplx* out3 = out + i3 * super;
        for (std::size_t i2 = 0; i2 < n; ++i2) {
            const cplx* row = kernel + i2 * n;
            cplx* dst = out3 + i2 * block;
            for (std::size_t i1 = 0; i1 < block; ++i1) {
                cplx acc = 0.0;
                for (std::size_t j2 = 0; j2 < n; ++j2)
                    acc += row[j2] * in3[i1 + j2 * block];
                dst[i1] = acc;
            }
        }
    }
}

Backend detect_backend() {
#ifdef GWALSH_HAVE_AVX2
    if (__builtin_cpu_supports("avx2")) return Backend::avx2;
#endif
    return Backend::scalar;
}

namespace {
Backend g_backend = detect_backend();
}

Backend active_backend() { return g_backend; }

void set_backend(Backend b) {
#ifndef GWALSH_HAVE_AVX2
    if (b == Backend::avx2) throw error("avx2 backend not compiled in");
#else
    if (b == Backend::avx2 && !__builtin_cpu_supports("avx2"))
        throw error("avx2 backend not supported on this CPU");
#endif
    g_backend = b;
}

std::string backend_name(Backend b) {
    return b == Backend::scalar ? "scalar" : "avx2";
}

stage_fn active_stage_fn() {
#ifdef GWALSH_HAVE_AVX2
    if (g_backend == Backend::avx2) return stage_avx2;
#endif
    return stage_scalar;
}

}  // namespace gwalsh::kernels
