#include <immintrin.h>

#include "gwalsh/kernels.hpp"

namespace gwalsh::kernels {

// Two interleaved complex doubles per __m256d lane pair. The accumulation
// order over j2 matches stage_scalar; per-element arithmetic is the same
// mul/add sequence std::complex uses, so the two backends agree to rounding.
void stage_avx2(const cplx* kernel, std::size_t n, std::size_t block,
                std::size_t outer, const cplx* in, cplx* out) {
    if (block < 2) {
        stage_scalar(kernel, n, block, outer, in, out);
        return;
    }
    const std::size_t super = block * n;
    const std::size_t vec_end = block & ~std::size_t{1};
    for (std::size_t i3 = 0; i3 < outer; ++i3) {
        const double* in3 = reinterpret_cast<const double*>(in + i3 * super);
        double* out3 = reinterpret_cast<double*>(out + i3 * super);
        for (std::size_t i2 = 0; i2 < n; ++i2) {
            const cplx* row = kernel + i2 * n;
            double* dst = out3 + 2 * i2 * block;
            for (std::size_t i1 = 0; i1 < vec_end; i1 += 2) {
                __m256d acc = _mm256_setzero_pd();
                for (std::size_t j2 = 0; j2 < n; ++j2) {
                    const __m256d v = _mm256_loadu_pd(in3 + 2 * (i1 + j2 * block));
                    const __m256d ar = _mm256_set1_pd(row[j2].real());
                    const __m256d ai = _mm256_set1_pd(row[j2].imag());
                    // (re*ar - im*ai, im*ar + re*ai)
                    const __m256d t1 = _mm256_mul_pd(v, ar);
                    const __m256d swapped = _mm256_permute_pd(v, 0x5);
                    const __m256d t2 = _mm256_mul_pd(swapped, ai);
                    acc = _mm256_add_pd(acc, _mm256_addsub_pd(t1, t2));
                }
                _mm256_storeu_pd(dst + 2 * i1, acc);
            }
            for (std::size_t i1 = vec_end; i1 < block; ++i1) {
                cplx acc = 0.0;
                const cplx* cin3 = in + i3 * super;
                for (std::size_t j2 = 0; j2 < n; ++j2)
                    acc += row[j2] * cin3[i1 + j2 * block];
                (out + i3 * super)[i1 + i2 * block] = acc;
            }
        }
    }
}

}  // namespace gwalsh::kernels
