#pragma once

#include <cstddef>
#include <string>

#include "gwalsh/linalg.hpp"

namespace gwalsh::kernels {

// One stage of the factorized transform:
//   out[i1 + N^k*i2 + N^{k+1}*i3] = sum_{j2} kernel(i2,j2) * in[i1 + N^k*j2 + N^{k+1}*i3]
// with i1 < N^k, i2 < N, i3 < N^{p-1-k}. The j2 summation runs ascending in
// every backend so results agree with the scalar loop to within rounding.
//
// `kernel` points at the row-major N x N stage matrix, `block` = N^k,
// `outer` = N^{p-1-k}.
using stage_fn = void (*)(const cplx* kernel, std::size_t n, std::size_t block,
                          std::size_t outer, const cplx* in, cplx* out);

void stage_scalar(const cplx* kernel, std::size_t n, std::size_t block,
                  std::size_t outer, const cplx* in, cplx* out);

#ifdef GWALSH_HAVE_AVX2
void stage_avx2(const cplx* kernel, std::size_t n, std::size_t block,
                std::size_t outer, const cplx* in, cplx* out);
#endif

enum class Backend { scalar, avx2 };

/// Best backend the running CPU supports.
Backend detect_backend();
/// Currently active backend (detected at first use, or forced).
Backend active_backend();
/// Force a backend, e.g. for equivalence tests. Throws if unsupported.
void set_backend(Backend b);

std::string backend_name(Backend b);

stage_fn active_stage_fn();

}  // namespace gwalsh::kernels
