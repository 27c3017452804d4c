#include "avoid/kernels/window.hpp"

#if AVOID_ARCH_X86_64
#include <immintrin.h>

namespace avoid::kernels {

// Built with -mavx2; only reached through window_mask_for() after a CPUID check.
std::uint32_t window_mask_avx2(const Packed& p, unsigned begin, unsigned end, unsigned lo,
                               unsigned hi) {
    const __m256i vlo = _mm256_set1_epi8(static_cast<char>(lo > 127 ? 127 : lo));
    const __m256i vhi = _mm256_set1_epi8(static_cast<char>(hi > 127 ? 127 : hi));
    const __m256i v = _mm256_load_si256(reinterpret_cast<const __m256i*>(p.bytes.data()));
    const __m256i in = _mm256_and_si256(_mm256_cmpgt_epi8(v, vlo), _mm256_cmpgt_epi8(vhi, v));
    const auto bits = static_cast<std::uint32_t>(_mm256_movemask_epi8(in));
    return bits & range_bits(begin, end < p.size ? end : p.size);
}

}  // namespace avoid::kernels
#endif
