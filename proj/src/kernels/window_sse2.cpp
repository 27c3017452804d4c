#include "avoid/kernels/window.hpp"

#if AVOID_ARCH_X86_64
#include <emmintrin.h>

namespace avoid::kernels {

// Packed values are <= 127, so signed byte compares are exact.
std::uint32_t window_mask_sse2(const Packed& p, unsigned begin, unsigned end, unsigned lo,
                               unsigned hi) {
    const __m128i vlo = _mm_set1_epi8(static_cast<char>(lo > 127 ? 127 : lo));
    const __m128i vhi = _mm_set1_epi8(static_cast<char>(hi > 127 ? 127 : hi));
    const auto* base = reinterpret_cast<const __m128i*>(p.bytes.data());

    const __m128i a = _mm_load_si128(base);
    const __m128i b = _mm_load_si128(base + 1);
    const __m128i in_a = _mm_and_si128(_mm_cmpgt_epi8(a, vlo), _mm_cmpgt_epi8(vhi, a));
    const __m128i in_b = _mm_and_si128(_mm_cmpgt_epi8(b, vlo), _mm_cmpgt_epi8(vhi, b));

    const auto bits = static_cast<std::uint32_t>(_mm_movemask_epi8(in_a)) |
                      (static_cast<std::uint32_t>(_mm_movemask_epi8(in_b)) << 16);
    return bits & range_bits(begin, end < p.size ? end : p.size);
}

}  // namespace avoid::kernels
#endif
