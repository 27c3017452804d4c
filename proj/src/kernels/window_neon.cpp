#include "avoid/kernels/window.hpp"

#if AVOID_ARCH_NEON
#include <arm_neon.h>

namespace avoid::kernels {

namespace {

inline std::uint32_t movemask16(uint8x16_t cmp) {
    static const std::uint8_t kWeights[16] = {1, 2, 4, 8, 16, 32, 64, 128,
                                              1, 2, 4, 8, 16, 32, 64, 128};
    const uint8x16_t weighted = vandq_u8(cmp, vld1q_u8(kWeights));
    const std::uint32_t low = vaddv_u8(vget_low_u8(weighted));
    const std::uint32_t high = vaddv_u8(vget_high_u8(weighted));
    return low | (high << 8);
}

}  // namespace

std::uint32_t window_mask_neon(const Packed& p, unsigned begin, unsigned end, unsigned lo,
                               unsigned hi) {
    const uint8x16_t vlo = vdupq_n_u8(static_cast<std::uint8_t>(lo > 255 ? 255 : lo));
    const uint8x16_t vhi = vdupq_n_u8(static_cast<std::uint8_t>(hi > 255 ? 255 : hi));
    const uint8x16_t a = vld1q_u8(p.bytes.data());
    const uint8x16_t b = vld1q_u8(p.bytes.data() + 16);
    const uint8x16_t in_a = vandq_u8(vcgtq_u8(a, vlo), vcltq_u8(a, vhi));
    const uint8x16_t in_b = vandq_u8(vcgtq_u8(b, vlo), vcltq_u8(b, vhi));
    const std::uint32_t bits = movemask16(in_a) | (movemask16(in_b) << 16);
    return bits & range_bits(begin, end < p.size ? end : p.size);
}

}  // namespace avoid::kernels
#endif
