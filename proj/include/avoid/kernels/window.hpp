#pragma once

// Range-window mask kernels.
//
// A permutation of length n <= 32 is packed into 32 bytes (zero padded). The
// window mask has bit d set iff begin <= d < end and lo < p[d] < hi. Every
// containment query, occurrence count and beats row reduces to this kernel.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#if defined(__x86_64__) || defined(_M_X64)
#define AVOID_ARCH_X86_64 1
#else
#define AVOID_ARCH_X86_64 0
#endif

#if defined(__aarch64__) && defined(__ARM_NEON)
#define AVOID_ARCH_NEON 1
#else
#define AVOID_ARCH_NEON 0
#endif

namespace avoid::kernels {

inline constexpr unsigned kPackedWidth = 32;

struct alignas(32) Packed {
    std::array<std::uint8_t, kPackedWidth> bytes{};
    unsigned size = 0;
};

/// Requires values.size() <= kPackedWidth and 0 <= values[i] <= 126, so that
/// clamping window bounds to 127 for signed byte compares stays exact.
Packed pack(std::span<const int> values);

enum class Isa { scalar, sse2, avx2, neon };

std::string_view isa_name(Isa isa);
Isa parse_isa(std::string_view name);  // throws DomainError

using WindowMaskFn = std::uint32_t (*)(const Packed& p, unsigned begin, unsigned end,
                                       unsigned lo, unsigned hi);

std::uint32_t window_mask_scalar(const Packed& p, unsigned begin, unsigned end, unsigned lo,
                                 unsigned hi);
#if AVOID_ARCH_X86_64
std::uint32_t window_mask_sse2(const Packed& p, unsigned begin, unsigned end, unsigned lo,
                               unsigned hi);
std::uint32_t window_mask_avx2(const Packed& p, unsigned begin, unsigned end, unsigned lo,
                               unsigned hi);
#endif
#if AVOID_ARCH_NEON
std::uint32_t window_mask_neon(const Packed& p, unsigned begin, unsigned end, unsigned lo,
                               unsigned hi);
#endif

bool isa_supported(Isa isa);
std::vector<Isa> supported_isas();

/// Kernel for a specific ISA; throws DomainError if the CPU lacks it.
WindowMaskFn window_mask_for(Isa isa);

/// The process-wide kernel. Defaults to the widest supported ISA.
WindowMaskFn window_mask();
Isa active_isa();
void select_isa(Isa isa);

/// Bits [begin, end) set.
constexpr std::uint32_t range_bits(unsigned begin, unsigned end) {
    if (begin >= end) return 0;
    const std::uint32_t upto_end = end >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << end) - 1);
    const std::uint32_t below_begin = (std::uint32_t{1} << begin) - 1;
    return upto_end & ~below_begin;
}

}  // namespace avoid::kernels
