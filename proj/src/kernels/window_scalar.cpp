#include "avoid/kernels/window.hpp"

#include "avoid/error.hpp"

#include <atomic>
#include <string>

namespace avoid::kernels {

Packed pack(std::span<const int> values) {
    if (values.size() > kPackedWidth) {
        throw DomainError("cannot pack more than 32 values");
    }
    Packed out;
    out.size = static_cast<unsigned>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0 || values[i] > 126) throw DomainError("packed value out of range");
        out.bytes[i] = static_cast<std::uint8_t>(values[i]);
    }
    return out;
}

std::uint32_t window_mask_scalar(const Packed& p, unsigned begin, unsigned end, unsigned lo,
                                 unsigned hi) {
    std::uint32_t mask = 0;
    if (end > p.size) end = p.size;
    for (unsigned d = begin; d < end; ++d) {
        const unsigned v = p.bytes[d];
        if (lo < v && v < hi) mask |= std::uint32_t{1} << d;
    }
    return mask;
}

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::sse2: return "sse2";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "?";
}

Isa parse_isa(std::string_view name) {
    for (Isa isa : {Isa::scalar, Isa::sse2, Isa::avx2, Isa::neon}) {
        if (isa_name(isa) == name) return isa;
    }
    throw DomainError("unknown kernel '" + std::string(name) + "'");
}

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::scalar: return true;
#if AVOID_ARCH_X86_64
        case Isa::sse2: return true;
        case Isa::avx2: return __builtin_cpu_supports("avx2");
#else
        case Isa::sse2:
        case Isa::avx2: return false;
#endif
        case Isa::neon: return AVOID_ARCH_NEON != 0;
    }
    return false;
}

std::vector<Isa> supported_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::scalar, Isa::sse2, Isa::avx2, Isa::neon}) {
        if (isa_supported(isa)) out.push_back(isa);
    }
    return out;
}

WindowMaskFn window_mask_for(Isa isa) {
    if (!isa_supported(isa)) {
        throw DomainError("kernel '" + std::string(isa_name(isa)) + "' not supported on this CPU");
    }
    switch (isa) {
#if AVOID_ARCH_X86_64
        case Isa::sse2: return &window_mask_sse2;
        case Isa::avx2: return &window_mask_avx2;
#endif
#if AVOID_ARCH_NEON
        case Isa::neon: return &window_mask_neon;
#endif
        default: return &window_mask_scalar;
    }
}

namespace {

Isa best_isa() {
    const auto isas = supported_isas();
    Isa best = Isa::scalar;
    for (Isa isa : isas) {
        if (isa == Isa::avx2 || (isa == Isa::sse2 && best == Isa::scalar) || isa == Isa::neon) {
            best = isa;
        }
    }
    return best;
}

struct Active {
    std::atomic<Isa> isa;
    std::atomic<WindowMaskFn> fn;
    Active() : isa(best_isa()), fn(window_mask_for(isa.load())) {}
};

Active& active() {
    static Active a;
    return a;
}

}  // namespace

WindowMaskFn window_mask() { return active().fn.load(std::memory_order_relaxed); }

Isa active_isa() { return active().isa.load(std::memory_order_relaxed); }

void select_isa(Isa isa) {
    WindowMaskFn fn = window_mask_for(isa);
    active().isa.store(isa);
    active().fn.store(fn);
}

}  // namespace avoid::kernels
