#include "avoid/containment.hpp"

#include "avoid/kernels/window.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <vector>

namespace avoid {

namespace {

constexpr int kNoUpper = std::numeric_limits<int>::max();

// Sequences that fit in one packed register go through the SIMD kernel.
class PackedWindow {
public:
    explicit PackedWindow(std::span<const int> seq)
        : packed_(kernels::pack(seq)), mask_fn_(kernels::window_mask()) {}

    int value(unsigned d) const { return packed_.bytes[d]; }

    template <class Visit>
    bool for_each(unsigned begin, unsigned end, int lo, int hi, Visit&& visit) const {
        std::uint32_t m = mask(begin, end, lo, hi);
        while (m != 0) {
            const auto d = static_cast<unsigned>(std::countr_zero(m));
            m &= m - 1;
            if (visit(d)) return true;
        }
        return false;
    }

    std::uint64_t count(unsigned begin, unsigned end, int lo, int hi) const {
        return static_cast<std::uint64_t>(std::popcount(mask(begin, end, lo, hi)));
    }

private:
    std::uint32_t mask(unsigned begin, unsigned end, int lo, int hi) const {
        const auto ulo = static_cast<unsigned>(std::max(lo, 0));
        const auto uhi = static_cast<unsigned>(std::min(hi, 127));
        return mask_fn_(packed_, begin, end, ulo, uhi);
    }

    kernels::Packed packed_;
    kernels::WindowMaskFn mask_fn_;
};

class WideWindow {
public:
    explicit WideWindow(std::span<const int> seq) : seq_(seq) {}

    int value(unsigned d) const { return seq_[d]; }

    template <class Visit>
    bool for_each(unsigned begin, unsigned end, int lo, int hi, Visit&& visit) const {
        for (unsigned d = begin; d < end; ++d) {
            if (lo < seq_[d] && seq_[d] < hi && visit(d)) return true;
        }
        return false;
    }

    std::uint64_t count(unsigned begin, unsigned end, int lo, int hi) const {
        std::uint64_t c = 0;
        for (unsigned d = begin; d < end; ++d) c += (lo < seq_[d] && seq_[d] < hi) ? 1 : 0;
        return c;
    }

private:
    std::span<const int> seq_;
};

// Depth-first placement of pattern entries left to right. Each level only
// visits positions whose value lies strictly between the values already
// placed for the neighbouring pattern ranks, so every leaf is an occurrence.
// The deepest free level is counted with a single window query.
template <class Window>
class OccurrenceSearch {
public:
    OccurrenceSearch(const Window& window, std::span<const int> pattern, unsigned length,
                     bool fix_last, bool stop_at_first)
        : window_(window),
          pattern_(pattern),
          placed_value_(pattern.size(), 0),
          placed_(pattern.size(), false),
          stop_at_first_(stop_at_first) {
        const auto k = static_cast<unsigned>(pattern.size());
        if (fix_last) {
            placed_value_[k - 1] = window.value(length - 1);
            placed_[k - 1] = true;
            last_free_ = k - 2;
            end_ = length - 1;
        } else {
            last_free_ = k - 1;
            end_ = length;
        }
    }

    std::uint64_t run() {
        place(0, 0);
        return found_;
    }

private:
    bool place(unsigned t, unsigned start) {
        const unsigned still_needed = last_free_ - t;
        if (end_ < still_needed) return false;
        const unsigned limit = end_ - still_needed;
        if (start >= limit) return false;

        int lo = 0;
        int hi = kNoUpper;
        for (std::size_t u = 0; u < pattern_.size(); ++u) {
            if (!placed_[u]) continue;
            if (pattern_[u] < pattern_[t]) {
                lo = std::max(lo, placed_value_[u]);
            } else {
                hi = std::min(hi, placed_value_[u]);
            }
        }

        if (t == last_free_) {
            const std::uint64_t c = window_.count(start, limit, lo, hi);
            found_ += c;
            return stop_at_first_ && c > 0;
        }
        return window_.for_each(start, limit, lo, hi, [&](unsigned d) {
            placed_value_[t] = window_.value(d);
            placed_[t] = true;
            const bool stop = place(t + 1, d + 1);
            placed_[t] = false;
            return stop;
        });
    }

    const Window& window_;
    std::span<const int> pattern_;
    std::vector<int> placed_value_;
    std::vector<bool> placed_;
    unsigned last_free_ = 0;
    unsigned end_ = 0;
    bool stop_at_first_;
    std::uint64_t found_ = 0;
};

bool packable(std::span<const int> seq) {
    if (seq.size() > kernels::kPackedWidth) return false;
    return std::all_of(seq.begin(), seq.end(), [](int v) { return v >= 0 && v <= 126; });
}

std::uint64_t search(std::span<const int> seq, std::span<const int> pattern, bool fix_last,
                     bool stop_at_first) {
    const auto n = static_cast<unsigned>(seq.size());
    if (pattern.empty()) return 1;
    if (pattern.size() > seq.size()) return 0;
    if (fix_last && pattern.size() == 1) return 1;
    if (packable(seq)) {
        PackedWindow w(seq);
        return OccurrenceSearch<PackedWindow>(w, pattern, n, fix_last, stop_at_first).run();
    }
    WideWindow w(seq);
    return OccurrenceSearch<WideWindow>(w, pattern, n, fix_last, stop_at_first).run();
}

}  // namespace

bool sequence_contains(std::span<const int> seq, std::span<const int> pattern) {
    return search(seq, pattern, false, true) > 0;
}

std::uint64_t sequence_count_occurrences(std::span<const int> seq, std::span<const int> pattern) {
    return search(seq, pattern, false, false);
}

bool sequence_contains_ending_at_last(std::span<const int> seq, std::span<const int> pattern) {
    if (seq.empty()) return false;
    return search(seq, pattern, true, true) > 0;
}

}  // namespace avoid
