#include "avoid/permutation.hpp"

#include "avoid/containment.hpp"
#include "avoid/error.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

namespace avoid {

namespace {

void check_bijection(const std::vector<int>& values) {
    const auto n = values.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : values) {
        if (v < 1 || static_cast<std::size_t>(v) > n) {
            throw DomainError("value " + std::to_string(v) + " out of range 1.." +
                              std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw DomainError("duplicate value " + std::to_string(v));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    check_bijection(values_);
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::parse(std::string_view text) {
    std::size_t first = 0;
    std::size_t last = text.size();
    while (first < last && is_space(text[first])) ++first;
    while (last > first && is_space(text[last - 1])) --last;

    std::vector<int> values;
    if (text.substr(first, last - first).find(',') == std::string_view::npos) {
        for (std::size_t i = first; i < last; ++i) {
            const char c = text[i];
            if (c < '0' || c > '9') throw ParseError("expected digit", i);
            values.push_back(c - '0');
        }
        return Permutation(std::move(values));
    }

    std::size_t i = first;
    while (true) {
        while (i < last && is_space(text[i])) ++i;
        int v = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + last, v);
        if (ec != std::errc{}) throw ParseError("expected integer", i);
        values.push_back(v);
        i = static_cast<std::size_t>(ptr - text.data());
        while (i < last && is_space(text[i])) ++i;
        if (i == last) break;
        if (text[i] != ',') throw ParseError("expected ','", i);
        ++i;
    }
    return Permutation(std::move(values));
}

Permutation Permutation::from_distinct(std::span<const int> values) {
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return values[static_cast<std::size_t>(a)] <
                                         values[static_cast<std::size_t>(b)]; });
    std::vector<int> ranks(values.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        ranks[static_cast<std::size_t>(order[r])] = static_cast<int>(r + 1);
    }
    return Permutation(std::move(ranks));
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
    std::string out;
    if (values_.size() <= 9) {
        for (int v : values_) out.push_back(static_cast<char>('0' + v));
        return out;
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i != 0) out.push_back(',');
        out += std::to_string(values_[i]);
    }
    return out;
}

bool contains(const Permutation& p, const Permutation& q) {
    return sequence_contains(p.values(), q.values());
}

std::uint64_t count_occurrences(const Permutation& p, const Permutation& q) {
    return sequence_count_occurrences(p.values(), q.values());
}

ClassSignature left_to_right_minima(const Permutation& p) {
    ClassSignature out;
    int current = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < current) {
            current = p[i];
            out.push_back({i + 1, current});
        }
    }
    return out;
}

bool same_class(const Permutation& p, const Permutation& q) {
    return p.size() == q.size() && left_to_right_minima(p) == left_to_right_minima(q);
}

namespace {

// cut[c] is true iff min(p_1..p_c) > max(p_{c+1}..p_n), for 1 <= c < n.
std::vector<bool> valid_cuts(const Permutation& p) {
    const std::size_t n = p.size();
    std::vector<bool> cut(n, false);
    if (n < 2) return cut;
    std::vector<int> suffix_max(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) suffix_max[i] = std::max(suffix_max[i + 1], p[i]);
    int prefix_min = std::numeric_limits<int>::max();
    for (std::size_t c = 1; c < n; ++c) {
        prefix_min = std::min(prefix_min, p[c - 1]);
        cut[c] = prefix_min > suffix_max[c];
    }
    return cut;
}

}  // namespace

bool is_indecomposable(const Permutation& p) {
    if (p.empty()) return false;
    const auto cut = valid_cuts(p);
    return std::find(cut.begin(), cut.end(), true) == cut.end();
}

std::vector<Permutation> decompose(const Permutation& p) {
    std::vector<Permutation> blocks;
    if (p.empty()) return blocks;
    const auto cut = valid_cuts(p);
    std::size_t start = 0;
    for (std::size_t c = 1; c <= p.size(); ++c) {
        if (c == p.size() || cut[c]) {
            blocks.push_back(Permutation::from_distinct(p.values().subspan(start, c - start)));
            start = c;
        }
    }
    return blocks;
}

Permutation skew_sum(std::span<const Permutation> blocks) {
    std::size_t total = 0;
    for (const auto& b : blocks) total += b.size();
    std::vector<int> out;
    out.reserve(total);
    std::size_t remaining = total;
    for (const auto& b : blocks) {
        remaining -= b.size();
        for (int v : b) out.push_back(v + static_cast<int>(remaining));
    }
    return Permutation(std::move(out));
}

Permutation normalize(const Permutation& p) {
    const std::size_t n = p.size();
    std::vector<bool> is_minimum_value(n + 1, false);
    for (const auto& m : left_to_right_minima(p)) {
        is_minimum_value[static_cast<std::size_t>(m.value)] = true;
    }
    // Each non-minimum slot takes the smallest unused non-minimum value above
    // the most recent left-to-right minimum.
    std::vector<bool> used(n + 1, false);
    std::vector<int> out(n);
    int current_min = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < n; ++i) {
        if (p[i] < current_min) {
            current_min = p[i];
            out[i] = p[i];
            continue;
        }
        int v = current_min + 1;
        while (is_minimum_value[static_cast<std::size_t>(v)] || used[static_cast<std::size_t>(v)]) {
            ++v;
        }
        used[static_cast<std::size_t>(v)] = true;
        out[i] = v;
    }
    return Permutation(std::move(out));
}

}  // namespace avoid
