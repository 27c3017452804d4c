#include "avoid/enumerate.hpp"

#include "avoid/containment.hpp"
#include "avoid/error.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

namespace avoid {

AvoiderFilter parse_filter(std::string_view name) {
    if (name == "all") return AvoiderFilter::all;
    if (name == "indecomposable") return AvoiderFilter::indecomposable;
    if (name == "first_entry_is_1" || name == "first-entry-is-1") {
        return AvoiderFilter::first_entry_is_1;
    }
    throw DomainError("unknown filter '" + std::string(name) + "'");
}

namespace {

void check_ceiling(std::size_t n, const EnumerationOptions& options) {
    if (n > options.max_n) {
        throw ResourceError("brute-force enumeration refused: n=" + std::to_string(n) +
                            " exceeds ceiling " + std::to_string(options.max_n));
    }
}

bool indecomposable_values(const std::vector<int>& p) {
    // A cut after c is valid iff the first c entries are exactly {n-c+1..n},
    // i.e. their minimum is n-c+1.
    const int n = static_cast<int>(p.size());
    int prefix_min = n + 1;
    for (int c = 1; c < n; ++c) {
        prefix_min = std::min(prefix_min, p[static_cast<std::size_t>(c - 1)]);
        if (prefix_min == n - c + 1) return false;
    }
    return n > 0;
}

template <class Leaf>
class AvoiderWalk {
public:
    AvoiderWalk(std::size_t n, const Permutation& q, AvoiderFilter filter, Leaf& leaf)
        : n_(n), q_(q.values()), filter_(filter), used_(n + 1, false), leaf_(leaf) {
        prefix_.reserve(n);
    }

    void run_with_first(int first) {
        if (first < 1 || static_cast<std::size_t>(first) > n_) return;
        if (filter_ == AvoiderFilter::first_entry_is_1 && first != 1) return;
        extend(first);
    }

private:
    void extend(int v) {
        prefix_.push_back(v);
        used_[static_cast<std::size_t>(v)] = true;
        if (!sequence_contains_ending_at_last(prefix_, q_)) {
            if (prefix_.size() == n_) {
                if (filter_ != AvoiderFilter::indecomposable || indecomposable_values(prefix_)) {
                    leaf_(prefix_);
                }
            } else {
                for (std::size_t w = 1; w <= n_; ++w) {
                    if (!used_[w]) extend(static_cast<int>(w));
                }
            }
        }
        used_[static_cast<std::size_t>(v)] = false;
        prefix_.pop_back();
    }

    std::size_t n_;
    std::span<const int> q_;
    AvoiderFilter filter_;
    std::vector<int> prefix_;
    std::vector<bool> used_;
    Leaf& leaf_;
};

bool empty_passes(const Permutation& q, AvoiderFilter filter) {
    return filter == AvoiderFilter::all && !q.empty();
}

}  // namespace

void for_each_avoider_with_first(std::size_t n, const Permutation& q, int first,
                                 const EnumerationOptions& options, const AvoiderVisitor& visit) {
    check_ceiling(n, options);
    auto leaf = [&](const std::vector<int>& p) { visit(Permutation(p)); };
    AvoiderWalk walk(n, q, options.filter, leaf);
    walk.run_with_first(first);
}

void for_each_avoider(std::size_t n, const Permutation& q, const EnumerationOptions& options,
                      const AvoiderVisitor& visit) {
    check_ceiling(n, options);
    if (n == 0) {
        if (empty_passes(q, options.filter)) visit(Permutation{});
        return;
    }
    for (std::size_t first = 1; first <= n; ++first) {
        for_each_avoider_with_first(n, q, static_cast<int>(first), options, visit);
    }
}

std::uint64_t count_avoiders_with_first(std::size_t n, const Permutation& q, int first,
                                        const EnumerationOptions& options) {
    check_ceiling(n, options);
    std::uint64_t count = 0;
    auto leaf = [&](const std::vector<int>&) { ++count; };
    AvoiderWalk walk(n, q, options.filter, leaf);
    walk.run_with_first(first);
    return count;
}

std::uint64_t count_avoiders(std::size_t n, const Permutation& q,
                             const EnumerationOptions& options) {
    check_ceiling(n, options);
    if (n == 0) return empty_passes(q, options.filter) ? 1 : 0;

    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers,
                                                             static_cast<unsigned>(n)));
    std::vector<std::uint64_t> per_first(n + 1, 0);
    std::atomic<std::size_t> next{1};
    auto work = [&] {
        for (std::size_t f = next++; f <= n; f = next++) {
            per_first[f] = count_avoiders_with_first(n, q, static_cast<int>(f), options);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    std::uint64_t total = 0;
    for (auto c : per_first) total += c;
    return total;
}

std::vector<Permutation> list_avoiders(std::size_t n, const Permutation& q,
                                       const EnumerationOptions& options) {
    std::vector<Permutation> out;
    for_each_avoider(n, q, options, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

}  // namespace avoid
