#pragma once

// Deliberately naive reference implementations. None of these call into the
// library's algorithms; they work straight from the definitions.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

/// Does the subsequence seq[idx[0]], seq[idx[1]], ... have the same relative order as q?
inline bool order_isomorphic(const Perm& seq, const std::vector<int>& idx, const Perm& q) {
    for (std::size_t a = 0; a < q.size(); ++a) {
        for (std::size_t b = 0; b < q.size(); ++b) {
            if ((seq[static_cast<std::size_t>(idx[a])] < seq[static_cast<std::size_t>(idx[b])]) !=
                (q[a] < q[b])) {
                return false;
            }
        }
    }
    return true;
}

/// Calls visit(idx) for every k-subset of {0..n-1} in increasing order.
template <class Visit>
void for_each_subset(int n, int k, Visit&& visit) {
    if (k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        visit(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

inline std::uint64_t count_occurrences(const Perm& p, const Perm& q) {
    std::uint64_t count = 0;
    for_each_subset(static_cast<int>(p.size()), static_cast<int>(q.size()),
                    [&](const std::vector<int>& idx) { count += order_isomorphic(p, idx, q) ? 1 : 0; });
    return count;
}

inline bool contains(const Perm& p, const Perm& q) { return count_occurrences(p, q) > 0; }

inline bool indecomposable(const Perm& p) {
    if (p.empty()) return false;
    for (std::size_t c = 1; c < p.size(); ++c) {
        const int lo = *std::min_element(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(c));
        const int hi = *std::max_element(p.begin() + static_cast<std::ptrdiff_t>(c), p.end());
        if (lo > hi) return false;
    }
    return true;
}

/// All n-permutations avoiding q, by filtering all n! permutations.
template <class Keep>
std::uint64_t count_avoiders(int n, const Perm& q, Keep&& keep) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::uint64_t count = 0;
    do {
        if (!contains(p, q) && keep(p)) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

inline std::uint64_t count_avoiders(int n, const Perm& q) {
    return count_avoiders(n, q, [](const Perm&) { return true; });
}

/// Left-to-right minima as (1-based position, value).
inline std::vector<std::pair<int, int>> minima(const Perm& p) {
    std::vector<std::pair<int, int>> out;
    int best = 1 << 30;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < best) {
            best = p[i];
            out.emplace_back(static_cast<int>(i) + 1, p[i]);
        }
    }
    return out;
}

/// beats straight from the definition: some h < i with p_h < p_j < p_i (1-based).
inline bool beats(const Perm& p, int i, int j) {
    if (i >= j) return false;
    for (int h = 1; h < i; ++h) {
        const int ph = p[static_cast<std::size_t>(h - 1)];
        const int pi = p[static_cast<std::size_t>(i - 1)];
        const int pj = p[static_cast<std::size_t>(j - 1)];
        if (ph < pj && pj < pi) return true;
    }
    return false;
}

/// reaches[i][k] by Warshall closure of beats (0-based indices).
inline std::vector<std::vector<bool>> reach_matrix(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<std::vector<bool>> r(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = beats(p, i + 1, j + 1);
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (r[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] && r[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)])
                    r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    return r;
}

/// Catalan numbers by the convolution recurrence, in 64 bits (n <= 30).
inline std::vector<std::uint64_t> catalan(int up_to) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(up_to) + 1, 0);
    c[0] = 1;
    for (int m = 0; m < up_to; ++m)
        for (int i = 0; i <= m; ++i) c[static_cast<std::size_t>(m + 1)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - i)];
    return c;
}

/// Uniform random permutation of 1..n.
inline Perm random_perm(int n, std::mt19937& rng) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace oracle
