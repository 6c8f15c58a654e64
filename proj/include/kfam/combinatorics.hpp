#pragma once

#include <cstdint>
#include <vector>

namespace kfam {

// Exact binomial coefficient. Callers use this for index arithmetic, so
// arguments stay small; overflow is not a concern below C(68,34).
inline std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r / i * (n - k + i) + r % i * (n - k + i) / i;
    }
    return r;
}

// Binomial as a real, for inequality right-hand sides where t can be as
// large as the spectrum length and the exact value may not fit 64 bits.
inline double binom_real(long long n, long long k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    long double r = 1.0L;
    for (long long i = 1; i <= k; ++i) {
        r *= static_cast<long double>(n - k + i);
        r /= static_cast<long double>(i);
    }
    return static_cast<double>(r);
}

// Lexicographic rank of a strictly increasing k-subset of [1..n] among
// all k-subsets, 0-based.
inline std::uint64_t subset_lex_rank(const std::vector<int>& subset, int n) {
    const int k = static_cast<int>(subset.size());
    std::uint64_t rank = 0;
    int prev = 0;
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < subset[i]; ++v) {
            rank += binom_u64(static_cast<std::uint64_t>(n - v),
                              static_cast<std::uint64_t>(k - i - 1));
        }
        prev = subset[i];
    }
    return rank;
}

// All k-subsets of [1..n] in lexicographic order.
inline std::vector<std::vector<int>> all_k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    if (k == 0) { out.clear(); out.push_back({}); }
    return out;
}

} // namespace kfam
