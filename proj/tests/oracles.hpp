// Independent oracles used only by tests. These deliberately avoid the
// production code paths they are checking: the eigensolver oracle is a
// plain cyclic Jacobi sweep, the MIS oracle enumerates all subsets, and
// the isomorphism-class oracle groups raw facet masks by permutation
// orbit with no canonicalization.
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "kfam/eigensolver.hpp"
#include "kfam/family.hpp"
#include "kfam/structure.hpp"

namespace oracle {

// Cyclic Jacobi rotations; descending eigenvalues.
inline std::vector<double> jacobi_eigenvalues(kfam::SymMatrix a) {
    const std::size_t n = a.n;
    if (n == 0) return {};
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a.at(p, q) * a.at(p, q);
        if (off < 1e-24) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (std::fabs(apq) < 1e-15) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0)
                    ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                    : -1.0 / (-theta + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a.at(i, p), aiq = a.at(i, q);
                    a.at(i, p) = c * aip - s * aiq;
                    a.at(i, q) = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double api = a.at(p, i), aqi = a.at(q, i);
                    a.at(p, i) = c * api - s * aqi;
                    a.at(q, i) = s * api + c * aqi;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a.at(i, i);
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    return ev;
}

// Exhaustive maximum independent set over all vertex subsets.
inline int exhaustive_mis(const kfam::RidgeGraph& g) {
    const int n = g.nodes;
    int best = 0;
    for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
        bool independent = true;
        for (int i = 0; i < n && independent; ++i) {
            if (!(sub & (1u << i))) continue;
            for (int j = i + 1; j < n && independent; ++j) {
                if ((sub & (1u << j)) && g.adjacent(i, j)) independent = false;
            }
        }
        if (independent) best = std::max(best, std::popcount(sub));
    }
    return best;
}

// Count faces of dimension d by scanning every (d+1)-subset of [1..n].
inline long long face_count(const kfam::KFamily& s, int d) {
    if (d == -1) return 1;
    long long count = 0;
    for (const auto& sub : kfam::all_k_subsets(s.n, d + 1)) {
        bool contained = false;
        for (const auto& f : s.facets) {
            if (std::includes(f.begin(), f.end(), sub.begin(), sub.end())) {
                contained = true;
                break;
            }
        }
        if (contained) ++count;
    }
    return count;
}

// Isomorphism-class count by orbit sweep: no canonical forms, every mask
// marks its whole permutation orbit as seen.
inline long long iso_class_count(int n, int k, bool connected_only) {
    const auto facets = kfam::all_k_subsets(n, k);
    const int count = static_cast<int>(facets.size());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> perm_maps;
    std::iota(perm.begin(), perm.end(), 1);
    std::map<kfam::Facet, int> index;
    for (int i = 0; i < count; ++i) index[facets[static_cast<std::size_t>(i)]] = i;
    do {
        std::vector<int> fmap(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) {
            kfam::Facet g;
            for (int v : facets[static_cast<std::size_t>(i)])
                g.push_back(perm[static_cast<std::size_t>(v - 1)]);
            std::sort(g.begin(), g.end());
            fmap[static_cast<std::size_t>(i)] = index.at(g);
        }
        perm_maps.push_back(std::move(fmap));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<char> seen(1ull << count, 0);
    long long classes = 0;
    for (std::uint32_t mask = 1; mask < (1u << count); ++mask) {
        if (seen[mask]) continue;
        // spanning filter
        std::set<int> used;
        for (std::uint32_t m = mask; m; m &= m - 1) {
            for (int v : facets[static_cast<std::size_t>(std::countr_zero(m))]) used.insert(v);
        }
        bool keep = static_cast<int>(used.size()) == n;
        if (keep && connected_only) {
            std::vector<kfam::Facet> fs;
            for (std::uint32_t m = mask; m; m &= m - 1)
                fs.push_back(facets[static_cast<std::size_t>(std::countr_zero(m))]);
            keep = kfam::is_ridge_connected(kfam::from_facets(n, fs));
        }
        if (keep) ++classes;
        for (const auto& fmap : perm_maps) {
            std::uint32_t mapped = 0;
            for (std::uint32_t m = mask; m; m &= m - 1)
                mapped |= 1u << fmap[static_cast<std::size_t>(std::countr_zero(m))];
            seen[mapped] = 1;
        }
    }
    return classes;
}

} // namespace oracle
