#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "kfam/errors.hpp"
#include "kfam/family.hpp"

namespace kfam {

inline constexpr int kMatchingGuard = 40;
inline constexpr int kTreeGuard = 20;

/// Graph on facet indices; edge iff the facets intersect in co-dimension one.
struct RidgeGraph {
    int nodes = 0;
    std::vector<std::vector<int>> adj;

    bool adjacent(int i, int j) const {
        return std::binary_search(adj[static_cast<std::size_t>(i)].begin(),
                                  adj[static_cast<std::size_t>(i)].end(), j);
    }
    long long edge_count() const {
        long long e = 0;
        for (const auto& a : adj) e += static_cast<long long>(a.size());
        return e / 2;
    }
};

namespace detail {

inline std::vector<std::uint64_t> facet_vertex_masks(const KFamily& s) {
    std::vector<std::uint64_t> m;
    m.reserve(s.facets.size());
    for (const auto& f : s.facets) {
        std::uint64_t x = 0;
        for (int v : f) x |= (1ull << (v - 1));
        m.push_back(x);
    }
    return m;
}

} // namespace detail

inline RidgeGraph ridge_graph(const KFamily& s) {
    if (s.n > 63) throw SizeError("ridge_graph: vertex universe exceeds 63");
    RidgeGraph g;
    g.nodes = static_cast<int>(s.facets.size());
    g.adj.assign(static_cast<std::size_t>(g.nodes), {});
    const auto masks = detail::facet_vertex_masks(s);
    for (int i = 0; i < g.nodes; ++i) {
        for (int j = i + 1; j < g.nodes; ++j) {
            const auto inter = masks[static_cast<std::size_t>(i)] & masks[static_cast<std::size_t>(j)];
            if (std::popcount(inter) == s.k - 1) {
                g.adj[static_cast<std::size_t>(i)].push_back(j);
                g.adj[static_cast<std::size_t>(j)].push_back(i);
            }
        }
    }
    return g;
}

// Connected-component labels of the ridge graph, -1-free, 0-based.
inline std::vector<int> ridge_component_labels(const KFamily& s) {
    const RidgeGraph g = ridge_graph(s);
    std::vector<int> label(static_cast<std::size_t>(g.nodes), -1);
    int c = 0;
    for (int i = 0; i < g.nodes; ++i) {
        if (label[static_cast<std::size_t>(i)] >= 0) continue;
        std::vector<int> stack{i};
        label[static_cast<std::size_t>(i)] = c;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : g.adj[static_cast<std::size_t>(u)]) {
                if (label[static_cast<std::size_t>(w)] < 0) {
                    label[static_cast<std::size_t>(w)] = c;
                    stack.push_back(w);
                }
            }
        }
        ++c;
    }
    return label;
}

// Each component is returned on the full universe [1..n].
inline std::vector<KFamily> ridge_components(const KFamily& s) {
    if (s.facets.empty()) return {};
    const auto label = ridge_component_labels(s);
    const int c = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<Facet>> parts(static_cast<std::size_t>(c));
    for (std::size_t i = 0; i < s.facets.size(); ++i) {
        parts[static_cast<std::size_t>(label[i])].push_back(s.facets[i]);
    }
    std::vector<KFamily> out;
    out.reserve(parts.size());
    for (auto& p : parts) out.push_back(from_facets(s.n, std::move(p)));
    return out;
}

inline bool is_ridge_connected(const KFamily& s) {
    if (s.facets.empty()) return false;
    const auto label = ridge_component_labels(s);
    return std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
}

namespace detail {

// Exact maximum independent set by branch and bound over 64-bit node masks.
inline void mis_search(const std::vector<std::uint64_t>& closed_nbr,
                       std::uint64_t candidates, int current, int& best) {
    if (current + std::popcount(candidates) <= best) return;
    if (candidates == 0) {
        best = std::max(best, current);
        return;
    }
    // pivot on the candidate with the most candidate neighbors
    int pivot = -1, deg = -1;
    for (std::uint64_t m = candidates; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        const int d = std::popcount(closed_nbr[static_cast<std::size_t>(v)] & candidates);
        if (d > deg) { deg = d; pivot = v; }
    }
    // include pivot
    mis_search(closed_nbr, candidates & ~closed_nbr[static_cast<std::size_t>(pivot)],
               current + 1, best);
    // exclude pivot
    mis_search(closed_nbr, candidates & ~(1ull << pivot), current, best);
}

} // namespace detail

/// Matching number: exact maximum independent set size of the ridge graph.
inline int matching_number(const KFamily& s) {
    const int f = static_cast<int>(s.facets.size());
    if (f > kMatchingGuard) throw SizeError("matching_number: facet count exceeds the guard");
    if (f == 0) return 0;
    const RidgeGraph g = ridge_graph(s);
    std::vector<std::uint64_t> closed(static_cast<std::size_t>(f), 0);
    for (int i = 0; i < f; ++i) {
        closed[static_cast<std::size_t>(i)] = 1ull << i;
        for (int j : g.adj[static_cast<std::size_t>(i)]) {
            closed[static_cast<std::size_t>(i)] |= 1ull << j;
        }
    }
    int best = 0;
    const std::uint64_t all = (f == 64) ? ~0ull : ((1ull << f) - 1);
    detail::mis_search(closed, all, 0, best);
    return best;
}

namespace detail {

// Leaf test within a subset of facets given as vertex masks.
inline bool subset_has_leaf(const std::vector<std::uint64_t>& masks,
                            const std::vector<int>& members) {
    const std::size_t m = members.size();
    if (m <= 2) return true;   // one facet is a leaf; with two, each is
    // prefix/suffix unions give each "union of the others" in O(m)
    std::vector<std::uint64_t> pre(m + 1, 0), suf(m + 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
        pre[i + 1] = pre[i] | masks[static_cast<std::size_t>(members[i])];
    }
    for (std::size_t i = m; i > 0; --i) {
        suf[i - 1] = suf[i] | masks[static_cast<std::size_t>(members[i - 1])];
    }
    for (std::size_t i = 0; i < m; ++i) {
        const std::uint64_t fm = masks[static_cast<std::size_t>(members[i])];
        const std::uint64_t inter = fm & (pre[i] | suf[i + 1]);
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            if ((inter & ~masks[static_cast<std::size_t>(members[j])]) == 0) return true;
        }
        // not contained in any single other facet; try the next candidate
    }
    return false;
}

} // namespace detail

/// Faridi leaf: F alone, or F's intersection with the union of the other
/// facets' vertex sets is contained in a single other facet.
inline bool is_leaf(const KFamily& s, const Facet& f) {
    auto it = std::lower_bound(s.facets.begin(), s.facets.end(), f);
    if (it == s.facets.end() || *it != f) throw NotAFacetError("is_leaf: not a facet of the family");
    if (s.facets.size() == 1) return true;
    const auto masks = detail::facet_vertex_masks(s);
    const std::size_t idx = static_cast<std::size_t>(it - s.facets.begin());
    std::uint64_t others = 0;
    for (std::size_t j = 0; j < masks.size(); ++j) {
        if (j != idx) others |= masks[j];
    }
    const std::uint64_t inter = masks[idx] & others;
    for (std::size_t j = 0; j < masks.size(); ++j) {
        if (j == idx) continue;
        if ((inter & ~masks[j]) == 0) return true;
    }
    return false;
}

/// True iff the family is ridge-connected and every nonempty facet subset
/// has a leaf. Exponential subset enumeration, guarded.
inline bool is_simplicial_tree(const KFamily& s) {
    const int f = static_cast<int>(s.facets.size());
    if (f > kTreeGuard) throw SizeError("is_simplicial_tree: facet count exceeds the guard");
    if (f == 0) return false;
    if (!is_ridge_connected(s)) return false;
    if (f <= 2) return true;
    const auto masks = detail::facet_vertex_masks(s);
    const std::uint32_t top = 1u << f;
    std::vector<int> members;
    members.reserve(static_cast<std::size_t>(f));
    for (std::uint32_t sub = 1; sub < top; ++sub) {
        if (std::popcount(sub) <= 2) continue;
        members.clear();
        for (std::uint32_t m = sub; m; m &= m - 1) members.push_back(std::countr_zero(m));
        if (!detail::subset_has_leaf(masks, members)) return false;
    }
    return true;
}

/// Join decomposition of a matching-number-1 family: the common simplex
/// core plus either scattered single vertices or a complete remainder.
struct JoinDecomposition {
    std::vector<int> core;               // vertex set of the one-facet factor
    enum class Kind { OneFamily, Complete } kind = Kind::OneFamily;
    std::vector<int> remainder_support;
};

inline std::optional<JoinDecomposition> decompose_matching_one(const KFamily& s) {
    if (s.facets.empty()) return std::nullopt;
    if (matching_number(s) != 1) return std::nullopt;
    const auto masks = detail::facet_vertex_masks(s);
    std::uint64_t core_mask = masks.front();
    for (auto m : masks) core_mask &= m;
    JoinDecomposition d;
    for (int v = 1; v <= s.n; ++v) {
        if (core_mask & (1ull << (v - 1))) d.core.push_back(v);
    }
    int k2 = s.k - static_cast<int>(d.core.size());
    std::vector<std::uint64_t> rem;
    rem.reserve(masks.size());
    std::uint64_t rem_union = 0;
    for (auto m : masks) {
        rem.push_back(m & ~core_mask);
        rem_union |= m & ~core_mask;
    }
    for (int v = 1; v <= s.n; ++v) {
        if (rem_union & (1ull << (v - 1))) d.remainder_support.push_back(v);
    }
    if (k2 == 0) {
        // single facet: view its last vertex as a one-vertex 1-family factor
        d.core.pop_back();
        d.remainder_support = {s.facets.front().back()};
        d.kind = JoinDecomposition::Kind::OneFamily;
        return d;
    }
    if (k2 == 1) {
        // remainders are automatically distinct singletons
        d.kind = JoinDecomposition::Kind::OneFamily;
        return d;
    }
    // k2 >= 2: the remainders must be all k2-subsets of a (k2+1)-set
    const int u = static_cast<int>(d.remainder_support.size());
    const bool complete = (u == k2 + 1) &&
        (static_cast<int>(rem.size()) == k2 + 1);
    if (complete) {
        std::vector<std::uint64_t> sorted_rem = rem;
        std::sort(sorted_rem.begin(), sorted_rem.end());
        sorted_rem.erase(std::unique(sorted_rem.begin(), sorted_rem.end()), sorted_rem.end());
        if (static_cast<int>(sorted_rem.size()) == k2 + 1) {
            bool all_sub = true;
            for (auto m : sorted_rem) {
                if (std::popcount(m) != k2 || (m & ~rem_union) != 0) { all_sub = false; break; }
            }
            if (all_sub) {
                d.kind = JoinDecomposition::Kind::Complete;
                return d;
            }
        }
    }
    throw StructureError("decompose_matching_one: matching number 1 but the remainder fits "
                         "neither a 1-family nor a complete family");
}

} // namespace kfam
