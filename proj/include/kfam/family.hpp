#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kfam/combinatorics.hpp"
#include "kfam/errors.hpp"

namespace kfam {

// A facet is a strictly increasing sequence of vertex labels in [1..n].
using Facet = std::vector<int>;

using FVector = std::vector<long long>;           // (f_{-1}, f_0, ..., f_{k-1})
using DegreeSequence = std::vector<int>;          // indexed by vertex, length n
using ConjugatePartition = std::vector<int>;      // length C(n-1,k-1)+1

inline constexpr int kPermutationGuard = 10;      // n! search cutoff

/// A pure k-family: all facets have cardinality k on the vertex
/// universe [1..n]. Only facets are stored; lower faces are implicit.
/// Immutable after construction.
struct KFamily {
    int n = 0;
    int k = 0;
    std::vector<Facet> facets;   // lexicographically sorted, duplicate-free

    long long facet_count() const { return static_cast<long long>(facets.size()); }

    bool has_facet(const Facet& f) const {
        return std::binary_search(facets.begin(), facets.end(), f);
    }

    // The empty family is representable so that complements of complete
    // families stay inside the type.
    static KFamily empty(int n, int k) {
        if (n < 1 || k < 1 || k > n) throw RangeError("empty family: need 1 <= k <= n");
        KFamily s;
        s.n = n;
        s.k = k;
        return s;
    }
};

inline bool operator==(const KFamily& a, const KFamily& b) {
    return a.n == b.n && a.k == b.k && a.facets == b.facets;
}

inline KFamily from_facets(int n, std::vector<Facet> facet_list) {
    if (n < 1) throw RangeError("from_facets: n must be >= 1");
    if (facet_list.empty()) throw RangeError("from_facets: facet list is empty");
    for (auto& f : facet_list) {
        std::sort(f.begin(), f.end());
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            if (f[i] == f[i + 1]) throw PurityError("from_facets: repeated vertex in facet");
        }
        for (int v : f) {
            if (v < 1 || v > n) {
                throw RangeError("from_facets: vertex " + std::to_string(v) +
                                 " outside [1.." + std::to_string(n) + "]");
            }
        }
    }
    const int k = static_cast<int>(facet_list.front().size());
    if (k < 1) throw PurityError("from_facets: empty facet");
    for (const auto& f : facet_list) {
        if (static_cast<int>(f.size()) != k) {
            throw PurityError("from_facets: facet cardinalities differ");
        }
    }
    std::sort(facet_list.begin(), facet_list.end());
    facet_list.erase(std::unique(facet_list.begin(), facet_list.end()), facet_list.end());
    KFamily s;
    s.n = n;
    s.k = k;
    s.facets = std::move(facet_list);
    return s;
}

inline std::vector<int> support(const KFamily& s) {
    std::vector<char> used(static_cast<std::size_t>(s.n) + 1, 0);
    for (const auto& f : s.facets)
        for (int v : f) used[static_cast<std::size_t>(v)] = 1;
    std::vector<int> out;
    for (int v = 1; v <= s.n; ++v)
        if (used[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

inline FVector f_vector(const KFamily& s) {
    FVector f(static_cast<std::size_t>(s.k) + 1, 0);
    f[0] = 1;  // f_{-1}: the empty face
    for (int d = 1; d <= s.k; ++d) {
        std::set<Facet> faces;
        for (const auto& fac : s.facets) {
            for (const auto& sub : all_k_subsets(s.k, d)) {
                Facet face(sub.size());
                for (std::size_t i = 0; i < sub.size(); ++i)
                    face[i] = fac[static_cast<std::size_t>(sub[i] - 1)];
                faces.insert(std::move(face));
            }
        }
        f[static_cast<std::size_t>(d)] = static_cast<long long>(faces.size());
    }
    return f;
}

inline DegreeSequence degree_sequence(const KFamily& s) {
    DegreeSequence deg(static_cast<std::size_t>(s.n), 0);
    for (const auto& f : s.facets)
        for (int v : f) ++deg[static_cast<std::size_t>(v - 1)];
    return deg;
}

inline ConjugatePartition conjugate_partition(const KFamily& s) {
    const auto deg = degree_sequence(s);
    const std::uint64_t len = binom_u64(static_cast<std::uint64_t>(s.n - 1),
                                        static_cast<std::uint64_t>(s.k - 1)) + 1;
    ConjugatePartition dt(static_cast<std::size_t>(len), 0);
    for (std::uint64_t i = 1; i <= len; ++i) {
        int c = 0;
        for (int d : deg)
            if (static_cast<std::uint64_t>(d) >= i) ++c;
        dt[static_cast<std::size_t>(i - 1)] = c;
    }
    return dt;
}

inline KFamily complement(const KFamily& s, bool require_nonempty = false) {
    KFamily out = KFamily::empty(s.n, s.k);
    for (auto& sub : all_k_subsets(s.n, s.k)) {
        if (!s.has_facet(sub)) out.facets.push_back(std::move(sub));
    }
    if (require_nonempty && out.facets.empty()) {
        throw CompleteComplementError("complement of the complete family is empty");
    }
    return out;
}

enum class UnionMode { VertexDisjoint, FacetDisjoint };

// VertexDisjoint relabels s2 onto fresh vertices n1+1..n1+n2; FacetDisjoint
// keeps the common universe and requires the facet sets not to intersect.
inline KFamily disjoint_union(const KFamily& s1, const KFamily& s2,
                              UnionMode mode = UnionMode::VertexDisjoint) {
    if (s1.k != s2.k) throw KMismatchError("disjoint_union: facet cardinalities differ");
    KFamily out;
    out.k = s1.k;
    std::vector<Facet> facets = s1.facets;
    if (mode == UnionMode::VertexDisjoint) {
        out.n = s1.n + s2.n;
        for (auto f : s2.facets) {
            for (int& v : f) v += s1.n;
            facets.push_back(std::move(f));
        }
    } else {
        if (s1.n != s2.n) throw KMismatchError("disjoint_union: universes differ in FACET-DISJOINT mode");
        out.n = s1.n;
        for (const auto& f : s2.facets) {
            if (s1.has_facet(f)) throw OverlapError("disjoint_union: facet sets intersect");
            facets.push_back(f);
        }
    }
    std::sort(facets.begin(), facets.end());
    out.facets = std::move(facets);
    return out;
}

// Facets of the join are unions of one facet from each factor; s2 is
// relabeled onto n1+1..n1+n2. The factors may have different k.
inline KFamily simplicial_join(const KFamily& s1, const KFamily& s2) {
    KFamily out;
    out.n = s1.n + s2.n;
    out.k = s1.k + s2.k;
    for (const auto& f1 : s1.facets) {
        for (const auto& f2 : s2.facets) {
            Facet f = f1;
            for (int v : f2) f.push_back(v + s1.n);
            out.facets.push_back(std::move(f));
        }
    }
    std::sort(out.facets.begin(), out.facets.end());
    out.facets.erase(std::unique(out.facets.begin(), out.facets.end()), out.facets.end());
    return out;
}

inline KFamily isolated_vertices(int m) {
    std::vector<Facet> facets;
    for (int v = 1; v <= m; ++v) facets.push_back({v});
    return from_facets(m, std::move(facets));
}

// Cone vertex gets the fresh largest label n+1.
inline KFamily cone(const KFamily& s) {
    return simplicial_join(s, isolated_vertices(1));
}

inline KFamily relabel(const KFamily& s, const std::vector<int>& perm) {
    // perm[v-1] is the new label of vertex v
    KFamily out;
    out.n = s.n;
    out.k = s.k;
    out.facets.reserve(s.facets.size());
    for (const auto& f : s.facets) {
        Facet g(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            g[i] = perm[static_cast<std::size_t>(f[i] - 1)];
        std::sort(g.begin(), g.end());
        out.facets.push_back(std::move(g));
    }
    std::sort(out.facets.begin(), out.facets.end());
    return out;
}

// Lexicographically minimal facet set over all vertex relabelings.
// Equal canonical forms <=> isomorphic families (on the same n, k).
inline KFamily canonical_form(const KFamily& s) {
    if (s.n > kPermutationGuard) {
        throw SizeError("canonical_form: n exceeds the permutation-search guard");
    }
    std::vector<int> perm(static_cast<std::size_t>(s.n));
    std::iota(perm.begin(), perm.end(), 1);
    KFamily best = relabel(s, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        KFamily cand = relabel(s, perm);
        if (cand.facets < best.facets) best = std::move(cand);
    }
    return best;
}

inline std::string canonical_digest(const KFamily& s) {
    const KFamily c = canonical_form(s);
    std::ostringstream os;
    os << c.n << '/' << c.k;
    for (const auto& f : c.facets) {
        os << ':';
        for (int v : f) os << v << ',';
    }
    return os.str();
}

inline bool is_shifted_identity(const KFamily& s) {
    for (const auto& f : s.facets) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            const int lo = (i == 0) ? 1 : f[i - 1] + 1;
            for (int w = lo; w < f[i]; ++w) {
                Facet g = f;
                g[i] = w;   // stays sorted: f[i-1] < w < f[i] < f[i+1]
                if (!s.has_facet(g)) return false;
            }
        }
    }
    return true;
}

// With a labeling: checks the relabeled family. Without: searches all
// labelings of [1..n] for one under which the family is shifted.
inline bool is_shifted(const KFamily& s,
                       const std::optional<std::vector<int>>& labeling = std::nullopt) {
    if (labeling) return is_shifted_identity(relabel(s, *labeling));
    if (is_shifted_identity(s)) return true;
    if (s.n > kPermutationGuard) {
        throw SizeError("is_shifted: n exceeds the permutation-search guard");
    }
    std::vector<int> perm(static_cast<std::size_t>(s.n));
    std::iota(perm.begin(), perm.end(), 1);
    while (std::next_permutation(perm.begin(), perm.end())) {
        if (is_shifted_identity(relabel(s, perm))) return true;
    }
    return false;
}

namespace detail {

// Facet-by-facet backtracking: extend an injective vertex map so that every
// facet of h lands on a facet of s.
inline bool embed_facets(const KFamily& s, const KFamily& h, std::size_t idx,
                         std::vector<int>& img, std::vector<char>& target_used) {
    if (idx == h.facets.size()) return true;
    const Facet& f = h.facets[idx];
    for (const auto& g : s.facets) {
        // vertices of f already mapped must land inside g
        std::vector<int> free_src;
        std::vector<char> g_taken(g.size(), 0);
        bool ok = true;
        for (int v : f) {
            const int iv = img[static_cast<std::size_t>(v - 1)];
            if (iv == 0) { free_src.push_back(v); continue; }
            auto it = std::find(g.begin(), g.end(), iv);
            if (it == g.end()) { ok = false; break; }
            g_taken[static_cast<std::size_t>(it - g.begin())] = 1;
        }
        if (!ok) continue;
        std::vector<int> free_tgt;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!g_taken[i] && !target_used[static_cast<std::size_t>(g[i] - 1)])
                free_tgt.push_back(g[i]);
        }
        if (free_tgt.size() < free_src.size()) continue;
        std::sort(free_tgt.begin(), free_tgt.end());
        // try every injection of the unmapped vertices into g's free slots
        std::vector<int> choice(free_tgt.size());
        std::iota(choice.begin(), choice.end(), 0);
        do {
            for (std::size_t i = 0; i < free_src.size(); ++i) {
                const int t = free_tgt[static_cast<std::size_t>(choice[i])];
                img[static_cast<std::size_t>(free_src[i] - 1)] = t;
                target_used[static_cast<std::size_t>(t - 1)] = 1;
            }
            if (embed_facets(s, h, idx + 1, img, target_used)) return true;
            for (std::size_t i = 0; i < free_src.size(); ++i) {
                const int t = img[static_cast<std::size_t>(free_src[i] - 1)];
                img[static_cast<std::size_t>(free_src[i] - 1)] = 0;
                target_used[static_cast<std::size_t>(t - 1)] = 0;
            }
        } while (std::next_permutation(choice.begin(), choice.end()));
    }
    return false;
}

} // namespace detail

// Containment up to isomorphism: an injective vertex map from h's support
// into [1..n(s)] sending every facet of h to a facet of s.
inline bool contains_subfamily(const KFamily& s, const KFamily& h) {
    if (s.k != h.k) throw KMismatchError("contains_subfamily: k differs");
    if (static_cast<int>(support(h).size()) > 2 * kPermutationGuard) {
        throw SizeError("contains_subfamily: subfamily support exceeds the search guard");
    }
    if (h.facets.size() > s.facets.size()) return false;
    std::vector<int> img(static_cast<std::size_t>(h.n), 0);
    std::vector<char> target_used(static_cast<std::size_t>(s.n), 0);
    return detail::embed_facets(s, h, 0, img, target_used);
}

} // namespace kfam
