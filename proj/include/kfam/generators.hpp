#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kfam/combinatorics.hpp"
#include "kfam/errors.hpp"
#include "kfam/family.hpp"
#include "kfam/structure.hpp"

namespace kfam {

using Seed = std::uint64_t;

namespace detail {

// Thin deterministic wrapper; avoids std distributions, whose output is
// not pinned across standard library implementations.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(Seed seed) : eng(seed) {}
    // uniform-ish integer in [lo, hi]; modulo bias is irrelevant here
    int pick(int lo, int hi) {
        return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    std::vector<int> k_subset(int n, int k) {
        std::vector<int> pool(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
        for (int i = 0; i < k; ++i) {
            std::swap(pool[static_cast<std::size_t>(i)],
                      pool[static_cast<std::size_t>(pick(i, n - 1))]);
        }
        std::vector<int> out(pool.begin(), pool.begin() + k);
        std::sort(out.begin(), out.end());
        return out;
    }
};

} // namespace detail

inline KFamily complete_family(int n, int k) {
    if (k < 1 || n < k) throw RangeError("complete_family: need n >= k >= 1");
    return from_facets(n, all_k_subsets(n, k));
}

// Hub = {1..k-1}; facets hub + {j} for j = k..n.
inline KFamily star_family(int n, int k) {
    if (k < 1 || n < k) throw RangeError("star_family: need n >= k >= 1");
    std::vector<Facet> facets;
    for (int j = k; j <= n; ++j) {
        Facet f;
        for (int v = 1; v < k; ++v) f.push_back(v);
        f.push_back(j);
        facets.push_back(std::move(f));
    }
    return from_facets(n, std::move(facets));
}

inline KFamily simplex_family(int k) {
    if (k < 1) throw RangeError("simplex_family: need k >= 1");
    Facet f(static_cast<std::size_t>(k));
    for (int v = 1; v <= k; ++v) f[static_cast<std::size_t>(v - 1)] = v;
    return from_facets(k, {f});
}

enum class ThresholdStep { Cone, Isolated };
using ThresholdSeq = std::vector<ThresholdStep>;

inline ThresholdSeq parse_threshold_steps(const std::string& steps) {
    ThresholdSeq seq;
    for (char c : steps) {
        switch (c) {
            case 'c': case 'C': seq.push_back(ThresholdStep::Cone); break;
            case 'i': case 'I': seq.push_back(ThresholdStep::Isolated); break;
            default: throw FormatError("threshold steps: expected only 'c' or 'i'");
        }
    }
    return seq;
}

inline int cone_count(const ThresholdSeq& seq) {
    int c = 0;
    for (auto s : seq)
        if (s == ThresholdStep::Cone) ++c;
    return c;
}

// 2-family grown from a single vertex; a cone step connects the new vertex
// to every vertex added so far.
inline KFamily threshold_graph(const ThresholdSeq& seq) {
    int n = 1;
    std::vector<Facet> edges;
    for (auto step : seq) {
        ++n;
        if (step == ThresholdStep::Cone) {
            for (int v = 1; v < n; ++v) edges.push_back({v, n});
        }
    }
    if (edges.empty()) throw EmptyGraphError("threshold_graph: construction yields no edges");
    return from_facets(n, std::move(edges));
}

/// Compact description of a shifted family: the Gale-maximal generators.
struct GaleGenerators {
    std::vector<Facet> generators;   // k-subsets of [1..n], sorted ascending
};

// Componentwise order on sorted k-tuples.
inline bool gale_leq(const Facet& x, const Facet& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > y[i]) return false;
    }
    return true;
}

// All k-subsets Gale-dominated by some generator; the order ideal these
// generators span. The result is shifted under the identity labeling.
inline KFamily shifted_from_generators(int n, const GaleGenerators& g) {
    if (g.generators.empty()) throw RangeError("shifted_from_generators: no generators");
    const std::size_t k = g.generators.front().size();
    for (const auto& gen : g.generators) {
        if (gen.size() != k) throw PurityError("shifted_from_generators: generator cardinalities differ");
        for (int v : gen) {
            if (v < 1 || v > n) throw RangeError("shifted_from_generators: generator vertex out of range");
        }
    }
    std::vector<Facet> facets;
    for (auto& sub : all_k_subsets(n, static_cast<int>(k))) {
        for (const auto& gen : g.generators) {
            if (gale_leq(sub, gen)) {
                facets.push_back(sub);
                break;
            }
        }
    }
    return from_facets(n, std::move(facets));
}

// Random antichain of generators, then the ideal they span. Deterministic
// per seed; the sampling distribution is unspecified and kept simple.
inline KFamily random_shifted(int n, int k, Seed seed) {
    if (k < 1 || n < k) throw RangeError("random_shifted: need n >= k >= 1");
    detail::Rng rng(seed);
    const int count = rng.pick(1, 3);
    std::vector<Facet> gens;
    for (int i = 0; i < count; ++i) gens.push_back(rng.k_subset(n, k));
    // prune non-maximal generators
    std::vector<Facet> maximal;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (i == j) continue;
            if (gens[i] == gens[j] && j < i) { dominated = true; break; }
            if (gens[i] != gens[j] && gale_leq(gens[i], gens[j])) { dominated = true; break; }
        }
        if (!dominated) maximal.push_back(gens[i]);
    }
    return shifted_from_generators(n, GaleGenerators{std::move(maximal)});
}

// Leaf attachment: each facet after the first shares k-1 vertices with an
// existing facet and brings one fresh vertex. Plain attachment is not
// enough (three children of one base can leave a leafless subfamily), so
// each step keeps only candidates under which the family stays a tree.
// A twin of an existing facet always qualifies, so the retries terminate.
inline KFamily random_tree(int n_facets, int k, Seed seed) {
    if (n_facets < 1) throw RangeError("random_tree: need at least one facet");
    if (k < 2) throw RangeError("random_tree: need k >= 2");
    detail::Rng rng(seed);
    std::vector<Facet> facets;
    Facet first(static_cast<std::size_t>(k));
    for (int v = 1; v <= k; ++v) first[static_cast<std::size_t>(v - 1)] = v;
    facets.push_back(first);
    int n = k;
    for (int i = 1; i < n_facets; ++i) {
        while (true) {
            const Facet& base = facets[static_cast<std::size_t>(rng.pick(0, i - 1))];
            const int drop = rng.pick(0, k - 1);
            Facet f;
            for (int j = 0; j < k; ++j) {
                if (j != drop) f.push_back(base[static_cast<std::size_t>(j)]);
            }
            f.push_back(n + 1);
            std::sort(f.begin(), f.end());
            facets.push_back(std::move(f));
            if (is_simplicial_tree(from_facets(n + 1, facets))) {
                ++n;
                break;
            }
            facets.pop_back();
        }
    }
    return from_facets(n, std::move(facets));
}

// For k = 2 the graph cycle; for k > 2 the (k-2)-fold simplicial cone over
// it. The ridge graph stays the len-cycle either way.
inline KFamily cycle_family(int len, int k) {
    if (len < 3) throw RangeError("cycle_family: need len >= 3");
    if (k < 2) throw RangeError("cycle_family: need k >= 2");
    std::vector<Facet> edges;
    for (int v = 1; v < len; ++v) edges.push_back({v, v + 1});
    edges.push_back({1, len});
    KFamily s = from_facets(len, std::move(edges));
    for (int i = 2; i < k; ++i) s = cone(s);
    return s;
}

} // namespace kfam
