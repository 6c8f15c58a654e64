#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "kfam/checkers.hpp"
#include "kfam/combinatorics.hpp"
#include "kfam/errors.hpp"
#include "kfam/family.hpp"
#include "kfam/spectra.hpp"
#include "kfam/structure.hpp"

namespace kfam {

inline constexpr std::uint64_t kFacetSpaceGuard = 24;   // subset space <= 2^24
inline constexpr int kEnumPermGuard = 8;                // n! permutation tables

/// Enumeration scope: pure k-families on exactly [1..n] (every vertex
/// covered by some facet), optionally ridge-connected, one representative
/// per isomorphism class.
struct EnumSpec {
    int n = 0;
    int k = 0;
    bool connected_only = false;
    std::optional<int> max_facets;
    int jobs = 1;
};

namespace detail {

// Precomputed facet space for bitmask enumeration: the C(n,k) possible
// facets in lex order, their vertex masks, ridge adjacency, and the
// facet-index action of every vertex permutation.
struct FacetSpace {
    int n = 0, k = 0;
    int count = 0;
    std::vector<Facet> facets;
    std::vector<std::uint32_t> vertex_mask;          // over vertices 0..n-1
    std::vector<std::uint32_t> ridge_adj;            // over facet indices
    std::vector<std::vector<std::uint8_t>> perm_map; // perm -> facet index map

    explicit FacetSpace(int n_, int k_) : n(n_), k(k_) {
        if (k < 1 || n < k) throw RangeError("enumeration: need n >= k >= 1");
        const std::uint64_t c = binom_u64(static_cast<std::uint64_t>(n),
                                          static_cast<std::uint64_t>(k));
        if (c > kFacetSpaceGuard) throw SizeError("enumeration: C(n,k) exceeds the subset-space guard");
        if (n > kEnumPermGuard) throw SizeError("enumeration: n exceeds the permutation-table guard");
        facets = all_k_subsets(n, k);
        count = static_cast<int>(facets.size());
        vertex_mask.resize(static_cast<std::size_t>(count));
        std::map<Facet, int> index;
        for (int i = 0; i < count; ++i) {
            std::uint32_t m = 0;
            for (int v : facets[static_cast<std::size_t>(i)]) m |= 1u << (v - 1);
            vertex_mask[static_cast<std::size_t>(i)] = m;
            index[facets[static_cast<std::size_t>(i)]] = i;
        }
        ridge_adj.assign(static_cast<std::size_t>(count), 0);
        for (int i = 0; i < count; ++i) {
            for (int j = i + 1; j < count; ++j) {
                const auto inter = vertex_mask[static_cast<std::size_t>(i)] &
                                   vertex_mask[static_cast<std::size_t>(j)];
                if (std::popcount(inter) == k - 1) {
                    ridge_adj[static_cast<std::size_t>(i)] |= 1u << j;
                    ridge_adj[static_cast<std::size_t>(j)] |= 1u << i;
                }
            }
        }
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
        do {
            std::vector<std::uint8_t> fmap(static_cast<std::size_t>(count));
            Facet g(static_cast<std::size_t>(k));
            for (int i = 0; i < count; ++i) {
                for (int j = 0; j < k; ++j) {
                    g[static_cast<std::size_t>(j)] =
                        perm[static_cast<std::size_t>(facets[static_cast<std::size_t>(i)]
                                                          [static_cast<std::size_t>(j)] - 1)];
                }
                std::sort(g.begin(), g.end());
                fmap[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(index.at(g));
            }
            perm_map.push_back(std::move(fmap));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::uint32_t full_vertex_mask() const { return (n == 32) ? ~0u : ((1u << n) - 1); }

    bool spanning(std::uint32_t mask) const {
        std::uint32_t u = 0;
        for (std::uint32_t m = mask; m; m &= m - 1) {
            u |= vertex_mask[static_cast<std::size_t>(std::countr_zero(m))];
        }
        return u == full_vertex_mask();
    }

    bool connected(std::uint32_t mask) const {
        if (mask == 0) return false;
        const std::uint32_t start = mask & (~mask + 1);
        std::uint32_t reached = start;
        std::uint32_t frontier = start;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t m = frontier; m; m &= m - 1) {
                next |= ridge_adj[static_cast<std::size_t>(std::countr_zero(m))];
            }
            next &= mask & ~reached;
            reached |= next;
            frontier = next;
        }
        return reached == mask;
    }

    std::uint32_t canonical(std::uint32_t mask) const {
        std::uint32_t best = ~0u;
        for (const auto& fmap : perm_map) {
            std::uint32_t mapped = 0;
            for (std::uint32_t m = mask; m; m &= m - 1) {
                mapped |= 1u << fmap[static_cast<std::size_t>(std::countr_zero(m))];
            }
            best = std::min(best, mapped);
        }
        return best;
    }

    KFamily family_of(std::uint32_t mask) const {
        std::vector<Facet> fs;
        for (std::uint32_t m = mask; m; m &= m - 1) {
            fs.push_back(facets[static_cast<std::size_t>(std::countr_zero(m))]);
        }
        return from_facets(n, std::move(fs));
    }
};

inline int resolve_jobs(int jobs) {
    if (jobs >= 1) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Canonical masks of all isomorphism classes in scope, sorted ascending.
// Workers cover fixed mask ranges and share nothing; the sorted merge
// makes the result independent of the parallelism degree.
inline std::vector<std::uint32_t> canonical_classes(const FacetSpace& fs, const EnumSpec& spec,
                                                    std::uint64_t* masks_examined = nullptr) {
    const std::uint64_t top = 1ull << fs.count;
    const int jobs = resolve_jobs(spec.jobs);
    std::vector<std::vector<std::uint32_t>> found(static_cast<std::size_t>(jobs));
    std::vector<std::thread> threads;
    std::atomic<std::uint64_t> examined{0};
    for (int w = 0; w < jobs; ++w) {
        threads.emplace_back([&, w] {
            std::unordered_set<std::uint32_t> local;
            std::uint64_t seen = 0;
            const std::uint64_t lo = 1 + (top - 1) * static_cast<std::uint64_t>(w) / jobs;
            const std::uint64_t hi = 1 + (top - 1) * static_cast<std::uint64_t>(w + 1) / jobs;
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                ++seen;
                const auto m32 = static_cast<std::uint32_t>(mask);
                if (spec.max_facets && std::popcount(m32) > *spec.max_facets) continue;
                if (!fs.spanning(m32)) continue;
                if (spec.connected_only && !fs.connected(m32)) continue;
                local.insert(fs.canonical(m32));
            }
            found[static_cast<std::size_t>(w)].assign(local.begin(), local.end());
            examined += seen;
        });
    }
    for (auto& t : threads) t.join();
    std::vector<std::uint32_t> all;
    for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (masks_examined) *masks_examined = examined.load();
    return all;
}

} // namespace detail

// One representative per isomorphism class, in deterministic order.
inline void enumerate_families(const EnumSpec& spec,
                               const std::function<void(const KFamily&)>& yield) {
    const detail::FacetSpace fs(spec.n, spec.k);
    for (std::uint32_t mask : detail::canonical_classes(fs, spec)) {
        yield(fs.family_of(mask));
    }
}

inline std::vector<KFamily> enumerate_families(const EnumSpec& spec) {
    std::vector<KFamily> out;
    enumerate_families(spec, [&](const KFamily& s) { out.push_back(s); });
    return out;
}

struct Counterexample {
    KFamily family;           // canonical representative
    std::string checker;
    long long t = 0;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct TightnessRecord {
    KFamily family;
    long long t = 0;
    double slack = 0.0;
};

struct ScanReport {
    std::uint64_t masks_examined = 0;
    std::uint64_t families_scanned = 0;   // isomorphism classes checked
    std::vector<Counterexample> counterexamples;
    std::map<long long, std::vector<TightnessRecord>> tightness_leaders; // per t, ascending slack
    double runtime_seconds = 0.0;

    bool pass() const { return counterexamples.empty(); }
};

enum class ScanChecker { Brouwer, Majorization, Forbidden };

inline ScanChecker scan_checker_from_id(const std::string& id) {
    if (id == "brouwer") return ScanChecker::Brouwer;
    if (id == "majorization") return ScanChecker::Majorization;
    if (id == "forbidden") return ScanChecker::Forbidden;
    throw RangeError("scan: unknown checker id '" + id + "'");
}

namespace detail {

struct ClassResult {
    std::vector<Counterexample> counterexamples;
    std::vector<TightnessRecord> tight;   // smallest-slack record per t
};

inline ClassResult scan_one(const FacetSpace& fs, std::uint32_t mask, ScanChecker checker,
                            const std::vector<long long>& t_values) {
    ClassResult res;
    const KFamily s = fs.family_of(mask);
    const Spectrum spec = spectrum(s);
    const auto dt = (checker == ScanChecker::Majorization)
                        ? conjugate_partition(s) : ConjugatePartition{};
    for (long long t : t_values) {
        if (t > static_cast<long long>(spec.values.size())) continue;
        double lhs = partial_sum(spec.values, t);
        double rhs = 0.0;
        const char* name = "";
        switch (checker) {
            case ScanChecker::Brouwer:
                rhs = brouwer_rhs(s, t);
                name = "brouwer";
                break;
            case ScanChecker::Majorization: {
                for (long long i = 0; i < t && i < static_cast<long long>(dt.size()); ++i) {
                    rhs += dt[static_cast<std::size_t>(i)];
                }
                name = "majorization";
                if (lhs > rhs + kCheckTol && s.k == 2) {
                    throw TheoremViolation("majorization failed for a graph during scan");
                }
                break;
            }
            case ScanChecker::Forbidden:
                if (t <= 1) continue;
                rhs = static_cast<double>(s.k - 1) * static_cast<double>(s.facet_count());
                name = "forbidden";
                break;
        }
        if (lhs > rhs + kCheckTol) {
            res.counterexamples.push_back({s, name, t, lhs, rhs});
        } else {
            res.tight.push_back({s, t, rhs - lhs});
        }
    }
    return res;
}

} // namespace detail

/// Exhaustive scan of every isomorphism class in scope with one checker.
/// Deterministic regardless of the worker count.
inline ScanReport scan(const EnumSpec& spec, ScanChecker checker,
                       std::vector<long long> t_values = {}, int leaders_per_t = 3) {
    const auto t0 = std::chrono::steady_clock::now();
    const detail::FacetSpace fs(spec.n, spec.k);
    ScanReport report;
    const auto classes = detail::canonical_classes(fs, spec, &report.masks_examined);
    report.families_scanned = classes.size();
    if (t_values.empty()) {
        const auto len = static_cast<long long>(binom_u64(
            static_cast<std::uint64_t>(spec.n), static_cast<std::uint64_t>(spec.k - 1)));
        for (long long t = 1; t <= len; ++t) t_values.push_back(t);
    }
    const int jobs = detail::resolve_jobs(spec.jobs);
    std::vector<detail::ClassResult> results(classes.size());
    std::vector<std::thread> threads;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> violation{false};
    std::string violation_msg;
    std::mutex violation_mutex;
    for (int w = 0; w < jobs; ++w) {
        threads.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= classes.size() || violation.load()) break;
                try {
                    results[i] = detail::scan_one(fs, classes[i], checker, t_values);
                } catch (const TheoremViolation& e) {
                    std::lock_guard<std::mutex> lock(violation_mutex);
                    violation = true;
                    violation_msg = e.what();
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    if (violation) throw TheoremViolation(violation_msg);
    // merge in class order: counterexamples first-seen, leaders smallest slack
    for (auto& res : results) {
        for (auto& c : res.counterexamples) report.counterexamples.push_back(std::move(c));
        for (auto& rec : res.tight) {
            auto& lead = report.tightness_leaders[rec.t];
            lead.push_back(std::move(rec));
            std::stable_sort(lead.begin(), lead.end(),
                             [](const TightnessRecord& a, const TightnessRecord& b) {
                                 return a.slack < b.slack;
                             });
            if (static_cast<int>(lead.size()) > leaders_per_t) lead.resize(
                static_cast<std::size_t>(leaders_per_t));
        }
    }
    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace kfam
