#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "kfam/combinatorics.hpp"
#include "kfam/errors.hpp"
#include "kfam/family.hpp"
#include "kfam/generators.hpp"
#include "kfam/spectra.hpp"
#include "kfam/structure.hpp"

namespace kfam {

inline constexpr double kCheckTol = 1e-8;

// Canonical digests cost n! relabelings; 8! = 40320 is cheap enough to
// attach to every check report, 9! and up is not.
inline constexpr int kDigestGuard = 8;

/// One evaluated inequality/equality instance.
struct CheckReport {
    std::string name;
    long long t = 0;          // 0 when not applicable
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;       // lhs <= rhs + tol
    double slack = 0.0;       // rhs - lhs
    bool tight = false;       // |slack| <= tol
    bool saturated = false;   // t beyond spectrum length; lhs is the trace
};

struct CheckSuite {
    std::string digest;       // canonical hash of the family, when cheap
    std::vector<CheckReport> reports;
    bool verdict = true;      // conjunction of holds flags
};

namespace detail {

inline CheckReport make_report(std::string name, long long t, double lhs, double rhs,
                               bool saturated = false) {
    CheckReport r;
    r.name = std::move(name);
    r.t = t;
    r.lhs = lhs;
    r.rhs = rhs;
    r.holds = lhs <= rhs + kCheckTol;
    r.slack = rhs - lhs;
    r.tight = std::fabs(r.slack) <= kCheckTol;
    r.saturated = saturated;
    return r;
}

inline void finish(CheckSuite& suite) {
    suite.verdict = true;
    for (const auto& r : suite.reports) suite.verdict = suite.verdict && r.holds;
}

} // namespace detail

inline double brouwer_rhs(const KFamily& s, long long t) {
    return static_cast<double>(s.k - 1) * static_cast<double>(s.facet_count()) +
           binom_real(t + s.k - 1, s.k);
}

// sum_{i<=t} lambda_i <= (k-1) f_{k-1} + C(t+k-1, k); for k = 2 this is
// the graph inequality with e edges.
inline CheckReport check_brouwer(const Spectrum& spec, const KFamily& s, long long t) {
    if (t < 1) throw RangeError("check_brouwer: t must be >= 1");
    const bool saturated = t > static_cast<long long>(spec.values.size());
    const double lhs = partial_sum(spec.values, t);
    return detail::make_report("brouwer", t, lhs, brouwer_rhs(s, t), saturated);
}

inline CheckReport check_brouwer(const KFamily& s, long long t) {
    return check_brouwer(spectrum(s), s, t);
}

inline CheckSuite check_brouwer_all(const KFamily& s) {
    CheckSuite suite;
    if (s.n <= kDigestGuard) suite.digest = canonical_digest(s);
    const Spectrum spec = spectrum(s);
    for (long long t = 1; t <= static_cast<long long>(spec.values.size()); ++t) {
        suite.reports.push_back(check_brouwer(spec, s, t));
    }
    detail::finish(suite);
    return suite;
}

// Laplacian spectrum vs conjugate partition, partial sums at every t.
// For k = 2 a violation contradicts a theorem and throws; for k > 2 it is
// a finding against an open conjecture and stays in the report.
inline CheckSuite check_majorization(const KFamily& s) {
    CheckSuite suite;
    if (s.n <= kDigestGuard) suite.digest = canonical_digest(s);
    const Spectrum spec = spectrum(s);
    const auto dt = conjugate_partition(s);
    double lhs = 0.0, rhs = 0.0;
    for (long long t = 1; t <= static_cast<long long>(spec.values.size()); ++t) {
        lhs += spec.values[static_cast<std::size_t>(t - 1)];
        if (t <= static_cast<long long>(dt.size())) rhs += dt[static_cast<std::size_t>(t - 1)];
        auto r = detail::make_report("majorization", t, lhs, rhs);
        if (!r.holds && s.k == 2) {
            throw TheoremViolation("majorization failed for a graph at t = " + std::to_string(t) +
                                   " (lhs " + std::to_string(lhs) + " rhs " + std::to_string(rhs) + ")");
        }
        suite.reports.push_back(std::move(r));
    }
    detail::finish(suite);
    return suite;
}

// Duval-Reiner equality for shifted families; the caller asserts
// shiftedness. Any partial-sum mismatch is a theorem violation.
inline CheckSuite check_dr_equality(const KFamily& s) {
    CheckSuite suite;
    if (s.n <= kDigestGuard) suite.digest = canonical_digest(s);
    const Spectrum spec = spectrum(s);
    const auto dt = conjugate_partition(s);
    double lhs = 0.0, rhs = 0.0, worst = 0.0;
    long long worst_t = 0;
    for (long long t = 1; t <= static_cast<long long>(spec.values.size()); ++t) {
        lhs += spec.values[static_cast<std::size_t>(t - 1)];
        if (t <= static_cast<long long>(dt.size())) rhs += dt[static_cast<std::size_t>(t - 1)];
        auto r = detail::make_report("dr-equality", t, lhs, rhs);
        r.holds = r.tight;   // equality claim
        if (std::fabs(rhs - lhs) > worst) { worst = std::fabs(rhs - lhs); worst_t = t; }
        suite.reports.push_back(std::move(r));
    }
    if (worst > kCheckTol) {
        throw TheoremViolation("Duval-Reiner equality failed, worst t = " + std::to_string(worst_t) +
                               " with gap " + std::to_string(worst));
    }
    detail::finish(suite);
    return suite;
}

// Tree bound: sum_{i<=t} lambda_i <= (k-1) f_{k-1} + k t - k + 1.
inline CheckReport check_tree_bound(const KFamily& s, long long t) {
    if (t < 1) throw RangeError("check_tree_bound: t must be >= 1");
    if (!is_simplicial_tree(s)) throw NotATreeError("check_tree_bound: family is not a simplicial tree");
    const Spectrum spec = spectrum(s);
    const double lhs = partial_sum(spec.values, t);
    const double rhs = static_cast<double>(s.k - 1) * static_cast<double>(s.facet_count()) +
                       static_cast<double>(s.k) * static_cast<double>(t) - s.k + 1;
    if (rhs > brouwer_rhs(s, t) + kCheckTol) {
        throw TheoremViolation("tree bound exceeds the Brouwer bound at t = " + std::to_string(t));
    }
    return detail::make_report("tree-bound", t, lhs, rhs,
                               t > static_cast<long long>(spec.values.size()));
}

// Threshold-graph equality at t = c (cone-vertex count):
// sum_{i<=c} lambda_i = e + C(c+1, 2).
inline CheckReport check_threshold_cone_equality(const ThresholdSeq& seq) {
    const int c = cone_count(seq);
    if (c < 1) throw RangeError("check_threshold_cone_equality: need at least one cone step");
    const KFamily g = threshold_graph(seq);
    const Spectrum spec = spectrum(g);
    const double lhs = partial_sum(spec.values, c);
    const double rhs = static_cast<double>(g.facet_count()) + binom_real(c + 1, 2);
    auto r = detail::make_report("threshold-cone", c, lhs, rhs);
    if (!r.tight) {
        throw TheoremViolation("threshold cone-vertex equality failed at t = " + std::to_string(c));
    }
    return r;
}

// Subfamily disqualifier: sum_{i<=t} lambda_i(S) <= (k-1) f_{k-1}(S).
// A family satisfying it cannot sit inside a minimum-cardinality
// counterexample to the t-th partial-sum inequality.
inline CheckReport check_forbidden_lemma(const KFamily& s, long long t) {
    if (t <= 1) throw RangeError("check_forbidden_lemma: t must be > 1");
    const Spectrum spec = spectrum(s);
    const double lhs = partial_sum(spec.values, t);
    const double rhs = static_cast<double>(s.k - 1) * static_cast<double>(s.facet_count());
    return detail::make_report("forbidden", t, lhs, rhs,
                               t > static_cast<long long>(spec.values.size()));
}

} // namespace kfam
