#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "kfam/combinatorics.hpp"
#include "kfam/eigensolver.hpp"
#include "kfam/errors.hpp"
#include "kfam/family.hpp"

namespace kfam {

inline constexpr std::uint64_t kMatrixSizeGuard = 5000;
inline constexpr double kEigenClampTol = 1e-9;

/// Signed boundary matrix of the top-dimensional faces. Rows cover ALL
/// (k-1)-subsets of [1..n] in lexicographic order, present in the family
/// or not; this fixes the spectrum length at C(n,k-1) and makes the
/// complement and cone identities hold with zero eigenvalues for the
/// missing rows. Stored by sparse columns.
struct BoundaryMatrix {
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    // per facet: (row index, sign) with sign in {-1,+1}
    std::vector<std::vector<std::pair<std::uint64_t, int>>> columns;
};

inline BoundaryMatrix boundary_matrix(const KFamily& s) {
    BoundaryMatrix b;
    b.rows = binom_u64(static_cast<std::uint64_t>(s.n),
                       static_cast<std::uint64_t>(s.k - 1));
    b.cols = static_cast<std::uint64_t>(s.facets.size());
    b.columns.reserve(s.facets.size());
    for (const auto& f : s.facets) {
        std::vector<std::pair<std::uint64_t, int>> col;
        col.reserve(f.size());
        Facet face(f.size() - 1);
        for (std::size_t j = 0; j < f.size(); ++j) {
            // omit the j-th smallest vertex; sign (-1)^j
            std::size_t w = 0;
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (i == j) continue;
                face[w++] = f[i];
            }
            const int sign = (j % 2 == 0) ? 1 : -1;
            col.emplace_back(subset_lex_rank(face, s.n), sign);
        }
        b.columns.push_back(std::move(col));
    }
    return b;
}

inline SymMatrix laplacian(const KFamily& s) {
    const BoundaryMatrix b = boundary_matrix(s);
    if (b.rows > kMatrixSizeGuard) {
        throw SizeError("laplacian: C(n,k-1) exceeds the dense-matrix guard");
    }
    SymMatrix l(static_cast<std::size_t>(b.rows));
    for (const auto& col : b.columns) {
        for (const auto& [ri, si] : col) {
            for (const auto& [rj, sj] : col) {
                l.at(static_cast<std::size_t>(ri), static_cast<std::size_t>(rj)) +=
                    static_cast<double>(si * sj);
            }
        }
    }
    return l;
}

struct Spectrum {
    std::vector<double> values;   // descending, length C(n,k-1)
    double residual = 0.0;        // achieved max ||Lv - lambda v||
};

inline Spectrum spectrum(const KFamily& s) {
    const SymMatrix l = laplacian(s);
    Spectrum out;
    if (l.n == 0) return out;
    EigenDecomposition eig = symmetric_eigen(l);
    out.residual = eig.max_residual;
    out.values.assign(eig.values.rbegin(), eig.values.rend());
    for (double& v : out.values) {
        if (v < 0.0) {
            if (v < -kEigenClampTol) {
                throw ConvergenceError("spectrum: eigenvalue below the clamp tolerance");
            }
            v = 0.0;
        }
    }
    return out;
}

inline double partial_sum(const std::vector<double>& values, long long t) {
    double s = 0.0;
    const long long m = std::min<long long>(t, static_cast<long long>(values.size()));
    for (long long i = 0; i < m; ++i) s += values[static_cast<std::size_t>(i)];
    return s;
}

} // namespace kfam
