#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "kfam/errors.hpp"

namespace kfam {

/// Dense symmetric matrix, row-major.
struct SymMatrix {
    std::size_t n = 0;
    std::vector<double> a;   // n*n

    explicit SymMatrix(std::size_t size = 0) : n(size), a(size * size, 0.0) {}
    double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    double frobenius_norm() const {
        double s = 0.0;
        for (double x : a) s += x * x;
        return std::sqrt(s);
    }
};

namespace detail {

// Overflow-safe sqrt(x^2 + y^2). The naive formula overflows to inf for
// |x| > ~1e154, which happens transiently in the QL shift when an
// off-diagonal entry is tiny; std::hypot is specified to avoid that.
inline double hypot2(double x, double y) { return std::hypot(x, y); }

// Householder reduction to tridiagonal form, accumulating the orthogonal
// transform in z (classic tred2).
inline void tridiagonalize(std::vector<std::vector<double>>& z,
                           std::vector<double>& d, std::vector<double>& e) {
    const std::size_t n = d.size();
    for (std::size_t j = 0; j < n; ++j) d[j] = z[n - 1][j];
    for (std::size_t i = n - 1; i > 0; --i) {
        std::size_t l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (std::size_t k = 0; k <= l; ++k) scale += std::fabs(d[k]);
            if (scale == 0.0) {
                e[i] = d[l];
                for (std::size_t j = 0; j <= l; ++j) {
                    d[j] = z[l][j];
                    z[i][j] = 0.0;
                    z[j][i] = 0.0;
                }
            } else {
                for (std::size_t k = 0; k <= l; ++k) {
                    d[k] /= scale;
                    h += d[k] * d[k];
                }
                double f = d[l];
                double g = (f > 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                d[l] = f - g;
                for (std::size_t j = 0; j <= l; ++j) e[j] = 0.0;
                for (std::size_t j = 0; j <= l; ++j) {
                    f = d[j];
                    z[j][i] = f;
                    g = e[j] + z[j][j] * f;
                    for (std::size_t k = j + 1; k <= l; ++k) {
                        g += z[k][j] * d[k];
                        e[k] += z[k][j] * f;
                    }
                    e[j] = g;
                }
                f = 0.0;
                for (std::size_t j = 0; j <= l; ++j) {
                    e[j] /= h;
                    f += e[j] * d[j];
                }
                double hh = f / (h + h);
                for (std::size_t j = 0; j <= l; ++j) e[j] -= hh * d[j];
                for (std::size_t j = 0; j <= l; ++j) {
                    f = d[j];
                    g = e[j];
                    for (std::size_t k = j; k <= l; ++k) {
                        z[k][j] -= f * e[k] + g * d[k];
                    }
                    d[j] = z[l][j];
                    z[i][j] = 0.0;
                }
            }
        } else {
            e[i] = d[l];
            d[l] = z[l][l];
            z[i][l] = 0.0;
            z[l][i] = 0.0;
        }
        d[i] = h;
    }
    // accumulate transformations
    for (std::size_t i = 0; i < n - 1; ++i) {
        z[n - 1][i] = z[i][i];
        z[i][i] = 1.0;
        std::size_t l = i + 1;
        double h = d[l];
        if (h != 0.0) {
            for (std::size_t k = 0; k <= i; ++k) d[k] = z[k][l] / h;
            for (std::size_t j = 0; j <= i; ++j) {
                double g = 0.0;
                for (std::size_t k = 0; k <= i; ++k) g += z[k][l] * z[k][j];
                for (std::size_t k = 0; k <= i; ++k) z[k][j] -= g * d[k];
            }
        }
        for (std::size_t k = 0; k <= i; ++k) z[k][l] = 0.0;
    }
    for (std::size_t j = 0; j < n; ++j) {
        d[j] = z[n - 1][j];
        z[n - 1][j] = 0.0;
    }
    z[n - 1][n - 1] = 1.0;
    e[0] = 0.0;
}

// Implicit-shift QL iteration on the tridiagonal form (classic tql2).
inline void ql_implicit(std::vector<std::vector<double>>& z,
                        std::vector<double>& d, std::vector<double>& e) {
    const std::size_t n = d.size();
    constexpr int kMaxSweeps = 50;
    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    const double eps = std::pow(2.0, -52.0);
    double f = 0.0, tst1 = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::fabs(d[l]) + std::fabs(e[l]));
        // e[n-1] == 0 by construction, so the scan never needs to look at it;
        // bounding at n-1 keeps the indexing below safe even if e were corrupted.
        std::size_t m = l;
        while (m + 1 < n) {
            if (std::fabs(e[m]) <= eps * tst1) break;
            ++m;
        }
        if (m > l) {
            int iter = 0;
            do {
                if (++iter > kMaxSweeps) {
                    throw ConvergenceError("eigensolver: QL iteration cap exceeded");
                }
                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = hypot2(p, 1.0);
                if (p < 0.0) r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                double dl1 = d[l + 1];
                double h = g - d[l];
                for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
                f += h;
                p = d[m];
                double c = 1.0, c2 = c, c3 = c;
                double el1 = e[l + 1], s = 0.0, s2 = 0.0;
                for (std::size_t i = m - 1; ; --i) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = hypot2(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for (std::size_t k = 0; k < n; ++k) {
                        h = z[k][i + 1];
                        z[k][i + 1] = s * z[k][i] + c * h;
                        z[k][i] = c * z[k][i] - s * h;
                    }
                    if (i == l) break;
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::fabs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0.0;
    }
}

} // namespace detail

struct EigenDecomposition {
    std::vector<double> values;               // ascending
    std::vector<std::vector<double>> vectors; // vectors[k][i]: i-th component of k-th pair
    double max_residual = 0.0;                // max_k ||A v_k - lambda_k v_k||_2
};

/// Full symmetric eigendecomposition: Householder tridiagonalization
/// followed by implicit-shift QL, with residuals checked against the input.
inline EigenDecomposition symmetric_eigen(const SymMatrix& m,
                                          double residual_factor = 1e-10) {
    const std::size_t n = m.n;
    EigenDecomposition out;
    if (n == 0) return out;
    std::vector<std::vector<double>> z(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) z[i][j] = m.at(i, j);
    std::vector<double> d(n), e(n, 0.0);
    if (n == 1) {
        d[0] = z[0][0];
        z[0][0] = 1.0;
    } else {
        detail::tridiagonalize(z, d, e);
        detail::ql_implicit(z, d, e);
    }
    // sort ascending, carrying columns along
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
    out.values.resize(n);
    out.vectors.assign(n, std::vector<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = d[order[k]];
        for (std::size_t i = 0; i < n; ++i) out.vectors[k][i] = z[i][order[k]];
    }
    // residual check (an explicit finiteness test first: NaN compares false
    // against any bound, so it would otherwise slip through)
    for (double v : out.values) {
        if (!std::isfinite(v)) {
            throw ConvergenceError("eigensolver: non-finite eigenvalue");
        }
    }
    const double norm = m.frobenius_norm();
    for (std::size_t k = 0; k < n; ++k) {
        double r2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) acc += m.at(i, j) * out.vectors[k][j];
            acc -= out.values[k] * out.vectors[k][i];
            r2 += acc * acc;
        }
        out.max_residual = std::max(out.max_residual, std::sqrt(r2));
    }
    if (norm > 0.0 && out.max_residual > residual_factor * norm) {
        throw ConvergenceError("eigensolver: residual bound unmet");
    }
    return out;
}

} // namespace kfam
