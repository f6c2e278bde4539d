#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "optbench/rng.hpp"

namespace optbench::suite {

/// Draws a random orthogonal matrix: QR factorization of a standard Gaussian
/// matrix via modified Gram-Schmidt. R's diagonal is positive by
/// construction, which fixes the column signs and makes the distribution
/// rotation-invariant. Returned row-major, dim x dim.
inline std::vector<double> random_orthogonal(std::size_t dim, Xoshiro256pp& rng) {
    const std::size_t n = dim;
    // column-major working copy
    std::vector<double> q(n * n);
    for (auto& v : q) v = rng.normal();

    auto col = [&](std::size_t j) { return q.begin() + static_cast<std::ptrdiff_t>(j * n); };

    for (std::size_t j = 0; j < n; ++j) {
        // orthogonalize against previous columns
        for (std::size_t k = 0; k < j; ++k) {
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += col(k)[i] * col(j)[i];
            for (std::size_t i = 0; i < n; ++i) col(j)[i] -= dot * col(k)[i];
        }
        double norm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm2 += col(j)[i] * col(j)[i];
        double norm = std::sqrt(norm2);
        while (norm < 1e-12) {
            // near-dependent draw; regenerate the column (probability ~0)
            for (std::size_t i = 0; i < n; ++i) col(j)[i] = rng.normal();
            for (std::size_t k = 0; k < j; ++k) {
                double dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += col(k)[i] * col(j)[i];
                for (std::size_t i = 0; i < n; ++i) col(j)[i] -= dot * col(k)[i];
            }
            norm2 = 0.0;
            for (std::size_t i = 0; i < n; ++i) norm2 += col(j)[i] * col(j)[i];
            norm = std::sqrt(norm2);
        }
        for (std::size_t i = 0; i < n; ++i) col(j)[i] /= norm;
    }

    // transpose column-major Q into a row-major result
    std::vector<double> out(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out[r * n + c] = q[c * n + r];
    return out;
}

/// y = M x for a row-major square matrix.
inline void matvec(std::span<const double> m, std::span<const double> x, std::span<double> y) {
    const std::size_t n = x.size();
    for (std::size_t r = 0; r < n; ++r) {
        double acc = 0.0;
        const double* row = m.data() + r * n;
        for (std::size_t c = 0; c < n; ++c) acc += row[c] * x[c];
        y[r] = acc;
    }
}

} // namespace optbench::suite
