#pragma once

// Generalized Schur functions S_nu(x_1..x_m) for arbitrary integer vectors.

#include <cstdint>
#include <span>
#include <vector>

#include "ospchar/laurent_series.hpp"

namespace ospchar {

/// S_nu = sign * (x_1...x_m)^shift * S_{dominant - shift}, or zero.
struct StraightenedSchur {
    bool zero = false;
    int sign = 1;
    std::vector<std::int64_t> dominant;
    std::int64_t shift = 0;

    std::vector<std::int64_t> partition() const;
};

/// Sorts nu + rho_gl (rho_gl = (m-1, ..., 1, 0)) into strictly decreasing
/// order; a repeated entry means S_nu = 0.
StraightenedSchur straighten(std::span<const std::int64_t> nu);

/// h_l(x_1..x_m); zero for l < 0.
TruncatedSeries complete_h(std::int64_t l, int m, std::int64_t cutoff = TruncatedSeries::kExact);

/// e_l(x_1..x_m); zero outside 0..m.
TruncatedSeries elementary_e(std::int64_t l, int m, std::int64_t cutoff = TruncatedSeries::kExact);

/// Straightens, evaluates the partition Schur function by the Jacobi-Trudi
/// determinant in h's, then applies shift and sign. Exact polynomials are
/// cached per partition; the cache is safe for concurrent use.
TruncatedSeries schur_series(std::span<const std::int64_t> nu, std::int64_t cutoff = TruncatedSeries::kExact);
TruncatedSeries schur_series(std::initializer_list<std::int64_t> nu, std::int64_t cutoff = TruncatedSeries::kExact);

/// S_(nu_1..nu_m)(x) == S_(-nu_m..-nu_1)(x^{-1}) up to x-degree cutoff.
bool schur_inversion_check(std::span<const std::int64_t> nu, std::int64_t cutoff = TruncatedSeries::kExact);

}  // namespace ospchar
