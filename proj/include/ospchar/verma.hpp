#pragma once

// Characters of g0-irreducibles and generalized Verma modules, the factor
// A = ch U(u^-), and Kac's typical character formula.

#include <cstdint>

#include "ospchar/laurent_series.hpp"
#include "ospchar/weight.hpp"

namespace ospchar {

/// prod(1 + x_i y)(1 + x_i y^-1) / [prod(1 - x_i) prod_{i<j}(1 - x_i x_j)]
/// up to x-degree D. Memoized per (m, D).
TruncatedSeries universal_factor(int m, std::int64_t cutoff);

/// prod(1 + x_i)(1 + x_i y)(1 + x_i y^-1) / prod_{i<=j}(1 - x_i x_j): the
/// same series as universal_factor, expanded factor by factor.
TruncatedSeries odd_even_factor(int m, std::int64_t cutoff);

/// y^n + y^(n-1) + ... + y^-n for n >= 0. For n < 0 the straightened value
/// of the same Weyl quotient: 0 at n = -1, otherwise -string(-n - 2).
TruncatedSeries sl2_string(int m, std::int64_t n);

/// Character of the g0-irreducible of highest weight nu (an exact Laurent
/// polynomial). Throws std::invalid_argument unless nu is g0-dominant.
TruncatedSeries g0_character(const Weight& nu);

/// The Weyl-quotient value S_{(-nu_m..-nu_1)}(x) * string(nu_0) for any
/// integral nu; equals g0_character on g0-dominant weights.
TruncatedSeries straightened_g0_character(const Weight& nu);

/// A * ch L0(nu) up to x-degree D. Throws unless nu is integral g0-dominant.
TruncatedSeries verma_character(const Weight& nu, std::int64_t cutoff);

/// Kac's formula for a typical dominant weight: the full W = C_m x Z_2
/// alternant, divided exactly by (1 - y^-1) prod_{i<j}(1 - x_i/x_j), times
/// odd_even_factor. Throws std::invalid_argument on atypical or non-dominant
/// input.
TruncatedSeries kac_typical_character(const Weight& lambda, std::int64_t cutoff);

/// 1 + sum(x_i + x_i^-1) + y + y^-1.
TruncatedSeries natural_character(int m);

}  // namespace ospchar
