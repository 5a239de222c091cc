#pragma once

// Characters of finite-dimensional irreducibles as integer combinations of
// generalized Verma characters, with finitely many infinite alternating
// families along eps - delta_i, and the C_lambda generating series.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ospchar/laurent_series.hpp"
#include "ospchar/signed_permutation.hpp"
#include "ospchar/weight.hpp"

namespace ospchar {

struct VermaTerm {
    std::int64_t coeff = 0;
    Weight weight;
    friend bool operator==(const VermaTerm&, const VermaTerm&) = default;
};

/// Sum over j in [j_lo, j_hi] of scale * base_sign * (-1)^j * M_{member(j)},
/// member(j) = base + j (eps - delta_slot). j_hi empty means unbounded.
struct VermaFamily {
    Weight base;
    int slot = 0;  // 1-based
    std::int64_t j_lo = 0;
    std::optional<std::int64_t> j_hi;
    int base_sign = 1;
    std::int64_t scale = 1;

    Weight member(std::int64_t j) const;
    std::int64_t coeff(std::int64_t j) const;
    /// Largest j whose member has lowest x-degree <= cutoff, clipped to j_hi.
    std::int64_t last_j_within(std::int64_t cutoff) const;
    bool empty() const { return j_hi && *j_hi < j_lo; }

    friend bool operator==(const VermaFamily&, const VermaFamily&) = default;
};

struct VermaExpansion {
    int rank = 0;
    std::vector<VermaTerm> finite;
    std::vector<VermaFamily> families;

    /// this += k * other.
    void merge(const VermaExpansion& other, std::int64_t k = 1);
    /// Collects equal finite weights and equal families, drops zeros, sorts.
    void normalize();
    /// Net coefficient of M_nu, families included.
    std::int64_t coefficient_of(const Weight& nu) const;
};

/// Reasons an expansion is malformed: a non-g0-dominant member, a bounded
/// family whose members leave the g0-dominant range, an unbounded family off
/// the last slot, or members from different blocks. nullopt when valid.
std::optional<std::string> validate_expansion(const VermaExpansion& e);

/// Seeded sign/limit corruptions of the tail formula, used to show the
/// verification suite notices them.
enum class Mutation {
    none,
    parity_sign,      // sign taken from sigma alone, dropping tau_i
    j_lo_formula,     // lower limit max(0, -1/2 - sigma(lambda+rho)_{i-1})
    tau_orientation,  // sigma * tau_i in place of tau_i * sigma
    upper_limit,      // upper limit +3/2 - tau_i sigma(lambda+rho)_{i+1}
};

const char* mutation_name(Mutation m);
std::optional<Mutation> parse_mutation(std::string_view name);

/// Signed terms (parity(sigma), sigma(lambda+rho) - rho) over Gamma_m.
VermaExpansion gamma_terms(const Weight& lambda);

/// Typical dominant lambda: the 2^m Gamma_m terms.
VermaExpansion expansion_typical(const Weight& lambda);

/// Tail atypical lambda: one family per sigma in Gamma_{m-1} and slot i from
/// flat_index(sigma, lambda) to m.
VermaExpansion expansion_tail(const Weight& lambda, Mutation mutation = Mutation::none);

/// phi(lambda) = lambda_tail(lambda): tail part of the tail weight plus the
/// Gamma_m terms of lambda.
VermaExpansion expansion_boundary(const Weight& lambda, Mutation mutation = Mutation::none);

/// theta >= 1: Gamma_m(lambda) - L_{phi(lambda)}, minus one more tail part
/// when phi^2(lambda) is the tail weight.
VermaExpansion expansion_nontail_recursive(const Weight& lambda, Mutation mutation = Mutation::none);

/// theta >= 1: sum_i (-1)^i Gamma_m(phi^i lambda) + 2 (-1)^theta tail part.
VermaExpansion expansion_nontail_closed(const Weight& lambda, Mutation mutation = Mutation::none);

/// Dispatch on classify(lambda).
VermaExpansion irreducible_expansion(const Weight& lambda, Mutation mutation = Mutation::none);

/// Sum of the Verma characters up to x-degree D. Members are evaluated as
/// A times the Weyl-quotient value of their g0 part, so malformed (mutated)
/// expansions still produce a series.
TruncatedSeries expansion_to_series(const VermaExpansion& e, std::int64_t cutoff);

/// Finite terms plus family members with j <= j_max, collected and sorted.
std::vector<VermaTerm> materialize(const VermaExpansion& e, std::int64_t j_max);

/// Whether c_lambda_series accepts lambda.
bool c_series_applicable(const Weight& lambda);

/// C_lambda as the partition sum over subsets {j_1 < ... < j_p} of
/// {1..m-1}, for tail lambda or dominant lambda with lambda_m = 1,
/// lambda_0 = 0. Throws std::invalid_argument otherwise.
TruncatedSeries c_lambda_series(const Weight& lambda, std::int64_t cutoff);

/// The same series indexed by Gamma_{m-1}: Schur functions at
/// sigma(lambda+rho) - rho - j delta_m in the inverted variables.
TruncatedSeries c_lambda_series_gamma_form(const Weight& lambda, std::int64_t cutoff);

}  // namespace ospchar
