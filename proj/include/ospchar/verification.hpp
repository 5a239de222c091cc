#pragma once

// Identity checks comparing independent series computations, and a batch
// runner over bounded weight sets.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ospchar/character_formulae.hpp"
#include "ospchar/laurent_series.hpp"
#include "ospchar/weight.hpp"

namespace ospchar {

struct VerificationReport {
    std::string identity;
    int m = 0;
    std::optional<Weight> lambda;
    std::int64_t cutoff = 0;
    bool pass = false;
    std::optional<Discrepancy> first_discrepancy;
    /// Comparison window on success; the nature of the failure otherwise.
    std::string detail;
    std::chrono::duration<double> elapsed{};
};

/// prod(1-x_i) prod_{i<j}(1-x_i x_j) / prod(1+x_i y)(1+x_i y^-1) against the
/// signed sum of S_(j,mu) * string(j) over self-conjugate mu with arms <= m-2.
VerificationReport check_trivial_identity(int m, std::int64_t cutoff);

/// Kac's formula against the Gamma_m expansion, for typical dominant lambda.
VerificationReport check_typical_dual_route(const Weight& lambda, std::int64_t cutoff);

/// M_lambda * ch(natural) against the sum of M_mu over the even neighbour set.
VerificationReport check_verma_tensor(const Weight& lambda, std::int64_t cutoff);

/// C_lambda (partition sum and Gamma form) against the Verma expansion.
VerificationReport check_c_equals_f(const Weight& lambda, std::int64_t cutoff, Mutation mutation = Mutation::none);

/// Non-negativity, highest-weight coefficient 1, nothing above lambda, and
/// Weyl-group invariance of the computed character.
VerificationReport check_irreducible_sanity(const Weight& lambda, std::int64_t cutoff,
                                            Mutation mutation = Mutation::none);

/// ch L_lambda * ch(natural) against the sum of ch L_mu over the neighbour
/// set, for tail lambda, every summand from its own expansion.
VerificationReport check_tensor_decomposition_tail(const Weight& lambda, std::int64_t cutoff,
                                                   Mutation mutation = Mutation::none);

/// Recursive and closed non-tail expansions: equal after materializing
/// families to j <= j_max, and equal series up to the cutoff.
VerificationReport check_cross_path(const Weight& lambda, std::int64_t cutoff, std::int64_t j_max = 12,
                                    Mutation mutation = Mutation::none);

struct SuiteConfig {
    int m_min = 1;
    int m_max = 2;
    std::int64_t max_height = 3;
    std::int64_t cutoff = 6;
    std::vector<std::string> suites{"all"};
    /// 0: read OSPCHAR_THREADS, default 1.
    unsigned threads = 0;
    Mutation mutation = Mutation::none;
};

/// trivial, typical, verma-tensor, c-equals-f, sanity, tensor-tail,
/// cross-path.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Runs the selected suites; report order depends only on the config.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

/// One human-readable line.
std::string report_line(const VerificationReport& r);

}  // namespace ospchar
