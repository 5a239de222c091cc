#pragma once

// Weights of osp(3|2m) in the delta-epsilon basis, the invariant form, rho,
// dominance and atypicality, and the block combinatorics (tail weight, the
// descent map phi, theta, neighbour sets, central-character keys).
//
// Index convention: coordinate storage is 0-based, but every value that names
// a root or a slot delta_t in the public API (atypical roots, slots of
// families, tau_i, flat_index) is 1-based, as in the usual notation.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ospchar/half_int.hpp"

namespace ospchar {

class Weight {
public:
    Weight() = default;
    Weight(std::vector<HalfInt> delta, HalfInt eps);

    static Weight zero(int m);
    /// delta_i, 1-based.
    static Weight delta_unit(int m, int i);
    static Weight epsilon(int m);
    static Weight integral(std::span<const std::int64_t> delta, std::int64_t eps);
    static Weight integral(std::initializer_list<std::int64_t> delta, std::int64_t eps);

    int rank() const { return static_cast<int>(delta_.size()); }
    std::span<const HalfInt> deltas() const { return delta_; }
    /// Coefficient of delta_i, 1-based.
    HalfInt delta(int i) const { return delta_.at(static_cast<std::size_t>(i - 1)); }
    HalfInt eps() const { return eps_; }

    void set_delta(int i, HalfInt v) { delta_.at(static_cast<std::size_t>(i - 1)) = v; }
    void set_eps(HalfInt v) { eps_ = v; }

    bool is_integral() const;
    /// Sum of the delta coefficients.
    HalfInt delta_sum() const;

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(std::int64_t k, const Weight& w);

    friend bool operator==(const Weight&, const Weight&) = default;
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

    /// "l1,...,lm;l0"; half-integers print as "p/2".
    std::string str() const;

private:
    std::vector<HalfInt> delta_;
    HalfInt eps_;
};

/// Parses "l1,...,lm;l0" into an integral weight of rank m. Throws
/// std::invalid_argument naming the offending token.
Weight parse_weight(std::string_view text, int m);

/// (a, b) with (delta_i, delta_j) = -[i == j], (eps, eps) = 1, cross terms 0.
HalfInt bilinear_form(const Weight& a, const Weight& b);

/// (m-3/2, m-5/2, ..., 1/2, -1/2; 1/2).
Weight rho(int m);

/// lambda + rho.
Weight rho_shifted(const Weight& lambda);

/// Sum of absolute values of all coordinates.
HalfInt height(const Weight& w);

/// Integral weights with a finite-dimensional irreducible module.
bool is_dominant_integral(const Weight& lambda);

/// Returns a description of the first violated dominance condition, or
/// nullopt when lambda is dominant integral.
std::optional<std::string> dominance_violation(const Weight& lambda);

/// Highest weights of finite-dimensional irreducible gl(m) + sl(2) modules.
bool is_g0_dominant(const Weight& nu);

/// The isotropic odd root delta_slot + sign * eps.
struct AtypicalRoot {
    int slot = 0;   // 1-based
    int sign = 0;   // +1 or -1
    friend bool operator==(const AtypicalRoot&, const AtypicalRoot&) = default;
};

/// All isotropic odd roots alpha with (w + rho, alpha) = 0.
std::vector<AtypicalRoot> atypical_roots(const Weight& w);

struct Classification {
    bool dominant = false;
    bool typical = true;
    std::vector<AtypicalRoot> atypical_roots;
    bool tail = false;
    /// Sorted absolute values of the rho-shifted delta coordinates, omitting
    /// the designated atypical slot. Empty for typical weights.
    std::vector<HalfInt> atypical_type;
    /// Length of the phi-chain minus one; set for non-tail atypical weights.
    std::optional<std::int64_t> theta;
};

/// Requires a dominant integral weight; throws std::invalid_argument otherwise.
Classification classify(const Weight& lambda);

/// The designated atypical root of an atypical dominant weight: delta_m - eps
/// for tail weights, otherwise the unique delta_k + eps.
AtypicalRoot primary_atypical_root(const Weight& lambda);

/// Atypical type at the given root.
std::vector<HalfInt> atypical_type(const Weight& w, const AtypicalRoot& root);

bool is_tail_atypical(const Weight& lambda);

/// lambda_k = ... = lambda_m = 1 and lambda_0 = m - k for the
/// (delta_k + eps)-atypical dominant weight lambda.
bool is_boundary_atypical(const Weight& lambda);

/// The unique tail weight in the block of an atypical dominant weight.
Weight lambda_tail(const Weight& lambda);

/// One step of block descent for a non-tail atypical dominant weight.
Weight phi(const Weight& lambda);

/// The n >= 0 with phi^{n+1}(lambda) = lambda_tail(lambda).
std::int64_t theta(const Weight& lambda);

/// The weights phi^0(lambda), ..., phi^{theta}(lambda).
std::vector<Weight> phi_chain(const Weight& lambda);

enum class NeighborFlavor { super, even };

/// {lambda +- delta_i, lambda +- eps} intersected with the dominant set of
/// the given flavor, plus lambda itself (once) when lambda_0 != 0.
std::vector<Weight> neighbor_set(const Weight& lambda, NeighborFlavor flavor);

/// Block-membership key: atypical weights are keyed by their atypical type,
/// typical ones by the W-orbit of lambda + rho.
struct CentralCharKey {
    bool atypical = false;
    std::vector<HalfInt> values;
    HalfInt eps_abs;
    friend bool operator==(const CentralCharKey&, const CentralCharKey&) = default;
    friend auto operator<=>(const CentralCharKey&, const CentralCharKey&) = default;
};

CentralCharKey central_char_key(const Weight& nu);

/// Dominant integral weights of rank m with height <= max_height, in
/// lexicographic order.
std::vector<Weight> enumerate_dominant(int m, std::int64_t max_height);

/// g0-dominant integral weights of rank m with height <= max_height.
std::vector<Weight> enumerate_g0_dominant(int m, std::int64_t max_height);

}  // namespace ospchar
