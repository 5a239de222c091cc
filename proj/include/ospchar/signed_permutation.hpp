#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ospchar/half_int.hpp"
#include "ospchar/weight.hpp"

namespace ospchar {

/// Element of the hyperoctahedral group S_k x| Z_2^k (the Weyl group of type
/// C_k), acting on delta-coordinates.
///
/// Coordinate i of a vector is sent to slot targets()[i] with sign signs()[i]
/// (both 0-based storage), i.e. the matrix has entry signs[i] at
/// (targets[i], i). Composition a * b acts as "b first, then a".
class SignedPermutation {
public:
    SignedPermutation() = default;
    /// targets must be a permutation of {0..k-1}; signs entries are +1/-1.
    SignedPermutation(std::vector<int> targets, std::vector<int> signs);

    static SignedPermutation identity(int k);
    /// Sign change of coordinate i (1-based).
    static SignedPermutation flip(int k, int i);
    /// Transposition of coordinates i and j (1-based).
    static SignedPermutation swap(int k, int i, int j);

    int rank() const { return static_cast<int>(targets_.size()); }
    std::span<const int> targets() const { return targets_; }
    std::span<const int> signs() const { return signs_; }

    SignedPermutation inverse() const;

    /// Applies the element to the first rank() entries of v.
    template <typename T>
    std::vector<T> apply(std::span<const T> v) const {
        std::vector<T> out(v.begin(), v.end());
        for (int i = 0; i < rank(); ++i) {
            const T& x = v[static_cast<std::size_t>(i)];
            out[static_cast<std::size_t>(targets_[static_cast<std::size_t>(i)])] =
                signs_[static_cast<std::size_t>(i)] < 0 ? -x : x;
        }
        return out;
    }

    friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

    std::string str() const;

private:
    std::vector<int> targets_;
    std::vector<int> signs_;
};

/// Acts on the first sigma.rank() delta-coordinates of w, fixing the rest and
/// the eps-coordinate. Throws std::invalid_argument if sigma.rank() > w.rank().
Weight act(const SignedPermutation& sigma, const Weight& w);

/// Determinant of the signed permutation matrix.
int parity(const SignedPermutation& sigma);

/// Gamma_k: the 2^k elements sending the staircase (k, k-1, ..., 1) to a
/// strictly decreasing vector, one per sign pattern, ordered by sign pattern.
std::vector<SignedPermutation> enumerate_gamma(int k);

/// The unique element of Gamma_k with the given sign pattern (indexed by
/// source coordinate).
SignedPermutation gamma_element(std::span<const int> signs);

/// Self-conjugate partition (a_p, ..., a_1 | a_p, ..., a_1) in Frobenius
/// notation, stored by strictly increasing arm lengths a_1 < ... < a_p.
struct SelfConjugatePartition {
    std::vector<int> arms;

    int frobenius_rank() const { return static_cast<int>(arms.size()); }
    /// |mu|.
    std::int64_t size() const;
    /// (|mu| + p)/2 = sum of (a_i + 1).
    std::int64_t t_value() const;
    /// Row lengths padded with zeros to n entries (n must cover the length).
    std::vector<std::int64_t> rows(int n) const;

    friend bool operator==(const SelfConjugatePartition&, const SelfConjugatePartition&) = default;
};

/// All self-conjugate partitions whose arms are <= max_arm, ordered by
/// (size of arm set, arms).
std::vector<SelfConjugatePartition> enumerate_self_conjugate(int max_arm);

/// The element of Gamma_{m-1} with sign -1 exactly at positions m - (a_i + 1).
/// Throws std::invalid_argument when an arm exceeds m - 2.
SignedPermutation gamma_partition_bijection(const SelfConjugatePartition& mu, int m);

/// The cycle (i, i+1, ..., m): slot m moves to slot i, slots i..m-1 shift
/// right by one. Parity (-1)^(m-i).
SignedPermutation tau(int i, int m);

/// Smallest i in 1..m-1 with sigma(lambda + rho)_i < -1, else m. sigma is an
/// element of Gamma_{m-1} acting on the first m-1 coordinates.
int flat_index(const SignedPermutation& sigma, const Weight& lambda);

/// Coxeter length with respect to {s_1, ..., s_{k-1}, t_k} (adjacent swaps
/// and the sign change of the last coordinate). Brute-force breadth-first
/// search; only for k <= 3.
int coxeter_length(const SignedPermutation& sigma);

}  // namespace ospchar
