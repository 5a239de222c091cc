#pragma once

// Sparse exact Laurent series in x_1..x_m, y, truncated by total x-degree.
// x_i stands for e^{-delta_i} and y for e^{eps}.

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ospchar/signed_permutation.hpp"
#include "ospchar/weight.hpp"

namespace ospchar {

inline constexpr int kMaxRank = 8;

using XVec = std::array<std::int32_t, kMaxRank>;

std::int64_t x_degree(const XVec& x);

struct Monomial {
    XVec x{};
    std::int32_t y = 0;

    std::int64_t degree() const { return x_degree(x); }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend Monomial operator*(const Monomial& a, const Monomial& b);
};

Monomial make_monomial(std::span<const int> x, int y);
Monomial make_monomial(std::initializer_list<int> x, int y);

/// Graded lexicographic order on (total x-degree, x exponents, y exponent).
struct CanonicalLess {
    bool operator()(const XVec& a, const XVec& b) const;
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

/// "x1^-1*x2*y^2"; the unit monomial prints as "1".
std::string monomial_str(const Monomial& mon, int rank);

/// Dense Laurent polynomial in y: coefficient of y^(lo + k) is c[k]. Kept
/// trimmed (no zero at either end); an empty c is zero.
struct YPoly {
    std::int32_t lo = 0;
    std::vector<mpz_class> c;

    bool empty() const { return c.empty(); }
    void trim();
    void add(std::int32_t y, const mpz_class& v);
    void add_scaled(const YPoly& other, const mpz_class& k);
    mpz_class at(std::int32_t y) const;
};

YPoly convolve(const YPoly& a, const YPoly& b);

class TruncatedSeries {
public:
    /// Cutoff of a series known exactly (a Laurent polynomial).
    static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max();

    TruncatedSeries() = default;
    /// Empty series. For a truncated series, `lower` is a proven lower bound
    /// on the x-degree of every term of the untruncated series; leaving it
    /// empty marks it unknown, which makes products with it an error.
    explicit TruncatedSeries(int rank, std::int64_t cutoff = kExact,
                             std::optional<std::int64_t> lower = std::nullopt);

    static TruncatedSeries one(int rank, std::int64_t cutoff = kExact);
    static TruncatedSeries monomial(int rank, const Monomial& mon, const mpz_class& coeff = 1,
                                    std::int64_t cutoff = kExact);

    int rank() const { return rank_; }
    std::int64_t cutoff() const { return cutoff_; }
    bool is_exact() const { return cutoff_ == kExact; }

    /// For exact series the minimum degree of the stored terms (kExact when
    /// zero); otherwise the declared bound.
    std::optional<std::int64_t> lower() const;
    void set_lower(std::optional<std::int64_t> lower) { lower_ = lower; }

    /// Adds c * mon; terms above the cutoff are dropped. Throws
    /// std::logic_error when mon lies below a declared lower bound.
    void add_term(const Monomial& mon, const mpz_class& c);
    mpz_class coeff(const Monomial& mon) const;

    bool is_zero() const { return blocks_.empty(); }
    std::size_t term_count() const;
    std::optional<std::int64_t> min_degree() const;
    std::optional<std::int64_t> max_degree() const;

    /// Terms in canonical order.
    std::vector<std::pair<Monomial, mpz_class>> terms() const;
    void for_each_term(const std::function<void(const Monomial&, const mpz_class&)>& f) const;

    /// Same series with a (not larger) cutoff.
    TruncatedSeries truncated(std::int64_t cutoff) const;

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);
    TruncatedSeries& operator*=(const mpz_class& k);
    /// this += k * other.
    void add_scaled(const TruncatedSeries& other, const mpz_class& k);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const mpz_class& k) { return a *= k; }
    friend TruncatedSeries operator*(const mpz_class& k, TruncatedSeries a) { return a *= k; }

    /// Same rank, cutoff and terms.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    /// "x1^-1 + y^-1 + 1 + y + x1" in canonical order; "0" when empty.
    std::string str() const;

    using BlockMap = std::map<XVec, YPoly, CanonicalLess>;
    const BlockMap& blocks() const { return blocks_; }
    /// Adds a whole y-block at x; used by bulk builders.
    void add_block(const XVec& x, const YPoly& p, const mpz_class& k = 1);

private:
    int rank_ = 0;
    std::int64_t cutoff_ = kExact;
    std::optional<std::int64_t> lower_;
    BlockMap blocks_;
};

/// Product with cutoff min(Da + Lb, Db + La) and lower bound La + Lb.
/// Throws std::logic_error when a needed lower bound is unknown, and
/// std::invalid_argument on a rank mismatch.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// 1 + mon + mon^2 + ... up to x-degree D. Throws std::invalid_argument
/// when mon has x-degree <= 0.
TruncatedSeries geom_inverse(int rank, const Monomial& mon, std::int64_t cutoff);

/// e^w = prod x_i^{-w_i} * y^{w_0}. Throws std::invalid_argument on
/// half-integral entries or rank above kMaxRank.
Monomial weight_monomial(const Weight& w);

/// Exact quotient s / (1 - mon) of a Laurent polynomial. Throws
/// std::invalid_argument if s is truncated or mon is the unit monomial, and
/// std::domain_error when the division leaves a remainder.
TruncatedSeries divide_one_minus(const TruncatedSeries& s, const Monomial& mon);

/// x_i -> x_i^{-1}; exact series only.
TruncatedSeries invert_variables(const TruncatedSeries& s);

/// Image of a monomial under a signed permutation of the x-variables and
/// y -> y^{eps_sign}.
Monomial act(const SignedPermutation& sigma, int eps_sign, const Monomial& mon);

struct WeylPair {
    Monomial source;
    mpz_class source_coeff;
    Monomial image;
    mpz_class image_coeff;
    bool equal() const { return source_coeff == image_coeff; }
};

/// For every stored monomial whose image is inside the retained window,
/// the pair of coefficients. Used only for invariance checks.
std::vector<WeylPair> weyl_image(const TruncatedSeries& s, const SignedPermutation& sigma, int eps_sign);

struct Discrepancy {
    Monomial monomial;
    mpz_class lhs;
    mpz_class rhs;
};

/// First monomial (canonical order) of x-degree <= min(cutoffs) where the
/// coefficients differ.
std::optional<Discrepancy> first_discrepancy(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace ospchar
