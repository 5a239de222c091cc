#include "ospchar/verma.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

#include "ospchar/schur.hpp"
#include "ospchar/signed_permutation.hpp"

namespace ospchar {

namespace {

Monomial x_unit(int i) {
    Monomial m;
    m.x[static_cast<std::size_t>(i)] = 1;
    return m;
}

Monomial x_pair(int i, int j) {
    Monomial m;
    m.x[static_cast<std::size_t>(i)] += 1;
    m.x[static_cast<std::size_t>(j)] += 1;
    return m;
}

// 1 + c * mon as an exact polynomial.
TruncatedSeries one_plus(int m, const Monomial& mon, int c = 1) {
    TruncatedSeries s = TruncatedSeries::one(m);
    s.add_term(mon, c);
    return s;
}

Monomial with_y(Monomial m, int y) {
    m.y = y;
    return m;
}

struct FactorMemo {
    std::shared_mutex mu;
    std::map<std::pair<int, std::int64_t>, TruncatedSeries> table;

    template <typename F>
    TruncatedSeries get(int m, std::int64_t d, F&& make) {
        {
            std::shared_lock lock(mu);
            auto it = table.find({m, d});
            if (it != table.end()) return it->second;
        }
        TruncatedSeries v = make();
        std::unique_lock lock(mu);
        return table.emplace(std::pair{m, d}, std::move(v)).first->second;
    }
};

FactorMemo& universal_memo() {
    static FactorMemo memo;
    return memo;
}

FactorMemo& odd_even_memo() {
    static FactorMemo memo;
    return memo;
}

void check_rank(int m) {
    if (m < 1 || m > kMaxRank) throw std::invalid_argument("rank must lie in 1.." + std::to_string(kMaxRank));
}

TruncatedSeries empty_truncated(int m, std::int64_t cutoff) { return TruncatedSeries(m, cutoff, 0); }

std::vector<SignedPermutation> all_signed_permutations(int m) {
    std::vector<SignedPermutation> out;
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            std::vector<int> signs(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) signs[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? -1 : 1;
            out.emplace_back(perm, std::move(signs));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

TruncatedSeries universal_factor(int m, std::int64_t cutoff) {
    check_rank(m);
    if (cutoff < 0) return empty_truncated(m, cutoff);
    return universal_memo().get(m, cutoff, [&] {
        TruncatedSeries num = TruncatedSeries::one(m);
        for (int i = 0; i < m; ++i) {
            num = mul(num, one_plus(m, with_y(x_unit(i), 1)));
            num = mul(num, one_plus(m, with_y(x_unit(i), -1)));
        }
        TruncatedSeries s = num.truncated(cutoff);
        s.set_lower(0);
        for (int i = 0; i < m; ++i) {
            s = mul(s, geom_inverse(m, x_unit(i), cutoff));
            for (int j = i + 1; j < m; ++j) s = mul(s, geom_inverse(m, x_pair(i, j), cutoff));
        }
        return s;
    });
}

TruncatedSeries odd_even_factor(int m, std::int64_t cutoff) {
    check_rank(m);
    if (cutoff < 0) return empty_truncated(m, cutoff);
    return odd_even_memo().get(m, cutoff, [&] {
        TruncatedSeries s = TruncatedSeries::one(m, cutoff);
        s.set_lower(0);
        for (int i = 0; i < m; ++i) {
            s = mul(s, one_plus(m, x_unit(i)));
            s = mul(s, one_plus(m, with_y(x_unit(i), 1)));
            s = mul(s, one_plus(m, with_y(x_unit(i), -1)));
        }
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) s = mul(s, geom_inverse(m, x_pair(i, j), cutoff));
        return s;
    });
}

TruncatedSeries sl2_string(int m, std::int64_t n) {
    TruncatedSeries s(m);
    if (n >= 0) {
        for (std::int64_t k = -n; k <= n; ++k) s.add_term(with_y(Monomial{}, static_cast<int>(k)), 1);
        return s;
    }
    if (n == -1) return s;
    TruncatedSeries r = sl2_string(m, -n - 2);
    r *= -1;
    return r;
}

TruncatedSeries straightened_g0_character(const Weight& nu) {
    if (!nu.is_integral()) throw std::invalid_argument("g0 character: weight " + nu.str() + " is not integral");
    const int m = nu.rank();
    check_rank(m);
    std::vector<std::int64_t> idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = -nu.delta(m - i).to_integer();
    const TruncatedSeries schur = schur_series(idx);
    if (schur.is_zero()) return schur;
    const TruncatedSeries str = sl2_string(m, nu.eps().to_integer());
    if (str.is_zero()) return str;
    TruncatedSeries out(m);
    const YPoly& ys = str.blocks().begin()->second;
    for (const auto& [x, p] : schur.blocks()) out.add_block(x, convolve(p, ys));
    return out;
}

TruncatedSeries g0_character(const Weight& nu) {
    if (!is_g0_dominant(nu))
        throw std::invalid_argument("g0 character: weight " + nu.str() + " is not g0-dominant");
    return straightened_g0_character(nu);
}

TruncatedSeries verma_character(const Weight& nu, std::int64_t cutoff) {
    const TruncatedSeries g = g0_character(nu);
    const std::int64_t low = -nu.delta_sum().to_integer();
    const TruncatedSeries a = universal_factor(nu.rank(), cutoff - low);
    TruncatedSeries r = mul(a, g);
    return r.truncated(cutoff);
}

TruncatedSeries kac_typical_character(const Weight& lambda, std::int64_t cutoff) {
    if (auto why = dominance_violation(lambda)) throw std::invalid_argument("Kac formula: " + *why);
    if (!atypical_roots(lambda).empty())
        throw std::invalid_argument("Kac formula: weight " + lambda.str() + " is atypical");
    const int m = lambda.rank();
    check_rank(m);
    const Weight lt = rho_shifted(lambda);
    const Weight r = rho(m);
    TruncatedSeries alt(m);
    for (const SignedPermutation& w : all_signed_permutations(m)) {
        for (int es : {1, -1}) {
            Weight img = act(w, lt);
            img.set_eps(es > 0 ? img.eps() : -img.eps());
            alt.add_term(weight_monomial(img - r), parity(w) * es);
        }
    }
    TruncatedSeries q = divide_one_minus(alt, with_y(Monomial{}, -1));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Monomial mon;
            mon.x[static_cast<std::size_t>(i)] = 1;
            mon.x[static_cast<std::size_t>(j)] = -1;
            q = divide_one_minus(q, mon);
        }
    const std::int64_t low = q.min_degree().value_or(0);
    return mul(odd_even_factor(m, cutoff - low), q).truncated(cutoff);
}

TruncatedSeries natural_character(int m) {
    check_rank(m);
    TruncatedSeries s = TruncatedSeries::one(m);
    for (int i = 0; i < m; ++i) {
        Monomial p = x_unit(i), n;
        n.x[static_cast<std::size_t>(i)] = -1;
        s.add_term(p, 1);
        s.add_term(n, 1);
    }
    s.add_term(with_y(Monomial{}, 1), 1);
    s.add_term(with_y(Monomial{}, -1), 1);
    return s;
}

}  // namespace ospchar
