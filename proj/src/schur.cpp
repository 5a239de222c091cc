#include "ospchar/schur.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace ospchar {

namespace {

void check_rank(int m) {
    if (m < 0 || m > kMaxRank) throw std::invalid_argument("Schur rank outside 0.." + std::to_string(kMaxRank));
}

// Exact h_l in m variables, built by recursion on the number of variables.
TruncatedSeries compute_h(std::int64_t l, int m) {
    TruncatedSeries s(m);
    if (l < 0) return s;
    Monomial mon;
    auto rec = [&](auto&& self, int i, std::int64_t rem) -> void {
        if (i == m - 1) {
            mon.x[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(rem);
            s.add_term(mon, 1);
            mon.x[static_cast<std::size_t>(i)] = 0;
            return;
        }
        for (std::int64_t a = 0; a <= rem; ++a) {
            mon.x[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(a);
            self(self, i + 1, rem - a);
        }
        mon.x[static_cast<std::size_t>(i)] = 0;
    };
    if (m == 0) {
        if (l == 0) s.add_term(mon, 1);
        return s;
    }
    rec(rec, 0, l);
    return s;
}

class PolyCache {
public:
    template <typename Key, typename F>
    TruncatedSeries get(std::map<Key, TruncatedSeries>& table, const Key& key, F&& make) {
        {
            std::shared_lock lock(mu_);
            auto it = table.find(key);
            if (it != table.end()) return it->second;
        }
        TruncatedSeries v = make();
        std::unique_lock lock(mu_);
        return table.emplace(key, std::move(v)).first->second;
    }

    std::map<std::pair<std::int64_t, int>, TruncatedSeries> h;
    std::map<std::vector<std::int64_t>, TruncatedSeries> partition_schur;

private:
    std::shared_mutex mu_;
};

PolyCache& cache() {
    static PolyCache c;
    return c;
}

const TruncatedSeries h_cached(std::int64_t l, int m) {
    return cache().get(cache().h, std::pair{l, m}, [&] { return compute_h(l, m); });
}

// det(h_{p_i - i + j}) by Laplace expansion over row-prefix column subsets.
TruncatedSeries jacobi_trudi(const std::vector<std::int64_t>& p) {
    const int m = static_cast<int>(p.size());
    if (m == 0) return TruncatedSeries::one(0);
    std::vector<TruncatedSeries> dp(std::size_t{1} << m, TruncatedSeries(m));
    std::vector<bool> live(dp.size(), false);
    dp[0] = TruncatedSeries::one(m);
    live[0] = true;
    for (std::uint32_t mask = 0; mask < dp.size(); ++mask) {
        if (!live[mask] || dp[mask].is_zero()) continue;
        const int row = std::popcount(mask);
        if (row == m) continue;
        for (int col = 0; col < m; ++col) {
            if (mask & (1u << col)) continue;
            const std::int64_t idx = p[static_cast<std::size_t>(row)] - row + col;
            if (idx < 0) continue;
            // sign of placing col after the columns already used
            const int larger = std::popcount(mask >> (col + 1));
            const TruncatedSeries h = h_cached(idx, m);
            TruncatedSeries prod = mul(dp[mask], h);
            const std::uint32_t next = mask | (1u << col);
            dp[next].add_scaled(prod, larger % 2 ? -1 : 1);
            live[next] = true;
        }
    }
    return dp.back();
}

TruncatedSeries partition_schur(const std::vector<std::int64_t>& p) {
    return cache().get(cache().partition_schur, p, [&] { return jacobi_trudi(p); });
}

}  // namespace

std::vector<std::int64_t> StraightenedSchur::partition() const {
    std::vector<std::int64_t> p(dominant);
    for (auto& v : p) v -= shift;
    return p;
}

StraightenedSchur straighten(std::span<const std::int64_t> nu) {
    const int m = static_cast<int>(nu.size());
    StraightenedSchur out;
    std::vector<std::int64_t> kappa(nu.begin(), nu.end());
    for (int i = 0; i < m; ++i) kappa[static_cast<std::size_t>(i)] += m - 1 - i;
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return kappa[static_cast<std::size_t>(a)] > kappa[static_cast<std::size_t>(b)];
    });
    for (int i = 0; i + 1 < m; ++i)
        if (kappa[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] ==
            kappa[static_cast<std::size_t>(order[static_cast<std::size_t>(i + 1)])]) {
            out.zero = true;
            out.sign = 0;
            return out;
        }
    int sign = 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (order[static_cast<std::size_t>(i)] > order[static_cast<std::size_t>(j)]) sign = -sign;
    out.sign = sign;
    out.dominant.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        out.dominant[static_cast<std::size_t>(i)] = kappa[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] - (m - 1 - i);
    out.shift = m == 0 ? 0 : std::min<std::int64_t>(0, out.dominant.back());
    return out;
}

TruncatedSeries complete_h(std::int64_t l, int m, std::int64_t cutoff) {
    check_rank(m);
    TruncatedSeries h = h_cached(l, m);
    return cutoff == TruncatedSeries::kExact ? h : h.truncated(cutoff);
}

TruncatedSeries elementary_e(std::int64_t l, int m, std::int64_t cutoff) {
    check_rank(m);
    TruncatedSeries s(m);
    if (l >= 0 && l <= m) {
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            if (std::popcount(mask) != l) continue;
            Monomial mon;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) mon.x[static_cast<std::size_t>(i)] = 1;
            s.add_term(mon, 1);
        }
    }
    return cutoff == TruncatedSeries::kExact ? s : s.truncated(cutoff);
}

TruncatedSeries schur_series(std::span<const std::int64_t> nu, std::int64_t cutoff) {
    const int m = static_cast<int>(nu.size());
    check_rank(m);
    const StraightenedSchur st = straighten(nu);
    if (st.zero) return TruncatedSeries(m, cutoff, cutoff == TruncatedSeries::kExact ? std::nullopt : std::optional<std::int64_t>(0));
    const TruncatedSeries base = partition_schur(st.partition());
    TruncatedSeries out(m);
    Monomial shift;
    for (int i = 0; i < m; ++i) shift.x[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(st.shift);
    for (const auto& [x, p] : base.blocks()) {
        Monomial mon = Monomial{x, 0} * shift;
        out.add_block(mon.x, p, st.sign);
    }
    return cutoff == TruncatedSeries::kExact ? out : out.truncated(cutoff);
}

TruncatedSeries schur_series(std::initializer_list<std::int64_t> nu, std::int64_t cutoff) {
    return schur_series(std::span<const std::int64_t>(nu.begin(), nu.size()), cutoff);
}

bool schur_inversion_check(std::span<const std::int64_t> nu, std::int64_t cutoff) {
    std::vector<std::int64_t> rev(nu.rbegin(), nu.rend());
    for (auto& v : rev) v = -v;
    const TruncatedSeries lhs = schur_series(nu);
    const TruncatedSeries rhs = invert_variables(schur_series(rev));
    return lhs.truncated(cutoff) == rhs.truncated(cutoff);
}

}  // namespace ospchar
