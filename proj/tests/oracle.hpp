#pragma once
// Naive polynomial arithmetic for test oracles, deliberately separate from
// the library's series engine: exponent vectors in a std::map, schoolbook
// products, no lower-bound bookkeeping.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ospchar/laurent_series.hpp"
#include "ospchar/signed_permutation.hpp"

namespace oracle {

// Key: x_1..x_m exponents followed by the y exponent.
using Key = std::vector<int>;
using Poly = std::map<Key, mpz_class>;

inline int xdeg(const Key& k) { return std::accumulate(k.begin(), k.end() - 1, 0); }

inline void add(Poly& p, const Key& k, const mpz_class& c) {
    auto& v = p[k];
    v += c;
    if (v == 0) p.erase(k);
}

inline Poly constant(int m, const mpz_class& c = 1) {
    Poly p;
    if (c != 0) p[Key(static_cast<std::size_t>(m) + 1, 0)] = c;
    return p;
}

inline Poly mono(int m, const std::vector<int>& x, int y, const mpz_class& c = 1) {
    Key k(x);
    k.resize(static_cast<std::size_t>(m));
    k.push_back(y);
    Poly p;
    p[k] = c;
    return p;
}

inline Poly plus(Poly a, const Poly& b, const mpz_class& s = 1) {
    for (const auto& [k, c] : b) add(a, k, s * c);
    return a;
}

// Product with terms of x-degree above cutoff discarded. Only sound when both
// factors have non-negative x-degrees.
inline Poly times(const Poly& a, const Poly& b, int cutoff = 1 << 30) {
    Poly out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            Key k(ka.size());
            for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
            if (xdeg(k) > cutoff) continue;
            add(out, k, ca * cb);
        }
    return out;
}

// 1 + mon + mon^2 + ... through x-degree cutoff (mon of positive x-degree).
inline Poly geometric(int m, const std::vector<int>& x, int y, int cutoff, int sign = 1) {
    Poly out = constant(m);
    Poly pw = constant(m);
    const Poly step = mono(m, x, y, sign);
    while (true) {
        pw = times(pw, step, cutoff);
        if (pw.empty()) break;
        out = plus(out, pw);
    }
    return out;
}

inline Poly from_series(const ospchar::TruncatedSeries& s) {
    Poly p;
    const int m = s.rank();
    s.for_each_term([&](const ospchar::Monomial& mon, const mpz_class& c) {
        Key k(mon.x.begin(), mon.x.begin() + m);
        k.push_back(mon.y);
        add(p, k, c);
    });
    return p;
}

inline Poly truncate(const Poly& p, int cutoff) {
    Poly out;
    for (const auto& [k, c] : p)
        if (xdeg(k) <= cutoff) out[k] = c;
    return out;
}

inline std::string str(const Poly& p) {
    if (p.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : p) {
        if (!s.empty()) s += " + ";
        s += c.get_str() + "*[";
        for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
        s += "]";
    }
    return s;
}

// Generic alternant a_kappa = sum_{w in S_m} sgn(w) x^{w(kappa)} on x only.
inline Poly alternant(const std::vector<int>& kappa) {
    const int m = static_cast<int>(kappa.size());
    std::vector<int> perm(kappa.size());
    std::iota(perm.begin(), perm.end(), 0);
    Poly out;
    do {
        int inv = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
        std::vector<int> x(kappa.size());
        for (int i = 0; i < m; ++i) x[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = kappa[static_cast<std::size_t>(i)];
        out = plus(out, mono(m, x, 0, inv % 2 ? -1 : 1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Exact quotient num / (x_i - x_j) by cancelling the term of largest x_i
// exponent. A quotient term below the numerator's smallest x_i exponent means
// a remainder.
inline Poly divide_binomial(Poly num, int m, int i, int j) {
    const auto ii = static_cast<std::size_t>(i);
    int floor_i = 1 << 30;
    for (const auto& [k, c] : num) floor_i = std::min(floor_i, k[ii]);
    std::vector<int> xi(static_cast<std::size_t>(m), 0), xj(static_cast<std::size_t>(m), 0);
    xi[ii] = 1;
    xj[static_cast<std::size_t>(j)] = 1;
    const Poly divisor = plus(mono(m, xi, 0), mono(m, xj, 0), -1);
    Poly q;
    while (!num.empty()) {
        auto lead = std::max_element(num.begin(), num.end(), [&](const auto& a, const auto& b) {
            if (a.first[ii] != b.first[ii]) return a.first[ii] < b.first[ii];
            return a.first < b.first;
        });
        Key k = lead->first;
        k[ii] -= 1;
        if (k[ii] < floor_i) throw std::runtime_error("alternant division leaves a remainder");
        Poly t;
        t[k] = lead->second;
        q = plus(q, t);
        num = plus(num, times(t, divisor), -1);
    }
    return q;
}

// Schur function as the bialternant a_{nu+delta} / a_delta.
inline Poly bialternant_schur(const std::vector<int>& nu) {
    const int m = static_cast<int>(nu.size());
    std::vector<int> kappa(nu);
    for (int i = 0; i < m; ++i) kappa[static_cast<std::size_t>(i)] += m - 1 - i;
    Poly p = alternant(kappa);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) p = divide_binomial(p, m, i, j);
    return p;
}

// Every element of S_k x| Z_2^k.
inline std::vector<ospchar::SignedPermutation> whole_group(int k) {
    std::vector<ospchar::SignedPermutation> out;
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int mask = 0; mask < (1 << k); ++mask) {
            std::vector<int> s(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = (mask >> i & 1) ? -1 : 1;
            out.emplace_back(perm, s);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Empty when every in-window pair under W = C_m x Z_2 agrees.
inline std::string weyl_asymmetry(const ospchar::TruncatedSeries& s) {
    for (const auto& w : whole_group(s.rank()))
        for (int e : {1, -1})
            for (const auto& p : ospchar::weyl_image(s, w, e))
                if (!p.equal())
                    return ospchar::monomial_str(p.source, s.rank()) + " vs " + ospchar::monomial_str(p.image, s.rank());
    return {};
}

inline bool nonnegative(const ospchar::TruncatedSeries& s) {
    bool ok = true;
    s.for_each_term([&](const ospchar::Monomial&, const mpz_class& c) { ok = ok && c > 0; });
    return ok;
}

}  // namespace oracle
