#include "ospchar/signed_permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace ospchar {

SignedPermutation::SignedPermutation(std::vector<int> targets, std::vector<int> signs)
    : targets_(std::move(targets)), signs_(std::move(signs)) {
    if (targets_.size() != signs_.size()) throw std::invalid_argument("SignedPermutation: size mismatch");
    std::vector<bool> seen(targets_.size(), false);
    for (int t : targets_) {
        if (t < 0 || t >= rank() || seen[static_cast<std::size_t>(t)])
            throw std::invalid_argument("SignedPermutation: targets are not a permutation");
        seen[static_cast<std::size_t>(t)] = true;
    }
    for (int s : signs_)
        if (s != 1 && s != -1) throw std::invalid_argument("SignedPermutation: signs must be +1 or -1");
}

SignedPermutation SignedPermutation::identity(int k) {
    std::vector<int> t(static_cast<std::size_t>(k));
    std::iota(t.begin(), t.end(), 0);
    return SignedPermutation(std::move(t), std::vector<int>(static_cast<std::size_t>(k), 1));
}

SignedPermutation SignedPermutation::flip(int k, int i) {
    SignedPermutation s = identity(k);
    s.signs_.at(static_cast<std::size_t>(i - 1)) = -1;
    return s;
}

SignedPermutation SignedPermutation::swap(int k, int i, int j) {
    SignedPermutation s = identity(k);
    std::swap(s.targets_.at(static_cast<std::size_t>(i - 1)), s.targets_.at(static_cast<std::size_t>(j - 1)));
    return s;
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> t(targets_.size()), s(signs_.size());
    for (std::size_t i = 0; i < targets_.size(); ++i) {
        auto j = static_cast<std::size_t>(targets_[i]);
        t[j] = static_cast<int>(i);
        s[j] = signs_[i];
    }
    return SignedPermutation(std::move(t), std::move(s));
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("SignedPermutation: rank mismatch in product");
    std::vector<int> t(a.targets_.size()), s(a.signs_.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        auto mid = static_cast<std::size_t>(b.targets_[i]);
        t[i] = a.targets_[mid];
        s[i] = b.signs_[i] * a.signs_[mid];
    }
    return SignedPermutation(std::move(t), std::move(s));
}

std::string SignedPermutation::str() const {
    std::string out = "[";
    for (int i = 0; i < rank(); ++i) {
        if (i) out += ' ';
        out += (signs_[static_cast<std::size_t>(i)] < 0 ? "-" : "+");
        out += std::to_string(targets_[static_cast<std::size_t>(i)] + 1);
    }
    return out + "]";
}

Weight act(const SignedPermutation& sigma, const Weight& w) {
    if (sigma.rank() > w.rank())
        throw std::invalid_argument("act: signed permutation of rank " + std::to_string(sigma.rank()) +
                                    " cannot act on a weight of rank " + std::to_string(w.rank()));
    return Weight(sigma.apply(w.deltas()), w.eps());
}

int parity(const SignedPermutation& sigma) {
    int p = 1;
    auto t = sigma.targets();
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (t[i] > t[j]) p = -p;
    for (int s : sigma.signs()) p *= s;
    return p;
}

SignedPermutation gamma_element(std::span<const int> signs) {
    const int k = static_cast<int>(signs.size());
    // Signed staircase values; sorting them decreasingly fixes the targets.
    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    auto value = [&](int i) { return signs[static_cast<std::size_t>(i)] * (k - i); };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return value(a) > value(b); });
    std::vector<int> targets(static_cast<std::size_t>(k));
    for (int slot = 0; slot < k; ++slot) targets[static_cast<std::size_t>(order[static_cast<std::size_t>(slot)])] = slot;
    return SignedPermutation(std::move(targets), std::vector<int>(signs.begin(), signs.end()));
}

std::vector<SignedPermutation> enumerate_gamma(int k) {
    if (k < 0) throw std::invalid_argument("enumerate_gamma: negative rank");
    std::vector<SignedPermutation> out;
    out.reserve(std::size_t{1} << k);
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> signs(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) signs[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? -1 : 1;
        out.push_back(gamma_element(signs));
    }
    return out;
}

std::int64_t SelfConjugatePartition::size() const {
    std::int64_t n = 0;
    for (int a : arms) n += 2 * a + 1;
    return n;
}

std::int64_t SelfConjugatePartition::t_value() const {
    std::int64_t n = 0;
    for (int a : arms) n += a + 1;
    return n;
}

std::vector<std::int64_t> SelfConjugatePartition::rows(int n) const {
    // Frobenius (b_1 > ... > b_p | b_1 > ... > b_p): row i has b_i + i boxes
    // for i <= p, and row i > p has #{k : b_k + k >= i} boxes.
    std::vector<int> b(arms.rbegin(), arms.rend());
    const int p = static_cast<int>(b.size());
    std::vector<std::int64_t> r(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        if (i <= p) {
            r[static_cast<std::size_t>(i - 1)] = b[static_cast<std::size_t>(i - 1)] + i;
        } else {
            for (int k = 1; k <= p; ++k)
                if (b[static_cast<std::size_t>(k - 1)] + k >= i) ++r[static_cast<std::size_t>(i - 1)];
        }
    }
    if (p > 0 && b.front() + 1 > n) throw std::invalid_argument("SelfConjugatePartition::rows: too few rows");
    return r;
}

std::vector<SelfConjugatePartition> enumerate_self_conjugate(int max_arm) {
    std::vector<SelfConjugatePartition> out;
    if (max_arm < 0) return {SelfConjugatePartition{}};
    const int n = max_arm + 1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        SelfConjugatePartition mu;
        for (int a = 0; a < n; ++a)
            if ((mask >> a) & 1u) mu.arms.push_back(a);
        out.push_back(std::move(mu));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.arms.size() != y.arms.size()) return x.arms.size() < y.arms.size();
        return x.arms < y.arms;
    });
    return out;
}

SignedPermutation gamma_partition_bijection(const SelfConjugatePartition& mu, int m) {
    if (m < 1) throw std::invalid_argument("gamma_partition_bijection: rank must be >= 1");
    const int k = m - 1;
    std::vector<int> signs(static_cast<std::size_t>(k), 1);
    for (int a : mu.arms) {
        if (a < 0 || a > m - 2)
            throw std::invalid_argument("gamma_partition_bijection: arm " + std::to_string(a) +
                                        " exceeds m-2 = " + std::to_string(m - 2));
        const int j = a + 1;
        signs[static_cast<std::size_t>(m - j - 1)] = -1;
    }
    return gamma_element(signs);
}

SignedPermutation tau(int i, int m) {
    if (m < 1 || i < 1 || i > m) throw std::out_of_range("tau: index out of range");
    std::vector<int> targets(static_cast<std::size_t>(m));
    std::iota(targets.begin(), targets.end(), 0);
    for (int c = i; c < m; ++c) targets[static_cast<std::size_t>(c - 1)] = c;  // slot c -> c+1 (1-based)
    targets[static_cast<std::size_t>(m - 1)] = i - 1;                        // slot m -> i
    return SignedPermutation(std::move(targets), std::vector<int>(static_cast<std::size_t>(m), 1));
}

int flat_index(const SignedPermutation& sigma, const Weight& lambda) {
    const int m = lambda.rank();
    if (sigma.rank() != m - 1) throw std::invalid_argument("flat_index: expected an element of Gamma_{m-1}");
    const Weight image = act(sigma, rho_shifted(lambda));
    for (int i = 1; i <= m - 1; ++i)
        if (image.delta(i) < -1) return i;
    return m;
}

int coxeter_length(const SignedPermutation& sigma) {
    const int k = sigma.rank();
    if (k > 3) throw std::invalid_argument("coxeter_length: debug oracle limited to rank <= 3");
    std::vector<SignedPermutation> gens;
    for (int i = 1; i < k; ++i) gens.push_back(SignedPermutation::swap(k, i, i + 1));
    if (k >= 1) gens.push_back(SignedPermutation::flip(k, k));
    std::map<SignedPermutation, int> dist{{SignedPermutation::identity(k), 0}};
    std::queue<SignedPermutation> q;
    q.push(SignedPermutation::identity(k));
    while (!q.empty()) {
        SignedPermutation cur = q.front();
        q.pop();
        if (cur == sigma) return dist[cur];
        for (const auto& g : gens) {
            SignedPermutation next = g * cur;
            if (dist.emplace(next, dist[cur] + 1).second) q.push(next);
        }
    }
    throw std::logic_error("coxeter_length: element not reached");
}

}  // namespace ospchar
