#include "ospchar/weight.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace ospchar {

Weight::Weight(std::vector<HalfInt> delta, HalfInt eps) : delta_(std::move(delta)), eps_(eps) {}

Weight Weight::zero(int m) {
    if (m < 0) throw std::invalid_argument("negative rank");
    return Weight(std::vector<HalfInt>(static_cast<std::size_t>(m)), HalfInt{});
}

Weight Weight::delta_unit(int m, int i) {
    if (i < 1 || i > m) throw std::out_of_range("delta index out of range");
    Weight w = zero(m);
    w.set_delta(i, 1);
    return w;
}

Weight Weight::epsilon(int m) {
    Weight w = zero(m);
    w.eps_ = 1;
    return w;
}

Weight Weight::integral(std::span<const std::int64_t> delta, std::int64_t eps) {
    std::vector<HalfInt> d(delta.begin(), delta.end());
    return Weight(std::move(d), eps);
}

Weight Weight::integral(std::initializer_list<std::int64_t> delta, std::int64_t eps) {
    return integral(std::span<const std::int64_t>(delta.begin(), delta.size()), eps);
}

bool Weight::is_integral() const {
    return eps_.is_integer() && std::all_of(delta_.begin(), delta_.end(), [](HalfInt h) { return h.is_integer(); });
}

HalfInt Weight::delta_sum() const {
    HalfInt s;
    for (HalfInt h : delta_) s += h;
    return s;
}

Weight& Weight::operator+=(const Weight& other) {
    if (other.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
    for (std::size_t i = 0; i < delta_.size(); ++i) delta_[i] += other.delta_[i];
    eps_ += other.eps_;
    return *this;
}

Weight& Weight::operator-=(const Weight& other) {
    if (other.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
    for (std::size_t i = 0; i < delta_.size(); ++i) delta_[i] -= other.delta_[i];
    eps_ -= other.eps_;
    return *this;
}

Weight operator*(std::int64_t k, const Weight& w) {
    Weight r = w;
    for (auto& h : r.delta_) h *= k;
    r.eps_ *= k;
    return r;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (auto c = a.rank() <=> b.rank(); c != 0) return c;
    if (auto c = std::lexicographical_compare_three_way(a.delta_.begin(), a.delta_.end(), b.delta_.begin(),
                                                        b.delta_.end());
        c != 0)
        return c;
    return a.eps_ <=> b.eps_;
}

std::string Weight::str() const {
    std::string s;
    for (std::size_t i = 0; i < delta_.size(); ++i) {
        if (i) s += ',';
        s += delta_[i].str();
    }
    s += ';';
    s += eps_.str();
    return s;
}

namespace {

std::int64_t parse_int_token(std::string_view token, std::string_view text) {
    std::string_view t = token;
    while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
    while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
        throw std::invalid_argument("bad token '" + std::string(token) + "' in weight \"" + std::string(text) + "\"");
    return v;
}

}  // namespace

Weight parse_weight(std::string_view text, int m) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos)
        throw std::invalid_argument("weight \"" + std::string(text) + "\" must have the form l1,...,lm;l0");
    std::string_view head = text.substr(0, semi);
    std::int64_t eps = parse_int_token(text.substr(semi + 1), text);
    std::vector<std::int64_t> delta;
    std::size_t start = 0;
    while (true) {
        auto comma = head.find(',', start);
        delta.push_back(parse_int_token(head.substr(start, comma - start), text));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (static_cast<int>(delta.size()) != m)
        throw std::invalid_argument("weight \"" + std::string(text) + "\" has " + std::to_string(delta.size()) +
                                    " delta entries, expected m=" + std::to_string(m));
    return Weight::integral(delta, eps);
}

HalfInt bilinear_form(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("bilinear_form: rank mismatch");
    // Products of half-integers live in (1/4)Z; the engine only pairs weights
    // where at least one side is integral, so the result is in (1/2)Z.
    std::int64_t quad = a.eps().twice() * b.eps().twice();
    for (int i = 1; i <= a.rank(); ++i) quad -= a.delta(i).twice() * b.delta(i).twice();
    if (quad % 2 != 0) throw std::domain_error("bilinear_form: value not in (1/2)Z");
    return HalfInt::from_twice(quad / 2);
}

Weight rho(int m) {
    if (m < 1) throw std::invalid_argument("rho: rank must be >= 1");
    std::vector<HalfInt> d;
    for (int i = 1; i <= m; ++i) d.push_back(HalfInt::from_twice(2 * (m - i) - 1));
    return Weight(std::move(d), HalfInt::half());
}

Weight rho_shifted(const Weight& lambda) { return lambda + rho(lambda.rank()); }

HalfInt height(const Weight& w) {
    HalfInt h = abs(w.eps());
    for (HalfInt d : w.deltas()) h += abs(d);
    return h;
}

std::optional<std::string> dominance_violation(const Weight& lambda) {
    if (!lambda.is_integral()) return "entries must be integers";
    if (lambda.eps() < 0) return "λ₀ must be nonnegative";
    for (int i = 1; i <= lambda.rank(); ++i)
        if (lambda.delta(i) < 0) return "λ" + std::to_string(i) + " must be nonnegative";
    for (int i = 1; i < lambda.rank(); ++i)
        if (lambda.delta(i) < lambda.delta(i + 1))
            return "λ₁ ≥ … ≥ λ_m required (λ" + std::to_string(i) + " < λ" + std::to_string(i + 1) + ")";
    if (lambda.rank() > 0 && lambda.delta(lambda.rank()) == 0 && lambda.eps() != 0)
        return "λ₀=0 required when λ_m=0";
    return std::nullopt;
}

bool is_dominant_integral(const Weight& lambda) { return lambda.rank() >= 1 && !dominance_violation(lambda); }

bool is_g0_dominant(const Weight& nu) {
    if (!nu.is_integral() || nu.eps() < 0) return false;
    for (int i = 1; i < nu.rank(); ++i)
        if (nu.delta(i) < nu.delta(i + 1)) return false;
    return true;
}

std::vector<AtypicalRoot> atypical_roots(const Weight& w) {
    const Weight t = rho_shifted(w);
    std::vector<AtypicalRoot> roots;
    for (int s = 1; s <= w.rank(); ++s) {
        // (w + rho, delta_s + sign eps) = -t_s + sign t_0
        if (t.delta(s) == t.eps()) roots.push_back({s, +1});
        if (t.delta(s) == -t.eps()) roots.push_back({s, -1});
    }
    return roots;
}

std::vector<HalfInt> atypical_type(const Weight& w, const AtypicalRoot& root) {
    const Weight t = rho_shifted(w);
    std::vector<HalfInt> type;
    for (int i = 1; i <= w.rank(); ++i)
        if (i != root.slot) type.push_back(abs(t.delta(i)));
    std::sort(type.begin(), type.end());
    return type;
}

bool is_tail_atypical(const Weight& lambda) {
    return is_dominant_integral(lambda) && lambda.delta(lambda.rank()) == 0 && lambda.eps() == 0;
}

namespace {

void require_dominant(const Weight& lambda, const char* what) {
    if (auto v = dominance_violation(lambda); v || lambda.rank() < 1)
        throw std::invalid_argument(std::string(what) + ": weight " + lambda.str() + " is not dominant integral" +
                                    (v ? " (" + *v + ")" : ""));
}

int plus_root_slot(const Weight& lambda) {
    for (const auto& r : atypical_roots(lambda))
        if (r.sign > 0) return r.slot;
    return 0;
}

void require_nontail_atypical(const Weight& lambda, const char* what) {
    require_dominant(lambda, what);
    if (is_tail_atypical(lambda)) throw std::invalid_argument(std::string(what) + ": weight is tail atypical");
    if (plus_root_slot(lambda) == 0) throw std::invalid_argument(std::string(what) + ": weight is typical");
}

}  // namespace

AtypicalRoot primary_atypical_root(const Weight& lambda) {
    require_dominant(lambda, "primary_atypical_root");
    if (is_tail_atypical(lambda)) return {lambda.rank(), -1};
    int k = plus_root_slot(lambda);
    if (k == 0) throw std::invalid_argument("primary_atypical_root: weight " + lambda.str() + " is typical");
    return {k, +1};
}

bool is_boundary_atypical(const Weight& lambda) {
    if (!is_dominant_integral(lambda) || is_tail_atypical(lambda)) return false;
    const int k = plus_root_slot(lambda);
    if (k == 0) return false;
    const int m = lambda.rank();
    for (int i = k; i <= m; ++i)
        if (lambda.delta(i) != 1) return false;
    return lambda.eps() == m - k;
}

Weight lambda_tail(const Weight& lambda) {
    require_dominant(lambda, "lambda_tail");
    if (is_tail_atypical(lambda)) return lambda;
    const int k = plus_root_slot(lambda);
    if (k == 0) throw std::invalid_argument("lambda_tail: weight " + lambda.str() + " is typical");
    const int m = lambda.rank();
    // Keep |(lambda+rho)_i| for i != k: entries after k move up one slot,
    // which lowers rho by one.
    Weight t = Weight::zero(m);
    for (int i = 1; i < k; ++i) t.set_delta(i, lambda.delta(i));
    for (int i = k; i < m; ++i) t.set_delta(i, lambda.delta(i + 1) - 1);
    return t;
}

Weight phi(const Weight& lambda) {
    require_nontail_atypical(lambda, "phi");
    if (is_boundary_atypical(lambda)) return lambda_tail(lambda);
    const int m = lambda.rank();
    Weight r = lambda;
    if (lambda.eps() == 0) {
        r.set_delta(m, lambda.delta(m) - 1);
    } else {
        const int k = plus_root_slot(lambda);
        int t = k;
        while (t < m && lambda.delta(t + 1) == lambda.delta(k)) ++t;
        for (int i = k; i <= t; ++i) r.set_delta(i, lambda.delta(i) - 1);
        r.set_eps(lambda.eps() - (t - k + 1));
    }
    if (!is_dominant_integral(r))
        throw std::logic_error("phi(" + lambda.str() + ") = " + r.str() + " is not dominant");
    return r;
}

std::vector<Weight> phi_chain(const Weight& lambda) {
    require_nontail_atypical(lambda, "phi_chain");
    const Weight tail = lambda_tail(lambda);
    const std::int64_t cap = height(lambda).to_integer() + lambda.rank();
    std::vector<Weight> chain{lambda};
    Weight cur = lambda;
    for (std::int64_t step = 0; step <= cap; ++step) {
        Weight next = phi(cur);
        if (next == tail) return chain;
        chain.push_back(next);
        cur = std::move(next);
    }
    throw std::logic_error("phi-chain of " + lambda.str() + " does not reach its tail weight");
}

std::int64_t theta(const Weight& lambda) { return static_cast<std::int64_t>(phi_chain(lambda).size()) - 1; }

Classification classify(const Weight& lambda) {
    require_dominant(lambda, "classify");
    Classification c;
    c.dominant = true;
    c.atypical_roots = atypical_roots(lambda);
    c.typical = c.atypical_roots.empty();
    c.tail = lambda.delta(lambda.rank()) == 0 && lambda.eps() == 0;
    if (!c.typical) {
        c.atypical_type = atypical_type(lambda, primary_atypical_root(lambda));
        if (!c.tail) c.theta = theta(lambda);
    }
    return c;
}

std::vector<Weight> neighbor_set(const Weight& lambda, NeighborFlavor flavor) {
    const bool super = flavor == NeighborFlavor::super;
    if (super) {
        require_dominant(lambda, "neighbor_set");
    } else if (!is_g0_dominant(lambda)) {
        throw std::invalid_argument("neighbor_set: weight " + lambda.str() + " is not g0-dominant");
    }
    const int m = lambda.rank();
    auto keep = [&](const Weight& w) { return super ? is_dominant_integral(w) : is_g0_dominant(w); };
    // P_lambda is the union of the + and - lists; lambda itself (present in
    // both when lambda_0 != 0) is listed once.
    std::vector<Weight> out;
    for (int sign : {+1, -1}) {
        for (int i = 1; i <= m; ++i) {
            Weight w = lambda + sign * Weight::delta_unit(m, i);
            if (keep(w)) out.push_back(std::move(w));
        }
        if (sign > 0 && lambda.eps() != 0) out.push_back(lambda);
        Weight w = lambda + sign * Weight::epsilon(m);
        if (keep(w)) out.push_back(std::move(w));
    }
    return out;
}

CentralCharKey central_char_key(const Weight& nu) {
    const Weight t = rho_shifted(nu);
    CentralCharKey key;
    auto roots = atypical_roots(nu);
    if (!roots.empty()) {
        key.atypical = true;
        key.values = atypical_type(nu, roots.front());
        return key;
    }
    for (HalfInt d : t.deltas()) key.values.push_back(abs(d));
    std::sort(key.values.begin(), key.values.end());
    key.eps_abs = abs(t.eps());
    return key;
}

std::vector<Weight> enumerate_dominant(int m, std::int64_t max_height) {
    std::vector<Weight> out;
    for (const Weight& w : enumerate_g0_dominant(m, max_height))
        if (is_dominant_integral(w)) out.push_back(w);
    return out;
}

std::vector<Weight> enumerate_g0_dominant(int m, std::int64_t max_height) {
    if (m < 1) throw std::invalid_argument("rank must be >= 1");
    std::vector<Weight> out;
    std::vector<std::int64_t> cur;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t budget, std::int64_t upper) {
        if (static_cast<int>(cur.size()) == m) {
            for (std::int64_t e = 0; e <= budget; ++e) out.push_back(Weight::integral(cur, e));
            return;
        }
        for (std::int64_t v = -budget; v <= std::min(budget, upper); ++v) {
            cur.push_back(v);
            rec(budget - (v < 0 ? -v : v), v);
            cur.pop_back();
        }
    };
    rec(max_height, max_height);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ospchar
