#include "ospchar/laurent_series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace ospchar {

namespace {

constexpr std::int64_t kInf = TruncatedSeries::kExact;

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
    if (a == kInf || b == kInf) return kInf;
    return a + b;
}

struct XVecHash {
    std::size_t operator()(const XVec& x) const {
        std::size_t h = 1469598103934665603ull;
        for (auto v : x) h = (h ^ static_cast<std::uint32_t>(v)) * 1099511628211ull;
        return h;
    }
};

XVec add_x(const XVec& a, const XVec& b) {
    XVec r;
    for (int i = 0; i < kMaxRank; ++i) r[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
    return r;
}

// Makes p cover exponents [lo, hi] (inclusive) without trimming.
void ensure_range(YPoly& p, std::int32_t lo, std::int32_t hi) {
    if (p.c.empty()) {
        p.lo = lo;
        p.c.assign(static_cast<std::size_t>(hi - lo + 1), mpz_class(0));
        return;
    }
    const std::int32_t cur_hi = p.lo + static_cast<std::int32_t>(p.c.size()) - 1;
    if (lo < p.lo) {
        p.c.insert(p.c.begin(), static_cast<std::size_t>(p.lo - lo), mpz_class(0));
        p.lo = lo;
    }
    if (hi > cur_hi) p.c.resize(p.c.size() + static_cast<std::size_t>(hi - cur_hi), mpz_class(0));
}

// acc += k * a * b, untrimmed.
void add_product(YPoly& acc, const YPoly& a, const YPoly& b) {
    if (a.empty() || b.empty()) return;
    const auto na = static_cast<std::int32_t>(a.c.size());
    const auto nb = static_cast<std::int32_t>(b.c.size());
    ensure_range(acc, a.lo + b.lo, a.lo + b.lo + na + nb - 2);
    const std::int32_t off = a.lo + b.lo - acc.lo;
    for (std::int32_t i = 0; i < na; ++i) {
        const mpz_class& ai = a.c[static_cast<std::size_t>(i)];
        if (ai == 0) continue;
        for (std::int32_t j = 0; j < nb; ++j)
            mpz_addmul(acc.c[static_cast<std::size_t>(off + i + j)].get_mpz_t(), ai.get_mpz_t(),
                       b.c[static_cast<std::size_t>(j)].get_mpz_t());
    }
}

bool ypoly_equal(const YPoly& a, const YPoly& b) {
    if (a.lo != b.lo || a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i] != b.c[i]) return false;
    return true;
}

void check_rank(int rank) {
    if (rank < 0 || rank > kMaxRank)
        throw std::invalid_argument("series rank " + std::to_string(rank) + " outside 0.." + std::to_string(kMaxRank));
}

}  // namespace

std::int64_t x_degree(const XVec& x) {
    std::int64_t d = 0;
    for (auto v : x) d += v;
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) { return Monomial{add_x(a.x, b.x), a.y + b.y}; }

Monomial make_monomial(std::span<const int> x, int y) {
    if (x.size() > static_cast<std::size_t>(kMaxRank)) throw std::invalid_argument("monomial rank too large");
    Monomial m;
    std::copy(x.begin(), x.end(), m.x.begin());
    m.y = y;
    return m;
}

Monomial make_monomial(std::initializer_list<int> x, int y) {
    return make_monomial(std::span<const int>(x.begin(), x.size()), y);
}

bool CanonicalLess::operator()(const XVec& a, const XVec& b) const {
    const auto da = x_degree(a), db = x_degree(b);
    if (da != db) return da < db;
    return a < b;
}

bool CanonicalLess::operator()(const Monomial& a, const Monomial& b) const {
    if (a.x != b.x) return (*this)(a.x, b.x);
    return a.y < b.y;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    return XVecHash{}(m.x) * 31u + static_cast<std::uint32_t>(m.y);
}

std::string monomial_str(const Monomial& mon, int rank) {
    std::string out;
    auto factor = [&](const std::string& var, std::int32_t e) {
        if (e == 0) return;
        if (!out.empty()) out += '*';
        out += var;
        if (e != 1) out += '^' + std::to_string(e);
    };
    for (int i = 0; i < rank; ++i) factor("x" + std::to_string(i + 1), mon.x[static_cast<std::size_t>(i)]);
    factor("y", mon.y);
    return out.empty() ? "1" : out;
}

void YPoly::trim() {
    std::size_t first = 0;
    while (first < c.size() && c[first] == 0) ++first;
    if (first == c.size()) {
        c.clear();
        lo = 0;
        return;
    }
    std::size_t last = c.size();
    while (c[last - 1] == 0) --last;
    if (first > 0 || last < c.size()) {
        c = std::vector<mpz_class>(std::make_move_iterator(c.begin() + static_cast<std::ptrdiff_t>(first)),
                                   std::make_move_iterator(c.begin() + static_cast<std::ptrdiff_t>(last)));
        lo += static_cast<std::int32_t>(first);
    }
}

void YPoly::add(std::int32_t y, const mpz_class& v) {
    if (v == 0) return;
    ensure_range(*this, y, y);
    c[static_cast<std::size_t>(y - lo)] += v;
    trim();
}

void YPoly::add_scaled(const YPoly& other, const mpz_class& k) {
    if (other.empty() || k == 0) return;
    ensure_range(*this, other.lo, other.lo + static_cast<std::int32_t>(other.c.size()) - 1);
    const auto off = static_cast<std::size_t>(other.lo - lo);
    for (std::size_t i = 0; i < other.c.size(); ++i)
        mpz_addmul(c[off + i].get_mpz_t(), other.c[i].get_mpz_t(), k.get_mpz_t());
    trim();
}

mpz_class YPoly::at(std::int32_t y) const {
    if (c.empty() || y < lo || y >= lo + static_cast<std::int32_t>(c.size())) return 0;
    return c[static_cast<std::size_t>(y - lo)];
}

YPoly convolve(const YPoly& a, const YPoly& b) {
    YPoly r;
    add_product(r, a, b);
    r.trim();
    return r;
}

TruncatedSeries::TruncatedSeries(int rank, std::int64_t cutoff, std::optional<std::int64_t> lower)
    : rank_(rank), cutoff_(cutoff), lower_(cutoff == kExact ? std::nullopt : lower) {
    check_rank(rank);
}

TruncatedSeries TruncatedSeries::one(int rank, std::int64_t cutoff) {
    return monomial(rank, Monomial{}, 1, cutoff);
}

TruncatedSeries TruncatedSeries::monomial(int rank, const Monomial& mon, const mpz_class& coeff, std::int64_t cutoff) {
    TruncatedSeries s(rank, cutoff, mon.degree());
    s.add_term(mon, coeff);
    return s;
}

std::optional<std::int64_t> TruncatedSeries::lower() const {
    if (!is_exact()) return lower_;
    auto d = min_degree();
    return d ? *d : kInf;
}

void TruncatedSeries::add_term(const Monomial& mon, const mpz_class& c) {
    if (c == 0) return;
    const auto d = mon.degree();
    if (d > cutoff_) return;
    if (!is_exact() && lower_ && d < *lower_)
        throw std::logic_error("term " + monomial_str(mon, rank_) + " lies below the declared lower bound " +
                               std::to_string(*lower_));
    auto it = blocks_.find(mon.x);
    if (it == blocks_.end()) it = blocks_.emplace(mon.x, YPoly{}).first;
    it->second.add(mon.y, c);
    if (it->second.empty()) blocks_.erase(it);
}

void TruncatedSeries::add_block(const XVec& x, const YPoly& p, const mpz_class& k) {
    const auto d = x_degree(x);
    if (p.empty() || k == 0 || d > cutoff_) return;
    if (!is_exact() && lower_ && d < *lower_)
        throw std::logic_error("block below the declared lower bound " + std::to_string(*lower_));
    auto it = blocks_.find(x);
    if (it == blocks_.end()) it = blocks_.emplace(x, YPoly{}).first;
    it->second.add_scaled(p, k);
    if (it->second.empty()) blocks_.erase(it);
}

mpz_class TruncatedSeries::coeff(const Monomial& mon) const {
    auto it = blocks_.find(mon.x);
    return it == blocks_.end() ? mpz_class(0) : it->second.at(mon.y);
}

std::size_t TruncatedSeries::term_count() const {
    std::size_t n = 0;
    for (const auto& [x, p] : blocks_)
        for (const auto& v : p.c)
            if (v != 0) ++n;
    return n;
}

std::optional<std::int64_t> TruncatedSeries::min_degree() const {
    if (blocks_.empty()) return std::nullopt;
    return x_degree(blocks_.begin()->first);
}

std::optional<std::int64_t> TruncatedSeries::max_degree() const {
    if (blocks_.empty()) return std::nullopt;
    return x_degree(blocks_.rbegin()->first);
}

void TruncatedSeries::for_each_term(const std::function<void(const Monomial&, const mpz_class&)>& f) const {
    for (const auto& [x, p] : blocks_)
        for (std::size_t i = 0; i < p.c.size(); ++i)
            if (p.c[i] != 0) f(Monomial{x, p.lo + static_cast<std::int32_t>(i)}, p.c[i]);
}

std::vector<std::pair<Monomial, mpz_class>> TruncatedSeries::terms() const {
    std::vector<std::pair<Monomial, mpz_class>> out;
    for_each_term([&](const Monomial& m, const mpz_class& c) { out.emplace_back(m, c); });
    return out;
}

TruncatedSeries TruncatedSeries::truncated(std::int64_t cutoff) const {
    TruncatedSeries r(rank_, std::min(cutoff, cutoff_), lower());
    for (const auto& [x, p] : blocks_) {
        if (x_degree(x) > r.cutoff_) break;
        r.blocks_.emplace(x, p);
    }
    return r;
}

namespace {

std::optional<std::int64_t> combined_lower_for_sum(const TruncatedSeries& a, const TruncatedSeries& b) {
    auto la = a.lower(), lb = b.lower();
    if (!la || !lb) return std::nullopt;
    return std::min(*la, *lb);
}

}  // namespace

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    add_scaled(other, 1);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
    add_scaled(other, -1);
    return *this;
}

void TruncatedSeries::add_scaled(const TruncatedSeries& other, const mpz_class& k) {
    if (rank_ != other.rank_) throw std::invalid_argument("series rank mismatch in sum");
    const std::int64_t new_cutoff = std::min(cutoff_, other.cutoff_);
    if (new_cutoff != kInf) {
        auto lo = combined_lower_for_sum(*this, other);
        if (new_cutoff < cutoff_) *this = truncated(new_cutoff);
        lower_ = lo;
    }
    cutoff_ = new_cutoff;
    for (const auto& [x, p] : other.blocks_) {
        if (x_degree(x) > cutoff_) break;
        auto it = blocks_.find(x);
        if (it == blocks_.end()) it = blocks_.emplace(x, YPoly{}).first;
        it->second.add_scaled(p, k);
        if (it->second.empty()) blocks_.erase(it);
    }
}

TruncatedSeries& TruncatedSeries::operator*=(const mpz_class& k) {
    if (k == 0) {
        blocks_.clear();
        return *this;
    }
    for (auto& [x, p] : blocks_)
        for (auto& v : p.c) v *= k;
    return *this;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.rank_ != b.rank_ || a.cutoff_ != b.cutoff_ || a.blocks_.size() != b.blocks_.size()) return false;
    auto ia = a.blocks_.begin();
    for (auto ib = b.blocks_.begin(); ib != b.blocks_.end(); ++ia, ++ib)
        if (ia->first != ib->first || !ypoly_equal(ia->second, ib->second)) return false;
    return true;
}

std::string TruncatedSeries::str() const {
    std::string out;
    for_each_term([&](const Monomial& m, const mpz_class& c) {
        const bool neg = c < 0;
        mpz_class a = abs(c);
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        const std::string ms = monomial_str(m, rank_);
        if (ms == "1") out += a.get_str();
        else if (a == 1) out += ms;
        else out += a.get_str() + '*' + ms;
    });
    return out.empty() ? "0" : out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("series rank mismatch in product");
    std::int64_t cutoff = kInf;
    auto la = a.lower(), lb = b.lower();
    if (!a.is_exact()) {
        if (!lb) throw std::logic_error("product cutoff unsound: lower bound of the right operand is unknown");
        cutoff = std::min(cutoff, sat_add(a.cutoff(), *lb));
    }
    if (!b.is_exact()) {
        if (!la) throw std::logic_error("product cutoff unsound: lower bound of the left operand is unknown");
        cutoff = std::min(cutoff, sat_add(b.cutoff(), *la));
    }
    std::optional<std::int64_t> lower;
    if (la && lb) lower = sat_add(*la, *lb);
    TruncatedSeries r(a.rank(), cutoff, lower);

    std::unordered_map<XVec, YPoly, XVecHash> acc;
    for (const auto& [xa, pa] : a.blocks()) {
        const auto da = x_degree(xa);
        for (const auto& [xb, pb] : b.blocks()) {
            if (cutoff != kInf && da + x_degree(xb) > cutoff) break;
            add_product(acc[add_x(xa, xb)], pa, pb);
        }
    }
    for (auto& [x, p] : acc) {
        p.trim();
        if (!p.empty()) r.add_block(x, p);
    }
    return r;
}

TruncatedSeries geom_inverse(int rank, const Monomial& mon, std::int64_t cutoff) {
    const auto d = mon.degree();
    if (d <= 0)
        throw std::invalid_argument("geom_inverse: monomial " + monomial_str(mon, rank) +
                                    " has x-degree <= 0; the geometric series cannot be truncated");
    TruncatedSeries s(rank, cutoff, 0);
    Monomial p{};
    for (std::int64_t k = 0; k * d <= cutoff; ++k) {
        s.add_term(p, 1);
        p = p * mon;
    }
    return s;
}

Monomial weight_monomial(const Weight& w) {
    if (w.rank() > kMaxRank) throw std::invalid_argument("weight_monomial: rank exceeds " + std::to_string(kMaxRank));
    if (!w.is_integral()) throw std::invalid_argument("weight_monomial: weight " + w.str() + " is not integral");
    Monomial m;
    for (int i = 1; i <= w.rank(); ++i) m.x[static_cast<std::size_t>(i - 1)] = static_cast<std::int32_t>(-w.delta(i).to_integer());
    m.y = static_cast<std::int32_t>(w.eps().to_integer());
    return m;
}

TruncatedSeries divide_one_minus(const TruncatedSeries& s, const Monomial& mon) {
    if (!s.is_exact()) throw std::invalid_argument("divide_one_minus: dividend must be an exact polynomial");
    const int n = s.rank() + 1;
    auto vec = [&](const Monomial& m) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(n));
        for (int i = 0; i < s.rank(); ++i) v[static_cast<std::size_t>(i)] = m.x[static_cast<std::size_t>(i)];
        v[static_cast<std::size_t>(n - 1)] = m.y;
        return v;
    };
    const auto d = vec(mon);
    std::int64_t norm = 0;
    for (auto v : d) norm += v * v;
    if (norm == 0) throw std::invalid_argument("divide_one_minus: division by 1 - 1");

    auto floor_div = [](std::int64_t a, std::int64_t b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); };
    auto power = [&](std::int64_t k) {
        Monomial p{};
        for (int i = 0; i < s.rank(); ++i) p.x[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(k * mon.x[static_cast<std::size_t>(i)]);
        p.y = static_cast<std::int32_t>(k * mon.y);
        return p;
    };

    // Each term t = base * mon^k; group by base, then q_k = sum_{k' <= k} s_{k'}.
    std::map<Monomial, std::map<std::int64_t, mpz_class>, CanonicalLess> lines;
    s.for_each_term([&](const Monomial& t, const mpz_class& c) {
        const auto v = vec(t);
        std::int64_t dot = 0;
        for (int i = 0; i < n; ++i) dot += v[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(i)];
        const std::int64_t k = floor_div(dot, norm);
        Monomial inv = power(-k);
        lines[t * inv][k] += c;
    });

    TruncatedSeries q(s.rank());
    for (const auto& [base, line] : lines) {
        mpz_class run = 0;
        std::int64_t k = line.begin()->first;
        const std::int64_t kmax = line.rbegin()->first;
        for (; k <= kmax; ++k) {
            auto it = line.find(k);
            if (it != line.end()) run += it->second;
            if (k < kmax) q.add_term(base * power(k), run);
        }
        if (run != 0)
            throw std::domain_error("divide_one_minus: " + monomial_str(mon, s.rank()) +
                                    " does not divide the polynomial exactly");
    }
    return q;
}

TruncatedSeries invert_variables(const TruncatedSeries& s) {
    if (!s.is_exact()) throw std::invalid_argument("invert_variables: exact polynomial required");
    TruncatedSeries r(s.rank());
    for (const auto& [x, p] : s.blocks()) {
        XVec nx;
        for (int i = 0; i < kMaxRank; ++i) nx[static_cast<std::size_t>(i)] = -x[static_cast<std::size_t>(i)];
        r.add_block(nx, p);
    }
    return r;
}

Monomial act(const SignedPermutation& sigma, int eps_sign, const Monomial& mon) {
    Monomial r;
    const auto v = sigma.apply(std::span<const std::int32_t>(mon.x.data(), mon.x.size()));
    std::copy(v.begin(), v.end(), r.x.begin());
    r.y = eps_sign < 0 ? -mon.y : mon.y;
    return r;
}

std::vector<WeylPair> weyl_image(const TruncatedSeries& s, const SignedPermutation& sigma, int eps_sign) {
    if (sigma.rank() > s.rank()) throw std::invalid_argument("weyl_image: permutation rank exceeds series rank");
    std::vector<WeylPair> out;
    s.for_each_term([&](const Monomial& m, const mpz_class& c) {
        Monomial img = act(sigma, eps_sign, m);
        if (img.degree() > s.cutoff()) return;
        out.push_back(WeylPair{m, c, img, s.coeff(img)});
    });
    return out;
}

std::optional<Discrepancy> first_discrepancy(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("first_discrepancy: rank mismatch");
    const std::int64_t window = std::min(a.cutoff(), b.cutoff());
    const auto ta = a.truncated(window).terms();
    const auto tb = b.truncated(window).terms();
    CanonicalLess less;
    std::size_t i = 0, j = 0;
    while (i < ta.size() || j < tb.size()) {
        if (j == tb.size() || (i < ta.size() && less(ta[i].first, tb[j].first))) return Discrepancy{ta[i].first, ta[i].second, 0};
        if (i == ta.size() || less(tb[j].first, ta[i].first)) return Discrepancy{tb[j].first, 0, tb[j].second};
        if (ta[i].second != tb[j].second) return Discrepancy{ta[i].first, ta[i].second, tb[j].second};
        ++i;
        ++j;
    }
    return std::nullopt;
}

}  // namespace ospchar
