#include "ospchar/character_formulae.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "ospchar/schur.hpp"
#include "ospchar/verma.hpp"

namespace ospchar {

namespace {

std::int64_t sign_pow(std::int64_t j) { return (j % 2 == 0) ? 1 : -1; }

SignedPermutation embed(const SignedPermutation& sigma, int m) {
    std::vector<int> t(sigma.targets().begin(), sigma.targets().end());
    std::vector<int> s(sigma.signs().begin(), sigma.signs().end());
    for (int i = sigma.rank(); i < m; ++i) {
        t.push_back(i);
        s.push_back(1);
    }
    return SignedPermutation(std::move(t), std::move(s));
}

std::int64_t lowest_degree(const Weight& nu) { return -nu.delta_sum().to_integer(); }

void require_dominant(const Weight& lambda, const char* what) {
    if (auto why = dominance_violation(lambda))
        throw std::invalid_argument(std::string(what) + ": weight " + lambda.str() + " is not dominant integral (" + *why + ")");
}

}  // namespace

Weight VermaFamily::member(std::int64_t j) const {
    const int m = base.rank();
    return base + j * (Weight::epsilon(m) - Weight::delta_unit(m, slot));
}

std::int64_t VermaFamily::coeff(std::int64_t j) const { return scale * base_sign * sign_pow(j); }

std::int64_t VermaFamily::last_j_within(std::int64_t cutoff) const {
    const std::int64_t bound = cutoff + base.delta_sum().to_integer();
    return j_hi ? std::min(*j_hi, bound) : bound;
}

void VermaExpansion::merge(const VermaExpansion& other, std::int64_t k) {
    if (rank == 0) rank = other.rank;
    if (other.rank != rank) throw std::invalid_argument("merging expansions of different rank");
    for (const auto& t : other.finite) finite.push_back(VermaTerm{t.coeff * k, t.weight});
    for (auto f : other.families) {
        f.scale *= k;
        families.push_back(std::move(f));
    }
}

void VermaExpansion::normalize() {
    std::map<Weight, std::int64_t> fin;
    for (const auto& t : finite) fin[t.weight] += t.coeff;
    finite.clear();
    for (const auto& [w, c] : fin)
        if (c != 0) finite.push_back(VermaTerm{c, w});

    using Key = std::tuple<int, Weight, std::int64_t, std::optional<std::int64_t>, int>;
    std::map<Key, std::int64_t> fam;
    for (const auto& f : families) {
        if (f.empty()) continue;
        fam[Key{f.slot, f.base, f.j_lo, f.j_hi, f.base_sign}] += f.scale;
    }
    families.clear();
    for (const auto& [k, s] : fam) {
        if (s == 0) continue;
        const auto& [slot, base, lo, hi, sign] = k;
        families.push_back(VermaFamily{base, slot, lo, hi, sign, s});
    }
}

std::int64_t VermaExpansion::coefficient_of(const Weight& nu) const {
    std::int64_t c = 0;
    for (const auto& t : finite)
        if (t.weight == nu) c += t.coeff;
    for (const auto& f : families) {
        const HalfInt dj = nu.eps() - f.base.eps();
        if (!dj.is_integer()) continue;
        const std::int64_t j = dj.to_integer();
        if (j < f.j_lo || (f.j_hi && j > *f.j_hi)) continue;
        if (f.member(j) == nu) c += f.coeff(j);
    }
    return c;
}

std::optional<std::string> validate_expansion(const VermaExpansion& e) {
    std::optional<CentralCharKey> key;
    std::optional<std::string> err;
    auto check = [&](const Weight& w, const std::string& where) {
        if (err) return;
        if (!w.is_integral() || !is_g0_dominant(w)) {
            err = where + ": weight " + w.str() + " is not g0-dominant";
            return;
        }
        const CentralCharKey k = central_char_key(w);
        if (!key) key = k;
        else if (k != *key) err = where + ": weight " + w.str() + " lies in a different block";
    };
    for (const auto& t : e.finite) check(t.weight, "finite term");
    for (const auto& f : e.families) {
        if (f.empty()) continue;
        const std::string where = "family at slot " + std::to_string(f.slot) + " from " + f.base.str();
        if (f.slot < 1 || f.slot > e.rank) return where + ": slot out of range";
        if (!f.j_hi && f.slot != e.rank) return where + ": unbounded family off the last slot";
        check(f.member(f.j_lo), where + " (j=" + std::to_string(f.j_lo) + ")");
        const std::int64_t j_end = f.j_hi ? *f.j_hi : f.j_lo + 1;
        check(f.member(j_end), where + " (j=" + std::to_string(j_end) + ")");
    }
    return err;
}

const char* mutation_name(Mutation m) {
    switch (m) {
        case Mutation::none: return "none";
        case Mutation::parity_sign: return "parity-sign";
        case Mutation::j_lo_formula: return "j-lo";
        case Mutation::tau_orientation: return "tau-orientation";
        case Mutation::upper_limit: return "upper-limit";
    }
    return "?";
}

std::optional<Mutation> parse_mutation(std::string_view name) {
    for (Mutation m : {Mutation::none, Mutation::parity_sign, Mutation::j_lo_formula, Mutation::tau_orientation,
                       Mutation::upper_limit})
        if (name == mutation_name(m)) return m;
    return std::nullopt;
}

VermaExpansion gamma_terms(const Weight& lambda) {
    const int m = lambda.rank();
    const Weight lt = rho_shifted(lambda);
    const Weight r = rho(m);
    VermaExpansion e;
    e.rank = m;
    for (const auto& sigma : enumerate_gamma(m)) e.finite.push_back(VermaTerm{parity(sigma), act(sigma, lt) - r});
    return e;
}

VermaExpansion expansion_typical(const Weight& lambda) {
    require_dominant(lambda, "typical expansion");
    if (!atypical_roots(lambda).empty())
        throw std::invalid_argument("typical expansion: weight " + lambda.str() + " is atypical");
    VermaExpansion e = gamma_terms(lambda);
    e.normalize();
    return e;
}

VermaExpansion expansion_tail(const Weight& lambda, Mutation mutation) {
    require_dominant(lambda, "tail expansion");
    if (!is_tail_atypical(lambda))
        throw std::invalid_argument("tail expansion: weight " + lambda.str() + " is not tail atypical");
    const int m = lambda.rank();
    const Weight lt = rho_shifted(lambda);
    const Weight r = rho(m);
    const HalfInt half = HalfInt::half();
    VermaExpansion e;
    e.rank = m;
    for (const auto& sigma : enumerate_gamma(m - 1)) {
        const Weight sv = act(sigma, lt);
        const SignedPermutation full = embed(sigma, m);
        for (int i = flat_index(sigma, lambda); i <= m; ++i) {
            const SignedPermutation t = tau(i, m);
            const SignedPermutation ts = mutation == Mutation::tau_orientation ? full * t : t * full;
            const Weight tv = act(ts, lt);

            VermaFamily f;
            f.base = tv - r;
            f.slot = i;
            f.base_sign = mutation == Mutation::parity_sign ? parity(sigma) : parity(ts);
            if (i == 1) {
                f.j_lo = 0;
            } else {
                const HalfInt edge = mutation == Mutation::j_lo_formula ? -half : half;
                f.j_lo = std::max<std::int64_t>(0, (edge - sv.delta(i - 1)).to_integer());
            }
            if (i < m) {
                const HalfInt edge = mutation == Mutation::upper_limit ? HalfInt::from_twice(3) : HalfInt::from_twice(-3);
                f.j_hi = (edge - tv.delta(i + 1)).to_integer();
            }
            if (!f.empty()) e.families.push_back(std::move(f));
        }
    }
    e.normalize();
    return e;
}

VermaExpansion expansion_boundary(const Weight& lambda, Mutation mutation) {
    require_dominant(lambda, "boundary expansion");
    if (!is_boundary_atypical(lambda))
        throw std::invalid_argument("boundary expansion: weight " + lambda.str() +
                                    " is not an atypical weight one step above its tail weight");
    VermaExpansion e = expansion_tail(lambda_tail(lambda), mutation);
    e.merge(gamma_terms(lambda));
    e.normalize();
    return e;
}

VermaExpansion expansion_nontail_recursive(const Weight& lambda, Mutation mutation) {
    require_dominant(lambda, "recursive expansion");
    if (atypical_roots(lambda).empty() || is_tail_atypical(lambda))
        throw std::invalid_argument("recursive expansion: weight " + lambda.str() + " is not non-tail atypical");
    if (theta(lambda) == 0)
        throw std::invalid_argument("recursive expansion: theta = 0 for " + lambda.str() + "; use the boundary expansion");
    const Weight next = phi(lambda);
    const Weight tail = lambda_tail(lambda);
    VermaExpansion e = gamma_terms(lambda);
    const VermaExpansion below =
        theta(next) == 0 ? expansion_boundary(next, mutation) : expansion_nontail_recursive(next, mutation);
    e.merge(below, -1);
    if (phi(next) == tail) e.merge(expansion_tail(tail, mutation), -1);
    e.normalize();
    return e;
}

VermaExpansion expansion_nontail_closed(const Weight& lambda, Mutation mutation) {
    require_dominant(lambda, "closed expansion");
    if (atypical_roots(lambda).empty() || is_tail_atypical(lambda))
        throw std::invalid_argument("closed expansion: weight " + lambda.str() + " is not non-tail atypical");
    const auto chain = phi_chain(lambda);
    const auto th = static_cast<std::int64_t>(chain.size()) - 1;
    if (th == 0) throw std::invalid_argument("closed expansion: theta = 0 for " + lambda.str() + "; use the boundary expansion");
    VermaExpansion e;
    e.rank = lambda.rank();
    for (std::int64_t i = 0; i <= th; ++i) e.merge(gamma_terms(chain[static_cast<std::size_t>(i)]), sign_pow(i));
    e.merge(expansion_tail(lambda_tail(lambda), mutation), 2 * sign_pow(th));
    e.normalize();
    return e;
}

VermaExpansion irreducible_expansion(const Weight& lambda, Mutation mutation) {
    require_dominant(lambda, "irreducible expansion");
    if (atypical_roots(lambda).empty()) return expansion_typical(lambda);
    if (is_tail_atypical(lambda)) return expansion_tail(lambda, mutation);
    if (theta(lambda) == 0) return expansion_boundary(lambda, mutation);
    return expansion_nontail_closed(lambda, mutation);
}

std::vector<VermaTerm> materialize(const VermaExpansion& e, std::int64_t j_max) {
    std::map<Weight, std::int64_t> acc;
    for (const auto& t : e.finite) acc[t.weight] += t.coeff;
    for (const auto& f : e.families) {
        const std::int64_t hi = f.j_hi ? std::min(*f.j_hi, j_max) : j_max;
        for (std::int64_t j = f.j_lo; j <= hi; ++j) acc[f.member(j)] += f.coeff(j);
    }
    std::vector<VermaTerm> out;
    for (const auto& [w, c] : acc)
        if (c != 0) out.push_back(VermaTerm{c, w});
    return out;
}

namespace {

// A * G with G an exact polynomial whose terms of degree <= cutoff are all
// present; the result is exact up to the cutoff.
TruncatedSeries times_universal(int m, const TruncatedSeries& g, std::int64_t cutoff) {
    const std::int64_t low = std::min<std::int64_t>(g.min_degree().value_or(cutoff + 1), cutoff + 1);
    if (g.is_zero()) return TruncatedSeries(m, cutoff, low);
    TruncatedSeries r = mul(universal_factor(m, cutoff - low), g).truncated(cutoff);
    r.set_lower(low);
    return r;
}

}  // namespace

TruncatedSeries expansion_to_series(const VermaExpansion& e, std::int64_t cutoff) {
    const int m = e.rank;
    std::map<Weight, std::int64_t> acc;
    for (const auto& t : e.finite)
        if (lowest_degree(t.weight) <= cutoff) acc[t.weight] += t.coeff;
    for (const auto& f : e.families) {
        const std::int64_t hi = f.last_j_within(cutoff);
        for (std::int64_t j = f.j_lo; j <= hi; ++j) acc[f.member(j)] += f.coeff(j);
    }
    TruncatedSeries g(m);
    for (const auto& [w, c] : acc)
        if (c != 0) g.add_scaled(straightened_g0_character(w), c);
    return times_universal(m, g, cutoff);
}

bool c_series_applicable(const Weight& lambda) {
    if (!is_dominant_integral(lambda)) return false;
    if (is_tail_atypical(lambda)) return true;
    return lambda.eps() == 0 && lambda.delta(lambda.rank()) == 1;
}

namespace {

Weight c_series_base(const Weight& lambda, bool& boundary) {
    if (!c_series_applicable(lambda))
        throw std::invalid_argument("C series: weight " + lambda.str() +
                                    " is neither tail atypical nor of the form lambda_m = 1, lambda_0 = 0");
    boundary = !is_tail_atypical(lambda);
    return boundary ? lambda - Weight::delta_unit(lambda.rank(), lambda.rank()) : lambda;
}

// S(idx) * (y^j + ... + y^-j) scaled by c, added into g.
void add_schur_string(TruncatedSeries& g, const std::vector<std::int64_t>& idx, std::int64_t j, std::int64_t c) {
    const TruncatedSeries s = schur_series(idx);
    if (s.is_zero()) return;
    const YPoly ys = sl2_string(static_cast<int>(idx.size()), j).blocks().begin()->second;
    for (const auto& [x, p] : s.blocks()) g.add_block(x, convolve(p, ys), c);
}

}  // namespace

TruncatedSeries c_lambda_series(const Weight& lambda, std::int64_t cutoff) {
    bool boundary = false;
    const Weight base = c_series_base(lambda, boundary);
    const int m = base.rank();
    const int n = m - 1;
    std::vector<std::int64_t> b(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) b[static_cast<std::size_t>(i - 1)] = base.delta(i).to_integer();
    auto lam = [&](int i) { return b[static_cast<std::size_t>(i - 1)]; };

    TruncatedSeries g(m);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> js, rs;
        for (int j = 1; j <= n; ++j) ((mask >> (j - 1)) & 1u ? js : rs).push_back(j);
        SelfConjugatePartition ups;
        for (int j : js) ups.arms.push_back(j - 1);
        std::vector<std::int64_t> mu = ups.rows(n);
        std::size_t pos = 0;
        for (auto it = js.rbegin(); it != js.rend(); ++it) mu[pos++] += lam(m - *it);
        for (int r : rs) mu[pos++] -= lam(m - r);
        std::int64_t t = 0, size = 0;
        for (int j : js) t += j;
        for (auto v : mu) size += v;

        std::vector<std::int64_t> idx(static_cast<std::size_t>(m));
        std::copy(mu.begin(), mu.end(), idx.begin() + 1);
        for (std::int64_t j = 0; j + size <= cutoff; ++j) {
            idx[0] = j;
            add_schur_string(g, idx, j, sign_pow(j + t));
        }
        if (boundary) {
            idx[0] = -1;
            add_schur_string(g, idx, 0, sign_pow(t));
            idx[0] = 0;
            add_schur_string(g, idx, 0, -sign_pow(t));
        }
    }
    return times_universal(m, g, cutoff);
}

TruncatedSeries c_lambda_series_gamma_form(const Weight& lambda, std::int64_t cutoff) {
    bool boundary = false;
    const Weight base = c_series_base(lambda, boundary);
    const int m = base.rank();
    const Weight lt = rho_shifted(base);
    const Weight r = rho(m);
    const Weight down = Weight::epsilon(m) - Weight::delta_unit(m, m);

    TruncatedSeries g(m);
    for (const auto& sigma : enumerate_gamma(m - 1)) {
        const Weight sv = act(sigma, lt) - r;
        const int par = parity(sigma);
        for (std::int64_t j = 0; lowest_degree(sv) + j <= cutoff; ++j)
            g.add_scaled(straightened_g0_character(sv + j * down), par * sign_pow(j));
        if (boundary) {
            g.add_scaled(straightened_g0_character(sv + Weight::delta_unit(m, m)), par);
            g.add_scaled(straightened_g0_character(sv), -par);
        }
    }
    return times_universal(m, g, cutoff);
}

}  // namespace ospchar
