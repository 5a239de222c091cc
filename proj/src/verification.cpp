#include "ospchar/verification.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "ospchar/schur.hpp"
#include "ospchar/verma.hpp"

namespace ospchar {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t sign_pow(std::int64_t j) { return (j % 2 == 0) ? 1 : -1; }

VerificationReport start(std::string name, int m, std::optional<Weight> lambda, std::int64_t cutoff) {
    VerificationReport r;
    r.identity = std::move(name);
    r.m = m;
    r.lambda = std::move(lambda);
    r.cutoff = cutoff;
    return r;
}

// Runs body, converting exceptions into a failed report and timing it.
VerificationReport run_check(VerificationReport r, const std::function<void(VerificationReport&)>& body) {
    const auto t0 = Clock::now();
    try {
        body(r);
    } catch (const std::exception& ex) {
        r.pass = false;
        r.detail = std::string("error: ") + ex.what();
    }
    r.elapsed = Clock::now() - t0;
    return r;
}

void compare(VerificationReport& r, const TruncatedSeries& lhs, const TruncatedSeries& rhs, const std::string& what = "") {
    const std::int64_t window = std::min(lhs.cutoff(), rhs.cutoff());
    auto d = first_discrepancy(lhs, rhs);
    const std::string prefix = what.empty() ? "" : what + ": ";
    if (d) {
        r.pass = false;
        r.first_discrepancy = d;
        r.detail = prefix + "mismatch within x-degree <= " + std::to_string(window);
    } else {
        r.pass = true;
        r.detail = prefix + "equal on x-degree <= " + std::to_string(window);
    }
}

// sum_k (-mon)^k up to the cutoff.
TruncatedSeries alternating_geom(int m, const Monomial& mon, std::int64_t cutoff) {
    TruncatedSeries s = geom_inverse(m, mon, cutoff);
    TruncatedSeries r(m, cutoff, 0);
    s.for_each_term([&](const Monomial& t, const mpz_class& c) { r.add_term(t, (t.degree() / mon.degree()) % 2 ? -c : c); });
    return r;
}

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

// Whether the monomial of weight nu lies strictly above lambda: nu - lambda
// is a nonzero non-negative combination of the simple roots
// delta_1 - delta_2, ..., delta_{m-1} - delta_m, delta_m - eps, eps.
bool strictly_above(const Monomial& nu, const Monomial& lambda, int m) {
    std::int64_t partial = 0;
    bool nonzero = false;
    for (int i = 0; i < m; ++i) {
        const std::int64_t w = -(nu.x[static_cast<std::size_t>(i)] - lambda.x[static_cast<std::size_t>(i)]);
        nonzero = nonzero || w != 0;
        partial += w;
        if (partial < 0) return false;
    }
    const std::int64_t w0 = nu.y - lambda.y;
    nonzero = nonzero || w0 != 0;
    return nonzero && partial + w0 >= 0;
}

}  // namespace

VerificationReport check_trivial_identity(int m, std::int64_t cutoff) {
    return run_check(start("trivial", m, std::nullopt, cutoff), [&](VerificationReport& r) {
        if (m < 1 || m > kMaxRank) throw std::invalid_argument("rank out of range");
        TruncatedSeries lhs = TruncatedSeries::one(m, cutoff);
        for (int i = 0; i < m; ++i) {
            Monomial xi;
            xi.x[static_cast<std::size_t>(i)] = 1;
            TruncatedSeries f = TruncatedSeries::one(m);
            f.add_term(xi, -1);
            lhs = mul(lhs, f);
            for (int j = i + 1; j < m; ++j) {
                Monomial xij = xi;
                xij.x[static_cast<std::size_t>(j)] = 1;
                TruncatedSeries g = TruncatedSeries::one(m);
                g.add_term(xij, -1);
                lhs = mul(lhs, g);
            }
            Monomial up = xi, down = xi;
            up.y = 1;
            down.y = -1;
            lhs = mul(lhs, alternating_geom(m, up, cutoff));
            lhs = mul(lhs, alternating_geom(m, down, cutoff));
        }
        lhs = lhs.truncated(cutoff);

        TruncatedSeries rhs(m);
        for (const auto& mu : enumerate_self_conjugate(m - 2)) {
            const std::vector<std::int64_t> rows = mu.rows(m - 1);
            const std::int64_t size = mu.size();
            std::vector<std::int64_t> idx(static_cast<std::size_t>(m));
            std::copy(rows.begin(), rows.end(), idx.begin() + 1);
            for (std::int64_t j = 0; j + size <= cutoff; ++j) {
                idx[0] = j;
                const TruncatedSeries s = schur_series(idx);
                if (s.is_zero()) continue;
                const YPoly ys = sl2_string(m, j).blocks().begin()->second;
                for (const auto& [x, p] : s.blocks()) rhs.add_block(x, convolve(p, ys), sign_pow(j + mu.t_value()));
            }
        }
        compare(r, lhs, rhs.truncated(cutoff));
    });
}

VerificationReport check_typical_dual_route(const Weight& lambda, std::int64_t cutoff) {
    return run_check(start("typical", lambda.rank(), lambda, cutoff), [&](VerificationReport& r) {
        compare(r, kac_typical_character(lambda, cutoff), expansion_to_series(expansion_typical(lambda), cutoff));
    });
}

VerificationReport check_verma_tensor(const Weight& lambda, std::int64_t cutoff) {
    return run_check(start("verma-tensor", lambda.rank(), lambda, cutoff), [&](VerificationReport& r) {
        const int m = lambda.rank();
        const TruncatedSeries lhs = mul(verma_character(lambda, cutoff + 1), natural_character(m));
        TruncatedSeries rhs(m, cutoff, std::nullopt);
        bool first = true;
        for (const Weight& mu : neighbor_set(lambda, NeighborFlavor::even)) {
            if (first) {
                rhs = verma_character(mu, cutoff);
                first = false;
            } else {
                rhs += verma_character(mu, cutoff);
            }
        }
        compare(r, lhs, rhs);
    });
}

VerificationReport check_c_equals_f(const Weight& lambda, std::int64_t cutoff, Mutation mutation) {
    return run_check(start("c-equals-f", lambda.rank(), lambda, cutoff), [&](VerificationReport& r) {
        const VermaExpansion e = irreducible_expansion(lambda, mutation);
        const TruncatedSeries f = expansion_to_series(e, cutoff);
        compare(r, c_lambda_series(lambda, cutoff), f, "partition sum");
        if (!r.pass) return;
        compare(r, c_lambda_series_gamma_form(lambda, cutoff), f, "signed-permutation sum");
    });
}

VerificationReport check_irreducible_sanity(const Weight& lambda, std::int64_t cutoff, Mutation mutation) {
    return run_check(start("sanity", lambda.rank(), lambda, cutoff), [&](VerificationReport& r) {
        const int m = lambda.rank();
        const VermaExpansion e = irreducible_expansion(lambda, mutation);
        if (auto bad = validate_expansion(e)) {
            r.pass = false;
            r.detail = "malformed expansion: " + *bad;
            return;
        }
        if (const auto c = e.coefficient_of(lambda); c != 1) {
            r.pass = false;
            r.detail = "net coefficient of M_lambda is " + std::to_string(c);
            return;
        }
        const TruncatedSeries s = expansion_to_series(e, cutoff);
        const Monomial top = weight_monomial(lambda);
        r.pass = true;
        s.for_each_term([&](const Monomial& mon, const mpz_class& c) {
            if (!r.pass) return;
            if (c < 0) {
                r.pass = false;
                r.first_discrepancy = Discrepancy{mon, c, 0};
                r.detail = "negative coefficient";
            } else if (strictly_above(mon, top, m)) {
                r.pass = false;
                r.first_discrepancy = Discrepancy{mon, c, 0};
                r.detail = "weight above the highest weight";
            }
        });
        if (!r.pass) return;
        if (const mpz_class c = s.coeff(top); c != 1) {
            r.pass = false;
            r.first_discrepancy = Discrepancy{top, c, 1};
            r.detail = "highest-weight coefficient";
            return;
        }
        std::size_t pairs = 0;
        for (const auto& w : all_signed_permutations(m)) {
            for (int es : {1, -1}) {
                for (const WeylPair& p : weyl_image(s, w, es)) {
                    ++pairs;
                    if (!p.equal()) {
                        r.pass = false;
                        r.first_discrepancy = Discrepancy{p.source, p.source_coeff, p.image_coeff};
                        r.detail = "Weyl image " + w.str() + (es < 0 ? " with y -> 1/y" : "") + " sends it to " +
                                   monomial_str(p.image, m);
                        return;
                    }
                }
            }
        }
        r.detail = std::to_string(s.term_count()) + " terms, " + std::to_string(pairs) +
                   " Weyl pairs on x-degree <= " + std::to_string(cutoff);
    });
}

VerificationReport check_tensor_decomposition_tail(const Weight& lambda, std::int64_t cutoff, Mutation mutation) {
    return run_check(start("tensor-tail", lambda.rank(), lambda, cutoff), [&](VerificationReport& r) {
        if (!is_tail_atypical(lambda)) throw std::invalid_argument("weight " + lambda.str() + " is not tail atypical");
        const int m = lambda.rank();
        const TruncatedSeries lhs =
            mul(expansion_to_series(irreducible_expansion(lambda, mutation), cutoff + 1), natural_character(m));
        TruncatedSeries rhs(m, cutoff, std::nullopt);
        bool first = true;
        for (const Weight& mu : neighbor_set(lambda, NeighborFlavor::super)) {
            TruncatedSeries t = expansion_to_series(irreducible_expansion(mu, mutation), cutoff);
            if (first) {
                rhs = std::move(t);
                first = false;
            } else {
                rhs += t;
            }
        }
        compare(r, lhs, rhs);
    });
}

VerificationReport check_cross_path(const Weight& lambda, std::int64_t cutoff, std::int64_t j_max, Mutation mutation) {
    return run_check(start("cross-path", lambda.rank(), lambda, cutoff), [&](VerificationReport& r) {
        const VermaExpansion rec = expansion_nontail_recursive(lambda, mutation);
        const VermaExpansion closed = expansion_nontail_closed(lambda, mutation);
        const auto a = materialize(rec, j_max);
        const auto b = materialize(closed, j_max);
        if (a != b) {
            r.pass = false;
            std::size_t i = 0;
            while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
            r.detail = "materialized expansions differ at entry " + std::to_string(i);
            return;
        }
        compare(r, expansion_to_series(rec, cutoff), expansion_to_series(closed, cutoff));
        if (r.pass) r.detail = std::to_string(a.size()) + " terms equal for j <= " + std::to_string(j_max) + "; " + r.detail;
    });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"trivial", "typical", "verma-tensor", "c-equals-f",
                                                "sanity",  "tensor-tail", "cross-path"};
    return names;
}

bool is_suite_name(const std::string& name) {
    if (name == "all") return true;
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<VerificationReport> run_suite(const SuiteConfig& config) {
    std::vector<std::string> selected;
    for (const auto& s : config.suites) {
        if (!is_suite_name(s)) throw std::invalid_argument("unknown suite '" + s + "'");
        if (s == "all") selected = suite_names();
    }
    if (selected.empty()) selected = config.suites;
    auto wants = [&](const std::string& n) { return std::find(selected.begin(), selected.end(), n) != selected.end(); };

    const std::int64_t d = config.cutoff;
    const Mutation mu = config.mutation;
    std::vector<std::function<VerificationReport()>> work;
    for (const auto& name : suite_names()) {
        if (!wants(name)) continue;
        for (int m = config.m_min; m <= config.m_max; ++m) {
            if (name == "trivial") {
                work.emplace_back([=] { return check_trivial_identity(m, d); });
                continue;
            }
            if (name == "verma-tensor") {
                for (const Weight& w : enumerate_g0_dominant(m, config.max_height))
                    work.emplace_back([=] { return check_verma_tensor(w, d); });
                continue;
            }
            for (const Weight& w : enumerate_dominant(m, config.max_height)) {
                const bool typical = atypical_roots(w).empty();
                const bool tail = !typical && is_tail_atypical(w);
                if (name == "typical" && typical) work.emplace_back([=] { return check_typical_dual_route(w, d); });
                if (name == "c-equals-f" && c_series_applicable(w))
                    work.emplace_back([=] { return check_c_equals_f(w, d, mu); });
                if (name == "sanity") work.emplace_back([=] { return check_irreducible_sanity(w, d, mu); });
                if (name == "tensor-tail" && tail)
                    work.emplace_back([=] { return check_tensor_decomposition_tail(w, d, mu); });
                if (name == "cross-path" && !typical && !tail && theta(w) >= 1)
                    work.emplace_back([=] { return check_cross_path(w, d, 12, mu); });
            }
        }
    }

    unsigned threads = config.threads;
    if (threads == 0) {
        threads = 1;
        if (const char* env = std::getenv("OSPCHAR_THREADS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v > 0) threads = static_cast<unsigned>(v);
        }
    }
    std::vector<VerificationReport> out(work.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < work.size(); i = next++) out[i] = work[i]();
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads && t < work.size(); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

std::string report_line(const VerificationReport& r) {
    std::string s = r.pass ? "PASS " : "FAIL ";
    s += r.identity + " m=" + std::to_string(r.m);
    if (r.lambda) s += " lambda=" + r.lambda->str();
    s += " D=" + std::to_string(r.cutoff);
    if (!r.detail.empty()) s += "  " + r.detail;
    if (r.first_discrepancy) {
        const auto& d = *r.first_discrepancy;
        s += "  at " + monomial_str(d.monomial, r.m) + ": " + d.lhs.get_str() + " vs " + d.rhs.get_str();
    }
    return s;
}

}  // namespace ospchar
