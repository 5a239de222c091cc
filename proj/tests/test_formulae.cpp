#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "ospchar/character_formulae.hpp"
#include "ospchar/verma.hpp"

using namespace ospchar;

namespace {

Weight W(std::initializer_list<std::int64_t> d, std::int64_t e) { return Weight::integral(d, e); }

std::vector<VermaTerm> terms(std::initializer_list<std::pair<std::int64_t, Weight>> list) {
    std::vector<VermaTerm> out;
    for (const auto& [c, w] : list) out.push_back(VermaTerm{c, w});
    std::sort(out.begin(), out.end(), [](const VermaTerm& a, const VermaTerm& b) { return a.weight < b.weight; });
    return out;
}

std::vector<Weight> tail_weights(int m, std::int64_t max_height) {
    std::vector<Weight> out;
    for (const auto& w : enumerate_dominant(m, max_height))
        if (is_tail_atypical(w)) out.push_back(w);
    return out;
}

}  // namespace

TEST_CASE("typical expansions") {
    CHECK(expansion_typical(W({2}, 0)).finite == terms({{1, W({2}, 0)}, {-1, W({-1}, 0)}}));
    CHECK(expansion_typical(W({1}, 1)).finite == terms({{1, W({1}, 1)}, {-1, W({0}, 1)}}));
    CHECK_FALSE(first_discrepancy(expansion_to_series(expansion_typical(W({1}, 1)), 6), kac_typical_character(W({1}, 1), 6)));

    for (int m = 1; m <= 3; ++m)
        for (const auto& lam : enumerate_dominant(m, 4)) {
            if (!classify(lam).typical) continue;
            const auto e = expansion_typical(lam);
            CHECK(e.finite.size() == (std::size_t{1} << m));
            CHECK(e.families.empty());
            std::set<Weight> seen;
            for (const auto& t : e.finite) {
                CHECK(is_g0_dominant(t.weight));
                seen.insert(t.weight);
            }
            CHECK(seen.size() == e.finite.size());
        }
}

TEST_CASE("Gamma_m terms stay g0-dominant when lambda_m >= 1") {
    for (int m = 1; m <= 3; ++m)
        for (const auto& lam : enumerate_dominant(m, 5)) {
            if (lam.delta(m) < 1) continue;
            for (const auto& t : gamma_terms(lam).finite) CHECK_MESSAGE(is_g0_dominant(t.weight), lam.str());
        }
}

TEST_CASE("tail expansions") {
    const auto e1 = expansion_tail(Weight::zero(1));
    CHECK(e1.finite.empty());
    REQUIRE(e1.families.size() == 1);
    CHECK(e1.families[0].base == Weight::zero(1));
    CHECK(e1.families[0].slot == 1);
    CHECK(e1.families[0].j_lo == 0);
    CHECK_FALSE(e1.families[0].j_hi);
    CHECK(e1.families[0].member(2) == W({-2}, 2));
    CHECK(e1.families[0].coeff(3) == -1);

    const auto e2 = expansion_tail(Weight::zero(2));
    CHECK(e2.finite.empty());
    REQUIRE(e2.families.size() == 2);
    const VermaFamily* id = nullptr;
    const VermaFamily* fl = nullptr;
    for (const auto& f : e2.families) (f.base == Weight::zero(2) ? id : fl) = &f;
    REQUIRE(id);
    REQUIRE(fl);
    CHECK(id->j_lo == 0);
    CHECK(id->slot == 2);
    CHECK(id->member(3) == W({0, -3}, 3));
    CHECK(fl->base == W({-1, 0}, 0));
    CHECK(fl->j_lo == 1);
    CHECK(fl->slot == 2);
    CHECK_FALSE(fl->j_hi);
    CHECK(fl->coeff(1) == 1);
    CHECK(fl->coeff(2) == -1);
}

TEST_CASE("net coefficient of M_lambda is one") {
    for (int m = 1; m <= 3; ++m)
        for (const auto& lam : enumerate_dominant(m, 4)) {
            const auto e = irreducible_expansion(lam);
            CHECK_MESSAGE(e.coefficient_of(lam) == 1, lam.str());
            CHECK_MESSAGE(!validate_expansion(e), lam.str() << ": " << validate_expansion(e).value_or(""));
        }
}

TEST_CASE("family limits sit exactly on the g0-dominance boundary") {
    for (int m = 1; m <= 3; ++m)
        for (const auto& lam : tail_weights(m, 4))
            for (const auto& f : expansion_tail(lam).families) {
                CHECK(is_g0_dominant(f.member(f.j_lo)));
                if (f.j_lo > 0) CHECK_MESSAGE(!is_g0_dominant(f.member(f.j_lo - 1)), lam.str());
                if (!f.j_hi) {
                    CHECK(f.slot == m);
                    continue;
                }
                CHECK(is_g0_dominant(f.member(*f.j_hi)));
                const Weight past = f.member(*f.j_hi + 1);
                CHECK(!is_g0_dominant(past));
                // the extra member allowed by a -1/2 upper limit contributes nothing
                CHECK_MESSAGE(straightened_g0_character(past).is_zero(), lam.str());
            }
}

TEST_CASE("boundary expansion") {
    const auto e = expansion_boundary(W({1}, 0));
    CHECK(e.finite == terms({{1, W({1}, 0)}, {-1, W({0}, 0)}}));
    REQUIRE(e.families.size() == 1);
    CHECK(e.families[0].base == Weight::zero(1));
    CHECK(expansion_to_series(e, 4) == natural_character(1).truncated(4));

    // lambda_k = ... = lambda_m = 1, lambda_0 = m - k with k = 1
    const Weight b = W({1, 1}, 1);
    CHECK(is_boundary_atypical(b));
    CHECK(lambda_tail(b) == W({0, 0}, 0));
    const auto s = expansion_to_series(expansion_boundary(b), 6);
    CHECK(oracle::nonnegative(s));
    CHECK(oracle::weyl_asymmetry(s).empty());
    CHECK(s.coeff(weight_monomial(b)) == 1);
}

TEST_CASE("non-tail expansions") {
    const Weight l = W({2}, 1);
    const auto closed = expansion_nontail_closed(l);
    CHECK(closed.finite == terms({{1, W({2}, 1)}, {-1, W({-1}, 1)}, {-1, W({1}, 0)}, {1, W({0}, 0)}}));
    REQUIRE(closed.families.size() == 1);
    CHECK(closed.families[0].base == Weight::zero(1));
    CHECK(closed.families[0].coeff(0) == -2);
    CHECK(closed.families[0].coeff(1) == 2);
    CHECK(materialize(expansion_nontail_recursive(l), 10) == materialize(closed, 10));

    const Weight l2 = W({2, 2}, 1);
    auto expected = gamma_terms(l2);
    expected.merge(irreducible_expansion(W({2, 1}, 0)), -1);
    // phi^2 of (2,2;1) is its tail weight (2,0;0)
    expected.merge(expansion_tail(W({2, 0}, 0)), -1);
    expected.normalize();
    CHECK(materialize(expansion_nontail_recursive(l2), 12) == materialize(expected, 12));
    CHECK(expansion_nontail_recursive(l2).coefficient_of(l2) == 1);
}

TEST_CASE("recursive and closed non-tail expansions agree") {
    int theta_two = 0;
    for (int m = 1; m <= 2; ++m)
        for (const auto& lam : enumerate_dominant(m, 5)) {
            const auto c = classify(lam);
            if (c.typical || c.tail || *c.theta < 1) continue;
            if (*c.theta == 2) ++theta_two;
            const auto r = expansion_nontail_recursive(lam);
            const auto k = expansion_nontail_closed(lam);
            CHECK_MESSAGE(materialize(r, 10) == materialize(k, 10), lam.str());
            CHECK_FALSE(first_discrepancy(expansion_to_series(r, 6), expansion_to_series(k, 6)));
        }
    CHECK(theta_two > 0);
}

TEST_CASE("dispatch") {
    CHECK(materialize(irreducible_expansion(Weight::zero(2)), 8) == materialize(expansion_tail(Weight::zero(2)), 8));
    CHECK(irreducible_expansion(W({2}, 0)).finite == expansion_typical(W({2}, 0)).finite);
    CHECK(materialize(irreducible_expansion(W({2}, 1)), 8) == materialize(expansion_nontail_closed(W({2}, 1)), 8));
    CHECK_THROWS_AS(irreducible_expansion(W({0}, 1)), std::invalid_argument);
}

TEST_CASE("expansion series") {
    for (int m = 1; m <= 3; ++m)
        CHECK(expansion_to_series(expansion_tail(Weight::zero(m)), 3) == TruncatedSeries::one(m, 3));
    CHECK_FALSE(first_discrepancy(expansion_to_series(expansion_typical(W({2}, 0)), 4), kac_typical_character(W({2}, 0), 4)));
}

TEST_CASE("generating series C_lambda") {
    for (int m = 1; m <= 4; ++m) {
        const int d = m == 4 ? 4 : 6;
        CHECK(c_lambda_series(Weight::zero(m), d) == TruncatedSeries::one(m, d));
        CHECK(c_lambda_series_gamma_form(Weight::zero(m), d) == TruncatedSeries::one(m, d));
    }
    for (const Weight& lam : {W({1, 0}, 0), W({2, 0}, 0), W({1, 1}, 0)}) {
        REQUIRE(c_series_applicable(lam));
        const auto f = expansion_to_series(irreducible_expansion(lam), 6);
        CHECK_FALSE(first_discrepancy(c_lambda_series(lam, 6), f));
        CHECK_FALSE(first_discrepancy(c_lambda_series_gamma_form(lam, 6), f));
    }
    CHECK_FALSE(c_series_applicable(W({2, 2}, 1)));
    CHECK_THROWS_AS(c_lambda_series(W({2, 2}, 1), 6), std::invalid_argument);
}

TEST_CASE("C_lambda times C_delta1 is the sum over the neighbour set") {
    for (int m = 2; m <= 3; ++m) {
        const std::int64_t d = 5;
        Weight d1 = Weight::zero(m);
        d1.set_delta(1, 1);
        for (const auto& lam : tail_weights(m, 3)) {
            const auto lhs = mul(c_lambda_series(lam, d + 1), c_lambda_series(d1, d + 1));
            TruncatedSeries rhs(m, d, -lam.delta_sum().to_integer() - 1);
            for (const auto& mu : neighbor_set(lam, NeighborFlavor::super)) {
                REQUIRE(c_series_applicable(mu));
                rhs += c_lambda_series(mu, d);
            }
            const auto bad = first_discrepancy(lhs, rhs);
            CHECK_MESSAGE(!bad, lam.str());
        }
    }
}

TEST_CASE("mutated expansions differ from the correct ones") {
    const Weight z = Weight::zero(2);
    for (Mutation mu : {Mutation::parity_sign, Mutation::j_lo_formula, Mutation::tau_orientation, Mutation::upper_limit}) {
        CHECK(parse_mutation(mutation_name(mu)) == mu);
        bool differs = false;
        for (const auto& lam : tail_weights(2, 3))
            differs = differs || materialize(expansion_tail(lam, mu), 8) != materialize(expansion_tail(lam), 8);
        CHECK_MESSAGE(differs, mutation_name(mu));
    }
    CHECK(validate_expansion(expansion_tail(z, Mutation::j_lo_formula)));
    CHECK_FALSE(parse_mutation("nonsense"));
}
