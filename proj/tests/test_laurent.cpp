#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "ospchar/laurent_series.hpp"
#include "ospchar/signed_permutation.hpp"

using namespace ospchar;

namespace {

TruncatedSeries poly(int m, std::initializer_list<std::pair<Monomial, int>> terms, std::int64_t cutoff = TruncatedSeries::kExact,
                     std::optional<std::int64_t> lower = std::nullopt) {
    TruncatedSeries s(m, cutoff, cutoff == TruncatedSeries::kExact ? std::nullopt : lower);
    for (const auto& [mon, c] : terms) s.add_term(mon, c);
    return s;
}

Monomial M(std::initializer_list<int> x, int y = 0) { return make_monomial(x, y); }

TruncatedSeries random_series(std::mt19937& rng, int m, std::int64_t cutoff) {
    TruncatedSeries s(m, cutoff, 0);
    std::uniform_int_distribution<int> e(0, 2), yy(-2, 2), c(-3, 3);
    for (int t = 0; t < 6; ++t) {
        std::vector<int> x(static_cast<std::size_t>(m));
        for (auto& v : x) v = e(rng);
        s.add_term(make_monomial(x, yy(rng)), c(rng));
    }
    return s;
}

}  // namespace

TEST_CASE("monomials") {
    CHECK(M({1, -2}, 3).degree() == -1);
    CHECK(M({0}, 1) * M({0}, -1) == M({0}, 0));
    CHECK(monomial_str(M({-1, 1}, 2), 2) == "x1^-1*x2*y^2");
    CHECK(monomial_str(M({0, 0}, 0), 2) == "1");
    CHECK(CanonicalLess{}(M({0, 0}, 5), M({1, 0}, -5)));
}

TEST_CASE("products") {
    const auto a = poly(1, {{M({0}), 1}, {M({1}), 1}});
    const auto b = poly(1, {{M({0}), 1}, {M({1}), -1}});
    CHECK(mul(a, b).truncated(2) == poly(1, {{M({0}), 1}, {M({2}), -1}}, 2, 0).truncated(2));

    const auto p = poly(1, {{M({0}), 1}, {M({1}, 1), 1}});
    const auto q = poly(1, {{M({0}), 1}, {M({1}, -1), 1}});
    CHECK(mul(p, q).truncated(2).str() == "1 + x1*y^-1 + x1*y + x1^2");

    CHECK(mul(poly(1, {{M({0}, 1), 1}}), poly(1, {{M({0}, -1), 1}})).str() == "1");
}

TEST_CASE("truncated products keep the sound window") {
    // cutoff min(Da + Lb, Db + La), lower La + Lb
    TruncatedSeries a(1, 4, -1), b(1, 3, 0);
    a.add_term(M({-1}), 1);
    b.add_term(M({0}), 1);
    const auto c = mul(a, b);
    CHECK(c.cutoff() == 2);
    CHECK(c.lower() == -1);

    TruncatedSeries unknown(1, 3);
    unknown.add_term(M({0}), 1);
    CHECK_THROWS_AS(mul(unknown, b), std::logic_error);
    CHECK_THROWS_AS(a.add_term(M({-2}), 1), std::logic_error);
    CHECK_THROWS_AS(mul(a, TruncatedSeries(2)), std::invalid_argument);
}

TEST_CASE("geometric inverse") {
    CHECK(geom_inverse(1, M({1}), 3).str() == "1 + x1 + x1^2 + x1^3");
    CHECK(geom_inverse(2, M({1, 1}), 3).str() == "1 + x1*x2");
    const auto one_minus = poly(2, {{M({0, 0}), 1}, {M({1, 0}, 1), -1}});
    for (int d = 0; d <= 6; ++d) {
        const auto g = geom_inverse(2, M({1, 0}, 1), d);
        CHECK(mul(one_minus, g).truncated(d) == TruncatedSeries::one(2, d));
    }
    CHECK_THROWS_AS(geom_inverse(1, M({0}, 1), 3), std::invalid_argument);
    CHECK_THROWS_AS(geom_inverse(2, M({1, -1}), 3), std::invalid_argument);
}

TEST_CASE("weight monomials") {
    CHECK(weight_monomial(Weight::delta_unit(2, 1)) == M({-1, 0}));
    CHECK(weight_monomial(Weight::epsilon(2)) == M({0, 0}, 1));
    CHECK(weight_monomial(Weight::zero(2)) == M({0, 0}));
    CHECK_THROWS_AS(weight_monomial(rho(2)), std::invalid_argument);
    const Weight a = Weight::integral({3, -1}, 2), b = Weight::integral({-2, 5}, -1);
    CHECK(weight_monomial(a + b) == weight_monomial(a) * weight_monomial(b));
}

TEST_CASE("Weyl images") {
    const auto flip = SignedPermutation::flip(1, 1);
    const auto sym = poly(1, {{M({1}), 1}, {M({-1}), 1}});
    for (const auto& p : weyl_image(sym, flip, 1)) CHECK(p.equal());

    const auto x = poly(1, {{M({1}), 1}});
    bool flagged = false;
    for (const auto& p : weyl_image(x, flip, 1))
        if (p.source == M({1}) && p.image == M({-1})) {
            CHECK(p.source_coeff == 1);
            CHECK(p.image_coeff == 0);
            flagged = !p.equal();
        }
    CHECK(flagged);

    const auto nat = poly(1, {{M({0}), 1}, {M({1}), 1}, {M({-1}), 1}, {M({0}, 1), 1}, {M({0}, -1), 1}});
    for (int eps : {1, -1})
        for (const auto& s : {SignedPermutation::identity(1), flip})
            for (const auto& p : weyl_image(nat, s, eps)) CHECK(p.equal());
}

TEST_CASE("ring axioms on the retained window") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 1 + trial % 3;
        const auto a = random_series(rng, m, 5);
        const auto b = random_series(rng, m, 4);
        const auto c = random_series(rng, m, 6);
        const auto left = mul(mul(a, b), c);
        const auto right = mul(a, mul(b, c));
        CHECK_FALSE(first_discrepancy(left, right));
        const auto d1 = mul(a, b + c);
        const auto d2 = mul(a, b) + mul(a, c);
        CHECK_FALSE(first_discrepancy(d1, d2));
        CHECK_FALSE(first_discrepancy(mul(a, b), mul(b, a)));
        // agrees with the schoolbook product
        const auto ref = oracle::times(oracle::from_series(a), oracle::from_series(b), static_cast<int>(mul(a, b).cutoff()));
        CHECK(oracle::from_series(mul(a, b)) == ref);
    }
}

TEST_CASE("exact division by 1 - mon") {
    const auto q = poly(2, {{M({1, 0}, 2), 3}, {M({-1, 2}), -1}, {M({0, 0}), 5}});
    const Monomial mon = M({1, -1}, 1);
    const auto one_minus = poly(2, {{M({0, 0}), 1}, {mon, -1}});
    const auto prod = mul(q, one_minus);
    CHECK(divide_one_minus(prod, mon) == q);
    CHECK_THROWS_AS(divide_one_minus(q, mon), std::domain_error);
    CHECK_THROWS_AS(divide_one_minus(q, M({0, 0})), std::invalid_argument);
}

TEST_CASE("variable inversion and discrepancy reporting") {
    const auto s = poly(2, {{M({2, -1}, 1), 4}});
    CHECK(invert_variables(s) == poly(2, {{M({-2, 1}, 1), 4}}));
    const auto a = poly(1, {{M({0}), 1}, {M({1}), 2}});
    const auto b = poly(1, {{M({0}), 1}, {M({1}), 3}});
    const auto d = first_discrepancy(a, b);
    REQUIRE(d);
    CHECK(d->monomial == M({1}));
    CHECK(d->lhs == 2);
    CHECK(d->rhs == 3);
    // outside the shorter window nothing is compared
    CHECK_FALSE(first_discrepancy(a.truncated(0), b));
}
