#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ospchar/json_io.hpp"
#include "ospchar/verification.hpp"
#include "ospchar/verma.hpp"

using namespace ospchar;

namespace {

Weight W(std::initializer_list<std::int64_t> d, std::int64_t e) { return Weight::integral(d, e); }

void require_pass(const VerificationReport& r) { CHECK_MESSAGE(r.pass, report_line(r)); }

}  // namespace

TEST_CASE("trivial-character identity") {
    const auto r1 = check_trivial_identity(1, 2);
    require_pass(r1);
    CHECK_FALSE(r1.first_discrepancy);
    require_pass(check_trivial_identity(2, 6));
    require_pass(check_trivial_identity(3, 6));
}

TEST_CASE("typical dual route") {
    require_pass(check_typical_dual_route(W({2}, 0), 6));
    const Weight l = W({2, 1}, 1);
    if (classify(l).typical) require_pass(check_typical_dual_route(l, 6));
    CHECK_FALSE(check_typical_dual_route(W({1}, 0), 6).pass);
}

TEST_CASE("Verma tensor identity") {
    require_pass(check_verma_tensor(Weight::zero(1), 6));
    require_pass(check_verma_tensor(W({1, 0}, 0), 6));
    require_pass(check_verma_tensor(W({1, 1}, 2), 6));
    require_pass(check_verma_tensor(W({0, -2}, 1), 6));
}

TEST_CASE("C equals F") {
    require_pass(check_c_equals_f(Weight::zero(2), 6));
    require_pass(check_c_equals_f(W({2, 0}, 0), 6));
    require_pass(check_c_equals_f(W({1, 1, 0}, 0), 6));
    CHECK_FALSE(check_c_equals_f(W({1, 0}, 0), 6, Mutation::parity_sign).pass);
}

TEST_CASE("irreducible sanity") {
    require_pass(check_irreducible_sanity(W({1}, 0), 8));
    require_pass(check_irreducible_sanity(Weight::zero(3), 8));
    const auto nat = expansion_to_series(irreducible_expansion(W({1}, 0)), 8);
    CHECK(nat.term_count() == 5);
    CHECK(nat == natural_character(1).truncated(8));
    CHECK(expansion_to_series(irreducible_expansion(Weight::zero(2)), 8) == TruncatedSeries::one(2, 8));
    CHECK_FALSE(check_irreducible_sanity(Weight::zero(2), 6, Mutation::j_lo_formula).pass);
}

TEST_CASE("tail tensor decomposition") {
    require_pass(check_tensor_decomposition_tail(Weight::zero(1), 6));
    require_pass(check_tensor_decomposition_tail(W({1, 0}, 0), 6));
    require_pass(check_tensor_decomposition_tail(W({2, 0}, 0), 6));
}

TEST_CASE("cross path") {
    require_pass(check_cross_path(W({2}, 1), 8));
    require_pass(check_cross_path(W({2, 2}, 1), 8));
}

TEST_CASE("suite runner") {
    SuiteConfig cfg;
    cfg.m_max = 1;
    cfg.max_height = 2;
    cfg.cutoff = 4;
    const auto a = run_suite(cfg);
    CHECK_FALSE(a.empty());
    for (const auto& r : a) require_pass(r);
    cfg.threads = 3;
    const auto b = run_suite(cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json(a[i]).dump() == to_json(b[i]).dump());

    cfg.m_min = 2;
    cfg.m_max = 2;
    cfg.cutoff = 6;
    cfg.max_height = 3;
    cfg.mutation = Mutation::upper_limit;
    cfg.suites = {"c-equals-f"};
    bool failed = false;
    for (const auto& r : run_suite(cfg))
        if (!r.pass) {
            failed = true;
            CHECK(r.first_discrepancy);
        }
    CHECK(failed);

    CHECK(is_suite_name("all"));
    CHECK(is_suite_name("tensor-tail"));
    CHECK_FALSE(is_suite_name("bogus"));
}

TEST_CASE("JSON round trips") {
    const Weight w({HalfInt::from_twice(3), HalfInt::from_twice(-1)}, HalfInt::from_twice(1));
    const Json jw = to_json(w);
    CHECK(jw["delta2"] == Json::array({3, -1}));
    CHECK(weight_from_json(jw) == w);
    CHECK(weight_from_json(Json::parse(R"({"m":2,"delta":[2,1],"eps":3})")) == W({2, 1}, 3));
    CHECK_THROWS(weight_from_json(Json::parse(R"({"m":3,"delta":[2,1],"eps":3})")));

    const auto s = SignedPermutation::swap(3, 1, 2) * SignedPermutation::flip(3, 3);
    CHECK(signed_permutation_from_json(to_json(s)) == s);

    const auto series = universal_factor(2, 3);
    const Json js = to_json(series);
    CHECK(js["cutoff"] == 3);
    CHECK(series_from_json(Json::parse(js.dump())) == series);
    const auto exact = natural_character(2);
    CHECK(to_json(exact)["cutoff"] == "exact");
    CHECK(series_from_json(to_json(exact)) == exact);

    for (const Weight& lam : {W({2, 2}, 1), Weight::zero(2), W({3, 1}, 0)}) {
        const auto e = irreducible_expansion(lam);
        const auto back = expansion_from_json(Json::parse(to_json(e).dump()));
        CHECK(back.finite == e.finite);
        CHECK(back.families == e.families);
    }

    const auto r = check_c_equals_f(W({1, 0}, 0), 6, Mutation::parity_sign);
    const Json jr = to_json(r);
    CHECK(jr["pass"] == false);
    CHECK(jr["first_discrepancy"].is_object());
    CHECK_FALSE(jr.contains("elapsed"));
}
