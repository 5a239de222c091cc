#include "ospchar/json_io.hpp"

#include <stdexcept>

namespace ospchar {

namespace {

Json half_value(HalfInt h) {
    if (h.is_integer()) return h.to_integer();
    return static_cast<double>(h.twice()) / 2.0;
}

HalfInt half_from(const Json& j) {
    if (j.is_number_integer()) return HalfInt(j.get<std::int64_t>());
    const double v = j.get<double>() * 2.0;
    const auto t = static_cast<std::int64_t>(v);
    if (static_cast<double>(t) != v) throw std::invalid_argument("weight entry is not a half-integer");
    return HalfInt::from_twice(t);
}

Json monomial_json(const Monomial& mon, int m) {
    Json x = Json::array();
    for (int i = 0; i < m; ++i) x.push_back(mon.x[static_cast<std::size_t>(i)]);
    return Json{{"x", x}, {"y", mon.y}};
}

}  // namespace

Json to_json(const Weight& w) {
    Json delta = Json::array(), delta2 = Json::array();
    for (HalfInt h : w.deltas()) {
        delta.push_back(half_value(h));
        delta2.push_back(h.twice());
    }
    return Json{{"m", w.rank()}, {"delta", delta}, {"eps", half_value(w.eps())}, {"delta2", delta2}, {"eps2", w.eps().twice()}};
}

Weight weight_from_json(const Json& j) {
    std::vector<HalfInt> d;
    HalfInt e;
    if (j.contains("delta2")) {
        for (const auto& v : j.at("delta2")) d.push_back(HalfInt::from_twice(v.get<std::int64_t>()));
        e = HalfInt::from_twice(j.at("eps2").get<std::int64_t>());
    } else {
        for (const auto& v : j.at("delta")) d.push_back(half_from(v));
        e = half_from(j.at("eps"));
    }
    if (j.contains("m") && j.at("m").get<int>() != static_cast<int>(d.size()))
        throw std::invalid_argument("weight JSON: m does not match the number of delta entries");
    return Weight(std::move(d), e);
}

Json to_json(const SignedPermutation& s) {
    Json perm = Json::array(), signs = Json::array();
    for (int t : s.targets()) perm.push_back(t + 1);
    for (int v : s.signs()) signs.push_back(v);
    return Json{{"perm", perm}, {"signs", signs}};
}

SignedPermutation signed_permutation_from_json(const Json& j) {
    std::vector<int> t, s;
    for (const auto& v : j.at("perm")) t.push_back(v.get<int>() - 1);
    for (const auto& v : j.at("signs")) s.push_back(v.get<int>());
    return SignedPermutation(std::move(t), std::move(s));
}

Json to_json(const TruncatedSeries& s) {
    Json terms = Json::array();
    s.for_each_term([&](const Monomial& mon, const mpz_class& c) {
        Json t = monomial_json(mon, s.rank());
        t["c"] = c.get_str();
        terms.push_back(std::move(t));
    });
    Json out{{"m", s.rank()}};
    out["cutoff"] = s.is_exact() ? Json("exact") : Json(s.cutoff());
    const auto lo = s.lower();
    if (lo && *lo != TruncatedSeries::kExact) out["lower"] = *lo;
    else out["lower"] = nullptr;
    out["terms"] = std::move(terms);
    return out;
}

TruncatedSeries series_from_json(const Json& j) {
    const int m = j.at("m").get<int>();
    const Json& c = j.at("cutoff");
    const std::int64_t cutoff = c.is_string() ? TruncatedSeries::kExact : c.get<std::int64_t>();
    std::optional<std::int64_t> lower;
    if (j.contains("lower") && !j.at("lower").is_null()) lower = j.at("lower").get<std::int64_t>();
    TruncatedSeries s(m, cutoff, lower);
    for (const auto& t : j.at("terms")) {
        std::vector<int> x;
        for (const auto& v : t.at("x")) x.push_back(v.get<int>());
        s.add_term(make_monomial(x, t.at("y").get<int>()), mpz_class(t.at("c").get<std::string>()));
    }
    return s;
}

Json to_json(const VermaExpansion& e) {
    Json fin = Json::array(), fam = Json::array();
    for (const auto& t : e.finite) fin.push_back(Json{{"coeff", t.coeff}, {"weight", to_json(t.weight)}});
    for (const auto& f : e.families) {
        Json jf{{"base", to_json(f.base)}, {"slot", f.slot}, {"j_lo", f.j_lo}};
        jf["j_hi"] = f.j_hi ? Json(*f.j_hi) : Json("inf");
        jf["base_sign"] = f.base_sign;
        jf["scale"] = f.scale;
        fam.push_back(std::move(jf));
    }
    return Json{{"m", e.rank}, {"finite", fin}, {"families", fam}};
}

VermaExpansion expansion_from_json(const Json& j) {
    VermaExpansion e;
    e.rank = j.at("m").get<int>();
    for (const auto& t : j.at("finite"))
        e.finite.push_back(VermaTerm{t.at("coeff").get<std::int64_t>(), weight_from_json(t.at("weight"))});
    for (const auto& f : j.at("families")) {
        VermaFamily v;
        v.base = weight_from_json(f.at("base"));
        v.slot = f.at("slot").get<int>();
        v.j_lo = f.at("j_lo").get<std::int64_t>();
        if (!f.at("j_hi").is_string()) v.j_hi = f.at("j_hi").get<std::int64_t>();
        v.base_sign = f.at("base_sign").get<int>();
        v.scale = f.contains("scale") ? f.at("scale").get<std::int64_t>() : 1;
        e.families.push_back(std::move(v));
    }
    return e;
}

Json to_json(const VerificationReport& r) {
    Json out{{"identity", r.identity}, {"m", r.m}};
    out["lambda"] = r.lambda ? Json(r.lambda->str()) : Json(nullptr);
    out["cutoff"] = r.cutoff;
    out["pass"] = r.pass;
    if (r.first_discrepancy) {
        const auto& d = *r.first_discrepancy;
        Json jd = monomial_json(d.monomial, r.m);
        jd["lhs"] = d.lhs.get_str();
        jd["rhs"] = d.rhs.get_str();
        out["first_discrepancy"] = std::move(jd);
    } else {
        out["first_discrepancy"] = nullptr;
    }
    out["detail"] = r.detail;
    return out;
}

}  // namespace ospchar
