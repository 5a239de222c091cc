// Command-line front end: classify weights, compute characters, run checks.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ospchar/character_formulae.hpp"
#include "ospchar/json_io.hpp"
#include "ospchar/verification.hpp"
#include "ospchar/weight.hpp"

using namespace ospchar;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string root_str(const AtypicalRoot& r) {
    return "delta_" + std::to_string(r.slot) + (r.sign > 0 ? "+eps" : "-eps");
}

std::string join_half(const std::vector<HalfInt>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

// "M(0,-j;j)" for the family member at symbolic j.
std::string family_member_str(const VermaFamily& f) {
    auto with_j = [](HalfInt b, const char* op) {
        if (b == 0) return std::string(op[0] == '-' ? "-j" : "j");
        return b.str() + op + "j";
    };
    std::string s = "M(";
    for (int i = 1; i <= f.base.rank(); ++i) {
        if (i > 1) s += ',';
        s += i == f.slot ? with_j(f.base.delta(i), "-") : f.base.delta(i).str();
    }
    return s + ";" + with_j(f.base.eps(), "+") + ")";
}

std::string signed_coeff(std::int64_t c) {
    if (c == 1) return "+";
    if (c == -1) return "-";
    return (c > 0 ? "+" : "") + std::to_string(c) + "*";
}

std::string expansion_text(const VermaExpansion& e) {
    std::ostringstream os;
    for (auto it = e.finite.rbegin(); it != e.finite.rend(); ++it)
        os << signed_coeff(it->coeff) << "M(" << it->weight.str() << ")\n";
    for (const auto& f : e.families) {
        os << signed_coeff(f.scale * f.base_sign) << "sum_{j=" << f.j_lo << "}^{"
           << (f.j_hi ? std::to_string(*f.j_hi) : std::string("inf")) << "} (-1)^j " << family_member_str(f) << "\n";
    }
    return os.str();
}

Weight parse_checked(const std::string& text, int m) {
    try {
        return parse_weight(text, m);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
}

int cmd_classify(int m, const std::string& text, bool json) {
    const Weight w = parse_checked(text, m);
    if (auto why = dominance_violation(w)) {
        if (json) {
            std::cout << Json{{"weight", w.str()}, {"dominant", false}, {"violation", *why}}.dump() << "\n";
        } else {
            std::cout << "weight: " << w.str() << "\n";
            std::cout << "dominant: no (" << *why << ")\n";
        }
        return kExitUsage;
    }
    const Classification c = classify(w);
    std::optional<Weight> tail;
    std::vector<Weight> chain;
    if (!c.typical) {
        tail = lambda_tail(w);
        if (!c.tail) chain = phi_chain(w);
    }
    if (json) {
        Json roots = Json::array();
        for (const auto& r : c.atypical_roots) roots.push_back(root_str(r));
        Json type = Json::array();
        for (HalfInt h : c.atypical_type) type.push_back(h.str());
        Json jc = Json::array();
        for (const auto& x : chain) jc.push_back(x.str());
        Json out{{"weight", w.str()}, {"dominant", true}, {"typical", c.typical}, {"atypical_roots", roots},
                 {"tail", c.tail}, {"atypical_type", type}};
        out["tail_weight"] = tail ? Json(tail->str()) : Json(nullptr);
        out["phi_chain"] = jc;
        out["theta"] = c.theta ? Json(*c.theta) : Json(nullptr);
        std::cout << out.dump() << "\n";
        return kExitPass;
    }
    std::cout << "weight: " << w.str() << "\n";
    std::cout << "dominant: yes\n";
    std::cout << "typical: " << (c.typical ? "yes" : "no") << "\n";
    if (!c.typical) {
        std::cout << "atypical roots:";
        for (const auto& r : c.atypical_roots) std::cout << " " << root_str(r);
        std::cout << "\n";
        std::cout << "tail atypical: " << (c.tail ? "yes" : "no") << "\n";
        std::cout << "atypical type: " << join_half(c.atypical_type) << "\n";
        std::cout << "tail weight: " << tail->str() << "\n";
        if (!c.tail) {
            std::cout << "phi chain:";
            for (const auto& x : chain) std::cout << " " << x.str() << " ->";
            std::cout << " " << tail->str() << "\n";
            std::cout << "theta: " << *c.theta << "\n";
        }
    }
    return kExitPass;
}

int cmd_character(int m, const std::string& text, std::int64_t cutoff, std::optional<std::int64_t> j_max,
                  const std::string& format, bool json) {
    const Weight w = parse_checked(text, m);
    if (auto why = dominance_violation(w)) throw UsageError("weight " + w.str() + " is not dominant: " + *why);
    const std::int64_t sum = w.delta_sum().to_integer();
    if (cutoff < -sum) throw UsageError("cutoff must be at least -(l1+...+lm) = " + std::to_string(-sum));
    if (j_max && *j_max < 0) throw UsageError("--j-max must be non-negative");
    const VermaExpansion e = irreducible_expansion(w);
    const bool want_exp = format != "series";
    const bool want_series = format != "expansion";
    const std::int64_t jm = j_max.value_or(cutoff + sum);

    if (json) {
        Json out{{"weight", to_json(w)}};
        if (want_exp) {
            out["expansion"] = to_json(e);
            Json mat = Json::array();
            for (const auto& t : materialize(e, jm)) mat.push_back(Json{{"coeff", t.coeff}, {"weight", t.weight.str()}});
            out["j_max"] = jm;
            out["materialized"] = mat;
        }
        if (want_series) out["series"] = to_json(expansion_to_series(e, cutoff));
        std::cout << out.dump() << "\n";
        return kExitPass;
    }
    if (want_exp) {
        std::cout << "expansion of L(" << w.str() << "):\n" << expansion_text(e);
        if (j_max) {
            std::cout << "materialized (j <= " << jm << "):\n";
            for (const auto& t : materialize(e, jm)) std::cout << signed_coeff(t.coeff) << "M(" << t.weight.str() << ")\n";
        }
    }
    if (want_series) {
        std::cout << "series (x-degree <= " << cutoff << "):\n" << expansion_to_series(e, cutoff).str() << "\n";
    }
    return kExitPass;
}

int cmd_verify(const std::string& suite, int m, int m_min, std::int64_t cutoff, std::int64_t max_height,
               const std::string& mutation, unsigned threads, bool json) {
    if (!is_suite_name(suite)) throw UsageError("unknown suite '" + suite + "'");
    auto mut = parse_mutation(mutation);
    if (!mut) throw UsageError("unknown mutation '" + mutation + "'");
    if (m_min < 1 || m < m_min) throw UsageError("need 1 <= --m-min <= --m");
    SuiteConfig cfg;
    cfg.m_min = m_min;
    cfg.m_max = m;
    cfg.cutoff = cutoff;
    cfg.max_height = max_height;
    cfg.suites = {suite};
    cfg.threads = threads;
    cfg.mutation = *mut;
    const auto reports = run_suite(cfg);
    std::size_t failed = 0;
    for (const auto& r : reports) {
        if (!r.pass) ++failed;
        if (json) std::cout << to_json(r).dump() << "\n";
        else std::cout << report_line(r) << "\n";
    }
    if (!json) std::cout << reports.size() - failed << "/" << reports.size() << " passed\n";
    return failed == 0 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characters of finite-dimensional irreducible osp(3|2m)-modules"};
    app.require_subcommand(1);

    int m = 1;
    std::string weight;
    std::int64_t cutoff = 6;
    std::optional<std::int64_t> j_max;
    std::string format = "both";
    std::string output = "text";
    std::int64_t max_height = 3;
    int m_min = 1;
    std::string suite;
    std::string mutation = "none";
    unsigned threads = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    auto* classify_cmd = app.add_subcommand("classify", "Dominance, atypicality, tail weight, phi-chain");
    classify_cmd->add_option("--m", m, "rank m")->required()->check(CLI::Range(1, kMaxRank));
    classify_cmd->add_option("--weight", weight, "\"l1,...,lm;l0\"")->required();
    add_common(classify_cmd);

    auto* char_cmd = app.add_subcommand("character", "Verma expansion and truncated character series");
    char_cmd->add_option("--m", m, "rank m")->required()->check(CLI::Range(1, kMaxRank));
    char_cmd->add_option("--weight", weight, "\"l1,...,lm;l0\"")->required();
    char_cmd->add_option("--cutoff", cutoff, "total x-degree cutoff")->capture_default_str();
    char_cmd->add_option("--j-max", j_max, "family materialization bound (default cutoff + l1+...+lm)");
    char_cmd->add_option("--format", format, "expansion, series or both")
        ->check(CLI::IsMember({"expansion", "series", "both"}))
        ->capture_default_str();
    add_common(char_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run identity checks");
    verify_cmd->add_option("suite", suite, "trivial, typical, verma-tensor, c-equals-f, sanity, tensor-tail, cross-path, all")
        ->required();
    verify_cmd->add_option("--m", m, "largest rank")->capture_default_str()->check(CLI::Range(1, kMaxRank));
    verify_cmd->add_option("--m-min", m_min, "smallest rank")->capture_default_str();
    verify_cmd->add_option("--cutoff", cutoff, "total x-degree cutoff")->capture_default_str();
    verify_cmd->add_option("--max-height", max_height, "largest weight height")->capture_default_str();
    verify_cmd->add_option("--mutation", mutation, "seeded formula corruption: none, parity-sign, j-lo, tau-orientation, upper-limit")
        ->capture_default_str();
    verify_cmd->add_option("--threads", threads, "worker threads (default: OSPCHAR_THREADS or 1)");
    add_common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    const bool json = output == "json";
    try {
        if (*classify_cmd) return cmd_classify(m, weight, json);
        if (*char_cmd) return cmd_character(m, weight, cutoff, j_max, format, json);
        if (*verify_cmd) return cmd_verify(suite, m, m_min, cutoff, max_height, mutation, threads, json);
    } catch (const UsageError& ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
