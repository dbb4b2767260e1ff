// altcliff: construct and machine-check the alternative Clifford algebra of a
// nondegenerate ternary quadratic form over Q, with JSON reports.
//
// Exit codes: 0 all checks pass, 1 check failure, 2 usage/parse error,
// 3 degenerate form.

#include "altcliff/alt_clifford.hpp"
#include "altcliff/corpus.hpp"
#include "altcliff/invariants.hpp"
#include "altcliff/json_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace altcliff;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

bool g_pretty = false;

void emit(json j) {
    std::cout << (g_pretty ? j.dump(2) : j.dump()) << "\n";
}

[[noreturn]] void fail(int code, const std::string& command, const std::string& message,
                       json extra = json::object()) {
    json j = std::move(extra);
    j["command"] = command;
    j["error"] = message;
    emit(std::move(j));
    std::exit(code);
}

QuadraticForm parse_ternary(const std::string& command, const std::string& text) {
    auto q = parse_form(text);
    if (!q) fail(kExitParse, command, "unparseable form spec: " + text);
    if (q->dim() != 3) fail(kExitParse, command, "ternary form required");
    return *q;
}

AltCliffordModel build_model(const std::string& command, const QuadraticForm& q) {
    try {
        return build_alt_clifford(q);
    } catch (const DegenerateForm& e) {
        json extra;
        extra["radical_witness"] = element_json<Rat>(e.radical_vector);
        fail(kExitDegenerate, command, e.what(), std::move(extra));
    }
}

Rat parse_theta(const std::string& command, const std::string& text) {
    auto r = parse_rat(text);
    if (!r) fail(kExitParse, command, "unparseable rational: " + text);
    return *r;
}

std::vector<Rat> parse_thetas(const std::string& command, const std::string& csv) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_theta(command, tok));
    if (out.empty()) fail(kExitParse, command, "empty theta list");
    return out;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("ALTCLIFF_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

json report_header(const std::string& command, const std::string& form) {
    json j;
    j["command"] = command;
    j["input"] = form;
    return j;
}

int finish(json j, const Timer& t, bool pass) {
    j["pass"] = pass;
    j["elapsed_ms"] = t.ms();
    emit(std::move(j));
    return pass ? kExitPass : kExitCheckFailure;
}

int cmd_build(const std::string& form) {
    Timer t;
    auto q = parse_ternary("build", form);
    auto m = build_model("build", q);
    json j = report_header("build", form);
    j["model"] = model_json(m);
    auto rep = verify_presentation(m);
    j["presentation"] = presentation_json(rep);
    return finish(std::move(j), t, rep.ok());
}

int cmd_verify(const std::string& form, std::uint64_t seed, int trials) {
    Timer t;
    auto q = parse_ternary("verify", form);
    auto m = build_model("verify", q);
    json j = report_header("verify", form);
    auto pres = verify_presentation(m);
    j["presentation"] = presentation_json(pres);
    auto alt = check_alternative(m.octonion);
    j["alternativity"] = check_report_json(alt);
    auto ids = check_identities(m.octonion, trials, seed);
    j["identities"] = check_report_json(ids);
    return finish(std::move(j), t, pres.ok() && alt.ok() && ids.ok());
}

int cmd_specialize(const std::string& form, const std::string& theta_text) {
    Timer t;
    auto q = parse_ternary("specialize", form);
    Rat theta = parse_theta("specialize", theta_text);
    auto m = build_model("specialize", q);
    auto c = classify_quotient(m, theta);
    json j = report_header("specialize", form);
    j["theta"] = rat_json(theta);
    j["quotient"] = quotient_json(c);
    bool pass = c.kind == QuotientClassification::Kind::Octonion ||
                (c.radical_squares_zero && c.quotient_matches_quaternion);
    return finish(std::move(j), t, pass);
}

int cmd_quotients(const std::string& form, const std::string& thetas_csv) {
    Timer t;
    auto q = parse_ternary("quotients", form);
    auto thetas = parse_thetas("quotients", thetas_csv);
    auto m = build_model("quotients", q);
    json j = report_header("quotients", form);
    json per = json::array();
    bool all_ok = true;
    for (const auto& th : thetas) {
        auto c = classify_quotient(m, th);
        json e;
        e["theta"] = rat_json(th);
        e["quotient"] = quotient_json(c);
        if (c.kind == QuotientClassification::Kind::QuaternionOnto &&
            !(c.radical_squares_zero && c.quotient_matches_quaternion))
            all_ok = false;
        per.push_back(e);
    }
    j["fibers"] = per;
    auto scan = azumaya_scan(m, thetas);
    json roots = json::array();
    for (const auto& r : scan.gamma_roots) roots.push_back(rat_json(r));
    j["gamma_roots"] = roots;
    j["azumaya_off_roots"] = scan.ok;
    auto zrep = quotient_by_z(m);
    json zq;
    zq["multiplicative"] = zrep.multiplicative;
    zq["bijective"] = zrep.bijective;
    zq["associative"] = zrep.associative;
    zq["lambda_bar_square"] = rat_json(zrep.lambda_bar_square);
    zq["lambda_square_consistent"] = zrep.lambda_square_consistent;
    j["quotient_by_z"] = zq;
    return finish(std::move(j), t, all_ok && scan.ok && zrep.ok());
}

int cmd_invariants(const std::string& form, const std::string& thetas_csv) {
    Timer t;
    auto q = parse_ternary("invariants", form);
    auto thetas = parse_thetas("invariants", thetas_csv);
    json j = report_header("invariants", form);
    try {
        auto m = build_model("invariants", q);
        auto sw = stiefel_whitney(q);
        j["sw"] = sw_json(sw);
        bool sw_id = sw_identity_check(q);
        j["sw"]["identity"] = sw_id;
        auto mu = mu_symbol(q);
        json mj;
        mj["a"] = rat_json(mu.a);
        mj["b"] = rat_json(mu.b);
        mj["c"] = poly_json(mu.c);
        mj["c_display"] = mu.c.to_string();
        bool mu_sym = mu_symmetry_check(q, thetas);
        bool mu_three = mu_three_presentation_check(q, thetas);
        mj["symmetry"] = mu_sym;
        mj["three_presentation"] = mu_three;
        j["mu"] = mj;
        auto symm = verify_symmP(q, thetas);
        json nf = json::array();
        for (const auto& e : symm.entries) {
            json en;
            en["theta"] = rat_json(e.theta);
            en["pair"] = {e.pair_i, e.pair_j};
            en["equivalent"] = e.equivalent;
            nf.push_back(en);
        }
        j["norm_form_checks"] = nf;
        bool sp = splits(q);
        json spj;
        spj["splits"] = sp;
        spj["isotropic"] = is_isotropic(q);
        j["splits"] = spj;
        auto res = residues(q);
        j["residues"] = residues_json(res);
        bool cliff = residue_vs_clifford_check(q);
        j["clifford"] = json{{"agrees_with_residues", cliff}};
        bool pass = sw_id && mu_sym && mu_three && symm.ok() && cliff;
        // norm-form/fiber splitness coherence at the sampled thetas
        for (const auto& th : thetas) {
            if (m.gamma.eval(th) == 0) continue;
            auto c = classify_quotient(m, th);
            if (is_isotropic(norm_form(mu, th)) != !c.division) pass = false;
        }
        return finish(std::move(j), t, pass);
    } catch (const DegenerateForm& e) {
        json extra;
        extra["radical_witness"] = element_json<Rat>(e.radical_vector);
        fail(kExitDegenerate, "invariants", e.what(), std::move(extra));
    }
}

int cmd_normform(const std::string& form, const std::string& theta_text, int height) {
    Timer t;
    auto q = parse_ternary("normform", form);
    Rat theta = parse_theta("normform", theta_text);
    auto m = build_model("normform", q);
    auto mu = mu_symbol(q);
    if (mu.c.eval(theta) == 0)
        fail(kExitParse, "normform", "theta is a root of gamma; fiber is not octonion");
    auto nf = norm_form(mu, theta);
    json j = report_header("normform", form);
    j["theta"] = rat_json(theta);
    json entries = json::array();
    for (const auto& a : nf.diagonal_entries()) entries.push_back(rat_json(a));
    j["diagonal"] = entries;
    j["invariants"] = form_invariants_json(form_invariants(nf));
    bool iso = is_isotropic(nf);
    j["isotropic"] = iso;
    // dim-8 searches blow up combinatorially; keep the witness scan shallow
    if (auto w = isotropy_oracle(nf, std::min(height, 3))) {
        json wit = json::array();
        for (long long v : *w) wit.push_back(v);
        j["isotropy_witness"] = wit;
    }
    auto c = classify_quotient(m, theta);
    j["fiber_division"] = c.division;
    return finish(std::move(j), t, iso == !c.division);
}

int cmd_residues(const std::string& form) {
    Timer t;
    auto q = parse_ternary("residues", form);
    build_model("residues", q);  // reject degenerate input with exit 3
    json j = report_header("residues", form);
    j["gamma"] = poly_json(mu_symbol(q).c);
    j["residues"] = residues_json(residues(q));
    bool cliff = residue_vs_clifford_check(q);
    j["clifford_agrees"] = cliff;
    return finish(std::move(j), t, cliff);
}

int cmd_splits(const std::string& form, int height) {
    Timer t;
    auto q = parse_ternary("splits", form);
    build_model("splits", q);
    json j = report_header("splits", form);
    auto d = diagonalize(q);
    bool sp = splits(q);  // throws if the two decision paths ever disagree
    j["splits"] = sp;
    j["isotropic"] = is_isotropic(q);
    j["omega_ramified"] = place_set_json(symbol_ramified_places(
        -d.alphas[0] * d.alphas[1], -d.alphas[0] * d.alphas[2]));
    if (auto w = isotropy_oracle(q, height)) {
        json wit = json::array();
        for (long long v : *w) wit.push_back(v);
        j["isotropy_witness"] = wit;
    }
    return finish(std::move(j), t, true);
}

int cmd_corpus(int count, std::uint64_t seed, int height) {
    Timer t;
    json j;
    j["command"] = "corpus";
    j["count"] = count;
    j["seed"] = seed;
    auto forms = random_corpus(count, seed);
    const std::vector<Rat> fiber_thetas = {Rat(-3), Rat(-2), Rat(-1), Rat(0),
                                           Rat(1),  Rat(2),  Rat(3)};
    const std::vector<Rat> nf_thetas = {Rat(0), Rat(1), Rat(2), Rat(3), Rat(4)};
    json per = json::array();
    int failures = 0;
    for (std::size_t idx = 0; idx < forms.size(); ++idx) {
        const auto& q = forms[idx];
        json e;
        e["index"] = idx;
        e["form"] = format_form(q);
        std::vector<std::string> failed;
        auto check = [&](const char* name, bool ok) {
            if (!ok) failed.push_back(name);
        };
        try {
            auto m = build_alt_clifford(q);
            check("presentation", verify_presentation(m).ok());
            check("alternativity", check_alternative(m.octonion).ok());
            check("identities", check_identities(m.octonion, 5, seed + idx).ok());
            for (const auto& th : fiber_thetas) {
                auto c = classify_quotient(m, th);
                bool want_oct = m.gamma.eval(th) != 0;
                bool got_oct = c.kind == QuotientClassification::Kind::Octonion;
                check("fiber_kind", want_oct == got_oct);
                if (!got_oct)
                    check("fiber_radical",
                          c.radical_squares_zero && c.quotient_matches_quaternion);
            }
            check("quotient_by_z", quotient_by_z(m).ok());
            check("splits_vs_isotropy", splits(q) == is_isotropic(q));
            check("sw_identity", sw_identity_check(q));
            check("mu_symmetry", mu_symmetry_check(q, nf_thetas));
            check("mu_three_presentation", mu_three_presentation_check(q, nf_thetas));
            check("symmP", verify_symmP(q, nf_thetas).ok());
            check("residues_vs_clifford", residue_vs_clifford_check(q));
            auto mu = mu_symbol(q);
            for (const auto& th : nf_thetas) {
                if (m.gamma.eval(th) == 0) continue;
                check("norm_form_splitness",
                      is_isotropic(norm_form(mu, th)) == !classify_quotient(m, th).division);
            }
            if (auto w = isotropy_oracle(q, height))
                check("oracle_witness_implies_isotropic", is_isotropic(q));
        } catch (const std::exception& ex) {
            failed.push_back(std::string("exception: ") + ex.what());
        }
        e["failed"] = failed;
        if (!failed.empty()) ++failures;
        per.push_back(e);
    }
    j["forms"] = per;
    j["failures"] = failures;
    return finish(std::move(j), t, failures == 0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alternative Clifford algebra toolkit"};
    app.require_subcommand(1);
    g_pretty = false;
    app.add_flag("--pretty", g_pretty, "indented JSON output");

    std::string form, theta;
    std::string quot_thetas = "-3,-2,-1,0,1,2,3";
    std::string inv_thetas = "0,1,2,3,4";
    std::uint64_t seed = default_seed();
    int trials = 25, height = 50, count = 50;

    auto add_form = [&](CLI::App* c) {
        c->add_option("form", form, "form spec (diag:... or coeffs:...)")->required();
    };

    auto* build = app.add_subcommand("build", "construct the algebra and verify the presentation");
    add_form(build);
    auto* verify = app.add_subcommand("verify", "alternativity and ring-identity checks");
    add_form(verify);
    verify->add_option("--seed", seed, "rng seed");
    verify->add_option("--trials", trials, "random trials");
    auto* specialize = app.add_subcommand("specialize", "classify the fiber at lambda = theta");
    add_form(specialize);
    specialize->add_option("--theta", theta, "rational specialization point")->required();
    auto* quotients = app.add_subcommand("quotients", "fiber scan and quotient by z");
    add_form(quotients);
    quotients->add_option("--thetas", quot_thetas, "csv of rational points");
    auto* invariants = app.add_subcommand("invariants", "cohomological invariants and identities");
    add_form(invariants);
    invariants->add_option("--thetas", inv_thetas, "csv of rational points");
    auto* normform = app.add_subcommand("normform", "norm form of a specialized fiber");
    add_form(normform);
    normform->add_option("--theta", theta, "rational specialization point")->required();
    normform->add_option("--height", height, "isotropy witness search height");
    auto* residues = app.add_subcommand("residues", "residues of mu at the divisors of gamma");
    add_form(residues);
    auto* splits_cmd = app.add_subcommand("splits", "splitting criterion with witnesses");
    add_form(splits_cmd);
    splits_cmd->add_option("--height", height, "isotropy witness search height");
    auto* corpus = app.add_subcommand("corpus", "full property suite over random forms");
    corpus->add_option("--count", count, "number of forms");
    corpus->add_option("--seed", seed, "rng seed");
    corpus->add_option("--height", height, "isotropy witness search height");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    try {
        if (build->parsed()) return cmd_build(form);
        if (verify->parsed()) return cmd_verify(form, seed, trials);
        if (specialize->parsed()) return cmd_specialize(form, theta);
        if (quotients->parsed()) return cmd_quotients(form, quot_thetas);
        if (invariants->parsed()) return cmd_invariants(form, inv_thetas);
        if (normform->parsed()) return cmd_normform(form, theta, height);
        if (residues->parsed()) return cmd_residues(form);
        if (splits_cmd->parsed()) return cmd_splits(form, height);
        if (corpus->parsed()) return cmd_corpus(count, seed, height);
    } catch (const std::logic_error& e) {
        json j;
        j["error"] = e.what();
        emit(std::move(j));
        return kExitCheckFailure;
    }
    return kExitParse;
}
