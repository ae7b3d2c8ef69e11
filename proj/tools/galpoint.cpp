/*
   Copyright 2026 The galpoint Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Batch front end: reads JSON inputs, writes a JSON report to stdout (or
// --output) and a one-line summary to stderr. Exit 0 when every check
// passes, 2 when a check fails, 1 on input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "galpoint/error.hpp"
#include "galpoint/report.hpp"

using namespace galpoint;

namespace {

constexpr int kOk = 0, kInputError = 1, kCheckFailed = 2;

struct RunConfig {
    int trials = 64;
    std::uint64_t seed = 0;
    unsigned ext_cap = 12;
    std::size_t closure_cap = 4096;
    std::uint64_t brute_q_cap = 64;
    std::string output;

    Json json() const {
        return Json{{"trials", trials}, {"seed", seed}, {"ext_cap", ext_cap}, {"closure_cap", closure_cap}, {"brute_q_cap", brute_q_cap}};
    }
    GaloisConfig galois() const {
        GaloisConfig g;
        g.trials = trials;
        g.seed = seed;
        g.ext_cap = ext_cap;
        g.closure_cap = closure_cap;
        g.brute_q_cap = brute_q_cap;
        return g;
    }
};

// Errors raised by a well-formed input whose mathematics does not work out.
bool is_check_failure(ErrorCode c) {
    switch (c) {
        case ErrorCode::ConditionBFails:
        case ErrorCode::VerificationFailed:
        case ErrorCode::DegenerateOnly:
        case ErrorCode::LadderExhausted:
        case ErrorCode::DegreeMismatch:
        case ErrorCode::FieldTooSmall:
            return true;
        default:
            return false;
    }
}

Json error_json(const Error& e) { return Json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}}; }

std::optional<Parametrization> parse_param(const std::vector<std::string>& texts, Field f) {
    if (texts.empty()) return std::nullopt;
    Parametrization phi;
    for (int i = 0; i < 3; ++i) phi.coords[i] = parse_polynomial(texts[i], f, {"t"}).to_upoly(0);
    return phi;
}

// "inf", "x:y" or a field element t meaning (t:1).
ProjPoint parse_p1_point(const std::string& text, Field f) {
    if (text == "inf") return ProjPoint::infinity(f);
    if (text.find(':') != std::string::npos) {
        ProjPoint x = parse_point(text, f);
        if (x.dim() != 2) throw Error(ErrorCode::ParseError, "point \"" + text + "\": expected a point of P^1");
        return x;
    }
    return ProjPoint::affine(parse_element(text, f));
}

struct Outcome {
    Json report;
    int code = kOk;
    std::string summary;
};

Outcome run_check(const RunConfig& rc, const std::string& path, const std::string& point, const std::string& strategy,
                  const std::vector<std::string>& param) {
    PlaneCurve c = parse_curve(read_json_file(path));
    GaloisConfig cfg = rc.galois();
    cfg.strategy = parse_strategy(strategy);
    cfg.parametrization = parse_param(param, c.field());
    ProjPoint p = parse_point(point, c.field());
    if (p.dim() != 3) throw Error(ErrorCode::ParseError, "--point: expected x:y:z");
    GaloisReport r = is_galois_point(c, p, cfg);
    const bool certified = r.verdict == Verdict::CertifiedGalois || r.verdict == Verdict::CertifiedNotGalois;
    std::string s = to_string(r.verdict) + " " + to_string(r.point_class) + " via " + to_string(r.method);
    if (r.group) s += ", group order " + std::to_string(r.group->order());
    return {Json{{"curve", to_json(c)}, {"report", to_json(r)}}, certified ? kOk : kCheckFailed, s};
}

Outcome run_pair(const RunConfig& rc, const std::string& path, const std::string& inner, const std::string& outer,
                 const std::vector<std::string>& param) {
    PlaneCurve c = parse_curve(read_json_file(path));
    FamilyExpectation x;
    x.p = parse_point(inner, c.field());
    x.q = parse_point(outer, c.field());
    if (x.p.dim() != 3 || x.q.dim() != 3) throw Error(ErrorCode::ParseError, "--inner/--outer: expected x:y:z");
    x.gp_order = static_cast<std::size_t>(c.degree() - 1);
    x.gq_order = static_cast<std::size_t>(c.degree());
    x.parametrization = parse_param(param, c.field());
    FamilyVerdict v = verify_family(c, x, rc.galois());
    std::string s = "inner " + to_string(v.inner.verdict) + ", outer " + to_string(v.outer.verdict);
    if (v.joint) s += ", joint " + to_string(v.joint->classification);
    return {to_json(v), v.passed() ? kOk : kCheckFailed, s};
}

Outcome run_embed(const RunConfig& rc, const std::string& path, const std::string& point) {
    GroupFile gf = parse_group_file(read_json_file(path), rc.closure_cap);
    ProjPoint p = parse_p1_point(point, gf.field);
    EmbedConfig cfg{rc.ext_cap, rc.closure_cap, rc.trials, rc.seed};
    Json head{{"field", gf.field->spec()}, {"g1", to_json(gf.g1)}, {"g2", to_json(gf.g2)}, {"point", to_json(p)}};
    try {
        EmbeddingResult r = construct_embedding(gf.g1, gf.g2, p, cfg);
        head["result"] = to_json(r);
        return {head, r.converse_holds ? kOk : kCheckFailed,
                "degree " + std::to_string(r.curve.degree()) + " curve, joint " + r.joint_descriptor.tag_string()};
    } catch (const Error& e) {
        if (!is_check_failure(e.code())) throw;
        head["error"] = error_json(e);
        return {head, kCheckFailed, std::string(to_string(e.code()))};
    }
}

Outcome run_family(const RunConfig& rc, const std::string& path) {
    FamilySpec s = parse_family_spec(read_json_file(path));
    FamilyInstance fi = build_family(s, rc.ext_cap);
    FamilyVerdict v = verify_family(fi.curve, fi.expected, rc.galois());
    Json j{{"spec", to_json(s)}, {"field", fi.field->spec()}, {"verdict", to_json(v)}};
    std::size_t failed = 0;
    for (const auto& c : v.checks) failed += c.passed ? 0 : 1;
    std::string sum = to_string(s.tag) + " over " + fi.field->spec() + ": " + std::to_string(v.checks.size() - failed) + "/" +
                      std::to_string(v.checks.size()) + " checks";
    if (v.joint_descriptor) sum += ", joint " + v.joint_descriptor->tag_string();
    return {j, v.passed() ? kOk : kCheckFailed, sum};
}

Outcome run_branch(const RunConfig& rc, int d, const std::string& field) {
    if (d != 3 && d != 4) throw Error(ErrorCode::InvalidArgument, "--d must be 3 or 4");
    Field f = parse_field_spec(field);
    Json head{{"d", d}, {"base_field", f->spec()}};
    try {
        BranchCertificate b = branch_certificate(d, f, rc.ext_cap);
        bool ok = b.identity_holds;
        for (const auto& [name, holds] : b.relations) ok = ok && holds;
        head["certificate"] = to_json(b);
        return {head, ok ? kOk : kCheckFailed, std::string("identity ") + (b.identity_holds ? "holds" : "fails") + " over " + b.field->spec()};
    } catch (const Error& e) {
        if (!is_check_failure(e.code())) throw;
        head["error"] = error_json(e);
        return {head, kCheckFailed, std::string(to_string(e.code()))};
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galois-point certificates for plane curves over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig rc;
    app.add_option("--trials", rc.trials, "Monte Carlo specializations")->check(CLI::PositiveNumber);
    app.add_option("--seed", rc.seed, "Random seed");
    app.add_option("--ext-cap", rc.ext_cap, "Largest relative extension degree")->check(CLI::PositiveNumber);
    app.add_option("--closure-cap", rc.closure_cap, "Largest group closure")->check(CLI::PositiveNumber);
    app.add_option("--brute-q-cap", rc.brute_q_cap, "Largest field for brute-force scans")->check(CLI::PositiveNumber);
    app.add_option("-o,--output", rc.output, "Write the report here instead of stdout");

    std::string curve_path, point, strategy = "auto", inner, outer, groups_path, spec_path, field;
    std::vector<std::string> param;
    int d = 0;

    auto* check = app.add_subcommand("check", "Is a point Galois for a curve");
    check->add_option("curve", curve_path, "Curve file")->required();
    check->add_option("--point", point, "x:y:z")->required();
    check->add_option("--strategy", strategy, "auto, collineation, deck or monte_carlo");
    check->add_option("--param", param, "X(t) Y(t) Z(t), for the deck certificate")->expected(3);

    auto* pair = app.add_subcommand("pair", "Certify an inner and an outer point and their joint group");
    pair->add_option("curve", curve_path, "Curve file")->required();
    pair->add_option("--inner", inner, "x:y:z")->required();
    pair->add_option("--outer", outer, "x:y:z")->required();
    pair->add_option("--param", param, "X(t) Y(t) Z(t), for deck certificates")->expected(3);

    auto* embed = app.add_subcommand("embed", "Plane model from two groups of Moebius maps");
    embed->add_option("groups", groups_path, "Group file")->required();
    embed->add_option("--point", point, "t, x:y or inf")->required();

    auto* family = app.add_subcommand("family", "Build and verify a curve family");
    family->add_option("spec", spec_path, "Family spec file")->required();

    auto* branch = app.add_subcommand("branch", "Branch-point certificate");
    branch->add_option("--d", d, "3 or 4")->required();
    branch->add_option("--field", field, "p^k")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), kInputError);
    }

    Outcome out;
    std::string command;
    try {
        if (*check) command = "check", out = run_check(rc, curve_path, point, strategy, param);
        else if (*pair) command = "pair", out = run_pair(rc, curve_path, inner, outer, param);
        else if (*embed) command = "embed", out = run_embed(rc, groups_path, point);
        else if (*family) command = "family", out = run_family(rc, spec_path);
        else command = "branch", out = run_branch(rc, d, field);
    } catch (const Error& e) {
        std::cerr << "galpoint: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "galpoint: " << e.what() << "\n";
        return kInputError;
    }

    Json doc{{"command", command}, {"config", rc.json()}, {"exit_code", out.code}};
    for (auto& [k, v] : out.report.items()) doc[k] = v;
    const std::string text = dump(doc);
    if (rc.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(rc.output);
        if (!f || !(f << text)) {
            std::cerr << "galpoint: cannot write " << rc.output << "\n";
            return kInputError;
        }
    }
    std::cerr << command << ": " << out.summary << "\n";
    return out.code;
}
