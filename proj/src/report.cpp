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

#include "galpoint/report.hpp"

#include <algorithm>
#include <fstream>

#include "galpoint/error.hpp"

namespace galpoint {

Json to_json(Field f) {
    return Json{{"spec", f->spec()}, {"modulus", f->modulus()}};
}

Json to_json(const Fq& a) { return a.to_string(); }

Json to_json(const ProjPoint& x) {
    Json j = Json::array();
    for (const auto& c : x.coords()) j.push_back(to_json(c));
    return j;
}

Json to_json(const ProjLine& l) {
    Json j = Json::array();
    for (const auto& c : l.coeffs()) j.push_back(to_json(c));
    return j;
}

Json to_json(const Projectivity& g) {
    Json j = Json::array();
    for (const auto& c : g.entries()) j.push_back(to_json(c));
    return j;
}

Json to_json(const FiniteProjectivityGroup& g) {
    Json gens = Json::array();
    for (const auto& s : g.generators()) gens.push_back(to_json(s));
    return Json{{"field", g.field()->spec()}, {"n", g.n()}, {"order", g.order()}, {"generators", gens}};
}

Json to_json(const GroupDescriptor& d) {
    Json hist = Json::object();
    for (const auto& [o, count] : d.order_histogram) hist[std::to_string(o)] = count;
    return Json{{"order", d.order}, {"abelian", d.abelian}, {"element_order_histogram", hist}, {"tag", d.tag_string()}};
}

Json to_json(const ProductReport& r) {
    Json j{{"joint", to_json(r.joint)},
           {"intersection_order", r.intersection_order},
           {"product_set_is_joint", r.product_set_is_joint},
           {"g1_normal", r.g1_normal},
           {"g2_normal", r.g2_normal},
           {"elementwise_commute", r.elementwise_commute},
           {"classification", to_string(r.classification)}};
    j["noncommuting"] = r.noncommuting ? Json::array({to_json(r.noncommuting->first), to_json(r.noncommuting->second)}) : Json();
    return j;
}

Json to_json(const PointDivisor& d) {
    Json sup = Json::array();
    for (const auto& [x, m] : d.support) sup.push_back(Json{{"point", to_json(x)}, {"multiplicity", m}});
    return Json{{"degree", d.degree()}, {"support", sup}};
}

Json to_json(const PlaneCurve& c) {
    return Json{{"field", c.field()->spec()},
                {"modulus", c.field()->modulus()},
                {"affine_poly", c.affine().to_string()},
                {"degree", c.degree()},
                {"assume_irreducible", c.assume_irreducible()}};
}

Json to_json(const Witness& w) {
    return Json{{"t0", to_json(w.t0)},
                {"field", w.t0.field()->spec()},
                {"factor_degrees", w.factor_degrees},
                {"reference_t0", to_json(w.reference_t0)},
                {"reference_degrees", w.reference_degrees}};
}

Json to_json(const GaloisReport& r) {
    Json j{{"point", to_json(r.point)},
           {"point_class", to_string(r.point_class)},
           {"projection_degree", r.projection_degree},
           {"verdict", to_string(r.verdict)},
           {"method", to_string(r.method)}};
    j["group"] = r.group ? to_json(*r.group) : Json();
    j["descriptor"] = r.descriptor ? to_json(*r.descriptor) : Json();
    j["witness"] = r.witness ? to_json(*r.witness) : Json();
    j["trials"] = r.trials;
    j["skipped"] = r.skipped;
    j["collineation_order"] = r.collineation_order ? Json(*r.collineation_order) : Json();
    j["deck_order"] = r.deck_order ? Json(*r.deck_order) : Json();
    j["assume_irreducible"] = r.assume_irreducible;
    j["notes"] = r.notes;
    return j;
}

Json to_json(const RationalMap1D& h) {
    return Json{{"num", h.num().to_string()}, {"den", h.den().to_string()}, {"degree", h.degree()}};
}

Json to_json(const Parametrization& phi) {
    Json j = Json::array();
    for (const auto& c : phi.coords) j.push_back(c.to_string());
    return j;
}

Json to_json(const EmbeddingResult& r) {
    Json ws = Json::array();
    for (const auto& w : r.witnesses)
        ws.push_back(Json{{"eta", to_json(w.eta)}, {"lhs", to_json(w.lhs)}, {"rhs", to_json(w.rhs)}});
    return Json{{"witnesses", ws},
                {"eta", to_json(r.eta)},
                {"f", to_json(r.f)},
                {"g", to_json(r.g)},
                {"phi", to_json(r.phi)},
                {"curve", to_json(r.curve)},
                {"image_p", to_json(r.image_p)},
                {"q", to_json(r.q)},
                {"inner_report", to_json(r.inner_report)},
                {"outer_report", to_json(r.outer_report)},
                {"joint", to_json(r.joint)},
                {"joint_descriptor", to_json(r.joint_descriptor)},
                {"pullback", to_json(r.pullback)},
                {"orbit_divisor", to_json(r.orbit_divisor)},
                {"converse_holds", r.converse_holds}};
}

Json to_json(const FamilySpec& s) {
    Json j{{"family", to_string(s.tag)}, {"field", s.field}};
    switch (s.tag) {
        case FamilyTag::Thm2Tame: j["d"] = s.d; j["c"] = s.c; break;
        case FamilyTag::Thm2Wild: j["c"] = s.c; j["p"] = s.p; j["e"] = s.e; j["m"] = s.m; j["alphas"] = s.alphas; break;
        case FamilyTag::Prop4: j["p"] = s.p; j["e"] = s.e; break;
        case FamilyTag::Prop4Normal:
        case FamilyTag::Gk: j["q"] = s.q; break;
        default: break;
    }
    return j;
}

Json to_json(const FamilyVerdict& v) {
    Json checks = Json::array();
    for (const auto& c : v.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    Json j{{"curve", to_json(v.curve)}, {"inner", to_json(v.inner)}, {"outer", to_json(v.outer)}};
    j["joint"] = v.joint ? to_json(*v.joint) : Json();
    j["joint_descriptor"] = v.joint_descriptor ? to_json(*v.joint_descriptor) : Json();
    j["lemma_line"] = Json{{"support_size", v.lemma_line.support_size},
                           {"is_1_or_d", v.lemma_line.is_1_or_d},
                           {"is_dp", v.lemma_line.is_dp},
                           {"divisor", to_json(v.lemma_line.divisor)}};
    j["axis"] = v.axis ? to_json(*v.axis) : Json();
    j["checks"] = checks;
    j["passed"] = v.passed();
    return j;
}

namespace {

// Prime-field values also as the representative in (-p/2, p/2].
Json signed_value(const Fq& a) {
    Json j{{"value", to_json(a)}};
    if (a.field()->k() == 1) {
        const std::int64_t p = a.field()->p(), v = static_cast<std::int64_t>(a.index());
        j["signed"] = 2 * v > p ? v - p : v;
    }
    return j;
}

}  // namespace

Json to_json(const BranchCertificate& b) {
    Json rel = Json::array();
    for (const auto& [name, ok] : b.relations) rel.push_back(Json{{"relation", name}, {"holds", ok}});
    Json j{{"d", b.d}, {"field", b.field->spec()}, {"eliminant", b.eliminant.to_string(b.d == 3 ? "c" : "d0")}};
    j["a"] = signed_value(b.a);
    j["c"] = signed_value(b.c);
    if (b.d == 4) j["d0"] = signed_value(b.d0);
    j["beta_power"] = signed_value(b.beta_power);
    j["beta"] = to_json(b.beta);
    j["relations"] = rel;
    j["lhs"] = b.lhs.to_string();
    j["rhs"] = b.rhs.to_string();
    j["identity_holds"] = b.identity_holds;
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// input files

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::ParseError, where + ": " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) bad(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(where, "missing key \"" + key + "\"");
    return *it;
}

std::string string_at(const Json& j, const std::string& key, const std::string& where) {
    const Json& v = member(j, key, where);
    if (!v.is_string()) bad(where + "." + key, "expected a string");
    return v.get<std::string>();
}

std::int64_t int_at(const Json& j, const std::string& key, const std::string& where) {
    const Json& v = member(j, key, where);
    if (!v.is_number_integer()) bad(where + "." + key, "expected an integer");
    return v.get<std::int64_t>();
}

void only_keys(const Json& j, std::initializer_list<std::string_view> allowed, const std::string& where) {
    for (const auto& [k, v] : j.items())
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) bad(where, "unknown key \"" + k + "\"");
}

Field field_at(const Json& j, const std::string& where) {
    const std::string spec = string_at(j, "field", where);
    try {
        return parse_field_spec(spec);
    } catch (const Error& e) {
        bad(where + ".field", e.what());
    }
}

Fq element_from(const Json& v, Field f, const std::string& where) {
    if (v.is_number_integer()) return Fq(f, v.get<std::int64_t>());
    if (!v.is_string()) bad(where, "expected a field element");
    try {
        return parse_element(v.get<std::string>(), f);
    } catch (const Error& e) {
        bad(where, e.what());
    }
}

std::vector<Projectivity> matrices_at(const Json& j, const std::string& key, Field f, const std::string& where) {
    const Json& list = member(j, key, where);
    if (!list.is_array() || list.empty()) bad(where + "." + key, "expected a nonempty list of matrices");
    std::vector<Projectivity> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        try {
            out.push_back(parse_projectivity(list[i], f));
        } catch (const Error& e) {
            bad(where + "." + key + "[" + std::to_string(i) + "]", e.what());
        }
    }
    return out;
}

}  // namespace

PlaneCurve parse_curve(const Json& j) {
    const std::string where = "curve";
    only_keys(j, {"field", "modulus", "affine_poly", "assume_irreducible"}, where);
    Field f = field_at(j, where);
    if (j.contains("modulus")) {
        const Json& m = j["modulus"];
        if (!m.is_array() || m != Json(f->modulus()))
            bad(where + ".modulus", "only the built-in modulus " + Json(f->modulus()).dump() + " of " + f->spec() + " is supported");
    }
    bool irreducible = true;
    if (j.contains("assume_irreducible")) {
        if (!j["assume_irreducible"].is_boolean()) bad(where + ".assume_irreducible", "expected a boolean");
        irreducible = j["assume_irreducible"].get<bool>();
    }
    Polynomial p;
    try {
        p = parse_polynomial(string_at(j, "affine_poly", where), f, {"x", "y"});
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ParseError) throw;
        bad(where + ".affine_poly", e.what());
    }
    return curve_from_affine(p, irreducible);
}

ProjPoint parse_point(std::string_view text, Field f) {
    std::vector<Fq> cs;
    std::size_t start = 0;
    while (true) {
        std::size_t colon = text.find(':', start);
        std::string_view part = text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start);
        try {
            cs.push_back(parse_element(part, f));
        } catch (const Error& e) {
            bad("point \"" + std::string(text) + "\"", e.what());
        }
        if (colon == std::string_view::npos) break;
        start = colon + 1;
    }
    if (cs.size() != 2 && cs.size() != 3) bad("point \"" + std::string(text) + "\"", "expected 2 or 3 coordinates");
    bool all_zero = true;
    for (const auto& c : cs) all_zero = all_zero && c.is_zero();
    if (all_zero) bad("point \"" + std::string(text) + "\"", "all coordinates are zero");
    return ProjPoint(cs);
}

Projectivity parse_projectivity(const Json& j, Field f) {
    if (!j.is_array() || (j.size() != 2 && j.size() != 3)) bad("matrix", "expected 2 or 3 rows");
    const int n = static_cast<int>(j.size());
    std::vector<Fq> rows;
    for (int r = 0; r < n; ++r) {
        if (!j[r].is_array() || static_cast<int>(j[r].size()) != n) bad("matrix row " + std::to_string(r), "expected " + std::to_string(n) + " entries");
        for (int c = 0; c < n; ++c) rows.push_back(element_from(j[r][c], f, "matrix entry (" + std::to_string(r) + "," + std::to_string(c) + ")"));
    }
    try {
        return Projectivity(n, rows);
    } catch (const Error& e) {
        bad("matrix", e.what());
    }
}

GroupFile parse_group_file(const Json& j, std::size_t closure_cap) {
    const std::string where = "groups";
    only_keys(j, {"field", "g1", "g2"}, where);
    GroupFile out;
    out.field = field_at(j, where);
    out.g1 = generate_group(matrices_at(j, "g1", out.field, where), closure_cap);
    out.g2 = generate_group(matrices_at(j, "g2", out.field, where), closure_cap);
    if (out.g1.n() != 2 || out.g2.n() != 2) bad(where, "groups must act on P^1 (2x2 matrices)");
    return out;
}

FamilySpec parse_family_spec(const Json& j) {
    const std::string where = "family spec";
    only_keys(j, {"family", "field", "d", "c", "p", "e", "m", "alphas", "q"}, where);
    FamilySpec s;
    try {
        s.tag = parse_family_tag(string_at(j, "family", where));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::InvalidArgument) throw;
        bad(where + ".family", e.what());
    }
    s.field = string_at(j, "field", where);
    if (j.contains("d")) s.d = static_cast<int>(int_at(j, "d", where));
    if (j.contains("c")) s.c = static_cast<int>(int_at(j, "c", where));
    if (j.contains("p")) s.p = static_cast<std::uint64_t>(int_at(j, "p", where));
    if (j.contains("e")) s.e = static_cast<unsigned>(int_at(j, "e", where));
    if (j.contains("m")) s.m = static_cast<std::uint64_t>(int_at(j, "m", where));
    if (j.contains("q")) s.q = static_cast<std::uint64_t>(int_at(j, "q", where));
    if (j.contains("alphas")) {
        const Json& a = j["alphas"];
        if (!a.is_array()) bad(where + ".alphas", "expected a list");
        for (const auto& x : a) {
            if (x.is_string()) s.alphas.push_back(x.get<std::string>());
            else if (x.is_number_integer()) s.alphas.push_back(std::to_string(x.get<std::int64_t>()));
            else bad(where + ".alphas", "expected strings or integers");
        }
    }
    return s;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

}  // namespace galpoint
