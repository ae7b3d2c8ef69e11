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

#include "galpoint/families.hpp"

#include <algorithm>
#include <numeric>

#include "galpoint/error.hpp"

namespace galpoint {

std::string to_string(FamilyTag t) {
    switch (t) {
        case FamilyTag::Thm2Tame: return "thm2_tame";
        case FamilyTag::Thm2Wild: return "thm2_wild";
        case FamilyTag::Thm3Cubic: return "thm3_cubic";
        case FamilyTag::Thm3Quartic: return "thm3_quartic";
        case FamilyTag::Prop4: return "prop4";
        case FamilyTag::Prop4Normal: return "prop4_normal";
        case FamilyTag::Gk: return "gk";
    }
    return "?";
}

FamilyTag parse_family_tag(const std::string& s) {
    for (FamilyTag t : {FamilyTag::Thm2Tame, FamilyTag::Thm2Wild, FamilyTag::Thm3Cubic, FamilyTag::Thm3Quartic, FamilyTag::Prop4,
                        FamilyTag::Prop4Normal, FamilyTag::Gk})
        if (to_string(t) == s) return t;
    throw Error(ErrorCode::ParseError, "unknown family tag '" + s + "'");
}

// ---------------------------------------------------------------------------
// additive polynomials

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

UPoly AdditivePolynomial::poly() const {
    Field f = field();
    UPoly g(f);
    for (unsigned i = 0; i <= e; ++i) g += UPoly::monomial(alpha[i], ipow(p, i));
    return g;
}

bool AdditivePolynomial::is_additive() const {
    Field f = field();
    Polynomial y = Polynomial::variable(f, 2, 0), z = Polynomial::variable(f, 2, 1);
    UPoly g = poly();
    auto apply = [&](const Polynomial& v) {
        Polynomial r(f, 2);
        for (int i = g.degree(); i >= 0; --i) r = r * v + Polynomial::constant(g.coeff(i), 2);
        return r;
    };
    return apply(y + z) == apply(y) + apply(z);
}

bool AdditivePolynomial::is_scaling_stable() const {
    if (m == 1) return true;
    Field f = field();
    for (unsigned j = 1; j <= 12; ++j) {
        Field e2 = extension_field(f, j);
        auto zeta = nth_root_of_unity(e2, m);
        if (!zeta) continue;
        UPoly g = poly().embed(e2);
        UPoly scaled(e2);
        for (int i = 0; i <= g.degree(); ++i) scaled += UPoly::monomial(g.coeff(i) * zeta->pow(i), i);
        return scaled == g * *zeta;
    }
    throw Error(ErrorCode::FieldTooSmall, "no primitive " + std::to_string(m) + "-th root of unity within 12 extensions");
}

AdditivePolynomial additive_poly_from_subgroup(const std::vector<Fq>& s, std::uint64_t m) {
    if (s.empty()) throw Error(ErrorCode::NotSubgroup, "empty set");
    Field f = s.front().field();
    const std::uint64_t p = f->p();
    std::vector<Fq> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::NotSubgroup, "repeated element");
    unsigned e = 0;
    std::uint64_t size = 1;
    while (size < sorted.size()) size *= p, ++e;
    if (size != sorted.size()) throw Error(ErrorCode::NotSubgroup, "order " + std::to_string(sorted.size()) + " is not a power of p");
    if (!std::binary_search(sorted.begin(), sorted.end(), Fq::zero(f))) throw Error(ErrorCode::NotSubgroup, "0 is missing");
    for (const auto& a : sorted)
        for (const auto& b : sorted)
            if (!std::binary_search(sorted.begin(), sorted.end(), a + b))
                throw Error(ErrorCode::NotSubgroup, a.to_string() + " + " + b.to_string() + " leaves the set");
    if (m == 0 || (size - 1) % m != 0)
        throw Error(ErrorCode::InvalidArgument, "m must divide p^e - 1");

    // zeta_m S = S, in the smallest extension holding zeta_m
    if (m > 1) {
        Field e2 = nullptr;
        std::optional<Fq> zeta;
        for (unsigned j = 1; j <= 12 && !zeta; ++j) {
            e2 = extension_field(f, j);
            zeta = nth_root_of_unity(e2, m);
        }
        if (!zeta) throw Error(ErrorCode::FieldTooSmall, "no primitive m-th root of unity nearby");
        std::vector<Fq> big;
        for (const auto& a : sorted) big.push_back(embed(e2, a));
        std::sort(big.begin(), big.end());
        for (const auto& a : big)
            if (!std::binary_search(big.begin(), big.end(), a * *zeta))
                throw Error(ErrorCode::ScalingUnstable, "zeta = " + zeta->to_string() + " in " + e2->spec() + " sends " +
                                                            a.to_string() + " outside S");
    }

    UPoly g = UPoly::constant(Fq::one(f));
    for (const auto& a : sorted) g *= UPoly::linear_root(a);
    AdditivePolynomial r{p, e, m, {}};
    for (int i = 0; i <= g.degree(); ++i) {
        const Fq c = g.coeff(i);
        if (c.is_zero()) continue;
        std::uint64_t pi = 1;
        unsigned k = 0;
        while (pi < static_cast<std::uint64_t>(i)) pi *= p, ++k;
        if (pi != static_cast<std::uint64_t>(i))
            throw Error(ErrorCode::VerificationFailed, "exponent " + std::to_string(i) + " is not a power of p");
    }
    for (unsigned i = 0; i <= e; ++i) r.alpha.push_back(g.coeff(ipow(p, i)));
    if (r.alpha.front().is_zero() || r.alpha.back().is_zero())
        throw Error(ErrorCode::VerificationFailed, "alpha_0 alpha_e vanishes");
    // i = 0 is always admitted (m | 0)
    for (unsigned i = 1; i <= e; ++i)
        if (!r.alpha[i].is_zero() && (ipow(p, i) - 1) % m != 0)
            throw Error(ErrorCode::ScalingUnstable, "alpha_" + std::to_string(i) + " != 0 but m does not divide p^i - 1");
    return r;
}

// ---------------------------------------------------------------------------
// family constructors

namespace {

Field with_roots(Field f, const std::vector<std::uint64_t>& orders, unsigned cap) {
    for (unsigned j = 1; j <= cap; ++j) {
        Field e = extension_field(f, j);
        const u128 q1 = e->order() - 1;
        if (std::all_of(orders.begin(), orders.end(), [&](std::uint64_t n) { return n <= 1 || q1 % n == 0; })) return e;
    }
    std::string list;
    for (auto n : orders) list += (list.empty() ? "" : ", ") + std::to_string(n);
    throw Error(ErrorCode::FieldTooSmall, "roots of unity of orders {" + list + "} need more than " + std::to_string(cap) +
                                              " extensions of " + f->spec());
}

ProjPoint pt(Field f, std::int64_t x, std::int64_t y, std::int64_t z) { return ProjPoint({Fq(f, x), Fq(f, y), Fq(f, z)}); }

Polynomial affine(const std::string& text, Field f) { return parse_polynomial(text, f, {"x", "y"}); }

UPoly upoly(Field f, std::initializer_list<std::int64_t> c) { return UPoly(f, c); }

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

GroupTag p_group_tag(std::uint64_t p, unsigned e) {
    if (e == 1) return GroupTag::Cyclic;
    return p == 2 && e == 2 ? GroupTag::Klein : GroupTag::ElementaryAbelian;
}

}  // namespace

FamilyInstance build_family(const FamilySpec& spec, unsigned ext_cap) {
    FamilyInstance r;
    r.spec = spec;
    Field base = parse_field_spec(spec.field);
    const std::uint64_t p = base->p();
    FamilyExpectation& x = r.expected;
    switch (spec.tag) {
        case FamilyTag::Thm2Tame: {
            const int d = spec.d;
            require(d >= 3, "thm2_tame needs d >= 3");
            require(static_cast<std::uint64_t>(d) % p != 0 && static_cast<std::uint64_t>(d - 1) % p != 0,
                    "thm2_tame needs p not dividing d(d-1)");
            require(spec.c == 0 || spec.c == 1, "thm2_tame needs c in {0, 1}");
            Field f = with_roots(base, {static_cast<std::uint64_t>(d - 1), static_cast<std::uint64_t>(d)}, ext_cap);
            r.field = f;
            Polynomial g = Polynomial::monomial(Fq::one(f), 2, {static_cast<std::uint16_t>(d - 1), 0, 0}) +
                           Polynomial::monomial(Fq::one(f), 2, {0, static_cast<std::uint16_t>(d), 0}) +
                           Polynomial::constant(Fq(f, spec.c), 2);
            r.curve = curve_from_affine(g);
            x.p = pt(f, 1, 0, 0);
            x.q = pt(f, 0, 1, 0);
            x.gp_order = d - 1;
            x.gq_order = d;
            x.gp_tag = x.gq_tag = x.joint_tag = GroupTag::Cyclic;
            x.joint_class = ProductClass::Direct;
            x.pq_is_dp = true;
            if (spec.c == 1) x.smooth = true;
            else x.singular_point = pt(f, 0, 0, 1);
            break;
        }
        case FamilyTag::Thm2Wild: {
            require(spec.p == p, "thm2_wild: p must be the field characteristic");
            require(spec.e >= 1, "thm2_wild needs e >= 1");
            require(spec.m >= 1 && spec.m % p != 0, "thm2_wild needs p not dividing m");
            require(spec.alphas.size() == spec.e + 1, "thm2_wild needs alpha_0 .. alpha_e");
            require(spec.c == 0 || spec.c == 1, "thm2_wild needs c in {0, 1}");
            const std::uint64_t d = ipow(p, spec.e) * spec.m;
            Field f = with_roots(base, {d - 1, spec.m}, ext_cap);
            r.field = f;
            AdditivePolynomial g{p, spec.e, spec.m, {}};
            for (const auto& a : spec.alphas) g.alpha.push_back(embed(f, parse_element(a, base)));
            require(!g.alpha.front().is_zero() && !g.alpha.back().is_zero(), "thm2_wild needs alpha_0 alpha_e != 0");
            for (unsigned i = 1; i <= spec.e; ++i)
                require(g.alpha[i].is_zero() || (ipow(p, i) - 1) % spec.m == 0,
                        "thm2_wild needs m | p^i - 1 whenever alpha_i != 0");
            Polynomial gy = Polynomial::from_upoly(g.poly(), 2, 1);
            Polynomial form = Polynomial::monomial(Fq::one(f), 2, {static_cast<std::uint16_t>(d - 1), 0, 0}) +
                              gy.pow(static_cast<unsigned>(spec.m)) + Polynomial::constant(Fq(f, spec.c), 2);
            r.curve = curve_from_affine(form);
            x.p = pt(f, 1, 0, 0);
            x.q = pt(f, 0, 1, 0);
            x.gp_order = d - 1;
            x.gq_order = d;
            x.gp_tag = GroupTag::Cyclic;
            x.joint_class = ProductClass::Direct;
            x.pq_is_dp = true;
            x.additive = g;
            break;
        }
        case FamilyTag::Thm3Cubic: {
            require(p != 2 && p != 3, "thm3 families need p not in {2, 3}");
            Field f = base;
            r.field = f;
            r.curve = curve_from_affine(affine("y^2*x+(x+1)^2*(x-8)", f));
            x.p = pt(f, 0, 1, 0);
            x.q = pt(f, 1, 0, 0);
            x.gp_order = 2;
            x.gq_order = 3;
            x.gp_tag = x.gq_tag = GroupTag::Cyclic;
            x.joint_tag = GroupTag::S3;
            x.joint_class = ProductClass::RightSemidirect;
            x.noncommuting_pair = true;
            x.lp_smooth_points = 1;
            x.lp_singular_multiplicity = 2;
            // x = 8 / (t^2 + 1), y = t (t^2 + 9) / (t^2 + 1)
            x.parametrization = Parametrization{{upoly(f, {8}), upoly(f, {0, 9, 0, 1}), upoly(f, {1, 0, 1})}};
            break;
        }
        case FamilyTag::Thm3Quartic: {
            require(p != 2 && p != 3, "thm3 families need p not in {2, 3}");
            Field f = with_roots(base, {3}, ext_cap);
            r.field = f;
            r.curve = curve_from_affine(affine("y^3*x+(x+1)^3*(x+9)", f));
            x.p = pt(f, 0, 1, 0);
            x.q = pt(f, 1, 0, 0);
            x.gp_order = 3;
            x.gq_order = 4;
            x.gp_tag = GroupTag::Cyclic;
            x.gq_tag = GroupTag::Klein;
            x.joint_tag = GroupTag::A4;
            x.joint_class = ProductClass::RightSemidirect;
            x.noncommuting_pair = true;
            x.lp_smooth_points = 1;
            x.lp_singular_multiplicity = 3;
            // x = -9 / (t^3 + 1), y = t (t^3 - 8) / (t^3 + 1)
            x.parametrization = Parametrization{{upoly(f, {-9}), upoly(f, {0, -8, 0, 0, 1}), upoly(f, {1, 0, 0, 1})}};
            break;
        }
        case FamilyTag::Prop4: {
            require(spec.p == p, "prop4: p must be the field characteristic");
            require(spec.e >= 1, "prop4 needs e >= 1");
            const std::uint64_t d = ipow(p, spec.e);
            require(d >= 3, "prop4 needs d = p^e >= 3");
            Field f = with_roots(base, {d - 1}, ext_cap);
            r.field = f;
            const auto dd = static_cast<std::uint16_t>(d);
            Polynomial form = Polynomial::monomial(Fq::one(f), 2, {1, static_cast<std::uint16_t>(d - 1), 0}) +
                              (Polynomial::variable(f, 2, 0) + Polynomial::constant(Fq::one(f), 2)).pow(dd);
            r.curve = curve_from_affine(form);
            x.p = pt(f, 0, 1, 0);
            x.q = pt(f, 1, 0, 0);
            x.gp_order = d - 1;
            x.gq_order = d;
            x.gp_tag = GroupTag::Cyclic;
            x.gq_tag = p_group_tag(p, spec.e);
            x.joint_class = ProductClass::RightSemidirect;
            x.noncommuting_pair = true;
            x.pq_distinct = d;
            // x = -1 / (t^(d-1) + 1), y = t^d / (t^(d-1) + 1)
            x.parametrization = Parametrization{{UPoly::constant(-Fq::one(f)), UPoly::monomial(Fq::one(f), d),
                                                 UPoly::monomial(Fq::one(f), d - 1) + UPoly::constant(Fq::one(f))}};
            break;
        }
        case FamilyTag::Prop4Normal: {
            const std::uint64_t q = spec.q;
            unsigned e = 0;
            for (std::uint64_t v = q; v > 1 && v % p == 0; v /= p) ++e;
            require(q >= 3 && ipow(p, e) == q, "prop4_normal needs q a power of the characteristic, q >= 3");
            // F_q itself must sit inside the field
            Field f = base->k() % e == 0 ? base : extension_field(base, e / std::gcd(base->k(), e));
            r.field = f;
            Polynomial form = Polynomial::variable(f, 2, 0) - Polynomial::monomial(Fq::one(f), 2, {0, static_cast<std::uint16_t>(q), 0});
            r.curve = curve_from_affine(form);
            x.p = pt(f, 0, 0, 1);
            x.q = pt(f, 1, 1, 0);
            x.gp_order = q - 1;
            x.gq_order = q;
            x.gp_tag = GroupTag::Cyclic;
            x.gq_tag = p_group_tag(p, e);
            x.joint_class = ProductClass::RightSemidirect;
            x.noncommuting_pair = true;
            x.pq_distinct = q;
            x.parametrization = Parametrization{{UPoly::monomial(Fq::one(f), q), UPoly::monomial(Fq::one(f), 1), UPoly::constant(Fq::one(f))}};
            break;
        }
        case FamilyTag::Gk: {
            const std::uint64_t q = spec.q;
            unsigned e = 0;
            for (std::uint64_t v = q; v > 1 && v % p == 0; v /= p) ++e;
            require(q >= 2 && ipow(p, e) == q, "gk needs q a power of the characteristic");
            const std::uint64_t q3 = q * q * q;
            Field f = with_roots(base, {q3 + 1, q * q - 1}, ext_cap);
            r.field = f;
            Polynomial xv = Polynomial::variable(f, 2, 0);
            Polynomial form = xv.pow(static_cast<unsigned>(q3)) + xv -
                              (xv.pow(static_cast<unsigned>(q)) + xv).pow(static_cast<unsigned>(q * q - q + 1)) -
                              Polynomial::monomial(Fq::one(f), 2, {0, static_cast<std::uint16_t>(q3 + 1), 0});
            r.curve = curve_from_affine(form);
            x.p = pt(f, 1, 0, 0);
            x.q = pt(f, 0, 1, 0);
            // With u = x^q + x the curve is y^(q^3+1) = u (u^(q-1) - 1)^(q+1), so
            // w = y^(q^2-q+1) / (u^(q-1) - 1) satisfies x^q + x = w^(q+1) and
            // y^(q^2-q+1) = w^(q^2) - w. On (x : y : 1 : w) both groups are linear:
            // G_P is x -> x + a^q w + c, w -> w + a with a in F_(q^2) and
            // c^q + c = a^(q+1); G_Q is y -> zeta y, w -> zeta^(q^2-q+1) w.
            const unsigned k2 = 2 * e;
            const auto qq = static_cast<std::uint16_t>(q * q - q + 1);
            Polynomial u = xv.pow(static_cast<unsigned>(q)) + xv;
            x.lift = SpaceLift{Polynomial::monomial(Fq::one(f), 2, {0, qq, 0}),
                               u.pow(static_cast<unsigned>(q - 1)) - Polynomial::constant(Fq::one(f), 2)};
            Field sub = make_field(p, k2);
            std::vector<Fq> fq2;
            for (u128 i = 0; i < sub->order(); ++i) fq2.push_back(embed(f, Fq::from_index(sub, i)));
            const Fq one = Fq::one(f), zero = Fq::zero(f);
            auto g_p = [&](const Fq& a, const Fq& c) {
                return Projectivity(4, {one, zero, c, a.pow(q), zero, one, zero, zero, zero, zero, one, zero, zero, zero, a, one});
            };
            auto solve_c = [&](const Fq& a) {
                for (const auto& c : fq2)
                    if (c.pow(q) + c == a.pow(q + 1)) return c;
                throw Error(ErrorCode::FieldTooSmall, "gk: no c with c^q + c = a^(q+1)");
            };
            Fq basis = embed(f, Fq::generator(sub));
            for (unsigned i = 0; i < k2; ++i) x.lift_gp.push_back(g_p(basis.pow(i), solve_c(basis.pow(i))));
            for (const auto& c : fq2)
                if (!c.is_zero() && (c.pow(q) + c).is_zero()) x.lift_gp.push_back(g_p(zero, c));
            Fq zeta = *nth_root_of_unity(f, q3 + 1);
            x.lift_gq.push_back(Projectivity(4, {one, zero, zero, zero, zero, zeta, zero, zero, zero, zero, one, zero, zero, zero, zero,
                                                 zeta.pow(q * q - q + 1)}));
            x.gp_order = q3;
            x.gq_order = q3 + 1;
            x.gq_tag = GroupTag::Cyclic;
            x.joint_class = ProductClass::LeftSemidirect;
            x.noncommuting_pair = true;
            break;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// verification

bool FamilyVerdict::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

namespace {

// The line of fixed points of a homology, or nullopt.
std::optional<ProjLine> axis_of(const Projectivity& s) {
    Field f = s.field();
    const auto& m = s.entries();
    auto at = [&](int i, int j) { return m[3 * i + j]; };
    Fq tr = at(0, 0) + at(1, 1) + at(2, 2);
    Fq minors = at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0) + at(0, 0) * at(2, 2) - at(0, 2) * at(2, 0) + at(1, 1) * at(2, 2) -
                at(1, 2) * at(2, 1);
    Fq det = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) - at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
             at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    UPoly chi(f, std::vector<Fq>{-det, minors, -tr, Fq::one(f)});
    for (const auto& mu : roots_in_field(chi)) {
        std::vector<Fq> a(m.begin(), m.end());
        for (int i = 0; i < 3; ++i) a[4 * i] -= mu;
        bool rank1 = true;
        for (int r1 = 0; r1 < 3; ++r1)
            for (int r2 = r1 + 1; r2 < 3; ++r2)
                for (int c1 = 0; c1 < 3; ++c1)
                    for (int c2 = c1 + 1; c2 < 3; ++c2)
                        rank1 = rank1 && (a[3 * r1 + c1] * a[3 * r2 + c2] - a[3 * r1 + c2] * a[3 * r2 + c1]).is_zero();
        if (!rank1) continue;
        for (int r = 0; r < 3; ++r)
            if (!(a[3 * r].is_zero() && a[3 * r + 1].is_zero() && a[3 * r + 2].is_zero()))
                return ProjLine({a[3 * r], a[3 * r + 1], a[3 * r + 2]});
    }
    return std::nullopt;
}

// Parameters t with phi(t) = x.
std::vector<ProjPoint> preimage(const Parametrization& phi0, const ProjPoint& x0, unsigned ext_cap) {
    Field f = common_field(phi0.field(), x0.field());
    Parametrization phi = phi0.embed(f);
    ProjPoint x = x0.embed(f);
    UPoly g(f);
    for (int j = 0; j < 3; ++j)
        for (int k = j + 1; k < 3; ++k) g = gcd(g, phi.coords[j] * x[k] - phi.coords[k] * x[j]);
    std::vector<ProjPoint> out;
    Field e = f;
    if (g.degree() > 0) {
        RootMultiset rm = splitting_roots(g, ext_cap);
        e = rm.ext;
        for (const auto& [r, mult] : rm.roots) out.push_back(ProjPoint::affine(r));
    }
    if (phi(ProjPoint::infinity(f)) == x) out.push_back(ProjPoint::infinity(e));
    return out;
}

bool maps_to_itself(const Projectivity& s0, const ProjPoint& r0) {
    Field f = common_field(s0.field(), r0.field());
    ProjPoint r = r0.embed(f);
    return apply(s0.embed(f), r) == r;
}

bool same_point(const ProjPoint& a, const ProjPoint& b) {
    Field f = common_field(a.field(), b.field());
    return a.embed(f) == b.embed(f);
}

}  // namespace

FamilyVerdict verify_family(const PlaneCurve& c, const FamilyExpectation& x, const GaloisConfig& cfg0) {
    FamilyVerdict v;
    v.curve = c;
    auto check = [&](const std::string& name, bool ok, std::string detail = {}) { v.checks.push_back({name, ok, std::move(detail)}); };

    GaloisConfig cfg = cfg0;
    if (x.parametrization) {
        const bool on = parametrizes(c, *x.parametrization);
        check("parametrization_on_curve", on);
        if (on) {
            cfg.strategy = Strategy::Deck;
            cfg.parametrization = x.parametrization;
        }
    }
    auto run = [&](const ProjPoint& pt, PointClass cls, std::size_t order, const std::optional<GroupTag>& tag,
                   const std::string& name) {
        GaloisReport r;
        try {
            if (x.lift) r = lifted_galois_point(c, pt, *x.lift, name == "inner" ? x.lift_gp : x.lift_gq, cfg.closure_cap);
            else r = is_galois_point(c, pt, cfg);
        } catch (const Error& e) {
            r.point = pt;
            r.notes.push_back(e.what());
            check(name + "_certified", false, e.what());
            return r;
        }
        const bool cert = r.verdict == Verdict::CertifiedGalois && r.point_class == cls;
        check(name + "_certified", cert, to_string(r.verdict) + " " + to_string(r.point_class) + " via " + to_string(r.method));
        const std::size_t got = r.group ? r.group->order() : 0;
        check(name + "_order", cert && got == order, std::to_string(got) + " vs " + std::to_string(order));
        if (tag) {
            const std::string have = r.descriptor ? r.descriptor->tag_string() : "none";
            check(name + "_descriptor", cert && r.descriptor && r.descriptor->tag == *tag, have);
        }
        return r;
    };
    v.inner = run(x.p, PointClass::Inner, x.gp_order, x.gp_tag, "inner");
    v.outer = run(x.q, PointClass::Outer, x.gq_order, x.gq_tag, "outer");
    const bool both = v.inner.verdict == Verdict::CertifiedGalois && v.outer.verdict == Verdict::CertifiedGalois &&
                      v.inner.group && v.outer.group && v.inner.group->n() == v.outer.group->n();

    if (both) {
        Field f = common_field(v.inner.group->field(), v.outer.group->field());
        v.joint = product_structure(v.inner.group->embed(f), v.outer.group->embed(f), cfg.closure_cap);
        v.joint_descriptor = identify_group(v.joint->joint);
        if (x.lift) check("joint_faithful", acts_faithfully(c, *x.lift, v.joint->joint), "joint group acting through the lift");
    }
    if (x.joint_tag)
        check("joint_descriptor", v.joint_descriptor && v.joint_descriptor->tag == *x.joint_tag,
              v.joint_descriptor ? v.joint_descriptor->tag_string() : "no joint group");
    if (x.joint_class)
        check("joint_classification", v.joint && v.joint->classification == *x.joint_class,
              v.joint ? to_string(v.joint->classification) : "no joint group");
    if (x.noncommuting_pair) check("noncommuting_pair", v.joint && v.joint->noncommuting.has_value());

    // line PQ
    const int d = c.degree();
    ProjLine pq = ProjLine::through(x.p, x.q);
    v.lemma_line.divisor = line_intersection_divisor(c, pq, cfg.ext_cap);
    const auto& sup = v.lemma_line.divisor.support;
    v.lemma_line.support_size = sup.size();
    v.lemma_line.is_1_or_d = sup.size() == 1 || static_cast<int>(sup.size()) == d;
    v.lemma_line.is_dp = sup.size() == 1 && same_point(sup.front().first, x.p) && static_cast<int>(sup.front().second) == d;
    if (both) check("lemma_line_a", v.lemma_line.is_1_or_d, v.lemma_line.divisor.to_string());
    if (x.pq_is_dp) check("pq_divisor_dP", v.lemma_line.is_dp, v.lemma_line.divisor.to_string());
    if (x.pq_distinct) {
        const bool reduced = std::all_of(sup.begin(), sup.end(), [](const auto& pm) { return pm.second == 1; });
        check("pq_distinct_points", reduced && sup.size() == *x.pq_distinct, v.lemma_line.divisor.to_string());
    }

    // G_P fixes P, and no nontrivial element fixes another point of supp(phi* l)
    if (v.joint && v.joint->classification != ProductClass::Neither && v.joint->classification != ProductClass::NotAProduct) {
        bool ok = true;
        const auto& gp = *v.inner.group;
        for (const auto& s : gp.elements()) {
            if (s.is_identity()) continue;
            if (gp.n() == 3) {
                ok = ok && maps_to_itself(s, x.p);
                for (const auto& [r, mult] : sup)
                    if (maps_to_itself(s, r)) ok = ok && same_point(r, x.p);
            } else if (x.parametrization) {
                auto tp = preimage(*x.parametrization, x.p, cfg.ext_cap);
                ok = ok && tp.size() == 1 && maps_to_itself(s, tp.front());
                for (const auto& [r, mult] : sup) {
                    auto tr = preimage(*x.parametrization, r, cfg.ext_cap);
                    if (tr.size() == 1 && maps_to_itself(s, tr.front())) ok = ok && same_point(r, x.p);
                }
            }
        }
        check("lemma_line_b", ok);
    }

    // the axis l_P of the homologies with center P
    if (x.lp_smooth_points || x.lp_singular_multiplicity) {
        std::optional<FiniteProjectivityGroup> lin;
        if (v.inner.group && v.inner.group->n() == 3) lin = v.inner.group;
        else {
            try {
                lin = central_collineation_group(c, x.p, CollineationMode::Exact, cfg.brute_q_cap, cfg.closure_cap);
            } catch (const Error&) {
            }
        }
        if (lin && lin->order() > 1) v.axis = axis_of(lin->elements()[1]);
        std::size_t smooth = 0;
        unsigned top = 0;
        if (v.axis) {
            PointDivisor on = line_intersection_divisor(c, *v.axis, cfg.ext_cap);
            for (const auto& [r, mult] : on.support) {
                if (c.is_singular_at(r)) top = std::max(top, c.multiplicity_at(r));
                else ++smooth;
            }
        }
        const std::string where = v.axis ? v.axis->to_string() : "no axis";
        if (x.lp_smooth_points) check("lp_smooth_points", v.axis && smooth == *x.lp_smooth_points, where + ": " + std::to_string(smooth));
        if (x.lp_singular_multiplicity)
            check("lp_singular_multiplicity", v.axis && top == *x.lp_singular_multiplicity, where + ": " + std::to_string(top));
    }

    if (x.smooth || x.singular_point) {
        SingularLocus sl = singular_points(c, cfg.ext_cap);
        if (x.smooth) check("smooth", sl.empty() == *x.smooth, std::to_string(sl.points.size()) + " singular points");
        if (x.singular_point) check("singular_point", sl.contains(*x.singular_point), x.singular_point->to_string());
    }
    if (x.additive) {
        check("additive_identity", x.additive->is_additive());
        check("additive_scaling", x.additive->is_scaling_stable());
    }
    return v;
}

// ---------------------------------------------------------------------------
// branch certificates

namespace {

using XPoly = std::vector<Polynomial>;  // coefficients in x, entries in the unknowns

XPoly xmul(const XPoly& a, const XPoly& b) {
    Field f = a.front().field();
    XPoly r(a.size() + b.size() - 1, Polynomial(f, 3));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Common zeros over the base field of eqs in the variables vars (the others
// already fixed or unused). The univariate polynomial met at the deepest level
// is reported through eliminant.
std::vector<std::vector<std::pair<int, Fq>>> solve(const std::vector<Polynomial>& eqs, std::vector<int> vars, UPoly* eliminant) {
    std::vector<Polynomial> live;
    for (const auto& e : eqs)
        if (!e.is_zero()) live.push_back(e);
    Field f = eqs.front().field();
    const int v = vars.front();
    std::vector<std::vector<std::pair<int, Fq>>> out;
    if (vars.size() == 1) {
        UPoly g(f);
        for (const auto& e : live) {
            if (e.is_constant()) return out;  // a nonzero constant: no solution
            g = gcd(g, e.to_upoly(v));
        }
        if (eliminant) *eliminant = g.monic();
        for (const auto& r : roots_in_field(g)) out.push_back({{v, r}});
        return out;
    }
    // eliminate v with the equation of least positive degree in v
    auto pivot = std::min_element(live.begin(), live.end(), [&](const Polynomial& a, const Polynomial& b) {
        int da = a.degree_in(v), db = b.degree_in(v);
        if (da == 0) return false;
        if (db == 0) return true;
        return da < db;
    });
    std::vector<Polynomial> next;
    for (auto it = live.begin(); it != live.end(); ++it) {
        if (it == pivot) continue;
        next.push_back(it->involves(v) ? resultant(*pivot, *it, v) : *it);
    }
    if (next.empty()) throw Error(ErrorCode::VerificationFailed, "underdetermined branch system");
    std::vector<int> rest(vars.begin() + 1, vars.end());
    for (const auto& partial : solve(next, rest, eliminant)) {
        std::vector<Polynomial> sub;
        for (const auto& e : live) {
            Polynomial t = e;
            for (const auto& [var, val] : partial) t = t.specialize(var, val);
            sub.push_back(t);
        }
        for (auto sol : solve(sub, {v}, nullptr)) {
            sol.insert(sol.end(), partial.begin(), partial.end());
            out.push_back(sol);
        }
    }
    return out;
}

}  // namespace

BranchCertificate branch_certificate(int d, Field f, unsigned ext_cap) {
    if (d != 3 && d != 4) throw Error(ErrorCode::InvalidArgument, "branch certificates exist for d = 3 and d = 4");
    // unknowns: a = var 0, c = var 1, d0 = var 2
    auto cst = [&](std::int64_t k) { return Polynomial::constant(Fq(f, k), 3); };
    auto var = [&](int i) { return Polynomial::variable(f, 3, i); };
    XPoly lhs{cst(1)};
    for (int i = 0; i < d - 1; ++i) lhs = xmul(lhs, {cst(1), cst(1)});
    lhs = xmul(lhs, {var(0), cst(1)});
    XPoly rhs = d == 3 ? xmul(xmul(XPoly{var(1), cst(1)}, {var(1), cst(1)}), {var(1), cst(1)})
                       : xmul(XPoly{var(2), var(1), cst(1)}, {var(2), var(1), cst(1)});
    std::vector<Polynomial> eqs;
    for (int i = 0; i <= d; ++i)
        if (i != 1) eqs.push_back(lhs[i] - rhs[i]);
    Polynomial beta_poly = rhs[1] - lhs[1];

    BranchCertificate r;
    r.d = d;
    std::vector<int> vars = d == 3 ? std::vector<int>{0, 1} : std::vector<int>{0, 1, 2};
    auto sols = solve(eqs, vars, &r.eliminant);
    bool found = false;
    for (const auto& sol : sols) {
        std::vector<Fq> val(3, Fq::zero(f));
        for (const auto& [i, x] : sol) val[i] = x;
        Fq b = beta_poly.eval(val);
        if (b.is_zero()) continue;  // the beta = 0 branch
        r.a = val[0];
        r.c = val[1];
        r.d0 = val[2];
        r.beta_power = b;
        found = true;
        break;
    }
    if (!found) throw Error(ErrorCode::DegenerateOnly, "only the beta = 0 branch exists over " + f->spec());

    for (unsigned j = 1; j <= ext_cap && !r.field; ++j) {
        Field e = extension_field(f, j);
        UPoly x = UPoly::monomial(Fq::one(e), d - 1) - UPoly::constant(embed(e, r.beta_power));
        auto roots = roots_in_field(x);
        if (!roots.empty()) {
            r.field = e;
            r.beta = roots.front();
        }
    }
    if (!r.field) throw Error(ErrorCode::FieldTooSmall, "beta needs more than " + std::to_string(ext_cap) + " extensions");

    Field e = r.field;
    Fq a = embed(e, r.a), c = embed(e, r.c), d0 = embed(e, r.d0), b = r.beta;
    auto n = [&](std::int64_t k) { return Fq(e, k); };
    if (d == 3) {
        r.relations = {{"a+2=3c", a + n(2) == n(3) * c},
                       {"2a+beta^2+1=3c^2", n(2) * a + b * b + n(1) == n(3) * c * c},
                       {"a=c^3", a == c * c * c}};
    } else {
        r.relations = {{"a+3=2c", a + n(3) == n(2) * c},
                       {"3a+3=c^2+2d0", n(3) * a + n(3) == c * c + n(2) * d0},
                       {"3a+beta^3+1=2c*d0", n(3) * a + b * b * b + n(1) == n(2) * c * d0},
                       {"a=d0^2", a == d0 * d0}};
    }

    // y^(d-1) x + (x+1)^(d-1) (x+a)  vs  y^(d-1) x - beta^(d-1) x + rhs(x)
    Polynomial x = Polynomial::variable(f, 2, 0), y = Polynomial::variable(f, 2, 1), one = Polynomial::constant(Fq::one(f), 2);
    Polynomial yx = y.pow(d - 1) * x;
    r.lhs = yx + (x + one).pow(d - 1) * (x + Polynomial::constant(r.a, 2));
    Polynomial tail = d == 3 ? (x + Polynomial::constant(r.c, 2)).pow(3)
                             : (x * x + x * r.c + Polynomial::constant(r.d0, 2)).pow(2);
    r.rhs = yx - x * r.beta_power + tail;
    r.identity_holds = r.lhs == r.rhs;
    return r;
}

}  // namespace galpoint
