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

#include "galpoint/embedder.hpp"

#include <random>

#include "galpoint/error.hpp"

namespace galpoint {

std::vector<ConditionBWitness> check_condition_b(const FiniteProjectivityGroup& g10, const FiniteProjectivityGroup& g20,
                                                 const ProjPoint& p0) {
    Field f = common_field(common_field(g10.field(), g20.field()), p0.field());
    FiniteProjectivityGroup g1 = g10.embed(f), g2 = g20.embed(f);
    ProjPoint p = p0.embed(f);
    PointDivisor rhs = orbit(g2, p);
    std::vector<ConditionBWitness> out;
    for (const auto& eta : g2.elements()) {
        PointDivisor lhs = orbit(g1, apply(eta, p));
        lhs.support.emplace_back(p, 1);
        lhs.normalize();
        if (lhs == rhs) out.push_back({eta, lhs, rhs});
    }
    return out;
}

namespace {

struct Frac {
    UPoly num, den;
};

// a/b + c/d over the lcm of the denominators.
Frac add(const Frac& x, const Frac& y) {
    UPoly g = gcd(x.den, y.den);
    UPoly xd = x.den / g, yd = y.den / g;
    return {x.num * yd + y.num * xd, x.den * yd};
}

}  // namespace

RationalMap1D invariant_generator(const FiniteProjectivityGroup& g0, const ProjPoint& q00) {
    Field f = common_field(g0.field(), q00.field());
    FiniteProjectivityGroup g = g0.embed(f);
    ProjPoint q0 = q00.embed(f);
    const int order = static_cast<int>(g.order());
    // s(t) = (a t + b) / (c t + d)
    std::vector<Frac> images;
    for (const auto& s : g.elements()) {
        const auto& m = s.entries();
        images.push_back({UPoly(f, std::vector<Fq>{m[1], m[0]}), UPoly(f, std::vector<Fq>{m[3], m[2]})});
    }
    for (int j = 1; j <= 2 * order; ++j) {
        Frac sum{UPoly(f), UPoly::constant(Fq::one(f))};
        for (const auto& im : images) sum = add(sum, {im.num.pow(j), im.den.pow(j)});
        RationalMap1D fj(sum.num, sum.den);
        if (fj.degree() != order) continue;
        ProjPoint v = fj(q0);
        if (v.is_infinity()) return fj;
        // 1 / (F_j - F_j(q0))
        return RationalMap1D(fj.den(), fj.num() - fj.den() * v.t());
    }
    throw Error(ErrorCode::LadderExhausted,
                "no power sum up to degree " + std::to_string(2 * order) + " generates the invariant field over " + f->spec());
}

Parametrization parametrization_of(const RationalMap1D& f0, const RationalMap1D& g0) {
    Field k = common_field(f0.field(), g0.field());
    UPoly nf = f0.num().embed(k), df = f0.den().embed(k), ng = g0.num().embed(k), dg = g0.den().embed(k);
    UPoly h = gcd(df, dg);
    UPoly cf = dg / h, cg = df / h;
    return {{nf * cf, ng * cg, df * cf}};
}

PlaneCurve implicitize(const RationalMap1D& f0, const RationalMap1D& g0, std::optional<int> expected_degree) {
    if (f0.degree() < 1 || g0.degree() < 1) throw Error(ErrorCode::InvalidArgument, "implicitize needs nonconstant maps");
    Field k = common_field(f0.field(), g0.field());
    auto lift = [&](const UPoly& u) { return Polynomial::from_upoly(u.embed(k), 3, 2); };
    Polynomial a = lift(f0.num()) - Polynomial::variable(k, 3, 0) * lift(f0.den());
    Polynomial b = lift(g0.num()) - Polynomial::variable(k, 3, 1) * lift(g0.den());
    Polynomial r = resultant(a, b, 2).with_nvars(2).monic();
    std::optional<PlaneCurve> c;
    try {
        c = curve_from_affine(r);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotSquarefree) throw;
        throw Error(ErrorCode::DegreeMismatch, "eliminant " + r.to_string() + " is not squarefree; the map is not birational");
    }
    if (expected_degree && c->degree() != *expected_degree)
        throw Error(ErrorCode::DegreeMismatch, "implicit curve has degree " + std::to_string(c->degree()) + ", expected " +
                                                   std::to_string(*expected_degree));
    Parametrization phi = parametrization_of(f0, g0);
    std::mt19937_64 rng(0x1397);
    for (int i = 0; i < 20; ++i) {
        Field e = extension_field(k, 1 + i % 3);
        ProjPoint t = ProjPoint::affine(Fq::random(e, rng));
        if (!c->contains(phi(t)))
            throw Error(ErrorCode::VerificationFailed, "implicit curve misses the image of t = " + t.to_string());
    }
    return *c;
}

namespace {

// Zeros of the Z coordinate of phi on P^1, the degree deficit at infinity.
PointDivisor z_pullback(const Parametrization& phi, unsigned ext_cap) {
    const int n = phi.degree();
    Field k = phi.field();
    Polynomial z(k, 2);
    for (int i = 0; i <= phi.coords[2].degree(); ++i)
        z.add_term({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(n - i), 0}, phi.coords[2].coeff(i));
    return binary_form_divisor(z, ext_cap);
}

bool same_group(const FiniteProjectivityGroup& a, const FiniteProjectivityGroup& b) {
    if (a.order() != b.order()) return false;
    Field f = common_field(a.field(), b.field());
    FiniteProjectivityGroup be = b.embed(f);
    for (const auto& s : a.elements())
        if (!be.contains(s.embed(f))) return false;
    return true;
}

}  // namespace

EmbeddingResult construct_embedding(const FiniteProjectivityGroup& g1, const FiniteProjectivityGroup& g2, const ProjPoint& p,
                                    const EmbedConfig& cfg) {
    if (g2.order() < 2) throw Error(ErrorCode::InvalidArgument, "G2 must be nontrivial");
    EmbeddingResult r;
    r.witnesses = check_condition_b(g1, g2, p);
    if (r.witnesses.empty()) throw Error(ErrorCode::ConditionBFails, "no eta in G2 satisfies the divisor identity");
    r.eta = r.witnesses.front().eta;
    Field k = r.eta.field();
    ProjPoint pk = p.embed(k);
    r.f = invariant_generator(g1, apply(r.eta, pk));
    r.g = invariant_generator(g2, pk);
    r.phi = parametrization_of(r.f, r.g);
    r.curve = implicitize(r.f, r.g, static_cast<int>(g2.order()));
    r.image_p = ProjPoint({Fq::zero(k), Fq::one(k), Fq::zero(k)});
    r.q = ProjPoint({Fq::one(k), Fq::zero(k), Fq::zero(k)});

    GaloisConfig gc;
    gc.strategy = Strategy::Deck;
    gc.parametrization = r.phi;
    gc.ext_cap = cfg.ext_cap;
    gc.closure_cap = cfg.closure_cap;
    gc.trials = cfg.trials;
    gc.seed = cfg.seed;
    auto certify = [&](const ProjPoint& x, const FiniteProjectivityGroup& expected, const char* stage) {
        GaloisReport rep;
        try {
            rep = is_galois_point(r.curve, x, gc);
        } catch (const Error& e) {
            throw Error(ErrorCode::VerificationFailed, std::string(stage) + ": " + e.what());
        }
        if (rep.verdict != Verdict::CertifiedGalois)
            throw Error(ErrorCode::VerificationFailed, std::string(stage) + ": no certificate at " + x.to_string());
        if (!same_group(*rep.group, expected))
            throw Error(ErrorCode::VerificationFailed, std::string(stage) + ": deck group differs from the input group");
        return rep;
    };
    r.inner_report = certify(r.image_p, g1, "inner point");
    r.outer_report = certify(r.q, g2, "outer point");
    if (r.inner_report.point_class != PointClass::Inner || r.outer_report.point_class != PointClass::Outer)
        throw Error(ErrorCode::VerificationFailed, "point classes: (0:1:0) must be inner and (1:0:0) outer");

    r.joint = product_structure(*r.inner_report.group, *r.outer_report.group, cfg.closure_cap);
    r.joint_descriptor = identify_group(r.joint.joint);

    r.pullback = z_pullback(r.phi, cfg.ext_cap);
    r.orbit_divisor = orbit(g2.embed(k), pk);
    Field e = common_field(r.pullback.support.front().first.field(), k);
    PointDivisor a = r.pullback.embed(e), b = r.orbit_divisor.embed(e);
    a.normalize();
    b.normalize();
    r.converse_holds = a == b;
    if (!r.converse_holds)
        throw Error(ErrorCode::VerificationFailed, "pullback of Z = 0 " + a.to_string() + " differs from " + b.to_string());
    return r;
}

namespace {

bool fixes(const Projectivity& s, const ProjPoint& x) { return apply(s, x) == x; }

std::vector<ProjPoint> p1_points(Field f) {
    std::vector<ProjPoint> pts;
    for (std::uint64_t i = 0; i < f->order(); ++i) pts.push_back(ProjPoint::affine(Fq::from_index(f, i)));
    pts.push_back(ProjPoint::infinity(f));
    return pts;
}

}  // namespace

EmbeddingData find_a4_data(Field f) {
    std::vector<Projectivity> all = enumerate_pgl2(f), inv, ord3;
    for (const auto& s : all) {
        std::uint64_t o = s.order(f->order() + 1);
        if (o == 2) inv.push_back(s);
        if (o == 3) ord3.push_back(s);
    }
    std::vector<ProjPoint> pts = p1_points(f);
    for (std::size_t i = 0; i < inv.size(); ++i)
        for (std::size_t j = i + 1; j < inv.size(); ++j) {
            const Projectivity &a = inv[i], &b = inv[j];
            if (a * b != b * a) continue;
            FiniteProjectivityGroup v = generate_group({a, b});
            for (const auto& c : ord3) {
                if (!v.contains(c * a * c.inverse()) || !v.contains(c * b * c.inverse())) continue;
                FiniteProjectivityGroup g1 = generate_group({c});
                for (const auto& p : pts)
                    if (fixes(c, p) && !check_condition_b(g1, v, p).empty()) return {g1, v, p};
            }
        }
    throw Error(ErrorCode::FieldTooSmall, "no A4 configuration over " + f->spec());
}

EmbeddingData find_s3_data(Field f) {
    std::vector<Projectivity> all = enumerate_pgl2(f), inv, ord3;
    for (const auto& s : all) {
        std::uint64_t o = s.order(f->order() + 1);
        if (o == 2) inv.push_back(s);
        if (o == 3) ord3.push_back(s);
    }
    std::vector<ProjPoint> pts = p1_points(f);
    for (const auto& c : ord3) {
        FiniteProjectivityGroup g2 = generate_group({c});
        for (const auto& s : inv) {
            if (s * c * s.inverse() != c.inverse()) continue;
            FiniteProjectivityGroup g1 = generate_group({s});
            for (const auto& p : pts)
                if (fixes(s, p) && !check_condition_b(g1, g2, p).empty()) return {g1, g2, p};
        }
    }
    throw Error(ErrorCode::FieldTooSmall, "no S3 configuration over " + f->spec());
}

}  // namespace galpoint
