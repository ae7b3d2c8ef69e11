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

#include "galpoint/curve.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace galpoint {

namespace {

std::vector<Polynomial> univariate_images(Field f, const std::vector<Fq>& a, const std::vector<Fq>& b) {
    // X_i -> a_i + t b_i
    std::vector<Polynomial> im;
    for (int i = 0; i < 3; ++i)
        im.push_back(Polynomial::constant(a[i], 1) + Polynomial::variable(f, 1, 0) * b[i]);
    return im;
}

// A restriction of form to a random line of full degree is squarefree. For a
// reduced curve a general line meets it transversally, so this is a Monte
// Carlo proof of reducedness; 32 misses in a row mean a repeated factor.
bool restriction_is_squarefree(const Polynomial& form) {
    std::mt19937_64 rng(0x5eed);
    const int d = form.total_degree();
    for (int attempt = 0; attempt < 32; ++attempt) {
        Field f = extension_field(form.field(), 1 + attempt / 4);
        Polynomial g = form.embed(f);
        std::vector<Fq> a, b;
        for (int i = 0; i < 3; ++i) {
            a.push_back(Fq::random(f, rng));
            b.push_back(Fq::random(f, rng));
        }
        UPoly u = g.substitute(univariate_images(f, a, b)).to_upoly(0);
        if (u.degree() != d) continue;
        if (is_squarefree(u)) return true;
    }
    return false;
}

Polynomial translate_to_origin(const Polynomial& form, const ProjPoint& p) {
    // chart at the first coordinate equal to 1; the other two become u, v
    const int i = static_cast<int>(std::find_if(p.coords().begin(), p.coords().end(), [](const Fq& c) { return c.is_one(); }) - p.coords().begin());
    Field f = p.field();
    std::vector<Polynomial> im(3);
    int next = 0;
    for (int j = 0; j < 3; ++j) {
        if (j == i) im[j] = Polynomial::constant(Fq::one(f), 2);
        else im[j] = Polynomial::variable(f, 2, next++) + Polynomial::constant(p[j], 2);
    }
    return form.embed(f).substitute(im);
}

}  // namespace

PlaneCurve::PlaneCurve(Polynomial form, bool assume_irreducible) : form_(std::move(form)), irreducible_(assume_irreducible) {
    if (form_.nvars() != 3 || form_.is_zero() || form_.is_constant() || !form_.is_homogeneous())
        throw Error(ErrorCode::InvalidArgument, "curve form must be a nonconstant homogeneous polynomial in X, Y, Z");
    form_ = form_.monic();
    if (!restriction_is_squarefree(form_)) throw Error(ErrorCode::NotSquarefree, "curve form has a repeated factor");
    for (int i = 0; i < 3; ++i) partials_[i] = form_.derivative(i);
}

Polynomial PlaneCurve::affine() const { return form_.specialize(2, Fq::one(field())).with_nvars(2); }

bool PlaneCurve::contains(const ProjPoint& p) const {
    if (p.dim() != 3) throw Error(ErrorCode::DimensionMismatch, "curve points live in P^2");
    Field f = common_field(field(), p.field());
    return form_.eval(p.embed(f).coords()).is_zero();
}

unsigned PlaneCurve::multiplicity_at(const ProjPoint& p0) const {
    if (!contains(p0)) return 0;
    ProjPoint p = p0.embed(common_field(field(), p0.field()));
    Polynomial g = translate_to_origin(form_, p);
    int m = g.total_degree();
    for (const auto& [e, c] : g.terms()) m = std::min(m, e[0] + e[1]);
    return static_cast<unsigned>(m);
}

bool PlaneCurve::is_singular_at(const ProjPoint& p0) const {
    if (!contains(p0)) return false;
    ProjPoint p = p0.embed(common_field(field(), p0.field()));
    for (int i = 0; i < 3; ++i)
        if (!partials_[i].eval(p.coords()).is_zero()) return false;
    return true;
}

PlaneCurve PlaneCurve::embed(Field dst) const {
    if (dst == field()) return *this;
    PlaneCurve c;
    c.form_ = form_.embed(dst);
    for (int i = 0; i < 3; ++i) c.partials_[i] = partials_[i].embed(dst);
    c.irreducible_ = irreducible_;
    return c;
}

PlaneCurve curve_from_affine(const Polynomial& f, bool assume_irreducible) {
    if (f.nvars() != 2 || f.is_zero()) throw Error(ErrorCode::InvalidArgument, "affine curve equation must be a nonzero polynomial in x, y");
    return PlaneCurve(f.homogenize(), assume_irreducible);
}

bool SingularLocus::contains(const ProjPoint& p) const {
    for (const auto& [q, m] : points) {
        Field f = common_field(q.field(), p.field());
        if (q.embed(f) == p.embed(f)) return true;
    }
    return false;
}

namespace {

// Product of the x-coordinates (var = 1) or y-coordinates (var = 0) of affine
// singular points, up to extra factors: the gcd of a few nonzero resultants
// Res_var(f, f_x + lambda f_y). A component dividing f_x + lambda f_y for two
// values of lambda divides both partials, which a reduced curve forbids, so
// some lambda always gives a nonzero resultant.
UPoly eliminate(const Polynomial& fa, int var) {
    const Polynomial fx = fa.derivative(0), fy = fa.derivative(1);
    const int other = 1 - var;
    UPoly acc;
    int found = 0;
    auto consider = [&](const Polynomial& g) {
        if (g.is_zero()) return;
        Polynomial r = resultant(fa.embed(g.field()), g, var);
        if (r.is_zero()) return;
        UPoly u = r.to_upoly(other);
        if (found && acc.field() != u.field()) return;
        acc = found ? gcd(acc, u) : u.monic();
        ++found;
    };
    consider(fy);
    consider(fx);
    const int d = fa.total_degree();
    for (unsigned j = 1; found < 3 && j <= 4; ++j) {
        Field f = extension_field(fa.field(), j);
        const u128 q = f->order();
        for (u128 i = 1; i < q && found < 3 && i <= static_cast<u128>(2 * d + 4); ++i) {
            if (j > 1 && Fq::from_index(f, i).pow(fa.field()->order()) == Fq::from_index(f, i)) continue;
            const Fq lam = Fq::from_index(f, i);
            if (found && acc.field() != f) break;
            consider(fx.embed(f) + fy.embed(f) * lam);
        }
        if (found) break;
    }
    if (!found) throw Error(ErrorCode::DegenerateElimination, "all partial-derivative resultants vanish");
    return acc;
}

}  // namespace

SingularLocus singular_points(const PlaneCurve& c, unsigned ext_cap) {
    Field f = c.field();
    const Polynomial fa = c.affine();
    UPoly rx = eliminate(fa, 1), ry = eliminate(fa, 0);

    // points (x:1:0) on the line at infinity
    UPoly rinf;
    for (const Polynomial* g : {&c.form(), &c.partial(0), &c.partial(1), &c.partial(2)}) {
        UPoly u = g->specialize(2, Fq::zero(f)).specialize(1, Fq::one(f)).to_upoly(0);
        if (u.is_zero()) continue;
        rinf = rinf.field() ? gcd(rinf, u) : u.monic();
    }

    unsigned k = f->k();
    for (const UPoly* u : {&rx, &ry, &rinf}) {
        if (!u->field() || u->degree() < 1) continue;
        unsigned s = u->field()->k() * splitting_degree(*u);
        k = std::lcm(k, s);
    }
    if (k / f->k() > ext_cap)
        throw Error(ErrorCode::ExtensionCapExceeded, "singular coordinates need an extension of degree " + std::to_string(k / f->k()));
    Field K = make_field(f->p(), k);
    PlaneCurve ck = c.embed(K);

    SingularLocus out;
    out.ext = K;
    auto roots_of = [&](const UPoly& u) {
        if (!u.field() || u.degree() < 1) return std::vector<Fq>{};
        return roots_in_field(u.embed(K));
    };
    auto test = [&](ProjPoint p) {
        if (ck.is_singular_at(p)) out.points.emplace_back(p, ck.multiplicity_at(p));
    };
    const auto xs = roots_of(rx), ys = roots_of(ry);
    for (const auto& x : xs)
        for (const auto& y : ys) test(ProjPoint({x, y, Fq::one(K)}));
    for (const auto& x : roots_of(rinf)) test(ProjPoint({x, Fq::one(K), Fq::zero(K)}));
    test(ProjPoint({Fq::one(K), Fq::zero(K), Fq::zero(K)}));
    std::sort(out.points.begin(), out.points.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

ProjLine tangent_line(const PlaneCurve& c, const ProjPoint& p0) {
    if (!c.contains(p0)) throw Error(ErrorCode::PointNotOnCurve, "tangent at a point off the curve: " + p0.to_string());
    Field f = common_field(c.field(), p0.field());
    ProjPoint p = p0.embed(f);
    std::vector<Fq> g;
    for (int i = 0; i < 3; ++i) g.push_back(c.partial(i).eval(p.coords()));
    if (std::all_of(g.begin(), g.end(), [](const Fq& x) { return x.is_zero(); }))
        throw Error(ErrorCode::PointSingular, "no tangent line at singular point " + p0.to_string());
    return ProjLine(std::move(g));
}

std::pair<ProjPoint, ProjPoint> line_basis(const ProjLine& l) {
    const auto& v = l.coeffs();
    Field f = l.field();
    const Fq z = Fq::zero(f);
    std::vector<std::vector<Fq>> cand{{z, v[2], -v[1]}, {-v[2], z, v[0]}, {v[1], -v[0], z}};
    std::vector<ProjPoint> pts;
    for (auto& c : cand) {
        if (std::all_of(c.begin(), c.end(), [](const Fq& x) { return x.is_zero(); })) continue;
        ProjPoint p(c);
        if (pts.empty() || !(pts[0] == p)) pts.push_back(p);
        if (pts.size() == 2) break;
    }
    return {pts[0], pts[1]};
}

PointDivisor binary_form_divisor(const Polynomial& g, unsigned ext_cap) {
    if (g.is_zero()) throw Error(ErrorCode::ZeroInput, "divisor of the zero form");
    if (g.nvars() != 2 || !g.is_homogeneous()) throw Error(ErrorCode::InvalidArgument, "binary form expected");
    Field f = g.field();
    const int d = g.total_degree();
    UPoly u = g.specialize(1, Fq::one(f)).to_upoly(0);
    PointDivisor out{2, {}};
    Field ext = f;
    if (u.degree() >= 1) {
        RootMultiset rm = splitting_roots(u, ext_cap);
        ext = rm.ext;
        for (const auto& [r, m] : rm.roots) out.support.emplace_back(ProjPoint::affine(r), m);
    }
    if (d > u.degree()) out.support.emplace_back(ProjPoint::infinity(ext), static_cast<unsigned>(d - u.degree()));
    out.normalize();
    return out;
}

PointDivisor line_intersection_divisor(const PlaneCurve& c, const ProjLine& l, unsigned ext_cap) {
    Field f = common_field(c.field(), l.field());
    auto [a0, b0] = line_basis(l);
    ProjPoint a = a0.embed(f), b = b0.embed(f);
    std::vector<Polynomial> im;
    for (int i = 0; i < 3; ++i)
        im.push_back(Polynomial::variable(f, 2, 0) * a[i] + Polynomial::variable(f, 2, 1) * b[i]);
    Polynomial g = c.form().embed(f).substitute(im);
    if (g.is_zero()) throw Error(ErrorCode::LineIsComponent, "line " + l.to_string() + " is a component of the curve");
    PointDivisor onp1 = binary_form_divisor(g, ext_cap);
    PointDivisor out{3, {}};
    for (const auto& [st, m] : onp1.support) {
        Field e = st.field();
        ProjPoint ae = a.embed(e), be = b.embed(e);
        std::vector<Fq> x;
        for (int i = 0; i < 3; ++i) x.push_back(st[0] * ae[i] + st[1] * be[i]);
        out.support.emplace_back(ProjPoint(std::move(x)), m);
    }
    out.normalize();
    return out;
}

}  // namespace galpoint
