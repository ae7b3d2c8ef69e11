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

#include "galpoint/galois.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace galpoint {

namespace {

// sum_i u_i X^i Y^(n-i)
Fq hom_eval(const UPoly& u, int n, const Fq& x, const Fq& y) {
    Fq r = Fq::zero(x.field()), ypow = Fq::one(x.field());
    std::vector<Fq> ypows{ypow};
    for (int i = 1; i <= n; ++i) ypows.push_back(ypows.back() * y);
    Fq xp = Fq::one(x.field());
    for (int i = 0; i <= u.degree(); ++i) {
        r += embed(x.field(), u.coeffs()[i]) * xp * ypows[n - i];
        xp *= x;
    }
    return r;
}

// sum_i u_i (a t + b)^i (c t + d)^(n - i)
UPoly hom_compose(const UPoly& u, int n, const Projectivity& s) {
    Field f = s.field();
    UPoly num(f, std::vector<Fq>{s.at(0, 1), s.at(0, 0)}), den(f, std::vector<Fq>{s.at(1, 1), s.at(1, 0)});
    std::vector<UPoly> dp{UPoly::constant(Fq::one(f))};
    for (int i = 1; i <= n; ++i) dp.push_back(dp.back() * den);
    UPoly r(f), np = UPoly::constant(Fq::one(f));
    for (int i = 0; i <= u.degree(); ++i) {
        r += np * dp[n - i] * embed(f, u.coeffs()[i]);
        np *= num;
    }
    return r;
}

}  // namespace

RationalMap1D::RationalMap1D(UPoly num, UPoly den) {
    if (den.is_zero()) throw Error(ErrorCode::InvalidArgument, "rational map with zero denominator");
    if (num.field() && num.field() != den.field()) {
        Field f = common_field(num.field(), den.field());
        num = num.embed(f);
        den = den.embed(f);
    }
    if (!num.field()) num = UPoly(den.field());
    UPoly g = gcd(num, den);
    if (g.degree() > 0) {
        num = num / g;
        den = den / g;
    }
    Fq s = den.lead().inverse();
    num_ = num * s;
    den_ = den * s;
}

ProjPoint RationalMap1D::operator()(const ProjPoint& x0) const {
    Field f = common_field(field(), x0.field());
    ProjPoint x = x0.embed(f);
    const int n = degree();
    return ProjPoint({hom_eval(num_, n, x[0], x[1]), hom_eval(den_, n, x[0], x[1])});
}

bool RationalMap1D::invariant_under(const Projectivity& sigma0) const {
    Field f = common_field(field(), sigma0.field());
    Projectivity sigma = sigma0.embed(f);
    const int n = degree();
    UPoly ns = hom_compose(num_, n, sigma), ds = hom_compose(den_, n, sigma);
    return (ns * den_.embed(f) - num_.embed(f) * ds).is_zero();
}

std::string RationalMap1D::to_string(const std::string& var) const {
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

int Parametrization::degree() const {
    int d = 0;
    for (const auto& c : coords) d = std::max(d, c.degree());
    return d;
}

ProjPoint Parametrization::operator()(const ProjPoint& t0) const {
    Field f = common_field(field(), t0.field());
    ProjPoint t = t0.embed(f);
    const int n = degree();
    std::vector<Fq> v;
    for (const auto& c : coords) v.push_back(hom_eval(c, n, t[0], t[1]));
    return ProjPoint(std::move(v));
}

Parametrization Parametrization::embed(Field dst) const {
    return {{coords[0].embed(dst), coords[1].embed(dst), coords[2].embed(dst)}};
}

std::string to_string(PointClass c) {
    switch (c) {
        case PointClass::Inner: return "inner";
        case PointClass::Outer: return "outer";
        case PointClass::Invalid: return "invalid";
    }
    return "invalid";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::CertifiedGalois: return "certified_galois";
        case Verdict::CertifiedNotGalois: return "certified_not_galois";
        case Verdict::ProbablyGalois: return "probably_galois";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::Collineation: return "collineation";
        case Method::Deck: return "deck";
        case Method::SpaceLift: return "space_lift";
        case Method::MonteCarlo: return "monte_carlo";
        case Method::None: return "none";
    }
    return "none";
}

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::Auto: return "auto";
        case Strategy::Collineation: return "collineation";
        case Strategy::Deck: return "deck";
        case Strategy::MonteCarlo: return "monte_carlo";
    }
    return "auto";
}

Strategy parse_strategy(const std::string& s) {
    for (Strategy x : {Strategy::Auto, Strategy::Collineation, Strategy::Deck, Strategy::MonteCarlo})
        if (to_string(x) == s) return x;
    throw Error(ErrorCode::InvalidArgument, "unknown strategy '" + s + "'");
}

// ---------------------------------------------------------------------------

namespace {

// A projectivity whose column `col` is v and whose other columns are standard
// basis vectors; the identity when v is already e_col.
Projectivity frame_with_column(const ProjPoint& v, int col) {
    Field f = v.field();
    const Fq one = Fq::one(f), zero = Fq::zero(f);
    std::vector<Fq> ecol(3, zero);
    ecol[col] = one;
    if (v.coords() == ecol) return Projectivity::identity(f, 3);
    std::vector<int> others;
    for (int j = 0; j < 3; ++j)
        if (j != col) others.push_back(j);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == b) continue;
            std::vector<Fq> m(9, zero);
            for (int i = 0; i < 3; ++i) m[i * 3 + col] = v[i];
            m[a * 3 + others[0]] = one;
            m[b * 3 + others[1]] = one;
            try {
                return Projectivity(3, m);
            } catch (const Error&) {
            }
        }
    throw Error(ErrorCode::InvalidArgument, "cannot complete a frame");
}

Polynomial transform_form(const Polynomial& form, const Projectivity& m) {
    Field f = m.field();
    std::vector<Polynomial> im;
    for (int i = 0; i < 3; ++i) {
        Polynomial li(f, 3);
        for (int j = 0; j < 3; ++j) li += Polynomial::variable(f, 3, j) * m.at(i, j);
        im.push_back(li);
    }
    return form.embed(f).substitute(im);
}

}  // namespace

std::array<std::vector<Fq>, 2> ProjectionFiber::pencil_forms() const {
    Projectivity inv = to_center.inverse();
    const int r0 = point_class == PointClass::Inner ? 0 : 1;
    std::array<std::vector<Fq>, 2> out;
    for (int j = 0; j < 3; ++j) {
        out[0].push_back(inv.at(r0, j));
        out[1].push_back(inv.at(2, j));
    }
    return out;
}

ProjectionFiber fiber_polynomial(const PlaneCurve& c0, const ProjPoint& center0) {
    if (center0.dim() != 3) throw Error(ErrorCode::DimensionMismatch, "center must be a point of P^2");
    Field f = common_field(c0.field(), center0.field());
    PlaneCurve c = c0.embed(f);
    ProjectionFiber fib;
    fib.center = center0.embed(f);
    const Fq one = Fq::one(f), zero = Fq::zero(f);
    int col;
    if (c.contains(fib.center)) {
        if (c.is_singular_at(fib.center))
            throw Error(ErrorCode::CenterSingular, "center " + fib.center.to_string() + " is a singular point of the curve");
        fib.point_class = PointClass::Inner;
        fib.target = ProjPoint({zero, one, zero});
        col = 1;
    } else {
        fib.point_class = PointClass::Outer;
        fib.target = ProjPoint({one, zero, zero});
        col = 0;
    }
    fib.to_center = frame_with_column(fib.center, col);
    fib.transformed_form = transform_form(c.form(), fib.to_center);
    const Polynomial t = Polynomial::variable(f, 2, 0), s = Polynomial::variable(f, 2, 1), z = Polynomial::constant(one, 2);
    fib.fiber_poly = fib.point_class == PointClass::Inner ? fib.transformed_form.substitute({t, s, z})
                                                           : fib.transformed_form.substitute({s, t, z});
    fib.n = fib.fiber_poly.degree_in(1);
    const int expect = fib.point_class == PointClass::Inner ? c.degree() - 1 : c.degree();
    if (fib.n != expect) throw Error(ErrorCode::VerificationFailed, "fiber degree " + std::to_string(fib.n) + " != " + std::to_string(expect));
    return fib;
}

RationalMap1D projection_map(const ProjectionFiber& fib, const Parametrization& phi0) {
    Field f = common_field(fib.field(), phi0.field());
    Parametrization phi = phi0.embed(f);
    auto forms = fib.pencil_forms();
    std::array<UPoly, 2> l;
    for (int k = 0; k < 2; ++k) {
        l[k] = UPoly(f);
        for (int j = 0; j < 3; ++j) l[k] += phi.coords[j] * embed(f, forms[k][j]);
    }
    if (l[1].is_zero()) throw Error(ErrorCode::VerificationFailed, "parametrized curve lies on a line through the center");
    return RationalMap1D(l[0], l[1]);
}

// ---------------------------------------------------------------------------
// Monte Carlo screen

std::vector<unsigned> degree_pattern_by_root_counts(const UPoly& g) {
    const int n = g.degree();
    Field f = g.field();
    const UPoly s = UPoly::monomial(Fq::one(f), 1);
    std::vector<unsigned> count(n + 1, 0);  // number of irreducible factors of each degree
    UPoly frob = s;
    int covered = 0;
    for (int m = 1; m <= n && covered < n; ++m) {
        frob = powmod(frob, f->order(), g);
        int roots = gcd(g, frob - s).degree();
        for (int e = 1; e < m; ++e)
            if (m % e == 0) roots -= e * static_cast<int>(count[e]);
        count[m] = static_cast<unsigned>(roots / m);
        covered += static_cast<int>(count[m]) * m;
    }
    std::vector<unsigned> out;
    for (int m = 1; m <= n; ++m)
        for (unsigned i = 0; i < count[m]; ++i) out.push_back(static_cast<unsigned>(m));
    return out;
}

GaloisReport monte_carlo_galois(const ProjectionFiber& fib, int trials, std::uint64_t seed) {
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be positive");
    GaloisReport r;
    r.point = fib.center;
    r.point_class = fib.point_class;
    r.projection_degree = fib.n;
    r.method = Method::MonteCarlo;
    if (fib.n <= 1) {
        r.verdict = Verdict::ProbablyGalois;
        r.notes.push_back("projection of degree " + std::to_string(fib.n) + " is trivially Galois");
        return r;
    }
    Field base = fib.field();
    std::array<Polynomial, 3> lifted;
    std::map<unsigned, std::pair<Fq, std::vector<unsigned>>> reference;
    int usable = 0;
    for (int i = 0; i < trials; ++i) {
        const unsigned j = 1 + static_cast<unsigned>(i % 3);
        Field e = extension_field(base, j);
        if (lifted[j - 1].nvars() == 0) lifted[j - 1] = fib.fiber_poly.embed(e);
        std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(i)};
        std::mt19937_64 rng(sq);
        Fq t0 = Fq::random(e, rng);
        UPoly g = lifted[j - 1].specialize(0, t0).to_upoly(1);
        ++r.trials;
        if (g.degree() < fib.n || !is_squarefree(g)) {
            ++r.skipped;
            continue;
        }
        ++usable;
        std::vector<unsigned> pattern;
        for (const auto& fp : factor(g, seed + static_cast<std::uint64_t>(i))) pattern.push_back(fp.factor.degree());
        std::sort(pattern.begin(), pattern.end());
        if (pattern.front() != 1) continue;
        auto it = reference.find(j);
        if (it == reference.end()) {
            reference.emplace(j, std::make_pair(t0, pattern));
            continue;
        }
        if (it->second.second == pattern) continue;
        Witness w;
        const bool this_is_split = pattern.back() == 1;
        w.t0 = this_is_split ? it->second.first : t0;
        w.factor_degrees = this_is_split ? it->second.second : pattern;
        w.reference_t0 = this_is_split ? t0 : it->second.first;
        w.reference_degrees = this_is_split ? pattern : it->second.second;
        r.witness = w;
        r.verdict = Verdict::CertifiedNotGalois;
        return r;
    }
    if (usable == 0)
        throw Error(ErrorCode::AllSpecializationsRamified, "every sampled specialization was ramified or degenerate");
    r.verdict = Verdict::ProbablyGalois;
    return r;
}

// ---------------------------------------------------------------------------
// Central collineations

namespace {

std::int64_t binomial_mod(int n, int k, std::int64_t p) {
    std::vector<std::int64_t> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<std::int64_t> next(i + 1, 1);
        for (int j = 1; j < i; ++j) next[j] = (row[j - 1] + row[j]) % p;
        row = std::move(next);
    }
    return (k < 0 || k > n) ? 0 : row[k];
}

// sigma' = [[1,0,0],[beta,lambda,delta],[0,0,1]]
Projectivity normalized_collineation(const Fq& beta, const Fq& lambda, const Fq& delta) {
    Field f = beta.field();
    const Fq o = Fq::one(f), z = Fq::zero(f);
    return Projectivity(3, {o, z, z, beta, lambda, delta, z, z, o});
}

struct CollineationSearch {
    Polynomial g;                 // curve with the center at (0:1:0)
    std::vector<Polynomial> a;    // coefficients of Y^k
    int n = 0;                    // Y-degree of g
    Field f = nullptr;
    Field probe_field = nullptr;
    std::vector<std::vector<Fq>> probes;
    std::vector<Fq> probe_values;
    Polynomial g_probe;

    CollineationSearch(const Polynomial& form, std::uint64_t seed) : g(form), f(form.field()) {
        a = g.coefficients_in(1);
        n = g.degree_in(1);
        probe_field = f->order() >= 16 ? f : extension_field(f, 3);
        g_probe = g.embed(probe_field);
        std::mt19937_64 rng(seed);
        for (int i = 0; i < 4; ++i) {
            std::vector<Fq> v{Fq::random(probe_field, rng), Fq::random(probe_field, rng), Fq::random(probe_field, rng)};
            probe_values.push_back(g_probe.eval(v));
            probes.push_back(std::move(v));
        }
    }

    bool accepts(const Fq& beta, const Fq& lambda, const Fq& delta) const {
        const Fq c = lambda.pow(static_cast<u128>(n));
        const Fq b = embed(probe_field, beta), l = embed(probe_field, lambda), d = embed(probe_field, delta),
                 ce = embed(probe_field, c);
        for (std::size_t i = 0; i < probes.size(); ++i) {
            const auto& v = probes[i];
            std::vector<Fq> w{v[0], b * v[0] + l * v[1] + d * v[2], v[2]};
            if (g_probe.eval(w) != ce * probe_values[i]) return false;
        }
        return transform_form(g, normalized_collineation(beta, lambda, delta)) == g * c;
    }

    // Roots u of the first nontrivial coefficient equation along direction
    // (x0, z0), where u = beta x0 + delta z0. nullopt: no information;
    // empty: lambda is impossible.
    std::optional<std::vector<Fq>> direction_roots(const Fq& lambda, const Fq& x0, const Fq& z0) const {
        const std::int64_t p = f->p();
        const Fq zero = Fq::zero(f);
        std::vector<Fq> av;
        for (const auto& ak : a) av.push_back(ak.eval(std::vector<Fq>{x0, zero, z0}));
        av.resize(n + 1, zero);
        const Fq ln = lambda.pow(static_cast<u128>(n));
        for (int k = 1; k <= n; ++k) {
            const Fq lk = lambda.pow(static_cast<u128>(n - k));
            std::vector<Fq> c(k + 1, zero);
            for (int i = 0; i <= k; ++i) c[i] = av[n - k + i] * Fq(f, binomial_mod(n - k + i, i, p)) * lk;
            c[0] -= ln * av[n - k];
            UPoly e(f, c);
            if (e.is_zero()) continue;
            if (e.degree() == 0) return std::vector<Fq>{};
            return roots_in_field(e);
        }
        return std::nullopt;
    }
};

}  // namespace

FiniteProjectivityGroup central_collineation_group(const PlaneCurve& c0, const ProjPoint& center0, CollineationMode mode,
                                                   std::uint64_t brute_q_cap, std::size_t closure_cap) {
    Field f = common_field(c0.field(), center0.field());
    PlaneCurve c = c0.embed(f);
    ProjPoint center = center0.embed(f);
    if (c.contains(center) && c.is_singular_at(center))
        throw Error(ErrorCode::CenterSingular, "center " + center.to_string() + " is a singular point of the curve");
    const Projectivity m = frame_with_column(center, 1);
    const Projectivity minv = m.inverse();
    CollineationSearch search(transform_form(c.form(), m), 0xc011);
    const int d = c.degree();

    std::vector<Projectivity> found;
    auto brute = [&]() {
        if (f->order() > brute_q_cap)
            throw Error(ErrorCode::BruteCapExceeded, "field of order " + to_string(f->order()) + " exceeds brute cap");
        for (u128 li = 1; li < f->order(); ++li)
            for (u128 bi = 0; bi < f->order(); ++bi)
                for (u128 di = 0; di < f->order(); ++di) {
                    Fq l = Fq::from_index(f, li), b = Fq::from_index(f, bi), dd = Fq::from_index(f, di);
                    if (search.accepts(b, l, dd)) found.push_back(normalized_collineation(b, l, dd));
                }
    };

    if (mode == CollineationMode::Brute) {
        brute();
    } else {
        std::uint64_t l = 1;
        for (int i = 2; i <= d; ++i) l = std::lcm(l, static_cast<std::uint64_t>(i));
        const std::uint64_t order_cap = static_cast<std::uint64_t>(std::gcd(static_cast<u128>(l), f->order() - 1));
        // directions (x0, z0): (1,0), (0,1), (1,1), (1,w) for further elements w
        std::vector<std::pair<Fq, Fq>> dirs{{Fq::one(f), Fq::zero(f)}, {Fq::zero(f), Fq::one(f)}};
        for (u128 i = 1; i < f->order() && dirs.size() < 8; ++i) dirs.emplace_back(Fq::one(f), Fq::from_index(f, i));
        bool degenerate = false;
        for (const Fq& lambda : roots_of_unity(f, order_cap)) {
            std::vector<std::pair<std::size_t, std::vector<Fq>>> info;
            bool impossible = false;
            for (std::size_t di = 0; di < dirs.size() && !impossible; ++di) {
                // need two independent directions
                if (info.size() == 1) {
                    const auto& d0 = dirs[info[0].first];
                    if ((d0.first * dirs[di].second - d0.second * dirs[di].first).is_zero()) continue;
                }
                auto roots = search.direction_roots(lambda, dirs[di].first, dirs[di].second);
                if (!roots) continue;
                if (roots->empty()) impossible = true;
                else info.emplace_back(di, std::move(*roots));
                if (info.size() == 2) break;
            }
            if (impossible) continue;
            if (info.size() < 2) {
                degenerate = true;
                break;
            }
            const auto& [x1, z1] = dirs[info[0].first];
            const auto& [x2, z2] = dirs[info[1].first];
            const Fq det_inv = (x1 * z2 - z1 * x2).inverse();
            for (const Fq& u1 : info[0].second)
                for (const Fq& u2 : info[1].second) {
                    // beta x1 + delta z1 = u1, beta x2 + delta z2 = u2
                    Fq beta = (u1 * z2 - u2 * z1) * det_inv;
                    Fq delta = (x1 * u2 - x2 * u1) * det_inv;
                    if (search.accepts(beta, lambda, delta)) found.push_back(normalized_collineation(beta, lambda, delta));
                }
        }
        if (degenerate) {
            found.clear();
            if (f->order() > brute_q_cap)
                throw Error(ErrorCode::ExactModeDegenerate, "coefficient equations do not determine the collineations");
            brute();
        }
    }
    std::vector<Projectivity> conj;
    for (const auto& s : found) conj.push_back(m * s * minv);
    if (conj.empty()) throw Error(ErrorCode::VerificationFailed, "identity missing from collineation search");
    FiniteProjectivityGroup g = generate_group(conj, closure_cap);
    if (g.order() != conj.size())
        throw Error(ErrorCode::VerificationFailed, "collineation solutions do not form a group");
    return descend(g, common_field(c0.field(), center0.field()));
}

// ---------------------------------------------------------------------------
// Deck transformations of a rational function

namespace {

// t -> ((t - a1)(a3 - a2)) / ((t - a2)(a3 - a1)), sending a1, a2, a3 to 0, oo, 1.
Projectivity to_standard_frame(const Fq& a1, const Fq& a2, const Fq& a3) {
    return Projectivity::mobius(a3 - a2, -a1 * (a3 - a2), a3 - a1, -a2 * (a3 - a1));
}

}  // namespace

FiniteProjectivityGroup deck_group(const RationalMap1D& h, unsigned ext_cap) {
    const int n = h.degree();
    Field f = h.field();
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "deck group of a constant map");
    if (n == 1) return FiniteProjectivityGroup::trivial(f, 2);

    // fibers h = v of full degree that are squarefree, smallest splitting field first
    struct Fiber {
        unsigned abs_degree;
        UPoly poly;
    };
    std::vector<Fiber> fibers;
    int attempts = 0;
    for (unsigned j = 1; j <= 3 && attempts < 32; ++j) {
        Field e = extension_field(f, j);
        for (u128 i = 0; i < e->order() && attempts < 32; ++i) {
            Fq v = Fq::from_index(e, i);
            if (j > 1 && v.pow(f->order()) == v) continue;  // already tried in a subfield
            ++attempts;
            UPoly g = h.num().embed(e) - h.den().embed(e) * v;
            if (g.degree() != n || !is_squarefree(g)) continue;
            fibers.push_back({e->k() * splitting_degree(g), g});
        }
        if (fibers.size() >= 2) break;
    }
    if (fibers.size() < 2) throw Error(ErrorCode::DegenerateFibers, "no two squarefree fibers of full degree found");
    std::stable_sort(fibers.begin(), fibers.end(), [](const Fiber& a, const Fiber& b) { return a.abs_degree < b.abs_degree; });
    const unsigned k = std::lcm(fibers[0].abs_degree, fibers[1].abs_degree);
    if (k / f->k() > ext_cap)
        throw Error(ErrorCode::ExtensionCapExceeded, "fibers split only in an extension of degree " + std::to_string(k / f->k()));
    Field e = make_field(f->p(), k);
    const auto r1 = roots_in_field(fibers[0].poly.embed(e));
    const auto r2 = roots_in_field(fibers[1].poly.embed(e));
    if (static_cast<int>(r1.size()) != n || static_cast<int>(r2.size()) != n)
        throw Error(ErrorCode::VerificationFailed, "fiber did not split in its splitting field");

    // a deck map permutes every fiber; checked pointwise before the exact identity
    auto sorted1 = r1, sorted2 = r2;
    std::sort(sorted1.begin(), sorted1.end());
    std::sort(sorted2.begin(), sorted2.end());
    auto permutes = [](const Projectivity& s, const std::vector<Fq>& fiber) {
        const auto& m = s.entries();
        for (const auto& x : fiber) {
            Fq den = m[2] * x + m[3];
            if (den.is_zero() || !std::binary_search(fiber.begin(), fiber.end(), (m[0] * x + m[1]) * den.inverse())) return false;
        }
        return true;
    };
    const Projectivity ta = to_standard_frame(r1[0], r1[1], r2[0]);
    std::vector<Projectivity> found;
    for (const auto& b1 : r1)
        for (const auto& b2 : r1) {
            if (b1 == b2) continue;
            for (const auto& b3 : r2) {
                Projectivity s = to_standard_frame(b1, b2, b3).inverse() * ta;
                if (permutes(s, sorted1) && permutes(s, sorted2) && h.invariant_under(s)) found.push_back(s);
            }
        }
    FiniteProjectivityGroup g = generate_group(found, static_cast<std::size_t>(n) * n + 1);
    if (g.order() != found.size()) throw Error(ErrorCode::VerificationFailed, "deck maps do not form a group");
    for (const auto& s : g.elements())
        if (!h.invariant_under(s)) throw Error(ErrorCode::VerificationFailed, "closure produced a non-deck map");
    return descend(g, f);
}

// ---------------------------------------------------------------------------

bool parametrizes(const PlaneCurve& c, const Parametrization& phi0) {
    Field f = common_field(c.field(), phi0.field());
    Parametrization phi = phi0.embed(f);
    const int n = phi.degree();
    // homogeneous images in (t, u) so that the point at infinity is covered too
    std::vector<Polynomial> im;
    for (const auto& u : phi.coords) {
        Polynomial x(f, 2);
        for (int i = 0; i <= u.degree(); ++i)
            x += Polynomial::monomial(u.coeffs()[i], 2, {static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(n - i), 0});
        im.push_back(x);
    }
    return c.form().embed(f).substitute(im).is_zero();
}

GaloisReport is_galois_point(const PlaneCurve& c, const ProjPoint& p, const GaloisConfig& cfg) {
    ProjectionFiber fib = fiber_polynomial(c, p);
    GaloisReport r;
    r.point = fib.center;
    r.point_class = fib.point_class;
    r.projection_degree = fib.n;
    r.assume_irreducible = c.assume_irreducible();
    const std::size_t n = static_cast<std::size_t>(fib.n);

    auto certify = [&](FiniteProjectivityGroup g, Method m) {
        r.verdict = Verdict::CertifiedGalois;
        r.method = m;
        r.descriptor = identify_group(g);
        r.group = std::move(g);
    };

    if (cfg.strategy == Strategy::Auto || cfg.strategy == Strategy::Collineation) {
        try {
            FiniteProjectivityGroup g = central_collineation_group(c, p, CollineationMode::Exact, cfg.brute_q_cap, cfg.closure_cap);
            r.collineation_order = g.order();
            if (g.order() > n) throw Error(ErrorCode::VerificationFailed, "collineation group larger than the projection degree");
            if (g.order() == n) {
                certify(std::move(g), Method::Collineation);
                return r;
            }
            r.notes.push_back("collineation group of order " + std::to_string(g.order()) + " < " + std::to_string(n));
        } catch (const Error& e) {
            if (cfg.strategy == Strategy::Collineation) throw;
            r.notes.push_back(std::string("collineation search failed: ") + e.what());
        }
    }

    if (cfg.strategy == Strategy::Deck && !cfg.parametrization)
        throw Error(ErrorCode::InvalidArgument, "deck strategy needs a parametrization");
    if ((cfg.strategy == Strategy::Auto || cfg.strategy == Strategy::Deck) && cfg.parametrization) {
        if (!parametrizes(c, *cfg.parametrization))
            throw Error(ErrorCode::InvalidArgument, "parametrization does not lie on the curve");
        RationalMap1D h = projection_map(fib, *cfg.parametrization);
        if (h.degree() != fib.n)
            throw Error(ErrorCode::DegreeMismatch, "projection of the parametrization has degree " + std::to_string(h.degree()) +
                                                       ", expected " + std::to_string(fib.n));
        FiniteProjectivityGroup g = deck_group(h, cfg.ext_cap);
        r.deck_order = g.order();
        if (g.order() == n) {
            certify(std::move(g), Method::Deck);
            return r;
        }
        r.notes.push_back("deck group of order " + std::to_string(g.order()) + " < " + std::to_string(n));
    }

    if (cfg.strategy == Strategy::Collineation || cfg.strategy == Strategy::Deck) {
        r.verdict = Verdict::Inconclusive;
        return r;
    }
    GaloisReport mc = monte_carlo_galois(fib, cfg.trials, cfg.seed);
    r.verdict = mc.verdict;
    r.method = Method::MonteCarlo;
    r.witness = mc.witness;
    r.trials = mc.trials;
    r.skipped = mc.skipped;
    r.notes.insert(r.notes.end(), mc.notes.begin(), mc.notes.end());
    return r;
}

// ---------------------------------------------------------------------------
// lifted certificates

namespace {

struct LiftContext {
    Field f;
    Polynomial curve;  // affine equation
    Polynomial form;   // homogeneous equation
    Polynomial wn, wd, wn_h, wd_h;
    std::array<Polynomial, 4> psi;  // (x, y, 1, w) times w_den

    LiftContext(const PlaneCurve& c, const SpaceLift& lift, Field field) : f(field) {
        curve = c.affine().embed(f);
        form = c.form().embed(f);
        wn = lift.w_num.embed(f);
        wd = lift.w_den.embed(f);
        wn_h = wn.homogenize();
        wd_h = wd.homogenize();
        psi = {Polynomial::variable(f, 2, 0) * wd, Polynomial::variable(f, 2, 1) * wd, wd, wn};
    }

    bool vanishes(const Polynomial& g) const { return g.is_zero() || try_exact_div(g, curve).has_value(); }

    // Images of x, y, 1, w under m, over the common denominator w_den.
    std::array<Polynomial, 4> image(const Projectivity& m) const {
        std::array<Polynomial, 4> n;
        for (int r = 0; r < 4; ++r) {
            n[r] = Polynomial(f, 2);
            for (int j = 0; j < 4; ++j)
                if (!m.at(r, j).is_zero()) n[r] += psi[j] * embed(f, m.at(r, j));
        }
        return n;
    }

    bool moves_curve(const Projectivity& m) const {
        auto n = image(m);
        return !(vanishes(n[0] - Polynomial::variable(f, 2, 0) * n[2]) && vanishes(n[1] - Polynomial::variable(f, 2, 1) * n[2]));
    }
};

}  // namespace

bool acts_faithfully(const PlaneCurve& c, const SpaceLift& lift, const FiniteProjectivityGroup& g) {
    LiftContext L(c, lift, common_field(c.field(), g.field()));
    for (std::size_t i = 1; i < g.order(); ++i)
        if (!L.moves_curve(g.elements()[i])) return false;
    return true;
}

GaloisReport lifted_galois_point(const PlaneCurve& c, const ProjPoint& center, const SpaceLift& lift,
                                 const std::vector<Projectivity>& gens, std::size_t closure_cap) {
    if (gens.empty() || gens.front().n() != 4) throw Error(ErrorCode::DimensionMismatch, "lifted certificates need 4x4 generators");
    ProjectionFiber fib = fiber_polynomial(c, center);
    FiniteProjectivityGroup g = generate_group(gens, closure_cap);
    LiftContext L(c, lift, common_field(fib.field(), g.field()));
    if (L.vanishes(L.wd)) throw Error(ErrorCode::VerificationFailed, "lift: w_den vanishes on the curve");
    const Polynomial one = Polynomial::constant(Fq::one(L.f), 2);
    auto forms = fib.pencil_forms();
    auto linear = [&](const std::vector<Fq>& l, const Polynomial& a, const Polynomial& b, const Polynomial& z) {
        return a * embed(L.f, l[0]) + b * embed(L.f, l[1]) + z * embed(L.f, l[2]);
    };
    const Polynomial x = Polynomial::variable(L.f, 2, 0), y = Polynomial::variable(L.f, 2, 1);
    const unsigned a = static_cast<unsigned>(L.wd.total_degree()), b = static_cast<unsigned>(L.wn.total_degree());
    for (const auto& m : g.generators()) {
        auto n = L.image(m);
        const std::vector<Polynomial> xyz{n[0], n[1], n[2]};
        auto fail = [&](const std::string& why) {
            throw Error(ErrorCode::VerificationFailed, "lift: " + m.to_string() + " " + why);
        };
        if (L.vanishes(n[2])) fail("sends C to the plane at infinity");
        if (!L.vanishes(L.form.substitute(xyz))) fail("does not preserve C");
        const Polynomial wd_img = L.wd_h.substitute(xyz);
        if (L.vanishes(wd_img)) fail("meets the poles of w");
        if (!L.vanishes(n[3] * wd_img * n[2].pow(b) - L.wn_h.substitute(xyz) * n[2].pow(a + 1))) fail("does not commute with the lift");
        if (!L.vanishes(linear(forms[0], n[0], n[1], n[2]) * linear(forms[1], x, y, one) -
                        linear(forms[1], n[0], n[1], n[2]) * linear(forms[0], x, y, one)))
            fail("moves a line through the center");
    }
    for (std::size_t i = 1; i < g.order(); ++i)
        if (!L.moves_curve(g.elements()[i]))
            throw Error(ErrorCode::VerificationFailed, "lift: " + g.elements()[i].to_string() + " acts trivially on C");

    GaloisReport r;
    r.point = fib.center;
    r.point_class = fib.point_class;
    r.projection_degree = fib.n;
    r.method = Method::SpaceLift;
    r.assume_irreducible = c.assume_irreducible();
    if (g.order() == static_cast<std::size_t>(fib.n)) {
        r.verdict = Verdict::CertifiedGalois;
        r.descriptor = identify_group(g);
    } else {
        r.verdict = Verdict::Inconclusive;
        r.notes.push_back("lifted group of order " + std::to_string(g.order()) + " is a proper subgroup of the Galois group");
    }
    r.group = std::move(g);
    return r;
}

}  // namespace galpoint
