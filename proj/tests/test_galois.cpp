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

#include <gtest/gtest.h>

#include "galpoint/galois.hpp"

using namespace galpoint;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kTS{"t", "s"};

ProjPoint P3(Field f, std::int64_t a, std::int64_t b, std::int64_t c) { return ProjPoint({Fq(f, a), Fq(f, b), Fq(f, c)}); }

PlaneCurve cubic13() { return curve_from_affine(parse_polynomial("y^2*x+(x+1)^2*(x-8)", make_field(13, 1), kXY)); }

Parametrization cubic13_param() {
    Field f = make_field(13, 1);
    return {{UPoly(f, {8}), UPoly(f, {0, 9, 0, 1}), UPoly(f, {1, 0, 1})}};
}

}  // namespace

TEST(FiberPolynomial, CubicOuterCenter) {
    Field f = make_field(13, 1);
    auto fib = fiber_polynomial(cubic13(), P3(f, 1, 0, 0));
    EXPECT_EQ(fib.point_class, PointClass::Outer);
    EXPECT_EQ(fib.n, 3);
    EXPECT_EQ(fib.fiber_poly, parse_polynomial("s^3-6*s^2+(t^2-15)*s-8", f, kTS));
}

TEST(FiberPolynomial, CubicInnerCenter) {
    Field f = make_field(13, 1);
    auto fib = fiber_polynomial(cubic13(), P3(f, 0, 1, 0));
    EXPECT_EQ(fib.point_class, PointClass::Inner);
    EXPECT_EQ(fib.n, 2);
    EXPECT_EQ(fib.fiber_poly.degree_in(1), 2);
}

TEST(FiberPolynomial, ConicAndErrors) {
    Field f = make_field(2, 1);
    auto conic = curve_from_affine(parse_polynomial("x-y^2", f, kXY));
    auto fib = fiber_polynomial(conic, P3(f, 0, 0, 1));
    EXPECT_EQ(fib.n, 1);
    try {
        fiber_polynomial(cubic13(), P3(make_field(13, 1), -1, 0, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CenterSingular);
    }
}

TEST(FiberPolynomial, CenterMovedByFrame) {
    // arbitrary outer center: the fiber over t = X'/Z' must vanish on curve points
    Field f = make_field(7, 1);
    auto c = curve_from_affine(parse_polynomial("y^2*x+x^3+x+1", f, kXY));
    ProjPoint q = P3(f, 2, 3, 1);
    ASSERT_FALSE(c.contains(q));
    auto fib = fiber_polynomial(c, q);
    EXPECT_EQ(fib.n, 3);
    EXPECT_EQ(apply(fib.to_center, fib.target), q);
}

TEST(MonteCarlo, FermatLikeInnerIsProbablyGalois) {
    Field f = make_field(11, 1);
    auto c = curve_from_affine(parse_polynomial("x^4+y^5+1", f, kXY));
    auto r = monte_carlo_galois(fiber_polynomial(c, P3(f, 1, 0, 0)), 48, 0);
    EXPECT_EQ(r.verdict, Verdict::ProbablyGalois);
    EXPECT_GE(r.trials, 32);
    EXPECT_FALSE(r.witness);
}

TEST(MonteCarlo, GenericCubicHasWitness) {
    Field f = make_field(7, 1);
    auto c = curve_from_affine(parse_polynomial("y^2*x+x^3+x+1", f, kXY));
    auto fib = fiber_polynomial(c, P3(f, 2, 3, 1));
    auto r = monte_carlo_galois(fib, 64, 0);
    ASSERT_EQ(r.verdict, Verdict::CertifiedNotGalois);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->factor_degrees, (std::vector<unsigned>{1, 2}));
    // independent re-check of both specializations
    for (auto [t0, pat] : {std::pair{r.witness->t0, r.witness->factor_degrees},
                           std::pair{r.witness->reference_t0, r.witness->reference_degrees}}) {
        UPoly g = fib.fiber_poly.embed(t0.field()).specialize(0, t0).to_upoly(1);
        ASSERT_TRUE(is_squarefree(g));
        EXPECT_EQ(degree_pattern_by_root_counts(g), pat);
    }
}

TEST(MonteCarlo, DegreeOneFiber) {
    Field f = make_field(2, 1);
    auto conic = curve_from_affine(parse_polynomial("x-y^2", f, kXY));
    EXPECT_EQ(monte_carlo_galois(fiber_polynomial(conic, P3(f, 0, 0, 1)), 4, 0).verdict, Verdict::ProbablyGalois);
}

TEST(MonteCarlo, TwistedFrobeniusIsNotAWitness) {
    // x^4 = c over F_11 lacks i, so single fibers look like {1,1,2}; the cover is still Galois.
    Field f = make_field(11, 1);
    auto c = curve_from_affine(parse_polynomial("x^4+y^5+1", f, kXY));
    auto r = monte_carlo_galois(fiber_polynomial(c, P3(f, 1, 0, 0)), 256, 7);
    EXPECT_EQ(r.verdict, Verdict::ProbablyGalois);
}

TEST(RootCountPattern, MatchesFactorization) {
    Field f = make_field(7, 1);
    UPoly g = UPoly(f, {1, 0, 1}) * UPoly(f, {-1, 1}) * UPoly(f, {2, 0, 0, 1}).monic();
    ASSERT_TRUE(is_squarefree(g));
    std::vector<unsigned> pat;
    for (const auto& fp : factor(g)) pat.push_back(fp.factor.degree());
    std::sort(pat.begin(), pat.end());
    EXPECT_EQ(degree_pattern_by_root_counts(g), pat);
}

TEST(Collineation, CubicInnerOrderTwo) {
    Field f = make_field(13, 1);
    auto g = central_collineation_group(cubic13(), P3(f, 0, 1, 0));
    EXPECT_EQ(g.order(), 2u);
    auto gb = central_collineation_group(cubic13(), P3(f, 0, 1, 0), CollineationMode::Brute, 13);
    EXPECT_EQ(gb.order(), 2u);
    for (const auto& s : g.elements()) EXPECT_EQ(apply(s, P3(f, 0, 1, 0)), P3(f, 0, 1, 0));
}

TEST(Collineation, FermatLikeOuterCyclicFive) {
    Field f = make_field(11, 1);
    auto c = curve_from_affine(parse_polynomial("x^4+y^5+1", f, kXY));
    auto g = central_collineation_group(c, P3(f, 0, 1, 0));
    EXPECT_EQ(g.order(), 5u);
    EXPECT_EQ(identify_group(g).tag, GroupTag::Cyclic);
    // inner point (1:0:0) needs i, which F_11 lacks
    EXPECT_EQ(central_collineation_group(c, P3(f, 1, 0, 0)).order(), 2u);
    Field f121 = make_field(11, 2);
    EXPECT_EQ(central_collineation_group(c.embed(f121), P3(f121, 1, 0, 0)).order(), 4u);
}

TEST(Collineation, PerturbedCurveTrivial) {
    Field f = make_field(7, 1);
    auto c = curve_from_affine(parse_polynomial("x^4+y^5+1+2*x*y+3*x^2*y^3", f, kXY));
    for (ProjPoint q : {P3(f, 0, 1, 0), P3(f, 1, 2, 3)}) {
        if (c.contains(q) && c.is_singular_at(q)) continue;
        EXPECT_EQ(central_collineation_group(c, q, CollineationMode::Brute, 64).order(), 1u);
        EXPECT_EQ(central_collineation_group(c, q).order(), 1u);
    }
}

TEST(Collineation, BruteCap) {
    Field f = make_field(13, 1);
    try {
        central_collineation_group(cubic13(), P3(f, 0, 1, 0), CollineationMode::Brute, 7);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BruteCapExceeded);
    }
}

TEST(DeckGroup, Monomial) {
    Field f = make_field(13, 1);
    auto g = deck_group(RationalMap1D(UPoly(f, {0, 0, 0, 0, 1}), UPoly(f, {1})));
    EXPECT_EQ(g.order(), 4u);
    EXPECT_EQ(identify_group(g).tag, GroupTag::Cyclic);
    Field f7 = make_field(7, 1);
    // t^4 over F_7: fibers split over F_49, which has i
    EXPECT_EQ(deck_group(RationalMap1D(UPoly(f7, {0, 0, 0, 0, 1}), UPoly(f7, {1}))).order(), 4u);
}

TEST(DeckGroup, TPlusInverse) {
    Field f = make_field(13, 1);
    auto g = deck_group(RationalMap1D(UPoly(f, {1, 0, 1}), UPoly(f, {0, 1})));
    EXPECT_EQ(g.order(), 2u);
    Projectivity inv = Projectivity::mobius(Fq(f, 0), Fq(f, 1), Fq(f, 1), Fq(f, 0));
    EXPECT_TRUE(g.contains(inv));
}

TEST(DeckGroup, NonGaloisCubic) {
    Field f = make_field(7, 1);
    // t^3 + t is not Galois: only the identity commutes with it
    EXPECT_EQ(deck_group(RationalMap1D(UPoly(f, {0, 1, 0, 1}), UPoly(f, {1}))).order(), 1u);
}

TEST(IsGaloisPoint, CubicInnerByCollineation) {
    Field f = make_field(13, 1);
    auto r = is_galois_point(cubic13(), P3(f, 0, 1, 0));
    EXPECT_EQ(r.point_class, PointClass::Inner);
    EXPECT_EQ(r.verdict, Verdict::CertifiedGalois);
    EXPECT_EQ(r.method, Method::Collineation);
    ASSERT_TRUE(r.group);
    EXPECT_EQ(r.group->order(), 2u);
}

TEST(IsGaloisPoint, CubicOuterByDeck) {
    Field f = make_field(13, 1);
    GaloisConfig cfg;
    cfg.parametrization = cubic13_param();
    ASSERT_TRUE(parametrizes(cubic13(), *cfg.parametrization));
    auto r = is_galois_point(cubic13(), P3(f, 1, 0, 0), cfg);
    EXPECT_EQ(r.point_class, PointClass::Outer);
    EXPECT_EQ(r.verdict, Verdict::CertifiedGalois);
    EXPECT_EQ(r.method, Method::Deck);
    ASSERT_TRUE(r.descriptor);
    EXPECT_EQ(r.descriptor->order, 3u);
    EXPECT_EQ(r.descriptor->tag, GroupTag::Cyclic);
}

TEST(IsGaloisPoint, SmoothQuarticGenericPoint) {
    Field f = make_field(13, 1);
    auto c = curve_from_affine(parse_polynomial("x^3+y^4+1", f, kXY));
    auto r = is_galois_point(c, P3(f, 1, 1, 1));
    EXPECT_EQ(r.point_class, PointClass::Outer);
    EXPECT_EQ(r.verdict, Verdict::CertifiedNotGalois);
    ASSERT_TRUE(r.witness);
}

TEST(IsGaloisPoint, RestrictedStrategies) {
    Field f = make_field(13, 1);
    GaloisConfig cfg;
    cfg.strategy = Strategy::Collineation;
    EXPECT_EQ(is_galois_point(cubic13(), P3(f, 1, 0, 0), cfg).verdict, Verdict::Inconclusive);
    cfg.strategy = Strategy::Deck;
    EXPECT_THROW(is_galois_point(cubic13(), P3(f, 1, 0, 0), cfg), Error);
    cfg.strategy = Strategy::MonteCarlo;
    EXPECT_EQ(is_galois_point(cubic13(), P3(f, 1, 0, 0), cfg).verdict, Verdict::ProbablyGalois);
}
