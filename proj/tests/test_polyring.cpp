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

#include "galpoint/polynomial.hpp"
#include "galpoint/upoly.hpp"

using namespace galpoint;

namespace {
const std::vector<std::string> kXYT{"x", "y", "t"};
}

TEST(Resultant, LinearFactors) {
    Field f = make_field(13, 1);
    Polynomial a = parse_polynomial("t-5", f, kXYT), b = parse_polynomial("t-2", f, kXYT);
    Polynomial r = resultant(a, b, 2);
    ASSERT_TRUE(r.is_constant());
    EXPECT_EQ(r.coeff({0, 0, 0}), Fq(f, 2 - 5));
}

TEST(Resultant, Substitution) {
    Field f = make_field(13, 1);
    Polynomial r = resultant(parse_polynomial("t^2-x", f, kXYT), parse_polynomial("t-y", f, kXYT), 2);
    EXPECT_EQ(r, parse_polynomial("y^2-x", f, kXYT));
}

TEST(Resultant, NumericUnivariate) {
    Field f = make_field(7, 1);
    Polynomial r = resultant(parse_polynomial("t^3-2", f, {"t"}), parse_polynomial("t-3", f, {"t"}), 0);
    EXPECT_EQ(r.coeff({0, 0, 0}), Fq(f, 4));
    EXPECT_EQ(resultant(UPoly(f, {-2, 0, 0, 1}), UPoly(f, {-3, 1})), Fq(f, 4));
}

TEST(Resultant, ZeroInput) {
    Field f = make_field(7, 1);
    try {
        resultant(Polynomial(f, 1), parse_polynomial("t", f, {"t"}), 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroInput);
    }
}

TEST(Resultant, MatchesSylvesterOnMixedDegrees) {
    // Res_y(y^2 x + (x+1)^2 (x-8), 2 y x) = 4 x^2 (x+1)^2 (x-8) up to sign
    Field f = make_field(13, 1);
    Polynomial c = parse_polynomial("y^2*x+(x+1)^2*(x-8)", f, kXYT);
    Polynomial r = resultant(c, c.derivative(1), 1);
    Polynomial expect = parse_polynomial("4*x^2*(x+1)^2*(x-8)", f, kXYT);
    EXPECT_TRUE(r == expect || r == -expect) << r.to_string();
}

TEST(Factor, Examples) {
    Field f7 = make_field(7, 1);
    auto fs = factor(UPoly(f7, {-1, 0, 0, 1}));
    ASSERT_EQ(fs.size(), 3u);
    EXPECT_EQ(roots_in_field(UPoly(f7, {-1, 0, 0, 1})), (std::vector<Fq>{Fq(f7, 1), Fq(f7, 2), Fq(f7, 4)}));
    EXPECT_TRUE(is_irreducible(UPoly(f7, {1, 0, 1})));
    Field f13 = make_field(13, 1);
    auto cube = factor(UPoly(f13, {-2, 1}).pow(3));
    ASSERT_EQ(cube.size(), 1u);
    EXPECT_EQ(cube[0].factor, UPoly(f13, {-2, 1}));
    EXPECT_EQ(cube[0].exponent, 3u);
}

TEST(SplittingRoots, AlreadySplit) {
    Field f = make_field(13, 1);
    auto rm = splitting_roots(UPoly(f, {-2, 1}).pow(3) * UPoly(f, {1, 1}), 12);
    EXPECT_EQ(rm.ext, f);
    ASSERT_EQ(rm.roots.size(), 2u);
    EXPECT_EQ(rm.roots[0], std::make_pair(Fq(f, 2), 3u));
    EXPECT_EQ(rm.roots[1], std::make_pair(Fq(f, -1), 1u));
}

TEST(SplittingRoots, QuadraticExtension) {
    Field f = make_field(5, 1);
    auto rm = splitting_roots(UPoly(f, {-27, 0, 1}), 12);
    EXPECT_EQ(rm.ext, make_field(5, 2));
    ASSERT_EQ(rm.roots.size(), 2u);
    for (auto& [r, m] : rm.roots) EXPECT_EQ(r * r, Fq(rm.ext, 2));
}

TEST(SplittingRoots, CubeRootsOfMinus64) {
    Field f = make_field(13, 1);
    auto rm = splitting_roots(UPoly(f, {64, 0, 0, 1}), 12);
    EXPECT_EQ(rm.total_multiplicity(), 3u);
    bool has_minus4 = false;
    for (auto& [r, m] : rm.roots) {
        EXPECT_EQ(r.pow(3), Fq(rm.ext, -64));
        has_minus4 |= r == embed(rm.ext, Fq(f, -4));
    }
    EXPECT_TRUE(has_minus4);
}

TEST(SplittingRoots, CapExceeded) {
    Field f = make_field(2, 1);
    UPoly irr(f, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1});  // degree 13
    ASSERT_TRUE(is_irreducible(irr));
    try {
        splitting_roots(irr, 12);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ExtensionCapExceeded);
    }
}

TEST(SquarefreePart, Examples) {
    Field f = make_field(13, 1);
    EXPECT_EQ(squarefree_part(UPoly(f, {-1, 1}).pow(2) * UPoly(f, {2, 1})), UPoly(f, {-1, 1}) * UPoly(f, {2, 1}));
    Field f7 = make_field(7, 1);
    // x^7 - 3 = (x - 3)^7 over F_7
    UPoly u = UPoly::monomial(Fq::one(f7), 7) - UPoly(f7, {3});
    EXPECT_EQ(squarefree_part(u), UPoly(f7, {-3, 1}));
    UPoly sf(f, {1, 2, 0, 1});
    if (is_squarefree(sf)) EXPECT_EQ(squarefree_part(sf), sf.monic());
}

TEST(SquarefreePart, InseparableOverExtension) {
    Field f = make_field(3, 2);
    Fq a = Fq::generator(f);
    UPoly u = UPoly(f, std::vector<Fq>{-a, Fq::zero(f), Fq::zero(f), Fq::one(f)});
    UPoly s = squarefree_part(u);
    ASSERT_EQ(s.degree(), 1);
    EXPECT_EQ((-s.coeff(0)).pow(3), a);
}

TEST(PolynomialText, CanonicalForm) {
    Field f = make_field(13, 1);
    Polynomial p = parse_polynomial("x + 2*y^2*x + x^3 - 1", f, {"x", "y"});
    EXPECT_EQ(p.to_string(), "x^3+2*x*y^2+x+12");
    EXPECT_EQ(parse_polynomial(p.to_string(), f, {"x", "y"}), p);
    EXPECT_EQ(Polynomial(f, 2).to_string(), "0");
}

TEST(PolynomialText, ExtensionCoefficients) {
    Field f = make_field(2, 4);
    Polynomial p = parse_polynomial("(a+1)*x^2 + a*y", f, {"x", "y"});
    EXPECT_EQ(p.to_string(), "(a+1)*x^2+a*y");
    EXPECT_EQ(parse_polynomial(p.to_string(), f, {"x", "y"}), p);
    EXPECT_EQ(parse_element("a^4", f), Fq::generator(f).pow(4));
}

TEST(PolynomialText, ParseErrors) {
    Field f = make_field(13, 1);
    for (const char* bad : {"x+", "x^", "(x", "q", "x**2", "x y"}) {
        try {
            parse_polynomial(bad, f, {"x", "y"});
            FAIL() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
        }
    }
    EXPECT_THROW(parse_polynomial("a", f, {"x"}), Error);
}

TEST(Polynomial, HomogenizeAndEval) {
    Field f = make_field(13, 1);
    Polynomial p = parse_polynomial("y^2*x+(x+1)^2*(x-8)", f, {"x", "y"});
    Polynomial h = p.homogenize();
    EXPECT_TRUE(h.is_homogeneous());
    EXPECT_EQ(h.total_degree(), 3);
    std::vector<Fq> pt{Fq(f, 3), Fq(f, 5), Fq(f, 1)};
    std::vector<Fq> apt{Fq(f, 3), Fq(f, 5)};
    EXPECT_EQ(h.eval(pt), p.eval(apt));
}

TEST(Polynomial, ExactDivision) {
    Field f = make_field(7, 1);
    Polynomial a = parse_polynomial("x^2-y^2", f, {"x", "y"});
    EXPECT_EQ(exact_div(a, parse_polynomial("x-y", f, {"x", "y"})), parse_polynomial("x+y", f, {"x", "y"}));
    EXPECT_FALSE(try_exact_div(a, parse_polynomial("x-2*y", f, {"x", "y"})));
}

TEST(Polynomial, EvalInExtension) {
    Field f = make_field(5, 1), f25 = make_field(5, 2);
    Polynomial p = parse_polynomial("x^2-2", f, {"x"});
    auto rm = splitting_roots(p.to_upoly(0), 4);
    EXPECT_EQ(rm.ext, f25);
    std::vector<Fq> pt{rm.roots[0].first};
    EXPECT_TRUE(p.eval(pt).is_zero());
}
