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

#include "galpoint/curve.hpp"

using namespace galpoint;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"X", "Y", "Z"};

ProjPoint P3(Field f, std::int64_t a, std::int64_t b, std::int64_t c) { return ProjPoint({Fq(f, a), Fq(f, b), Fq(f, c)}); }

ProjLine L3(Field f, std::int64_t a, std::int64_t b, std::int64_t c) { return ProjLine({Fq(f, a), Fq(f, b), Fq(f, c)}); }

}  // namespace

TEST(CurveFromAffine, Examples) {
    Field f13 = make_field(13, 1);
    auto c = curve_from_affine(parse_polynomial("y^2*x+(x+1)^2*(x-8)", f13, kXY));
    EXPECT_EQ(c.degree(), 3);
    EXPECT_EQ(c.form(), parse_polynomial("Y^2*X+(X+Z)^2*(X-8*Z)", f13, kXYZ));
    auto q = curve_from_affine(parse_polynomial("x^3+y^4+1", f13, kXY));
    EXPECT_EQ(q.form(), parse_polynomial("X^3*Z+Y^4+Z^4", f13, kXYZ));
    Field f2 = make_field(2, 1);
    auto conic = curve_from_affine(parse_polynomial("x-y^2", f2, kXY));
    EXPECT_EQ(conic.form(), parse_polynomial("X*Z-Y^2", f2, kXYZ));
}

TEST(CurveFromAffine, RejectsRepeatedFactors) {
    Field f7 = make_field(7, 1);
    for (const char* s : {"(x-y)^2", "(x^2+y+1)^2*(x-1)", "x^2"}) {
        try {
            curve_from_affine(parse_polynomial(s, f7, kXY));
            FAIL() << s;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::NotSquarefree) << s;
        }
    }
    Field f2 = make_field(2, 1);
    EXPECT_THROW(curve_from_affine(parse_polynomial("x^2+y^2", f2, kXY)), Error);
    EXPECT_NO_THROW(curve_from_affine(parse_polynomial("x*y+1", f2, kXY)));
    EXPECT_THROW(curve_from_affine(Polynomial(f7, 2)), Error);
}

TEST(SingularPoints, CuspAtOrigin) {
    Field f13 = make_field(13, 1);
    auto c = curve_from_affine(parse_polynomial("x^3+y^4", f13, kXY));
    auto s = singular_points(c);
    // (1:0:0) lies on X^3 Z + Y^4 but dF/dZ = X^3 does not vanish there
    ASSERT_EQ(s.points.size(), 1u);
    EXPECT_TRUE(s.contains(P3(f13, 0, 0, 1)));
    EXPECT_FALSE(s.contains(P3(f13, 1, 0, 0)));
    EXPECT_TRUE(c.contains(P3(f13, 1, 0, 0)));
    EXPECT_FALSE(c.is_singular_at(P3(f13, 1, 0, 0)));
    for (const auto& [p, m] : s.points) {
        EXPECT_GE(m, 2u);
        for (int i = 0; i < 3; ++i) EXPECT_TRUE(c.embed(s.ext).partial(i).eval(p.coords()).is_zero());
    }
}

TEST(SingularPoints, SmoothFermatLike) {
    Field f13 = make_field(13, 1);
    EXPECT_TRUE(singular_points(curve_from_affine(parse_polynomial("x^3+y^4+1", f13, kXY))).empty());
}

TEST(SingularPoints, CubicNodeOnLineP) {
    Field f13 = make_field(13, 1);
    auto c = curve_from_affine(parse_polynomial("y^2*x+(x+1)^2*(x-8)", f13, kXY));
    auto s = singular_points(c);
    ASSERT_EQ(s.points.size(), 1u);
    EXPECT_EQ(s.points[0].first, P3(f13, -1, 0, 1));
    EXPECT_EQ(s.points[0].second, 2u);
}

TEST(SingularPoints, QuarticTriplePoint) {
    Field f13 = make_field(13, 1);
    auto c = curve_from_affine(parse_polynomial("y^3*x+(x+1)^3*(x+9)", f13, kXY));
    auto s = singular_points(c);
    ASSERT_EQ(s.points.size(), 1u);
    EXPECT_EQ(s.points[0].first, P3(f13, -1, 0, 1));
    EXPECT_EQ(s.points[0].second, 3u);
}

TEST(SingularPoints, NeedsExtension) {
    // two conjugate nodes: (y^2 - x^2 (x - 3)) has a node at 0; shift to x^2+1=0 pairs
    Field f7 = make_field(7, 1);
    auto c = curve_from_affine(parse_polynomial("(x^2+1)^2-y^2*(x+2)", f7, kXY));
    auto s = singular_points(c);
    EXPECT_EQ(s.ext, make_field(7, 2));
    int affine = 0;
    for (const auto& [p, m] : s.points)
        if (!p[2].is_zero()) ++affine;
    EXPECT_EQ(affine, 2);
}

TEST(TangentLine, Examples) {
    Field f2 = make_field(2, 1);
    auto conic = curve_from_affine(parse_polynomial("x-y^2", f2, kXY));
    EXPECT_EQ(tangent_line(conic, P3(f2, 0, 0, 1)), L3(f2, 1, 0, 0));
    Field f13 = make_field(13, 1);
    auto cubic = curve_from_affine(parse_polynomial("y^2*x+(x+1)^2*(x-8)", f13, kXY));
    EXPECT_EQ(tangent_line(cubic, P3(f13, 0, 1, 0)), L3(f13, 1, 0, 0));
    auto quartic = curve_from_affine(parse_polynomial("y^3*x+(x+1)^3*(x+9)", f13, kXY));
    EXPECT_EQ(tangent_line(quartic, P3(f13, 0, 1, 0)), L3(f13, 1, 0, 0));
    try {
        tangent_line(cubic, P3(f13, 1, 1, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PointNotOnCurve);
    }
    try {
        tangent_line(cubic, P3(f13, -1, 0, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PointSingular);
    }
}

TEST(LineIntersection, Examples) {
    Field f13 = make_field(13, 1);
    auto c = curve_from_affine(parse_polynomial("x^3+y^4+1", f13, kXY));
    auto d = line_intersection_divisor(c, ProjLine::through(P3(f13, 0, 1, 0), P3(f13, 1, 0, 0)));
    ASSERT_EQ(d.support.size(), 1u);
    EXPECT_EQ(d.support[0].second, 4u);
    // Z = 0 cuts Y^4: the contact point is (1:0:0)
    EXPECT_EQ(d.support[0].first, P3(f13, 1, 0, 0));

    Field f2 = make_field(2, 1);
    auto conic = curve_from_affine(parse_polynomial("x-y^2", f2, kXY));
    auto t = line_intersection_divisor(conic, L3(f2, 1, 0, 0));
    ASSERT_EQ(t.support.size(), 1u);
    EXPECT_EQ(t.support[0].second, 2u);
    EXPECT_EQ(t.support[0].first, P3(f2, 0, 0, 1));

    Field f4 = make_field(2, 2);
    auto nf = curve_from_affine(parse_polynomial("x-y^4", f4, kXY));
    auto pq = line_intersection_divisor(nf, ProjLine::through(P3(f4, 0, 0, 1), P3(f4, 1, 1, 0)));
    EXPECT_EQ(pq.support.size(), 4u);
    EXPECT_EQ(pq.degree(), 4u);
}

TEST(LineIntersection, ComponentLine) {
    Field f7 = make_field(7, 1);
    auto c = curve_from_affine(parse_polynomial("x*(x^2+y^2-1)", f7, kXY));
    try {
        line_intersection_divisor(c, L3(f7, 1, 0, 0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::LineIsComponent);
    }
}

TEST(Curve, MultiplicityAt) {
    Field f13 = make_field(13, 1);
    auto c = curve_from_affine(parse_polynomial("x^3+y^4", f13, kXY));
    EXPECT_EQ(c.multiplicity_at(P3(f13, 0, 0, 1)), 3u);
    EXPECT_EQ(c.multiplicity_at(P3(f13, 1, 0, 0)), 1u);
    EXPECT_EQ(c.multiplicity_at(P3(f13, 1, 1, 1)), 0u);
}
