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

#include "galpoint/error.hpp"
#include "galpoint/families.hpp"

using namespace galpoint;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvalidArgument;
}

std::vector<Fq> subfield(Field big, Field small) {
    std::vector<Fq> out;
    for (u128 i = 0; i < small->order(); ++i) out.push_back(embed(big, Fq::from_index(small, i)));
    return out;
}

const NamedCheck* find(const FamilyVerdict& v, const std::string& name) {
    for (const auto& c : v.checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string failures(const FamilyVerdict& v) {
    std::string s;
    for (const auto& c : v.checks)
        if (!c.passed) s += c.name + " (" + c.detail + ") ";
    return s;
}

}  // namespace

TEST(Additive, PrimeSubfieldOfF4) {
    Field f4 = make_field(2, 2);
    AdditivePolynomial g = additive_poly_from_subgroup(subfield(f4, make_field(2, 1)), 1);
    EXPECT_EQ(g.poly(), UPoly(f4, {0, 1, 1}));
    EXPECT_TRUE(g.is_additive());
}

TEST(Additive, F4InsideF16) {
    Field f16 = make_field(2, 4);
    AdditivePolynomial g = additive_poly_from_subgroup(subfield(f16, make_field(2, 2)), 3);
    EXPECT_EQ(g.poly(), UPoly(f16, {0, 1, 0, 0, 1}));
    EXPECT_EQ(g.e, 2u);
    EXPECT_TRUE(g.is_additive());
    EXPECT_TRUE(g.is_scaling_stable());
}

TEST(Additive, ScalingUnstable) {
    // S = {0, 1, a, a+1} with a outside F_4 is a subgroup but not zeta_3-stable
    Field f16 = make_field(2, 4);
    Fq a = Fq::generator(f16);
    ASSERT_NE(a.pow(4), a);
    std::vector<Fq> s{Fq::zero(f16), Fq::one(f16), a, a + Fq::one(f16)};
    EXPECT_EQ(code_of([&] { additive_poly_from_subgroup(s, 3); }), ErrorCode::ScalingUnstable);
    EXPECT_NO_THROW(additive_poly_from_subgroup(s, 1));
}

TEST(Additive, NotSubgroup) {
    Field f16 = make_field(2, 4);
    Fq a = Fq::generator(f16);
    std::vector<Fq> s{Fq::zero(f16), Fq::one(f16), a, a * a};
    EXPECT_EQ(code_of([&] { additive_poly_from_subgroup(s, 1); }), ErrorCode::NotSubgroup);
    EXPECT_EQ(code_of([&] { additive_poly_from_subgroup({Fq::one(f16), a}, 1); }), ErrorCode::NotSubgroup);
}

TEST(Branch, CubicOverF13) {
    Field f = make_field(13, 1);
    BranchCertificate b = branch_certificate(3, f);
    EXPECT_EQ(b.eliminant, UPoly(f, {2, -3, 0, 1}));
    EXPECT_EQ(b.c, Fq(f, -2));
    EXPECT_EQ(b.a, Fq(f, -8));
    EXPECT_EQ(b.beta_power, Fq(f, 27));
    EXPECT_EQ(b.field, f);
    EXPECT_EQ(b.beta * b.beta, Fq(f, 27));
    for (const auto& [name, ok] : b.relations) EXPECT_TRUE(ok) << name;
    EXPECT_TRUE(b.identity_holds);
    EXPECT_EQ(b.rhs, parse_polynomial("y^2*x-27*x+(x-2)^3", f, {"x", "y"}));
}

TEST(Branch, QuarticOverF13) {
    Field f = make_field(13, 1);
    BranchCertificate b = branch_certificate(4, f);
    EXPECT_EQ(b.eliminant, UPoly(f, {-3, 8, -6, 0, 1}));
    EXPECT_EQ(b.d0, Fq(f, -3));
    EXPECT_EQ(b.a, Fq(f, 9));
    EXPECT_EQ(b.c, Fq(f, 6));
    EXPECT_EQ(b.beta_power, Fq(f, -64));
    for (const auto& [name, ok] : b.relations) EXPECT_TRUE(ok) << name;
    EXPECT_TRUE(b.identity_holds);
    EXPECT_EQ(b.lhs, parse_polynomial("y^3*x+(x+1)^3*(x+9)", f, {"x", "y"}));
    EXPECT_EQ(b.rhs, parse_polynomial("y^3*x+64*x+(x^2+6*x-3)^2", f, {"x", "y"}));
}

TEST(Branch, CubicOverF7NeedsF49) {
    Field f = make_field(7, 1);
    BranchCertificate b = branch_certificate(3, f);
    EXPECT_EQ(b.beta_power, Fq(f, 6));
    EXPECT_EQ(b.field->spec(), "7^2");
    EXPECT_EQ(b.beta * b.beta, Fq(b.field, 27));
    EXPECT_TRUE(b.identity_holds);
}

TEST(Branch, DegenerateCharacteristics) {
    EXPECT_EQ(code_of([] { branch_certificate(3, make_field(3, 1)); }), ErrorCode::DegenerateOnly);
    EXPECT_EQ(code_of([] { branch_certificate(4, make_field(2, 1)); }), ErrorCode::DegenerateOnly);
}

TEST(BuildFamily, Thm2TameExtendsField) {
    FamilySpec s;
    s.tag = FamilyTag::Thm2Tame;
    s.field = "11";
    s.d = 5;
    FamilyInstance fi = build_family(s);
    EXPECT_EQ(fi.field->spec(), "11^2");
    EXPECT_EQ(fi.curve.affine(), parse_polynomial("x^4+y^5+1", fi.field, {"x", "y"}).monic());
    s.field = "13";
    s.d = 6;
    EXPECT_EQ(build_family(s).field->spec(), "13^4");
}

TEST(BuildFamily, SpecViolations) {
    FamilySpec s;
    s.tag = FamilyTag::Thm2Tame;
    s.field = "5";
    s.d = 5;
    EXPECT_EQ(code_of([&] { build_family(s); }), ErrorCode::InvalidArgument);
    s.field = "13";
    s.d = 4;
    s.c = 2;
    EXPECT_EQ(code_of([&] { build_family(s); }), ErrorCode::InvalidArgument);
    FamilySpec w;
    w.tag = FamilyTag::Thm3Cubic;
    w.field = "3";
    EXPECT_EQ(code_of([&] { build_family(w); }), ErrorCode::InvalidArgument);
    FamilySpec t;
    t.tag = FamilyTag::Thm2Tame;
    t.field = "13";
    t.d = 12;
    EXPECT_EQ(code_of([&] { build_family(t, 2); }), ErrorCode::FieldTooSmall);
}

TEST(VerifyFamily, Thm2TameD4) {
    FamilySpec s;
    s.tag = FamilyTag::Thm2Tame;
    s.field = "13";
    s.d = 4;
    for (int c : {0, 1}) {
        s.c = c;
        FamilyInstance fi = build_family(s);
        FamilyVerdict v = verify_family(fi.curve, fi.expected);
        EXPECT_TRUE(v.passed()) << failures(v);
        EXPECT_EQ(v.inner.group->order(), 3u);
        EXPECT_EQ(v.outer.group->order(), 4u);
        EXPECT_EQ(v.joint->classification, ProductClass::Direct);
        EXPECT_TRUE(v.lemma_line.is_dp);
    }
}

TEST(VerifyFamily, Thm3Cubic) {
    FamilySpec s;
    s.tag = FamilyTag::Thm3Cubic;
    s.field = "13";
    FamilyInstance fi = build_family(s);
    FamilyVerdict v = verify_family(fi.curve, fi.expected);
    EXPECT_TRUE(v.passed()) << failures(v);
    EXPECT_EQ(v.joint_descriptor->tag, GroupTag::S3);
    ASSERT_TRUE(v.axis);
    EXPECT_EQ(*v.axis, ProjLine({Fq(fi.field, 0), Fq(fi.field, 1), Fq(fi.field, 0)}));
}

TEST(VerifyFamily, Thm3Quartic) {
    FamilySpec s;
    s.tag = FamilyTag::Thm3Quartic;
    s.field = "13";
    FamilyInstance fi = build_family(s);
    FamilyVerdict v = verify_family(fi.curve, fi.expected);
    EXPECT_TRUE(v.passed()) << failures(v);
    EXPECT_EQ(v.joint->joint.order(), 12u);
    ASSERT_NE(find(v, "lp_singular_multiplicity"), nullptr);
}

TEST(VerifyFamily, Prop4AndNormalForm) {
    FamilySpec s;
    s.tag = FamilyTag::Prop4;
    s.field = "2^2";
    s.p = 2;
    s.e = 2;
    FamilyInstance fi = build_family(s);
    FamilyVerdict v = verify_family(fi.curve, fi.expected);
    EXPECT_TRUE(v.passed()) << failures(v);
    EXPECT_EQ(v.lemma_line.support_size, 4u);
    FamilySpec n;
    n.tag = FamilyTag::Prop4Normal;
    n.field = "2^2";
    n.q = 4;
    FamilyInstance fn = build_family(n);
    FamilyVerdict vn = verify_family(fn.curve, fn.expected);
    EXPECT_TRUE(vn.passed()) << failures(vn);
}

TEST(VerifyFamily, BrokenExpectationIsReported) {
    FamilySpec s;
    s.tag = FamilyTag::Thm3Cubic;
    s.field = "13";
    FamilyInstance fi = build_family(s);
    fi.expected.gq_order = 5;
    FamilyVerdict v = verify_family(fi.curve, fi.expected);
    EXPECT_FALSE(v.passed());
    ASSERT_NE(find(v, "outer_order"), nullptr);
    EXPECT_FALSE(find(v, "outer_order")->passed);
}

TEST(VerifyFamily, Thm2WildOverF2To20) {
    FamilySpec s;
    s.tag = FamilyTag::Thm2Wild;
    s.field = "2^4";
    s.p = 2;
    s.e = 2;
    s.m = 3;
    s.alphas = {"1", "0", "1"};
    FamilyInstance fi = build_family(s);
    EXPECT_EQ(fi.field->spec(), "2^20");
    FamilyVerdict v = verify_family(fi.curve, fi.expected);
    EXPECT_TRUE(v.passed()) << failures(v);
    EXPECT_EQ(v.outer.group->order(), 12u);
    EXPECT_EQ(v.joint->joint.order(), 132u);
}

TEST(VerifyFamily, GkThroughSpaceLift) {
    FamilySpec s;
    s.tag = FamilyTag::Gk;
    s.field = "2^6";
    s.q = 2;
    FamilyInstance fi = build_family(s);
    EXPECT_EQ(fi.curve.affine(), parse_polynomial("x^8+x-(x^2+x)^3-y^9", fi.field, {"x", "y"}).monic());
    FamilyVerdict v = verify_family(fi.curve, fi.expected);
    EXPECT_TRUE(v.passed()) << failures(v);
    EXPECT_EQ(v.inner.method, Method::SpaceLift);
    EXPECT_EQ(v.inner.group->order(), 8u);
    EXPECT_EQ(v.outer.group->order(), 9u);
    ASSERT_TRUE(v.joint);
    EXPECT_EQ(v.joint->joint.order(), 72u);
    EXPECT_TRUE(v.joint->g1_normal);
    EXPECT_FALSE(v.joint->g2_normal);
}

TEST(LiftedCertificate, RejectsMapsThatLeaveTheCurve) {
    FamilySpec s;
    s.tag = FamilyTag::Gk;
    s.field = "2^6";
    s.q = 2;
    FamilyInstance fi = build_family(s);
    const auto& x = fi.expected;
    // w -> w + 1 without the matching shift of x
    Field f = fi.field;
    const Fq o = Fq::one(f), z = Fq::zero(f);
    Projectivity bad(4, {o, z, z, z, z, o, z, z, z, z, o, z, z, z, o, o});
    EXPECT_EQ(code_of([&] { lifted_galois_point(fi.curve, x.p, *x.lift, {bad}); }), ErrorCode::VerificationFailed);
    // G_Q elements preserve C but move the lines through P
    EXPECT_EQ(code_of([&] { lifted_galois_point(fi.curve, x.p, *x.lift, x.lift_gq); }), ErrorCode::VerificationFailed);
    // a proper subgroup certifies nothing
    GaloisReport r = lifted_galois_point(fi.curve, x.p, *x.lift, {x.lift_gp.front()});
    EXPECT_EQ(r.verdict, Verdict::Inconclusive);
    EXPECT_EQ(r.group->order(), 4u);
}
