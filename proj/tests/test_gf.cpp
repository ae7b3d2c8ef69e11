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

#include "galpoint/gf.hpp"

using namespace galpoint;

TEST(Field, PrimeFieldConstruction) {
    Field f = make_field(7, 1);
    EXPECT_EQ(f->p(), 7u);
    EXPECT_EQ(f->k(), 1u);
    EXPECT_EQ(f->spec(), "7^1");
    EXPECT_EQ(make_field(7, 1), f);
}

TEST(Field, F4ModulusIsXSquaredPlusXPlusOne) {
    Field f = make_field(2, 2);
    EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
    for (std::uint32_t r : {0u, 1u}) EXPECT_NE((r * r + r + 1) % 2, 0u);
}

TEST(Field, F169UnitsHaveOrderDividing168) {
    Field f = make_field(13, 2);
    for (u128 i = 1; i < f->order(); ++i) EXPECT_TRUE(Fq::from_index(f, i).pow(168).is_one());
}

TEST(Field, Errors) {
    EXPECT_THROW(make_field(15, 1), Error);
    try {
        make_field(9, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonPrimeCharacteristic);
    }
    EXPECT_THROW(make_field(7, 0), Error);
    EXPECT_THROW(parse_field_spec("13^"), Error);
    EXPECT_EQ(parse_field_spec("13^2"), make_field(13, 2));
    EXPECT_EQ(parse_field_spec("7"), make_field(7, 1));
}

TEST(Field, MixedFieldArithmeticThrows) {
    Fq a(make_field(7, 1), 3), b(make_field(5, 1), 3);
    EXPECT_THROW(a + b, Error);
}

TEST(Field, InverseAndNegation) {
    Field f = make_field(3, 3);
    for (u128 i = 1; i < f->order(); ++i) {
        Fq a = Fq::from_index(f, i);
        EXPECT_TRUE((a * a.inverse()).is_one());
        EXPECT_TRUE((a + (-a)).is_zero());
    }
    EXPECT_THROW(Fq::zero(f).inverse(), Error);
}

TEST(Field, IndexRoundTrip) {
    Field f = make_field(5, 2);
    for (u128 i = 0; i < f->order(); ++i) EXPECT_EQ(Fq::from_index(f, i).index(), i);
}

TEST(Embed, PrimeConstantsMapToConstants) {
    Field f5 = make_field(5, 1), f25 = make_field(5, 2);
    EXPECT_EQ(embed(f25, Fq(f5, 3)), Fq(f25, 3));
    Field f7 = make_field(7, 1), f49 = make_field(7, 2);
    EXPECT_TRUE(embed(f49, Fq::one(f7)).is_one());
}

TEST(Embed, GeneratorOfF4HasOrder3InF16) {
    Field f4 = make_field(2, 2), f16 = make_field(2, 4);
    Fq g = embed(f16, Fq::generator(f4));
    EXPECT_EQ(multiplicative_order(g), 3u);
    EXPECT_EQ(embed(f16, Fq::generator(f4)), g);
}

TEST(Embed, IncompatibleDegrees) {
    try {
        embed(make_field(2, 3), Fq::generator(make_field(2, 2)));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IncompatibleFields);
    }
    EXPECT_THROW(embed(make_field(3, 2), Fq::one(make_field(2, 2))), Error);
}

TEST(RootsOfUnity, Examples) {
    Field f7 = make_field(7, 1);
    auto z = nth_root_of_unity(f7, 3);
    ASSERT_TRUE(z);
    EXPECT_TRUE(*z == Fq(f7, 2) || *z == Fq(f7, 4));
    EXPECT_FALSE(nth_root_of_unity(f7, 5));
    Field f13 = make_field(13, 1);
    auto g = nth_root_of_unity(f13, 12);
    ASSERT_TRUE(g);
    EXPECT_EQ(multiplicative_order(*g), 12u);
    try {
        nth_root_of_unity(f7, 14);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PDividesN);
    }
    EXPECT_EQ(roots_of_unity(f13, 4).size(), 4u);
    EXPECT_EQ(roots_of_unity(f7, 4).size(), 2u);
}

TEST(Field, PthRoot) {
    Field f = make_field(3, 2);
    for (u128 i = 0; i < f->order(); ++i) {
        Fq a = Fq::from_index(f, i);
        EXPECT_EQ(a.pth_root().frobenius(), a);
    }
}

TEST(Field, ToString) {
    Field f = make_field(3, 2);
    EXPECT_EQ(Fq(make_field(7, 1), -1).to_string(), "6");
    EXPECT_EQ(Fq::generator(f).to_string(), "a");
    EXPECT_EQ((Fq::generator(f) * Fq(f, 2) + Fq::one(f)).to_string(), "2*a+1");
}

TEST(Field, CommonField) {
    EXPECT_EQ(common_field(make_field(2, 4), make_field(2, 6)), make_field(2, 12));
    EXPECT_EQ(extension_field(make_field(13, 2), 2), make_field(13, 4));
}
