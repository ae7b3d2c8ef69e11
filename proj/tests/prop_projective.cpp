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

// Randomized properties of projectivity groups.

#include <gtest/gtest.h>

#include <random>

#include "galpoint/projective.hpp"

#include "property_cases.hpp"

using namespace galpoint;

namespace {

constexpr int kCases = 500;

Projectivity random_projectivity(Field f, int n, std::mt19937_64& rng) {
    for (;;) {
        std::vector<Fq> m;
        for (int i = 0; i < n * n; ++i) m.push_back(Fq::random(f, rng));
        try {
            return Projectivity(n, std::move(m));
        } catch (const Error&) {
        }
    }
}

// A random small subgroup: one or two random generators, retried until the
// closure is small.
std::optional<FiniteProjectivityGroup> random_small_group(Field f, int n, std::mt19937_64& rng) {
    std::vector<Projectivity> gens{random_projectivity(f, n, rng)};
    if (rng() % 2) gens.push_back(random_projectivity(f, n, rng));
    try {
        return generate_group(gens, 64);
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace

TEST(ProjectiveProperty, ClosureAndInverses) {
    CaseCount cases;
    std::mt19937_64 rng(11);
    Field fields[] = {make_field(5, 1), make_field(7, 1), make_field(2, 2), make_field(3, 1)};
    int done = 0;
    while (done < kCases) {
        Field f = fields[rng() % 4];
        auto g = random_small_group(f, 2 + rng() % 2, rng);
        if (!g) continue;
        ++done;
        ++cases;
        for (const auto& a : g->elements()) {
            ASSERT_TRUE(g->contains(a.inverse()));
            ASSERT_EQ(g->order() % a.order(), 0u);
            for (const auto& b : g->elements()) ASSERT_TRUE(g->contains(a * b));
        }
    }
}

TEST(ProjectiveProperty, OrbitDegreeIsGroupOrder) {
    CaseCount cases;
    std::mt19937_64 rng(12);
    Field f = make_field(7, 1);
    int done = 0;
    while (done < kCases) {
        const int n = 2 + rng() % 2;
        auto g = random_small_group(f, n, rng);
        if (!g) continue;
        std::vector<Fq> c;
        for (int i = 0; i < n; ++i) c.push_back(Fq::random(f, rng));
        if (std::all_of(c.begin(), c.end(), [](const Fq& x) { return x.is_zero(); })) continue;
        ++done;
        ++cases;
        ASSERT_EQ(orbit(*g, ProjPoint(c)).degree(), g->order());
    }
}

TEST(ProjectiveProperty, DirectIffCommutingWithTrivialIntersection) {
    CaseCount cases;
    std::mt19937_64 rng(13);
    Field f = make_field(5, 1);
    int done = 0, direct = 0;
    while (done < kCases) {
        auto g1 = random_small_group(f, 2, rng);
        std::optional<FiniteProjectivityGroup> g2;
        if (g1 && rng() % 2) {
            // commuting partner: a power of a generator's centralizer element
            Projectivity c = g1->generators()[0];
            g2 = generate_group({c.order() > 1 ? c * c : c});
        } else {
            g2 = random_small_group(f, 2, rng);
        }
        if (!g1 || !g2) continue;
        ProductReport r;
        try {
            r = product_structure(*g1, *g2, 200);
        } catch (const Error&) {
            continue;
        }
        ++done;
        ++cases;
        bool commute = true;
        for (const auto& a : g1->elements())
            for (const auto& b : g2->elements()) commute = commute && a * b == b * a;
        const bool expect = commute && r.intersection_order == 1;
        ASSERT_EQ(r.classification == ProductClass::Direct, expect);
        direct += expect;
    }
    EXPECT_GT(direct, 0);
}

TEST(ProjectiveProperty, TagsStableUnderConjugation) {
    CaseCount cases;
    std::mt19937_64 rng(14);
    Field fields[] = {make_field(5, 1), make_field(7, 1), make_field(2, 2), make_field(13, 1)};
    int done = 0;
    while (done < kCases) {
        Field f = fields[rng() % 4];
        auto g = random_small_group(f, 2, rng);
        if (!g) continue;
        ++done;
        ++cases;
        Projectivity h = random_projectivity(f, 2, rng);
        std::vector<Projectivity> cg;
        for (const auto& x : g->generators()) cg.push_back(conjugate(x, h));
        auto d1 = identify_group(*g), d2 = identify_group(generate_group(cg, 64));
        ASSERT_EQ(d1.tag, d2.tag);
        ASSERT_EQ(d1.order_histogram, d2.order_histogram);
    }
}

TEST(ProjectiveProperty, ApplyIsAnAction) {
    CaseCount cases;
    std::mt19937_64 rng(15);
    Field f = make_field(3, 2);
    for (int i = 0; i < kCases; ++i) {
        ++cases;
        const int n = 2 + i % 2;
        Projectivity g = random_projectivity(f, n, rng), h = random_projectivity(f, n, rng);
        std::vector<Fq> c;
        for (int k = 0; k < n; ++k) c.push_back(Fq::random(f, rng));
        if (std::all_of(c.begin(), c.end(), [](const Fq& x) { return x.is_zero(); })) c[0] = Fq::one(f);
        ProjPoint x(c);
        ASSERT_EQ(apply(g * h, x), apply(g, apply(h, x)));
        ASSERT_EQ(apply(g.inverse(), apply(g, x)), x);
    }
}
