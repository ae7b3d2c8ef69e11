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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galpoint/curve.hpp"
#include "galpoint/galois.hpp"
#include "galpoint/projective.hpp"

namespace galpoint {

enum class FamilyTag { Thm2Tame, Thm2Wild, Thm3Cubic, Thm3Quartic, Prop4, Prop4Normal, Gk };
std::string to_string(FamilyTag t);
FamilyTag parse_family_tag(const std::string& s);

struct FamilySpec {
    FamilyTag tag = FamilyTag::Thm2Tame;
    /// Requested field "p^k"; extended when needed roots of unity are missing.
    std::string field;
    int d = 0;             // thm2_tame
    int c = 1;             // thm2_tame, thm2_wild: constant term
    std::uint64_t p = 0;   // thm2_wild, prop4
    unsigned e = 0;        // thm2_wild, prop4
    std::uint64_t m = 1;   // thm2_wild
    std::vector<std::string> alphas;  // thm2_wild: alpha_0 .. alpha_e
    std::uint64_t q = 0;   // prop4_normal, gk
};

/// g(y) = sum_i alpha_i y^(p^i).
struct AdditivePolynomial {
    std::uint64_t p = 0;
    unsigned e = 0;
    std::uint64_t m = 1;
    std::vector<Fq> alpha;  // alpha_0 .. alpha_e

    Field field() const { return alpha.front().field(); }
    UPoly poly() const;
    /// g(y + z) = g(y) + g(z) as a bivariate identity.
    bool is_additive() const;
    /// g(zeta y) = zeta g(y) for a primitive m-th root of unity zeta.
    bool is_scaling_stable() const;
};

/// g(y) = prod_{a in S} (y - a) in additive form. Throws NotSubgroup, or
/// ScalingUnstable naming the zeta_m that moves S.
AdditivePolynomial additive_poly_from_subgroup(const std::vector<Fq>& s, std::uint64_t m);

/// What a family is expected to satisfy; verify_family re-derives each item.
struct FamilyExpectation {
    ProjPoint p, q;
    std::size_t gp_order = 0, gq_order = 0;
    std::optional<GroupTag> gp_tag, gq_tag, joint_tag;
    std::optional<ProductClass> joint_class;
    bool noncommuting_pair = false;
    /// Line PQ pulls back to d P.
    bool pq_is_dp = false;
    /// Line PQ meets C in this many distinct points.
    std::optional<std::size_t> pq_distinct;
    /// Smooth points of C on the axis of G_P.
    std::optional<std::size_t> lp_smooth_points;
    /// A singular point of this multiplicity on the axis of G_P.
    std::optional<unsigned> lp_singular_multiplicity;
    std::optional<bool> smooth;
    std::optional<ProjPoint> singular_point;
    std::optional<Parametrization> parametrization;
    std::optional<AdditivePolynomial> additive;
    /// Automorphisms that are linear only on a lift of C to P^3: generators
    /// of G_P and G_Q as 4x4 matrices acting on (x : y : 1 : w).
    std::optional<SpaceLift> lift;
    std::vector<Projectivity> lift_gp, lift_gq;
};

struct FamilyInstance {
    FamilySpec spec;
    Field field = nullptr;
    PlaneCurve curve;
    FamilyExpectation expected;
};

/// Throws InvalidArgument on spec violations, FieldTooSmall when the needed
/// roots of unity lie beyond ext_cap.
FamilyInstance build_family(const FamilySpec& spec, unsigned ext_cap = 12);

struct NamedCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct LemmaLine {
    std::size_t support_size = 0;
    bool is_1_or_d = false;
    bool is_dp = false;
    PointDivisor divisor;
};

struct FamilyVerdict {
    PlaneCurve curve;
    GaloisReport inner, outer;
    std::optional<ProductReport> joint;
    std::optional<GroupDescriptor> joint_descriptor;
    LemmaLine lemma_line;
    std::optional<ProjLine> axis;  // l_P
    std::vector<NamedCheck> checks;

    bool passed() const;
};

/// Certifies P and Q (deck groups when a parametrization is known, central
/// collineations otherwise) and evaluates every expectation as a named check.
FamilyVerdict verify_family(const PlaneCurve& c, const FamilyExpectation& expected, const GaloisConfig& cfg = {});

struct BranchCertificate {
    int d = 0;
    Field field = nullptr;  // holds beta
    /// Eliminant in the last unknown (c for d = 3, d0 for d = 4), monic.
    UPoly eliminant;
    Fq a, c, d0;  // d0 unused for d = 3
    Fq beta_power;  // beta^(d-1)
    Fq beta;
    std::vector<std::pair<std::string, bool>> relations;
    Polynomial lhs, rhs;  // the two sides of the final identity in x, y
    bool identity_holds = false;
};

/// Solves beta^(d-1) x + (x+1)^(d-1) (x+a) = (x+c)^3 (d = 3) or
/// (x^2+c x+d0)^2 (d = 4) by resultant elimination, drops the beta = 0
/// branch and verifies y^(d-1) x + (x+1)^(d-1)(x+a) = y^(d-1) x - beta^(d-1) x + rhs.
/// Throws DegenerateOnly when only beta = 0 survives (d = 3 with p = 3, d = 4
/// with p = 2), FieldTooSmall if beta
/// needs more than ext_cap.
BranchCertificate branch_certificate(int d, Field f, unsigned ext_cap = 12);

}  // namespace galpoint
