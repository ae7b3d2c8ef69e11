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

#include <optional>
#include <string>
#include <vector>

#include "galpoint/curve.hpp"
#include "galpoint/galois.hpp"
#include "galpoint/projective.hpp"

namespace galpoint {

/// An eta in G2 with P + sum_{s in G1} s(eta(P)) = sum_{u in G2} u(P).
struct ConditionBWitness {
    Projectivity eta;
    PointDivisor lhs, rhs;
};

/// Every eta in G2, in element order, satisfying the divisor identity. The
/// groups and P are moved to their common field first.
std::vector<ConditionBWitness> check_condition_b(const FiniteProjectivityGroup& g1, const FiniteProjectivityGroup& g2,
                                                 const ProjPoint& p);

/// A generator f of the invariant field of G with pole divisor the orbit sum
/// of q0. Built from the ladder F_j = sum_s s(t)^j, stopping at the first j
/// with deg F_j = |G|. Throws LadderExhausted past j = 2|G|.
RationalMap1D invariant_generator(const FiniteProjectivityGroup& g, const ProjPoint& q0);

/// t -> (f(t) : g(t) : 1) over a common denominator.
Parametrization parametrization_of(const RationalMap1D& f, const RationalMap1D& g);

/// The image curve of t -> (f(t), g(t)): Res_t(nf - x df, ng - y dg) made
/// monic and homogenized, then checked at 20 sample points. Throws
/// DegreeMismatch if expected_degree is given and differs, or if the
/// resultant is not squarefree (the map is not birational onto its image).
PlaneCurve implicitize(const RationalMap1D& f, const RationalMap1D& g, std::optional<int> expected_degree = {});

struct EmbedConfig {
    unsigned ext_cap = 12;
    std::size_t closure_cap = 4096;
    int trials = 64;
    std::uint64_t seed = 0;
};

struct EmbeddingResult {
    std::vector<ConditionBWitness> witnesses;
    Projectivity eta;
    RationalMap1D f, g;
    Parametrization phi;
    PlaneCurve curve;
    ProjPoint image_p;  // (0:1:0)
    ProjPoint q;        // (1:0:0)
    GaloisReport inner_report, outer_report;
    ProductReport joint;
    GroupDescriptor joint_descriptor;
    /// Pullback of Z = 0 under phi, and the orbit sum of P under G2.
    PointDivisor pullback, orbit_divisor;
    bool converse_holds = false;
};

/// Builds the plane model from the first condition-(b) witness and certifies
/// both Galois points through deck groups. Throws ConditionBFails, or
/// VerificationFailed naming the failing stage.
EmbeddingResult construct_embedding(const FiniteProjectivityGroup& g1, const FiniteProjectivityGroup& g2,
                                    const ProjPoint& p, const EmbedConfig& cfg = {});

/// Group data for the embedding pipeline.
struct EmbeddingData {
    FiniteProjectivityGroup g1, g2;
    ProjPoint p;
};

/// G1 of order 3 fixing P and normalizing a Klein four-group G2, first in
/// PGL(2, f) order. Throws FieldTooSmall if none satisfies condition (b).
EmbeddingData find_a4_data(Field f);
/// G1 of order 2 fixing P and inverting a cyclic G2 of order 3.
EmbeddingData find_s3_data(Field f);

}  // namespace galpoint
