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

#include <array>
#include <utility>
#include <vector>

#include "galpoint/polynomial.hpp"
#include "galpoint/projective.hpp"

namespace galpoint {

/// A reduced plane curve F(X, Y, Z) = 0. The affine chart is Z = 1 with
/// coordinates x = X/Z, y = Y/Z.
class PlaneCurve {
   public:
    PlaneCurve() = default;
    /// Throws InvalidArgument unless form is a nonconstant homogeneous
    /// trivariate polynomial, and NotSquarefree if it has a repeated factor.
    explicit PlaneCurve(Polynomial form, bool assume_irreducible = true);

    const Polynomial& form() const noexcept { return form_; }
    int degree() const noexcept { return form_.total_degree(); }
    Field field() const noexcept { return form_.field(); }
    /// Irreducibility is never checked; callers state it.
    bool assume_irreducible() const noexcept { return irreducible_; }
    /// d/dX, d/dY, d/dZ
    const Polynomial& partial(int i) const { return partials_.at(i); }
    /// F(x, y, 1)
    Polynomial affine() const;

    bool contains(const ProjPoint& p) const;
    /// 0 off the curve, 1 at smooth points.
    unsigned multiplicity_at(const ProjPoint& p) const;
    bool is_singular_at(const ProjPoint& p) const;
    PlaneCurve embed(Field dst) const;

   private:
    Polynomial form_;
    std::array<Polynomial, 3> partials_;
    bool irreducible_ = true;
};

PlaneCurve curve_from_affine(const Polynomial& f, bool assume_irreducible = true);

/// Singular points, all defined over ext.
struct SingularLocus {
    Field ext = nullptr;
    std::vector<std::pair<ProjPoint, unsigned>> points;  // (point, multiplicity >= 2), sorted
    bool empty() const noexcept { return points.empty(); }
    bool contains(const ProjPoint& p) const;
};

/// Throws ExtensionCapExceeded when the coordinates need an extension of
/// relative degree above ext_cap.
SingularLocus singular_points(const PlaneCurve& c, unsigned ext_cap = 12);

/// Throws PointNotOnCurve or PointSingular.
ProjLine tangent_line(const PlaneCurve& c, const ProjPoint& p);

/// The divisor cut on C by L. Throws LineIsComponent.
PointDivisor line_intersection_divisor(const PlaneCurve& c, const ProjLine& l, unsigned ext_cap = 12);

/// Zeros on P^1 of a nonzero binary form g(s, t) (variables 0 and 1) as
/// points (s:t) with multiplicity; infinity is (1:0).
PointDivisor binary_form_divisor(const Polynomial& g, unsigned ext_cap = 12);

/// Two distinct points spanning L, chosen deterministically.
std::pair<ProjPoint, ProjPoint> line_basis(const ProjLine& l);

}  // namespace galpoint
