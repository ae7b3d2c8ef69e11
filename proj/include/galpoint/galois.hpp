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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galpoint/curve.hpp"
#include "galpoint/polynomial.hpp"
#include "galpoint/projective.hpp"
#include "galpoint/upoly.hpp"

namespace galpoint {

/// t -> num(t) / den(t) with gcd(num, den) = 1.
class RationalMap1D {
   public:
    RationalMap1D() = default;
    /// Cancels the gcd. Throws InvalidArgument if den is zero.
    RationalMap1D(UPoly num, UPoly den);

    const UPoly& num() const noexcept { return num_; }
    const UPoly& den() const noexcept { return den_; }
    Field field() const noexcept { return num_.field(); }
    int degree() const noexcept { return std::max(num_.degree(), den_.degree()); }
    /// Image of a point of P^1 (infinity allowed on both sides).
    ProjPoint operator()(const ProjPoint& x) const;
    /// h o sigma == h as rational functions.
    bool invariant_under(const Projectivity& sigma) const;
    std::string to_string(const std::string& var = "t") const;

   private:
    UPoly num_, den_;
};

/// t -> (X(t) : Y(t) : Z(t)), a birational parametrization of a plane curve.
struct Parametrization {
    std::array<UPoly, 3> coords;

    Field field() const { return coords[0].field(); }
    int degree() const;
    /// Handles t = infinity through the leading coefficients.
    ProjPoint operator()(const ProjPoint& t) const;
    Parametrization embed(Field dst) const;
};

enum class PointClass { Inner, Outer, Invalid };
enum class Verdict { CertifiedGalois, CertifiedNotGalois, ProbablyGalois, Inconclusive };
enum class Method { Collineation, Deck, SpaceLift, MonteCarlo, None };
enum class Strategy { Auto, Collineation, Deck, MonteCarlo };

std::string to_string(PointClass c);
std::string to_string(Verdict v);
std::string to_string(Method m);
std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& s);

/// The curve in coordinates where the center sits at target, sliced by the
/// pencil of lines through it.
struct ProjectionFiber {
    ProjPoint center;
    PointClass point_class = PointClass::Invalid;
    /// (0:1:0) for inner centers, (1:0:0) for outer ones.
    ProjPoint target;
    /// Maps target to center; the transformed form is form(M v).
    Projectivity to_center;
    Polynomial transformed_form;
    /// F(t, s): variable 0 is the pencil parameter, variable 1 the fiber
    /// coordinate. s-degree is exactly n.
    Polynomial fiber_poly;
    int n = 0;

    Field field() const { return fiber_poly.field(); }
    /// The two linear forms (in original coordinates) whose ratio is the
    /// pencil parameter t.
    std::array<std::vector<Fq>, 2> pencil_forms() const;
};

/// Throws CenterSingular.
ProjectionFiber fiber_polynomial(const PlaneCurve& c, const ProjPoint& center);

struct Witness {
    Fq t0;
    std::vector<unsigned> factor_degrees;  // sorted
    /// Another specialization over the same field whose pattern differs; both
    /// patterns contain a degree-1 factor.
    Fq reference_t0;
    std::vector<unsigned> reference_degrees;
};

struct GaloisReport {
    ProjPoint point;
    PointClass point_class = PointClass::Invalid;
    int projection_degree = 0;
    Verdict verdict = Verdict::Inconclusive;
    Method method = Method::None;
    std::optional<FiniteProjectivityGroup> group;
    std::optional<GroupDescriptor> descriptor;
    std::optional<Witness> witness;
    int trials = 0;
    int skipped = 0;
    std::optional<std::size_t> collineation_order;
    std::optional<std::size_t> deck_order;
    bool assume_irreducible = true;
    std::vector<std::string> notes;
};

/// Samples specializations t0 over F_{q^j}, j cycling through 1, 2, 3, and
/// compares factor-degree patterns among fibers that contain a rational
/// point. In a Galois cover all such fibers over one field share a pattern,
/// so two different patterns certify non-Galois. Throws
/// AllSpecializationsRamified if no sample is usable.
GaloisReport monte_carlo_galois(const ProjectionFiber& fib, int trials, std::uint64_t seed);

/// Factor-degree pattern of a squarefree polynomial from root counts over
/// F_{q^m}, m = 1..deg; independent of the factorization routine.
std::vector<unsigned> degree_pattern_by_root_counts(const UPoly& g);

enum class CollineationMode { Exact, Brute };

/// All projectivities over the curve's (or center's) field fixing center and
/// every line through it that preserve the curve.
FiniteProjectivityGroup central_collineation_group(const PlaneCurve& c, const ProjPoint& center,
                                                   CollineationMode mode = CollineationMode::Exact,
                                                   std::uint64_t brute_q_cap = 64, std::size_t closure_cap = 4096);

/// {sigma in PGL(2) : h o sigma = h}, over the field where two generic
/// fibers split. Throws ExtensionCapExceeded or DegenerateFibers.
FiniteProjectivityGroup deck_group(const RationalMap1D& h, unsigned ext_cap = 12);

/// form(phi(t)) vanishes identically.
bool parametrizes(const PlaneCurve& c, const Parametrization& phi);

/// The projection from center composed with a parametrization.
RationalMap1D projection_map(const ProjectionFiber& fib, const Parametrization& phi);

struct GaloisConfig {
    Strategy strategy = Strategy::Auto;
    int trials = 64;
    std::uint64_t seed = 0;
    unsigned ext_cap = 12;
    std::size_t closure_cap = 4096;
    std::uint64_t brute_q_cap = 64;
    std::optional<Parametrization> parametrization;
};

GaloisReport is_galois_point(const PlaneCurve& c, const ProjPoint& p, const GaloisConfig& cfg = {});

/// A birational lift of a plane curve to P^3, (x, y) -> (x : y : 1 : w) with
/// w = w_num / w_den in the affine coordinates.
struct SpaceLift {
    Polynomial w_num, w_den;
};

/// Certificate for automorphisms that are linear only on a lift. Every
/// generator must map the lifted curve into itself and fix each line through
/// center; every nonidentity element must move C. The induced maps then form
/// a subgroup of the same order in the Galois group of the projection, so an
/// order equal to the projection degree certifies Galois. Irreducibility of C
/// is assumed, as everywhere. Throws VerificationFailed naming the first
/// element that fails.
GaloisReport lifted_galois_point(const PlaneCurve& c, const ProjPoint& center, const SpaceLift& lift,
                                 const std::vector<Projectivity>& gens, std::size_t closure_cap = 4096);

/// True when every nonidentity element of g (4x4, acting through lift) moves C.
bool acts_faithfully(const PlaneCurve& c, const SpaceLift& lift, const FiniteProjectivityGroup& g);

}  // namespace galpoint
