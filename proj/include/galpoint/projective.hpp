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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "galpoint/gf.hpp"

namespace galpoint {

/// A point of P^1 (2 coordinates) or P^2 (3 coordinates), normalized so the
/// first nonzero coordinate is 1.
class ProjPoint {
   public:
    ProjPoint() = default;
    explicit ProjPoint(std::vector<Fq> coords);

    /// (t:1) on P^1.
    static ProjPoint affine(const Fq& t) { return ProjPoint({t, Fq::one(t.field())}); }
    /// (1:0) on P^1.
    static ProjPoint infinity(Field f) { return ProjPoint({Fq::one(f), Fq::zero(f)}); }

    int dim() const noexcept { return static_cast<int>(c_.size()); }
    Field field() const noexcept { return c_.empty() ? nullptr : c_[0].field(); }
    const std::vector<Fq>& coords() const noexcept { return c_; }
    const Fq& operator[](std::size_t i) const { return c_[i]; }
    /// For P^1: true for (1:0).
    bool is_infinity() const noexcept { return dim() == 2 && c_[1].is_zero(); }
    /// For P^1 affine points, the coordinate t of (t:1).
    Fq t() const { return c_[0] * c_[1].inverse(); }

    ProjPoint embed(Field dst) const;
    std::string to_string() const;
    std::size_t hash() const noexcept;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) noexcept { return a.c_ == b.c_; }
    /// Coordinate-wise by element index; used for canonical ordering.
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) noexcept;

   private:
    std::vector<Fq> c_;
};

/// A line aX + bY + cZ = 0 of P^2, normalized like a point.
class ProjLine {
   public:
    ProjLine() = default;
    explicit ProjLine(std::vector<Fq> coeffs);
    static ProjLine through(const ProjPoint& p, const ProjPoint& q);

    const std::vector<Fq>& coeffs() const noexcept { return c_.coords(); }
    Field field() const noexcept { return c_.field(); }
    bool contains(const ProjPoint& x) const;
    std::string to_string() const;
    friend bool operator==(const ProjLine& a, const ProjLine& b) noexcept { return a.c_ == b.c_; }

   private:
    ProjPoint c_;
};

ProjPoint intersection(const ProjLine& a, const ProjLine& b);

/// An element of PGL(2), PGL(3) or PGL(4): an invertible matrix up to scalars, stored
/// row-major with the first nonzero entry equal to 1.
class Projectivity {
   public:
    Projectivity() = default;
    Projectivity(int n, std::vector<Fq> rows);

    static Projectivity identity(Field f, int n);
    /// t -> (a t + b) / (c t + d)
    static Projectivity mobius(const Fq& a, const Fq& b, const Fq& c, const Fq& d);

    int n() const noexcept { return n_; }
    Field field() const noexcept { return m_.empty() ? nullptr : m_[0].field(); }
    const std::vector<Fq>& entries() const noexcept { return m_; }
    const Fq& at(int i, int j) const { return m_[i * n_ + j]; }
    bool is_identity() const noexcept;

    Projectivity inverse() const;
    /// Smallest k >= 1 with g^k = 1; throws ClosureCapExceeded past cap.
    std::uint64_t order(std::uint64_t cap = 1u << 20) const;
    Projectivity embed(Field dst) const;
    std::string to_string() const;
    std::size_t hash() const noexcept;

    /// Composition: (g * h)(x) = g(h(x)).
    friend Projectivity operator*(const Projectivity& g, const Projectivity& h);
    friend bool operator==(const Projectivity& a, const Projectivity& b) noexcept {
        return a.n_ == b.n_ && a.m_ == b.m_;
    }

   private:
    int n_ = 0;
    std::vector<Fq> m_;
};

/// Applies g to x, embedding both into a common field if needed.
ProjPoint apply(const Projectivity& g, const ProjPoint& x);

/// h g h^-1
Projectivity conjugate(const Projectivity& g, const Projectivity& h);

}  // namespace galpoint

template <>
struct std::hash<galpoint::ProjPoint> {
    std::size_t operator()(const galpoint::ProjPoint& a) const noexcept { return a.hash(); }
};
template <>
struct std::hash<galpoint::Projectivity> {
    std::size_t operator()(const galpoint::Projectivity& a) const noexcept { return a.hash(); }
};

namespace galpoint {

/// An explicitly enumerated finite group of projectivities.
class FiniteProjectivityGroup {
   public:
    FiniteProjectivityGroup() = default;
    /// Identity only.
    static FiniteProjectivityGroup trivial(Field f, int n);

    Field field() const noexcept { return elems_.front().field(); }
    int n() const noexcept { return elems_.front().n(); }
    std::size_t order() const noexcept { return elems_.size(); }
    /// elements()[0] is the identity; the rest are in discovery order.
    const std::vector<Projectivity>& elements() const noexcept { return elems_; }
    const std::vector<Projectivity>& generators() const noexcept { return gens_; }
    bool contains(const Projectivity& g) const;
    /// Same group with every matrix mapped into dst.
    FiniteProjectivityGroup embed(Field dst) const;

   private:
    friend FiniteProjectivityGroup generate_group(const std::vector<Projectivity>&, std::size_t);
    std::vector<Projectivity> elems_;
    std::vector<Projectivity> gens_;
    std::unordered_map<Projectivity, std::size_t> index_;
};

/// Breadth-first closure of the generators. Generators over different fields
/// are embedded into their common field first. Throws ClosureCapExceeded.
FiniteProjectivityGroup generate_group(const std::vector<Projectivity>& gens, std::size_t cap = 4096);

/// The same group rewritten over the smallest extension of base that holds
/// every matrix entry.
FiniteProjectivityGroup descend(const FiniteProjectivityGroup& g, Field base);

enum class GroupTag { Trivial, Cyclic, Klein, ElementaryAbelian, S3, A4, SemidirectPCyclic, Other };

struct GroupDescriptor {
    std::size_t order = 0;
    bool abelian = true;
    std::map<std::uint64_t, std::size_t> order_histogram;
    GroupTag tag = GroupTag::Trivial;
    /// For ElementaryAbelian: order p^e. For SemidirectPCyclic: normal Sylow
    /// p-subgroup of order p^e with a cyclic complement.
    std::uint64_t p = 0;
    unsigned e = 0;

    /// "cyclic", "elementary_abelian(2,2)", ...
    std::string tag_string() const;
};

GroupDescriptor identify_group(const FiniteProjectivityGroup& g);

enum class ProductClass { Direct, LeftSemidirect, RightSemidirect, Neither, NotAProduct };
std::string to_string(ProductClass c);

struct ProductReport {
    FiniteProjectivityGroup joint;
    std::size_t intersection_order = 0;
    bool product_set_is_joint = false;
    bool g1_normal = false;
    bool g2_normal = false;
    bool elementwise_commute = false;
    ProductClass classification = ProductClass::NotAProduct;
    /// Some (g1, g2) with g1 g2 != g2 g1, when one exists.
    std::optional<std::pair<Projectivity, Projectivity>> noncommuting;
};

ProductReport product_structure(const FiniteProjectivityGroup& g1, const FiniteProjectivityGroup& g2,
                                std::size_t cap = 4096);

/// An effective divisor on P^1 or P^2, support sorted by point.
struct PointDivisor {
    int ambient = 2;  // number of homogeneous coordinates
    std::vector<std::pair<ProjPoint, unsigned>> support;

    unsigned degree() const;
    unsigned multiplicity(const ProjPoint& x) const;
    PointDivisor embed(Field dst) const;
    /// Sorts and merges equal points.
    void normalize();
    std::string to_string() const;
    friend bool operator==(const PointDivisor& a, const PointDivisor& b) { return a.support == b.support; }
};

/// Sum over g in G of g(x): each orbit point with multiplicity |Stab(x)|.
PointDivisor orbit(const FiniteProjectivityGroup& g, const ProjPoint& x);

/// All of PGL(2, F) in canonical order.
std::vector<Projectivity> enumerate_pgl2(Field f);

}  // namespace galpoint
