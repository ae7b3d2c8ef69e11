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

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "galpoint/error.hpp"

namespace galpoint {

using u128 = unsigned __int128;

/// The finite field F_p[a]/(m(a)) of order p^k.
///
/// Contexts are interned: make_field(p, k) always returns the same pointer for
/// the same (p, k), and the pointee lives for the rest of the process. Two
/// elements interoperate iff their Field pointers are equal.
class FieldCtx {
   public:
    std::uint32_t p() const noexcept { return p_; }
    unsigned k() const noexcept { return k_; }
    /// Monic modulus, low degree first, length k + 1.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    /// p^k. Fields whose order does not fit in 126 bits are rejected.
    u128 order() const noexcept { return order_; }
    /// "p^k"
    std::string spec() const;

    FieldCtx(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus);

   private:
    std::uint32_t p_;
    unsigned k_;
    std::vector<std::uint32_t> modulus_;
    u128 order_;
};

using Field = const FieldCtx*;

/// Deterministic: the modulus is the first irreducible monic polynomial of
/// degree k when candidates are enumerated by the integer sum c_i p^i of their
/// lower coefficients. Prime fields use the modulus "a".
Field make_field(std::uint64_t p, unsigned k);

/// Parses "p^k" or "p".
Field parse_field_spec(std::string_view spec);

/// F_{p^{k * rel_degree}} for the base characteristic.
Field extension_field(Field base, unsigned rel_degree);

/// Smallest field containing both (same characteristic, degree lcm).
Field common_field(Field a, Field b);

bool is_prime(std::uint64_t n) noexcept;
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::string to_string(u128 v);

/// An element of a FieldCtx, stored as its coefficient vector in the power
/// basis 1, a, ..., a^{k-1}.
class Fq {
   public:
    using Coeffs = boost::container::small_vector<std::uint32_t, 6>;

    Fq() = default;
    /// Image of an integer.
    Fq(Field f, std::int64_t v);

    static Fq zero(Field f) { return Fq(f, 0); }
    static Fq one(Field f) { return Fq(f, 1); }
    static Fq from_coeffs(Field f, Coeffs c);
    /// Inverse of index().
    static Fq from_index(Field f, u128 idx);
    /// The class of the modulus variable.
    static Fq generator(Field f);
    static Fq random(Field f, std::mt19937_64& rng);

    Field field() const noexcept { return f_; }
    const Coeffs& coeffs() const noexcept { return c_; }
    /// sum c_i p^i; a bijection onto [0, p^k).
    u128 index() const noexcept;

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    bool in_prime_field() const noexcept;

    Fq operator-() const;
    Fq& operator+=(const Fq& o);
    Fq& operator-=(const Fq& o);
    Fq& operator*=(const Fq& o);
    Fq& operator/=(const Fq& o) { return *this *= o.inverse(); }
    friend Fq operator+(Fq a, const Fq& b) { return a += b; }
    friend Fq operator-(Fq a, const Fq& b) { return a -= b; }
    friend Fq operator*(Fq a, const Fq& b) { return a *= b; }
    friend Fq operator/(Fq a, const Fq& b) { return a /= b; }

    Fq inverse() const;
    Fq pow(u128 e) const;
    /// x -> x^p
    Fq frobenius() const { return pow(f_->p()); }
    /// The unique y with y^p = x.
    Fq pth_root() const;

    friend bool operator==(const Fq& a, const Fq& b) noexcept { return a.f_ == b.f_ && a.c_ == b.c_; }
    /// Total order by index(); only meaningful within one field.
    friend std::strong_ordering operator<=>(const Fq& a, const Fq& b) noexcept;

    /// Prime fields print as 0..p-1; extensions as a polynomial in "a".
    std::string to_string() const;
    std::size_t hash() const noexcept;

   private:
    void check_same(const Fq& o) const;

    Field f_ = nullptr;
    Coeffs c_;
};

/// Image of `a` under the fixed embedding F_{p^{src.k}} -> F_{p^{dst.k}}.
/// The embedding sends the generator of the source to the smallest root of the
/// source modulus in the destination and is cached per (src, dst) pair.
Fq embed(Field dst, const Fq& a);

/// The preimage of `a` under embed(a.field(), .) from the subfield `sub`, or
/// nullopt when a does not lie in that subfield.
std::optional<Fq> restrict_to(Field sub, const Fq& a);

/// Smallest field containing every element, as an extension of `base`.
Field field_of_definition(Field base, const std::vector<Fq>& xs);

/// An element of exact multiplicative order n, or nullopt when n does not
/// divide |F*|. The smallest such element of the form g^((q-1)/n), g scanned by
/// index, is returned.
std::optional<Fq> nth_root_of_unity(Field f, std::uint64_t n);

/// All elements x with x^n = 1 (n need not divide q-1), ordered by index.
std::vector<Fq> roots_of_unity(Field f, std::uint64_t n);

std::uint64_t multiplicative_order(const Fq& a);

std::ostream& operator<<(std::ostream& os, const Fq& a);

}  // namespace galpoint

template <>
struct std::hash<galpoint::Fq> {
    std::size_t operator()(const galpoint::Fq& a) const noexcept { return a.hash(); }
};
