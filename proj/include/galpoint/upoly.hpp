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
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "galpoint/gf.hpp"

namespace galpoint {

/// Dense univariate polynomial over one field; coefficients low degree first,
/// no trailing zeros (the zero polynomial has no coefficients).
class UPoly {
   public:
    UPoly() = default;
    explicit UPoly(Field f) : f_(f) {}
    UPoly(Field f, std::vector<Fq> coeffs);
    /// Convenience for small integer coefficients, low degree first.
    UPoly(Field f, std::initializer_list<std::int64_t> coeffs);

    static UPoly constant(const Fq& c);
    /// c * t^n
    static UPoly monomial(const Fq& c, std::size_t n);
    /// t - r
    static UPoly linear_root(const Fq& r);

    Field field() const noexcept { return f_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Fq>& coeffs() const noexcept { return c_; }
    Fq coeff(std::size_t i) const;
    Fq lead() const;
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }

    UPoly monic() const;
    UPoly derivative() const;
    Fq operator()(const Fq& x) const;

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    UPoly& operator*=(const Fq& s);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
    friend UPoly operator*(UPoly a, const Fq& s) { return a *= s; }

    friend bool operator==(const UPoly& a, const UPoly& b) noexcept { return a.c_ == b.c_; }

    UPoly pow(std::uint64_t e) const;
    /// Coefficient-wise image in an extension field.
    UPoly embed(Field dst) const;
    /// "c*t^n+..." highest degree first, with the given variable name.
    std::string to_string(const std::string& var = "t") const;

   private:
    void trim();

    Field f_ = nullptr;
    std::vector<Fq> c_;
};

/// a = q*b + r with deg r < deg b.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly operator/(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
/// base^e mod m
UPoly powmod(const UPoly& base, u128 e, const UPoly& m);
UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m);

bool is_squarefree(const UPoly& f);
bool is_irreducible(const UPoly& f);

struct FactorPower {
    UPoly factor;  // monic irreducible
    unsigned exponent;
};

/// Squarefree decomposition: pairs (g_i, i) with f = lc * prod g_i^i, each g_i
/// squarefree and pairwise coprime. Handles f' = 0 by p-th-root descent.
std::vector<FactorPower> squarefree_decomposition(const UPoly& f);

/// Product of the distinct irreducible factors of f, made monic.
UPoly squarefree_part(const UPoly& f);

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (product of all irreducible factors of degree d, d).
std::vector<std::pair<UPoly, unsigned>> distinct_degree_factorization(const UPoly& f);

/// Splits a monic squarefree f whose irreducible factors all have degree d.
std::vector<UPoly> equal_degree_factorization(const UPoly& f, unsigned d, std::mt19937_64& rng);

/// Complete factorization into monic irreducibles with exponents, sorted by
/// (degree, coefficients). Deterministic for a given seed.
std::vector<FactorPower> factor(const UPoly& f, std::uint64_t seed = 0);

/// Distinct roots in the coefficient field, sorted by index.
std::vector<Fq> roots_in_field(const UPoly& f, std::uint64_t seed = 0);

/// Smallest d such that f splits into linear factors over F_{q^d}.
unsigned splitting_degree(const UPoly& f);

struct RootMultiset {
    Field ext = nullptr;
    std::vector<std::pair<Fq, unsigned>> roots;  // sorted by root index

    unsigned total_multiplicity() const;
};

/// All roots of f with multiplicities over the smallest extension in which it
/// splits, provided its relative degree is at most ext_cap.
RootMultiset splitting_roots(const UPoly& f, unsigned ext_cap);

/// Resultant of two univariate polynomials over a field, via the Euclidean
/// remainder sequence.
Fq resultant(const UPoly& a, const UPoly& b);

}  // namespace galpoint
