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
#include <ostream>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "galpoint/gf.hpp"
#include "galpoint/upoly.hpp"

namespace galpoint {

/// Exponent vector; slots beyond nvars stay zero.
using Exponents = std::array<std::uint16_t, 3>;

/// Graded-lex, largest first: total degree, then x, then y, then z.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const noexcept {
        int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
        if (da != db) return da > db;
        return a > b;
    }
};

/// Sparse polynomial in 1 to 3 variables over one field. No zero coefficients
/// are stored; terms iterate in decreasing graded-lex order.
class Polynomial {
   public:
    using Terms = std::map<Exponents, Fq, GrlexGreater>;

    Polynomial() = default;
    Polynomial(Field f, int nvars);

    static Polynomial constant(const Fq& c, int nvars);
    static Polynomial variable(Field f, int nvars, int var);
    static Polynomial monomial(const Fq& c, int nvars, Exponents e);
    /// u(var)
    static Polynomial from_upoly(const UPoly& u, int nvars, int var);
    /// sum_j cs[j] * var^j, the cs free of var.
    static Polynomial from_coefficients_in(int var, const std::vector<Polynomial>& cs);

    Field field() const noexcept { return f_; }
    int nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;

    /// -1 for zero.
    int total_degree() const noexcept;
    int degree_in(int var) const noexcept;
    bool is_homogeneous() const noexcept;
    bool involves(int var) const noexcept { return degree_in(var) > 0; }

    Fq coeff(const Exponents& e) const;
    const Exponents& leading_exponents() const;
    const Fq& leading_coeff() const;
    /// Scaled so the leading coefficient is 1.
    Polynomial monic() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Fq& s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Fq& s) { return a *= s; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept;

    Polynomial pow(unsigned e) const;
    Polynomial derivative(int var) const;

    /// Evaluates at a point; the polynomial is embedded into the point's field.
    Fq eval(std::span<const Fq> point) const;
    /// Replaces variable i by images[i]; all images share nvars and field.
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    /// Sets one variable to a value (embedding into its field), keeping nvars.
    Polynomial specialize(int var, const Fq& value) const;
    /// Coefficients with respect to var: result[j] is the coefficient of var^j.
    std::vector<Polynomial> coefficients_in(int var) const;
    /// Univariate view; only `var` may occur.
    UPoly to_upoly(int var) const;
    /// Bivariate -> trivariate form of degree total_degree() in (x, y, z).
    Polynomial homogenize() const;
    Polynomial embed(Field dst) const;
    /// Same polynomial viewed in more (or fewer, if unused) variables.
    Polynomial with_nvars(int n) const;

    /// Canonical text: terms in decreasing graded-lex order joined by "+",
    /// each "c*x^a*y^b*z^c" with unit coefficients and exponents omitted.
    std::string to_string(const std::vector<std::string>& names = {"x", "y", "z"}) const;

    /// Adds c to the coefficient of e.
    void add_term(const Exponents& e, const Fq& c);

   private:
    Field f_ = nullptr;
    int nvars_ = 0;
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

/// a / b when b divides a exactly, otherwise nullopt.
std::optional<Polynomial> try_exact_div(const Polynomial& a, const Polynomial& b);
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// Res_var(f, g) by the subresultant remainder sequence over the ring of
/// polynomials in the remaining variables. Sign convention: the Sylvester
/// matrix lists g's rows first, so Res(t-a, t-b) = b-a. Throws ZeroInput on a zero input.
Polynomial resultant(const Polynomial& f, const Polynomial& g, int var);

/// Parses +, -, *, ^, parentheses, decimal integers, the given variable names
/// and the field generator "a".
Polynomial parse_polynomial(std::string_view text, Field f, const std::vector<std::string>& names);

/// Parses one field element (integer, or expression in "a").
Fq parse_element(std::string_view text, Field f);

}  // namespace galpoint
