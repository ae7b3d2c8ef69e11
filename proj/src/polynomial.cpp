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

#include "galpoint/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace galpoint {

Polynomial::Polynomial(Field f, int nvars) : f_(f), nvars_(nvars) {
    if (nvars < 1 || nvars > 3) throw Error(ErrorCode::InvalidArgument, "nvars must be 1..3");
}

Polynomial Polynomial::constant(const Fq& c, int nvars) {
    Polynomial p(c.field(), nvars);
    p.add_term({0, 0, 0}, c);
    return p;
}

Polynomial Polynomial::variable(Field f, int nvars, int var) {
    Exponents e{0, 0, 0};
    e[var] = 1;
    return monomial(Fq::one(f), nvars, e);
}

Polynomial Polynomial::monomial(const Fq& c, int nvars, Exponents e) {
    Polynomial p(c.field(), nvars);
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::from_upoly(const UPoly& u, int nvars, int var) {
    Polynomial p(u.field(), nvars);
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
        Exponents e{0, 0, 0};
        e[var] = static_cast<std::uint16_t>(i);
        p.add_term(e, u.coeffs()[i]);
    }
    return p;
}

Polynomial Polynomial::from_coefficients_in(int var, const std::vector<Polynomial>& cs) {
    if (cs.empty()) throw Error(ErrorCode::InvalidArgument, "empty coefficient list");
    Polynomial p(cs.front().field(), cs.front().nvars());
    for (std::size_t j = 0; j < cs.size(); ++j) {
        for (const auto& [e, c] : cs[j].terms()) {
            Exponents ee = e;
            ee[var] = static_cast<std::uint16_t>(ee[var] + j);
            p.add_term(ee, c);
        }
    }
    return p;
}

void Polynomial::add_term(const Exponents& e, const Fq& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
}

int Polynomial::total_degree() const noexcept {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;
    return e[0] + e[1] + e[2];
}

int Polynomial::degree_in(int var) const noexcept {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, e[var]);
    return d;
}

bool Polynomial::is_homogeneous() const noexcept {
    const int d = total_degree();
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
        return t.first[0] + t.first[1] + t.first[2] == d;
    });
}

Fq Polynomial::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Fq::zero(f_) : it->second;
}

const Exponents& Polynomial::leading_exponents() const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroInput, "leading term of 0");
    return terms_.begin()->first;
}

const Fq& Polynomial::leading_coeff() const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroInput, "leading term of 0");
    return terms_.begin()->second;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty() || leading_coeff().is_one()) return *this;
    return *this * leading_coeff().inverse();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (!f_) {
        f_ = o.f_;
        nvars_ = o.nvars_;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (!f_) {
        f_ = o.f_;
        nvars_ = o.nvars_;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.f_ ? a.f_ : b.f_, std::max(a.nvars_, b.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e{static_cast<std::uint16_t>(ea[0] + eb[0]), static_cast<std::uint16_t>(ea[1] + eb[1]),
                        static_cast<std::uint16_t>(ea[2] + eb[2])};
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Fq& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    if (a.terms_.size() != b.terms_.size()) return false;
    return std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin());
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(Fq::one(f_), nvars_);
    Polynomial b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(f_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents ee = e;
        --ee[var];
        r.add_term(ee, c * Fq(f_, e[var]));
    }
    return r;
}

Fq Polynomial::eval(std::span<const Fq> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw Error(ErrorCode::DimensionMismatch, "eval: wrong arity");
    Field pf = point.empty() ? f_ : point[0].field();
    if (pf != f_) return embed(pf).eval(point);
    std::array<std::vector<Fq>, 3> powers;
    for (int v = 0; v < nvars_; ++v) {
        int d = degree_in(v);
        powers[v].push_back(Fq::one(f_));
        for (int i = 1; i <= d; ++i) powers[v].push_back(powers[v].back() * point[v]);
    }
    Fq r = Fq::zero(f_);
    for (const auto& [e, c] : terms_) {
        Fq t = c;
        for (int v = 0; v < nvars_; ++v)
            if (e[v]) t *= powers[v][e[v]];
        r += t;
    }
    return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw Error(ErrorCode::DimensionMismatch, "substitute: arity");
    Field tf = images[0].field();
    const int tn = images[0].nvars();
    Polynomial src = tf == f_ ? *this : embed(tf);
    std::array<std::vector<Polynomial>, 3> powers;
    for (int v = 0; v < nvars_; ++v) {
        int d = degree_in(v);
        powers[v].push_back(constant(Fq::one(tf), tn));
        for (int i = 1; i <= d; ++i) powers[v].push_back(powers[v].back() * images[v]);
    }
    Polynomial r(tf, tn);
    for (const auto& [e, c] : src.terms_) {
        Polynomial t = constant(c, tn);
        for (int v = 0; v < nvars_; ++v)
            if (e[v]) t = t * powers[v][e[v]];
        r += t;
    }
    return r;
}

Polynomial Polynomial::specialize(int var, const Fq& value) const {
    Field tf = value.field();
    Polynomial src = tf == f_ ? *this : embed(tf);
    std::vector<Fq> powers{Fq::one(tf)};
    for (int i = 1; i <= degree_in(var); ++i) powers.push_back(powers.back() * value);
    Polynomial r(tf, nvars_);
    for (const auto& [e, c] : src.terms_) {
        Exponents ee = e;
        ee[var] = 0;
        r.add_term(ee, c * powers[e[var]]);
    }
    return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(int var) const {
    std::vector<Polynomial> out(std::max(0, degree_in(var)) + 1, Polynomial(f_, nvars_));
    for (const auto& [e, c] : terms_) {
        Exponents ee = e;
        ee[var] = 0;
        out[e[var]].add_term(ee, c);
    }
    return out;
}

UPoly Polynomial::to_upoly(int var) const {
    std::vector<Fq> v(std::max(0, degree_in(var)) + 1, Fq::zero(f_));
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < nvars_; ++i)
            if (i != var && e[i] != 0) throw Error(ErrorCode::InvalidArgument, "to_upoly: other variables occur");
        v[e[var]] = c;
    }
    return UPoly(f_, std::move(v));
}

Polynomial Polynomial::homogenize() const {
    if (nvars_ != 2) throw Error(ErrorCode::InvalidArgument, "homogenize expects a bivariate polynomial");
    const int d = total_degree();
    Polynomial r(f_, 3);
    for (const auto& [e, c] : terms_) r.add_term({e[0], e[1], static_cast<std::uint16_t>(d - e[0] - e[1])}, c);
    return r;
}

Polynomial Polynomial::embed(Field dst) const {
    if (dst == f_) return *this;
    Polynomial r(dst, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, galpoint::embed(dst, c));
    return r;
}

Polynomial Polynomial::with_nvars(int n) const {
    for (int v = n; v < 3; ++v)
        if (degree_in(v) > 0) throw Error(ErrorCode::InvalidArgument, "with_nvars: variable in use");
    Polynomial r = *this;
    r.nvars_ = n;
    return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += "+";
        std::string mono;
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names.at(v);
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        std::string cs = c.to_string();
        if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
        if (mono.empty()) s += cs;
        else if (c.is_one()) s += mono;
        else s += cs + "*" + mono;
    }
    return s;
}

// ---------------------------------------------------------------------------

std::optional<Polynomial> try_exact_div(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
    Polynomial q(a.field() ? a.field() : b.field(), std::max(a.nvars(), b.nvars()));
    Polynomial r = a;
    const Exponents& lb = b.leading_exponents();
    const Fq inv = b.leading_coeff().inverse();
    while (!r.is_zero()) {
        const Exponents lr = r.leading_exponents();
        Exponents e;
        for (int i = 0; i < 3; ++i) {
            if (lr[i] < lb[i]) return std::nullopt;
            e[i] = static_cast<std::uint16_t>(lr[i] - lb[i]);
        }
        Polynomial t = Polynomial::monomial(r.leading_coeff() * inv, q.nvars(), e);
        q += t;
        r -= t * b;
    }
    return q;
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto q = try_exact_div(a, b);
    if (!q) throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
    return *q;
}

namespace {

using RPoly = std::vector<Polynomial>;  // coefficients in var, low degree first

int rdeg(const RPoly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (!a[i].is_zero()) return i;
    return -1;
}

void rtrim(RPoly& a) { a.resize(rdeg(a) + 1, Polynomial()); }

RPoly prem(const RPoly& a, const RPoly& b) {
    const int db = rdeg(b);
    int dr = rdeg(a);
    const Polynomial& lb = b[db];
    RPoly r = a;
    int e = dr - db + 1;
    while (dr >= db && dr >= 0) {
        Polynomial lr = r[dr];
        for (auto& c : r) c = c * lb;
        for (int j = 0; j <= db; ++j) r[dr - db + j] -= lr * b[j];
        --e;
        rtrim(r);
        dr = rdeg(r);
    }
    if (e > 0) {
        Polynomial f = lb.pow(static_cast<unsigned>(e));
        for (auto& c : r) c = c * f;
    }
    return r;
}

}  // namespace

Polynomial resultant(const Polynomial& f, const Polynomial& g, int var) {
    if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroInput, "resultant of a zero polynomial");
    if (f.field() != g.field()) throw Error(ErrorCode::IncompatibleFields, "resultant: field mismatch");
    const int nv = std::max(f.nvars(), g.nvars());
    if (var < 0 || var >= nv) throw Error(ErrorCode::InvalidArgument, "resultant: bad variable");
    RPoly a = f.with_nvars(nv).coefficients_in(var);
    RPoly b = g.with_nvars(nv).coefficients_in(var);
    const Polynomial one = Polynomial::constant(Fq::one(f.field()), nv);
    int da = rdeg(a), db = rdeg(b);
    // Sylvester matrix with the rows of g on top, matching the univariate convention.
    const bool flip = (da * db) % 2 == 1;
    if (da == 0) return a[0].pow(static_cast<unsigned>(db));
    if (db == 0) return b[0].pow(static_cast<unsigned>(da));
    Fq sign = flip ? -Fq::one(f.field()) : Fq::one(f.field());
    if (da < db) {
        std::swap(a, b);
        std::swap(da, db);
        if (da % 2 == 1 && db % 2 == 1) sign = -sign;
    }
    Polynomial gg = one, h = one;
    for (;;) {
        const int delta = da - db;
        if (da % 2 == 1 && db % 2 == 1) sign = -sign;
        RPoly r = prem(a, b);
        a = b;
        Polynomial div = gg * h.pow(static_cast<unsigned>(delta));
        for (auto& c : r) c = exact_div(c, div);
        b = std::move(r);
        rtrim(b);
        gg = a[rdeg(a)];
        if (delta == 0) {
        } else if (delta == 1) {
            h = gg;
        } else {
            h = exact_div(gg.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        }
        da = rdeg(a);
        db = rdeg(b);
        if (db < 0) return Polynomial(f.field(), nv);
        if (db == 0) break;
    }
    Polynomial lb = b[0];
    if (da == 1) h = lb;
    else h = exact_div(lb.pow(static_cast<unsigned>(da)), h.pow(static_cast<unsigned>(da - 1)));
    return h * sign;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
   public:
    Parser(std::string_view s, Field f, const std::vector<std::string>& names, int nvars)
        : s_(s), f_(f), names_(names), nvars_(nvars) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial p = term();
        for (;;) {
            if (accept('+')) p += term();
            else if (accept('-')) p -= term();
            else return p;
        }
    }

    Polynomial term() {
        Polynomial p = unary();
        while (accept('*')) p = p * unary();
        return p;
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            unsigned e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + static_cast<unsigned>(s_[pos_++] - '0');
                if (e > 100000) fail("exponent too large");
            }
            if (pos_ == start) fail("expected exponent");
            return base.pow(e);
        }
        return base;
    }

    Polynomial primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            const std::int64_t p = f_->p();
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                v = (v * 10 + (s_[pos_++] - '0')) % p;
            return Polynomial::constant(Fq(f_, v), nvars_);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string_view name = s_.substr(start, pos_ - start);
            for (int i = 0; i < static_cast<int>(names_.size()); ++i)
                if (names_[i] == name) return Polynomial::variable(f_, nvars_, i);
            if (name == "a") {
                if (f_->k() == 1) fail("generator 'a' is only meaningful in extension fields");
                return Polynomial::constant(Fq::generator(f_), nvars_);
            }
            pos_ = start;
            fail("unknown symbol '" + std::string(name) + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    Field f_;
    const std::vector<std::string>& names_;
    int nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, Field f, const std::vector<std::string>& names) {
    if (names.empty() || names.size() > 3) throw Error(ErrorCode::InvalidArgument, "1..3 variable names required");
    return Parser(text, f, names, static_cast<int>(names.size())).parse();
}

Fq parse_element(std::string_view text, Field f) {
    static const std::vector<std::string> none{"__unused__"};
    Polynomial p = Parser(text, f, none, 1).parse();
    if (!p.is_constant()) throw Error(ErrorCode::ParseError, "not a field element: '" + std::string(text) + "'");
    return p.coeff({0, 0, 0});
}

}  // namespace galpoint
