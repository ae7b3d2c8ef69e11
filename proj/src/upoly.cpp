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

#include "galpoint/upoly.hpp"

#include <algorithm>
#include <numeric>

namespace galpoint {

UPoly::UPoly(Field f, std::vector<Fq> coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(Field f, std::initializer_list<std::int64_t> coeffs) : f_(f) {
    for (auto c : coeffs) c_.emplace_back(f, c);
    trim();
}

UPoly UPoly::constant(const Fq& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::monomial(const Fq& c, std::size_t n) {
    std::vector<Fq> v(n + 1, Fq::zero(c.field()));
    v[n] = c;
    return UPoly(c.field(), std::move(v));
}

UPoly UPoly::linear_root(const Fq& r) { return UPoly(r.field(), {-r, Fq::one(r.field())}); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Fq UPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Fq::zero(f_); }

Fq UPoly::lead() const { return c_.empty() ? Fq::zero(f_) : c_.back(); }

UPoly UPoly::monic() const {
    if (is_zero() || lead().is_one()) return *this;
    return *this * lead().inverse();
}

UPoly UPoly::derivative() const {
    std::vector<Fq> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Fq(f_, static_cast<std::int64_t>(i % f_->p())));
    return UPoly(f_, std::move(d));
}

Fq UPoly::operator()(const Fq& x) const {
    if (x.field() != f_) return embed(x.field())(x);
    Fq r = Fq::zero(f_);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (!f_) f_ = o.f_;
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Fq::zero(f_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (!f_) f_ = o.f_;
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Fq::zero(f_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
    if (!f_) f_ = o.f_;
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Fq> r(c_.size() + o.c_.size() - 1, Fq::zero(f_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Fq& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

UPoly UPoly::pow(std::uint64_t e) const {
    UPoly r = constant(Fq::one(f_));
    UPoly b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

UPoly UPoly::embed(Field dst) const {
    if (dst == f_) return *this;
    std::vector<Fq> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(galpoint::embed(dst, c));
    return UPoly(dst, std::move(v));
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += "+";
        std::string c = c_[i].to_string();
        bool paren = f_->k() > 1 && c.find('+') != std::string::npos;
        if (i == 0) {
            s += paren ? "(" + c + ")" : c;
            continue;
        }
        if (!c_[i].is_one()) s += (paren ? "(" + c + ")" : c) + "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

// ---------------------------------------------------------------------------

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
    Field f = b.field();
    if (a.degree() < b.degree()) return {UPoly(f), a};
    std::vector<Fq> r = a.coeffs();
    const auto& bc = b.coeffs();
    const int db = b.degree();
    std::vector<Fq> q(a.degree() - db + 1, Fq::zero(f));
    Fq inv = b.lead().inverse();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i].is_zero()) continue;
        Fq c = r[i] * inv;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= c * bc[j];
    }
    r.resize(db);
    return {UPoly(f, std::move(q)), UPoly(f, std::move(r))};
}

UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m) { return (a * b) % m; }

UPoly powmod(const UPoly& base, u128 e, const UPoly& m) {
    UPoly r = UPoly::constant(Fq::one(m.field())) % m;
    UPoly b = base % m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, b, m);
        e >>= 1;
        if (e) b = mulmod(b, b, m);
    }
    return r;
}

bool is_squarefree(const UPoly& f) {
    if (f.degree() <= 0) return true;
    UPoly d = f.derivative();
    if (d.is_zero()) return false;
    return gcd(f, d).degree() == 0;
}

bool is_irreducible(const UPoly& f) {
    const int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const u128 q = f.field()->order();
    UPoly fm = f.monic();
    UPoly x = UPoly::monomial(Fq::one(f.field()), 1);
    // frob[i] = x^{q^i} mod f
    std::vector<UPoly> frob{x % fm};
    for (int i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), q, fm));
    if (!(frob[n] - x % fm).is_zero()) return false;
    for (auto r : prime_factors(static_cast<std::uint64_t>(n))) {
        if (gcd(fm, frob[n / r] - x).degree() != 0) return false;
    }
    return true;
}

namespace {

UPoly pth_root_poly(const UPoly& f) {
    const std::uint32_t p = f.field()->p();
    std::vector<Fq> v;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(f.coeffs()[i].pth_root());
    return UPoly(f.field(), std::move(v));
}

}  // namespace

std::vector<FactorPower> squarefree_decomposition(const UPoly& input) {
    if (input.is_zero()) throw Error(ErrorCode::ZeroInput, "squarefree decomposition of 0");
    std::vector<FactorPower> out;
    UPoly f = input.monic();
    if (f.degree() <= 0) return out;
    const unsigned p = f.field()->p();
    UPoly d = f.derivative();
    if (d.is_zero()) {
        for (auto& fp : squarefree_decomposition(pth_root_poly(f))) out.push_back({fp.factor, fp.exponent * p});
        return out;
    }
    UPoly c = gcd(f, d);
    UPoly w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        UPoly y = gcd(w, c);
        UPoly z = w / y;
        if (z.degree() > 0) out.push_back({z.monic(), i});
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) {
        for (auto& fp : squarefree_decomposition(pth_root_poly(c.monic())))
            out.push_back({fp.factor, fp.exponent * p});
    }
    std::sort(out.begin(), out.end(), [](const FactorPower& a, const FactorPower& b) { return a.exponent < b.exponent; });
    return out;
}

UPoly squarefree_part(const UPoly& f) {
    UPoly r = UPoly::constant(Fq::one(f.field()));
    for (auto& fp : squarefree_decomposition(f)) r *= fp.factor;
    return r;
}

std::vector<std::pair<UPoly, unsigned>> distinct_degree_factorization(const UPoly& f) {
    std::vector<std::pair<UPoly, unsigned>> out;
    const u128 q = f.field()->order();
    UPoly rest = f.monic();
    UPoly x = UPoly::monomial(Fq::one(f.field()), 1);
    UPoly h = x % rest;
    unsigned i = 1;
    while (rest.degree() >= 2 * static_cast<int>(i)) {
        h = powmod(h, q, rest);
        UPoly g = gcd(rest, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            rest = rest / g;
            h = h % rest;
        }
        ++i;
    }
    if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
    return out;
}

std::vector<UPoly> equal_degree_factorization(const UPoly& f, unsigned d, std::mt19937_64& rng) {
    if (f.degree() == static_cast<int>(d)) return {f.monic()};
    if (f.degree() < static_cast<int>(d) || f.degree() % d != 0)
        throw Error(ErrorCode::InvalidArgument, "equal-degree factorization: degree mismatch");
    Field fld = f.field();
    const u128 q = fld->order();
    const unsigned p = fld->p();
    for (;;) {
        std::vector<Fq> rc;
        for (int i = 0; i < f.degree(); ++i) rc.push_back(Fq::random(fld, rng));
        UPoly a(fld, std::move(rc));
        if (a.degree() <= 0) continue;
        UPoly g;
        if (p != 2) {
            UPoly acc = a % f, t = a % f;
            for (unsigned i = 1; i < d; ++i) {
                t = powmod(t, q, f);
                acc = mulmod(acc, t, f);
            }
            UPoly b = powmod(acc, (q - 1) / 2, f);
            g = gcd(f, b - UPoly::constant(Fq::one(fld)));
        } else {
            UPoly tr = a % f, t = a % f;
            for (unsigned i = 1; i < fld->k() * d; ++i) {
                t = mulmod(t, t, f);
                tr += t;
            }
            g = gcd(f, tr);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            auto left = equal_degree_factorization(g, d, rng);
            auto right = equal_degree_factorization((f / g).monic(), d, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

namespace {

bool poly_less(const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        auto c = a.coeffs()[i] <=> b.coeffs()[i];
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace

std::vector<FactorPower> factor(const UPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "factorization of 0");
    std::mt19937_64 rng(seed);
    std::vector<FactorPower> out;
    for (auto& sq : squarefree_decomposition(f)) {
        for (auto& [g, d] : distinct_degree_factorization(sq.factor)) {
            for (auto& h : equal_degree_factorization(g, d, rng)) out.push_back({h, sq.exponent});
        }
    }
    std::sort(out.begin(), out.end(), [](const FactorPower& a, const FactorPower& b) {
        if (poly_less(a.factor, b.factor)) return true;
        if (poly_less(b.factor, a.factor)) return false;
        return a.exponent < b.exponent;
    });
    return out;
}

std::vector<Fq> roots_in_field(const UPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "roots of 0");
    std::vector<Fq> out;
    if (f.degree() <= 0) return out;
    UPoly fm = f.monic();
    UPoly x = UPoly::monomial(Fq::one(f.field()), 1);
    UPoly g = gcd(fm, powmod(x, f.field()->order(), fm) - x);
    if (g.degree() <= 0) return out;
    std::mt19937_64 rng(seed);
    for (auto& lin : equal_degree_factorization(g, 1, rng)) out.push_back(-lin.coeffs()[0]);
    std::sort(out.begin(), out.end());
    return out;
}

unsigned splitting_degree(const UPoly& f) {
    unsigned s = 1;
    for (auto& sq : squarefree_decomposition(f))
        for (auto& dd : distinct_degree_factorization(sq.factor)) s = std::lcm(s, dd.second);
    return s;
}

unsigned RootMultiset::total_multiplicity() const {
    unsigned t = 0;
    for (auto& r : roots) t += r.second;
    return t;
}

RootMultiset splitting_roots(const UPoly& f, unsigned ext_cap) {
    if (f.is_zero() || f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "splitting_roots needs degree >= 1");
    const unsigned s = splitting_degree(f);
    if (s > ext_cap)
        throw Error(ErrorCode::ExtensionCapExceeded,
                    "splitting degree " + std::to_string(s) + " exceeds cap " + std::to_string(ext_cap));
    RootMultiset rm;
    rm.ext = extension_field(f.field(), s);
    for (auto& sq : squarefree_decomposition(f)) {
        for (auto& r : roots_in_field(sq.factor.embed(rm.ext))) rm.roots.emplace_back(r, sq.exponent);
    }
    std::sort(rm.roots.begin(), rm.roots.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return rm;
}

Fq resultant(const UPoly& a_in, const UPoly& b_in) {
    Field f = a_in.field() ? a_in.field() : b_in.field();
    if (a_in.is_zero() || b_in.is_zero()) return Fq::zero(f);
    UPoly a = a_in, b = b_in;
    // Sylvester matrix with the rows of b on top: Res(t-a, t-b) = b-a.
    Fq acc = (a.degree() * b.degree()) % 2 ? -Fq::one(f) : Fq::one(f);
    for (;;) {
        const int da = a.degree(), db = b.degree();
        if (db == 0) return acc * b.lead().pow(static_cast<u128>(da));
        UPoly r = a % b;
        if (r.is_zero()) return Fq::zero(f);
        const int dr = r.degree();
        if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
        acc *= b.lead().pow(static_cast<u128>(da - dr));
        a = std::move(b);
        b = std::move(r);
    }
}

}  // namespace galpoint
