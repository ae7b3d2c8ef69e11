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

#include "galpoint/gf.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>

#include "galpoint/upoly.hpp"

namespace galpoint {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case ErrorCode::IrreducibleSearchExhausted: return "IrreducibleSearchExhausted";
        case ErrorCode::IncompatibleFields: return "IncompatibleFields";
        case ErrorCode::PDividesN: return "PDividesN";
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::ExtensionCapExceeded: return "ExtensionCapExceeded";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ClosureCapExceeded: return "ClosureCapExceeded";
        case ErrorCode::NotSquarefree: return "NotSquarefree";
        case ErrorCode::DegenerateElimination: return "DegenerateElimination";
        case ErrorCode::LineIsComponent: return "LineIsComponent";
        case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
        case ErrorCode::PointSingular: return "PointSingular";
        case ErrorCode::CenterSingular: return "CenterSingular";
        case ErrorCode::AllSpecializationsRamified: return "AllSpecializationsRamified";
        case ErrorCode::BruteCapExceeded: return "BruteCapExceeded";
        case ErrorCode::ExactModeDegenerate: return "ExactModeDegenerate";
        case ErrorCode::DegenerateFibers: return "DegenerateFibers";
        case ErrorCode::LadderExhausted: return "LadderExhausted";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::ConditionBFails: return "ConditionBFails";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
        case ErrorCode::FieldTooSmall: return "FieldTooSmall";
        case ErrorCode::NotSubgroup: return "NotSubgroup";
        case ErrorCode::ScalingUnstable: return "ScalingUnstable";
        case ErrorCode::DegenerateOnly: return "DegenerateOnly";
    }
    return "Unknown";
}

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx::FieldCtx(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)), order_(1) {
    for (unsigned i = 0; i < k; ++i) order_ *= p;
}

std::string FieldCtx::spec() const { return std::to_string(p_) + "^" + std::to_string(k_); }

namespace {

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<FieldCtx>>& registry() {
    static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<FieldCtx>> r;
    return r;
}

Field lookup(std::uint64_t p, unsigned k) {
    std::lock_guard lock(registry_mutex());
    auto it = registry().find({p, k});
    return it == registry().end() ? nullptr : it->second.get();
}

Field intern(std::uint64_t p, unsigned k, std::vector<std::uint32_t> modulus) {
    std::lock_guard lock(registry_mutex());
    auto& slot = registry()[{p, k}];
    if (!slot) slot = std::make_unique<FieldCtx>(static_cast<std::uint32_t>(p), k, std::move(modulus));
    return slot.get();
}

constexpr std::uint64_t kModulusAttemptBudget = 50'000'000;

}  // namespace

Field make_field(std::uint64_t p, unsigned k) {
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
    if (p >= (1ULL << 31)) throw Error(ErrorCode::InvalidArgument, "characteristic must be below 2^31");
    if (!is_prime(p)) throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    {
        long double bits = static_cast<long double>(k) * std::log2(static_cast<long double>(p));
        if (bits > 120) throw Error(ErrorCode::InvalidArgument, "field order exceeds 2^120");
    }
    if (Field f = lookup(p, k)) return f;
    if (k == 1) return intern(p, 1, {0, 1});

    Field prime = make_field(p, 1);
    // Candidates x^k + c_{k-1} x^{k-1} + ... + c_0, enumerated by sum c_i p^i.
    std::vector<Fq> coeffs(k + 1, Fq::zero(prime));
    coeffs[k] = Fq::one(prime);
    std::vector<std::uint32_t> digits(k, 0);
    for (std::uint64_t attempt = 0; attempt < kModulusAttemptBudget; ++attempt) {
        if (digits[0] != 0) {  // constant term 0 means divisible by x
            for (unsigned i = 0; i < k; ++i) coeffs[i] = Fq(prime, digits[i]);
            UPoly cand(prime, coeffs);
            if (is_irreducible(cand)) {
                std::vector<std::uint32_t> mod(digits.begin(), digits.end());
                mod.push_back(1);
                return intern(p, k, std::move(mod));
            }
        }
        unsigned i = 0;
        while (i < k && ++digits[i] == p) digits[i++] = 0;
        if (i == k) break;
    }
    throw Error(ErrorCode::IrreducibleSearchExhausted,
                "no irreducible modulus of degree " + std::to_string(k) + " over F_" + std::to_string(p));
}

Field parse_field_spec(std::string_view spec) {
    auto parse_num = [&](std::string_view s) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw Error(ErrorCode::ParseError, "bad field spec '" + std::string(spec) + "'");
        return v;
    };
    auto caret = spec.find('^');
    if (caret == std::string_view::npos) return make_field(parse_num(spec), 1);
    std::uint64_t k = parse_num(spec.substr(caret + 1));
    if (k == 0 || k > 1000) throw Error(ErrorCode::ParseError, "bad extension degree in '" + std::string(spec) + "'");
    return make_field(parse_num(spec.substr(0, caret)), static_cast<unsigned>(k));
}

Field extension_field(Field base, unsigned rel_degree) { return make_field(base->p(), base->k() * rel_degree); }

Field common_field(Field a, Field b) {
    if (a == b) return a;
    if (a->p() != b->p()) throw Error(ErrorCode::IncompatibleFields, a->spec() + " vs " + b->spec());
    return make_field(a->p(), std::lcm(a->k(), b->k()));
}

// ---------------------------------------------------------------------------
// Fq

Fq::Fq(Field f, std::int64_t v) : f_(f), c_(f->k(), 0) {
    std::int64_t p = f->p();
    std::int64_t r = v % p;
    if (r < 0) r += p;
    c_[0] = static_cast<std::uint32_t>(r);
}

Fq Fq::from_coeffs(Field f, Coeffs c) {
    if (c.size() != f->k()) throw Error(ErrorCode::InvalidArgument, "coefficient vector length != field degree");
    Fq a;
    a.f_ = f;
    for (auto& x : c) x %= f->p();
    a.c_ = std::move(c);
    return a;
}

Fq Fq::from_index(Field f, u128 idx) {
    Fq a = zero(f);
    for (unsigned i = 0; i < f->k(); ++i) {
        a.c_[i] = static_cast<std::uint32_t>(idx % f->p());
        idx /= f->p();
    }
    return a;
}

Fq Fq::generator(Field f) {
    if (f->k() == 1) return zero(f);  // modulus is "a"
    Fq a = zero(f);
    a.c_[1] = 1;
    return a;
}

Fq Fq::random(Field f, std::mt19937_64& rng) {
    Fq a = zero(f);
    std::uniform_int_distribution<std::uint32_t> dist(0, f->p() - 1);
    for (auto& x : a.c_) x = dist(rng);
    return a;
}

u128 Fq::index() const noexcept {
    u128 v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * f_->p() + c_[i];
    return v;
}

bool Fq::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
}

bool Fq::is_one() const noexcept {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t x) { return x == 0; });
}

bool Fq::in_prime_field() const noexcept {
    return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t x) { return x == 0; });
}

void Fq::check_same(const Fq& o) const {
    if (f_ != o.f_) {
        throw Error(ErrorCode::IncompatibleFields,
                    std::string("mixed-field arithmetic: ") + (f_ ? f_->spec() : "null") + " vs " +
                        (o.f_ ? o.f_->spec() : "null"));
    }
}

Fq Fq::operator-() const {
    Fq r = *this;
    const std::uint32_t p = f_->p();
    for (auto& x : r.c_) x = x == 0 ? 0 : p - x;
    return r;
}

Fq& Fq::operator+=(const Fq& o) {
    check_same(o);
    const std::uint32_t p = f_->p();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(c_[i]) + o.c_[i];
        c_[i] = static_cast<std::uint32_t>(s >= p ? s - p : s);
    }
    return *this;
}

Fq& Fq::operator-=(const Fq& o) {
    check_same(o);
    const std::uint32_t p = f_->p();
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
    return *this;
}

Fq& Fq::operator*=(const Fq& o) {
    check_same(o);
    const std::uint64_t p = f_->p();
    const unsigned k = f_->k();
    if (k == 1) {
        c_[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c_[0]) * o.c_[0] % p);
        return *this;
    }
    boost::container::small_vector<std::uint64_t, 12> t(2 * k - 1, 0);
    for (unsigned i = 0; i < k; ++i) {
        if (c_[i] == 0) continue;
        for (unsigned j = 0; j < k; ++j) t[i + j] += static_cast<std::uint64_t>(c_[i]) * o.c_[j] % p;
    }
    const auto& m = f_->modulus();
    for (unsigned i = 2 * k - 2; i >= k; --i) {
        std::uint64_t c = t[i] % p;
        if (c == 0) continue;
        std::uint64_t neg = p - c;
        for (unsigned j = 0; j < k; ++j)
            if (m[j]) t[i - k + j] = (t[i - k + j] + neg * m[j]) % p;
    }
    for (unsigned i = 0; i < k; ++i) c_[i] = static_cast<std::uint32_t>(t[i] % p);
    return *this;
}

Fq Fq::inverse() const {
    if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
    if (f_->k() == 1) {
        std::int64_t a = c_[0], m = f_->p(), x0 = 1, x1 = 0;
        while (m != 0) {
            std::int64_t q = a / m;
            std::tie(a, m) = std::make_pair(m, a - q * m);
            std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
        }
        return Fq(f_, x0);
    }
    // extended Euclid on F_p[x] against the modulus
    using Vec = std::vector<std::uint64_t>;
    const std::uint64_t p = f_->p();
    auto mul = [p](std::uint64_t a, std::uint64_t b) { return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p); };
    auto inv = [&](std::uint64_t a) { return Fq(make_field(p, 1), static_cast<std::int64_t>(a)).inverse().c_[0]; };
    auto trim = [](Vec& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    Vec r0(f_->modulus().begin(), f_->modulus().end()), r1(c_.begin(), c_.end()), s0, s1{1};
    trim(r1);
    while (r1.size() > 1) {
        Vec q(r0.size() - r1.size() + 1, 0);
        const std::uint64_t li = inv(r1.back());
        for (std::size_t i = r0.size(); i-- >= r1.size();) {
            const std::uint64_t c = mul(r0[i], li);
            q[i - r1.size() + 1] = c;
            if (c)
                for (std::size_t j = 0; j < r1.size(); ++j) {
                    std::size_t t = i - r1.size() + 1 + j;
                    r0[t] = (r0[t] + p - mul(c, r1[j])) % p;
                }
        }
        trim(r0);
        // s0 - q s1
        Vec ns(std::max(s0.size(), q.size() + s1.size() - 1), 0);
        for (std::size_t i = 0; i < s0.size(); ++i) ns[i] = s0[i];
        for (std::size_t i = 0; i < q.size(); ++i)
            if (q[i])
                for (std::size_t j = 0; j < s1.size(); ++j) ns[i + j] = (ns[i + j] + p - mul(q[i], s1[j])) % p;
        trim(ns);
        std::swap(r0, r1);
        s0 = std::move(s1);
        s1 = std::move(ns);
    }
    const std::uint64_t li = inv(r1[0]);
    Coeffs out(f_->k(), 0);
    for (std::size_t i = 0; i < s1.size(); ++i) out[i] = static_cast<std::uint32_t>(mul(s1[i], li));
    return from_coeffs(f_, out);
}

Fq Fq::pow(u128 e) const {
    Fq result = one(f_);
    Fq base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Fq Fq::pth_root() const { return pow(f_->order() / f_->p()); }

std::strong_ordering operator<=>(const Fq& a, const Fq& b) noexcept {
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
    }
    return std::strong_ordering::equal;
}

std::string Fq::to_string() const {
    if (f_->k() == 1) return std::to_string(c_[0]);
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += '+';
        if (i == 0) {
            s += std::to_string(c_[i]);
            continue;
        }
        if (c_[i] != 1) s += std::to_string(c_[i]) + "*";
        s += "a";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

std::size_t Fq::hash() const noexcept {
    std::size_t h = std::hash<const void*>{}(f_);
    for (auto x : c_) h = h * 1000003u ^ x;
    return h;
}

// ---------------------------------------------------------------------------
// Embeddings and roots of unity

Fq embed(Field dst, const Fq& a) {
    Field src = a.field();
    if (src == dst) return a;
    if (src->p() != dst->p() || dst->k() % src->k() != 0)
        throw Error(ErrorCode::IncompatibleFields, "cannot embed " + src->spec() + " into " + dst->spec());
    if (src->k() == 1) return Fq(dst, a.coeffs()[0]);

    static std::mutex cache_mutex;
    static std::map<std::pair<Field, Field>, Fq> cache;
    Fq image;
    {
        std::lock_guard lock(cache_mutex);
        auto it = cache.find({src, dst});
        if (it != cache.end()) image = it->second;
    }
    if (image.field() == nullptr) {
        std::vector<Fq> mod;
        for (auto c : src->modulus()) mod.emplace_back(dst, c);
        auto roots = roots_in_field(UPoly(dst, std::move(mod)));
        if (roots.empty()) throw Error(ErrorCode::IncompatibleFields, "modulus has no root in " + dst->spec());
        image = roots.front();
        std::lock_guard lock(cache_mutex);
        cache.emplace(std::make_pair(src, dst), image);
    }
    Fq r = Fq::zero(dst);
    for (std::size_t i = a.coeffs().size(); i-- > 0;) r = r * image + Fq(dst, a.coeffs()[i]);
    return r;
}

std::optional<Fq> restrict_to(Field sub, const Fq& a) {
    Field dst = a.field();
    if (sub == dst) return a;
    if (sub->p() != dst->p() || dst->k() % sub->k() != 0)
        throw Error(ErrorCode::IncompatibleFields, sub->spec() + " is not a subfield of " + dst->spec());
    // Solve sum_i c_i embed(g^i) = a over F_p, columns are the basis images.
    const std::uint64_t p = dst->p();
    const unsigned n = dst->k(), m = sub->k();
    std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(m + 1, 0));
    Fq gen = m == 1 ? Fq::one(sub) : Fq::generator(sub);
    Fq b = Fq::one(sub);
    for (unsigned j = 0; j < m; ++j, b *= gen) {
        Fq img = embed(dst, b);
        for (unsigned i = 0; i < img.coeffs().size(); ++i) rows[i][j] = img.coeffs()[i];
    }
    for (unsigned i = 0; i < a.coeffs().size(); ++i) rows[i][m] = a.coeffs()[i];
    auto mulmod = [p](std::uint64_t x, std::uint64_t y) { return static_cast<std::uint64_t>(static_cast<u128>(x) * y % p); };
    auto inv = [&](std::uint64_t x) { return Fq(make_field(p, 1), static_cast<std::int64_t>(x)).inverse().coeffs()[0]; };
    unsigned r = 0;
    std::vector<unsigned> pivots;
    for (unsigned c = 0; c < m && r < n; ++c) {
        unsigned piv = r;
        while (piv < n && rows[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(rows[r], rows[piv]);
        std::uint64_t s = inv(rows[r][c]);
        for (auto& x : rows[r]) x = mulmod(x, s);
        for (unsigned i = 0; i < n; ++i)
            if (i != r && rows[i][c] != 0) {
                std::uint64_t t = rows[i][c];
                for (unsigned j = 0; j <= m; ++j) rows[i][j] = (rows[i][j] + p - mulmod(t, rows[r][j])) % p;
            }
        pivots.push_back(c);
        ++r;
    }
    for (unsigned i = r; i < n; ++i)
        if (rows[i][m] != 0) return std::nullopt;
    Fq::Coeffs c(m, 0);
    for (unsigned i = 0; i < r; ++i) c[pivots[i]] = static_cast<std::uint32_t>(rows[i][m]);
    return Fq::from_coeffs(sub, c);
}

Field field_of_definition(Field base, const std::vector<Fq>& xs) {
    if (xs.empty()) return base;
    Field top = xs.front().field();
    const unsigned rel = top->k() / base->k();
    for (unsigned d = 1; d <= rel; ++d) {
        if (rel % d) continue;
        const u128 q = base->order();
        u128 qd = 1;
        for (unsigned i = 0; i < d; ++i) qd *= q;
        if (std::all_of(xs.begin(), xs.end(), [&](const Fq& x) { return embed(top, x).pow(qd) == embed(top, x); }))
            return extension_field(base, d);
    }
    return top;
}

std::optional<Fq> nth_root_of_unity(Field f, std::uint64_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
    if (n % f->p() == 0) throw Error(ErrorCode::PDividesN, std::to_string(f->p()) + " divides " + std::to_string(n));
    const u128 units = f->order() - 1;
    if (units % n != 0) return std::nullopt;
    if (n == 1) return Fq::one(f);
    const u128 e = units / n;
    const auto primes = prime_factors(n);
    for (u128 idx = 1; idx <= units; ++idx) {
        Fq z = Fq::from_index(f, idx).pow(e);
        bool exact = std::all_of(primes.begin(), primes.end(), [&](std::uint64_t r) { return !z.pow(n / r).is_one(); });
        if (exact) return z;
    }
    return std::nullopt;
}

std::vector<Fq> roots_of_unity(Field f, std::uint64_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
    while (n % f->p() == 0) n /= f->p();  // x^{p^a m} = 1 iff x^m = 1
    u128 a = f->order() - 1, b = n;
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    const auto g = static_cast<std::uint64_t>(a);
    Fq z = *nth_root_of_unity(f, g);
    std::vector<Fq> out;
    Fq x = Fq::one(f);
    for (std::uint64_t i = 0; i < g; ++i, x *= z) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t multiplicative_order(const Fq& a) {
    if (a.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero has no multiplicative order");
    const u128 units = a.field()->order() - 1;
    if (units >> 64) throw Error(ErrorCode::InvalidArgument, "field too large for order computation");
    auto ord = static_cast<std::uint64_t>(units);
    for (auto r : prime_factors(ord)) {
        while (ord % r == 0 && a.pow(ord / r).is_one()) ord /= r;
    }
    return ord;
}

std::ostream& operator<<(std::ostream& os, const Fq& a) { return os << a.to_string(); }

}  // namespace galpoint
