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

#include "galpoint/projective.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace galpoint {

namespace {

std::size_t hash_mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

Field same_field(const std::vector<Fq>& v) {
    Field f = v.at(0).field();
    for (const auto& x : v)
        if (x.field() != f) throw Error(ErrorCode::IncompatibleFields, "mixed fields in coordinates");
    return f;
}

// Scales v so that its first nonzero entry is 1. Returns false if v is zero.
bool normalize_vector(std::vector<Fq>& v) {
    auto it = std::find_if(v.begin(), v.end(), [](const Fq& x) { return !x.is_zero(); });
    if (it == v.end()) return false;
    if (!it->is_one()) {
        Fq inv = it->inverse();
        for (auto& x : v) x *= inv;
    }
    return true;
}

std::vector<Fq> embed_all(Field dst, const std::vector<Fq>& v) {
    std::vector<Fq> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(embed(dst, x));
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

ProjPoint::ProjPoint(std::vector<Fq> coords) : c_(std::move(coords)) {
    if (c_.size() != 2 && c_.size() != 3) throw Error(ErrorCode::DimensionMismatch, "points have 2 or 3 coordinates");
    same_field(c_);
    if (!normalize_vector(c_)) throw Error(ErrorCode::InvalidArgument, "all-zero homogeneous coordinates");
}

ProjPoint ProjPoint::embed(Field dst) const {
    if (field() == dst) return *this;
    ProjPoint r;
    r.c_ = embed_all(dst, c_);
    return r;
}

std::string ProjPoint::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? ":" : "") + c_[i].to_string();
    return s + ")";
}

std::size_t ProjPoint::hash() const noexcept {
    std::size_t h = c_.size();
    for (const auto& x : c_) h = hash_mix(h, x.hash());
    return h;
}

bool operator<(const ProjPoint& a, const ProjPoint& b) noexcept {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    if (a.field() != b.field()) return a.field()->k() < b.field()->k();
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end(),
                                        [](const Fq& x, const Fq& y) { return x.index() < y.index(); });
}

ProjLine::ProjLine(std::vector<Fq> coeffs) {
    if (coeffs.size() != 3) throw Error(ErrorCode::DimensionMismatch, "lines of P^2 have 3 coefficients");
    c_ = ProjPoint(std::move(coeffs));
}

ProjLine ProjLine::through(const ProjPoint& p0, const ProjPoint& q0) {
    if (p0.dim() != 3 || q0.dim() != 3) throw Error(ErrorCode::DimensionMismatch, "line through points of P^2");
    Field f = common_field(p0.field(), q0.field());
    ProjPoint p = p0.embed(f), q = q0.embed(f);
    if (p == q) throw Error(ErrorCode::InvalidArgument, "line through a single point");
    return ProjLine({p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]});
}

bool ProjLine::contains(const ProjPoint& x0) const {
    Field f = common_field(field(), x0.field());
    ProjPoint x = x0.embed(f);
    Fq s = Fq::zero(f);
    for (int i = 0; i < 3; ++i) s += embed(f, coeffs()[i]) * x[i];
    return s.is_zero();
}

std::string ProjLine::to_string() const { return "[" + c_.to_string().substr(1, c_.to_string().size() - 2) + "]"; }

ProjPoint intersection(const ProjLine& a, const ProjLine& b) {
    Field f = common_field(a.field(), b.field());
    auto u = embed_all(f, a.coeffs()), v = embed_all(f, b.coeffs());
    std::vector<Fq> x{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
    if (std::all_of(x.begin(), x.end(), [](const Fq& c) { return c.is_zero(); }))
        throw Error(ErrorCode::InvalidArgument, "intersection of equal lines");
    return ProjPoint(std::move(x));
}

// ---------------------------------------------------------------------------

namespace {

// Gauss-Jordan on [m | 1]; nullopt when m is singular.
std::optional<std::vector<Fq>> invert(int n, std::vector<Fq> m) {
    Field f = m[0].field();
    std::vector<Fq> r(n * n, Fq::zero(f));
    for (int i = 0; i < n; ++i) r[i * n + i] = Fq::one(f);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && m[piv * n + col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        for (int j = 0; j < n; ++j) {
            std::swap(m[piv * n + j], m[col * n + j]);
            std::swap(r[piv * n + j], r[col * n + j]);
        }
        const Fq inv = m[col * n + col].inverse();
        for (int j = 0; j < n; ++j) {
            m[col * n + j] *= inv;
            r[col * n + j] *= inv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || m[i * n + col].is_zero()) continue;
            const Fq k = m[i * n + col];
            for (int j = 0; j < n; ++j) {
                m[i * n + j] -= k * m[col * n + j];
                r[i * n + j] -= k * r[col * n + j];
            }
        }
    }
    return r;
}

bool singular(int n, const std::vector<Fq>& m) {
    if (n == 2) return (m[0] * m[3] - m[1] * m[2]).is_zero();
    if (n == 3)
        return (m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) + m[2] * (m[3] * m[7] - m[4] * m[6])).is_zero();
    return !invert(n, m).has_value();
}

}  // namespace

Projectivity::Projectivity(int n, std::vector<Fq> rows) : n_(n), m_(std::move(rows)) {
    if (n < 2 || n > 4 || static_cast<int>(m_.size()) != n * n)
        throw Error(ErrorCode::DimensionMismatch, "projectivities are 2x2, 3x3 or 4x4");
    same_field(m_);
    if (singular(n_, m_)) throw Error(ErrorCode::InvalidArgument, "singular matrix");
    normalize_vector(m_);
}

Projectivity Projectivity::identity(Field f, int n) {
    std::vector<Fq> m(n * n, Fq::zero(f));
    for (int i = 0; i < n; ++i) m[i * n + i] = Fq::one(f);
    return Projectivity(n, std::move(m));
}

Projectivity Projectivity::mobius(const Fq& a, const Fq& b, const Fq& c, const Fq& d) {
    return Projectivity(2, {a, b, c, d});
}

bool Projectivity::is_identity() const noexcept {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    return true;
}

Projectivity Projectivity::inverse() const {
    const auto& m = m_;
    if (n_ == 2) return Projectivity(2, {m[3], -m[1], -m[2], m[0]});
    if (n_ == 4) return Projectivity(4, *invert(4, m));
    auto c = [&](int r0, int r1, int c0, int c1) { return m[r0 * 3 + c0] * m[r1 * 3 + c1] - m[r0 * 3 + c1] * m[r1 * 3 + c0]; };
    // adjugate: entry (i, j) is the (j, i) cofactor
    return Projectivity(3, {c(1, 2, 1, 2), -c(0, 2, 1, 2), c(0, 1, 1, 2),
                            -c(1, 2, 0, 2), c(0, 2, 0, 2), -c(0, 1, 0, 2),
                            c(1, 2, 0, 1), -c(0, 2, 0, 1), c(0, 1, 0, 1)});
}

std::uint64_t Projectivity::order(std::uint64_t cap) const {
    Projectivity g = *this;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        if (g.is_identity()) return k;
        g = g * *this;
    }
    throw Error(ErrorCode::ClosureCapExceeded, "element order exceeds cap");
}

Projectivity Projectivity::embed(Field dst) const {
    if (field() == dst) return *this;
    Projectivity r;
    r.n_ = n_;
    r.m_ = embed_all(dst, m_);
    return r;
}

std::string Projectivity::to_string() const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
        s += i ? ",[" : "[";
        for (int j = 0; j < n_; ++j) s += (j ? "," : "") + at(i, j).to_string();
        s += "]";
    }
    return s + "]";
}

std::size_t Projectivity::hash() const noexcept {
    std::size_t h = static_cast<std::size_t>(n_);
    for (const auto& x : m_) h = hash_mix(h, x.hash());
    return h;
}

Projectivity operator*(const Projectivity& g0, const Projectivity& h0) {
    if (g0.n_ != h0.n_) throw Error(ErrorCode::DimensionMismatch, "composing projectivities of different size");
    const Projectivity* g = &g0;
    const Projectivity* h = &h0;
    Projectivity ge, he;
    if (g0.field() != h0.field()) {
        Field f = common_field(g0.field(), h0.field());
        ge = g0.embed(f);
        he = h0.embed(f);
        g = &ge;
        h = &he;
    }
    const int n = g->n_;
    std::vector<Fq> m(n * n, Fq::zero(g->field()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Fq s = g->at(i, 0) * h->at(0, j);
            for (int k = 1; k < n; ++k) s += g->at(i, k) * h->at(k, j);
            m[i * n + j] = s;
        }
    Projectivity r;
    r.n_ = n;
    r.m_ = std::move(m);
    normalize_vector(r.m_);
    return r;
}

ProjPoint apply(const Projectivity& g0, const ProjPoint& x0) {
    if (g0.n() != x0.dim()) throw Error(ErrorCode::DimensionMismatch, "projectivity and point dimensions differ");
    Field f = g0.field() == x0.field() ? g0.field() : common_field(g0.field(), x0.field());
    Projectivity g = g0.embed(f);
    ProjPoint x = x0.embed(f);
    const int n = g.n();
    std::vector<Fq> y;
    for (int i = 0; i < n; ++i) {
        Fq s = Fq::zero(f);
        for (int j = 0; j < n; ++j) s += g.at(i, j) * x[j];
        y.push_back(s);
    }
    return ProjPoint(std::move(y));
}

Projectivity conjugate(const Projectivity& g, const Projectivity& h) { return h * g * h.inverse(); }

// ---------------------------------------------------------------------------

FiniteProjectivityGroup FiniteProjectivityGroup::trivial(Field f, int n) {
    FiniteProjectivityGroup g;
    g.elems_.push_back(Projectivity::identity(f, n));
    g.index_.emplace(g.elems_[0], 0);
    return g;
}

bool FiniteProjectivityGroup::contains(const Projectivity& g) const {
    if (g.field() == field()) return index_.count(g) > 0;
    if (g.field()->p() != field()->p() || field()->k() % g.field()->k() != 0) return false;
    return index_.count(g.embed(field())) > 0;
}

FiniteProjectivityGroup FiniteProjectivityGroup::embed(Field dst) const {
    if (dst == field()) return *this;
    FiniteProjectivityGroup r;
    for (const auto& e : elems_) {
        r.index_.emplace(e.embed(dst), r.elems_.size());
        r.elems_.push_back(e.embed(dst));
    }
    for (const auto& g : gens_) r.gens_.push_back(g.embed(dst));
    return r;
}

FiniteProjectivityGroup generate_group(const std::vector<Projectivity>& gens0, std::size_t cap) {
    if (gens0.empty()) throw Error(ErrorCode::InvalidArgument, "generate_group needs at least one generator");
    Field f = gens0[0].field();
    for (const auto& g : gens0) {
        if (g.n() != gens0[0].n()) throw Error(ErrorCode::DimensionMismatch, "generators of different size");
        f = common_field(f, g.field());
    }
    FiniteProjectivityGroup G = FiniteProjectivityGroup::trivial(f, gens0[0].n());
    for (const auto& g : gens0) {
        Projectivity e = g.embed(f);
        if (std::find(G.gens_.begin(), G.gens_.end(), e) == G.gens_.end()) G.gens_.push_back(e);
    }
    for (std::size_t i = 0; i < G.elems_.size(); ++i) {
        for (const auto& g : G.gens_) {
            Projectivity x = G.elems_[i] * g;
            if (G.index_.count(x)) continue;
            if (G.elems_.size() >= cap) throw Error(ErrorCode::ClosureCapExceeded, "group closure exceeds cap " + std::to_string(cap));
            G.index_.emplace(x, G.elems_.size());
            G.elems_.push_back(std::move(x));
        }
    }
    return G;
}

std::string GroupDescriptor::tag_string() const {
    switch (tag) {
        case GroupTag::Trivial: return "trivial";
        case GroupTag::Cyclic: return "cyclic";
        case GroupTag::Klein: return "klein";
        case GroupTag::ElementaryAbelian:
            return "elementary_abelian(" + std::to_string(p) + "," + std::to_string(e) + ")";
        case GroupTag::S3: return "s3";
        case GroupTag::A4: return "a4";
        case GroupTag::SemidirectPCyclic: return "semidirect_p_cyclic";
        case GroupTag::Other: return "other";
    }
    return "other";
}

FiniteProjectivityGroup descend(const FiniteProjectivityGroup& g, Field base) {
    std::vector<Fq> all;
    for (const auto& x : g.generators()) all.insert(all.end(), x.entries().begin(), x.entries().end());
    Field d = field_of_definition(base, all);
    if (d == g.field()) return g;
    if (g.generators().empty()) return FiniteProjectivityGroup::trivial(d, g.n());
    std::vector<Projectivity> gens;
    for (const auto& x : g.generators()) {
        std::vector<Fq> m;
        for (const auto& v : x.entries()) m.push_back(*restrict_to(d, v));
        gens.emplace_back(x.n(), std::move(m));
    }
    return generate_group(gens, g.order());
}

GroupDescriptor identify_group(const FiniteProjectivityGroup& G) {
    GroupDescriptor d;
    d.order = G.order();
    for (const auto& g : G.elements()) ++d.order_histogram[g.order(d.order)];
    const auto& gens = G.generators();
    for (std::size_t i = 0; i < gens.size() && d.abelian; ++i)
        for (std::size_t j = i + 1; j < gens.size() && d.abelian; ++j) d.abelian = gens[i] * gens[j] == gens[j] * gens[i];

    const std::uint64_t n = d.order;
    auto hist = [&](std::uint64_t k) { auto it = d.order_histogram.find(k); return it == d.order_histogram.end() ? std::size_t{0} : it->second; };
    const auto primes = prime_factors(n);
    if (n == 1) {
        d.tag = GroupTag::Trivial;
    } else if (d.abelian && hist(n) > 0) {
        d.tag = GroupTag::Cyclic;
    } else if (d.abelian && n == 4) {
        d.tag = GroupTag::Klein;
        d.p = 2;
        d.e = 2;
    } else if (d.abelian && primes.size() == 1 && hist(primes[0]) == n - 1) {
        d.tag = GroupTag::ElementaryAbelian;
        d.p = primes[0];
        for (std::uint64_t m = n; m > 1; m /= d.p) ++d.e;
    } else if (!d.abelian && n == 6) {
        d.tag = GroupTag::S3;
    } else if (n == 12 && hist(1) == 1 && hist(2) == 3 && hist(3) == 8) {
        d.tag = GroupTag::A4;
    } else {
        d.tag = GroupTag::Other;
        if (!d.abelian) {
            // Prefer the characteristic when it qualifies.
            std::vector<std::uint64_t> order = primes;
            std::stable_partition(order.begin(), order.end(), [&](std::uint64_t p) { return p == G.field()->p(); });
            for (std::uint64_t p : order) {
                std::uint64_t pe = 1;
                unsigned e = 0;
                while (n % (pe * p) == 0) {
                    pe *= p;
                    ++e;
                }
                const std::uint64_t m = n / pe;
                std::size_t ppow = 0;
                for (const auto& [k, c] : d.order_histogram) {
                    std::uint64_t r = k;
                    while (r % p == 0) r /= p;
                    if (r == 1) ppow += c;
                }
                if (m > 1 && ppow == pe && hist(m) > 0) {
                    d.tag = GroupTag::SemidirectPCyclic;
                    d.p = p;
                    d.e = e;
                    break;
                }
            }
        }
    }
    return d;
}

std::string to_string(ProductClass c) {
    switch (c) {
        case ProductClass::Direct: return "direct";
        case ProductClass::LeftSemidirect: return "left_semidirect";
        case ProductClass::RightSemidirect: return "right_semidirect";
        case ProductClass::Neither: return "neither";
        case ProductClass::NotAProduct: return "not_a_product";
    }
    return "not_a_product";
}

namespace {

bool normal_in(const FiniteProjectivityGroup& H, const std::vector<Projectivity>& conj) {
    for (const auto& j : conj) {
        Projectivity ji = j.inverse();
        for (const auto& h : H.elements())
            if (!H.contains(j * h * ji)) return false;
    }
    return true;
}

}  // namespace

ProductReport product_structure(const FiniteProjectivityGroup& g1_in, const FiniteProjectivityGroup& g2_in, std::size_t cap) {
    if (g1_in.n() != g2_in.n()) throw Error(ErrorCode::DimensionMismatch, "groups act on different spaces");
    Field f = common_field(g1_in.field(), g2_in.field());
    FiniteProjectivityGroup g1 = g1_in.embed(f), g2 = g2_in.embed(f);
    ProductReport r;
    std::vector<Projectivity> gens = g1.generators();
    gens.insert(gens.end(), g2.generators().begin(), g2.generators().end());
    r.joint = gens.empty() ? FiniteProjectivityGroup::trivial(f, g1.n()) : generate_group(gens, cap);

    for (const auto& g : g1.elements()) r.intersection_order += g2.contains(g);
    std::unordered_set<Projectivity> prod;
    r.elementwise_commute = true;
    for (const auto& a : g1.elements())
        for (const auto& b : g2.elements()) {
            Projectivity ab = a * b;
            prod.insert(ab);
            if (r.elementwise_commute && !(ab == b * a)) {
                r.elementwise_commute = false;
                r.noncommuting = std::make_pair(a, b);
            }
        }
    r.product_set_is_joint = prod.size() == r.joint.order();
    r.g1_normal = normal_in(g1, r.joint.generators());
    r.g2_normal = normal_in(g2, r.joint.generators());
    if (r.intersection_order != 1 || !r.product_set_is_joint) r.classification = ProductClass::NotAProduct;
    else if (r.g1_normal && r.g2_normal) r.classification = ProductClass::Direct;
    else if (r.g1_normal) r.classification = ProductClass::LeftSemidirect;
    else if (r.g2_normal) r.classification = ProductClass::RightSemidirect;
    else r.classification = ProductClass::Neither;
    return r;
}

// ---------------------------------------------------------------------------

unsigned PointDivisor::degree() const {
    unsigned d = 0;
    for (const auto& [x, m] : support) d += m;
    return d;
}

unsigned PointDivisor::multiplicity(const ProjPoint& x0) const {
    if (support.empty()) return 0;
    Field f = common_field(support[0].first.field(), x0.field());
    if (f != support[0].first.field()) return embed(f).multiplicity(x0);
    ProjPoint x = x0.embed(f);
    for (const auto& [y, m] : support)
        if (y == x) return m;
    return 0;
}

PointDivisor PointDivisor::embed(Field dst) const {
    PointDivisor r{ambient, {}};
    for (const auto& [x, m] : support) r.support.emplace_back(x.embed(dst), m);
    r.normalize();
    return r;
}

void PointDivisor::normalize() {
    std::sort(support.begin(), support.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<ProjPoint, unsigned>> merged;
    for (auto& [x, m] : support) {
        if (!merged.empty() && merged.back().first == x) merged.back().second += m;
        else merged.emplace_back(x, m);
    }
    support = std::move(merged);
}

std::string PointDivisor::to_string() const {
    std::string s;
    for (const auto& [x, m] : support) {
        if (!s.empty()) s += " + ";
        if (m != 1) s += std::to_string(m) + "*";
        s += x.to_string();
    }
    return s.empty() ? "0" : s;
}

PointDivisor orbit(const FiniteProjectivityGroup& G0, const ProjPoint& x0) {
    Field f = common_field(G0.field(), x0.field());
    FiniteProjectivityGroup G = G0.embed(f);
    ProjPoint x = x0.embed(f);
    PointDivisor d{x.dim(), {}};
    for (const auto& g : G.elements()) d.support.emplace_back(apply(g, x), 1);
    d.normalize();
    return d;
}

std::vector<Projectivity> enumerate_pgl2(Field f) {
    std::vector<Projectivity> out;
    const u128 q = f->order();
    if (q > 64 * 64) throw Error(ErrorCode::InvalidArgument, "PGL(2) enumeration limited to q <= 4096");
    std::vector<Fq> all;
    for (u128 i = 0; i < q; ++i) all.push_back(Fq::from_index(f, i));
    const Fq one = Fq::one(f), zero = Fq::zero(f);
    for (const auto& b : all)
        for (const auto& c : all)
            for (const auto& d : all)
                if (!(d - b * c).is_zero()) out.push_back(Projectivity::mobius(one, b, c, d));
    for (const auto& c : all) {
        if (c.is_zero()) continue;
        for (const auto& d : all) out.push_back(Projectivity::mobius(zero, one, c, d));
    }
    return out;
}

}  // namespace galpoint
