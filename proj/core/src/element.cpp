#include "padic/element.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace padic {

namespace {

using u128 = unsigned __int128;

u128 pow_u128(u128 b, std::int64_t e) {
    u128 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

/// Largest N with p^N < 2^126, the safe range for the slow mulmod path.
std::int64_t max_modexp(std::int64_t p) {
    u128 lim = (u128(1) << 126);
    u128 v = 1;
    std::int64_t n = 0;
    while (v < lim / (u128)p) { v *= (u128)p; ++n; }
    return n;
}

u128 mulmod(u128 a, u128 b, u128 m) {
    if (m <= (u128(1) << 63)) return (a % m) * (b % m) % m;
    a %= m; b %= m;
    u128 acc = 0;
    while (b > 0) {
        if (b & 1) { acc += a; if (acc >= m) acc -= m; }
        a += a; if (a >= m) a -= m;
        b >>= 1;
    }
    return acc;
}

u128 addmod(u128 a, u128 b, u128 m) {
    a %= m; b %= m;
    u128 s = a + b;
    if (s >= m) s -= m;
    return s;
}

u128 submod(u128 a, u128 b, u128 m) {
    a %= m; b %= m;
    return a >= b ? a - b : a + (m - b);
}

using XPoly = std::vector<u128>; // degree < f, coefficients mod p^N

struct RingCtx {
    std::int64_t p, f, e, N;
    u128 mod; // p^N
    std::vector<std::int64_t> hpoly; // lower coefficients of the residue polynomial
    XPoly zeta;                      // Teichmueller lift of the Eisenstein unit

    std::int64_t fe() const { return f * e; }
};

void xpoly_reduce(std::vector<u128>& prod, const RingCtx& c) {
    for (size_t i = prod.size(); i-- > (size_t)c.f;) {
        u128 coef = prod[i] % c.mod;
        if (coef == 0) continue;
        prod[i] = 0;
        for (std::int64_t j = 0; j < c.f; ++j) {
            u128 sub = mulmod(coef, (u128)c.hpoly[j], c.mod);
            prod[i - c.f + j] = submod(prod[i - c.f + j] % c.mod, sub, c.mod);
        }
    }
    prod.resize(c.f);
}

XPoly xpoly_mul(const XPoly& a, const XPoly& b, const RingCtx& c) {
    std::vector<u128> prod(2 * c.f - 1, 0);
    for (std::int64_t i = 0; i < c.f; ++i) {
        if (a[i] % c.mod == 0) continue;
        for (std::int64_t j = 0; j < c.f; ++j) {
            if (b[j] % c.mod == 0) continue;
            prod[i + j] = addmod(prod[i + j], mulmod(a[i], b[j], c.mod), c.mod);
        }
    }
    xpoly_reduce(prod, c);
    return prod;
}

XPoly xpoly_pow(XPoly base, std::int64_t n, const RingCtx& c) {
    XPoly r(c.f, 0);
    r[0] = 1 % c.mod;
    while (n > 0) {
        if (n & 1) r = xpoly_mul(r, base, c);
        base = xpoly_mul(base, base, c);
        n >>= 1;
    }
    return r;
}

XPoly xpoly_from_packed(std::int64_t packed, const RingCtx& c) {
    XPoly v(c.f, 0);
    for (std::int64_t i = 0; i < c.f; ++i) { v[i] = (u128)(packed % c.p); packed /= c.p; }
    return v;
}

XPoly teich_lift(std::int64_t residue_index, const RingCtx& c) {
    const auto& R = ResidueField::get(c.p, c.f);
    if (residue_index == ResidueField::ZERO) return XPoly(c.f, 0);
    XPoly t = xpoly_from_packed(R.pack(residue_index), c);
    std::int64_t qf = 1;
    for (std::int64_t i = 0; i < c.f; ++i) qf *= c.p;
    for (std::int64_t iter = 0; iter < c.N + 1; ++iter) t = xpoly_pow(t, qf, c);
    return t;
}

struct TeichKey {
    std::int64_t p, f, N, r;
    bool operator<(const TeichKey& o) const {
        return std::tie(p, f, N, r) < std::tie(o.p, o.f, o.N, o.r);
    }
};

XPoly teich_cached(std::int64_t residue_index, const RingCtx& c) {
    static std::map<TeichKey, XPoly> cache;
    static std::mutex mutex;
    TeichKey k{c.p, c.f, c.N, residue_index};
    std::lock_guard<std::mutex> lk(mutex);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    auto t = teich_lift(residue_index, c);
    cache.emplace(k, t);
    return t;
}

RingCtx make_ctx(const FieldDescriptor& K, std::int64_t N) {
    std::int64_t cap = max_modexp(K.p);
    if (N > cap)
        throw std::domain_error("precision exhausted: coefficient modulus overflow for p=" +
                                std::to_string(K.p));
    RingCtx c;
    c.p = K.p; c.f = K.f; c.e = K.e; c.N = N;
    c.mod = pow_u128((u128)K.p, N);
    const auto& poly = K.residue().defining_poly();
    c.hpoly.assign(poly.begin(), poly.begin() + K.f);
    c.zeta = teich_cached(K.zeta, c);
    return c;
}

std::int64_t ipow64(std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

// ---------------------------------------------------------------------------
// FieldDescriptor

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldDescriptor make_field(std::int64_t p, std::int64_t f, std::int64_t e,
                           std::int64_t zeta_packed) {
    if (!is_prime(p)) throw std::invalid_argument("make_field: p must be prime");
    if (f < 1 || e < 1) throw std::invalid_argument("make_field: f, e must be >= 1");
    FieldDescriptor K;
    K.p = p; K.f = f; K.e = e;
    K.zeta = K.residue().unpack(zeta_packed % ipow64(p, f));
    if (K.zeta == ResidueField::ZERO)
        throw std::invalid_argument("make_field: Eisenstein unit must be nonzero");
    std::ostringstream lab;
    lab << "Q" << p;
    if (f > 1 || e > 1 || K.zeta != 0) {
        lab << "[f=" << f << ",e=" << e;
        if (K.zeta != 0) lab << ",z=" << zeta_packed;
        lab << "]";
    }
    K.label = lab.str();
    return K;
}

bool FieldDescriptor::embeds_in(const FieldDescriptor& target) const {
    if (p != target.p || target.f % f != 0 || target.e % e != 0) return false;
    return ResidueField::embed_index(zeta, f, target.f, p) == target.zeta;
}

std::int64_t FieldDescriptor::degree_in(const FieldDescriptor& target) const {
    if (!embeds_in(target)) throw std::domain_error("not a tower extension");
    return (target.f / f) * (target.e / e);
}

FieldDescriptor compositum(const FieldDescriptor& a, const FieldDescriptor& b) {
    if (a.p != b.p) throw std::domain_error("no common field: different primes");
    std::int64_t f = std::lcm(a.f, b.f), e = std::lcm(a.e, b.e);
    std::int64_t za = ResidueField::embed_index(a.zeta, a.f, f, a.p);
    std::int64_t zb = ResidueField::embed_index(b.zeta, b.f, f, a.p);
    if (za != zb) throw std::domain_error("no common field: incompatible Eisenstein units");
    FieldDescriptor K = make_field(a.p, f, e);
    K.zeta = za;
    return K;
}

// ---------------------------------------------------------------------------
// PadicElement

struct ElementOps {
    static PadicElement make(const FieldDescriptor& K, std::int64_t prec, std::int64_t shift,
                             std::int64_t N, std::vector<u128> coeffs) {
        PadicElement x;
        x.field_ = K;
        x.prec_ = prec;
        x.shift_ = shift;
        x.modexp_ = N;
        x.coeffs_ = std::move(coeffs);
        return x;
    }

    static std::int64_t needed_modexp(const FieldDescriptor& K, std::int64_t ring_prec) {
        if (ring_prec < 0) ring_prec = 0;
        return (ring_prec + K.e - 1) / K.e + 1;
    }

    static std::vector<u128> mul_by_xpoly(const std::vector<u128>& v, const XPoly& s,
                                          const RingCtx& c) {
        std::vector<u128> out(c.fe(), 0);
        for (std::int64_t j = 0; j < c.e; ++j) {
            XPoly part(c.f, 0);
            for (std::int64_t i = 0; i < c.f; ++i) part[i] = v[j * c.f + i] % c.mod;
            part = xpoly_mul(part, s, c);
            for (std::int64_t i = 0; i < c.f; ++i) out[j * c.f + i] = part[i];
        }
        return out;
    }

    /// Multiplies a coefficient vector by pi^k (k >= 0).
    static std::vector<u128> shift_up(const std::vector<u128>& v, std::int64_t k,
                                      const RingCtx& c) {
        std::vector<u128> out(v);
        for (auto& x : out) x %= c.mod;
        std::int64_t kp = k / c.e, kr = k % c.e;
        if (kp > 0) {
            u128 pk = pow_u128((u128)c.p, kp) % c.mod;
            XPoly zk = xpoly_pow(c.zeta, kp, c);
            for (std::int64_t i = 0; i < c.f; ++i) zk[i] = mulmod(zk[i], pk, c.mod);
            out = mul_by_xpoly(out, zk, c);
        }
        if (kr > 0) {
            std::vector<u128> roll(c.fe(), 0);
            for (std::int64_t j = 0; j < c.e; ++j) {
                std::int64_t jj = j + kr;
                if (jj < c.e) {
                    for (std::int64_t i = 0; i < c.f; ++i)
                        roll[jj * c.f + i] = addmod(roll[jj * c.f + i], out[j * c.f + i], c.mod);
                } else {
                    XPoly part(c.f, 0);
                    for (std::int64_t i = 0; i < c.f; ++i) part[i] = out[j * c.f + i];
                    part = xpoly_mul(part, c.zeta, c);
                    for (std::int64_t i = 0; i < c.f; ++i) {
                        u128 val = mulmod(part[i], (u128)c.p, c.mod);
                        roll[(jj - c.e) * c.f + i] =
                            addmod(roll[(jj - c.e) * c.f + i], val, c.mod);
                    }
                }
            }
            out = roll;
        }
        return out;
    }

    static std::vector<u128> ring_mul(const std::vector<u128>& a, const std::vector<u128>& b,
                                      const RingCtx& c) {
        std::vector<XPoly> acc(2 * c.e - 1, XPoly(c.f, 0));
        for (std::int64_t ja = 0; ja < c.e; ++ja) {
            XPoly pa(c.f, 0);
            bool za = true;
            for (std::int64_t i = 0; i < c.f; ++i) {
                pa[i] = a[ja * c.f + i] % c.mod;
                za &= (pa[i] == 0);
            }
            if (za) continue;
            for (std::int64_t jb = 0; jb < c.e; ++jb) {
                XPoly pb(c.f, 0);
                bool zb = true;
                for (std::int64_t i = 0; i < c.f; ++i) {
                    pb[i] = b[jb * c.f + i] % c.mod;
                    zb &= (pb[i] == 0);
                }
                if (zb) continue;
                XPoly prod = xpoly_mul(pa, pb, c);
                for (std::int64_t i = 0; i < c.f; ++i)
                    acc[ja + jb][i] = addmod(acc[ja + jb][i], prod[i], c.mod);
            }
        }
        for (std::int64_t j = 2 * c.e - 2; j >= c.e; --j) {
            XPoly part = xpoly_mul(acc[j], c.zeta, c);
            for (std::int64_t i = 0; i < c.f; ++i) {
                u128 val = mulmod(part[i], (u128)c.p, c.mod);
                acc[j - c.e][i] = addmod(acc[j - c.e][i], val, c.mod);
            }
        }
        std::vector<u128> out(c.fe(), 0);
        for (std::int64_t j = 0; j < c.e; ++j)
            for (std::int64_t i = 0; i < c.f; ++i) out[j * c.f + i] = acc[j][i];
        return out;
    }

    /// Extracts Teichmueller digits of a (reduced) coefficient vector,
    /// indices in [0, limit). Subtracts each digit as it is found so the
    /// positional reads stay exact.
    static std::vector<Digit> ring_digits(std::vector<u128> W, const FieldDescriptor& K,
                                          const RingCtx& c, std::int64_t limit) {
        const auto& R = K.residue();
        std::vector<Digit> out;
        std::int64_t zinv = R.inv(K.zeta);
        for (std::int64_t idx = 0; idx < limit; ++idx) {
            std::int64_t j = idx % c.e, k = idx / c.e;
            if (k >= c.N) break;
            u128 pk = pow_u128((u128)c.p, k);
            std::int64_t packed = 0, mult = 1;
            bool nonzero = false;
            for (std::int64_t i = 0; i < c.f; ++i) {
                std::int64_t layer = (std::int64_t)((W[j * c.f + i] / pk) % (u128)c.p);
                packed += layer * mult;
                mult *= c.p;
                nonzero |= (layer != 0);
            }
            if (!nonzero) continue;
            std::int64_t r = R.unpack(packed);
            if (k > 0) r = R.mul(r, R.pow(zinv, k));
            XPoly t = teich_cached(r, c);
            std::vector<u128> term(c.fe(), 0);
            for (std::int64_t i = 0; i < c.f; ++i) term[i] = t[i];
            term = shift_up(term, idx, c);
            for (std::int64_t ii = 0; ii < c.fe(); ++ii) W[ii] = submod(W[ii], term[ii], c.mod);
            out.push_back({idx, r});
        }
        return out;
    }
};

PadicElement PadicElement::zero(const FieldDescriptor& K, std::int64_t precision) {
    std::int64_t N = ElementOps::needed_modexp(K, precision);
    make_ctx(K, N); // validates the modulus range
    return ElementOps::make(K, precision, 0, N, std::vector<u128>(K.f * K.e, 0));
}

PadicElement PadicElement::from_int(const FieldDescriptor& K, std::int64_t n,
                                    std::int64_t precision) {
    std::int64_t N = ElementOps::needed_modexp(K, precision);
    RingCtx c = make_ctx(K, N);
    std::vector<u128> v(K.f * K.e, 0);
    if (n >= 0) v[0] = (u128)n % c.mod;
    else v[0] = submod(0, (u128)(-n), c.mod);
    return ElementOps::make(K, precision, 0, N, std::move(v));
}

PadicElement PadicElement::teichmuller(const FieldDescriptor& K, std::int64_t residue_index,
                                       std::int64_t precision, std::int64_t index) {
    return from_digits(K, {{index, residue_index}}, precision);
}

PadicElement PadicElement::uniformizer_pow(const FieldDescriptor& K, std::int64_t k,
                                           std::int64_t precision) {
    return from_digits(K, {{k, 0}}, precision); // residue index 0 is the unit 1
}

PadicElement PadicElement::from_digits(const FieldDescriptor& K, const std::vector<Digit>& digits,
                                       std::int64_t precision) {
    std::int64_t shift = 0;
    for (const auto& d : digits)
        if (d.index < precision) shift = std::min(shift, d.index);
    std::int64_t N = ElementOps::needed_modexp(K, precision - shift);
    RingCtx c = make_ctx(K, N);
    std::vector<u128> v(K.f * K.e, 0);
    for (const auto& d : digits) {
        if (d.index >= precision || d.coeff == ResidueField::ZERO) continue;
        XPoly t = teich_cached(d.coeff, c);
        std::vector<u128> term(K.f * K.e, 0);
        for (std::int64_t i = 0; i < K.f; ++i) term[i] = t[i];
        term = ElementOps::shift_up(term, d.index - shift, c);
        for (std::int64_t i = 0; i < K.f * K.e; ++i) v[i] = addmod(v[i], term[i], c.mod);
    }
    return ElementOps::make(K, precision, shift, N, std::move(v));
}

std::vector<Digit> PadicElement::digits() const {
    if (coeffs_.empty()) return {};
    RingCtx c = make_ctx(field_, modexp_);
    std::int64_t limit = std::max<std::int64_t>(prec_ - shift_, 0);
    auto ds = ElementOps::ring_digits(coeffs_, field_, c, limit);
    for (auto& d : ds) d.index += shift_;
    return ds;
}

Valuation PadicElement::valuation() const {
    auto ds = digits();
    if (ds.empty()) return Valuation::infinity();
    return Valuation(Rational(ds.front().index, field_.e));
}

PadicElement PadicElement::operator-() const {
    RingCtx c = make_ctx(field_, modexp_);
    std::vector<u128> v(coeffs_);
    for (auto& x : v) x = submod(0, x, c.mod);
    return ElementOps::make(field_, prec_, shift_, modexp_, std::move(v));
}

std::pair<PadicElement, PadicElement> to_common_field(const PadicElement& a,
                                                      const PadicElement& b) {
    if (a.field() == b.field()) return {a, b};
    FieldDescriptor K = compositum(a.field(), b.field());
    return {a.embed_into(K), b.embed_into(K)};
}

PadicElement operator+(const PadicElement& A, const PadicElement& B) {
    auto [a, b] = to_common_field(A, B);
    std::int64_t e = a.field_.e;
    std::int64_t prec = std::min(a.prec_, b.prec_);
    std::int64_t shift = std::min(a.shift_, b.shift_);
    std::int64_t N = ElementOps::needed_modexp(a.field_, prec - shift);
    N = std::min({N, a.modexp_ + (a.shift_ - shift) / e, b.modexp_ + (b.shift_ - shift) / e});
    RingCtx c = make_ctx(a.field_, N);
    auto va = ElementOps::shift_up(a.coeffs_, a.shift_ - shift, c);
    auto vb = ElementOps::shift_up(b.coeffs_, b.shift_ - shift, c);
    std::vector<u128> out(va.size());
    for (size_t i = 0; i < va.size(); ++i) out[i] = addmod(va[i], vb[i], c.mod);
    return ElementOps::make(a.field_, prec, shift, N, std::move(out));
}

PadicElement operator-(const PadicElement& A, const PadicElement& B) { return A + (-B); }

PadicElement operator*(const PadicElement& A, const PadicElement& B) {
    auto [a, b] = to_common_field(A, B);
    std::int64_t e = a.field_.e;
    auto va = a.valuation(), vb = b.valuation();
    std::int64_t ia = va.is_finite() ? (va.value * Rational(e)).num : a.prec_;
    std::int64_t ib = vb.is_finite() ? (vb.value * Rational(e)).num : b.prec_;
    std::int64_t prec = std::min(ia + b.prec_, ib + a.prec_);
    std::int64_t shift = a.shift_ + b.shift_;
    std::int64_t N = std::min({ElementOps::needed_modexp(a.field_, prec - shift),
                               a.modexp_, b.modexp_});
    RingCtx c = make_ctx(a.field_, N);
    auto out = ElementOps::ring_mul(a.coeffs_, b.coeffs_, c);
    return ElementOps::make(a.field_, prec, shift, N, std::move(out));
}

PadicElement operator/(const PadicElement& A, const PadicElement& B) {
    auto [a, b] = to_common_field(A, B);
    auto vb = b.valuation();
    if (!vb.is_finite()) throw std::domain_error("division by zero at working precision");
    const FieldDescriptor K = a.field_;
    std::int64_t e = K.e;
    std::int64_t ivb = (vb.value * Rational(e)).num;
    auto db = b.digits();
    for (auto& d : db) d.index -= ivb;
    std::int64_t relb = b.prec_ - ivb;
    PadicElement u = PadicElement::from_digits(K, db, relb);
    auto va = a.valuation();
    std::int64_t iva = va.is_finite() ? (va.value * Rational(e)).num : a.prec_;
    std::int64_t rel = std::min(a.prec_ - iva, relb);
    std::int64_t prec_out = iva - ivb + rel;

    const auto& R = K.residue();
    auto du = u.digits();
    std::int64_t r0inv = R.inv(du.front().coeff);
    PadicElement y = PadicElement::teichmuller(K, r0inv, relb);
    PadicElement two = PadicElement::from_int(K, 2, relb);
    std::int64_t steps = 1;
    for (std::int64_t acc = 1; acc < relb; acc *= 2) ++steps;
    for (std::int64_t i = 0; i <= steps; ++i) y = y * (two - u * y);

    PadicElement q = a * y;
    auto dq = q.digits();
    for (auto& d : dq) d.index -= ivb;
    return PadicElement::from_digits(K, dq, prec_out);
}

PadicElement arith(const PadicElement& a, const PadicElement& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw std::logic_error("unreachable");
}

bool PadicElement::equals_at_precision(const PadicElement& other) const {
    auto [a, b] = to_common_field(*this, other);
    std::int64_t prec = std::min(a.precision(), b.precision());
    auto da = a.digits(), db = b.digits();
    auto trim = [prec](std::vector<Digit>& v) {
        v.erase(std::remove_if(v.begin(), v.end(),
                               [prec](const Digit& d) { return d.index >= prec; }),
                v.end());
    };
    trim(da);
    trim(db);
    return da == db;
}

PadicElement PadicElement::embed_into(const FieldDescriptor& target) const {
    if (field_ == target) return *this;
    if (!field_.embeds_in(target)) throw std::domain_error("not a tower extension");
    std::int64_t escale = target.e / field_.e;
    auto ds = digits();
    for (auto& d : ds) {
        d.index *= escale;
        d.coeff = ResidueField::embed_index(d.coeff, field_.f, target.f, field_.p);
    }
    return from_digits(target, ds, prec_ * escale);
}

PadicElement PadicElement::reduce_field() const {
    auto ds = digits();
    const auto& R = field_.residue();
    auto min_subfield = [&](std::int64_t r) {
        for (std::int64_t d = 1; d <= field_.f; ++d)
            if (field_.f % d == 0 && R.in_subfield(r, d)) return d;
        return field_.f;
    };
    std::int64_t fmin = min_subfield(field_.zeta);
    for (const auto& d : ds) fmin = std::lcm(fmin, min_subfield(d.coeff));
    std::int64_t g = field_.e;
    for (const auto& d : ds) g = std::gcd(g, d.index < 0 ? -d.index : d.index);
    if (g == 0) g = field_.e;

    std::int64_t m = (ipow64(field_.p, field_.f) - 1) / (ipow64(field_.p, fmin) - 1);
    FieldDescriptor K = make_field(field_.p, fmin, field_.e / g);
    K.zeta = (field_.zeta == ResidueField::ZERO) ? field_.zeta : field_.zeta / m;
    std::vector<Digit> nds;
    for (const auto& d : ds)
        nds.push_back({d.index / g, d.coeff == ResidueField::ZERO ? d.coeff : d.coeff / m});
    std::int64_t prec_new = prec_ >= 0 ? prec_ / g : -((-prec_ + g - 1) / g);
    return from_digits(K, nds, prec_new);
}

PadicElement PadicElement::truncate_digits(std::int64_t cutoff, bool strict) const {
    auto ds = digits();
    std::vector<Digit> keep;
    for (const auto& d : ds)
        if (strict ? d.index < cutoff : d.index <= cutoff) keep.push_back(d);
    return from_digits(field_, keep, prec_);
}

PadicElement PadicElement::base_part(const FieldDescriptor& base) const {
    if (field_.e != base.e || field_.f % base.f != 0)
        throw std::domain_error("base_part: not an unramified extension of base");
    if (ResidueField::embed_index(base.zeta, base.f, field_.f, field_.p) != field_.zeta)
        throw std::domain_error("base_part: incompatible Eisenstein units");
    const auto& R = field_.residue();
    auto ds = digits();
    std::vector<Digit> prefix;
    for (const auto& d : ds) {
        if (!R.in_subfield(d.coeff, base.f)) break;
        prefix.push_back(d);
    }
    std::int64_t m = (ipow64(field_.p, field_.f) - 1) / (ipow64(field_.p, base.f) - 1);
    for (auto& d : prefix)
        if (d.coeff != ResidueField::ZERO) d.coeff /= m;
    return from_digits(base, prefix, prec_);
}

std::vector<PadicElement> PadicElement::conjugates(const FieldDescriptor& base) const {
    if (!base.embeds_in(field_))
        throw std::domain_error("conjugates: element is not in an extension of base");
    const std::int64_t p = field_.p;
    std::int64_t erel = field_.e / base.e;
    if (!field_.residue().in_subfield(field_.zeta, base.f))
        throw std::domain_error("conjugates: Eisenstein unit not defined over base");

    bool special_quadratic = (p == 2 && erel == 2);
    if (erel % p == 0 && !special_quadratic)
        throw std::domain_error("wild conjugation unsupported");

    std::int64_t fneed = field_.f;
    if (erel > 1 && !special_quadratic) {
        std::int64_t t = 1, acc = p % erel;
        while ((acc - 1 + erel) % erel != 0) { acc = acc * p % erel; ++t; }
        fneed = std::lcm(field_.f, t);
    }
    FieldDescriptor big = make_field(p, fneed, field_.e);
    big.zeta = ResidueField::embed_index(field_.zeta, field_.f, fneed, p);
    PadicElement start = embed_into(big);
    const auto& R = big.residue();

    auto key = [](const PadicElement& x) {
        std::ostringstream os;
        for (auto& d : x.digits()) os << d.index << ":" << d.coeff << ";";
        return os.str();
    };

    std::vector<PadicElement> orbit{start};
    std::vector<std::string> seen{key(start)};
    auto push = [&](const PadicElement& x) {
        auto k = key(x);
        for (auto& s : seen)
            if (s == k) return;
        seen.push_back(k);
        orbit.push_back(x);
    };

    std::int64_t xi = (erel > 1 && !special_quadratic) ? R.root_of_unity(erel) : 0;

    for (size_t head = 0; head < orbit.size(); ++head) {
        PadicElement cur = orbit[head];
        {
            auto ds = cur.digits();
            for (auto& d : ds) d.coeff = R.frobenius(d.coeff, base.f);
            push(from_digits(big, ds, cur.precision()));
        }
        if (erel > 1 && !special_quadratic) {
            auto ds = cur.digits();
            for (auto& d : ds) {
                std::int64_t tw = R.pow(xi, (d.index % erel + erel) % erel);
                d.coeff = R.mul(d.coeff, tw);
            }
            push(from_digits(big, ds, cur.precision()));
        }
        if (special_quadratic) {
            auto ds = cur.digits();
            std::vector<Digit> ev, od;
            for (auto& d : ds) ((d.index % 2 + 2) % 2 == 0 ? ev : od).push_back(d);
            push(from_digits(big, ev, cur.precision()) - from_digits(big, od, cur.precision()));
        }
    }
    return orbit;
}

std::string PadicElement::str() const {
    std::ostringstream os;
    auto ds = digits();
    const auto& R = field_.residue();
    if (ds.empty()) os << "0";
    for (size_t i = 0; i < ds.size(); ++i) {
        if (i) os << " + ";
        os << "[" << R.pack(ds[i].coeff) << "]pi^" << ds[i].index;
    }
    os << " + O(pi^" << prec_ << ") in " << field_.label;
    return os.str();
}

} // namespace padic
