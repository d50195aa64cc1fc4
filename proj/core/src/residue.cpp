#include "padic/residue.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace padic {

namespace {

using Poly = std::vector<std::int64_t>; // little-endian coefficients in [0,p)

std::int64_t mod_pos(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // reduce by monic m of degree d
    size_t d = m.size() - 1;
    for (size_t i = prod.size(); i-- > d;) {
        std::int64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (size_t j = 0; j < d; ++j)
            prod[i - d + j] = mod_pos(prod[i - d + j] - c * m[j], p);
    }
    prod.resize(d);
    return prod;
}

std::int64_t pack_poly(const Poly& a, std::int64_t p) {
    std::int64_t v = 0;
    for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

Poly unpack_poly(std::int64_t v, std::int64_t p, std::int64_t f) {
    Poly a(f, 0);
    for (std::int64_t i = 0; i < f; ++i) { a[i] = v % p; v /= p; }
    return a;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) { out.push_back(d); while (n % d == 0) n /= d; }
    if (n > 1) out.push_back(n);
    return out;
}

Poly poly_pow_mod(Poly base, std::int64_t n, const Poly& m, std::int64_t p) {
    Poly r(m.size() - 1, 0);
    r[0] = 1;
    while (n > 0) {
        if (n & 1) r = poly_mul_mod(r, base, m, p);
        base = poly_mul_mod(base, base, m, p);
        n >>= 1;
    }
    return r;
}

bool is_one(const Poly& a) {
    if (a.empty() || a[0] != 1) return false;
    for (size_t i = 1; i < a.size(); ++i) if (a[i] != 0) return false;
    return true;
}

bool is_zero(const Poly& a) {
    for (auto c : a) if (c != 0) return false;
    return true;
}

std::int64_t ipow(std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Evaluates the degree-d tower polynomial h_d at x^((p^f-1)/(p^d-1)) mod h.
bool subfield_compatible(const Poly& h, const Poly& h_d, std::int64_t p, std::int64_t f,
                         std::int64_t d) {
    std::int64_t m = (ipow(p, f) - 1) / (ipow(p, d) - 1);
    Poly x(f, 0);
    if (f == 1) { // x is a constant field; represent x by its value
        x[0] = mod_pos(-h[0], p);
    } else {
        x[1] = 1;
    }
    Poly y = poly_pow_mod(x, m, h, p);
    // evaluate h_d(y)
    Poly acc(f, 0);
    Poly one(f, 0); one[0] = 1;
    Poly ypow = one;
    for (size_t i = 0; i < h_d.size(); ++i) {
        for (std::int64_t j = 0; j < f; ++j)
            acc[j] = (acc[j] + h_d[i] * ypow[j]) % p;
        if (i + 1 < h_d.size()) ypow = poly_mul_mod(ypow, y, h, p);
    }
    return is_zero(acc);
}

// Deterministic compatible tower of primitive polynomials: for each degree,
// the lexicographically smallest monic primitive polynomial whose roots are
// compatible with the polynomials already chosen for proper divisors.
class TowerCache {
public:
    const Poly& poly(std::int64_t p, std::int64_t f) {
        auto key = std::make_pair(p, f);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        // ensure divisors are present first
        for (std::int64_t d = 1; d < f; ++d)
            if (f % d == 0) poly(p, d);
        Poly h = search(p, f);
        return cache_.emplace(key, std::move(h)).first->second;
    }

private:
    Poly search(std::int64_t p, std::int64_t f) {
        std::int64_t q = ipow(p, f);
        auto factors = prime_factors(q - 1);
        std::int64_t count = ipow(p, f); // iterate over lower coefficients
        for (std::int64_t v = 0; v < count; ++v) {
            Poly h = unpack_poly(v, p, f);
            h.push_back(1); // monic
            if (h[0] == 0) continue;
            if (!is_primitive(h, p, f, q, factors)) continue;
            bool ok = true;
            for (std::int64_t d = 1; d < f && ok; ++d)
                if (f % d == 0)
                    ok = subfield_compatible(h, cache_.at({p, d}), p, f, d);
            if (ok) return h;
        }
        throw std::runtime_error("residue: no compatible primitive polynomial found");
    }

    bool is_primitive(const Poly& h, std::int64_t p, std::int64_t f, std::int64_t q,
                      const std::vector<std::int64_t>& factors) {
        Poly x(f, 0);
        if (f == 1) x[0] = mod_pos(-h[0], p); else x[1] = 1;
        if (is_zero(x)) return false;
        if (!is_one(poly_pow_mod(x, q - 1, h, p))) return false;
        for (auto r : factors)
            if (is_one(poly_pow_mod(x, (q - 1) / r, h, p))) return false;
        return true;
    }

    std::map<std::pair<std::int64_t, std::int64_t>, Poly> cache_;
};

TowerCache& tower() {
    static TowerCache t;
    return t;
}

} // namespace

const ResidueField& ResidueField::get(std::int64_t p, std::int64_t f) {
    static std::mutex registry_mutex;
    static std::map<std::pair<std::int64_t, std::int64_t>, std::unique_ptr<ResidueField>> registry;
    std::lock_guard<std::mutex> lk(registry_mutex);
    auto key = std::make_pair(p, f);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::unique_ptr<ResidueField>(new ResidueField(p, f))).first;
    return *it->second;
}

ResidueField::ResidueField(std::int64_t p, std::int64_t f) : p_(p), f_(f) {
    if (p < 2 || f < 1 || f > 12) throw std::invalid_argument("residue: bad (p, f)");
    q_ = ipow(p, f);
    if (q_ > (1 << 22)) throw std::invalid_argument("residue: field too large for tables");
    poly_ = tower().poly(p, f);
    exp_table_.assign(q_ - 1, 0);
    log_table_.assign(q_, ZERO);
    Poly x(f, 0);
    if (f == 1) x[0] = mod_pos(-poly_[0], p); else x[1] = 1;
    Poly acc(f, 0); acc[0] = 1;
    for (std::int64_t k = 0; k < q_ - 1; ++k) {
        std::int64_t packed = pack_poly(acc, p);
        exp_table_[k] = packed;
        log_table_[packed] = k;
        acc = poly_mul_mod(acc, x, poly_, p);
    }
    if (!is_one(acc)) throw std::runtime_error("residue: generator order mismatch");
}

std::int64_t ResidueField::add(std::int64_t a, std::int64_t b) const {
    if (a == ZERO) return b;
    if (b == ZERO) return a;
    Poly pa = unpack_poly(exp_table_[a], p_, f_);
    Poly pb = unpack_poly(exp_table_[b], p_, f_);
    for (std::int64_t i = 0; i < f_; ++i) pa[i] = (pa[i] + pb[i]) % p_;
    return log_table_[pack_poly(pa, p_)];
}

std::int64_t ResidueField::neg(std::int64_t a) const {
    if (a == ZERO) return ZERO;
    if (p_ == 2) return a;
    return (a + (q_ - 1) / 2) % (q_ - 1);
}

std::int64_t ResidueField::mul(std::int64_t a, std::int64_t b) const {
    if (a == ZERO || b == ZERO) return ZERO;
    return (a + b) % (q_ - 1);
}

std::int64_t ResidueField::inv(std::int64_t a) const {
    if (a == ZERO) throw std::domain_error("residue: inverse of zero");
    return a == 0 ? 0 : q_ - 1 - a;
}

std::int64_t ResidueField::pow(std::int64_t a, std::int64_t n) const {
    if (a == ZERO) {
        if (n <= 0) throw std::domain_error("residue: 0^nonpositive");
        return ZERO;
    }
    std::int64_t g = q_ - 1;
    std::int64_t k = ((a % g) * (n % g)) % g;
    return mod_pos(k, g);
}

std::int64_t ResidueField::frobenius(std::int64_t a, std::int64_t r) const {
    if (a == ZERO) return ZERO;
    std::int64_t e = 1, g = q_ - 1;
    for (std::int64_t i = 0; i < r % f_; ++i) e = (e * p_) % g;
    return (a * e) % g;
}

std::int64_t ResidueField::embed_index(std::int64_t a, std::int64_t f_from, std::int64_t f_to,
                                       std::int64_t p) {
    if (a == ZERO) return ZERO;
    if (f_to % f_from != 0) throw std::invalid_argument("residue: not a subfield");
    std::int64_t m = (ipow(p, f_to) - 1) / (ipow(p, f_from) - 1);
    return a * m % (ipow(p, f_to) - 1);
}

bool ResidueField::in_subfield(std::int64_t a, std::int64_t d) const {
    if (a == ZERO) return true;
    if (f_ % d != 0) return false;
    std::int64_t m = (q_ - 1) / (ipow(p_, d) - 1);
    return a % m == 0;
}

std::int64_t ResidueField::pack(std::int64_t a) const {
    return a == ZERO ? 0 : exp_table_[a];
}

std::int64_t ResidueField::unpack(std::int64_t packed) const {
    if (packed < 0 || packed >= q_) throw std::invalid_argument("residue: bad packed value");
    return log_table_[packed];
}

std::int64_t ResidueField::root_of_unity(std::int64_t n) const {
    if (n < 1 || (q_ - 1) % n != 0) throw std::domain_error("residue: no such root of unity");
    return (q_ - 1) / n % (q_ - 1);
}

std::int64_t ResidueField::from_int(std::int64_t c) const {
    c = mod_pos(c, p_);
    return log_table_[c];
}

} // namespace padic
