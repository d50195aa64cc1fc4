#include "padic/disk.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace padic {

namespace {

// v compared against a cut: > for open, >= for closed
bool meets_cut(const Valuation& v, const Rational& cut, DiskKind kind) {
    if (!v.is_finite()) return true;
    return kind == DiskKind::Open ? v.value > cut : v.value >= cut;
}

std::int64_t ipow64(std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

std::int64_t working_precision(const Rational& cut, const FieldDescriptor& K) {
    return (cut * Rational(K.e)).ceil() + 4;
}

Disk make_disk(PadicElement center, Rational cut, DiskKind kind) {
    return Disk{std::move(center), cut, kind};
}

bool disk_contains(const Disk& D, const PadicElement& x) {
    auto [a, b] = to_common_field(D.center, x);
    PadicElement diff = b - a;
    Valuation v = diff.valuation();
    if (!v.is_finite()) {
        Rational prec_level(diff.precision(), diff.field().e);
        if (prec_level > D.cut) return true;
        if (prec_level == D.cut && D.kind == DiskKind::Closed) return true;
        throw std::runtime_error("precision exhausted: membership undecidable at cut " +
                                 D.cut.str());
    }
    return meets_cut(v, D.cut, D.kind);
}

namespace {

// a shared center implies: first within second iff this holds
bool cut_within(const Disk& d1, const Disk& d2) {
    if (d1.cut > d2.cut) return true;
    if (d1.cut < d2.cut) return false;
    return !(d1.kind == DiskKind::Closed && d2.kind == DiskKind::Open);
}

} // namespace

DiskRelation disk_relation(const Disk& a, const Disk& b) {
    bool a_in_b = disk_contains(b, a.center);
    bool b_in_a = disk_contains(a, b.center);
    if (!a_in_b && !b_in_a) return DiskRelation::Disjoint;
    bool sub_ab = a_in_b && cut_within(a, b);
    bool sub_ba = b_in_a && cut_within(b, a);
    if (sub_ab && sub_ba) return DiskRelation::Equal;
    if (sub_ab) return DiskRelation::FirstInsideSecond;
    if (sub_ba) return DiskRelation::SecondInsideFirst;
    throw std::logic_error("disk_relation: ultrametric dichotomy violated");
}

bool disk_equal(const Disk& a, const Disk& b) {
    if (a.cut != b.cut || a.kind != b.kind) return false;
    return disk_relation(a, b) == DiskRelation::Equal;
}

Disk canonical_disk(const Disk& D) {
    const auto& K = D.center.field();
    Rational cutlvl = D.cut * Rational(K.e);
    std::int64_t cutoff =
        D.kind == DiskKind::Open ? cutlvl.floor() : cutlvl.ceil() - 1;
    PadicElement red = D.center.truncate_digits(cutoff).reduce_field();
    const auto& Kr = red.field();
    Rational rlvl = D.cut * Rational(Kr.e);
    std::int64_t prec = D.kind == DiskKind::Open ? rlvl.floor() + 1 : rlvl.ceil();
    return Disk{PadicElement::from_digits(Kr, red.digits(), prec), D.cut, D.kind};
}

Disk mobius_image(const Disk& D, const MobiusMap& map) {
    if (std::holds_alternative<AffineMap>(map)) {
        const auto& m = std::get<AffineMap>(map);
        Valuation va = m.alpha.valuation();
        if (!va.is_finite()) throw std::domain_error("mobius: degenerate affine map");
        PadicElement c = m.alpha * D.center + m.beta;
        return Disk{c, D.cut + va.value, D.kind};
    }
    const auto& m = std::get<InversionMap>(map);
    if (disk_contains(D, m.pole)) throw std::domain_error("pole inside disk");
    auto [a, c] = to_common_field(D.center, m.pole);
    PadicElement shifted = a - c;
    Valuation w = shifted.valuation();
    PadicElement one = PadicElement::from_int(shifted.field(), 1, shifted.precision());
    PadicElement inv = one / shifted;
    return Disk{inv, D.cut - Rational(2) * w.value, D.kind};
}

Valuation distance_to_field(const PadicElement& a, const FieldDescriptor& K) {
    FieldDescriptor C = compositum(a.field(), K);
    PadicElement x = a.embed_into(C);
    const auto& R = C.residue();
    std::int64_t estep = C.e / K.e;
    for (const auto& d : x.digits()) {
        bool index_ok = (d.index % estep == 0);
        bool coeff_ok = R.in_subfield(d.coeff, K.f);
        if (!index_ok || !coeff_ok) return Valuation(Rational(d.index, C.e));
    }
    return Valuation::infinity();
}

namespace {

/// v_p(zeta_d - 1) for a primitive d-th root of unity.
Valuation cyclotomic_difference_valuation(std::int64_t d, std::int64_t p) {
    if (d == 1) return Valuation::infinity();
    std::int64_t w = 0, rest = d;
    while (rest % p == 0) { rest /= p; ++w; }
    if (rest > 1) return Valuation(Rational(0));
    return Valuation(Rational(1, ipow64(p, w - 1) * (p - 1)));
}

/// v_p(sigma(c) - c) for a single-digit center c = [r] pi^k of the field K,
/// where sigma acts as Frobenius^frob_pow on residues and pi -> zeta^j pi
/// over the erel-th roots of unity. Exact, including wild ramification.
Valuation single_digit_conjugate_distance(std::int64_t r, std::int64_t k,
                                          const FieldDescriptor& K, std::int64_t frob_pow,
                                          std::int64_t j, std::int64_t erel) {
    const auto& R = K.residue();
    const std::int64_t p = K.p;
    std::int64_t wild_erel = 1, tame_erel = erel;
    while (tame_erel % p == 0) { tame_erel /= p; wild_erel *= p; }
    std::int64_t jk = ((j % erel) * ((k % erel + erel) % erel)) % erel;

    std::int64_t s = R.frobenius(r, frob_pow);
    Rational base_val(k, K.e);
    std::int64_t jt = jk % tame_erel;
    if (jt != 0) {
        std::int64_t order = tame_erel / std::gcd(tame_erel, jt);
        if ((R.order() - 1) % order != 0)
            return Valuation(base_val); // twisted residue leaves the residue field
        if ((R.order() - 1) % tame_erel != 0)
            throw std::domain_error("wild case unsupported: ambiguous tame twist");
        std::int64_t zbar = R.root_of_unity(tame_erel);
        s = R.mul(s, R.pow(zbar, jt));
    }
    if (s != r) return Valuation(base_val);
    std::int64_t jw = jk % wild_erel;
    std::int64_t wild_order = wild_erel / std::gcd(wild_erel, jw == 0 ? wild_erel : jw);
    Valuation cyc = cyclotomic_difference_valuation(wild_order, p);
    if (!cyc.is_finite()) return Valuation::infinity();
    return Valuation(base_val + cyc.value);
}

std::vector<FieldDescriptor> intermediate_fields(const FieldDescriptor& base,
                                                 const FieldDescriptor& top) {
    std::vector<FieldDescriptor> out;
    for (std::int64_t f = base.f; f <= top.f; ++f) {
        if (f % base.f != 0 || top.f % f != 0) continue;
        for (std::int64_t e = base.e; e <= top.e; ++e) {
            if (e % base.e != 0 || top.e % e != 0) continue;
            FieldDescriptor K = make_field(base.p, f, e);
            K.zeta = ResidueField::embed_index(base.zeta, base.f, f, base.p);
            if (base.embeds_in(K) && K.embeds_in(top)) out.push_back(K);
        }
    }
    std::sort(out.begin(), out.end(), [](const FieldDescriptor& a, const FieldDescriptor& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.e < b.e;
    });
    return out;
}

} // namespace

FieldDescriptor field_of_definition(const Disk& D, const FieldDescriptor& base) {
    FieldDescriptor top = compositum(D.center.field(), base);
    PadicElement c = D.center.embed_into(top);
    auto ds = c.digits();
    auto candidates = intermediate_fields(base, top);

    if (ds.empty()) return base;

    if (ds.size() == 1) {
        std::int64_t r = ds[0].coeff, k = ds[0].index;
        for (const auto& F : candidates) {
            std::int64_t erel = top.e / F.e;
            bool stable = true;
            for (std::int64_t i = 0; i < top.f / F.f && stable; ++i) {
                for (std::int64_t j = 0; j < erel && stable; ++j) {
                    if (i == 0 && j == 0) continue;
                    auto v = single_digit_conjugate_distance(r, k, top, i * F.f, j, erel);
                    if (!meets_cut(v, D.cut, D.kind)) stable = false;
                }
            }
            if (stable) return F;
        }
        throw std::logic_error("field_of_definition: no stabilizing field found");
    }

    for (const auto& F : candidates) {
        auto orbit = c.conjugates(F); // throws for wild multi-digit centers
        bool stable = true;
        for (const auto& s : orbit) {
            Valuation v = (s - c).valuation();
            if (!v.is_finite()) {
                Rational lvl(std::min(s.precision(), c.precision()),
                             std::max(s.field().e, top.e));
                if (!(lvl > D.cut))
                    throw std::runtime_error("precision exhausted in orbit stability test");
                continue;
            }
            if (!meets_cut(v, D.cut, D.kind)) { stable = false; break; }
        }
        if (stable) return F;
    }
    throw std::logic_error("field_of_definition: no stabilizing field found");
}

std::int64_t min_ram_degree(const Disk& D, const FieldDescriptor& base,
                            const DiskSearchConfig& cfg) {
    std::int64_t bound = cfg.max_degree > 0 ? cfg.max_degree : 4 * base.p * base.p;
    const PadicElement& a = D.center;
    bool zero_in = false;
    try {
        zero_in = disk_contains(D, PadicElement::zero(a.field(), a.precision()));
    } catch (const std::runtime_error&) {
        zero_in = false;
    }
    Valuation va = a.valuation();

    for (std::int64_t erel = 1; erel <= bound; ++erel) {
        std::int64_t e = erel * base.e;
        // with 0 outside, all points of D share the center's valuation;
        // skip value groups that cannot realize it
        if (!zero_in && va.is_finite() && !(va.value * Rational(e)).is_integer()) continue;
        for (std::int64_t frel = 1; erel * frel <= bound; ++frel) {
            FieldDescriptor K = make_field(base.p, frel * base.f, e);
            K.zeta = ResidueField::embed_index(base.zeta, base.f, K.f, base.p);
            if (!base.embeds_in(K)) continue;
            if (meets_cut(distance_to_field(a, K), D.cut, D.kind)) return erel;
        }
    }
    throw std::runtime_error("candidate list exhausted: no family field meets the disk");
}

std::int64_t width_t(const Disk& D, const FieldDescriptor& base, std::int64_t s) {
    Rational q = Rational(s) * D.cut * Rational(base.e * s);
    return q.denom();
}

std::int64_t gamma_disk(const Disk& D, const FieldDescriptor& base,
                        const DiskSearchConfig& cfg) {
    FieldDescriptor F = field_of_definition(D, base);
    std::int64_t s = min_ram_degree(D, F, cfg);
    return s * width_t(D, F, s);
}

PadicElement find_point(const Disk& D, const FieldDescriptor& base,
                        const DiskSearchConfig& cfg) {
    std::int64_t bound = cfg.max_degree > 0 ? cfg.max_degree : 4 * base.p * base.p;
    const PadicElement& a = D.center;
    bool zero_in = false;
    try {
        zero_in = disk_contains(D, PadicElement::zero(a.field(), a.precision()));
    } catch (const std::runtime_error&) {
        zero_in = false;
    }
    if (zero_in) return PadicElement::zero(base, working_precision(D.cut, base));
    Valuation va = a.valuation();

    for (std::int64_t erel = 1; erel <= bound; ++erel) {
        std::int64_t e = erel * base.e;
        if (va.is_finite() && !(va.value * Rational(e)).is_integer()) continue;
        for (std::int64_t frel = 1; erel * frel <= bound; ++frel) {
            FieldDescriptor K = make_field(base.p, frel * base.f, e);
            K.zeta = ResidueField::embed_index(base.zeta, base.f, K.f, base.p);
            if (!base.embeds_in(K)) continue;
            if (!meets_cut(distance_to_field(a, K), D.cut, D.kind)) continue;
            FieldDescriptor C = compositum(a.field(), K);
            PadicElement x = a.embed_into(C);
            const auto& R = C.residue();
            std::int64_t estep = C.e / K.e;
            std::int64_t m = (ipow64(C.p, C.f) - 1) / (ipow64(C.p, K.f) - 1);
            std::vector<Digit> prefix;
            for (const auto& d : x.digits()) {
                if (d.index % estep != 0 || !R.in_subfield(d.coeff, K.f)) break;
                prefix.push_back({d.index / estep,
                                  d.coeff == ResidueField::ZERO ? d.coeff : d.coeff / m});
            }
            PadicElement pt = PadicElement::from_digits(
                K, prefix,
                std::max<std::int64_t>(x.precision() / estep, working_precision(D.cut, K)));
            if (!disk_contains(D, pt))
                throw std::logic_error("find_point: constructed point escaped the disk");
            return pt;
        }
    }
    throw std::runtime_error("candidate list exhausted: no representable point found");
}

DiskOrbit disk_orbit(const Disk& D, const FieldDescriptor& base) {
    DiskOrbit orbit;
    orbit.base = base;
    Disk canon = canonical_disk(D);
    orbit.representative = canon;
    std::vector<PadicElement> conj;
    try {
        conj = canon.center.conjugates(base);
    } catch (const std::domain_error&) {
        // wild center: if the disk itself is base-stable its orbit is itself
        FieldDescriptor F = field_of_definition(D, base);
        if (F == base || F.embeds_in(base)) {
            orbit.members.push_back(canon);
            return orbit;
        }
        throw;
    }
    for (const auto& c : conj) {
        Disk member{c, D.cut, D.kind};
        bool dup = false;
        for (const auto& m : orbit.members) dup = dup || disk_equal(m, member);
        if (!dup) orbit.members.push_back(canonical_disk(member));
    }
    return orbit;
}

} // namespace padic
