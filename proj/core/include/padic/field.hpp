#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic/rational.hpp"
#include "padic/residue.hpp"

namespace padic {

/// A member of the supported tower family of finite extensions of Q_p:
/// the unramified extension of degree f, followed by adjoining a root of
/// x^e - p*zeta, with zeta a Teichmueller unit of the residue field.
/// Valuations are v_p-normalized throughout (v_p(p) = 1), so the
/// uniformizer has valuation 1/e.
struct FieldDescriptor {
    std::int64_t p = 0;
    std::int64_t f = 1;
    std::int64_t e = 1;
    std::int64_t zeta = 0;  // residue index (ResidueField convention); 0 == one
    std::string label;

    const ResidueField& residue() const { return ResidueField::get(p, f); }
    std::int64_t degree() const { return e * f; }
    Rational uniformizer_valuation() const { return Rational(1, e); }

    bool operator==(const FieldDescriptor& o) const {
        return p == o.p && f == o.f && e == o.e && zeta == o.zeta;
    }

    /// True when this field embeds into `target` along the canonical tower
    /// maps (f | f', e | e', and the Eisenstein units agree).
    bool embeds_in(const FieldDescriptor& target) const;

    /// Relative degree [target : this]; requires embeds_in(target).
    std::int64_t degree_in(const FieldDescriptor& target) const;
};

/// Builds a field descriptor, validating the Eisenstein data.
/// `zeta_packed` uses the packed residue convention (1 = the unit 1).
FieldDescriptor make_field(std::int64_t p, std::int64_t f, std::int64_t e,
                           std::int64_t zeta_packed = 1);

/// Smallest family field containing both arguments; throws std::domain_error
/// ("no common field") when the Eisenstein units are incompatible.
FieldDescriptor compositum(const FieldDescriptor& a, const FieldDescriptor& b);

bool is_prime(std::int64_t n);

} // namespace padic
