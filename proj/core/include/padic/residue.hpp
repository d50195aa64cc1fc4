#pragma once

#include <cstdint>
#include <vector>
#include <memory>

namespace padic {

/// Elements of F_{p^f} are held as exponent indices with respect to a fixed
/// primitive generator g: the value 0 is ZERO, and k in [0, p^f-2] denotes
/// g^k. Defining polynomials are chosen so that the whole tower over F_p is
/// compatible: for f | f', the index map k -> k*(p^f'-1)/(p^f-1) is a field
/// embedding. This makes cross-field digit arithmetic deterministic.
class ResidueField {
public:
    static constexpr std::int64_t ZERO = -1;

    static const ResidueField& get(std::int64_t p, std::int64_t f);

    std::int64_t p() const { return p_; }
    std::int64_t f() const { return f_; }
    std::int64_t order() const { return q_; }          // p^f
    std::int64_t group_order() const { return q_ - 1; } // p^f - 1

    std::int64_t add(std::int64_t a, std::int64_t b) const;
    std::int64_t neg(std::int64_t a) const;
    std::int64_t sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }
    std::int64_t mul(std::int64_t a, std::int64_t b) const;
    std::int64_t inv(std::int64_t a) const;
    std::int64_t pow(std::int64_t a, std::int64_t n) const;

    /// x -> x^(p^r); r defaults to 1 (absolute Frobenius).
    std::int64_t frobenius(std::int64_t a, std::int64_t r = 1) const;

    /// Index of the image of `a` under the canonical embedding into F_{p^f'}.
    static std::int64_t embed_index(std::int64_t a, std::int64_t f_from, std::int64_t f_to,
                                    std::int64_t p);

    /// True when `a` lies in the subfield F_{p^d} (d | f).
    bool in_subfield(std::int64_t a, std::int64_t d) const;

    /// Packs an element as an integer in [0, p^f): little-endian base-p
    /// digits of its polynomial coordinates. Stable across runs; used in
    /// serialized digit lists.
    std::int64_t pack(std::int64_t a) const;
    std::int64_t unpack(std::int64_t packed) const;

    /// Element of multiplicative order n, if n | p^f - 1.
    std::int64_t root_of_unity(std::int64_t n) const;

    /// Residue of the small integer c (index form).
    std::int64_t from_int(std::int64_t c) const;

    const std::vector<std::int64_t>& defining_poly() const { return poly_; }

private:
    ResidueField(std::int64_t p, std::int64_t f);

    std::int64_t p_, f_, q_;
    std::vector<std::int64_t> poly_;        // monic degree-f, coeffs in [0,p)
    std::vector<std::int64_t> exp_table_;   // k -> packed value of g^k
    std::vector<std::int64_t> log_table_;   // packed value -> k (0 -> ZERO)
};

} // namespace padic
