#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padic/field.hpp"
#include "padic/rational.hpp"

namespace padic {

/// One term of a Teichmueller digit expansion: `coeff` is a nonzero residue
/// (ResidueField index form) and `index` the exponent of the uniformizer,
/// so the term is [coeff] * pi^index and has valuation index/e.
struct Digit {
    std::int64_t index;
    std::int64_t coeff;
    bool operator==(const Digit&) const = default;
};

/// A finite-precision element of a family field. Digits with uniformizer
/// exponent >= precision are unknown. Internally the element is held in a
/// Galois-ring coordinate form so arithmetic is exact; the digit expansion
/// is extracted on demand.
class PadicElement {
public:
    PadicElement() = default;

    static PadicElement zero(const FieldDescriptor& K, std::int64_t precision);
    static PadicElement from_int(const FieldDescriptor& K, std::int64_t n,
                                 std::int64_t precision);
    /// [r] * pi^index for a residue r given in index form.
    static PadicElement teichmuller(const FieldDescriptor& K, std::int64_t residue_index,
                                    std::int64_t precision, std::int64_t index = 0);
    static PadicElement uniformizer_pow(const FieldDescriptor& K, std::int64_t k,
                                        std::int64_t precision);
    static PadicElement from_digits(const FieldDescriptor& K, const std::vector<Digit>& digits,
                                    std::int64_t precision);

    const FieldDescriptor& field() const { return field_; }
    std::int64_t precision() const { return prec_; }

    /// Exact v_p valuation; infinite when the element vanishes to working
    /// precision (in that case callers may consult precision()).
    Valuation valuation() const;

    /// True when no digit below the precision cap is nonzero.
    bool is_zero_at_precision() const { return !valuation().is_finite(); }

    std::vector<Digit> digits() const;

    PadicElement operator-() const;
    friend PadicElement operator+(const PadicElement& a, const PadicElement& b);
    friend PadicElement operator-(const PadicElement& a, const PadicElement& b);
    friend PadicElement operator*(const PadicElement& a, const PadicElement& b);
    friend PadicElement operator/(const PadicElement& a, const PadicElement& b);

    /// Equality of digit expansions up to the smaller precision.
    bool equals_at_precision(const PadicElement& other) const;

    /// Canonical tower embedding into `target` (pi -> pi'^{e'/e}).
    PadicElement embed_into(const FieldDescriptor& target) const;

    /// Re-expresses the element in the smallest family field containing it.
    PadicElement reduce_field() const;

    /// Drops digits with index > cutoff (or >= cutoff when `strict`).
    PadicElement truncate_digits(std::int64_t cutoff, bool strict = false) const;

    /// The longest initial segment of the digit expansion whose coefficients
    /// lie in the residue field of `base`; requires an unramified extension
    /// of `base` (same e and Eisenstein unit). The result lives in `base`.
    PadicElement base_part(const FieldDescriptor& base) const;

    /// Full Galois orbit over `base`, realized inside the family (possibly
    /// in an unramified enlargement when tame twists need extra roots of
    /// unity). Throws std::domain_error for wild relative ramification
    /// (p | e/e_base, except the quadratic case which is handled exactly).
    std::vector<PadicElement> conjugates(const FieldDescriptor& base) const;

    std::string str() const;

private:
    friend struct ElementOps;

    FieldDescriptor field_;
    std::int64_t prec_ = 0;          // digit indices >= prec_ are unknown
    std::int64_t shift_ = 0;         // value = (ring part) * pi^shift_
    std::int64_t modexp_ = 1;        // coefficients live in Z/p^modexp_
    std::vector<unsigned __int128> coeffs_;  // x^i pi^j -> coeffs_[j*f + i]
};

/// Binary operation dispatch used by the arithmetic CLI surface.
enum class ArithOp { Add, Sub, Mul, Div };
PadicElement arith(const PadicElement& a, const PadicElement& b, ArithOp op);

/// Lifts both elements into their compositum field.
std::pair<PadicElement, PadicElement> to_common_field(const PadicElement& a,
                                                      const PadicElement& b);

} // namespace padic
