#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "padic/element.hpp"

namespace padic {

enum class DiskKind { Open, Closed };

/// A rational disk {x : v_p(x - center) > cut} (open) or {>= cut} (closed).
/// Two values with close centers denote the same set; disk_equal and
/// canonical() resolve that.
struct Disk {
    PadicElement center;
    Rational cut;
    DiskKind kind = DiskKind::Open;

    bool is_open() const { return kind == DiskKind::Open; }
};

Disk make_disk(PadicElement center, Rational cut, DiskKind kind);

/// Exact membership; throws std::runtime_error("precision exhausted...")
/// when the known digits cannot separate v_p(x - center) from the cut.
bool disk_contains(const Disk& D, const PadicElement& x);

enum class DiskRelation { Equal, Disjoint, FirstInsideSecond, SecondInsideFirst };

/// Ultrametric dichotomy: two disks are equal, disjoint, or nested.
DiskRelation disk_relation(const Disk& a, const Disk& b);

bool disk_equal(const Disk& a, const Disk& b);

/// Canonical form: center digits truncated at the cut (strictly below it for
/// closed disks), expressed in the smallest family field, with normalized
/// precision. disk_equal(a, b) iff canonical forms compare identically.
Disk canonical_disk(const Disk& D);

/// x -> alpha*x + beta
struct AffineMap {
    PadicElement alpha, beta;
};
/// x -> 1/(x - pole)
struct InversionMap {
    PadicElement pole;
};
using MobiusMap = std::variant<AffineMap, InversionMap>;

/// Image of a disk under an affine map or an inversion with pole outside;
/// throws std::domain_error("pole inside disk") otherwise.
Disk mobius_image(const Disk& D, const MobiusMap& map);

/// sup over x in K of v_p(a - x), by greedy digit matching in the compositum.
/// Infinite when a lies in K at working precision.
Valuation distance_to_field(const PadicElement& a, const FieldDescriptor& K);

/// Smallest field F containing `base` (inside the family) with sigma(D) = D
/// for all sigma in G_F. Centers that are single digit terms are handled
/// symbolically even in wild ramification; other wild centers are refused.
FieldDescriptor field_of_definition(const Disk& D, const FieldDescriptor& base);

struct DiskSearchConfig {
    std::int64_t max_degree = 0; // 0: use 4*p^2 relative to the base
};

/// Minimal ramification index e_{K/base} over candidate family fields K with
/// K meeting D. Throws std::runtime_error("candidate list exhausted") when
/// the configured family slice has no such field.
std::int64_t min_ram_degree(const Disk& D, const FieldDescriptor& base,
                            const DiskSearchConfig& cfg = {});

/// Smallest t >= 1 such that the disk can be rewritten with exponent s*t and
/// a radius in the value group of the field realizing s.
std::int64_t width_t(const Disk& D, const FieldDescriptor& base, std::int64_t s);

/// Per-disk complexity: s*t computed over the disk's own field of definition
/// relative to `base`.
std::int64_t gamma_disk(const Disk& D, const FieldDescriptor& base,
                        const DiskSearchConfig& cfg = {});

/// A point of D of small degree over `base`: the matching prefix of the
/// center in the minimal-ramification candidate field.
PadicElement find_point(const Disk& D, const FieldDescriptor& base,
                        const DiskSearchConfig& cfg = {});

/// G_base-orbit of closed disks (or of any disk).
struct DiskOrbit {
    Disk representative;
    FieldDescriptor base;
    std::vector<Disk> members;
    std::int64_t size() const { return (std::int64_t)members.size(); }
};

DiskOrbit disk_orbit(const Disk& D, const FieldDescriptor& base);

/// Working precision for comparisons against a cut: the cut level plus a
/// fixed guard of four digit levels.
std::int64_t working_precision(const Rational& cut, const FieldDescriptor& K);

} // namespace padic
