#include "doctest.h"

#include <random>

#include "padic/disk.hpp"

using namespace padic;

namespace {
const FieldDescriptor Q5 = make_field(5, 1, 1);
const FieldDescriptor Q25 = make_field(5, 2, 1);
const FieldDescriptor Q5r2 = make_field(5, 1, 2);

PadicElement Z5(std::int64_t n, std::int64_t prec = 12) {
    return PadicElement::from_int(Q5, n, prec);
}

// random point of D: center plus digits strictly deeper than the cut
PadicElement sample_point(const Disk& D, std::mt19937_64& rng, int extra = 3) {
    const auto& K = D.center.field();
    std::int64_t lo = (D.cut * Rational(K.e)).floor() + 1;
    if (D.kind == DiskKind::Closed) lo -= 1;
    std::int64_t prec = lo + extra + 2;
    std::vector<Digit> ds;
    for (std::int64_t i = lo; i < lo + extra; ++i) {
        std::int64_t c = (std::int64_t)(rng() % (K.residue().order()));
        if (c == 0) continue;
        ds.push_back({i, K.residue().unpack(c)});
    }
    auto bump = PadicElement::from_digits(K, ds, prec);
    auto center = D.center.precision() >= prec
                      ? D.center
                      : PadicElement::from_digits(K, D.center.digits(), prec);
    return center + bump;
}
} // namespace

TEST_CASE("containment basics") {
    Disk D{Z5(0), Rational(1, 2), DiskKind::Open};
    CHECK(disk_contains(D, D.center));
    CHECK(disk_contains(D, Z5(5)));        // v=1 > 1/2
    CHECK(!disk_contains(D, Z5(3)));       // v=0

    // x = 4*5^2 + 5^4 lies in {v(x - 4*5^2) > 3}
    Disk D2{Z5(4 * 25), Rational(3), DiskKind::Open};
    CHECK(disk_contains(D2, Z5(4 * 25 + 625)));
    CHECK(!disk_contains(D2, Z5(4 * 25 + 125))); // distance exactly 3

    Disk D2c{Z5(4 * 25), Rational(3), DiskKind::Closed};
    CHECK(disk_contains(D2c, Z5(4 * 25 + 125)));
}

TEST_CASE("precision exhaustion on the open boundary") {
    Disk D{Z5(7, 4), Rational(4), DiskKind::Open};
    CHECK_THROWS_WITH_AS((void)disk_contains(D, Z5(7, 4)),
                         doctest::Contains("precision exhausted"), std::runtime_error);
    Disk Dc{Z5(7, 4), Rational(4), DiskKind::Closed};
    CHECK(disk_contains(Dc, Z5(7, 4)));
}

TEST_CASE("disk relations") {
    Disk outer{Z5(0), Rational(1), DiskKind::Open};
    Disk inner{Z5(0), Rational(2), DiskKind::Closed};
    CHECK(disk_relation(inner, outer) == DiskRelation::FirstInsideSecond);
    CHECK(disk_relation(outer, inner) == DiskRelation::SecondInsideFirst);

    // the two k=26 fixture disks are disjoint: v(8*5^2) = 2 <= 3
    Disk plus{Z5(4 * 25), Rational(3), DiskKind::Open};
    Disk minus{Z5(-4 * 25), Rational(3), DiskKind::Open};
    CHECK(disk_relation(plus, minus) == DiskRelation::Disjoint);

    // same set through a different center
    Disk moved{Z5(4 * 25 + 5 * 125), Rational(3), DiskKind::Open};
    CHECK(disk_relation(plus, moved) == DiskRelation::Equal);
    CHECK(disk_equal(plus, moved));

    // open vs closed at the same cut: open sits inside closed
    Disk oc{Z5(0), Rational(1), DiskKind::Closed};
    Disk oo{Z5(0), Rational(1), DiskKind::Open};
    CHECK(disk_relation(oo, oc) == DiskRelation::FirstInsideSecond);
}

TEST_CASE("trichotomy against membership sampling") {
    std::mt19937_64 rng(42);
    std::vector<Disk> pool;
    for (int i = 0; i < 8; ++i) {
        std::int64_t c = (std::int64_t)(rng() % 600) - 300;
        Rational cut((std::int64_t)(rng() % 6), 1 + (std::int64_t)(rng() % 2));
        pool.push_back({Z5(c, 14), cut, rng() % 2 ? DiskKind::Open : DiskKind::Closed});
    }
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = i + 1; j < pool.size(); ++j) {
            auto rel = disk_relation(pool[i], pool[j]);
            for (int t = 0; t < 20; ++t) {
                auto x = sample_point(pool[i], rng);
                bool in_j = disk_contains(pool[j], x);
                if (rel == DiskRelation::Disjoint) CHECK(!in_j);
                if (rel == DiskRelation::FirstInsideSecond || rel == DiskRelation::Equal)
                    CHECK(in_j);
            }
        }
}

TEST_CASE("mobius images") {
    Disk D{Z5(5), Rational(2), DiskKind::Open};
    AffineMap tr{Z5(1), Z5(7)};
    auto Dt = mobius_image(D, tr);
    CHECK(Dt.cut == Rational(2));
    CHECK(disk_contains(Dt, Z5(12)));

    AffineMap sc{Z5(5), Z5(0)};
    auto Ds = mobius_image(D, sc);
    CHECK(Ds.cut == Rational(3));

    // inversion of {v(x-1) >= 2} is itself
    Disk U{Z5(1), Rational(2), DiskKind::Closed};
    InversionMap inv{Z5(0)};
    auto Ui = mobius_image(U, inv);
    CHECK(Ui.cut == Rational(2));
    CHECK(disk_equal(Ui, U));

    // sampled points map into the image; outside points stay outside
    std::mt19937_64 rng(7);
    Disk W{Z5(3), Rational(1), DiskKind::Open};
    auto Wi = mobius_image(W, inv);
    for (int t = 0; t < 50; ++t) {
        auto x = sample_point(W, rng);
        auto y = PadicElement::from_int(Q5, 1, x.precision()) / x;
        CHECK(disk_contains(Wi, y));
    }
    for (int t = 0; t < 50; ++t) {
        std::int64_t n = (std::int64_t)(rng() % 1000) + 1;
        auto x = Z5(n, 14);
        if (disk_contains(W, x)) continue;
        if (!x.valuation().is_finite()) continue;
        auto y = PadicElement::from_int(Q5, 1, 14) / x;
        CHECK(!disk_contains(Wi, y));
    }

    CHECK_THROWS_AS((void)mobius_image(Disk{Z5(0), Rational(1), DiskKind::Open},
                                       InversionMap{Z5(25)}),
                    std::domain_error);
}

TEST_CASE("distance to field") {
    CHECK(!distance_to_field(Z5(17), Q5).is_finite());
    auto u = PadicElement::teichmuller(Q25, 1, 10);
    CHECK(distance_to_field(u, Q5) == Valuation(Rational(0)));
    auto pi = PadicElement::uniformizer_pow(Q5r2, 1, 10);
    CHECK(distance_to_field(pi, Q5) == Valuation(Rational(1, 2)));
}

TEST_CASE("field of definition") {
    Disk D{Z5(25), Rational(3), DiskKind::Open};
    CHECK(field_of_definition(D, Q5) == Q5);

    // D(5^3 u, >3) with u^2 = 3: Frobenius moves the disk, so Q25
    const auto& R = Q25.residue();
    std::int64_t u = ResidueField::ZERO;
    for (std::int64_t k = 0; k < R.group_order(); ++k)
        if (R.mul(k, k) == R.from_int(3)) { u = k; break; }
    auto a = PadicElement::teichmuller(Q25, u, 12, 3);
    Disk Du{a, Rational(3), DiskKind::Open};
    CHECK(field_of_definition(Du, Q5) == Q25);

    // wild example: D(pi, > 1/p) with pi^p = p is defined over Q_p since
    // v(zeta_p pi - pi) = 1/p + 1/(p-1) exceeds the cut
    auto Q5r5 = make_field(5, 1, 5);
    auto piw = PadicElement::uniformizer_pow(Q5r5, 1, 12);
    Disk Dw{piw, Rational(1, 5), DiskKind::Open};
    CHECK(field_of_definition(Dw, Q5) == Q5);

    // a tighter cut needs the full ramified field
    Disk Dtight{piw, Rational(1, 5) + Rational(1, 4) + Rational(1, 20), DiskKind::Open};
    auto F = field_of_definition(Dtight, Q5);
    CHECK(F.e == 5);
}

TEST_CASE("min_ram_degree") {
    Disk D{Z5(0), Rational(3, 2), DiskKind::Open};
    CHECK(min_ram_degree(D, Q5) == 1);

    auto Q5r5 = make_field(5, 1, 5);
    auto piw = PadicElement::uniformizer_pow(Q5r5, 1, 12);
    Disk Dw{piw, Rational(1, 5), DiskKind::Open};
    CHECK(min_ram_degree(Dw, Q5) == 5);

    // {v(x - pi) >= 3/4}, pi^2 = 5: distance from pi to Q5 and to unramified
    // fields is 1/2 < 3/4, pi itself lies inside
    auto pi = PadicElement::uniformizer_pow(Q5r2, 1, 12);
    Disk Dq{pi, Rational(3, 4), DiskKind::Closed};
    CHECK(min_ram_degree(Dq, Q5) == 2);
}

TEST_CASE("width and per-disk complexity") {
    Disk D0{Z5(0), Rational(0), DiskKind::Open};
    CHECK(width_t(D0, Q5, 1) == 1);
    CHECK(gamma_disk(D0, Q5) == 1);

    Disk Dh{Z5(0), Rational(1, 2), DiskKind::Open};
    CHECK(min_ram_degree(Dh, Q5) == 1);
    CHECK(width_t(Dh, Q5, 1) == 2);
    CHECK(gamma_disk(Dh, Q5) == 2);

    for (std::int64_t p : {3, 5}) {
        auto Qp = make_field(p, 1, 1);
        auto Qpr = make_field(p, 1, p);
        auto piw = PadicElement::uniformizer_pow(Qpr, 1, 2 * (int)p + 4);
        Disk Dw{piw, Rational(1, p), DiskKind::Open};
        CHECK(gamma_disk(Dw, Qp) == p);
    }

    auto pi = PadicElement::uniformizer_pow(Q5r2, 1, 12);
    Disk Dq{pi, Rational(3, 4), DiskKind::Closed};
    CHECK(gamma_disk(Dq, Q5) == 2);

    // unramified base change preserves gamma; ramified can lower it
    Disk Dh25{Z5(0).embed_into(Q25), Rational(1, 2), DiskKind::Open};
    CHECK(gamma_disk(Dh25, Q25) == 2);
    Disk Dh2{PadicElement::zero(Q5r2, 12), Rational(1, 2), DiskKind::Open};
    CHECK(gamma_disk(Dh2, Q5r2) == 1);
}

TEST_CASE("find_point") {
    Disk D{Z5(0), Rational(3, 2), DiskKind::Open};
    auto x = find_point(D, Q5);
    CHECK(disk_contains(D, x));
    CHECK(x.field().degree() == 1);

    auto Q5r5 = make_field(5, 1, 5);
    auto piw = PadicElement::uniformizer_pow(Q5r5, 1, 14);
    Disk Dw{piw, Rational(1, 5), DiskKind::Open};
    auto xw = find_point(Dw, Q5);
    CHECK(disk_contains(Dw, xw));
    CHECK(xw.field().e == 5);
    CHECK(xw.field().degree() <= 125); // within max(1, p^{2s-1}) for s = 1

    const auto& R = Q25.residue();
    auto a = PadicElement::from_digits(Q25, {{1, R.from_int(2)}, {3, 1}}, 12);
    Disk Du{a, Rational(2), DiskKind::Open};
    auto xu = find_point(Du, Q5);
    CHECK(xu.field() == Q5);
    CHECK(disk_contains(Du, xu));
}

TEST_CASE("min_ram_degree output is a power of p for disks defined over base") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        std::int64_t c = (std::int64_t)(rng() % 200);
        Rational cut((std::int64_t)(rng() % 5), 1 + (std::int64_t)(rng() % 3));
        Disk D{Z5(c, 12), cut, rng() % 2 ? DiskKind::Open : DiskKind::Closed};
        std::int64_t s = min_ram_degree(D, Q5);
        while (s % 5 == 0) s /= 5;
        CHECK(s == 1);
    }
}

TEST_CASE("canonical form and orbits") {
    Disk D{Z5(4 * 25 + 5 * 125 + 625), Rational(3), DiskKind::Open};
    auto C = canonical_disk(D);
    for (const auto& d : C.center.digits()) CHECK(d.index <= 3);
    CHECK(disk_equal(C, D));

    Disk Dc{Z5(25 + 125), Rational(3), DiskKind::Closed};
    auto Cc = canonical_disk(Dc);
    for (const auto& d : Cc.center.digits()) CHECK(d.index < 3);
    CHECK(disk_equal(Cc, Dc));

    const auto& R = Q25.residue();
    std::int64_t u = ResidueField::ZERO;
    for (std::int64_t k = 0; k < R.group_order(); ++k)
        if (R.mul(k, k) == R.from_int(3)) { u = k; break; }
    auto a = PadicElement::teichmuller(Q25, u, 12, 3);
    auto orb = disk_orbit(Disk{a, Rational(3), DiskKind::Open}, Q5);
    CHECK(orb.size() == 2);
    CHECK(disk_relation(orb.members[0], orb.members[1]) == DiskRelation::Disjoint);

    auto Q5r5 = make_field(5, 1, 5);
    auto piw = PadicElement::uniformizer_pow(Q5r5, 1, 12);
    auto worb = disk_orbit(Disk{piw, Rational(1, 5), DiskKind::Open}, Q5);
    CHECK(worb.size() == 1);
}
