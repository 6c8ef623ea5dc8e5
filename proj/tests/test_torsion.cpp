#include "ptec/torsion.hpp"

#include "ptec/errors.hpp"

#include <doctest.h>

using namespace ptec;

namespace {

FamilyCurve curve(int64_t a, int64_t b, int64_t c) {
    return curve_from_triple(make_triple(a, b, c));
}

}  // namespace

TEST_CASE("two_torsion_points") {
    const auto pts = two_torsion_points(curve(3, 4, 5));
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == CurvePoint(0, 0));
    CHECK(pts[1] == CurvePoint(9, 0));
    CHECK(pts[2] == CurvePoint(16, 0));

    const auto pts2 = two_torsion_points(curve(5, 12, 13));
    CHECK(pts2[1] == CurvePoint(25, 0));
    CHECK(pts2[2] == CurvePoint(144, 0));

    for (const auto& t : gen_triples_even(15)) {
        const FamilyCurve e = curve_from_triple(t);
        const auto tt = two_torsion_points(e);
        CHECK(tt.size() == 3);
        for (const auto& p : tt) {
            CHECK(is_on_curve(e, p));
            CHECK(scalar_mul(e, 2, p).is_infinity());
        }
    }
}

TEST_CASE("is_halvable") {
    const FamilyCurve e = curve(3, 4, 5);
    CHECK(is_halvable(e, CurvePoint(25, 60)));        // 25, 16, 9 all squares
    CHECK_FALSE(is_halvable(e, CurvePoint(0, 0)));    // -9 is not a square
    CHECK_FALSE(is_halvable(e, CurvePoint(9, 0)));    // 9 - 16 = -7 is not
    CHECK_THROWS_AS(is_halvable(e, CurvePoint(1, 1)), NotOnCurveError);
    CHECK_THROWS_AS(is_halvable(e, CurvePoint::infinity()), NotOnCurveError);
}

TEST_CASE("no order-4 point on any family curve") {
    CHECK(verify_no_order_four(curve(3, 4, 5)));
    CHECK(verify_no_order_four(curve(17, 144, 145)));
    for (const auto& t : gen_triples_even(15))
        CHECK(verify_no_order_four(curve_from_triple(t)));
}

TEST_CASE("is_torsion") {
    const FamilyCurve e = curve(3, 4, 5);
    // fast path: y = 60 does not divide D = 1016064
    CHECK(e.D % 60 != 0);
    CHECK_FALSE(is_torsion(e, CurvePoint(25, 60)));
    CHECK(is_torsion(e, CurvePoint(9, 0)));
    CHECK(is_torsion(e, CurvePoint::infinity()));
    // (2,14) has y | D, so only the Mazur-cap path decides it
    CHECK(e.D % 14 == 0);
    CHECK_FALSE(is_torsion(e, CurvePoint(2, 14)));
}

TEST_CASE("torsion_subgroup") {
    const TorsionReport report = torsion_subgroup(curve(3, 4, 5));
    CHECK(report.two_torsion.size() == 3);
    CHECK_FALSE(report.has_order4);
    CHECK(TorsionReport::order == 4);
    REQUIRE(report.order_bound_evidence.size() >= 3);
    CHECK(report.order_bound_evidence.front() ==
          std::pair<int64_t, int64_t>{11, 16});  // smallest good prime

    int64_t g = 0;
    for (const auto& [p, n] : report.order_bound_evidence) g = std::gcd(g, n);
    CHECK(g % 4 == 0);
    while (g % 2 == 0) g /= 2;
    CHECK(g == 1);  // odd torsion excluded

    CHECK_NOTHROW(torsion_subgroup(curve(7, 24, 25)));
    CHECK_THROWS_AS(torsion_subgroup(curve(3, 4, 5), 12), InsufficientGoodPrimesError);
}

TEST_CASE("the witness point is never torsion") {
    for (const auto& t : gen_triples_even(12)) {
        const FamilyCurve e = curve_from_triple(t);
        const BigInt c2 = BigInt(t.c) * t.c;
        const BigInt abc = BigInt(t.a) * t.b * t.c;
        CHECK_FALSE(is_torsion(e, CurvePoint(BigRat(c2), BigRat(abc))));
    }
}
