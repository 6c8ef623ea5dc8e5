#include "ptec/descent.hpp"

#include "ptec/errors.hpp"
#include "ptec/torsion.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace ptec;

namespace {

FamilyCurve curve(int64_t a, int64_t b, int64_t c) {
    return curve_from_triple(make_triple(a, b, c));
}

bool image_trivial(const SquareClassVector& v) {
    return is_square(v.v1) && is_square(v.v2) && is_square(v.v3);
}

bool images_equal(const SquareClassVector& u, const SquareClassVector& v) {
    return square_class_equal(u.v1, v.v1) && square_class_equal(u.v2, v.v2) &&
           square_class_equal(u.v3, v.v3);
}

bool contains_x(const std::vector<CurvePoint>& pts, const BigRat& x) {
    return std::any_of(pts.begin(), pts.end(),
                       [&](const CurvePoint& p) { return p.x() == x; });
}

}  // namespace

TEST_CASE("square_class_equal") {
    CHECK(square_class_equal(2, 8));
    CHECK_FALSE(square_class_equal(2, -2));
    CHECK(square_class_equal(BigRat(25, 4), 1));
    CHECK_THROWS_AS(square_class_equal(0, 3), ZeroInputError);
}

TEST_CASE("descent_image values and conventions") {
    const FamilyCurve e = curve(3, 4, 5);

    const SquareClassVector w = descent_image(e, CurvePoint(25, 60));
    CHECK(image_trivial(w));  // (25, 16, 9): the witness is a double

    const SquareClassVector t1 = descent_image(e, CurvePoint(0, 0));
    CHECK(t1.v1 == 144);
    CHECK(t1.v2 == -9);
    CHECK(t1.v3 == -16);

    const SquareClassVector g = descent_image(e, CurvePoint(2, 14));
    CHECK(g.v1 == 2);
    CHECK(g.v2 == -7);
    CHECK(g.v3 == -14);

    CHECK(image_trivial(descent_image(e, CurvePoint::infinity())));
    CHECK_THROWS_AS(descent_image(e, CurvePoint(1, 1)), NotOnCurveError);
}

TEST_CASE("descent map is a homomorphism with kernel 2E(Q)") {
    std::mt19937_64 rng(97);
    for (const auto& t : gen_triples_even(7)) {
        const FamilyCurve e = curve_from_triple(t);
        const CurvePoint w(BigRat(BigInt(t.c) * t.c), BigRat(BigInt(t.a) * t.b * t.c));
        const std::vector<CurvePoint> gens = {CurvePoint(BigRat(e.e1), 0),
                                              CurvePoint(BigRat(e.e3), 0), w};
        auto sample = [&] {
            CurvePoint p = CurvePoint::infinity();
            for (const auto& g : gens) p = add(e, p, scalar_mul(e, BigInt(rng() % 3), g));
            return p;
        };
        for (int trial = 0; trial < 8; ++trial) {
            const CurvePoint p = sample(), q = sample();
            const CurvePoint sum = add(e, p, q);
            if (p.is_infinity() || q.is_infinity() || sum.is_infinity()) continue;
            const SquareClassVector ip = descent_image(e, p), iq = descent_image(e, q);
            const SquareClassVector prod{ip.v1 * iq.v1, ip.v2 * iq.v2, ip.v3 * iq.v3};
            CHECK(images_equal(descent_image(e, sum), prod));
            // product constraint
            CHECK(is_square(ip.v1 * ip.v2 * ip.v3));
        }
    }

    // kernel: trivial image iff halvable, away from the 2-torsion x's
    const FamilyCurve e = curve(3, 4, 5);
    for (const CurvePoint& p : search_points(e, 80)) {
        if (p.y() == 0) continue;
        CHECK(image_trivial(descent_image(e, p)) == is_halvable(e, p));
    }
}

TEST_CASE("independence_rank") {
    const FamilyCurve e = curve(3, 4, 5);
    CHECK(independence_rank(e, {CurvePoint(2, 14)}) == 1);
    CHECK(independence_rank(e, {CurvePoint(25, 60)}) == 0);

    // invariant under reordering, negation, and torsion translation
    const CurvePoint g(2, 14);
    const CurvePoint g2 = add(e, g, CurvePoint(9, 0));
    CHECK(independence_rank(e, {g, g2}) == 1);
    CHECK(independence_rank(e, {g2, g}) == 1);
    CHECK(independence_rank(e, {negate(e, g)}) == 1);
    CHECK(independence_rank(e, {g, negate(e, g)}) == 1);
    CHECK_THROWS_AS(independence_rank(e, {CurvePoint::infinity()}), ZeroInputError);
}

TEST_CASE("search_points") {
    const FamilyCurve e = curve(3, 4, 5);
    const auto pts = search_points(e, 30);
    CHECK(contains_x(pts, 0));
    CHECK(contains_x(pts, 9));
    CHECK(contains_x(pts, 16));
    CHECK(contains_x(pts, 2));
    CHECK(contains_x(pts, 25));
    for (const auto& p : pts) {
        CHECK(is_on_curve(e, p));
        CHECK(p.y() >= 0);
    }
    CHECK(std::is_sorted(pts.begin(), pts.end(), [](const auto& l, const auto& r) {
        return l.x() < r.x();
    }));

    const auto pts2 = search_points(curve(5, 12, 13), 200);
    CHECK(contains_x(pts2, 169));  // (c^2, abc)

    const auto pts3 = search_points(e, 1);
    CHECK(contains_x(pts3, 0));
    CHECK_THROWS_AS(search_points(e, 0), EmptyDomainError);
}

TEST_CASE("infinite_order_witness certificates") {
    const WitnessCertificate cert = infinite_order_witness(curve(3, 4, 5));
    CHECK(cert.point == CurvePoint(25, 60));
    CHECK(cert.on_curve);
    CHECK(cert.y_value == 60);
    CHECK_FALSE(cert.y_divides_disc);
    CHECK(cert.no_multiple_vanishes);
    CHECK(cert.multiples_checked == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12});
    CHECK(cert.valid());

    CHECK(infinite_order_witness(curve(5, 12, 13)).point == CurvePoint(169, 780));
    CHECK(infinite_order_witness(curve(17, 144, 145)).point == CurvePoint(21025, 354960));
}

TEST_CASE("selmer census on the first curve") {
    const FamilyCurve e = curve(3, 4, 5);
    const SelmerCensus census = enumerate_selmer_candidates(e, 100);
    CHECK(census.solvable_dim == 3);  // 2^(r+2) = 8
    CHECK(census.bad_primes == std::vector<BigInt>{2, 3, 7});

    auto find = [&](int64_t d1, int64_t d2) -> const SelmerCandidate* {
        for (const auto& cand : census.candidates)
            if (cand.d1 == d1 && cand.d2 == d2) return &cand;
        return nullptr;
    };
    const SelmerCandidate* triv = find(1, 1);
    REQUIRE(triv != nullptr);
    CHECK(triv->locally_solvable);
    CHECK(triv->global_witness.has_value());

    // the class of (2, -7) is witnessed by the point (2, 14)
    const SelmerCandidate* g = find(2, -7);
    REQUIRE(g != nullptr);
    CHECK(g->locally_solvable);
    REQUIRE(g->global_witness.has_value());
    const auto& z = *g->global_witness;
    const BigRat d1 = 2, d2 = -7;
    CHECK(d1 * z[0] * z[0] - d2 * z[1] * z[1] == BigRat(e.e2 - e.e1));
    CHECK(d1 * z[0] * z[0] - d1 * d2 * z[2] * z[2] == BigRat(e.e3 - e.e1));

    // negative d1 fails at the real place
    const SelmerCandidate* neg = find(-1, 1);
    REQUIRE(neg != nullptr);
    CHECK_FALSE(neg->locally_solvable);

    CHECK(selmer_upper_bound(e, 100) == 1);
}

TEST_CASE("rank intervals collapse on small published curves") {
    DescentConfig config;
    config.search_bound = 200;

    const RankInterval r345 = rank_interval(curve(3, 4, 5), config);
    CHECK(r345.lower == 1);
    CHECK(r345.upper == 1);
    CHECK_FALSE(r345.lower_witnesses.empty());

    const RankInterval r21 = rank_interval(curve(21, 20, 29), config);
    CHECK(r21.lower == 2);
    CHECK(r21.upper == 2);

    config.search_bound = 1000;
    const RankInterval r7 = rank_interval(curve(7, 24, 25), config);
    CHECK(r7.lower == 2);
    CHECK(r7.upper == 2);

    DescentConfig no_selmer;
    no_selmer.selmer_enabled = false;
    no_selmer.search_bound = 50;
    const RankInterval capped = rank_interval(curve(9, 40, 41), no_selmer);
    CHECK(capped.lower >= 1);
    CHECK(capped.upper == kRankSanityCap);
    CHECK(capped.lower <= capped.upper);
}
