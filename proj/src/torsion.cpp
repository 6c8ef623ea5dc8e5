#include "ptec/torsion.hpp"

#include "ptec/errors.hpp"

#include <numeric>

namespace ptec {

namespace {

const std::array<int, 11> kMazurOrders = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12};

}  // namespace

std::vector<CurvePoint> two_torsion_points(const FamilyCurve& curve) {
    return {CurvePoint(BigRat(curve.e1), 0), CurvePoint(BigRat(curve.e2), 0),
            CurvePoint(BigRat(curve.e3), 0)};
}

bool is_halvable(const FamilyCurve& curve, const CurvePoint& p) {
    if (p.is_infinity()) throw NotOnCurveError("is_halvable: affine point required");
    if (!is_on_curve(curve, p)) throw NotOnCurveError("is_halvable: point not on curve");
    return is_square(p.x() - BigRat(curve.e1)) && is_square(p.x() - BigRat(curve.e2)) &&
           is_square(p.x() - BigRat(curve.e3));
}

bool verify_no_order_four(const FamilyCurve& curve) {
    for (const CurvePoint& t : two_torsion_points(curve)) {
        if (is_halvable(curve, t)) return false;
    }
    return true;
}

bool is_torsion(const FamilyCurve& curve, const CurvePoint& p) {
    if (p.is_infinity()) return true;
    if (!is_on_curve(curve, p)) throw NotOnCurveError("is_torsion: point not on curve");
    if (p.y() == 0) return true;
    // Nagell-Lutz contrapositive for integer points
    if (denominator(p.x()) == 1 && denominator(p.y()) == 1) {
        if (curve.D % numerator(p.y()) != 0) return false;
    }
    for (int n : kMazurOrders) {
        if (scalar_mul(curve, n, p).is_infinity()) return true;
    }
    return false;
}

TorsionReport torsion_subgroup(const FamilyCurve& curve, int64_t prime_cap) {
    TorsionReport report;
    report.two_torsion = two_torsion_points(curve);
    report.has_order4 = !verify_no_order_four(curve);
    if (report.has_order4)
        throw InternalInvariantError("torsion_subgroup: 2-torsion point became halvable");

    const BigInt twoD = 2 * curve.D;
    int64_t g = 0;
    for (int64_t p : small_odd_primes()) {
        if (p >= prime_cap) break;
        if (twoD % p == 0) continue;
        const int64_t n = count_points_mod_p(curve, p);
        report.order_bound_evidence.emplace_back(p, n);
        g = std::gcd(g, n);
        if (report.order_bound_evidence.size() >= 3) {
            int64_t odd = g;
            while (odd % 2 == 0) odd /= 2;
            if (odd == 1) break;
        }
    }
    if (report.order_bound_evidence.size() < 3)
        throw InsufficientGoodPrimesError("torsion_subgroup: fewer than 3 good primes below cap");
    int64_t odd = g;
    while (odd % 2 == 0) odd /= 2;
    if (odd != 1)
        throw InsufficientGoodPrimesError(
            "torsion_subgroup: prime cap too low to exclude odd torsion");
    if (g % 4 != 0)
        throw InternalInvariantError("torsion_subgroup: mod-p counts not divisible by 4");
    return report;
}

}  // namespace ptec
