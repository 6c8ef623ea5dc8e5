#pragma once

#include "ptec/curves.hpp"

#include <cstdint>
#include <vector>

namespace ptec {

struct TorsionReport {
    std::vector<CurvePoint> two_torsion;  // the three affine order-2 points
    // The family's torsion subgroup is always Z/2Z x Z/2Z (order 4).
    std::vector<std::pair<int64_t, int64_t>> order_bound_evidence;  // (p, #E(F_p))
    bool has_order4 = false;

    static constexpr int order = 4;
};

/// The three affine points with y = 0: (0,0), (a^2,0), (b^2,0).
std::vector<CurvePoint> two_torsion_points(const FamilyCurve& curve);

/// P = 2Q is solvable over Q iff x - e is a rational square for each root e.
bool is_halvable(const FamilyCurve& curve, const CurvePoint& p);

/// Checks that none of the three 2-torsion points is halvable, so the curve
/// carries no point of order 4 (hence none of order 8). A false return
/// would mean a bug, not a property of the curve.
bool verify_no_order_four(const FamilyCurve& curve);

/// True iff nP = O for some n in {1..10, 12}. Integer points with y != 0
/// take the y | D divisibility fast path first.
bool is_torsion(const FamilyCurve& curve, const CurvePoint& p);

/// Torsion structure with mod-p corroboration: the gcd of #E(F_p) over good
/// odd primes (at least three, extended until its odd part is 1) bounds the
/// torsion order, and the no-order-4 check pins it to 4.
TorsionReport torsion_subgroup(const FamilyCurve& curve, int64_t prime_cap = 1000);

}  // namespace ptec
