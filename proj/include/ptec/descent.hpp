#pragma once

#include "ptec/curves.hpp"
#include "ptec/selmer.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ptec {

/// F2-dimension of the span of the points' descent images modulo the
/// subgroup generated by the 2-torsion images; a certified lower bound on
/// the Mordell-Weil rank.
int independence_rank(const FamilyCurve& curve, const std::vector<CurvePoint>& points);

/// All affine points with x = m/e^2, |m| <= height_bound,
/// 1 <= e <= isqrt(height_bound), up to the sign of y (y >= 0 kept),
/// ordered by ascending x.
std::vector<CurvePoint> search_points(const FamilyCurve& curve, int64_t height_bound);

/// Certificate that P = (c^2, abc) has infinite order: the on-curve
/// identity, the divisibility abc not | D, and nP != O over the Mazur cap.
struct WitnessCertificate {
    CurvePoint point;
    bool on_curve = false;
    BigInt y_value;
    BigInt disc;
    bool y_divides_disc = true;
    std::vector<int> multiples_checked;
    bool no_multiple_vanishes = false;

    bool valid() const { return on_curve && !y_divides_disc && no_multiple_vanishes; }
};

WitnessCertificate infinite_order_witness(const FamilyCurve& curve);

struct DescentConfig {
    int64_t search_bound = 2000;
    bool selmer_enabled = true;
    int64_t torsion_prime_cap = 1000;
    int lifting_depth_override = -1;

    bool operator==(const DescentConfig&) const = default;
};

inline constexpr int kRankSanityCap = 48;  // degree bound for the family

struct RankInterval {
    int lower = 0;
    int upper = kRankSanityCap;
    std::vector<CurvePoint> lower_witnesses;
    std::vector<SelmerCandidate> upper_evidence;
    std::string method_notes;
};

/// lower = max(1, independence of found + supplied + witness points);
/// upper = Selmer bound when enabled, else the sanity cap.
RankInterval rank_interval(const FamilyCurve& curve, const DescentConfig& config = {},
                           const std::vector<CurvePoint>& extra_points = {});

}  // namespace ptec
