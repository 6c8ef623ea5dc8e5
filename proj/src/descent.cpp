#include "ptec/descent.hpp"

#include "ptec/errors.hpp"
#include "ptec/torsion.hpp"

#include <algorithm>
#include <sstream>

namespace ptec {

namespace {

bool vector_is_trivial(const SquareClassVector& v) {
    return is_square(v.v1) && is_square(v.v2) && is_square(v.v3);
}

SquareClassVector vector_mul(const SquareClassVector& u, const SquareClassVector& v) {
    return {u.v1 * v.v1, u.v2 * v.v2, u.v3 * v.v3};
}

// membership in the F2-span: v times some subset product must be trivial
bool in_span(const SquareClassVector& v, const std::vector<SquareClassVector>& basis) {
    const size_t subsets = size_t(1) << basis.size();
    for (size_t s = 0; s < subsets; ++s) {
        SquareClassVector w = v;
        for (size_t i = 0; i < basis.size(); ++i)
            if ((s >> i) & 1) w = vector_mul(w, basis[i]);
        if (vector_is_trivial(w)) return true;
    }
    return false;
}

std::pair<int, std::vector<CurvePoint>> independence_with_contributors(
    const FamilyCurve& curve, const std::vector<CurvePoint>& points) {
    std::vector<SquareClassVector> basis = {
        descent_image(curve, CurvePoint(BigRat(curve.e1), 0)),
        descent_image(curve, CurvePoint(BigRat(curve.e2), 0)),
    };
    int dim = 0;
    std::vector<CurvePoint> contributors;
    for (const CurvePoint& p : points) {
        if (p.is_infinity())
            throw ZeroInputError("independence_rank: the point at infinity is not allowed");
        const SquareClassVector v = descent_image(curve, p);
        if (!in_span(v, basis)) {
            basis.push_back(v);
            contributors.push_back(p);
            ++dim;
        }
    }
    return {dim, contributors};
}

}  // namespace

int independence_rank(const FamilyCurve& curve, const std::vector<CurvePoint>& points) {
    return independence_with_contributors(curve, points).first;
}

std::vector<CurvePoint> search_points(const FamilyCurve& curve, int64_t height_bound) {
    if (height_bound < 1) throw EmptyDomainError("search_points: height_bound must be >= 1");
    std::vector<CurvePoint> out;
    const int64_t emax = static_cast<int64_t>(isqrt(BigInt(height_bound)));
    for (int64_t e = 1; e <= emax; ++e) {
        const BigInt e2 = BigInt(e) * e;
        const BigInt Ae2 = curve.A * e2;
        const BigInt Be4 = curve.B * e2 * e2;
        const BigInt e3 = e2 * e;
        for (int64_t m = -height_bound; m <= height_bound; ++m) {
            if (std::gcd(m, e) != 1) continue;
            const BigInt bm = m;
            const BigInt n = bm * (bm * bm + Ae2 * bm + Be4);
            if (n < 0 || !is_perfect_square(n)) continue;
            out.emplace_back(BigRat(bm, e2), BigRat(isqrt(n), e3));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const CurvePoint& l, const CurvePoint& r) { return l.x() < r.x(); });
    return out;
}

WitnessCertificate infinite_order_witness(const FamilyCurve& curve) {
    WitnessCertificate cert;
    const BigInt a = curve.triple.a, b = curve.triple.b, c = curve.triple.c;
    const BigInt abc = a * b * c;
    cert.point = CurvePoint(BigRat(c * c), BigRat(abc));
    cert.on_curve = is_on_curve(curve, cert.point);
    cert.y_value = abc;
    cert.disc = curve.D;
    cert.y_divides_disc = (curve.D % abc == 0);
    cert.multiples_checked = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12};
    cert.no_multiple_vanishes = true;
    CurvePoint q = CurvePoint::infinity();
    int reached = 0;
    for (int n : cert.multiples_checked) {
        while (reached < n) {
            q = add(curve, q, cert.point);
            ++reached;
        }
        if (q.is_infinity()) {
            cert.no_multiple_vanishes = false;
            break;
        }
    }
    if (!cert.valid())
        throw InternalInvariantError("infinite_order_witness: certificate failed for (c^2, abc)");
    return cert;
}

RankInterval rank_interval(const FamilyCurve& curve, const DescentConfig& config,
                           const std::vector<CurvePoint>& extra_points) {
    RankInterval interval;
    std::ostringstream notes;

    std::vector<CurvePoint> pts = search_points(curve, config.search_bound);
    const size_t found = pts.size();
    for (const CurvePoint& p : extra_points) {
        if (p.is_infinity()) continue;
        if (!is_on_curve(curve, p)) throw NotOnCurveError("rank_interval: supplied point not on curve");
        pts.push_back(p);
    }

    const WitnessCertificate cert = infinite_order_witness(curve);
    pts.push_back(cert.point);

    auto [dim, contributors] = independence_with_contributors(curve, pts);
    interval.lower = std::max(1, dim);
    interval.lower_witnesses = contributors.empty()
                                   ? std::vector<CurvePoint>{cert.point}
                                   : std::move(contributors);
    notes << "search_bound=" << config.search_bound << " found=" << found
          << " independence=" << dim << " witness=(c^2,abc) certified";

    if (config.selmer_enabled) {
        try {
            SelmerCensus census =
                enumerate_selmer_candidates(curve, config.search_bound,
                                            config.lifting_depth_override);
            interval.upper = std::min(census.solvable_dim - 2, kRankSanityCap);
            for (SelmerCandidate& cand : census.candidates)
                if (cand.locally_solvable)
                    interval.upper_evidence.push_back(std::move(cand));
            notes << "; selmer_dim=" << census.solvable_dim
                  << " upper=" << interval.upper << " bad_primes=";
            for (size_t i = 0; i < census.bad_primes.size(); ++i)
                notes << (i ? "," : "") << census.bad_primes[i];
        } catch (const FactorizationFailure& e) {
            interval.upper = kRankSanityCap;
            notes << "; selmer skipped (" << e.what() << "), upper capped at "
                  << kRankSanityCap;
        }
    } else {
        interval.upper = kRankSanityCap;
        notes << "; selmer disabled, upper capped at " << kRankSanityCap;
    }

    if (interval.lower > interval.upper)
        throw InternalInvariantError("rank_interval: lower bound exceeds upper bound");
    interval.method_notes = notes.str();
    return interval;
}

}  // namespace ptec
