#include "ptec/selmer.hpp"

#include "ptec/descent.hpp"
#include "ptec/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace ptec {

bool square_class_equal(const BigRat& u, const BigRat& v) {
    if (u == 0 || v == 0) throw ZeroInputError("square_class_equal: zero input");
    return is_square(u * v);
}

SquareClassVector descent_image(const FamilyCurve& curve, const CurvePoint& p) {
    if (p.is_infinity()) return {1, 1, 1};
    if (!is_on_curve(curve, p)) throw NotOnCurveError("descent_image: point not on curve");
    const BigRat e1(curve.e1), e2(curve.e2), e3(curve.e3);
    const BigRat& x = p.x();
    if (x == e1) return {(e1 - e2) * (e1 - e3), e1 - e2, e1 - e3};
    if (x == e2) return {e2 - e1, (e2 - e1) * (e2 - e3), e2 - e3};
    if (x == e3) return {e3 - e1, e3 - e2, (e3 - e1) * (e3 - e2)};
    return {x - e1, x - e2, x - e3};
}

namespace {

// A class of Qp*/Qp*^2 packed into a small code: valuation parity plus the
// unit part (quadratic character for odd p, the residue mod 8 for p = 2).
// Odd p has 4 classes, p = 2 has 8; pairs of codes index a 64-bit mask.

int class_code(const BigRat& r, const BigInt& p) {
    BigInt num = numerator(r), den = denominator(r);
    const bool neg = num < 0;
    if (neg) num = -num;
    const auto [vn, un] = remove_factor(num, p);
    const auto [vd, ud] = remove_factor(den, p);
    const int v = (vn - vd) & 1;
    if (p == 2) {
        // odd squares are 1 mod 8, so ud^{-1} = ud there
        int u = static_cast<int>(un % 8 * (ud % 8) % 8);
        if (neg) u = (8 - u) % 8;
        return v * 4 + (u >> 1);
    }
    BigInt t = un % p * powmod(ud, p - 2, p) % p;
    if (neg) t = p - t;
    return v * 2 + (legendre(t, p) == 1 ? 0 : 1);
}

int class_mul(int c1, int c2, bool p_is_two) {
    if (!p_is_two) return c1 ^ c2;
    const int v = ((c1 >> 2) ^ (c2 >> 2)) & 1;
    const int u = ((2 * (c1 & 3) + 1) * (2 * (c2 & 3) + 1)) % 8;
    return v * 4 + (u >> 1);
}

bool is_local_square(const BigRat& r, const BigInt& p) { return class_code(r, p) == 0; }

int pair_index(int c1, int c2) { return c1 * 8 + c2; }

// Extends the subgroup mask by one generator; classes all square to the
// identity, so mask | mask*g is already closed.
uint64_t subgroup_add(uint64_t mask, int g1, int g2, bool p_is_two) {
    uint64_t out = mask;
    for (int i = 0; i < 64; ++i) {
        if ((mask >> i) & 1) {
            const int c1 = class_mul(i / 8, g1, p_is_two);
            const int c2 = class_mul(i % 8, g2, p_is_two);
            out |= uint64_t(1) << pair_index(c1, c2);
        }
    }
    return out;
}

struct LocalImage {
    BigInt p;
    uint64_t mask = 1;  // identity pair

    bool contains(int c1, int c2) const { return (mask >> pair_index(c1, c2)) & 1; }
    int size() const { return std::popcount(mask); }
};

std::pair<int, int> image_pair_codes(const FamilyCurve& curve, const BigRat& x,
                                     const BigInt& p) {
    const BigRat e1(curve.e1), e2(curve.e2), e3(curve.e3);
    BigRat v1, v2;
    if (x == e1) {
        v1 = (e1 - e2) * (e1 - e3);
        v2 = e1 - e2;
    } else if (x == e2) {
        v1 = e2 - e1;
        v2 = (e2 - e1) * (e2 - e3);
    } else {
        v1 = x - e1;
        v2 = x - e2;
    }
    return {class_code(v1, p), class_code(v2, p)};
}

// Image of E(Qp)/2E(Qp) in (Qp*/Qp*^2)^2. Its order is known (4 for odd p,
// 8 for p = 2), which gives the sampling loop a rigorous stopping rule:
// the 2-torsion images seed the subgroup and rational x of the form
// base + u p^e are tried smallest-first until the order is reached.
LocalImage local_image(const FamilyCurve& curve, const BigInt& p, int depth,
                       const std::vector<CurvePoint>& seeds) {
    const bool two = (p == 2);
    const int target = two ? 8 : 4;
    LocalImage img{p, 1};

    auto absorb = [&](const BigRat& x) {
        const auto [c1, c2] = image_pair_codes(curve, x, p);
        if (!img.contains(c1, c2)) img.mask = subgroup_add(img.mask, c1, c2, two);
        return img.size() >= target;
    };

    for (const BigInt& e : {curve.e1, curve.e2, curve.e3}) {
        if (absorb(BigRat(e))) return img;
    }
    for (const CurvePoint& s : seeds) {
        if (!s.is_infinity() && absorb(s.x())) return img;
    }

    const BigRat e2(curve.e2), e3(curve.e3);
    const std::array<BigRat, 3> bases = {BigRat(0), e2, e3};
    const int64_t ucap = two ? (int64_t(1) << std::min(depth + 3, 20)) : 6'000;

    // u outermost so small residues are tried across every valuation first
    for (BigInt u = 1; u <= ucap; ++u) {
        if (u % p == 0) continue;
        for (int mag = 0; mag <= depth; ++mag) {
            for (const int e : {mag, -mag}) {
                if (e == 0 && mag != 0) continue;
                BigRat pe = 1;
                if (e >= 0) {
                    pe = BigRat(boost::multiprecision::pow(p, static_cast<unsigned>(e)));
                } else {
                    pe = BigRat(1, boost::multiprecision::pow(p, static_cast<unsigned>(-e)));
                }
                for (const int sign : {1, -1}) {
                    const BigRat step = BigRat(sign * u) * pe;
                    for (const BigRat& base : bases) {
                        const BigRat x = base + step;
                        if (x == 0 || x == e2 || x == e3) continue;
                        const BigRat fx = curve_rhs(curve, x);
                        if (fx == 0 || !is_local_square(fx, p)) continue;
                        if (absorb(x)) return img;
                    }
                }
            }
        }
    }
    throw InternalInvariantError("local_image: sampling did not reach the known group order");
}

std::vector<BigInt> support_of(const FamilyCurve& curve) {
    // primes of a, b, a-b, a+b cover every odd prime of D
    std::vector<BigInt> ps;
    const BigInt a = curve.triple.a, b = curve.triple.b;
    for (const BigInt& n : {a, b, a - b, a + b}) {
        if (n == 0) throw InternalInvariantError("support_of: degenerate triple");
        if (n == 1 || n == -1) continue;
        for (const BigInt& p : prime_support(n)) ps.push_back(p);
    }
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

std::vector<BigInt> signed_squarefree(const std::vector<BigInt>& primes) {
    std::vector<BigInt> out{1};
    for (const BigInt& p : primes) {
        const size_t n = out.size();
        for (size_t i = 0; i < n; ++i) out.push_back(out[i] * p);
    }
    const size_t n = out.size();
    for (size_t i = 0; i < n; ++i) out.push_back(-out[i]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SelmerCensus enumerate_selmer_candidates(const FamilyCurve& curve, int64_t search_bound,
                                         int depth_override) {
    SelmerCensus census;

    const BigInt e1 = curve.e1, e2 = curve.e2, e3 = curve.e3;
    const BigInt s1 = (e1 - e2) * (e1 - e3);
    const BigInt s2 = (e2 - e1) * (e2 - e3);
    const std::vector<BigInt> all_support = support_of(curve);

    auto restricted = [&](const BigInt& s) {
        std::vector<BigInt> ps;
        for (const BigInt& p : all_support)
            if (s % p == 0) ps.push_back(p);
        if (s % 2 == 0 && (ps.empty() || ps.front() != 2)) ps.insert(ps.begin(), 2);
        return ps;
    };
    const std::vector<BigInt> sup1 = restricted(s1);
    const std::vector<BigInt> sup2 = restricted(s2);

    census.bad_primes.push_back(2);
    for (const BigInt& p : all_support)
        if (p != 2) census.bad_primes.push_back(p);

    // points for seeding the local images and for global witnesses
    std::vector<CurvePoint> pts = search_points(curve, search_bound);
    {
        const BigInt c = curve.triple.c;
        const BigInt abc = BigInt(curve.triple.a) * curve.triple.b * c;
        pts.emplace_back(BigRat(c * c), BigRat(abc));
    }

    std::map<BigInt, LocalImage> images;
    for (const BigInt& p : census.bad_primes) {
        const int vp = remove_factor(2 * curve.D, p).first;
        const int depth = depth_override >= 0 ? depth_override : 2 * vp + 3;
        images.emplace(p, local_image(curve, p, depth, pts));
    }

    const std::vector<BigInt> d1s = signed_squarefree(sup1);
    const std::vector<BigInt> d2s = signed_squarefree(sup2);

    // memoized local classes of the d's at every bad prime
    const size_t np = census.bad_primes.size();
    auto classes_of = [&](const std::vector<BigInt>& ds) {
        std::vector<std::vector<int>> codes(ds.size(), std::vector<int>(np));
        for (size_t i = 0; i < ds.size(); ++i)
            for (size_t k = 0; k < np; ++k)
                codes[i][k] = class_code(BigRat(ds[i]), census.bad_primes[k]);
        return codes;
    };
    const auto codes1 = classes_of(d1s);
    const auto codes2 = classes_of(d2s);

    size_t solvable = 0;
    for (size_t i = 0; i < d1s.size(); ++i) {
        for (size_t j = 0; j < d2s.size(); ++j) {
            SelmerCandidate cand;
            cand.d1 = d1s[i];
            cand.d2 = d2s[j];
            bool ok = cand.d1 > 0;  // real place: x - e1 >= 0 on both components
            for (size_t k = 0; ok && k < np; ++k) {
                const auto& img = images.at(census.bad_primes[k]);
                ok = img.contains(codes1[i][k], codes2[j][k]);
            }
            cand.locally_solvable = ok;
            if (ok) ++solvable;
            census.candidates.push_back(std::move(cand));
        }
    }

    if (solvable == 0 || (solvable & (solvable - 1)) != 0)
        throw InternalInvariantError("enumerate_selmer_candidates: census size not a power of 2");
    census.solvable_dim = std::bit_width(solvable) - 1;

    // upgrade candidates witnessed by an actual rational point
    for (SelmerCandidate& cand : census.candidates) {
        if (!cand.locally_solvable) continue;
        for (const CurvePoint& pt : pts) {
            const SquareClassVector vec = descent_image(curve, pt);
            if (!square_class_equal(vec.v1, BigRat(cand.d1)) ||
                !square_class_equal(vec.v2, BigRat(cand.d2)))
                continue;
            const BigRat& x = pt.x();
            auto leg = [&](const BigRat& diff, const BigRat& d) -> std::optional<BigRat> {
                if (diff == 0) return BigRat(0);
                return exact_sqrt(diff / d);
            };
            const auto z1 = leg(x - BigRat(e1), BigRat(cand.d1));
            const auto z2 = leg(x - BigRat(e2), BigRat(cand.d2));
            const auto z3 = leg(x - BigRat(e3), BigRat(cand.d1 * cand.d2));
            if (z1 && z2 && z3) {
                cand.global_witness = std::array<BigRat, 3>{*z1, *z2, *z3};
                break;
            }
        }
    }
    return census;
}

int selmer_upper_bound(const FamilyCurve& curve, int64_t search_bound) {
    const SelmerCensus census = enumerate_selmer_candidates(curve, search_bound);
    if (census.solvable_dim < 2)
        throw InternalInvariantError("selmer_upper_bound: torsion classes missing from census");
    return census.solvable_dim - 2;
}

}  // namespace ptec
