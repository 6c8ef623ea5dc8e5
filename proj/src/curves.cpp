#include "ptec/curves.hpp"

#include "ptec/errors.hpp"

#include <ostream>

namespace ptec {

std::ostream& operator<<(std::ostream& os, const CurvePoint& p) {
    if (p.is_infinity()) return os << "O";
    return os << "(" << p.x() << ", " << p.y() << ")";
}

FamilyCurve curve_from_triple(const PythagoreanTriple& t) {
    if (!is_valid_triple(t)) throw InvalidTripleError("curve_from_triple: invalid triple");
    FamilyCurve curve;
    curve.triple = t;
    const BigInt a = t.a, b = t.b, c = t.c;
    curve.A = -c * c;
    curve.B = a * a * b * b;
    curve.e1 = 0;
    curve.e2 = a * a;
    curve.e3 = b * b;
    const BigInt a2b2 = a * a * b * b;
    curve.D = a2b2 * a2b2 * (c * c * c * c - 4 * a2b2);
    return curve;
}

BigInt discriminant(const FamilyCurve& curve) { return curve.D; }

BigInt discriminant_from_coefficients(const BigInt& a, const BigInt& b, const BigInt& c) {
    return -4 * a * a * a * c + a * a * b * b + 18 * a * b * c - 4 * b * b * b - 27 * c * c;
}

BigRat curve_rhs(const FamilyCurve& curve, const BigRat& x) {
    return x * x * x + BigRat(curve.A) * x * x + BigRat(curve.B) * x;
}

bool is_on_curve(const FamilyCurve& curve, const CurvePoint& p) {
    if (p.is_infinity()) return true;
    return p.y() * p.y() == curve_rhs(curve, p.x());
}

namespace {

void require_on_curve(const FamilyCurve& curve, const CurvePoint& p, const char* op) {
    if (!is_on_curve(curve, p))
        throw NotOnCurveError(std::string(op) + ": point not on curve");
}

}  // namespace

CurvePoint negate(const FamilyCurve& curve, const CurvePoint& p) {
    require_on_curve(curve, p, "negate");
    if (p.is_infinity()) return p;
    return {p.x(), -p.y()};
}

CurvePoint add(const FamilyCurve& curve, const CurvePoint& p, const CurvePoint& q) {
    require_on_curve(curve, p, "add");
    require_on_curve(curve, q, "add");
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const BigRat A(curve.A), B(curve.B);
    BigRat lambda;
    if (p.x() == q.x()) {
        if (p.y() != q.y() || p.y() == 0) return CurvePoint::infinity();
        // tangent
        lambda = (3 * p.x() * p.x() + 2 * A * p.x() + B) / (2 * p.y());
    } else {
        lambda = (q.y() - p.y()) / (q.x() - p.x());
    }
    const BigRat x3 = lambda * lambda - A - p.x() - q.x();
    const BigRat y3 = lambda * (p.x() - x3) - p.y();
    return {x3, y3};
}

CurvePoint scalar_mul(const FamilyCurve& curve, const BigInt& n, const CurvePoint& p) {
    require_on_curve(curve, p, "scalar_mul");
    BigInt k = n;
    CurvePoint base = p;
    if (k < 0) {
        k = -k;
        base = negate(curve, base);
    }
    CurvePoint acc = CurvePoint::infinity();
    while (k > 0) {
        if ((k & 1) != 0) acc = add(curve, acc, base);
        k >>= 1;
        if (k > 0) base = add(curve, base, base);
    }
    return acc;
}

int64_t count_points_mod_p(const FamilyCurve& curve, int64_t p) {
    if (p < 3 || !is_probable_prime(BigInt(p)))
        throw BadReductionPrimeError("count_points_mod_p: p must be an odd prime");
    if (curve.D % p == 0)
        throw BadReductionPrimeError("count_points_mod_p: p divides the discriminant");

    const int64_t A = static_cast<int64_t>(((curve.A % p) + p) % p);
    const int64_t B = static_cast<int64_t>(((curve.B % p) + p) % p);

    // Legendre via Euler's criterion; p stays far below 2^31 in practice.
    auto mulmod = [p](int64_t x, int64_t y) { return static_cast<int64_t>((__int128)x * y % p); };
    auto chi = [&](int64_t t) {
        int64_t r = 1, base = t, e = (p - 1) / 2;
        while (e > 0) {
            if (e & 1) r = mulmod(r, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        return r;
    };

    int64_t n = 1;  // point at infinity
    for (int64_t x = 0; x < p; ++x) {
        const int64_t t = mulmod(x, mulmod(x, x) + mulmod(A, x) + B) % p;
        if (t == 0) {
            n += 1;
        } else if (chi(t) == 1) {
            n += 2;
        }
    }
    return n;
}

}  // namespace ptec
