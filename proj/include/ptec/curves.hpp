#pragma once

#include "ptec/bigint.hpp"
#include "ptec/triples.hpp"

#include <cstdint>
#include <iosfwd>

namespace ptec {

/// A point of E(Q): either the point at infinity or an affine pair of
/// rationals in lowest terms.
class CurvePoint {
public:
    CurvePoint() : inf_(true) {}
    CurvePoint(BigRat x, BigRat y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}

    static CurvePoint infinity() { return CurvePoint(); }

    bool is_infinity() const { return inf_; }
    const BigRat& x() const { return x_; }
    const BigRat& y() const { return y_; }

    bool operator==(const CurvePoint& o) const {
        if (inf_ || o.inf_) return inf_ == o.inf_;
        return x_ == o.x_ && y_ == o.y_;
    }

private:
    bool inf_;
    BigRat x_, y_;
};

std::ostream& operator<<(std::ostream& os, const CurvePoint& p);

/// y^2 = x(x - a^2)(x - b^2) = x^3 + A x^2 + B x with A = -c^2, B = a^2 b^2.
struct FamilyCurve {
    PythagoreanTriple triple;
    BigInt A;           // x^2 coefficient
    BigInt B;           // x coefficient
    BigInt e1, e2, e3;  // roots 0, a^2, b^2
    BigInt D;           // a^4 b^4 (c^4 - 4 a^2 b^2)
};

FamilyCurve curve_from_triple(const PythagoreanTriple& t);

/// a^4 b^4 (c^4 - 4 a^2 b^2); always nonzero for a valid triple.
BigInt discriminant(const FamilyCurve& curve);

/// Discriminant of y^2 = x^3 + a x^2 + b x + c from its coefficients:
/// -4a^3c + a^2b^2 + 18abc - 4b^3 - 27c^2. Agrees with discriminant()
/// when evaluated at (A, B, 0).
BigInt discriminant_from_coefficients(const BigInt& a, const BigInt& b, const BigInt& c);

/// Right-hand side x^3 + A x^2 + B x.
BigRat curve_rhs(const FamilyCurve& curve, const BigRat& x);

bool is_on_curve(const FamilyCurve& curve, const CurvePoint& p);

CurvePoint negate(const FamilyCurve& curve, const CurvePoint& p);

/// Exact chord-tangent sum. Throws NotOnCurveError for bad operands.
CurvePoint add(const FamilyCurve& curve, const CurvePoint& p, const CurvePoint& q);

CurvePoint scalar_mul(const FamilyCurve& curve, const BigInt& n, const CurvePoint& p);

/// #E(F_p) including the point at infinity, by direct x-enumeration with
/// quadratic-residue tests. p must be an odd prime of good reduction;
/// throws BadReductionPrimeError when p | 2D.
int64_t count_points_mod_p(const FamilyCurve& curve, int64_t p);

}  // namespace ptec
