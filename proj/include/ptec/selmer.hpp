#pragma once

#include "ptec/bigint.hpp"
#include "ptec/curves.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ptec {

/// Image of a point under the complete 2-descent map: representatives of
/// (x - e1, x - e2, x - e3) in (Q*/Q*^2)^3, with the usual replacement at
/// the 2-torsion points. v1*v2*v3 is always a rational square.
struct SquareClassVector {
    BigRat v1, v2, v3;
};

/// True iff u and v represent the same class of Q*/Q*^2, i.e. u*v is a
/// square. Decided by exact integer square roots; no factorization.
bool square_class_equal(const BigRat& u, const BigRat& v);

SquareClassVector descent_image(const FamilyCurve& curve, const CurvePoint& p);

/// One pair (d1, d2) of the descent system
///   d1 z1^2 - d2 z2^2    = e2 - e1
///   d1 z1^2 - d1 d2 z3^2 = e3 - e1
/// together with its local-solvability verdict and, when the bounded global
/// search found one, an exact solution tuple.
struct SelmerCandidate {
    BigInt d1, d2;
    bool locally_solvable = false;
    std::optional<std::array<BigRat, 3>> global_witness;
};

struct SelmerCensus {
    std::vector<SelmerCandidate> candidates;  // all enumerated pairs
    int solvable_dim = 0;                     // F2-dim of the locally solvable subgroup
    std::vector<BigInt> bad_primes;           // 2 and the odd primes dividing D
};

/// Enumerates signed squarefree pairs supported on the primes of
/// (e_i - e_j)(e_i - e_k) (obtained by factoring a, b, a-b, a+b only),
/// tests everywhere-local solvability against the local images of
/// E(Q_v)/2E(Q_v), and upgrades candidates to global witnesses found by a
/// bounded point search. depth_override < 0 uses 2*v_p(2D) + 3 per prime.
SelmerCensus enumerate_selmer_candidates(const FamilyCurve& curve, int64_t search_bound,
                                         int depth_override = -1);

/// dim_F2(locally solvable candidates) - 2, the torsion dimension removed;
/// an upper bound for the Mordell-Weil rank.
int selmer_upper_bound(const FamilyCurve& curve, int64_t search_bound);

}  // namespace ptec
