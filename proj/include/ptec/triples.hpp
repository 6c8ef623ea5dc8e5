#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ptec {

struct TripleParams {
    int64_t i = 0;
    int64_t j = 0;

    bool operator==(const TripleParams&) const = default;
};

enum class TripleMode { EvenForm, OddForm };

/// A primitive Pythagorean triple a^2 + b^2 = c^2 with the generator pair
/// it came from. c is always odd and exactly one leg is even.
struct PythagoreanTriple {
    int64_t a = 0;
    int64_t b = 0;
    int64_t c = 0;
    TripleParams params;
    TripleMode mode = TripleMode::EvenForm;

    bool operator==(const PythagoreanTriple&) const = default;
};

/// All triples a = i^2 - j^2, b = 2ij, c = i^2 + j^2 over coprime
/// opposite-parity pairs 1 <= j < i < max_ij, ordered lexicographically
/// by (i, j).
///
/// The bound is strict: the published "range 10" table is max_ij = 10 and
/// stops at i = 9, and the i,j "<= 1000" survey count of 202461 is likewise
/// reproduced by i, j < 1000.
std::vector<PythagoreanTriple> gen_triples_even(int64_t max_ij);

/// All triples a = (i^2 - j^2)/2, b = ij, c = (i^2 + j^2)/2 over odd coprime
/// pairs i > j >= 1 with i <= max_ij, ordered lexicographically by (i, j).
std::vector<PythagoreanTriple> gen_triples_odd(int64_t max_ij);

/// Reorders so the odd leg comes first; idempotent.
PythagoreanTriple canonicalize(const PythagoreanTriple& t);

bool is_valid_triple(const PythagoreanTriple& t);

/// Validates (a, b, c) as a primitive Pythagorean triple and recovers its
/// even-form generator pair. Throws InvalidTripleError otherwise.
PythagoreanTriple make_triple(int64_t a, int64_t b, int64_t c);

}  // namespace ptec
