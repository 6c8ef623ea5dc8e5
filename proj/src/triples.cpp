#include "ptec/triples.hpp"

#include "ptec/bigint.hpp"
#include "ptec/errors.hpp"

#include <numeric>

namespace ptec {

std::vector<PythagoreanTriple> gen_triples_even(int64_t max_ij) {
    if (max_ij < 2) throw EmptyDomainError("gen_triples_even: max_ij must be >= 2");
    std::vector<PythagoreanTriple> out;
    for (int64_t i = 2; i < max_ij; ++i) {
        for (int64_t j = 1; j < i; ++j) {
            if ((i + j) % 2 == 0) continue;
            if (std::gcd(i, j) != 1) continue;
            out.push_back({i * i - j * j, 2 * i * j, i * i + j * j,
                           {i, j}, TripleMode::EvenForm});
        }
    }
    return out;
}

std::vector<PythagoreanTriple> gen_triples_odd(int64_t max_ij) {
    if (max_ij < 3) throw EmptyDomainError("gen_triples_odd: max_ij must be >= 3");
    std::vector<PythagoreanTriple> out;
    for (int64_t i = 3; i <= max_ij; i += 2) {
        for (int64_t j = 1; j < i; j += 2) {
            if (std::gcd(i, j) != 1) continue;
            out.push_back({(i * i - j * j) / 2, i * j, (i * i + j * j) / 2,
                           {i, j}, TripleMode::OddForm});
        }
    }
    return out;
}

PythagoreanTriple canonicalize(const PythagoreanTriple& t) {
    if (t.a % 2 != 0) return t;
    PythagoreanTriple s = t;
    std::swap(s.a, s.b);
    return s;
}

bool is_valid_triple(const PythagoreanTriple& t) {
    if (t.a <= 0 || t.b <= 0 || t.c <= 0) return false;
    const BigInt a = t.a, b = t.b, c = t.c;
    if (a * a + b * b != c * c) return false;
    if (std::gcd(t.a, t.b) != 1) return false;
    return (t.a + t.b) % 2 == 1 && t.c % 2 == 1;
}

PythagoreanTriple make_triple(int64_t a, int64_t b, int64_t c) {
    PythagoreanTriple t{a, b, c, {0, 0}, TripleMode::EvenForm};
    if (!is_valid_triple(t))
        throw InvalidTripleError("not a primitive Pythagorean triple");
    // Every primitive triple is (i^2-j^2, 2ij, i^2+j^2) up to leg order:
    // with the odd leg first, i = sqrt((c+a)/2) and j = sqrt((c-a)/2).
    const PythagoreanTriple canon = canonicalize(t);
    const BigInt ip2 = BigInt(canon.c + canon.a) / 2;
    const BigInt jp2 = BigInt(canon.c - canon.a) / 2;
    if (!is_perfect_square(ip2) || !is_perfect_square(jp2))
        throw InvalidTripleError("triple is not primitive");
    t.params = {static_cast<int64_t>(isqrt(ip2)), static_cast<int64_t>(isqrt(jp2))};
    return t;
}

}  // namespace ptec
