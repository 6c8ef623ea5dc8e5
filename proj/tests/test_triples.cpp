#include "ptec/errors.hpp"
#include "ptec/triples.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace ptec;

namespace {

using TripleKey = std::array<int64_t, 3>;

TripleKey key(const PythagoreanTriple& t) {
    const PythagoreanTriple c = canonicalize(t);
    return {c.a, c.b, c.c};
}

// brute-force oracle: all primitive triples with hypotenuse <= bound,
// odd leg first
std::set<TripleKey> brute_force_triples(int64_t c_bound) {
    std::set<TripleKey> out;
    for (int64_t a = 3; a * a < c_bound * c_bound; a += 2) {
        for (int64_t b = a + 1; a * a + b * b <= c_bound * c_bound; ++b) {
            const int64_t cc = a * a + b * b;
            int64_t c = 1;
            while (c * c < cc) ++c;
            if (c * c != cc) continue;
            if (std::gcd(a, b) != 1) continue;
            out.insert({a, b, c});
        }
    }
    return out;
}

}  // namespace

TEST_CASE("even-form generator reproduces the published range-10 table") {
    const auto triples = gen_triples_even(10);
    REQUIRE(triples.size() == 18);
    CHECK(triples.front().params == TripleParams{2, 1});
    CHECK(triples.front().a == 3);
    CHECK(triples.front().b == 4);
    CHECK(triples.front().c == 5);
    CHECK(triples.back().params == TripleParams{9, 8});
    CHECK(triples.back().a == 17);
    CHECK(triples.back().b == 144);
    CHECK(triples.back().c == 145);
    // lexicographic (i, j) order
    for (size_t k = 1; k < triples.size(); ++k) {
        const auto &p = triples[k - 1].params, &q = triples[k].params;
        CHECK(std::tie(p.i, p.j) < std::tie(q.i, q.j));
    }
}

TEST_CASE("even-form bound is strict and rejects an empty domain") {
    // (3,4,5) enters at max_ij = 3; the published count 202461 for the
    // "i,j <= 1000" survey is the strict count as well.
    const auto triples = gen_triples_even(3);
    REQUIRE(triples.size() == 1);
    CHECK(triples[0].a == 3);
    CHECK(gen_triples_even(2).empty());
    CHECK_THROWS_AS(gen_triples_even(1), EmptyDomainError);
}

TEST_CASE("non-coprime and equal-parity pairs are skipped") {
    for (const auto& t : gen_triples_even(12)) {
        CHECK(std::gcd(t.params.i, t.params.j) == 1);
        CHECK((t.params.i + t.params.j) % 2 == 1);
        CHECK(t.params != TripleParams{4, 2});
    }
}

TEST_CASE("odd-form generator") {
    const auto triples = gen_triples_odd(5);
    auto find = [&](int64_t i, int64_t j) {
        return std::find_if(triples.begin(), triples.end(), [&](const auto& t) {
            return t.params.i == i && t.params.j == j;
        });
    };
    auto t31 = find(3, 1);
    REQUIRE(t31 != triples.end());
    CHECK(t31->a == 4);
    CHECK(t31->b == 3);
    CHECK(t31->c == 5);
    auto t53 = find(5, 3);
    REQUIRE(t53 != triples.end());
    CHECK(t53->a == 8);
    CHECK(t53->b == 15);
    CHECK(t53->c == 17);
    CHECK(find(3, 3) == triples.end());
    CHECK_THROWS_AS(gen_triples_odd(2), EmptyDomainError);
}

TEST_CASE("canonicalize puts the odd leg first and is idempotent") {
    const PythagoreanTriple t{4, 3, 5, {3, 1}, TripleMode::OddForm};
    const PythagoreanTriple c = canonicalize(t);
    CHECK(c.a == 3);
    CHECK(c.b == 4);
    CHECK(canonicalize(c) == c);
    const PythagoreanTriple already{15, 8, 17, {4, 1}, TripleMode::EvenForm};
    CHECK(canonicalize(already) == already);
}

TEST_CASE("every generated triple is primitive with the expected parities") {
    for (const auto& t : gen_triples_even(20)) {
        CHECK(t.a * t.a + t.b * t.b == t.c * t.c);
        CHECK(std::gcd(t.a, t.b) == 1);
        CHECK(std::gcd(t.a, t.c) == 1);
        CHECK(std::gcd(t.b, t.c) == 1);
        CHECK(t.a % 2 == 1);
        CHECK(t.b % 2 == 0);
        CHECK(t.c % 2 == 1);
    }
}

TEST_CASE("the two parametrizations agree with brute force after canonicalization") {
    const int64_t c_bound = 500;
    const auto oracle = brute_force_triples(c_bound);

    std::set<TripleKey> even, odd;
    for (const auto& t : gen_triples_even(40))
        if (t.c <= c_bound) even.insert(key(t));
    for (const auto& t : gen_triples_odd(45))
        if (t.c <= c_bound) odd.insert(key(t));

    CHECK(even == oracle);
    CHECK(odd == oracle);
}

TEST_CASE("make_triple validates and recovers provenance") {
    const PythagoreanTriple t = make_triple(3, 4, 5);
    CHECK(t.params == TripleParams{2, 1});
    const PythagoreanTriple big = make_triple(861, 7540, 7589);
    CHECK(big.params == TripleParams{65, 58});
    CHECK_THROWS_AS(make_triple(5, 4, 3), InvalidTripleError);
    CHECK_THROWS_AS(make_triple(6, 8, 10), InvalidTripleError);
    CHECK_THROWS_AS(make_triple(1, 2, 3), InvalidTripleError);
}
