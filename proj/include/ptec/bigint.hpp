#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ptec {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const BigRat& r) { return boost::multiprecision::denominator(r); }

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

/// Exact perfect-square test with small-modulus prefilter.
bool is_perfect_square(const BigInt& n);

/// Exact square test in Q: lowest-terms numerator and denominator are both
/// perfect squares.
bool is_square(const BigRat& r);

/// The nonnegative rational square root, when r is a square.
std::optional<BigRat> exact_sqrt(const BigRat& r);

/// Largest v with p^v | n (n != 0), together with n / p^v.
std::pair<int, BigInt> remove_factor(const BigInt& n, const BigInt& p);

BigInt powmod(BigInt base, BigInt exp, const BigInt& mod);

/// Legendre symbol (a/p) for odd prime p: +1, -1, or 0.
int legendre(const BigInt& a, const BigInt& p);

bool is_probable_prime(const BigInt& n);

/// Full factorization, trial division first, Brent's rho for what remains.
/// Throws FactorizationFailure when the rho budget runs out.
std::vector<std::pair<BigInt, int>> factorize(BigInt n);

/// Distinct prime divisors of |n|, ascending. n must be nonzero.
std::vector<BigInt> prime_support(const BigInt& n);

/// Odd primes below `bound` in ascending order.
const std::vector<int64_t>& small_odd_primes();

}  // namespace ptec
