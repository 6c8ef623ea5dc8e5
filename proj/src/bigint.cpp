#include "ptec/bigint.hpp"

#include "ptec/errors.hpp"

#include <array>
#include <random>

namespace ptec {

namespace {

// Quadratic-residue bitmasks mod 64, 63 and 65; rejects ~99% of
// non-squares before paying for an exact root.
std::array<bool, 64> residue_table(int m) {
    std::array<bool, 64> t{};
    for (int i = 0; i < m; ++i) t[static_cast<size_t>((i * i) % m)] = true;
    return t;
}

const std::array<bool, 64> kSq64 = residue_table(64);
const std::array<bool, 64> kSq63 = residue_table(63);
const std::array<bool, 64> kSq65 = residue_table(65);

}  // namespace

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw ZeroInputError("isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    if (n < 2) return true;
    const auto m64 = static_cast<uint64_t>(n & 63);
    if (!kSq64[m64]) return false;
    const auto m63 = static_cast<uint64_t>(n % 63);
    if (!kSq63[m63]) return false;
    const auto m65 = static_cast<uint64_t>(n % 65);
    if (!kSq65[m65]) return false;
    const BigInt r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

bool is_square(const BigRat& r) {
    if (r < 0) return false;
    return is_perfect_square(numerator(r)) && is_perfect_square(denominator(r));
}

std::optional<BigRat> exact_sqrt(const BigRat& r) {
    if (!is_square(r)) return std::nullopt;
    return BigRat(isqrt(numerator(r)), isqrt(denominator(r)));
}

std::pair<int, BigInt> remove_factor(const BigInt& n, const BigInt& p) {
    if (n == 0) throw ZeroInputError("remove_factor of zero");
    BigInt m = n;
    int v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return {v, m};
}

BigInt powmod(BigInt base, BigInt exp, const BigInt& mod) {
    base %= mod;
    if (base < 0) base += mod;
    BigInt result = 1;
    while (exp > 0) {
        if ((exp & 1) != 0) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

int legendre(const BigInt& a, const BigInt& p) {
    BigInt r = powmod(a, (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    for (int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    BigInt d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic for n < 3.3e24 with this base set.
    for (int64_t base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        BigInt x = powmod(base, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

BigInt brent_rho(const BigInt& n, uint64_t seed, int64_t budget) {
    std::mt19937_64 rng(seed);
    const BigInt c = BigInt(rng() % 1000 + 1);
    BigInt x = BigInt(rng() % 1000 + 2) % n;
    BigInt y = x, d = 1;
    int64_t used = 0;
    BigInt ys = y, q = 1;
    int64_t r = 1;
    const int64_t m = 128;
    while (d == 1) {
        x = y;
        for (int64_t i = 0; i < r; ++i) y = (y * y + c) % n;
        int64_t k = 0;
        while (k < r && d == 1) {
            ys = y;
            const int64_t lim = std::min(m, r - k);
            for (int64_t i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                BigInt diff = x > y ? x - y : y - x;
                q = q * diff % n;
            }
            d = boost::multiprecision::gcd(q, n);
            k += lim;
            used += lim;
            if (used > budget) return 0;
        }
        r *= 2;
    }
    if (d == n) {
        // backtrack
        do {
            ys = (ys * ys + c) % n;
            BigInt diff = x > ys ? x - ys : ys - x;
            d = boost::multiprecision::gcd(diff, n);
        } while (d == 1);
    }
    return d == n ? BigInt(0) : d;
}

void factor_rec(BigInt n, std::vector<BigInt>& out, int depth) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    if (depth > 48) throw FactorizationFailure("rho recursion too deep");
    if (is_perfect_square(n)) {
        BigInt r = isqrt(n);
        factor_rec(r, out, depth + 1);
        factor_rec(r, out, depth + 1);
        return;
    }
    for (uint64_t seed = 1; seed <= 24; ++seed) {
        BigInt d = brent_rho(n, seed * 0x9e3779b97f4a7c15ULL, 40'000'000);
        if (d > 1 && d < n) {
            factor_rec(d, out, depth + 1);
            factor_rec(n / d, out, depth + 1);
            return;
        }
    }
    throw FactorizationFailure("rho budget exhausted");
}

}  // namespace

std::vector<std::pair<BigInt, int>> factorize(BigInt n) {
    if (n == 0) throw ZeroInputError("factorize zero");
    if (n < 0) n = -n;
    std::vector<std::pair<BigInt, int>> out;
    for (int64_t d : {2, 3, 5}) {
        int v = 0;
        while (n % d == 0) {
            n /= d;
            ++v;
        }
        if (v > 0) out.emplace_back(d, v);
    }
    // wheel over 7, 11, 13, ... up to 2e6 covers everything a curve from
    // i,j <= 1000 can produce without touching rho
    static const int inc[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    int64_t d = 7;
    int idx = 0;
    while (d <= 2'000'000 && BigInt(d) * d <= n) {
        if (n % d == 0) {
            int v = 0;
            while (n % d == 0) {
                n /= d;
                ++v;
            }
            out.emplace_back(d, v);
        }
        d += inc[idx];
        idx = (idx + 1) & 7;
    }
    if (n > 1) {
        if (BigInt(d) * d > n) {
            out.emplace_back(n, 1);
        } else {
            std::vector<BigInt> primes;
            factor_rec(n, primes, 0);
            std::sort(primes.begin(), primes.end());
            for (size_t i = 0; i < primes.size();) {
                size_t j = i;
                while (j < primes.size() && primes[j] == primes[i]) ++j;
                out.emplace_back(primes[i], static_cast<int>(j - i));
                i = j;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BigInt> prime_support(const BigInt& n) {
    std::vector<BigInt> out;
    for (const auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

const std::vector<int64_t>& small_odd_primes() {
    static const std::vector<int64_t> primes = [] {
        constexpr int64_t bound = 20000;
        std::vector<bool> sieve(bound, true);
        std::vector<int64_t> out;
        for (int64_t i = 3; i < bound; i += 2) {
            if (!sieve[static_cast<size_t>(i)]) continue;
            out.push_back(i);
            for (int64_t k = i * i; k < bound; k += 2 * i) sieve[static_cast<size_t>(k)] = false;
        }
        return out;
    }();
    return primes;
}

}  // namespace ptec
