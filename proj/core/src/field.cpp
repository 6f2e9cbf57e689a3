#include "fpdet/field.hpp"

#include <algorithm>
#include <string>

namespace fpdet {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) result = mulmod64(result, base, m);
        base = mulmod64(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Strong-pseudoprime bases covering all 64-bit inputs.
constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) throw UsageError("is_prime: n must be >= 2");
    if (n > (std::uint64_t{1} << 63) - 1)
        throw UsageError("is_prime: n exceeds the supported range");
    for (std::uint64_t q : kWitnesses) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kWitnesses) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeCtx::PrimeCtx(std::uint64_t p, std::uint64_t max_p) : p_(p) {
    if (p <= 3) throw UsageError("PrimeCtx: p must exceed 3, got " + std::to_string(p));
    if (p > max_p)
        throw UsageError("PrimeCtx: p=" + std::to_string(p) + " exceeds the bound " +
                         std::to_string(max_p));
    if (!is_prime(p)) throw UsageError("PrimeCtx: " + std::to_string(p) + " is not prime");
}

Residue PrimeCtx::pow(Residue base, std::uint64_t exp) const {
    Residue result = 1;
    base %= p_;
    while (exp != 0) {
        if (exp & 1) result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

Residue PrimeCtx::inv(Residue a) const {
    a %= p_;
    if (a == 0) throw NonInvertibleError("inv: 0 has no inverse mod " + std::to_string(p_));
    return pow(a, p_ - 2);
}

int PrimeCtx::legendre(std::int64_t a) const {
    Residue r = reduce(a);
    if (r == 0) return 0;
    return pow(r, (p_ - 1) / 2) == 1 ? 1 : -1;
}

std::vector<PrimeCtx> primes_in_classes(std::uint64_t lo, std::uint64_t hi,
                                        const std::vector<std::int64_t>& residues,
                                        std::uint64_t modulus, std::uint64_t max_p) {
    if (residues.empty()) throw UsageError("primes_in_classes: empty residue set");
    if (modulus == 0) throw UsageError("primes_in_classes: modulus must be positive");
    if (lo > hi) throw UsageError("primes_in_classes: lo > hi");
    if (hi > max_p)
        throw UsageError("primes_in_classes: hi=" + std::to_string(hi) +
                         " exceeds the bound " + std::to_string(max_p));

    std::vector<bool> wanted(modulus, false);
    for (std::int64_t r : residues) {
        std::int64_t m = static_cast<std::int64_t>(modulus);
        std::int64_t v = r % m;
        if (v < 0) v += m;
        wanted[static_cast<std::size_t>(v)] = true;
    }

    // Plain sieve over [0, hi]; hi is bounded by max_p.
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t q = 2; q * q <= hi; ++q) {
        if (composite[q]) continue;
        for (std::uint64_t m = q * q; m <= hi; m += q) composite[m] = true;
    }

    std::vector<PrimeCtx> out;
    for (std::uint64_t q = std::max<std::uint64_t>(lo, 5); q <= hi; ++q) {
        if (composite[q]) continue;
        if (!wanted[q % modulus]) continue;
        out.emplace_back(q, max_p);
    }
    return out;
}

}  // namespace fpdet
