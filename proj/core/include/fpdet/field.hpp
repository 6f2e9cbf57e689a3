#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fpdet {

/// Canonical residue mod p, always in [0, p-1].
using Residue = std::uint64_t;

/// Bad arguments or a violated call contract. The CLI maps this to exit 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Attempt to invert 0 mod p.
class NonInvertibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A reciprocal-entry matrix builder hit a vanishing denominator,
/// which signals a violated residue-class precondition.
class ZeroDenominatorError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Output sink failure. The CLI maps this to exit 3.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Deterministic primality for any 64-bit n (strong-pseudoprime test with a
/// fixed base set covering the full range). n < 2 is a usage error.
bool is_prime(std::uint64_t n);

/// Arithmetic context for a single odd prime p with 3 < p <= max_p.
/// Immutable after construction; cheap to copy and share across threads.
class PrimeCtx {
public:
    static constexpr std::uint64_t kDefaultMaxP = std::uint64_t{1} << 20;

    explicit PrimeCtx(std::uint64_t p, std::uint64_t max_p = kDefaultMaxP);

    std::uint64_t p() const { return p_; }

    /// Canonical residue of an arbitrary integer (negatives allowed).
    Residue reduce(std::int64_t a) const {
        std::int64_t r = a % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r);
    }

    Residue add(Residue a, Residue b) const {
        Residue s = a + b;
        if (s >= p_) s -= p_;
        return s;
    }
    Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
    Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const { return a * b % p_; }

    /// Square-and-multiply. pow(0, 0) == 1 (empty-product convention).
    Residue pow(Residue base, std::uint64_t exp) const;

    /// Unique x with a*x == 1 (mod p); throws NonInvertibleError for a == 0.
    Residue inv(Residue a) const;

    /// Euler-criterion Legendre symbol: +1 square, -1 nonsquare, 0 iff p | a.
    int legendre(std::int64_t a) const;

    bool operator==(const PrimeCtx& other) const { return p_ == other.p_; }

private:
    std::uint64_t p_;
};

/// All primes q in [lo, hi] with q > 3 and q mod modulus in residues,
/// in increasing order. The residues are reduced mod modulus on entry;
/// an empty residue set is a usage error.
std::vector<PrimeCtx> primes_in_classes(std::uint64_t lo, std::uint64_t hi,
                                        const std::vector<std::int64_t>& residues,
                                        std::uint64_t modulus,
                                        std::uint64_t max_p = PrimeCtx::kDefaultMaxP);

}  // namespace fpdet
