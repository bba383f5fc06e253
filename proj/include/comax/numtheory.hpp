#ifndef COMAX_NUMTHEORY_HPP
#define COMAX_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

namespace comax {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime factorization of n >= 2, primes strictly increasing.
struct FactoredInteger {
    std::uint64_t n = 0;
    std::vector<PrimePower> factors;

    bool is_prime() const { return factors.size() == 1 && factors[0].exponent == 1; }
    bool is_prime_power() const { return factors.size() == 1; }
    bool is_square_free() const;
};

/// Deterministic trial division up to sqrt(n). Throws std::invalid_argument for n < 2.
FactoredInteger factorize(std::uint64_t n);

std::uint64_t euler_phi(const FactoredInteger& f);

/// Number of positive divisors of n.
std::uint64_t tau(const FactoredInteger& f);

/// Divisors d with 1 < d < n, ascending. Empty for prime n.
std::vector<std::uint64_t> proper_divisors(const FactoredInteger& f);

/// |A_d| = phi(n/d) for a proper divisor d. Throws if d is not a proper divisor.
std::uint64_t class_size(const FactoredInteger& f, std::uint64_t d);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace comax

#endif
