#pragma once

// Exact integer machinery used by the decision rules: prime factorization,
// multi-argument GCD, congruence tests, prime-power divisor enumeration.

#include <cstdint>
#include <span>
#include <vector>

namespace netobs::numtheory {

struct PrimePower {
    std::int64_t prime = 0;
    int exponent = 0;

    std::int64_t value() const;  // prime^exponent
    bool operator==(const PrimePower&) const = default;
};

struct Factorization {
    std::vector<PrimePower> factors;  // sorted by prime, exponents >= 1

    std::int64_t product() const;
};

// n >= 1; factorize(1) has an empty factor list. Trial division, adequate for
// the CLI size cap. Throws std::invalid_argument for n < 1.
Factorization factorize(std::int64_t n);

// GCD of a non-empty list of positive integers.
std::int64_t gcd_list(std::span<const std::int64_t> values);

// True iff m divides (a - b). Correct for negative a, b. Requires m >= 2.
bool congruent(std::int64_t a, std::int64_t b, std::int64_t m);

bool is_prime(std::int64_t n);

// Largest odd divisor of n.
std::int64_t odd_part(std::int64_t n);

// Prime powers p^a dividing n (a up to the multiplicity of p in n), sorted by
// prime then exponent: e.g. 36 -> {2, 4, 3, 9}.
std::vector<std::int64_t> prime_power_divisors(std::int64_t n);

// Same, restricted to odd primes: e.g. 36 -> {3, 9}.
std::vector<std::int64_t> odd_prime_power_divisors(std::int64_t n);

}  // namespace netobs::numtheory
