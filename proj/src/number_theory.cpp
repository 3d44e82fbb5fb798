#include "netobs/number_theory.hpp"

#include <numeric>
#include <stdexcept>

namespace netobs::numtheory {

std::int64_t PrimePower::value() const {
    std::int64_t v = 1;
    for (int i = 0; i < exponent; ++i) v *= prime;
    return v;
}

std::int64_t Factorization::product() const {
    std::int64_t v = 1;
    for (const auto& f : factors) v *= f.value();
    return v;
}

Factorization factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization out;
    std::int64_t rest = n;
    for (std::int64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        int k = 0;
        while (rest % p == 0) {
            rest /= p;
            ++k;
        }
        out.factors.push_back({p, k});
    }
    if (rest > 1) out.factors.push_back({rest, 1});
    return out;
}

std::int64_t gcd_list(std::span<const std::int64_t> values) {
    if (values.empty()) throw std::invalid_argument("gcd_list: empty list");
    std::int64_t g = 0;
    for (std::int64_t v : values) {
        if (v < 1) throw std::invalid_argument("gcd_list: values must be >= 1");
        g = std::gcd(g, v);
    }
    return g;
}

bool congruent(std::int64_t a, std::int64_t b, std::int64_t m) {
    if (m < 2) throw std::invalid_argument("congruent: modulus must be >= 2");
    return (a - b) % m == 0;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t p = 3; p * p <= n; p += 2)
        if (n % p == 0) return false;
    return true;
}

std::int64_t odd_part(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("odd_part: n must be >= 1");
    while (n % 2 == 0) n /= 2;
    return n;
}

std::vector<std::int64_t> prime_power_divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (const auto& f : factorize(n).factors) {
        std::int64_t q = 1;
        for (int a = 1; a <= f.exponent; ++a) {
            q *= f.prime;
            out.push_back(q);
        }
    }
    return out;
}

std::vector<std::int64_t> odd_prime_power_divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t q : prime_power_divisors(n))
        if (q % 2 != 0) out.push_back(q);
    return out;
}

}  // namespace netobs::numtheory
