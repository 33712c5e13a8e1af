#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace critnum {

struct PrimePower {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Positive divisors of n together with its prime factorization.
struct DivisorProfile {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> divisors;         // ascending, contains 1 and n
    std::vector<PrimePower> prime_factorization;  // ascending primes
};

/// Throws std::invalid_argument for n < 1.
DivisorProfile divisors(std::uint64_t n);

std::vector<PrimePower> factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// Residues u in [1, n) with gcd(u, n) = 1. For n = 1 this is empty.
std::vector<std::uint32_t> units(std::uint32_t n);

std::uint64_t isqrt(std::uint64_t n);

// Floors are taken toward negative infinity; C++ division truncates toward zero.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

/// Number of integer partitions of k.
std::uint64_t partition_count(std::uint32_t k);

}  // namespace critnum
