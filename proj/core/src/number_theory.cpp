#include "critnum/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace critnum {

std::vector<PrimePower> factorize(std::uint64_t n) {
    if (n < 1) {
        throw std::invalid_argument("factorize: n must be positive");
    }
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) {
            continue;
        }
        PrimePower pp{p, 0};
        while (n % p == 0) {
            n /= p;
            ++pp.exponent;
        }
        out.push_back(pp);
    }
    if (n > 1) {
        out.push_back({n, 1});
    }
    return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (const auto& pp : factorize(n)) {
        out.push_back(pp.prime);
    }
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            return false;
        }
    }
    return true;
}

DivisorProfile divisors(std::uint64_t n) {
    if (n < 1) {
        throw std::invalid_argument("divisors: n must be positive");
    }
    DivisorProfile profile;
    profile.n = n;
    profile.prime_factorization = factorize(n);
    profile.divisors = {1};
    for (const auto& pp : profile.prime_factorization) {
        const std::size_t base = profile.divisors.size();
        std::uint64_t power = 1;
        for (std::uint32_t e = 1; e <= pp.exponent; ++e) {
            power *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) {
                profile.divisors.push_back(profile.divisors[i] * power);
            }
        }
    }
    std::sort(profile.divisors.begin(), profile.divisors.end());
    return profile;
}

std::vector<std::uint32_t> units(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t u = 1; u < n; ++u) {
        if (std::gcd(u, n) == 1) {
            out.push_back(u);
        }
    }
    return out;
}

std::uint64_t isqrt(std::uint64_t n) {
    std::uint64_t r = 0;
    std::uint64_t bit = std::uint64_t{1} << 62;
    while (bit > n) {
        bit >>= 2;
    }
    while (bit != 0) {
        if (n >= r + bit) {
            n -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
        bit >>= 2;
    }
    return r;
}

std::uint64_t partition_count(std::uint32_t k) {
    std::vector<std::uint64_t> p(k + 1, 0);
    p[0] = 1;
    for (std::uint32_t part = 1; part <= k; ++part) {
        for (std::uint32_t s = part; s <= k; ++s) {
            p[s] += p[s - part];
        }
    }
    return p[k];
}

}  // namespace critnum
