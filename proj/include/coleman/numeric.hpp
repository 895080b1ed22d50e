#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace coleman {

bool is_prime(std::uint64_t n);

/// Prime factorization as prime -> exponent, by trial division.
std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);

/// Sorted distinct prime divisors; empty for n <= 1.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// Returns e if n == p^e (n >= 1), otherwise nullopt.
std::optional<unsigned> prime_power_exponent(std::uint64_t n, std::uint64_t p);

/// If n is a power (>= 1) of a single prime, that prime.
std::optional<std::uint64_t> prime_of_prime_power(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Inverse of a modulo m; requires gcd(a, m) == 1.
std::uint64_t mod_inverse(std::int64_t a, std::int64_t m);

/// Multiplicative order of a modulo m; requires gcd(a, m) == 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

}  // namespace coleman
