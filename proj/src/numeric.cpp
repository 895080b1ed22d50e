#include "coleman/numeric.hpp"

#include <stdexcept>

namespace coleman {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> factors;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++factors[d];
      n /= d;
    }
  }
  if (n > 1) ++factors[n];
  return factors;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (const auto& [p, e] : factorize(n)) primes.push_back(p);
  return primes;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  if (n == 0 || p < 2) return part;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

std::optional<unsigned> prime_power_exponent(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) return std::nullopt;
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return e;
}

std::optional<std::uint64_t> prime_of_prime_power(std::uint64_t n) {
  const auto factors = factorize(n);
  if (factors.size() != 1) return std::nullopt;
  return factors.begin()->first;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  while (exp-- > 0) result *= base;
  return result;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1U) result = (result * b) % mod;
    b = (b * b) % mod;
    exp >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = ((a % m) + m) % m, r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
  return static_cast<std::uint64_t>(((old_s % m) + m) % m);
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  std::uint64_t value = a % m;
  std::uint64_t order = 1;
  while (value != 1) {
    value = static_cast<std::uint64_t>((static_cast<unsigned __int128>(value) * a) % m);
    ++order;
    if (order > m) throw std::invalid_argument("multiplicative_order: not a unit");
  }
  return order;
}

}  // namespace coleman
