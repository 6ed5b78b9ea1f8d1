#include "symclone/arith.hpp"

#include "symclone/error.hpp"

namespace symclone {

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0)
      continue;
    out.push_back(d);
    while (n % d == 0)
      n /= d;
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

std::optional<std::uint64_t> log_exact(std::uint64_t n, std::uint64_t p)
{
  if (n == 0 || p < 2)
    return std::nullopt;
  std::uint64_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1)
    return std::nullopt;
  return e;
}

std::uint64_t p_adic_valuation(std::uint64_t n, std::uint64_t p)
{
  if (n == 0 || p < 2)
    throw DomainError("p_adic_valuation: need n > 0 and p >= 2");
  std::uint64_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::uint64_t e)
{
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (p != 0 && r > UINT64_MAX / p)
      return std::nullopt;
    r *= p;
  }
  return r;
}

} // namespace symclone
