#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace symclone {

/// gcd with the convention gcd(0, t) = t.
inline std::uint64_t gcd0(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

bool is_prime(std::uint64_t n);

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Exponent e with p^e == n, if n is a power of p.
std::optional<std::uint64_t> log_exact(std::uint64_t n, std::uint64_t p);

/// Largest e with p^e | n; n must be non-zero.
std::uint64_t p_adic_valuation(std::uint64_t n, std::uint64_t p);

/// p^e, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::uint64_t e);

} // namespace symclone
