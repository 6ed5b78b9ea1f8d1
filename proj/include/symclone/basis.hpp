#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symclone/closure.hpp"
#include "symclone/error.hpp"
#include "symclone/symfun.hpp"

namespace symclone {

using BigInt = boost::multiprecision::cpp_int;

/*
 * Infinite family k = 0, 1, 2, ... of periodic profiles:
 *   t_k = p^(a + b k)
 *   d_k = c p^(g + e k)            (d_k = 0 when c = 0)
 *   n_k = u + v k + w t_k + z d_k
 */
struct SequenceSpec
{
  struct PeriodExp
  {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    friend bool operator==(const PeriodExp&, const PeriodExp&) = default;
  } t_exp;
  struct Offset
  {
    std::uint64_t c = 0;
    std::uint64_t g = 0;
    std::uint64_t e = 0;
    friend bool operator==(const Offset&, const Offset&) = default;
  } d;
  struct Arity
  {
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    std::uint64_t w = 0;
    std::uint64_t z = 0;
    friend bool operator==(const Arity&, const Arity&) = default;
  } n;

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;
};

struct FamilyDescriptor
{
  std::uint64_t p = 2;
  std::vector<PeriodicProfile> finite;
  std::vector<SequenceSpec> sequences;
};

class DescriptorError : public DomainError
{
public:
  using DomainError::DomainError;
};

/// Profile of the k-th member, exact.
struct BigProfile
{
  BigInt arity;
  BigInt offset;
  BigInt period;
  friend bool operator==(const BigProfile&, const BigProfile&) = default;
  friend bool operator<(const BigProfile& a, const BigProfile& b)
  {
    if (a.arity != b.arity)
      return a.arity < b.arity;
    if (a.offset != b.offset)
      return a.offset < b.offset;
    return a.period < b.period;
  }
};

BigProfile member_at(const SequenceSpec& s, std::uint64_t p, std::uint64_t k);
/// The member as a 64-bit profile, if it fits.
std::optional<PeriodicProfile> small_member_at(const SequenceSpec& s, std::uint64_t p, std::uint64_t k);

/// All members are i-functions (t_k = 1 for every k).
bool is_degenerate(const SequenceSpec& s) noexcept;

/// Exponent of t_k / gcd(d_k, t_k) as a power of p, in closed form.
std::uint64_t ratio_exponent(const SequenceSpec& s, std::uint64_t k);

/// Prefix length used for the congruence and canonical-form checks.
inline constexpr std::uint64_t validation_prefix = 64;

/// Throws DescriptorError when an invariant of the descriptor fails.
void validate_descriptor(const FamilyDescriptor& G);

FamilyDescriptor parse_descriptor(std::string_view json_text);
std::string descriptor_to_json(const FamilyDescriptor& G);

/// True iff every prime factor of t_f is in the list.
bool is_in_ps_bracket(const PeriodicProfile& f, std::span<const std::uint64_t> primes);

enum class BasisVerdict
{
  FiniteBasis,
  CountableBasis,
  NoBasis,
};

std::string to_string(BasisVerdict v);

struct SequenceAnalysis
{
  bool degenerate = false;
  /// rho(k) = rho0 + slope * k
  std::uint64_t rho0 = 0;
  std::uint64_t slope = 0;
  bool constant_ratio() const noexcept { return slope == 0; }
};

enum class Derivation
{
  Criterion,
  Identities,
  Oracle,
};

std::string to_string(Derivation d);

struct RemovedGenerator
{
  PeriodicProfile profile;
  Derivation how;
};

struct BasisExtraction
{
  std::vector<PeriodicProfile> basis;
  std::vector<RemovedGenerator> removed;
  /// Kept because neither the criteria nor the capped oracle settled them.
  std::vector<PeriodicProfile> undecided;
};

/*
 * Greedy removal in order of increasing arity: g is dropped when it is derivable
 * from the generators still present (criteria first, then the capped oracle).
 */
BasisExtraction extract_finite_basis(std::span<const PeriodicProfile> G, std::uint64_t p,
                                     const ClosureCaps& caps = {});

struct BasisClassification
{
  BasisVerdict verdict = BasisVerdict::FiniteBasis;
  /// NoBasis: t such that infinitely many members have ratio p^t.
  std::optional<std::uint64_t> nobasis_exponent;
  /// FiniteBasis: the extracted basis.
  std::optional<BasisExtraction> finite_basis;
  /// CountableBasis: maximal members (in the sense of [{g} u I]) among the first members.
  std::vector<PeriodicProfile> maximal_prefix;
  std::uint64_t maximal_prefix_k = 0;
  std::vector<SequenceAnalysis> sequences;
};

BasisClassification classify(const FamilyDescriptor& G, const ClosureCaps& caps = {});

/*
 * Route for infinite families with every offset zero and some g with (2^m) in N_g.
 * Throws DomainError when those hypotheses fail.
 */
BasisVerdict classify_d0_infinite(const FamilyDescriptor& G);

} // namespace symclone
