#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symclone/symfun.hpp"

namespace symclone {

/// Which arithmetic criterion produced a verdict.
enum class CriterionBranch
{
  /// g misses (1^m) or (2^m); membership in [{g}].
  L1Item1,
  /// g misses (1^m) or (2^m); membership in [{g} u I].
  L1Item2,
  /// Both (1^m) and (2^m) are in N_g; the plain and the u I questions coincide.
  L2,
};

std::string to_string(CriterionBranch b);

/*
 * Values satisfying the criterion's equations:
 *   ratio = t_g / t_f,  d_g + k t_g = q d_f,  m = q n + s t_g  (s only for [{g}]).
 * The L2 branch only sets ratio.
 */
struct MembershipCertificate
{
  std::uint64_t ratio = 0;
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> s;
  std::optional<std::uint64_t> k;
};

enum class CriterionVerdict
{
  Yes,
  No,
  /// The hypotheses of the criterion do not hold for (f, g).
  Inapplicable,
};

struct CriterionResult
{
  CriterionVerdict verdict = CriterionVerdict::Inapplicable;
  std::optional<CriterionBranch> branch;
  std::optional<MembershipCertificate> certificate;
  std::string reason;

  bool yes() const noexcept { return verdict == CriterionVerdict::Yes; }
};

/// f in [{g}] for periodic f, g. Needs t_f > 1, and d_f + t_f <= n unless g holds both constant tuples.
CriterionResult member_single(const PeriodicProfile& f, const PeriodicProfile& g);

/// f in [{g} u I], same hypotheses as member_single.
CriterionResult member_single_with_I(const PeriodicProfile& f, const PeriodicProfile& g);

/// Re-checks a Yes result's certificate against the equations of its branch.
bool verify_certificate(const PeriodicProfile& f, const PeriodicProfile& g, const CriterionResult& r);

/// f in [PS^r u I]  <=>  t_f divides r.
bool member_psr_with_I(const PeriodicProfile& f, std::uint64_t r);

/// t_f / gcd(d_f, t_f), with gcd(0, t) = t.
std::uint64_t ratio(const PeriodicProfile& f);

/// (1^m) and (2^m) both lie in N_g.
bool holds_both_constant_tuples(const PeriodicProfile& g) noexcept;

/*
 * The members g of G such that g in [{g'} u I] implies g' in [{g} u I] for every g'
 * in G. Members with period 1 (i-functions) are decided directly from I = [{i_n}].
 * Throws DomainError when the criterion is inapplicable to a pair.
 */
std::vector<PeriodicProfile> maximal_set(std::span<const PeriodicProfile> G);

} // namespace symclone
