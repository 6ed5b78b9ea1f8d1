#include "symclone/membership.hpp"

#include <algorithm>

#include "symclone/arith.hpp"
#include "symclone/error.hpp"
#include "symclone/literal.hpp"

namespace symclone {

namespace {

using u128 = unsigned __int128;

PeriodicProfile canonical(const PeriodicProfile& p) { return canonical_profile(p.arity, p.offset, p.period); }

std::string profile_text(const PeriodicProfile& p)
{
  return "(" + std::to_string(p.arity) + "," + std::to_string(p.offset) + "," + std::to_string(p.period) + ")";
}

CriterionResult no(CriterionBranch b, std::string reason)
{
  return {CriterionVerdict::No, b, std::nullopt, std::move(reason)};
}

CriterionResult second_branch(const PeriodicProfile& f, const PeriodicProfile& g)
{
  if (f.offset != 0)
    return no(CriterionBranch::L2, "g holds (1^m) and (2^m) but d_f != 0");
  if (g.period % f.period != 0)
    return no(CriterionBranch::L2, "t_g/t_f is not an integer");
  const auto ratio = g.period / f.period;
  if (u128{g.arity} < u128{ratio} * f.arity)
    return no(CriterionBranch::L2, "m < (t_g/t_f) n");
  CriterionResult r{CriterionVerdict::Yes, CriterionBranch::L2, MembershipCertificate{ratio, {}, {}, {}}, {}};
  return r;
}

CriterionResult criterion(const PeriodicProfile& f_in, const PeriodicProfile& g_in, bool with_i)
{
  const auto f = canonical(f_in);
  const auto g = canonical(g_in);
  if (f.period <= 1)
    return {CriterionVerdict::Inapplicable, std::nullopt, std::nullopt, "t_f = 1: f is an i-function"};
  if (holds_both_constant_tuples(g))
    return second_branch(f, g);

  const auto branch = with_i ? CriterionBranch::L1Item2 : CriterionBranch::L1Item1;
  if (f.offset + f.period > f.arity)
    return {CriterionVerdict::Inapplicable, std::nullopt, std::nullopt, "d_f + t_f > n"};

  if (g.period % f.period != 0)
    return no(branch, "t_g/t_f is not an integer");
  const auto t = g.period / f.period;
  const auto step = u128{t} * gcd0(f.offset, f.period);
  if (u128{g.offset} % step != 0)
    return no(branch, "d_g is not divisible by t * gcd(d_f, t_f)");

  // Both size conditions need q n <= m, which bounds the search.
  const auto q_max = std::min<std::uint64_t>(g.period - 1, g.arity / f.arity);
  bool any_q = false;
  for (std::uint64_t q = 1; q <= q_max; ++q) {
    const u128 qd = u128{q} * f.offset;
    if (qd < g.offset || (qd - g.offset) % g.period != 0)
      continue;
    const auto k = static_cast<std::uint64_t>((qd - g.offset) / g.period);
    const u128 qn = u128{q} * f.arity;
    std::optional<std::uint64_t> s;
    if (!with_i) {
      if ((u128{g.arity} - qn) % g.period != 0)
        continue;
      s = static_cast<std::uint64_t>((u128{g.arity} - qn) / g.period);
    }
    any_q = true;
    if (q % t != 0)
      continue;
    return {CriterionVerdict::Yes, branch, MembershipCertificate{t, q, s, k}, {}};
  }
  if (any_q)
    return no(branch, "every admissible q fails to be divisible by t = t_g/t_f");
  return no(branch, with_i ? "no q with 0<q<t_g, d_g + k t_g = q d_f (k>=0) and m >= q n"
                           : "no q with 0<q<t_g, d_g + k t_g = q d_f (k>=0) and m = q n + s t_g (s>=0)");
}

} // namespace

std::string to_string(CriterionBranch b)
{
  switch (b) {
  case CriterionBranch::L1Item1:
    return "L1-item1";
  case CriterionBranch::L1Item2:
    return "L1-item2";
  case CriterionBranch::L2:
    return "L2";
  }
  return "?";
}

bool holds_both_constant_tuples(const PeriodicProfile& g) noexcept
{
  return g.offset == 0 && g.arity % g.period == 0;
}

CriterionResult member_single(const PeriodicProfile& f, const PeriodicProfile& g) { return criterion(f, g, false); }

CriterionResult member_single_with_I(const PeriodicProfile& f, const PeriodicProfile& g)
{
  return criterion(f, g, true);
}

bool verify_certificate(const PeriodicProfile& f_in, const PeriodicProfile& g_in, const CriterionResult& r)
{
  if (!r.yes() || !r.branch || !r.certificate)
    return false;
  const auto f = canonical(f_in);
  const auto g = canonical(g_in);
  const auto& c = *r.certificate;
  if (c.ratio == 0 || u128{c.ratio} * f.period != g.period)
    return false;
  if (*r.branch == CriterionBranch::L2)
    return holds_both_constant_tuples(g) && f.offset == 0 && u128{g.arity} >= u128{c.ratio} * f.arity;
  if (holds_both_constant_tuples(g) || !c.q || !c.k)
    return false;
  const auto q = *c.q;
  if (q == 0 || q >= g.period || q % c.ratio != 0)
    return false;
  if (u128{g.offset} % (u128{c.ratio} * gcd0(f.offset, f.period)) != 0)
    return false;
  if (u128{g.offset} + u128{*c.k} * g.period != u128{q} * f.offset)
    return false;
  if (*r.branch == CriterionBranch::L1Item1)
    return c.s && u128{g.arity} == u128{q} * f.arity + u128{*c.s} * g.period;
  return u128{g.arity} >= u128{q} * f.arity;
}

bool member_psr_with_I(const PeriodicProfile& f, std::uint64_t r)
{
  check_profile_args(f.arity, f.offset, f.period);
  if (r == 0)
    throw DomainError("member_psr_with_I: r must be positive");
  return r % f.period == 0;
}

std::uint64_t ratio(const PeriodicProfile& f)
{
  check_profile_args(f.arity, f.offset, f.period);
  return f.period / gcd0(f.offset, f.period);
}

std::vector<PeriodicProfile> maximal_set(std::span<const PeriodicProfile> G)
{
  // a in [{b} u I]
  auto derivable = [](const PeriodicProfile& a, const PeriodicProfile& b) {
    if (a.period == 1)
      return true;
    if (b.period == 1)
      return false;
    auto r = member_single_with_I(a, b);
    if (r.verdict == CriterionVerdict::Inapplicable)
      throw DomainError("maximal_set: criterion inapplicable to f=" + profile_text(a) + ", g=" + profile_text(b) +
                        ": " + r.reason);
    return r.yes();
  };
  std::vector<PeriodicProfile> out;
  for (const auto& g : G) {
    bool keep = true;
    for (const auto& other : G) {
      if (other == g)
        continue;
      if (derivable(g, other) && !derivable(other, g)) {
        keep = false;
        break;
      }
    }
    if (keep)
      out.push_back(g);
  }
  return out;
}

} // namespace symclone
