#include "symclone/basis.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "symclone/arith.hpp"
#include "symclone/literal.hpp"
#include "symclone/membership.hpp"

namespace symclone {

namespace {

constexpr std::uint64_t max_exponent_coefficient = 64;

BigInt big_pow(std::uint64_t p, std::uint64_t e) { return boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e)); }

std::string seq_label(std::size_t i) { return "sequence " + std::to_string(i); }

std::string text(const BigProfile& b)
{
  return "(n=" + b.arity.str() + ", d=" + b.offset.str() + ", t=" + b.period.str() + ")";
}

BigProfile to_big(const PeriodicProfile& p) { return {BigInt(p.arity), BigInt(p.offset), BigInt(p.period)}; }

} // namespace

BigProfile member_at(const SequenceSpec& s, std::uint64_t p, std::uint64_t k)
{
  BigProfile out;
  out.period = big_pow(p, s.t_exp.a + s.t_exp.b * k);
  out.offset = s.d.c == 0 ? BigInt(0) : BigInt(s.d.c) * big_pow(p, s.d.g + s.d.e * k);
  out.arity = BigInt(s.n.u) + BigInt(s.n.v) * k + BigInt(s.n.w) * out.period + BigInt(s.n.z) * out.offset;
  return out;
}

std::optional<PeriodicProfile> small_member_at(const SequenceSpec& s, std::uint64_t p, std::uint64_t k)
{
  const auto b = member_at(s, p, k);
  const BigInt limit = BigInt(UINT64_MAX);
  if (b.arity > limit || b.period > limit)
    return std::nullopt;
  return PeriodicProfile{b.arity.convert_to<std::uint64_t>(), b.offset.convert_to<std::uint64_t>(),
                         b.period.convert_to<std::uint64_t>()};
}

bool is_degenerate(const SequenceSpec& s) noexcept { return s.t_exp.a == 0 && s.t_exp.b == 0; }

std::uint64_t ratio_exponent(const SequenceSpec& s, std::uint64_t k)
{
  if (s.d.c == 0)
    return 0;
  // v_p(d_k) = g + e k because p does not divide c, and v_p(d_k) < log_p t_k since d_k < t_k.
  return (s.t_exp.a + s.t_exp.b * k) - (s.d.g + s.d.e * k);
}

void validate_descriptor(const FamilyDescriptor& G)
{
  const auto p = G.p;
  if (!is_prime(p))
    throw DescriptorError("p=" + std::to_string(p) + " is not prime");

  std::map<BigProfile, std::string> seen;
  auto record = [&](const BigProfile& b, const std::string& who) {
    auto [it, inserted] = seen.emplace(b, who);
    if (!inserted)
      throw DescriptorError("congruent functions " + text(b) + " in " + it->second + " and " + who);
  };

  for (std::size_t i = 0; i < G.finite.size(); ++i) {
    const auto& f = G.finite[i];
    try {
      check_profile_args(f.arity, f.offset, f.period);
    } catch (const DomainError& e) {
      throw DescriptorError("finite[" + std::to_string(i) + "]: " + e.what());
    }
    if (!is_canonical(f))
      throw DescriptorError("finite[" + std::to_string(i) + "]: " + format_literal(f) +
                            " is not canonical (its least period is " +
                            std::to_string(canonical_profile(f.arity, f.offset, f.period).period) + ")");
    if (!log_exact(f.period, p))
      throw DescriptorError("finite[" + std::to_string(i) + "]: period " + std::to_string(f.period) +
                            " is not a power of p=" + std::to_string(p));
    record(to_big(f), "finite[" + std::to_string(i) + "]");
  }

  for (std::size_t i = 0; i < G.sequences.size(); ++i) {
    const auto& s = G.sequences[i];
    const auto who = seq_label(i);
    for (auto coef : {s.t_exp.a, s.t_exp.b, s.d.g, s.d.e})
      if (coef > max_exponent_coefficient)
        throw DescriptorError(who + ": exponent coefficients must be <= " + std::to_string(max_exponent_coefficient));
    if (s.d.c != 0) {
      if (s.d.c % p == 0)
        throw DescriptorError(who + ": c must be coprime to p");
      if (s.t_exp.b < s.d.e)
        throw DescriptorError(who + ": d(k) outgrows t(k) (e > b)");
      // With e <= b, d_k < t_k for all k iff it holds at k = 0.
      if (BigInt(s.d.c) * big_pow(p, s.d.g) >= big_pow(p, s.t_exp.a))
        throw DescriptorError(who + ": d(0) >= t(0)");
    }
    const bool increasing = s.n.v > 0 || (s.n.w > 0 && s.t_exp.b > 0) || (s.n.z > 0 && s.d.c > 0 && s.d.e > 0);
    if (!increasing)
      throw DescriptorError(who + ": n(k) is not strictly increasing");
    for (std::uint64_t k = 0; k <= validation_prefix; ++k) {
      const auto b = member_at(s, p, k);
      // Canonical period: at least two layers, so t_k is the least period.
      if (b.offset + b.period > b.arity)
        throw DescriptorError(who + ": member k=" + std::to_string(k) + " " + text(b) +
                              " has d + t > n, so t is not its least period");
      record(b, who + " k=" + std::to_string(k));
    }
  }
}

FamilyDescriptor parse_descriptor(std::string_view json_text)
{
  using nlohmann::json;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("descriptor: ") + e.what());
  }
  auto uint_field = [](const json& obj, const char* key, bool required, std::uint64_t fallback = 0) {
    if (!obj.is_object())
      throw ParseError("descriptor: expected an object around '" + std::string(key) + "'");
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required)
        throw ParseError("descriptor: missing field '" + std::string(key) + "'");
      return fallback;
    }
    if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<std::int64_t>() >= 0))
      throw ParseError("descriptor: field '" + std::string(key) + "' must be a non-negative integer");
    return it->get<std::uint64_t>();
  };

  FamilyDescriptor G;
  try {
    G.p = uint_field(j, "p", true);
    if (j.contains("finite")) {
      if (!j["finite"].is_array())
        throw ParseError("descriptor: 'finite' must be an array");
      for (const auto& f : j["finite"])
        G.finite.push_back({uint_field(f, "n", true), uint_field(f, "d", true), uint_field(f, "t", true)});
    }
    if (j.contains("sequences")) {
      if (!j["sequences"].is_array())
        throw ParseError("descriptor: 'sequences' must be an array");
      for (const auto& s : j["sequences"]) {
        SequenceSpec spec;
        if (!s.is_object() || !s.contains("t_exp") || !s.contains("n"))
          throw ParseError("descriptor: a sequence needs 't_exp' and 'n'");
        spec.t_exp.a = uint_field(s["t_exp"], "a", true);
        spec.t_exp.b = uint_field(s["t_exp"], "b", true);
        if (s.contains("d")) {
          const auto& d = s["d"];
          if (d.is_number()) {
            if (d.get<std::int64_t>() != 0)
              throw ParseError("descriptor: a numeric 'd' must be 0");
          } else {
            spec.d.c = uint_field(d, "c", true);
            spec.d.g = uint_field(d, "g", false);
            spec.d.e = uint_field(d, "e", false);
          }
        }
        spec.n.u = uint_field(s["n"], "u", false);
        spec.n.v = uint_field(s["n"], "v", false);
        spec.n.w = uint_field(s["n"], "w", false);
        spec.n.z = uint_field(s["n"], "z", false);
        G.sequences.push_back(spec);
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("descriptor: ") + e.what());
  }
  return G;
}

std::string descriptor_to_json(const FamilyDescriptor& G)
{
  using nlohmann::json;
  json j;
  j["p"] = G.p;
  j["finite"] = json::array();
  for (const auto& f : G.finite)
    j["finite"].push_back({{"n", f.arity}, {"d", f.offset}, {"t", f.period}});
  j["sequences"] = json::array();
  for (const auto& s : G.sequences) {
    json d = s.d.c == 0 ? json(0) : json{{"c", s.d.c}, {"g", s.d.g}, {"e", s.d.e}};
    j["sequences"].push_back({{"t_exp", {{"a", s.t_exp.a}, {"b", s.t_exp.b}}},
                              {"d", d},
                              {"n", {{"u", s.n.u}, {"v", s.n.v}, {"w", s.n.w}, {"z", s.n.z}}}});
  }
  return j.dump();
}

bool is_in_ps_bracket(const PeriodicProfile& f, std::span<const std::uint64_t> primes)
{
  check_profile_args(f.arity, f.offset, f.period);
  std::set<std::uint64_t> distinct(primes.begin(), primes.end());
  if (distinct.size() != primes.size())
    throw DomainError("is_in_ps_bracket: primes must be distinct");
  for (auto q : prime_factors(f.period))
    if (!distinct.count(q))
      return false;
  return true;
}

std::string to_string(BasisVerdict v)
{
  switch (v) {
  case BasisVerdict::FiniteBasis:
    return "FiniteBasis";
  case BasisVerdict::CountableBasis:
    return "CountableBasis";
  case BasisVerdict::NoBasis:
    return "NoBasis";
  }
  return "?";
}

std::string to_string(Derivation d)
{
  switch (d) {
  case Derivation::Criterion:
    return "criterion";
  case Derivation::Identities:
    return "i-identities";
  case Derivation::Oracle:
    return "oracle";
  }
  return "?";
}

// ------------------------------------------------------------- extraction

namespace {

enum class Decision
{
  Yes,
  No,
  Undecided,
};

struct Settled
{
  Decision decision;
  Derivation how = Derivation::Oracle;
};

Settled derivable_from(const PeriodicProfile& g, const std::vector<PeriodicProfile>& others, const ClosureCaps& caps)
{
  std::uint64_t widest_i = 0;
  for (const auto& o : others)
    if (o.period == 1)
      widest_i = std::max(widest_i, o.arity);

  if (g.period == 1 && widest_i >= std::min<std::uint64_t>(g.arity, 2))
    return {Decision::Yes, Derivation::Identities};

  if (g.period > 1) {
    for (const auto& o : others) {
      if (o.period == 1)
        continue;
      if (member_single(g, o).yes())
        return {Decision::Yes, Derivation::Criterion};
      if (widest_i >= 2 && member_single_with_I(g, o).yes())
        return {Decision::Yes, Derivation::Criterion};
    }
  }

  if (g.arity > std::min(caps.max_nvars, ClosureCaps::hard_max_nvars))
    return {Decision::Undecided};
  std::vector<TableFn> tables;
  for (const auto& o : others) {
    if (o.arity > caps.max_arity)
      return {Decision::Undecided};
    tables.push_back(to_table(make_periodic(o)));
  }
  const auto gens = name_generators(tables);
  const auto r = member_oracle(to_table(make_periodic(g)), gens, caps);
  switch (r.verdict) {
  case OracleVerdict::Yes:
    return {Decision::Yes, Derivation::Oracle};
  case OracleVerdict::No:
    return {Decision::No};
  case OracleVerdict::Incomplete:
    break;
  }
  return {Decision::Undecided};
}

} // namespace

BasisExtraction extract_finite_basis(std::span<const PeriodicProfile> G, std::uint64_t p, const ClosureCaps& caps)
{
  if (!is_prime(p))
    throw DomainError("extract_finite_basis: p=" + std::to_string(p) + " is not prime");
  std::vector<PeriodicProfile> current;
  for (const auto& g : G) {
    if (!is_canonical(g))
      throw DomainError("extract_finite_basis: " + format_literal(g) + " is not a canonical profile");
    if (!log_exact(g.period, p))
      throw DomainError("extract_finite_basis: " + format_literal(g) + " is not in PS^[p]");
    if (std::find(current.begin(), current.end(), g) == current.end())
      current.push_back(g);
  }
  std::sort(current.begin(), current.end(), [](const auto& a, const auto& b) {
    return std::tie(a.arity, a.period, a.offset) < std::tie(b.arity, b.period, b.offset);
  });

  BasisExtraction out;
  const auto order = current;
  for (const auto& g : order) {
    std::vector<PeriodicProfile> others;
    for (const auto& o : current)
      if (!(o == g))
        others.push_back(o);
    if (others.empty())
      continue;
    const auto s = derivable_from(g, others, caps);
    if (s.decision == Decision::Yes) {
      out.removed.push_back({g, s.how});
      current = std::move(others);
    } else if (s.decision == Decision::Undecided) {
      out.undecided.push_back(g);
    }
  }
  out.basis = std::move(current);
  return out;
}

// ---------------------------------------------------------- classification

BasisClassification classify(const FamilyDescriptor& G, const ClosureCaps& caps)
{
  validate_descriptor(G);
  BasisClassification out;
  bool infinite_beyond_i = false;
  for (const auto& s : G.sequences) {
    SequenceAnalysis a;
    a.degenerate = is_degenerate(s);
    a.rho0 = ratio_exponent(s, 0);
    a.slope = s.d.c == 0 ? 0 : s.t_exp.b - s.d.e;
    infinite_beyond_i = infinite_beyond_i || !a.degenerate;
    out.sequences.push_back(a);
  }

  if (!infinite_beyond_i) {
    out.verdict = BasisVerdict::FiniteBasis;
    std::vector<PeriodicProfile> gens = G.finite;
    // A sequence of i-functions generates I, and any member of arity >= 2 does too.
    for (const auto& s : G.sequences) {
      for (std::uint64_t k = 0;; ++k) {
        auto m = small_member_at(s, G.p, k);
        if (m && m->arity >= 2) {
          gens.push_back(*m);
          break;
        }
      }
    }
    out.finite_basis = extract_finite_basis(gens, G.p, caps);
    return out;
  }

  for (std::size_t i = 0; i < G.sequences.size(); ++i) {
    const auto& a = out.sequences[i];
    if (a.degenerate || !a.constant_ratio())
      continue;
    if (!out.nobasis_exponent || a.rho0 < *out.nobasis_exponent)
      out.nobasis_exponent = a.rho0;
  }
  if (out.nobasis_exponent) {
    out.verdict = BasisVerdict::NoBasis;
    return out;
  }

  out.verdict = BasisVerdict::CountableBasis;
  constexpr std::uint64_t prefix = 4;
  std::vector<PeriodicProfile> sample;
  for (const auto& f : G.finite)
    if (f.period > 1)
      sample.push_back(f);
  for (const auto& s : G.sequences)
    for (std::uint64_t k = 0; k <= prefix; ++k)
      if (auto m = small_member_at(s, G.p, k); m && m->period > 1 && m->arity <= (std::uint64_t{1} << 20))
        sample.push_back(*m);
  try {
    out.maximal_prefix = maximal_set(sample);
    out.maximal_prefix_k = prefix;
  } catch (const DomainError&) {
    out.maximal_prefix.clear();
  }
  return out;
}

BasisVerdict classify_d0_infinite(const FamilyDescriptor& G)
{
  validate_descriptor(G);
  bool infinite = false;
  bool top_layer = false;
  for (const auto& f : G.finite) {
    if (f.offset != 0)
      throw DomainError("classify_d0_infinite: finite member with d != 0");
    top_layer = top_layer || f.arity % f.period == 0;
  }
  for (const auto& s : G.sequences) {
    if (s.d.c != 0)
      throw DomainError("classify_d0_infinite: sequence with d != 0");
    infinite = infinite || !is_degenerate(s);
    for (std::uint64_t k = 0; k <= validation_prefix && !top_layer; ++k) {
      const auto b = member_at(s, G.p, k);
      top_layer = b.arity % b.period == 0;
    }
  }
  if (!infinite)
    throw DomainError("classify_d0_infinite: G \\ I is finite");
  if (!top_layer)
    throw DomainError("classify_d0_infinite: no member g with (2^m) in N_g");
  return BasisVerdict::NoBasis;
}

} // namespace symclone
