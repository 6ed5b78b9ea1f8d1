#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "symclone/formula.hpp"
#include "symclone/symfun.hpp"

namespace symclone {

struct Generator
{
  std::string name;
  TableFn fn;
};

/// Names the generators g1, g2, ... (or g for a single one).
std::vector<Generator> name_generators(std::span<const TableFn> fns);

struct ClosureCaps
{
  /// Variables are packed into a 64-bit table, so nvars can never exceed this.
  static constexpr std::size_t hard_max_nvars = 6;

  std::size_t max_nvars = 4;
  std::size_t max_arity = 6;
  std::size_t max_derived = 20000;
  std::size_t max_conjunctions = std::size_t{1} << 20;
};

/*
 * A function of [G] over x_1..x_nvars. It equals the table on {1,2}^nvars and is
 * zero whenever a variable of its support is 0; variables outside the support are
 * fictitious. The zero function always has an empty support.
 */
struct DerivedFn
{
  std::uint32_t support = 0; // bit j-1 <=> x_j occurs
  std::uint64_t table = 0;
  Formula witness;
  std::size_t round = 0;
};

struct DerivedKey
{
  std::uint32_t support = 0;
  std::uint64_t table = 0;
  friend bool operator==(const DerivedKey&, const DerivedKey&) = default;
};

struct DerivedKeyHash
{
  std::size_t operator()(const DerivedKey& k) const noexcept
  {
    return std::hash<std::uint64_t>{}(k.table * 0x9e3779b97f4a7c15ull ^ k.support);
  }
};

enum class ClosureStatus
{
  Fixpoint,
  Incomplete,
};

class ClosureState
{
public:
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<DerivedFn>& derived() const noexcept { return derived_; }
  ClosureStatus status() const noexcept { return status_; }
  bool at_fixpoint() const noexcept { return status_ == ClosureStatus::Fixpoint; }
  const std::string& incomplete_reason() const noexcept { return reason_; }
  /// Derived-set size after each round.
  const std::vector<std::size_t>& round_sizes() const noexcept { return round_sizes_; }

  const DerivedFn* find(std::uint32_t support, std::uint64_t table) const;
  /// The entry equal to f, an nvars-ary function of R.
  const DerivedFn* find(const TableFn& f) const;

  TableFn table_of(const DerivedFn& d) const;
  /// Signature that resolves every witness head.
  Signature signature() const;

private:
  friend ClosureState close_until(std::span<const Generator>, std::size_t, const ClosureCaps&,
                                  std::optional<DerivedKey>);
  std::vector<Generator> generators_;
  std::size_t nvars_ = 0;
  std::vector<DerivedFn> derived_;
  std::unordered_map<DerivedKey, std::size_t, DerivedKeyHash> index_;
  ClosureStatus status_ = ClosureStatus::Fixpoint;
  std::string reason_;
  std::vector<std::size_t> round_sizes_;
};

/*
 * [G] restricted to x_1..x_nvars, with a witness formula for every derived function.
 * Resource caps never truncate silently: the state reports Incomplete instead.
 */
ClosureState close(std::span<const Generator> gens, std::size_t nvars, const ClosureCaps& caps = {});

/// Same as close, but stops after the round that derives the target (if given).
ClosureState close_until(std::span<const Generator> gens, std::size_t nvars, const ClosureCaps& caps,
                         std::optional<DerivedKey> target);

enum class OracleVerdict
{
  Yes,
  No,
  Incomplete,
};

struct OracleResult
{
  OracleVerdict verdict = OracleVerdict::No;
  std::optional<Formula> witness;
  Signature signature;
  std::size_t derived_size = 0;
  std::string reason;
};

/// f in [G], decided by running close with nvars = arity of f.
OracleResult member_oracle(const TableFn& f, std::span<const Generator> gens, const ClosureCaps& caps = {});

} // namespace symclone
