#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace symclone {

/// Values of a ternary tuple component: 0, 1 or 2.
using Tuple = std::vector<std::uint8_t>;

/*
 * Functions of R: {0,1,2}^n -> {0,1}, zero on every tuple with a 0 component.
 * Only the restriction to {1,2}^n is stored.
 *
 * A tuple of {1,2}^n is indexed by its binary encoding with 1 -> 0, 2 -> 1 and
 * x_1 as the most significant bit.
 */
class TableFn
{
public:
  static constexpr std::size_t max_arity = 24;

  TableFn() = default;
  /// The zero function of the given arity.
  explicit TableFn(std::size_t arity);

  static TableFn from_bits(std::size_t arity, std::uint64_t bits);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return std::size_t{1} << arity_; }

  bool bit(std::size_t index) const noexcept { return (words_[index >> 6] >> (index & 63)) & 1u; }
  void set(std::size_t index, bool value = true) noexcept;

  /// Low 64 entries; the whole table when arity <= 6.
  std::uint64_t low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  bool is_zero() const noexcept;
  bool is_all_ones() const noexcept;

  /// Value on a tuple over {0,1,2}; throws DomainError on a length mismatch.
  int eval(std::span<const std::uint8_t> tuple) const;

  friend bool operator==(const TableFn&, const TableFn&) = default;

private:
  std::size_t arity_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Index of a {1,2} tuple; components must be 1 or 2.
std::size_t tuple_index(std::span<const std::uint8_t> tuple);

/// Tuple of {1,2}^arity with the given index.
Tuple index_tuple(std::size_t index, std::size_t arity);

/// Symmetric function of R, stored as one value per layer (layer d = d twos).
class SymmetricFn
{
public:
  SymmetricFn() = default;
  /// layers.size() must be arity + 1.
  SymmetricFn(std::size_t arity, std::vector<bool> layers);

  static SymmetricFn zero(std::size_t arity);
  /// i_n: one on all of {1,2}^n.
  static SymmetricFn identity(std::size_t arity);
  static SymmetricFn from_layers(std::size_t arity, std::span<const std::size_t> set_layers);

  std::size_t arity() const noexcept { return arity_; }
  bool layer(std::size_t twos) const { return layers_.at(twos); }
  const std::vector<bool>& layers() const noexcept { return layers_; }
  std::vector<std::size_t> set_layers() const;

  bool is_zero() const noexcept;

  friend bool operator==(const SymmetricFn&, const SymmetricFn&) = default;

private:
  std::size_t arity_ = 0;
  std::vector<bool> layers_;
};

/*
 * (n, d_f, t_f) of a periodic symmetric non-zero function: it is one exactly on
 * the layers d with d = d_f (mod t_f) and d_f <= d <= n. Profiles are kept in
 * canonical form, where the period is the least one producing that layer set.
 */
struct PeriodicProfile
{
  std::uint64_t arity = 0;
  std::uint64_t offset = 0;
  std::uint64_t period = 1;

  /// Number of ones on the lowest set layer.
  std::uint64_t ones() const noexcept { return arity - offset; }

  friend bool operator==(const PeriodicProfile&, const PeriodicProfile&) = default;
  friend auto operator<=>(const PeriodicProfile&, const PeriodicProfile&) = default;
};

/// Throws DomainError unless 0 <= d < t, d <= n and n >= 1.
void check_profile_args(std::uint64_t n, std::uint64_t d, std::uint64_t t);

/// Canonical profile of the function make_periodic(n, d, t), computed arithmetically.
PeriodicProfile canonical_profile(std::uint64_t n, std::uint64_t d, std::uint64_t t);

/// True when the profile is valid and already canonical.
bool is_canonical(const PeriodicProfile& p) noexcept;

SymmetricFn make_periodic(std::size_t n, std::size_t d, std::size_t t);
SymmetricFn make_periodic(const PeriodicProfile& p);

/// Canonical profile of f, or nullopt if f is zero or its layer set is not a residue class.
std::optional<PeriodicProfile> detect_period(const SymmetricFn& f);

/// Every canonical profile of arity n, one per distinct periodic layer set.
std::vector<PeriodicProfile> all_profiles(std::uint64_t n);

int eval_symmetric(const SymmetricFn& f, std::span<const std::uint8_t> tuple);

struct Intersection
{
  SymmetricFn fn;
  PeriodicProfile profile;
};

/*
 * h with N_h equal to the intersection of the N_f. Every input must be periodic
 * with offset 0 and share one arity. Returns nullopt when h is zero.
 */
std::optional<Intersection> nset_intersection(std::span<const SymmetricFn> fs);

TableFn to_table(const SymmetricFn& f);
/// nullopt iff some layer of g is not constant.
std::optional<SymmetricFn> from_table(const TableFn& g);

/// N_f = {1,2}^n.
bool is_i(const TableFn& f) noexcept;
bool is_i(const SymmetricFn& f) noexcept;

struct TableFnHash
{
  std::size_t operator()(const TableFn& f) const noexcept;
};

} // namespace symclone
