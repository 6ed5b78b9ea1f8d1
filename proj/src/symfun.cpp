#include "symclone/symfun.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "symclone/error.hpp"

namespace symclone {

// ---------------------------------------------------------------- TableFn

TableFn::TableFn(std::size_t arity) : arity_(arity)
{
  if (arity == 0 || arity > max_arity)
    throw DomainError("TableFn: arity must be in 1.." + std::to_string(max_arity));
  words_.assign((size() + 63) / 64, 0);
}

TableFn TableFn::from_bits(std::size_t arity, std::uint64_t bits)
{
  TableFn f(arity);
  if (arity < 6)
    bits &= (std::uint64_t{1} << f.size()) - 1;
  f.words_[0] = bits;
  return f;
}

void TableFn::set(std::size_t index, bool value) noexcept
{
  const auto mask = std::uint64_t{1} << (index & 63);
  if (value)
    words_[index >> 6] |= mask;
  else
    words_[index >> 6] &= ~mask;
}

bool TableFn::is_zero() const noexcept
{
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool TableFn::is_all_ones() const noexcept
{
  if (arity_ < 6)
    return words_[0] == (std::uint64_t{1} << size()) - 1;
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == ~std::uint64_t{0}; });
}

int TableFn::eval(std::span<const std::uint8_t> tuple) const
{
  if (tuple.size() != arity_)
    throw DomainError("eval: tuple length " + std::to_string(tuple.size()) + " does not match arity " +
                      std::to_string(arity_));
  for (auto v : tuple) {
    if (v > 2)
      throw DomainError("eval: tuple components must be 0, 1 or 2");
    if (v == 0)
      return 0;
  }
  return bit(tuple_index(tuple)) ? 1 : 0;
}

std::size_t tuple_index(std::span<const std::uint8_t> tuple)
{
  std::size_t index = 0;
  for (auto v : tuple)
    index = (index << 1) | (v == 2 ? 1u : 0u);
  return index;
}

Tuple index_tuple(std::size_t index, std::size_t arity)
{
  Tuple t(arity);
  for (std::size_t j = 0; j < arity; ++j)
    t[j] = ((index >> (arity - 1 - j)) & 1u) ? 2 : 1;
  return t;
}

std::size_t TableFnHash::operator()(const TableFn& f) const noexcept
{
  std::size_t h = std::hash<std::size_t>{}(f.arity());
  for (auto w : f.words())
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

// ------------------------------------------------------------ SymmetricFn

SymmetricFn::SymmetricFn(std::size_t arity, std::vector<bool> layers) : arity_(arity), layers_(std::move(layers))
{
  if (arity == 0)
    throw DomainError("SymmetricFn: arity must be positive");
  if (layers_.size() != arity + 1)
    throw DomainError("SymmetricFn: expected " + std::to_string(arity + 1) + " layers, got " +
                      std::to_string(layers_.size()));
}

SymmetricFn SymmetricFn::zero(std::size_t arity) { return {arity, std::vector<bool>(arity + 1, false)}; }

SymmetricFn SymmetricFn::identity(std::size_t arity) { return {arity, std::vector<bool>(arity + 1, true)}; }

SymmetricFn SymmetricFn::from_layers(std::size_t arity, std::span<const std::size_t> set_layers)
{
  std::vector<bool> layers(arity + 1, false);
  for (auto d : set_layers) {
    if (d > arity)
      throw DomainError("SymmetricFn: layer " + std::to_string(d) + " exceeds arity " + std::to_string(arity));
    layers[d] = true;
  }
  return {arity, std::move(layers)};
}

std::vector<std::size_t> SymmetricFn::set_layers() const
{
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d < layers_.size(); ++d)
    if (layers_[d])
      out.push_back(d);
  return out;
}

bool SymmetricFn::is_zero() const noexcept
{
  return std::none_of(layers_.begin(), layers_.end(), [](bool b) { return b; });
}

// ---------------------------------------------------------------- profiles

void check_profile_args(std::uint64_t n, std::uint64_t d, std::uint64_t t)
{
  if (n == 0)
    throw DomainError("periodic: arity must be positive");
  if (t == 0)
    throw DomainError("periodic: period must be positive");
  if (d >= t)
    throw DomainError("periodic: need d < t (d=" + std::to_string(d) + ", t=" + std::to_string(t) + ")");
  if (d > n)
    throw DomainError("periodic: need d <= n (d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")");
}

PeriodicProfile canonical_profile(std::uint64_t n, std::uint64_t d, std::uint64_t t)
{
  check_profile_args(n, d, t);
  if (d + t <= n)
    return {n, d, t};
  // A single layer: any period above max(d, n - d) reproduces it.
  return {n, d, std::max(d + 1, n - d + 1)};
}

bool is_canonical(const PeriodicProfile& p) noexcept
{
  if (p.arity == 0 || p.period == 0 || p.offset >= p.period || p.offset > p.arity)
    return false;
  return canonical_profile(p.arity, p.offset, p.period) == p;
}

SymmetricFn make_periodic(std::size_t n, std::size_t d, std::size_t t)
{
  check_profile_args(n, d, t);
  std::vector<bool> layers(n + 1, false);
  for (std::size_t k = d; k <= n; k += t)
    layers[k] = true;
  return {n, std::move(layers)};
}

SymmetricFn make_periodic(const PeriodicProfile& p) { return make_periodic(p.arity, p.offset, p.period); }

std::optional<PeriodicProfile> detect_period(const SymmetricFn& f)
{
  const auto set = f.set_layers();
  const auto n = f.arity();
  if (set.empty())
    return std::nullopt;
  if (set.size() == 1)
    return canonical_profile(n, set[0], std::max(set[0] + 1, n - set[0] + 1));
  const auto d = set[0];
  const auto t = set[1] - set[0];
  if (d >= t)
    return std::nullopt;
  if (make_periodic(n, d, t) != f)
    return std::nullopt;
  return PeriodicProfile{n, d, t};
}

std::vector<PeriodicProfile> all_profiles(std::uint64_t n)
{
  if (n == 0)
    throw DomainError("all_profiles: arity must be positive");
  std::vector<PeriodicProfile> out;
  for (std::uint64_t d = 0; d <= n; ++d) {
    for (std::uint64_t t = d + 1; d + t <= n; ++t)
      out.push_back({n, d, t});
    out.push_back(canonical_profile(n, d, n + 1));
  }
  return out;
}

int eval_symmetric(const SymmetricFn& f, std::span<const std::uint8_t> tuple)
{
  if (tuple.size() != f.arity())
    throw DomainError("eval: tuple length " + std::to_string(tuple.size()) + " does not match arity " +
                      std::to_string(f.arity()));
  std::size_t twos = 0;
  for (auto v : tuple) {
    if (v > 2)
      throw DomainError("eval: tuple components must be 0, 1 or 2");
    if (v == 0)
      return 0;
    twos += v == 2;
  }
  return f.layer(twos) ? 1 : 0;
}

std::optional<Intersection> nset_intersection(std::span<const SymmetricFn> fs)
{
  if (fs.empty())
    throw DomainError("nset_intersection: empty input");
  const auto n = fs.front().arity();
  std::vector<bool> layers(n + 1, true);
  for (const auto& f : fs) {
    if (f.arity() != n)
      throw DomainError("nset_intersection: arity mismatch");
    const auto p = detect_period(f);
    if (!p)
      throw DomainError("nset_intersection: input is not periodic");
    if (p->offset != 0)
      throw DomainError("nset_intersection: input has non-zero offset d_f=" + std::to_string(p->offset));
    for (std::size_t d = 0; d <= n; ++d)
      layers[d] = layers[d] && f.layer(d);
  }
  SymmetricFn h(n, std::move(layers));
  if (h.is_zero())
    return std::nullopt;
  auto profile = detect_period(h);
  // Intersections of offset-0 residue classes are residue classes again.
  if (!profile)
    throw Error("nset_intersection: intersection is not periodic");
  return Intersection{std::move(h), *profile};
}

TableFn to_table(const SymmetricFn& f)
{
  TableFn t(f.arity());
  for (std::size_t i = 0; i < t.size(); ++i)
    if (f.layer(static_cast<std::size_t>(std::popcount(i))))
      t.set(i);
  return t;
}

std::optional<SymmetricFn> from_table(const TableFn& g)
{
  const auto n = g.arity();
  std::vector<int> seen(n + 1, -1);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto d = static_cast<std::size_t>(std::popcount(i));
    const int v = g.bit(i) ? 1 : 0;
    if (seen[d] == -1)
      seen[d] = v;
    else if (seen[d] != v)
      return std::nullopt;
  }
  std::vector<bool> layers(n + 1);
  for (std::size_t d = 0; d <= n; ++d)
    layers[d] = seen[d] == 1;
  return SymmetricFn(n, std::move(layers));
}

bool is_i(const TableFn& f) noexcept { return f.arity() > 0 && f.is_all_ones(); }

bool is_i(const SymmetricFn& f) noexcept
{
  return f.arity() > 0 && std::all_of(f.layers().begin(), f.layers().end(), [](bool b) { return b; });
}

} // namespace symclone
