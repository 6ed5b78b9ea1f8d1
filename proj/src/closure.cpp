#include "symclone/closure.hpp"

#include <algorithm>
#include <map>

#include "symclone/error.hpp"

namespace symclone {

std::vector<Generator> name_generators(std::span<const TableFn> fns)
{
  std::vector<Generator> out;
  for (std::size_t k = 0; k < fns.size(); ++k)
    out.push_back({fns.size() == 1 ? std::string("g") : "g" + std::to_string(k + 1), fns[k]});
  return out;
}

const DerivedFn* ClosureState::find(std::uint32_t support, std::uint64_t table) const
{
  auto it = index_.find(DerivedKey{support, table});
  return it == index_.end() ? nullptr : &derived_[it->second];
}

const DerivedFn* ClosureState::find(const TableFn& f) const
{
  if (f.arity() != nvars_)
    throw DomainError("closure lookup: arity " + std::to_string(f.arity()) + " differs from nvars " +
                      std::to_string(nvars_));
  if (f.is_zero())
    return find(0, 0);
  return find((std::uint32_t{1} << nvars_) - 1, f.low_word());
}

TableFn ClosureState::table_of(const DerivedFn& d) const { return TableFn::from_bits(nvars_, d.table); }

Signature ClosureState::signature() const
{
  Signature sig;
  for (const auto& g : generators_)
    if (g.name != i_head)
      sig.add(g.name, g.fn);
  return sig;
}

namespace {

/*
 * g applied to a fixed placement of variables and subformula slots. On {1,2}^n
 * every subformula slot that is non-zero contributes the value 1, so the result of
 * g(A_1..A_m) is `table & (AND of the slot subformulas)`.
 */
struct PatternClass
{
  DerivedKey key;
  // Best placement per number of subformula slots (index 0: no slots).
  std::vector<std::optional<std::vector<std::uint8_t>>> placement_by_slots;
  std::size_t generator = 0;
  std::size_t max_slots = 0;
};

struct Conjunction
{
  DerivedKey key;
  std::vector<std::size_t> parts; // indices into the derived list
};

constexpr std::uint8_t slot = 0; // placement value for a subformula slot; j >= 1 means x_j

DerivedKey normalize(DerivedKey k) { return k.table == 0 ? DerivedKey{0, 0} : k; }

std::uint64_t full_mask(std::size_t nvars)
{
  const auto size = std::size_t{1} << nvars;
  return size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
}

/// Pattern classes of one generator, keyed by (support, table) plus generator index.
void enumerate_patterns(std::size_t gi, const TableFn& g, std::size_t nvars, std::vector<PatternClass>& classes,
                        std::unordered_map<DerivedKey, std::size_t, DerivedKeyHash>& by_key)
{
  const auto m = g.arity();
  const auto npoints = std::size_t{1} << nvars;
  std::vector<std::uint8_t> placement(m, slot);
  for (;;) {
    std::uint64_t table = 0;
    std::uint32_t support = 0;
    std::size_t slots = 0;
    for (auto v : placement) {
      if (v == slot)
        ++slots;
      else
        support |= std::uint32_t{1} << (v - 1);
    }
    for (std::size_t a = 0; a < npoints; ++a) {
      std::size_t idx = 0;
      for (auto v : placement) {
        const std::size_t b = v == slot ? 0 : (a >> (nvars - v)) & 1u;
        idx = (idx << 1) | b;
      }
      if (g.bit(idx))
        table |= std::uint64_t{1} << a;
    }
    // The zero function has no support; the slots still matter for the witness only.
    DerivedKey key = table == 0 && slots == 0 ? DerivedKey{0, 0} : DerivedKey{support, table};
    auto [it, inserted] = by_key.emplace(key, classes.size());
    if (inserted) {
      PatternClass pc;
      pc.key = key;
      pc.generator = gi;
      pc.placement_by_slots.resize(m + 1);
      classes.push_back(std::move(pc));
    }
    auto& pc = classes[it->second];
    if (pc.generator == gi && !pc.placement_by_slots[slots]) {
      pc.placement_by_slots[slots] = placement;
      pc.max_slots = std::max(pc.max_slots, slots);
    }
    // Next placement in lexicographic order over {slot, x_1..x_n}^m.
    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      if (placement[pos] < nvars) {
        ++placement[pos];
        std::fill(placement.begin() + pos + 1, placement.end(), slot);
        break;
      }
      if (pos == 0)
        return;
    }
    if (m == 0)
      return;
  }
}

Formula build_witness(const Generator& g, const std::vector<std::uint8_t>& placement,
                      const std::vector<std::size_t>& parts, const std::vector<DerivedFn>& derived)
{
  std::vector<Formula> args;
  std::size_t next = 0;
  for (auto v : placement) {
    if (v == slot) {
      const auto which = parts[std::min(next, parts.size() - 1)];
      args.push_back(derived[which].witness);
      ++next;
    } else {
      args.push_back(Formula::variable(v));
    }
  }
  return Formula::apply(g.name, std::move(args));
}

} // namespace

ClosureState close_until(std::span<const Generator> gens, std::size_t nvars, const ClosureCaps& caps,
                         std::optional<DerivedKey> target)
{
  ClosureState st;
  st.generators_.assign(gens.begin(), gens.end());
  st.nvars_ = nvars;

  if (nvars == 0)
    throw DomainError("close: nvars must be positive");
  {
    std::map<std::string, int> names;
    for (const auto& g : gens) {
      if (g.fn.arity() == 0)
        throw DomainError("close: generator '" + g.name + "' has arity 0");
      if (++names[g.name] > 1)
        throw DomainError("close: duplicate generator name '" + g.name + "'");
      if (g.name == i_head && !is_i(g.fn))
        throw DomainError("close: generator named 'i' must be an i-function");
    }
  }
  auto incomplete = [&](std::string why) {
    st.status_ = ClosureStatus::Incomplete;
    st.reason_ = std::move(why);
    return st;
  };
  const auto nvars_cap = std::min(caps.max_nvars, ClosureCaps::hard_max_nvars);
  if (nvars > nvars_cap)
    return incomplete("nvars " + std::to_string(nvars) + " exceeds cap " + std::to_string(nvars_cap));
  for (const auto& g : gens)
    if (g.fn.arity() > caps.max_arity)
      return incomplete("generator '" + g.name + "' arity " + std::to_string(g.fn.arity()) + " exceeds cap " +
                        std::to_string(caps.max_arity));

  std::vector<PatternClass> classes;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    std::unordered_map<DerivedKey, std::size_t, DerivedKeyHash> by_key;
    enumerate_patterns(gi, gens[gi].fn, nvars, classes, by_key);
  }
  std::size_t max_slots = 0;
  for (const auto& pc : classes)
    max_slots = std::max(max_slots, pc.max_slots);

  auto add = [&](DerivedKey key, Formula witness, std::size_t round) {
    key = normalize(key);
    if (st.index_.count(key))
      return false;
    st.index_.emplace(key, st.derived_.size());
    st.derived_.push_back({key.support, key.table, std::move(witness), round});
    return true;
  };
  auto reached_target = [&] { return target && st.index_.count(normalize(*target)); };

  // Round 0: variables only.
  for (const auto& pc : classes)
    if (pc.placement_by_slots[0])
      add(pc.key, build_witness(gens[pc.generator], *pc.placement_by_slots[0], {}, st.derived_), 0);
  st.round_sizes_.push_back(st.derived_.size());
  if (st.derived_.size() > caps.max_derived)
    return incomplete("derived set exceeds cap " + std::to_string(caps.max_derived));

  for (std::size_t round = 1; !reached_target(); ++round) {
    const auto snapshot = st.derived_.size();
    if (snapshot == 0 || max_slots == 0)
      break;

    // Conjunctions of 1..max_slots derived functions, each with a shortest part list.
    std::vector<Conjunction> conj;
    std::unordered_map<DerivedKey, std::size_t, DerivedKeyHash> conj_index;
    std::vector<std::size_t> level_start{0};
    for (std::size_t i = 0; i < snapshot; ++i) {
      DerivedKey k{st.derived_[i].support, st.derived_[i].table};
      if (conj_index.emplace(k, conj.size()).second)
        conj.push_back({k, {i}});
    }
    for (std::size_t level = 2; level <= max_slots; ++level) {
      const auto from = level_start.back();
      const auto to = conj.size();
      level_start.push_back(to);
      for (std::size_t c = from; c < to; ++c) {
        for (std::size_t i = 0; i < snapshot; ++i) {
          const auto& d = st.derived_[i];
          DerivedKey k = normalize({conj[c].key.support | d.support, conj[c].key.table & d.table});
          if (conj_index.count(k))
            continue;
          conj_index.emplace(k, conj.size());
          auto parts = conj[c].parts;
          parts.push_back(i);
          conj.push_back({k, std::move(parts)});
          if (conj.size() > caps.max_conjunctions)
            return incomplete("conjunction set exceeds cap " + std::to_string(caps.max_conjunctions));
        }
      }
      if (conj.size() == to)
        break;
    }

    bool grew = false;
    for (const auto& pc : classes) {
      if (pc.max_slots == 0)
        continue;
      for (const auto& c : conj) {
        const auto parts = c.parts.size();
        if (parts > pc.max_slots)
          continue;
        DerivedKey k{pc.key.support | c.key.support, pc.key.table & c.key.table};
        if (st.index_.count(normalize(k)))
          continue;
        std::size_t slots = parts;
        while (!pc.placement_by_slots[slots])
          ++slots;
        grew |= add(k, build_witness(gens[pc.generator], *pc.placement_by_slots[slots], c.parts, st.derived_), round);
        if (st.derived_.size() > caps.max_derived)
          return incomplete("derived set exceeds cap " + std::to_string(caps.max_derived));
      }
    }
    st.round_sizes_.push_back(st.derived_.size());
    if (!grew)
      break;
  }
  return st;
}

ClosureState close(std::span<const Generator> gens, std::size_t nvars, const ClosureCaps& caps)
{
  return close_until(gens, nvars, caps, std::nullopt);
}

OracleResult member_oracle(const TableFn& f, std::span<const Generator> gens, const ClosureCaps& caps)
{
  const auto nvars = f.arity();
  OracleResult out;
  if (nvars > std::min(caps.max_nvars, ClosureCaps::hard_max_nvars)) {
    out.verdict = OracleVerdict::Incomplete;
    out.reason = "arity " + std::to_string(nvars) + " exceeds the nvars cap";
    return out;
  }
  DerivedKey target = f.is_zero() ? DerivedKey{0, 0}
                                  : DerivedKey{(std::uint32_t{1} << nvars) - 1, f.low_word() & full_mask(nvars)};
  auto st = close_until(gens, nvars, caps, target);
  out.derived_size = st.derived().size();
  out.signature = st.signature();
  if (auto hit = st.find(f)) {
    out.verdict = OracleVerdict::Yes;
    out.witness = hit->witness;
    return out;
  }
  if (!st.at_fixpoint()) {
    out.verdict = OracleVerdict::Incomplete;
    out.reason = st.incomplete_reason();
    return out;
  }
  out.verdict = OracleVerdict::No;
  return out;
}

} // namespace symclone
