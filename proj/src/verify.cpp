#include "symclone/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "symclone/arith.hpp"
#include "symclone/error.hpp"
#include "symclone/formula.hpp"
#include "symclone/literal.hpp"

namespace symclone {

namespace {

using Clock = std::chrono::steady_clock;

class Suite
{
public:
  Suite(std::string name, const VerifyConfig& cfg) : cfg_(cfg), start_(Clock::now())
  {
    report_.name = std::move(name);
    report_.seed = cfg.seed;
  }

  void check(bool ok, const std::function<std::string()>& describe)
  {
    ++report_.checked;
    if (ok)
      return;
    ++report_.violations;
    if (report_.counterexamples.size() < cfg_.max_counterexamples)
      report_.counterexamples.push_back(describe());
  }

  void incomplete(const std::string& what)
  {
    ++report_.incomplete;
    if (report_.counterexamples.size() < cfg_.max_counterexamples)
      report_.counterexamples.push_back("incomplete: " + what);
  }

  void stat(const std::string& key, std::size_t add = 1)
  {
    for (auto& [k, v] : report_.stats)
      if (k == key) {
        v += add;
        return;
      }
    report_.stats.emplace_back(key, add);
  }

  SuiteReport finish()
  {
    report_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(report_);
  }

private:
  const VerifyConfig& cfg_;
  Clock::time_point start_;
  SuiteReport report_;
};

std::string prof(const PeriodicProfile& p)
{
  return "(" + std::to_string(p.arity) + "," + std::to_string(p.offset) + "," + std::to_string(p.period) + ")";
}

std::string tuple_text(std::span<const std::uint8_t> a)
{
  std::string s = "(";
  for (std::size_t k = 0; k < a.size(); ++k)
    s += (k ? "," : "") + std::to_string(a[k]);
  return s + ")";
}

std::string occ_text(const Occurrence& o)
{
  std::string s = "[";
  for (std::size_t k = 0; k < o.size(); ++k)
    s += (k ? "," : "") + std::to_string(o[k]);
  return s + "]";
}

template <class T>
T pick(std::mt19937_64& rng, T lo, T hi)
{
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

// ------------------------------------------------------------ random formulas

struct RandomFormula
{
  Signature sig;
  Formula phi = Formula::variable(1);
  std::size_t nvars = 1;
};

RandomFormula random_formula(std::mt19937_64& rng, const VerifyConfig& cfg)
{
  RandomFormula out;
  std::vector<std::pair<std::string, std::size_t>> heads;
  const auto nheads = pick<std::size_t>(rng, 1, 3);
  for (std::size_t h = 0; h < nheads; ++h) {
    const auto name = "f" + std::to_string(h + 1);
    if (rng() % 2 == 0) {
      const auto profiles = all_profiles(pick<std::uint64_t>(rng, 1, 4));
      const auto& p = profiles[rng() % profiles.size()];
      out.sig.add(name, to_table(make_periodic(p)));
      heads.emplace_back(name, p.arity);
    } else {
      const auto m = pick<std::size_t>(rng, 1, 3);
      const auto mask = (std::uint64_t{1} << (std::size_t{1} << m)) - 1;
      out.sig.add(name, TableFn::from_bits(m, rng() & mask));
      heads.emplace_back(name, m);
    }
  }
  out.nvars = pick<std::size_t>(rng, 1, cfg.formula_max_nvars);
  const auto depth = pick<std::size_t>(rng, 1, cfg.formula_max_depth);
  std::function<Formula(std::size_t, bool)> gen = [&](std::size_t d, bool root) -> Formula {
    if (!root && (d == 0 || rng() % 3 == 0))
      return Formula::variable(pick<std::size_t>(rng, 1, out.nvars));
    const auto h = rng() % (heads.size() + 1);
    const auto arity = h == heads.size() ? pick<std::size_t>(rng, 1, 3) : heads[h].second;
    std::vector<Formula> args;
    for (std::size_t k = 0; k < arity; ++k)
      args.push_back(gen(d - 1, false));
    if (h == heads.size())
      return Formula::apply_i(std::move(args));
    return Formula::apply(heads[h].first, std::move(args));
  };
  do
    out.phi = gen(depth, true);
  while (out.phi.node_count() > cfg.formula_max_nodes);
  return out;
}

void for_each_tuple(std::size_t n, std::uint8_t base, const std::function<void(const Tuple&)>& fn)
{
  Tuple a(n, 0);
  for (;;) {
    fn(a);
    std::size_t pos = n;
    while (pos > 0 && ++a[pos - 1] == base)
      a[--pos] = 0;
    if (pos == 0)
      return;
  }
}

// ------------------------------------------------------------------ the grid

struct GridRun
{
  PeriodicProfile f;
  PeriodicProfile g;
  bool with_i = false;
  CriterionResult criterion;
  OracleResult oracle;
};

void run_grid(const VerifyConfig& cfg, const std::function<void(const GridRun&)>& visit)
{
  const auto i2 = to_table(SymmetricFn::identity(2));
  for (std::uint64_t n = 2; n <= cfg.grid_max_n; ++n)
    for (const auto& f : all_profiles(n)) {
      if (f.period == 1 || f.offset + f.period > f.arity)
        continue;
      const auto ftab = to_table(make_periodic(f));
      for (std::uint64_t m = 1; m <= cfg.grid_max_m; ++m)
        for (const auto& g : all_profiles(m))
          for (bool with_i : {false, true}) {
            GridRun r;
            r.f = f;
            r.g = g;
            r.with_i = with_i;
            r.criterion = with_i ? member_single_with_I(f, g) : member_single(f, g);
            std::vector<TableFn> fns{to_table(make_periodic(g))};
            if (with_i)
              fns.push_back(i2);
            r.oracle = member_oracle(ftab, name_generators(fns), cfg.caps);
            visit(r);
          }
    }
}

std::string grid_label(const GridRun& r)
{
  return "f=" + prof(r.f) + " g=" + prof(r.g) + (r.with_i ? " [{g} u I]" : " [{g}]");
}

std::string oracle_text(OracleVerdict v)
{
  switch (v) {
  case OracleVerdict::Yes:
    return "yes";
  case OracleVerdict::No:
    return "no";
  case OracleVerdict::Incomplete:
    return "incomplete";
  }
  return "?";
}

bool has_middle_layer(const PeriodicProfile& f)
{
  const auto fn = make_periodic(f);
  for (std::size_t d = 1; d < f.arity; ++d)
    if (fn.layer(d))
      return true;
  return false;
}

// h in PS^w for some w dividing t.
bool periodic_with_period_dividing(const TableFn& h, std::uint64_t t)
{
  const auto sym = from_table(h);
  if (!sym || sym->is_zero())
    return false;
  const auto d = sym->set_layers().front();
  for (std::uint64_t w = d + 1; w <= t; ++w)
    if (t % w == 0 && make_periodic(sym->arity(), d, w) == *sym)
      return true;
  return false;
}

// ------------------------------------------------------------- descriptors

constexpr std::uint64_t numeric_prefix = 40;

std::uint64_t exact_log(BigInt x, std::uint64_t p)
{
  std::uint64_t e = 0;
  while (x > 1) {
    if (x % p != 0)
      throw DomainError("ratio is not a power of p");
    x /= p;
    ++e;
  }
  return e;
}

std::uint64_t numeric_ratio_exponent(const BigProfile& b, std::uint64_t p)
{
  const BigInt g = b.offset == 0 ? b.period : BigInt(boost::multiprecision::gcd(b.offset, b.period));
  return exact_log(b.period / g, p);
}

bool classification_consistent(const BasisClassification& c)
{
  switch (c.verdict) {
  case BasisVerdict::FiniteBasis:
    return c.finite_basis.has_value() && !c.nobasis_exponent;
  case BasisVerdict::NoBasis:
    return c.nobasis_exponent.has_value() && !c.finite_basis;
  case BasisVerdict::CountableBasis:
    return !c.nobasis_exponent && !c.finite_basis;
  }
  return false;
}

BasisVerdict expected_verdict(const NumericConditions& nc)
{
  if (nc.finite_beyond_i)
    return BasisVerdict::FiniteBasis;
  if (nc.some_ratio_class_infinite)
    return BasisVerdict::NoBasis;
  return BasisVerdict::CountableBasis;
}

bool d0_route_applies(const FamilyDescriptor& G)
{
  bool nondegenerate = false;
  bool top_layer = false;
  for (const auto& f : G.finite) {
    if (f.offset != 0)
      return false;
    top_layer = top_layer || f.arity % f.period == 0;
  }
  for (const auto& s : G.sequences) {
    if (s.d.c != 0)
      return false;
    nondegenerate = nondegenerate || !is_degenerate(s);
    for (std::uint64_t k = 0; k <= numeric_prefix && !top_layer; ++k) {
      const auto b = member_at(s, G.p, k);
      top_layer = b.arity % b.period == 0;
    }
  }
  return nondegenerate && top_layer;
}

std::vector<PeriodicProfile> profiles_with_period_power(std::mt19937_64& rng, std::uint64_t p, std::uint64_t max_n)
{
  for (;;) {
    const auto n = pick<std::uint64_t>(rng, 1, max_n);
    std::vector<PeriodicProfile> ok;
    for (const auto& f : all_profiles(n))
      if (log_exact(f.period, p))
        ok.push_back(f);
    if (!ok.empty())
      return ok;
  }
}

} // namespace

// ------------------------------------------------------------------ suites

SuiteReport verify_zero_propagation(const VerifyConfig& cfg)
{
  Suite s("zero-propagation", cfg);
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.formulas; ++i) {
    const auto rf = random_formula(rng, cfg);
    const auto occs = occurrences(rf.phi);
    const auto vars = variables_of(rf.phi);
    for_each_tuple(rf.nvars, 3, [&](const Tuple& a) {
      for (const auto& o : occs)
        s.check(zero_propagation_check(rf.phi, o, rf.sig, a),
                [&] { return to_sexpr(rf.phi) + " at " + occ_text(o) + ", alpha=" + tuple_text(a); });
      // Variable leaves are subformulas too.
      for (auto j : vars)
        if (a[j - 1] == 0)
          s.check(evaluate(rf.phi, rf.sig, a) == 0,
                  [&] { return to_sexpr(rf.phi) + " with x" + std::to_string(j) + "=0, alpha=" + tuple_text(a); });
    });
    s.stat("formulas");
  }
  return s.finish();
}

SuiteReport verify_n_subset(const VerifyConfig& cfg)
{
  Suite s("n-subset", cfg);
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.formulas; ++i) {
    const auto rf = random_formula(rng, cfg);
    for (const auto& o : occurrences(rf.phi))
      s.check(n_subset_check(rf.phi, o, rf.sig, rf.nvars),
              [&] { return to_sexpr(rf.phi) + " at " + occ_text(o) + ", nvars=" + std::to_string(rf.nvars); });
    s.stat("formulas");
  }
  return s.finish();
}

SuiteReport verify_lemma_order(const VerifyConfig& cfg)
{
  Suite s("lemma-order", cfg);
  std::map<std::pair<PeriodicProfile, PeriodicProfile>, std::pair<int, int>> both_constant;
  run_grid(cfg, [&](const GridRun& r) {
    s.stat("runs");
    if (r.criterion.verdict == CriterionVerdict::Inapplicable) {
      s.check(false, [&] { return grid_label(r) + ": criterion inapplicable: " + r.criterion.reason; });
      return;
    }
    if (r.oracle.verdict == OracleVerdict::Incomplete) {
      s.incomplete(grid_label(r) + ": " + r.oracle.reason);
      return;
    }
    const bool oracle_yes = r.oracle.verdict == OracleVerdict::Yes;
    if (oracle_yes)
      s.stat("oracle yes");
    s.check(r.criterion.yes() == oracle_yes, [&] {
      std::string out = grid_label(r) + ": criterion " + (r.criterion.yes() ? "yes" : "no");
      if (!r.criterion.reason.empty())
        out += " (" + r.criterion.reason + ")";
      out += ", oracle " + oracle_text(r.oracle.verdict);
      if (r.oracle.witness)
        out += " via " + to_sexpr(*r.oracle.witness);
      return out;
    });
    if (r.criterion.yes())
      s.check(verify_certificate(r.f, r.g, r.criterion), [&] { return grid_label(r) + ": certificate rejected"; });
    if (holds_both_constant_tuples(r.g)) {
      auto& slot = both_constant[{r.f, r.g}];
      (r.with_i ? slot.second : slot.first) = oracle_yes ? 1 : 0;
    }
  });
  // Second branch: [{g}] and [{g} u I] coincide.
  for (const auto& [key, v] : both_constant) {
    s.stat("both-constant pairs");
    s.check(v.first == v.second, [&, key = key] {
      return "f=" + prof(key.first) + " g=" + prof(key.second) + ": oracle differs between [{g}] and [{g} u I]";
    });
  }
  return s.finish();
}

SuiteReport verify_prop2(const VerifyConfig& cfg)
{
  Suite s("prop2", cfg);
  const Signature sig;
  auto x = [](std::size_t j) { return Formula::variable(j); };
  const auto L = cfg.prop2_max;

  // Flattening, the inner node in every argument position.
  for (std::size_t l = 1; l <= L; ++l)
    for (std::size_t m = 1; m <= L; ++m)
      for (std::size_t pos = 0; pos < l; ++pos) {
        std::vector<Formula> inner, outer, flat;
        for (std::size_t j = 1; j <= m; ++j)
          inner.push_back(x(j));
        std::size_t next = m + 1;
        for (std::size_t a = 0; a < l; ++a) {
          if (a == pos) {
            outer.push_back(Formula::apply_i(inner));
            flat.insert(flat.end(), inner.begin(), inner.end());
          } else {
            outer.push_back(x(next));
            flat.push_back(x(next));
            ++next;
          }
        }
        const auto phi = Formula::apply_i(outer);
        const auto expected = Formula::apply_i(flat);
        const auto nvars = l + m - 1;
        const auto got = rewrite_i(phi, sig);
        s.check(got == expected && realize(phi, sig, nvars) == realize(got, sig, nvars),
                [&] { return to_sexpr(phi) + " rewrote to " + to_sexpr(got); });
        s.stat("flatten");
      }

  // Repeated last argument.
  for (std::size_t n = 2; n <= L; ++n) {
    std::vector<Formula> args, fewer;
    for (std::size_t j = 1; j < n; ++j) {
      args.push_back(x(j));
      fewer.push_back(x(j));
    }
    args.push_back(x(n - 1));
    const auto phi = Formula::apply_i(args);
    const auto got = rewrite_i(phi, sig);
    s.check(got == Formula::apply_i(fewer) && realize(phi, sig, n - 1) == realize(got, sig, n - 1),
            [&] { return to_sexpr(phi) + " rewrote to " + to_sexpr(got); });
    s.stat("duplicate");
  }

  // i_m in [{i_n}] for n >= 2.
  ClosureCaps caps = cfg.caps;
  caps.max_nvars = std::max(caps.max_nvars, std::min(L, ClosureCaps::hard_max_nvars));
  caps.max_arity = std::max(caps.max_arity, L);
  for (std::size_t n = 2; n <= L; ++n) {
    const std::vector<TableFn> gen{to_table(SymmetricFn::identity(n))};
    const auto gens = name_generators(gen);
    for (std::size_t m = 1; m <= L; ++m) {
      const auto r = member_oracle(to_table(SymmetricFn::identity(m)), gens, caps);
      if (r.verdict == OracleVerdict::Incomplete) {
        s.incomplete("i_" + std::to_string(m) + " from i_" + std::to_string(n) + ": " + r.reason);
        continue;
      }
      s.check(r.verdict == OracleVerdict::Yes,
              [&] { return "i_" + std::to_string(m) + " not derived from i_" + std::to_string(n); });
      s.stat("membership");
    }
    // [{i_n}] holds nothing but i-functions.
    const auto st = close(gens, std::min<std::size_t>(3, caps.max_nvars), caps);
    if (!st.at_fixpoint()) {
      s.incomplete("closure of i_" + std::to_string(n) + ": " + st.incomplete_reason());
      continue;
    }
    for (const auto& d : st.derived())
      s.check(st.table_of(d).is_all_ones(), [&] { return "non-i function in [{i_" + std::to_string(n) + "}]"; });
  }
  return s.finish();
}

SuiteReport verify_nf_intersec(const VerifyConfig& cfg)
{
  Suite s("nf-intersec", cfg);
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.tuples; ++i) {
    const auto n = pick<std::uint64_t>(rng, 1, cfg.tuple_max_arity);
    const auto count = pick<std::size_t>(rng, 1, 4);
    std::vector<SymmetricFn> fs;
    std::vector<std::uint64_t> periods;
    std::uint64_t L = 1;
    for (std::size_t k = 0; k < count; ++k) {
      // Small periods keep the lcm within n often enough.
      const auto t = pick<std::uint64_t>(rng, 1, rng() % 2 ? n : std::min<std::uint64_t>(n, 6));
      periods.push_back(t);
      fs.push_back(make_periodic(n, 0, t));
      L = std::lcm(L, t);
    }
    auto describe = [&] {
      std::string out = "n=" + std::to_string(n) + " periods";
      for (auto t : periods)
        out += " " + std::to_string(t);
      return out;
    };
    const auto r = nset_intersection(fs);
    if (!r) {
      s.check(false, [&] { return describe() + ": empty intersection"; });
      continue;
    }
    if (L <= n) {
      s.stat("lcm within n");
      s.check(r->profile == PeriodicProfile{n, 0, L} && r->fn == make_periodic(n, 0, L),
              [&] { return describe() + ": got " + prof(r->profile) + ", lcm " + std::to_string(L); });
    } else {
      s.stat("lcm beyond n");
      s.check(r->fn.set_layers() == std::vector<std::size_t>{0}, [&] { return describe() + ": expected layer 0 only"; });
    }
  }
  return s.finish();
}

SuiteReport verify_numofvar(const VerifyConfig& cfg)
{
  Suite s("numofvar", cfg);
  run_grid(cfg, [&](const GridRun& r) {
    if (!r.criterion.yes() || r.oracle.verdict != OracleVerdict::Yes || !r.oracle.witness)
      return;
    s.stat("witnesses");
    const auto& phi = *r.oracle.witness;
    const auto& sig = r.oracle.signature;
    const auto n = r.f.arity;
    const bool hypothesis = has_middle_layer(r.f);
    if (!hypothesis)
      s.stat("witnesses without a middle 1-layer (count check skipped)");
    for (const auto& o : occurrences(phi)) {
      const auto& sub = subformula_at(phi, o);
      const auto* head = sig.find(sub.head());
      if (!head) {
        s.check(false, [&] { return grid_label(r) + ": unknown head in " + to_sexpr(phi); });
        continue;
      }
      const auto sym = from_table(*head);
      const auto profile = sym ? detect_period(*sym) : std::nullopt;
      if (!profile) {
        s.check(false, [&] { return grid_label(r) + ": head " + sub.head() + " is not periodic"; });
        continue;
      }
      const auto rr = profile->period;
      const auto q = variable_counts(phi, o, n);
      auto where = [&] { return grid_label(r) + ": " + to_sexpr(phi) + " at " + occ_text(o); };

      if (hypothesis) {
        bool congruent = true;
        for (std::size_t a = 0; a < n; ++a)
          congruent = congruent && (q[a] % rr) == (q[0] % rr);
        s.check(congruent, [&] { return where() + ": variable counts not congruent mod " + std::to_string(rr); });
        s.stat("count checks");
      }
      if (is_essential(phi, o, sig, n)) {
        s.check(std::all_of(q.begin(), q.end(), [](std::size_t c) { return c > 0; }),
                [&] { return where() + ": essential occurrence misses a variable"; });
        const auto h = realize(sub, sig, n);
        s.check(periodic_with_period_dividing(h, r.f.period),
                [&] { return where() + ": essential occurrence period does not divide " + std::to_string(r.f.period); });
        s.stat("essential occurrences");
      }
    }
  });
  return s.finish();
}

NumericConditions numeric_conditions(const FamilyDescriptor& G)
{
  constexpr std::uint64_t half = numeric_prefix / 2;
  std::size_t non_i_half = 0, non_i_full = 0;
  std::map<std::uint64_t, std::size_t> classes;
  auto visit = [&](const BigProfile& b, bool in_half) {
    if (b.period == 1)
      return;
    ++non_i_full;
    non_i_half += in_half;
    ++classes[numeric_ratio_exponent(b, G.p)];
  };
  for (const auto& f : G.finite)
    visit(BigProfile{f.arity, f.offset, f.period}, true);
  for (const auto& s : G.sequences)
    for (std::uint64_t k = 0; k <= numeric_prefix; ++k)
      visit(member_at(s, G.p, k), k <= half);

  // Each sequence with a growing ratio meets a class at most once, so a class is
  // infinite iff its prefix count exceeds what the finite part and those can supply.
  const auto bound = G.finite.size() + G.sequences.size();
  NumericConditions nc;
  nc.finite_beyond_i = non_i_full == non_i_half;
  for (const auto& [e, count] : classes)
    nc.some_ratio_class_infinite = nc.some_ratio_class_infinite || count > bound;
  nc.all_ratio_classes_finite = !nc.finite_beyond_i && !nc.some_ratio_class_infinite;
  return nc;
}

FamilyDescriptor random_descriptor(std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  static constexpr std::uint64_t primes[] = {2, 3, 5};
  for (;;) {
    FamilyDescriptor G;
    G.p = primes[rng() % 3];
    const auto nfinite = pick<std::size_t>(rng, 0, 3);
    for (std::size_t i = 0; i < nfinite; ++i) {
      const auto ok = profiles_with_period_power(rng, G.p, 6);
      G.finite.push_back(ok[rng() % ok.size()]);
    }
    const auto nseq = pick<std::size_t>(rng, 0, 2);
    for (std::size_t i = 0; i < nseq; ++i) {
      SequenceSpec s;
      s.t_exp = {pick<std::uint64_t>(rng, 0, 3), pick<std::uint64_t>(rng, 0, 2)};
      if (rng() % 3) {
        do
          s.d.c = pick<std::uint64_t>(rng, 1, 6);
        while (s.d.c % G.p == 0);
        s.d.g = pick<std::uint64_t>(rng, 0, 2);
        s.d.e = rng() % 2 ? 0 : pick<std::uint64_t>(rng, 0, s.t_exp.b);
      }
      s.n = {pick<std::uint64_t>(rng, 0, 3), pick<std::uint64_t>(rng, 0, 2), pick<std::uint64_t>(rng, 1, 2),
             s.d.c ? pick<std::uint64_t>(rng, 1, 2) : 0};
      G.sequences.push_back(s);
    }
    try {
      validate_descriptor(G);
      return G;
    } catch (const DescriptorError&) {
    }
  }
}

SuiteReport verify_classifier(const VerifyConfig& cfg)
{
  Suite s("classifier", cfg);

  // Fixtures.
  {
    FamilyDescriptor finite;
    finite.p = 2;
    finite.finite = {{2, 0, 1}, {4, 0, 2}};
    FamilyDescriptor countable;
    countable.p = 2;
    countable.sequences.push_back({{1, 1}, {1, 0, 0}, {1, 0, 1, 0}});
    FamilyDescriptor none;
    none.p = 2;
    none.sequences.push_back({{1, 1}, {1, 0, 1}, {0, 0, 1, 1}});
    const std::pair<const FamilyDescriptor*, BasisVerdict> fixtures[] = {
        {&finite, BasisVerdict::FiniteBasis},
        {&countable, BasisVerdict::CountableBasis},
        {&none, BasisVerdict::NoBasis}};
    for (const auto& [G, want] : fixtures) {
      const auto c = classify(*G, cfg.caps);
      s.check(c.verdict == want, [&, want = want] {
        return "fixture " + descriptor_to_json(*G) + ": got " + to_string(c.verdict) + ", want " + to_string(want);
      });
      s.stat("fixtures");
    }
  }

  for (std::size_t i = 0; i < cfg.descriptors; ++i) {
    const auto G = random_descriptor(cfg.seed * 1000003 + i);
    const auto c = classify(G, cfg.caps);
    const auto nc = numeric_conditions(G);
    const auto label = [&] { return descriptor_to_json(G); };
    const int holding = nc.finite_beyond_i + nc.all_ratio_classes_finite + nc.some_ratio_class_infinite;
    s.check(holding == 1, [&] { return label() + ": " + std::to_string(holding) + " conditions hold"; });
    s.check(classification_consistent(c), [&] { return label() + ": witness does not match verdict"; });
    s.check(c.verdict == expected_verdict(nc), [&] {
      return label() + ": classify " + to_string(c.verdict) + ", conditions give " + to_string(expected_verdict(nc));
    });
    if (c.nobasis_exponent) {
      // The reported class must be one of the infinite ones.
      std::size_t members = 0;
      for (const auto& seq : G.sequences)
        for (std::uint64_t k = 0; k <= numeric_prefix; ++k)
          if (const auto b = member_at(seq, G.p, k);
              b.period > 1 && numeric_ratio_exponent(b, G.p) == *c.nobasis_exponent)
            ++members;
      s.check(members > G.finite.size() + G.sequences.size(),
              [&] { return label() + ": exponent " + std::to_string(*c.nobasis_exponent) + " is not infinite"; });
    }
    if (d0_route_applies(G)) {
      s.stat("d0 route");
      s.check(classify_d0_infinite(G) == BasisVerdict::NoBasis && c.verdict == BasisVerdict::NoBasis,
              [&] { return label() + ": d=0 route disagrees"; });
    }
    s.stat(to_string(c.verdict));
  }
  return s.finish();
}

SuiteReport verify_basis_extraction(const VerifyConfig& cfg)
{
  Suite s("basis-extraction", cfg);
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.families; ++i) {
    const std::uint64_t p = rng() % 2 ? 2 : 3;
    std::vector<PeriodicProfile> G;
    const auto size = pick<std::size_t>(rng, 2, 4);
    while (G.size() < size) {
      const auto ok = profiles_with_period_power(rng, p, cfg.family_max_arity);
      const auto f = ok[rng() % ok.size()];
      if (std::find(G.begin(), G.end(), f) == G.end())
        G.push_back(f);
    }
    std::string label = "p=" + std::to_string(p) + " G=";
    for (const auto& f : G)
      label += prof(f);

    const auto b = extract_finite_basis(G, p, cfg.caps);
    std::vector<TableFn> basis_tables;
    for (const auto& f : b.basis)
      basis_tables.push_back(to_table(make_periodic(f)));
    const auto gens = name_generators(basis_tables);
    for (const auto& rem : b.removed) {
      const auto r = member_oracle(to_table(make_periodic(rem.profile)), gens, cfg.caps);
      if (r.verdict == OracleVerdict::Incomplete) {
        s.incomplete(label + ": re-deriving " + prof(rem.profile) + ": " + r.reason);
        continue;
      }
      s.check(r.verdict == OracleVerdict::Yes,
              [&] { return label + ": removed " + prof(rem.profile) + " (" + to_string(rem.how) + ") not re-derived"; });
      s.stat("removed");
    }
    for (std::size_t k = 0; k < b.basis.size(); ++k) {
      if (std::find(b.undecided.begin(), b.undecided.end(), b.basis[k]) != b.undecided.end())
        continue;
      std::vector<TableFn> rest;
      for (std::size_t j = 0; j < b.basis.size(); ++j)
        if (j != k)
          rest.push_back(basis_tables[j]);
      const auto r = member_oracle(basis_tables[k], name_generators(rest), cfg.caps);
      if (r.verdict == OracleVerdict::Incomplete) {
        s.incomplete(label + ": irredundancy of " + prof(b.basis[k]) + ": " + r.reason);
        continue;
      }
      s.check(r.verdict == OracleVerdict::No, [&] { return label + ": kept " + prof(b.basis[k]) + " is redundant"; });
      s.stat("kept");
    }
    s.stat("undecided", b.undecided.size());
    s.stat("families");
  }
  return s.finish();
}

const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names{"zero-propagation", "n-subset",   "lemma-order", "prop2",
                                              "nf-intersec",      "numofvar",   "classifier",  "basis-extraction"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg)
{
  if (name == "zero-propagation")
    return verify_zero_propagation(cfg);
  if (name == "n-subset")
    return verify_n_subset(cfg);
  if (name == "lemma-order")
    return verify_lemma_order(cfg);
  if (name == "prop2")
    return verify_prop2(cfg);
  if (name == "nf-intersec")
    return verify_nf_intersec(cfg);
  if (name == "numofvar")
    return verify_numofvar(cfg);
  if (name == "classifier")
    return verify_classifier(cfg);
  if (name == "basis-extraction")
    return verify_basis_extraction(cfg);
  throw DomainError("unknown suite '" + name + "'");
}

} // namespace symclone
