#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "symclone/closure.hpp"
#include "symclone/error.hpp"
#include "symclone/formula.hpp"

using namespace symclone;

namespace {

/*
 * Naive reference: value vectors over all of {0,1,2}^n, starting from the projections
 * and applying every generator to every argument vector until nothing new appears.
 */
using ValueVec = std::vector<std::uint8_t>;

std::size_t pow3(std::size_t n)
{
  std::size_t r = 1;
  while (n--)
    r *= 3;
  return r;
}

std::uint8_t digit(std::size_t point, std::size_t nvars, std::size_t j)
{
  // j is 1-based, x1 the most significant digit
  for (std::size_t k = nvars; k > j; --k)
    point /= 3;
  return point % 3;
}

std::set<DerivedKey, decltype([](const DerivedKey& a, const DerivedKey& b) {
           return std::pair{a.support, a.table} < std::pair{b.support, b.table};
         })>
naive_closure(const std::vector<TableFn>& gens, std::size_t nvars)
{
  const auto npts = pow3(nvars);
  std::set<ValueVec> all;
  std::vector<ValueVec> list;
  for (std::size_t j = 1; j <= nvars; ++j) {
    ValueVec v(npts);
    for (std::size_t p = 0; p < npts; ++p)
      v[p] = digit(p, nvars, j);
    if (all.insert(v).second)
      list.push_back(v);
  }
  for (bool grew = true; grew;) {
    grew = false;
    const auto snapshot = list.size();
    for (const auto& g : gens) {
      const auto m = g.arity();
      std::vector<std::size_t> pick(m, 0);
      for (;;) {
        ValueVec v(npts);
        for (std::size_t p = 0; p < npts; ++p) {
          Tuple a(m);
          for (std::size_t k = 0; k < m; ++k)
            a[k] = list[pick[k]][p];
          v[p] = g.eval(a);
        }
        if (all.insert(v).second) {
          list.push_back(v);
          grew = true;
        }
        std::size_t pos = m;
        while (pos > 0 && ++pick[pos - 1] == snapshot)
          pick[--pos] = 0;
        if (pos == 0)
          break;
      }
    }
  }
  decltype(naive_closure(gens, nvars)) out;
  for (std::size_t idx = nvars; idx < list.size(); ++idx) {
    const auto& v = list[idx];
    std::uint64_t table = 0;
    std::uint32_t support = 0;
    for (std::size_t a = 0; a < (std::size_t{1} << nvars); ++a) {
      std::size_t p = 0;
      for (std::size_t j = 1; j <= nvars; ++j)
        p = p * 3 + 1 + ((a >> (nvars - j)) & 1u);
      if (!v[p])
        continue;
      table |= std::uint64_t{1} << a;
      for (std::size_t j = 1; j <= nvars; ++j) {
        std::size_t w = 1;
        for (std::size_t k = nvars; k > j; --k)
          w *= 3;
        if (!v[p - digit(p, nvars, j) * w])
          support |= std::uint32_t{1} << (j - 1);
      }
    }
    out.insert(table == 0 ? DerivedKey{0, 0} : DerivedKey{support, table});
  }
  return out;
}

std::vector<TableFn> tables(std::initializer_list<PeriodicProfile> ps)
{
  std::vector<TableFn> out;
  for (const auto& p : ps)
    out.push_back(to_table(make_periodic(p)));
  return out;
}

void check_against_naive(const std::vector<TableFn>& fns, std::size_t nvars)
{
  const auto gens = name_generators(fns);
  const auto st = close(gens, nvars);
  REQUIRE(st.at_fixpoint());
  const auto expected = naive_closure(fns, nvars);
  decltype(naive_closure(fns, nvars)) got;
  for (const auto& d : st.derived())
    got.insert(DerivedKey{d.support, d.table});
  CHECK(got.size() == st.derived().size());
  CHECK(got == expected);
}

void check_witnesses(const ClosureState& st)
{
  const auto sig = st.signature();
  for (const auto& d : st.derived()) {
    const auto t = realize(d.witness, sig, st.nvars());
    CHECK(t.low_word() == d.table);
    if (d.table != 0) {
      std::uint32_t occurring = 0;
      for (auto j : variables_of(d.witness))
        occurring |= std::uint32_t{1} << (j - 1);
      CHECK(occurring == d.support);
    }
  }
}

} // namespace

TEST_CASE("empty generator set")
{
  const auto st = close({}, 3);
  CHECK(st.derived().empty());
  CHECK(st.at_fixpoint());
  CHECK(member_oracle(to_table(SymmetricFn::identity(2)), {}).verdict == OracleVerdict::No);
}

TEST_CASE("i_2 alone gives one i-function per non-empty support")
{
  const std::vector<TableFn> fns{to_table(SymmetricFn::identity(2))};
  const auto st = close(name_generators(fns), 3);
  REQUIRE(st.at_fixpoint());
  CHECK(st.derived().size() == 7);
  for (const auto& d : st.derived())
    CHECK(d.table == 0xff);
  check_against_naive(fns, 3);
}

TEST_CASE("(4,0,2) derives (2,0,2) with a witness")
{
  const auto fns = tables({{4, 0, 2}});
  const auto gens = name_generators(fns);
  const auto f = to_table(make_periodic(2, 0, 2));
  const auto r = member_oracle(f, gens);
  REQUIRE(r.verdict == OracleVerdict::Yes);
  REQUIRE(r.witness);
  CHECK(realize(*r.witness, r.signature, 2) == f);
  CHECK(r.witness->depth() <= 2);
}

TEST_CASE("agreement with the naive closure")
{
  check_against_naive(tables({{2, 0, 2}}), 2);
  check_against_naive(tables({{3, 1, 2}}), 2);
  check_against_naive(tables({{3, 0, 3}}), 2);
  check_against_naive(tables({{2, 0, 2}, {3, 1, 2}}), 2);
  check_against_naive(tables({{4, 0, 2}}), 2);
  check_against_naive(tables({{3, 0, 2}}), 3);
  check_against_naive(tables({{2, 1, 2}}), 3);

  SUBCASE("random non-symmetric generators")
  {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t m = 1 + rng() % 3;
      const auto fn = TableFn::from_bits(m, rng() & ((std::uint64_t{1} << (1u << m)) - 1));
      check_against_naive({fn}, 2);
    }
  }
}

TEST_CASE("witnesses realize their tables")
{
  check_witnesses(close(name_generators(tables({{3, 1, 2}, {2, 0, 2}})), 3));
  check_witnesses(close(name_generators(tables({{4, 1, 3}})), 3));
}

TEST_CASE("closure properties")
{
  const auto a = tables({{3, 1, 2}});
  const auto ab = tables({{3, 1, 2}, {2, 0, 2}});
  const auto sa = close(name_generators(a), 3);
  const auto sab = close(name_generators(ab), 3);

  SUBCASE("monotone in the generators")
  {
    for (const auto& d : sa.derived())
      CHECK(sab.find(d.support, d.table));
  }
  SUBCASE("idempotent: closing a closed set adds nothing")
  {
    std::vector<TableFn> derived3;
    for (const auto& d : sa.derived())
      if (d.support == 0b111)
        derived3.push_back(sa.table_of(d));
    auto again = close(name_generators(derived3), 3);
    for (const auto& d : again.derived())
      CHECK(sa.find(d.support, d.table));
  }
  SUBCASE("every derived function is a function of R on its support")
  {
    for (const auto& d : sab.derived()) {
      const auto t = sab.table_of(d);
      for (std::uint8_t z = 1; z <= 3; ++z)
        if (!(d.support >> (z - 1) & 1u))
          for (std::size_t a = 0; a < 8; ++a)
            CHECK(t.bit(a) == t.bit(a ^ (std::size_t{1} << (3 - z))));
    }
  }
}

TEST_CASE("caps")
{
  const auto fns = tables({{3, 1, 2}});
  const auto gens = name_generators(fns);

  ClosureCaps small;
  small.max_nvars = 2;
  const auto st = close(gens, 3, small);
  CHECK(st.status() == ClosureStatus::Incomplete);
  CHECK_FALSE(st.incomplete_reason().empty());
  CHECK(member_oracle(to_table(make_periodic(3, 1, 2)), gens, small).verdict == OracleVerdict::Incomplete);

  ClosureCaps tiny;
  tiny.max_derived = 2;
  CHECK(close(gens, 3, tiny).status() == ClosureStatus::Incomplete);

  ClosureCaps narrow;
  narrow.max_arity = 2;
  CHECK(close(gens, 2, narrow).status() == ClosureStatus::Incomplete);

  CHECK_THROWS_AS(close(gens, 0), DomainError);
}

TEST_CASE("oracle verdicts")
{
  const auto g = name_generators(tables({{3, 0, 3}}));
  CHECK(member_oracle(to_table(make_periodic(2, 0, 2)), g).verdict == OracleVerdict::Yes);
  CHECK(member_oracle(to_table(make_periodic(3, 1, 2)), g).verdict == OracleVerdict::No);
  const auto h = name_generators(tables({{2, 0, 2}}));
  // h(h(x1,x2), h(x2,x3)) is 1 iff x1 = x2 = x3.
  CHECK(member_oracle(to_table(make_periodic(3, 0, 3)), h).verdict == OracleVerdict::Yes);
  // Only conjunctions of equalities and x_j = 1 arise from h; parity does not.
  CHECK(member_oracle(to_table(make_periodic(4, 0, 2)), h).verdict == OracleVerdict::No);
}
