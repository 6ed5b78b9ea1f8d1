#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "symclone/error.hpp"
#include "symclone/literal.hpp"
#include "symclone/symfun.hpp"

using namespace symclone;

namespace {

std::vector<std::size_t> layers_of(const SymmetricFn& f) { return f.set_layers(); }

// Intersection computed on tables, independent of the layer arithmetic.
SymmetricFn intersect_by_tables(const std::vector<SymmetricFn>& fs)
{
  auto acc = to_table(fs.front());
  for (const auto& f : fs) {
    auto t = to_table(f);
    for (std::size_t i = 0; i < acc.size(); ++i)
      acc.set(i, acc.bit(i) && t.bit(i));
  }
  return *from_table(acc);
}

} // namespace

TEST_CASE("make_periodic")
{
  CHECK(layers_of(make_periodic(5, 1, 2)) == std::vector<std::size_t>{1, 3, 5});
  CHECK(make_periodic(3, 0, 1) == SymmetricFn::identity(3));
  CHECK(layers_of(make_periodic(4, 3, 4)) == std::vector<std::size_t>{3});

  CHECK_THROWS_AS(make_periodic(4, 2, 2), DomainError);
  CHECK_THROWS_AS(make_periodic(2, 3, 4), DomainError);
  CHECK_THROWS_AS(make_periodic(4, 0, 0), DomainError);
}

TEST_CASE("detect_period")
{
  CHECK(detect_period(SymmetricFn::identity(4)) == PeriodicProfile{4, 0, 1});
  const std::size_t even[] = {0, 2, 4};
  CHECK(detect_period(SymmetricFn::from_layers(4, even)) == PeriodicProfile{4, 0, 2});
  const std::size_t upper[] = {1, 2, 3, 4};
  CHECK_FALSE(detect_period(SymmetricFn::from_layers(4, upper)).has_value());
  CHECK_FALSE(detect_period(SymmetricFn::zero(3)).has_value());

  SUBCASE("offset not below the step is not a residue class")
  {
    const std::size_t ls[] = {3, 5};
    CHECK_FALSE(detect_period(SymmetricFn::from_layers(5, ls)).has_value());
  }
  SUBCASE("a single layer gets the least period")
  {
    const std::size_t ls[] = {0};
    CHECK(detect_period(SymmetricFn::from_layers(2, ls)) == PeriodicProfile{2, 0, 3});
    const std::size_t mid[] = {2};
    CHECK(detect_period(SymmetricFn::from_layers(5, mid)) == PeriodicProfile{5, 2, 4});
  }
}

TEST_CASE("detect_period recovers every make_periodic triple")
{
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t t = 1; t <= n + 2; ++t)
      for (std::size_t d = 0; d < t && d <= n; ++d) {
        const auto f = make_periodic(n, d, t);
        const auto p = detect_period(f);
        REQUIRE(p.has_value());
        CHECK(p->arity == n);
        CHECK(p->offset == d);
        CHECK(p->period <= t);
        CHECK(make_periodic(*p) == f);
        CHECK(*p == canonical_profile(n, d, t));
        CHECK(is_canonical(*p));
      }
}

TEST_CASE("eval_symmetric")
{
  const auto f = make_periodic(3, 1, 2);
  CHECK(eval_symmetric(f, Tuple{2, 1, 1}) == 1);
  CHECK(eval_symmetric(f, Tuple{0, 2, 2}) == 0);
  CHECK(eval_symmetric(f, Tuple{2, 2, 1}) == 0);
  CHECK_THROWS_AS(eval_symmetric(f, Tuple{1, 1}), DomainError);
}

TEST_CASE("eval_symmetric is invariant under permutations")
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const std::size_t t = 1 + rng() % (n + 1);
    const std::size_t d = rng() % std::min(t, n + 1);
    const auto f = make_periodic(n, d, t);
    const auto table = to_table(f);
    Tuple a(n);
    for (auto& v : a)
      v = static_cast<std::uint8_t>(rng() % 3);
    const int expect = eval_symmetric(f, a);
    CHECK(table.eval(a) == expect);
    std::sort(a.begin(), a.end());
    do {
      CHECK(eval_symmetric(f, a) == expect);
    } while (std::next_permutation(a.begin(), a.end()));
  }
}

TEST_CASE("nset_intersection")
{
  SUBCASE("periods 2 and 3 at n=6")
  {
    std::vector fs{make_periodic(6, 0, 2), make_periodic(6, 0, 3)};
    auto h = nset_intersection(fs);
    REQUIRE(h.has_value());
    CHECK(h->fn == intersect_by_tables(fs));
    CHECK(layers_of(h->fn) == std::vector<std::size_t>{0, 6});
    CHECK(h->profile == PeriodicProfile{6, 0, 6});
  }
  SUBCASE("idempotent")
  {
    const auto f = make_periodic(7, 0, 3);
    std::vector fs{f, f};
    CHECK(nset_intersection(fs)->fn == f);
  }
  SUBCASE("lcm beyond n leaves a single layer")
  {
    std::vector fs{make_periodic(2, 0, 2), make_periodic(2, 0, 3)};
    auto h = nset_intersection(fs);
    REQUIRE(h.has_value());
    CHECK(h->fn == intersect_by_tables(fs));
    CHECK(layers_of(h->fn) == std::vector<std::size_t>{0});
    CHECK(h->profile == PeriodicProfile{2, 0, 3});
  }
  SUBCASE("errors")
  {
    std::vector mismatch{make_periodic(4, 0, 2), make_periodic(5, 0, 2)};
    CHECK_THROWS_AS(nset_intersection(mismatch), DomainError);
    std::vector offset{make_periodic(4, 1, 2), make_periodic(4, 0, 2)};
    CHECK_THROWS_AS(nset_intersection(offset), DomainError);
    const std::size_t ls[] = {1, 2};
    std::vector nonperiodic{SymmetricFn::from_layers(4, ls)};
    CHECK_THROWS_AS(nset_intersection(nonperiodic), DomainError);
  }
}

TEST_CASE("to_table / from_table")
{
  const auto i2 = to_table(SymmetricFn::identity(2));
  CHECK(i2.is_all_ones());
  CHECK(is_i(i2));

  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t t = 1; t <= n + 1; ++t)
      for (std::size_t d = 0; d < t && d <= n; ++d) {
        const auto f = make_periodic(n, d, t);
        CHECK(from_table(to_table(f)) == f);
      }

  auto g = TableFn(2);
  g.set(tuple_index(Tuple{1, 2}));
  CHECK_FALSE(from_table(g).has_value());
}

TEST_CASE("is_i")
{
  CHECK(is_i(SymmetricFn::identity(3)));
  CHECK_FALSE(is_i(make_periodic(3, 0, 2)));
  CHECK_FALSE(is_i(SymmetricFn::zero(3)));
  CHECK_FALSE(is_i(TableFn(3)));
}

TEST_CASE("TableFn evaluation and indexing")
{
  CHECK(tuple_index(Tuple{2, 1, 1}) == 4);
  CHECK(index_tuple(4, 3) == Tuple{2, 1, 1});
  auto f = TableFn::from_bits(2, 0b1001);
  CHECK(f.eval(Tuple{1, 1}) == 1);
  CHECK(f.eval(Tuple{2, 2}) == 1);
  CHECK(f.eval(Tuple{1, 2}) == 0);
  CHECK(f.eval(Tuple{0, 1}) == 0);
  CHECK_THROWS_AS(f.eval(Tuple{1}), DomainError);
  CHECK_THROWS_AS(TableFn(0), DomainError);
}

TEST_CASE("function literals")
{
  CHECK(std::get<SymmetricFn>(parse_literal("periodic n=5 d=1 t=2")) == make_periodic(5, 1, 2));
  CHECK(std::get<SymmetricFn>(parse_literal("sym n=4 layers=0,2,4")) == make_periodic(4, 0, 2));
  CHECK(std::get<SymmetricFn>(parse_literal("sym n=2 layers=")) == SymmetricFn::zero(2));

  // bit i <-> tuple index i; 0x9 = tuples (1,1) and (2,2).
  auto t = std::get<TableFn>(parse_literal("table n=2 bits=9"));
  CHECK(t == to_table(make_periodic(2, 0, 2)));
  CHECK(format_literal(t) == "table n=2 bits=9");
  CHECK(format_literal(to_table(SymmetricFn::identity(3))) == "table n=3 bits=ff");
  CHECK(format_literal(make_periodic(5, 1, 2)) == "sym n=5 layers=1,3,5");
  CHECK(format_literal(PeriodicProfile{4, 0, 2}) == "periodic n=4 d=0 t=2");

  CHECK_THROWS_AS(parse_literal("periodic n=5 d=1"), ParseError);
  CHECK_THROWS_AS(parse_literal("cube n=2"), ParseError);
  CHECK_THROWS_AS(parse_literal("table n=2 bits=1z"), ParseError);
  CHECK_THROWS_AS(parse_literal("table n=2 bits=1f"), DomainError);
  CHECK_THROWS_AS(parse_literal("periodic n=2 d=2 t=2"), DomainError);
}

TEST_CASE("literal round trip")
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    TableFn f(n);
    for (std::size_t i = 0; i < f.size(); ++i)
      f.set(i, rng() & 1);
    CHECK(std::get<TableFn>(parse_literal(format_literal(f))) == f);
    const auto s = from_table(to_table(make_periodic(n, 0, 1 + rng() % n)));
    CHECK(std::get<SymmetricFn>(parse_literal(format_literal(*s))) == *s);
  }
}
