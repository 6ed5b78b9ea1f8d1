#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symclone/error.hpp"
#include "symclone/formula.hpp"
#include "symclone/literal.hpp"

using namespace symclone;

namespace {

Signature sig_with(std::initializer_list<std::pair<const char*, PeriodicProfile>> fns)
{
  Signature sig;
  for (const auto& [name, p] : fns)
    sig.add(name, to_table(make_periodic(p)));
  return sig;
}

Formula x(std::size_t j) { return Formula::variable(j); }

} // namespace

TEST_CASE("s-expression syntax")
{
  const auto f = parse_formula("(g x1 (g x1 x1 x2 x2))");
  CHECK(to_sexpr(f) == "(g x1 (g x1 x1 x2 x2))");
  CHECK(f.depth() == 2);
  CHECK(f.node_count() == 7);
  CHECK(variables_of(f) == std::vector<std::size_t>{1, 2});
  CHECK(parse_formula("  ( i x1   x2 ) ") == Formula::apply_i({x(1), x(2)}));

  CHECK_THROWS_AS(parse_formula("(g x1"), ParseError);
  CHECK_THROWS_AS(parse_formula("(g)"), ParseError);
  CHECK_THROWS_AS(parse_formula("(x1 x2)"), ParseError);
  CHECK_THROWS_AS(parse_formula("(g y)"), ParseError);
  CHECK_THROWS_AS(parse_formula("(g x0)"), ParseError);
  CHECK_THROWS_AS(parse_formula("(g x1) x2"), ParseError);
}

TEST_CASE("signature files")
{
  const auto sig = parse_signature("# two functions\n"
                                   "g := periodic n=4 d=0 t=2\n"
                                   "\n"
                                   "h := table n=2 bits=9   # same as periodic n=2 d=0 t=2\n"
                                   "j := sym n=3 layers=0,1,2,3\n");
  REQUIRE(sig.find("g"));
  CHECK(*sig.find("g") == to_table(make_periodic(4, 0, 2)));
  CHECK(*sig.find("h") == to_table(make_periodic(2, 0, 2)));
  CHECK(sig.is_i_head("j"));
  CHECK(sig.is_i_head("i"));
  CHECK_FALSE(sig.is_i_head("g"));

  CHECK_THROWS_AS(parse_signature("g periodic n=4 d=0 t=2"), ParseError);
  CHECK_THROWS_AS(parse_signature("g := periodic n=4 d=0 t=2\ng := periodic n=2 d=0 t=1"), ParseError);
  CHECK_THROWS_AS(parse_signature("i := periodic n=2 d=0 t=1"), ParseError);
}

TEST_CASE("realize")
{
  const auto sig = sig_with({{"g", {4, 0, 2}}});
  CHECK(realize(parse_formula("(i x1 x2)"), sig, 2).eval(Tuple{1, 2}) == 1);

  SUBCASE("doubling every variable lands on even layers")
  {
    const auto phi = parse_formula("(g x1 x1 x2 x2)");
    const auto table = realize(phi, sig, 2);
    // By hand: each 2 among (x1, x2) contributes two 2s to g's tuple.
    for (std::uint8_t a : {1, 2})
      for (std::uint8_t b : {1, 2}) {
        const int twos = 2 * (a == 2) + 2 * (b == 2);
        CHECK(table.eval(Tuple{a, b}) == (twos % 2 == 0 ? 1 : 0));
      }
    CHECK(is_i(table));
  }

  SUBCASE("any zero component gives zero")
  {
    const auto phi = parse_formula("(g x1 x2 (g x1 x1 x2 x2) (i x1 x2))");
    for (std::uint8_t a : {0, 1, 2})
      for (std::uint8_t b : {0, 1, 2})
        if (a == 0 || b == 0)
          CHECK(evaluate(phi, sig, Tuple{a, b}) == 0);
  }

  SUBCASE("absent variables are dummy")
  {
    const auto t = realize(parse_formula("(i x1 x2)"), sig, 3);
    CHECK(t.is_all_ones());
  }

  SUBCASE("errors")
  {
    CHECK_THROWS_AS(realize(parse_formula("(h x1 x2)"), sig, 2), DomainError);
    CHECK_THROWS_AS(realize(parse_formula("(g x1 x2)"), sig, 2), DomainError);
    CHECK_THROWS_AS(realize(parse_formula("(g x1 x1 x2 x3)"), sig, 2), DomainError);
    CHECK_THROWS_AS(check_formula(x(1), sig, 1), DomainError);
  }
}

TEST_CASE("occurrences and replacement")
{
  const auto phi = parse_formula("(g x1 (h x2 x1) (h x2 x1))");
  const auto occ = occurrences(phi);
  REQUIRE(occ.size() == 3);
  CHECK(occ[0].empty());
  CHECK(occ[1] == Occurrence{1});
  CHECK(occ[2] == Occurrence{2});
  CHECK(to_sexpr(subformula_at(phi, occ[2])) == "(h x2 x1)");
  CHECK(to_sexpr(replace_at(phi, occ[1], x(3))) == "(g x1 x3 (h x2 x1))");
  CHECK_THROWS_AS(subformula_at(phi, Occurrence{0, 0}), DomainError);
}

TEST_CASE("zero propagation and N-subset")
{
  const auto sig = sig_with({{"g", {2, 0, 2}}});
  const auto phi = parse_formula("(g x1 (i x1 x2))");
  CHECK(zero_propagation_check(phi, {1}, sig, Tuple{1, 0}));
  CHECK(evaluate(subformula_at(phi, {1}), sig, Tuple{1, 0}) == 0);
  CHECK(evaluate(phi, sig, Tuple{1, 0}) == 0);
  // Subformula value 1: vacuous.
  CHECK(zero_propagation_check(phi, {1}, sig, Tuple{2, 1}));
  for (const auto& occ : occurrences(phi))
    CHECK(n_subset_check(phi, occ, sig, 2));
}

TEST_CASE("theta")
{
  SUBCASE("i heads never count")
  {
    Signature sig;
    CHECK(theta(parse_formula("(i x1 x2 x3)"), sig, 3).functions.empty());
  }
  SUBCASE("a non-i head that matters")
  {
    const auto sig = sig_with({{"g", {2, 0, 2}}});
    const auto th = theta(parse_formula("(g x1 x2)"), sig, 2);
    REQUIRE(th.functions.size() == 1);
    CHECK(th.functions[0] == *sig.find("g"));
    REQUIRE(th.occurrences.size() == 1);
    CHECK(th.occurrences[0].head == "g");
  }
  SUBCASE("replacement that realizes the same function")
  {
    // g(x1,x1,x2,x2) realizes i_2, and so does i_4(x1,x1,x2,x2).
    const auto sig = sig_with({{"g", {4, 0, 2}}});
    CHECK(theta(parse_formula("(g x1 x1 x2 x2)"), sig, 2).functions.empty());
  }
  SUBCASE("two occurrences of one head count once")
  {
    const auto sig = sig_with({{"g", {2, 0, 2}}, {"h", {3, 1, 2}}});
    const auto th = theta(parse_formula("(h (g x1 x2) (g x2 x3) x3)"), sig, 3);
    std::size_t g_occ = 0;
    for (const auto& o : th.occurrences)
      g_occ += o.head == "g";
    CHECK(std::count(th.functions.begin(), th.functions.end(), *sig.find("g")) <= 1);
    CHECK(g_occ >= 1);
  }
}

TEST_CASE("is_essential")
{
  const auto sig = sig_with({{"g", {2, 0, 2}}, {"h", {4, 0, 2}}});
  CHECK_FALSE(is_essential(parse_formula("(i x1 x2)"), {}, sig, 2));
  CHECK(is_essential(parse_formula("(g x1 x2)"), {}, sig, 2));
  CHECK_FALSE(is_essential(parse_formula("(h x1 x1 x2 x2)"), {}, sig, 2));
  CHECK_THROWS_AS(is_essential(parse_formula("(g x1 x2)"), {0}, sig, 2), DomainError);
}

TEST_CASE("variable_counts")
{
  CHECK(variable_counts(parse_formula("(g x1 x2 (h x1 x2) (h x1 x2))"), {}, 2) == std::vector<std::size_t>{3, 3});
  CHECK(variable_counts(parse_formula("(g x1 x1 x2 x2)"), {}, 2) == std::vector<std::size_t>{2, 2});
  CHECK(variable_counts(parse_formula("(g x1 x2)"), {}, 2) == std::vector<std::size_t>{1, 1});
  CHECK(variable_counts(parse_formula("(g x1 (h x1 x3))"), {1}, 3) == std::vector<std::size_t>{1, 0, 1});
}

TEST_CASE("rewrite_i")
{
  Signature sig;
  CHECK(to_sexpr(rewrite_i(parse_formula("(i (i x1 x2) x3)"), sig)) == "(i x1 x2 x3)");
  CHECK(to_sexpr(rewrite_i(parse_formula("(i x1 x2 x2)"), sig)) == "(i x1 x2)");
  CHECK(to_sexpr(rewrite_i(parse_formula("(i x1 x2)"), sig)) == "(i x1 x2)");
  CHECK(to_sexpr(rewrite_i(parse_formula("(i x3 (i x1 (i x2 x3)) x1)"), sig)) == "(i x3 x1 x2)");

  SUBCASE("signature names bound to i-functions are i-nodes")
  {
    Signature s2;
    s2.add("j", to_table(SymmetricFn::identity(2)));
    s2.add("g", to_table(make_periodic(2, 0, 2)));
    CHECK(to_sexpr(rewrite_i(parse_formula("(g (j x1 (j x1 x2)) x2)"), s2)) == "(g (i x1 x2) x2)");
  }
}

TEST_CASE("rewrite_i preserves the realized function")
{
  Signature sig;
  sig.add("g", to_table(make_periodic(3, 1, 2)));
  sig.add("h", to_table(make_periodic(2, 0, 2)));
  std::mt19937_64 rng(3);
  const std::size_t nvars = 3;
  std::function<Formula(int)> gen = [&](int depth) -> Formula {
    if (depth == 0 || rng() % 4 == 0)
      return x(1 + rng() % nvars);
    const auto pick = rng() % 3;
    const std::size_t arity = pick == 0 ? 1 + rng() % 4 : (pick == 1 ? 3 : 2);
    std::vector<Formula> args;
    for (std::size_t k = 0; k < arity; ++k)
      args.push_back(gen(depth - 1));
    if (pick == 0)
      return Formula::apply_i(std::move(args));
    return Formula::apply(pick == 1 ? "g" : "h", std::move(args));
  };
  for (int trial = 0; trial < 300; ++trial) {
    auto phi = gen(4);
    if (phi.is_variable())
      phi = Formula::apply_i({phi, x(2)});
    const auto rewritten = rewrite_i(phi, sig);
    CHECK(realize(rewritten, sig, nvars) == realize(phi, sig, nvars));
    CHECK(rewrite_i(rewritten, sig) == rewritten);
  }
}

TEST_CASE("caps")
{
  FormulaCaps caps{2, 5};
  CHECK_NOTHROW(check_caps(parse_formula("(g x1 (g x1 x2))"), caps));
  CHECK_THROWS_AS(check_caps(parse_formula("(g x1 (g x1 (g x1 x2)))"), caps), DomainError);
  CHECK_THROWS_AS(check_caps(parse_formula("(g x1 x2 x3 x4 x5)"), caps), DomainError);
}
