#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "symclone/basis.hpp"
#include "symclone/error.hpp"

using namespace symclone;

namespace {

SequenceSpec seq(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t g, std::uint64_t e,
                 SequenceSpec::Arity n)
{
  SequenceSpec s;
  s.t_exp = {a, b};
  s.d = {c, g, e};
  s.n = n;
  return s;
}

bool contains(const std::vector<PeriodicProfile>& v, const PeriodicProfile& p)
{
  return std::find(v.begin(), v.end(), p) != v.end();
}

} // namespace

TEST_CASE("classify: finite family")
{
  FamilyDescriptor G;
  G.p = 2;
  G.finite = {{2, 0, 1}, {4, 0, 2}};
  const auto c = classify(G);
  CHECK(c.verdict == BasisVerdict::FiniteBasis);
  REQUIRE(c.finite_basis);
  // g(x1,x1,x2,x2) = i_2, so the i-function is redundant.
  CHECK(c.finite_basis->basis == std::vector<PeriodicProfile>{{4, 0, 2}});
  CHECK(c.finite_basis->undecided.empty());
  CHECK_FALSE(c.nobasis_exponent);
}

TEST_CASE("classify: increasing ratio gives a countable basis")
{
  FamilyDescriptor G;
  G.p = 2;
  G.sequences = {seq(1, 1, 1, 0, 0, {1, 0, 1, 0})};
  CHECK(member_at(G.sequences[0], 2, 0) == BigProfile{3, 1, 2});
  CHECK(member_at(G.sequences[0], 2, 3) == BigProfile{17, 1, 16});
  const auto c = classify(G);
  CHECK(c.verdict == BasisVerdict::CountableBasis);
  REQUIRE(c.sequences.size() == 1);
  CHECK(c.sequences[0].rho0 == 1);
  CHECK(c.sequences[0].slope == 1);
  CHECK_FALSE(c.nobasis_exponent);
  // Distinct ratios: no member of the prefix absorbs another.
  CHECK(c.maximal_prefix.size() == 5);
}

TEST_CASE("classify: constant ratio gives no basis")
{
  FamilyDescriptor G;
  G.p = 2;
  G.sequences = {seq(1, 1, 1, 0, 1, {0, 0, 1, 1})};
  CHECK(member_at(G.sequences[0], 2, 2) == BigProfile{12, 4, 8});
  const auto c = classify(G);
  CHECK(c.verdict == BasisVerdict::NoBasis);
  CHECK(c.nobasis_exponent == 1u);
  CHECK(c.sequences[0].slope == 0);
}

TEST_CASE("classify_d0_infinite")
{
  FamilyDescriptor G;
  G.p = 3;
  G.sequences = {seq(0, 1, 0, 0, 0, {0, 0, 1, 0})};
  CHECK(classify_d0_infinite(G) == BasisVerdict::NoBasis);
  const auto c = classify(G);
  CHECK(c.verdict == BasisVerdict::NoBasis);
  CHECK(c.nobasis_exponent == 0u);

  FamilyDescriptor H;
  H.p = 2;
  H.sequences = {seq(1, 1, 0, 0, 0, {0, 0, 2, 0})};
  CHECK(classify_d0_infinite(H) == BasisVerdict::NoBasis);
  CHECK(classify(H).verdict == BasisVerdict::NoBasis);

  FamilyDescriptor finite;
  finite.p = 2;
  finite.finite = {{2, 0, 2}, {4, 0, 4}};
  CHECK_THROWS_AS(classify_d0_infinite(finite), DomainError);
  CHECK(classify(finite).verdict == BasisVerdict::FiniteBasis);

  FamilyDescriptor nonzero;
  nonzero.p = 2;
  nonzero.sequences = {seq(1, 1, 1, 0, 0, {1, 0, 1, 0})};
  CHECK_THROWS_AS(classify_d0_infinite(nonzero), DomainError);
}

TEST_CASE("ratio exponent in closed form matches the members")
{
  const std::vector<std::pair<std::uint64_t, SequenceSpec>> cases{
      {2, seq(1, 1, 1, 0, 0, {1, 0, 1, 0})}, {2, seq(1, 1, 1, 0, 1, {0, 0, 1, 1})},
      {3, seq(0, 1, 0, 0, 0, {0, 0, 1, 0})}, {3, seq(2, 2, 2, 1, 1, {0, 1, 1, 1})},
      {5, seq(3, 1, 7, 0, 0, {4, 2, 1, 1})}, {2, seq(2, 0, 1, 1, 0, {6, 1, 0, 0})}};
  for (const auto& [p, s] : cases) {
    FamilyDescriptor G;
    G.p = p;
    G.sequences = {s};
    REQUIRE_NOTHROW(validate_descriptor(G));
    for (std::uint64_t k = 0; k <= 20; ++k) {
      const auto b = member_at(s, p, k);
      const BigInt g = b.offset == 0 ? b.period : BigInt(boost::multiprecision::gcd(b.offset, b.period));
      BigInt expected = 1;
      for (std::uint64_t r = 0; r < ratio_exponent(s, k); ++r)
        expected *= p;
      CHECK(b.period / g == expected);
    }
  }
}

TEST_CASE("descriptor validation")
{
  auto invalid = [](FamilyDescriptor G) { CHECK_THROWS_AS(validate_descriptor(G), DescriptorError); };
  FamilyDescriptor base;
  base.p = 2;

  auto G = base;
  G.p = 4;
  invalid(G);

  G = base;
  G.finite = {{6, 0, 3}};
  invalid(G); // period not a power of 2

  G = base;
  G.finite = {{4, 1, 8}};
  invalid(G); // single layer written with a non-canonical period

  G = base;
  G.finite = {{4, 0, 2}, {4, 0, 2}};
  invalid(G); // congruent

  G = base;
  G.sequences = {seq(1, 1, 2, 0, 0, {1, 0, 1, 0})};
  invalid(G); // c divisible by p

  G = base;
  G.sequences = {seq(1, 1, 1, 0, 2, {1, 0, 1, 0})};
  invalid(G); // e > b

  G = base;
  G.sequences = {seq(1, 0, 1, 0, 0, {3, 0, 0, 0})};
  invalid(G); // constant arity

  G = base;
  G.sequences = {seq(1, 1, 1, 0, 1, {1, 0, 1, 0})};
  invalid(G); // k=1: (5,2,4) is a single layer

  G = base;
  G.finite = {{3, 1, 2}};
  G.sequences = {seq(1, 1, 1, 0, 0, {1, 0, 1, 0})};
  invalid(G); // (3,1,2) is also member k=0

  G = base;
  G.sequences = {seq(65, 0, 0, 0, 0, {0, 1, 0, 0})};
  invalid(G);
}

TEST_CASE("descriptor JSON")
{
  const auto G = parse_descriptor(R"({"p": 2, "finite": [{"n":4,"d":0,"t":2}],
    "sequences": [{"t_exp":{"a":1,"b":1}, "d":{"c":1,"g":0,"e":1}, "n":{"w":1,"z":1}},
                  {"t_exp":{"a":0,"b":0}, "d":0, "n":{"u":2,"v":1}}]})");
  CHECK(G.p == 2);
  CHECK(G.finite == std::vector<PeriodicProfile>{{4, 0, 2}});
  REQUIRE(G.sequences.size() == 2);
  CHECK(G.sequences[0] == seq(1, 1, 1, 0, 1, {0, 0, 1, 1}));
  CHECK(G.sequences[1] == seq(0, 0, 0, 0, 0, {2, 1, 0, 0}));

  const auto again = parse_descriptor(descriptor_to_json(G));
  CHECK(again.p == G.p);
  CHECK(again.finite == G.finite);
  CHECK(again.sequences == G.sequences);

  CHECK_THROWS_AS(parse_descriptor("{"), ParseError);
  CHECK_THROWS_AS(parse_descriptor(R"({"finite": []})"), ParseError);
  CHECK_THROWS_AS(parse_descriptor(R"({"p": -2})"), ParseError);
  CHECK_THROWS_AS(parse_descriptor(R"({"p": 2, "sequences": [{"n": {"u": 1}}]})"), ParseError);
}

TEST_CASE("extract_finite_basis")
{
  SUBCASE("(2,0,2) is derivable from (4,0,2)")
  {
    const std::vector<PeriodicProfile> G{{2, 0, 2}, {4, 0, 2}};
    const auto b = extract_finite_basis(G, 2);
    CHECK(b.basis == std::vector<PeriodicProfile>{{4, 0, 2}});
    REQUIRE(b.removed.size() == 1);
    CHECK(b.removed[0].profile == PeriodicProfile{2, 0, 2});
    CHECK(b.removed[0].how == Derivation::Criterion);
  }
  SUBCASE("i-functions")
  {
    const std::vector<PeriodicProfile> G{{2, 0, 1}, {5, 0, 1}};
    const auto b = extract_finite_basis(G, 2);
    CHECK(b.basis == std::vector<PeriodicProfile>{{5, 0, 1}});
    REQUIRE(b.removed.size() == 1);
    CHECK(b.removed[0].how == Derivation::Identities);
  }
  SUBCASE("singleton")
  {
    const std::vector<PeriodicProfile> G{{3, 1, 2}};
    CHECK(extract_finite_basis(G, 2).basis == G);
  }
  SUBCASE("independent generators stay")
  {
    const std::vector<PeriodicProfile> G{{3, 1, 2}, {3, 0, 4}};
    const auto b = extract_finite_basis(G, 2);
    CHECK(b.basis.size() == 2);
    CHECK(contains(b.basis, {3, 1, 2}));
  }
  SUBCASE("beyond the caps a removal is reported as undecided")
  {
    // The criteria cannot derive the single-layer (8,0,16) and its arity is above the oracle cap.
    const std::vector<PeriodicProfile> G{{8, 0, 9}, {3, 1, 2}};
    CHECK_THROWS_AS(extract_finite_basis(G, 2), DomainError);
    const std::vector<PeriodicProfile> H{{2, 1, 2}, {7, 0, 8}};
    const auto b = extract_finite_basis(H, 2);
    CHECK(contains(b.undecided, {7, 0, 8}));
    CHECK(contains(b.basis, {7, 0, 8}));
  }
  CHECK_THROWS_AS(extract_finite_basis(std::vector<PeriodicProfile>{{3, 0, 3}}, 2), DomainError);
}

TEST_CASE("is_in_ps_bracket")
{
  const std::vector<std::uint64_t> p23{2, 3}, p2{2}, p5{5};
  CHECK(is_in_ps_bracket({12, 0, 12}, p23));
  CHECK_FALSE(is_in_ps_bracket({12, 0, 12}, p2));
  CHECK(is_in_ps_bracket({4, 0, 1}, p5));
  CHECK(is_in_ps_bracket({4, 0, 1}, {}));
  CHECK_THROWS_AS(is_in_ps_bracket({4, 0, 2}, std::vector<std::uint64_t>{2, 2}), DomainError);
}
