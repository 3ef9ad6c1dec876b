#include <catch_amalgamated.hpp>

#include <numeric>

#include <monocover/monodromy.hpp>

using namespace monocover;

TEST_CASE("monodromy group orders")
{
  CHECK(monodromy_group(prism(3)).order() == 1296);
  CHECK(monodromy_group(antiprism(5)).order() == 30000);
  CHECK(monodromy_group(platonic("dodecahedron")).order() == 120);
  auto fs = prism(6);
  FlagSystem bad(Perm::identity(fs.flag_count()), fs.r(1), fs.r(2));
  CHECK_THROWS_AS(monodromy_group(bad), InvalidMap);
}

TEST_CASE("the transitive action divides the order")
{
  for (int n = 3; n <= 9; ++n) {
    for (auto const &fs : {prism(n), antiprism(n)}) {
      auto m = monodromy_group(fs);
      CHECK(m.order() % fs.flag_count() == 0);
      CHECK(m.group().is_transitive());
      for (int i = 0; i < 3; ++i)
        CHECK(m.r(i) == fs.r(i));
    }
  }
}

TEST_CASE("Schlafli types")
{
  CHECK(schlafli_type(prism(5)) == SchlafliType{20, 3});
  CHECK(schlafli_type(antiprism(4)) == SchlafliType{12, 4});
  CHECK(schlafli_type(platonic("cube")) == SchlafliType{4, 3});
  CHECK(schlafli_type(platonic("icosahedron")) == SchlafliType{3, 5});
  for (int n = 3; n <= 12; ++n)
    CHECK(schlafli_type(prism(n)) == SchlafliType{static_cast<std::uint64_t>(std::lcm(4, n)), 3});
  for (int n = 3; n <= 8; ++n) {
    CHECK(schlafli_type(antiprism(n)) == SchlafliType{static_cast<std::uint64_t>(std::lcm(3, n)), 4});
    CHECK(schlafli_type(monodromy_group(antiprism(n))) == schlafli_type(antiprism(n)));
  }
}

TEST_CASE("string condition")
{
  for (int n = 3; n <= 10; ++n)
    CHECK(string_condition(monodromy_group(prism(n))));
  for (int n = 3; n <= 8; ++n)
    CHECK(string_condition(monodromy_group(antiprism(n))));
  for (auto const &name : platonic_names())
    CHECK(string_condition(monodromy_group(platonic(name))));

  auto fs = prism(5);
  CHECK_FALSE(string_condition(MonodromyGroup({fs.r(0), fs.r(0), fs.r(2)})));
  // r0 r2 of order > 2
  CHECK_FALSE(string_condition(MonodromyGroup({fs.r(0), fs.r(2), fs.r(1)})));
  // a generator that is not an involution
  CHECK_FALSE(string_condition(MonodromyGroup({fs.r(0) * fs.r(1), fs.r(1), fs.r(2)})));
}

TEST_CASE("flag stabilizers")
{
  auto p8 = monodromy_group(prism(8));
  CHECK(flag_stabilizer(p8, 0).order() == 4);
  CHECK(flag_stabilizer(p8, 50).order() == 4);
  auto a6 = monodromy_group(antiprism(6));
  CHECK(flag_stabilizer(a6, 17).order() == 8);
  CHECK(flag_stabilizer(monodromy_group(platonic("cube")), 3).order() == 1);
  CHECK_THROWS_AS(flag_stabilizer(p8, 96), std::out_of_range);
}

TEST_CASE("base-flag stabilizers of 4m-prisms and 3m-antiprisms are abelian")
{
  for (int m = 1; m <= 4; ++m) {
    auto fs = prism(4 * m);
    auto s = flag_stabilizer(monodromy_group(fs), base_flag(fs, Family::prism));
    CHECK(s.order() == static_cast<std::uint64_t>(m * m));
    CHECK(is_abelian(s));
  }
  for (int m = 1; m <= 4; ++m) {
    auto fs = antiprism(3 * m);
    auto s = flag_stabilizer(monodromy_group(fs), base_flag(fs, Family::antiprism));
    CHECK(s.order() == static_cast<std::uint64_t>(m * m * m));
    CHECK(is_abelian(s));
  }
}
