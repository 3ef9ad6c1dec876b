#include <catch_amalgamated.hpp>

#include <random>

#include <monocover/monodromy.hpp>

#include "oracles.hpp"

using namespace monocover;

namespace {

Word random_word(std::mt19937 &rng, std::size_t max_len)
{
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, 2);
  std::string s;
  for (std::size_t i = len(rng); i > 0; --i)
    s.push_back(static_cast<char>('a' + letter(rng)));
  return Word(s);
}

Presentation plain(std::vector<std::string> const &rels)
{
  Presentation p;
  for (auto const &r : rels)
    p.extra_relators.push_back(Word(r));
  return p;
}

} // namespace

TEST_CASE("words")
{
  CHECK(free_reduce(Word("abba")).empty());
  CHECK(free_reduce(Word("abccba")).empty());
  CHECK(free_reduce(Word("abcab")) == Word("abcab"));
  CHECK(word_inverse(Word("abc")) == Word("cba"));
  CHECK(Word("ab").pow(-2) == Word("baba"));
  CHECK(Word("ab").pow(0).empty());
  CHECK_THROWS_AS(Word("abd"), std::invalid_argument);
}

TEST_CASE("evaluate")
{
  auto fs = prism(7);
  CHECK(evaluate(Word(""), fs).is_identity());
  CHECK(evaluate(Word("aa"), fs).is_identity());
  CHECK(evaluate(prism_relator(), fs).is_identity());
  CHECK(evaluate(Word("a"), fs) == fs.r(0));
  CHECK(act(Word("abc"), fs, 3) == evaluate(Word("abc"), fs)[3]);
}

TEST_CASE("evaluate is a homomorphism and ignores free reduction")
{
  std::mt19937 rng(5);
  for (auto const &fs : {prism(5), antiprism(4), platonic("dodecahedron")}) {
    for (int i = 0; i < 100; ++i) {
      Word u = random_word(rng, 12), v = random_word(rng, 12);
      REQUIRE(evaluate(u * v, fs) == compose(evaluate(u, fs), evaluate(v, fs)));
      REQUIRE(evaluate(u, fs) == evaluate(free_reduce(u), fs));
      REQUIRE(evaluate(word_inverse(u), fs) == evaluate(u, fs).inverse());
      REQUIRE(free_reduce(free_reduce(u)) == free_reduce(u));
    }
  }
}

TEST_CASE("presentations")
{
  auto p = coxeter_plus(4, 3, {});
  auto rels = p.relators();
  REQUIRE(rels.size() == 3);
  CHECK(rels[0] == Word("abababab"));
  CHECK(rels[1] == Word("bcbcbc"));
  CHECK(rels[2] == Word("acac"));
  CHECK_THROWS(coxeter_plus(1, 3, {}));
  CHECK(coxeter_plus(20, 3, {prism_relator()}).describe() == "[20,3] + " + prism_relator().str());
}

TEST_CASE("paper relators")
{
  CHECK(prism_relator() == Word("cababcababab").pow(2));
  CHECK(prism_relator().size() == 24);
  CHECK(free_reduce(prism_relator()) == prism_relator());
  CHECK(antiprism_relator() == Word("cababcbcabab").pow(2));
  CHECK(antiprism_relator().size() == 24);
  CHECK(free_reduce(antiprism_relator()) == antiprism_relator());
  CHECK(evaluate(prism_relator(), prism(4)).is_identity());
}

TEST_CASE("Todd-Coxeter orders")
{
  auto t = todd_coxeter(coxeter_plus(4, 3, {}), {}, 1000000);
  REQUIRE(t.closed());
  CHECK(t.coset_count == monodromy_group(prism(4)).order());
  CHECK(t.coset_count == 48);
  auto t2 = todd_coxeter(coxeter_plus(12, 3, {prism_relator()}));
  REQUIRE(t2.closed());
  CHECK(t2.coset_count == monodromy_group(prism(3)).order());
  auto faces = todd_coxeter(coxeter_plus(4, 3, {}), {Word("a"), Word("b")});
  REQUIRE(faces.closed());
  CHECK(faces.coset_count == 6);
  auto vertices = todd_coxeter(coxeter_plus(4, 3, {}), {Word("b"), Word("c")});
  CHECK(vertices.coset_count == 8);
  auto trivial = todd_coxeter(coxeter_plus(4, 3, {}), {Word("a"), Word("b"), Word("c")});
  CHECK(trivial.coset_count == 1);
  CHECK(todd_coxeter(plain({}), {Word("a"), Word("b"), Word("c")}).coset_count == 1);
  CHECK_THROWS(todd_coxeter(coxeter_plus(4, 3, {}), {}, 0));
}

TEST_CASE("Todd-Coxeter stops at the cap for infinite groups")
{
  auto t = todd_coxeter(coxeter_plus(20, 3, {}), {}, 20000);
  CHECK_FALSE(t.closed());
  CHECK(t.status == CosetTable::Status::cap_exceeded);
  CHECK_THROWS_AS(t.column(0), std::logic_error);
  auto euclid = todd_coxeter(coxeter_plus(4, 4, {}), {}, 5000);
  CHECK_FALSE(euclid.closed());
}

TEST_CASE("closed coset tables are permutation actions")
{
  std::vector<Presentation> cases{coxeter_plus(4, 3, {}), coxeter_plus(3, 4, {}), coxeter_plus(3, 5, {}),
                                  coxeter_plus(12, 3, {prism_relator()}), coxeter_plus(6, 4, {antiprism_relator()}),
                                  coxeter_plus(3, 3, {})};
  for (auto const &p : cases) {
    auto t = todd_coxeter(p);
    REQUIRE(t.closed());
    std::array<Perm, 3> cols{t.column(0), t.column(1), t.column(2)};
    for (auto const &c : cols)
      REQUIRE((c * c).is_identity());
    for (auto const &r : p.relators())
      REQUIRE(evaluate(r, cols).is_identity());
    // the column action is regular on the trivial subgroup's cosets
    auto g = PermGroup::from_generators(t.coset_count, {cols[0], cols[1], cols[2]});
    CHECK(g.order() == t.coset_count);
    CHECK(g.is_transitive());
    if (t.coset_count <= 2000)
      CHECK(oracle::closure_order(t.coset_count, {cols[0], cols[1], cols[2]}, 5000) == t.coset_count);
  }
}

TEST_CASE("coset count does not depend on relator order")
{
  std::vector<std::string> base{"abababab", "bcbcbc", "acac"};
  auto expect = todd_coxeter(plain(base)).coset_count;
  CHECK(expect == 48);
  std::sort(base.begin(), base.end());
  do {
    auto t = todd_coxeter(plain(base));
    REQUIRE(t.closed());
    CHECK(t.coset_count == expect);
  } while (std::next_permutation(base.begin(), base.end()));

  std::vector<Word> rels = coxeter_plus(20, 3, {prism_relator()}).relators();
  std::mt19937 rng(1);
  for (int i = 0; i < 3; ++i) {
    std::shuffle(rels.begin(), rels.end(), rng);
    Presentation p;
    p.extra_relators = rels;
    auto t = todd_coxeter(p);
    REQUIRE(t.closed());
    CHECK(t.coset_count == 6000);
  }
}

TEST_CASE("match_presentation")
{
  auto m5 = monodromy_group(prism(5));
  auto good = match_presentation(coxeter_plus(20, 3, {prism_relator()}), m5);
  CHECK(good.relators_hold);
  CHECK(good.orders_equal);
  CHECK(good.isomorphic);
  CHECK(good.presented_order == 6000);

  auto infinite = match_presentation(coxeter_plus(20, 3, {}), m5, 50000);
  CHECK(infinite.relators_hold);
  CHECK_FALSE(infinite.order_determined);
  CHECK_FALSE(infinite.orders_equal);
  CHECK_FALSE(infinite.isomorphic);

  auto wrong = match_presentation(coxeter_plus(4, 3, {}), m5);
  CHECK_FALSE(wrong.relators_hold);
  CHECK_FALSE(wrong.isomorphic);

  auto octa = match_presentation(coxeter_plus(3, 4, {antiprism_relator()}), monodromy_group(antiprism(3)));
  CHECK(octa.isomorphic);
  CHECK(octa.presented_order == 48);
}
