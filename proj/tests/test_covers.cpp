#include <catch_amalgamated.hpp>

#include <monocover/covers.hpp>

using namespace monocover;

namespace {

FVector fv(std::uint64_t v, std::uint64_t e, std::uint64_t f) { return {v, e, f}; }

} // namespace

TEST_CASE("cover f-vectors")
{
  CHECK(cover_f_vector(monodromy_group(prism(8))) == fv(64, 96, 24));
  CHECK(cover_f_vector(monodromy_group(prism(4))) == fv(8, 12, 6));
  CHECK(cover_f_vector(monodromy_group(antiprism(6))) == fv(96, 192, 64));
  for (auto const &name : platonic_names()) {
    auto fs = platonic(name);
    CHECK(cover_f_vector(monodromy_group(fs)) == fs.f_vector());
  }
}

TEST_CASE("cover f-vectors agree with the Schlafli type")
{
  for (int n = 3; n <= 10; ++n) {
    for (auto const &fs : {prism(n), antiprism(n)}) {
      auto m = monodromy_group(fs);
      auto f = cover_f_vector(m);
      auto st = schlafli_type(m);
      CHECK(2 * f.e == st.p * f.f);
      CHECK(2 * f.e == st.q * f.v);
      CHECK(4 * f.e == m.order());
    }
  }
}

TEST_CASE("Cayley cover")
{
  auto m = monodromy_group(prism(5));
  auto cover = cayley_cover(m);
  CHECK(cover.flag_count() == 6000);
  CHECK_FALSE(cover.has_labels());
  CHECK(validate(cover).ok());
  CHECK(cover.f_vector() == cover_f_vector(m));
  CHECK(flag_graph_bipartite(cover));
  // a regular map is its own cover
  auto cube = platonic("cube");
  CHECK(is_isomorphic(cayley_cover(monodromy_group(cube)), cube));
  CHECK_THROWS_AS(cayley_cover(m, 100), CapExceeded);
}

TEST_CASE("Euler characteristic and genus")
{
  auto p4 = euler_genus(monodromy_group(prism(4)), std::nullopt);
  CHECK(p4.euler_characteristic == 2);
  CHECK(p4.orientable == true);
  CHECK(p4.genus == 0);
  auto p8 = euler_genus(monodromy_group(prism(8)), minimal_cover_presentation(Family::prism, 8));
  CHECK(p8.euler_characteristic == -8);
  CHECK(p8.orientable == true);
  CHECK(p8.genus == 5);
  CHECK(p8.orientability_method == "even-length relators");
  auto a6 = euler_genus(monodromy_group(antiprism(6)), std::nullopt);
  CHECK(a6.euler_characteristic == -32);
  CHECK(a6.genus == 17);
  CHECK(a6.orientability_method == "Cayley graph 2-colouring");
  auto unknown = euler_genus(monodromy_group(antiprism(4)), std::nullopt, 1000);
  CHECK_FALSE(unknown.orientable);
  CHECK_FALSE(unknown.genus);
  CHECK(unknown.euler_characteristic == -1024);
}

TEST_CASE("a non-orientable cover")
{
  // the hemi-cube {4,3}_3 has no polyhedral face list; its regular action
  // comes from the coset table of [4,3] / (abc)^3
  auto t = todd_coxeter(coxeter_plus(4, 3, {Word("abc").pow(3)}));
  REQUIRE(t.closed());
  CHECK(t.coset_count == 24);
  MonodromyGroup m({t.column(0), t.column(1), t.column(2)});
  auto topo = euler_genus(m, std::nullopt);
  CHECK(topo.euler_characteristic == 1);
  CHECK(topo.orientable == false);
  CHECK(topo.genus == 1);
  // an odd relator rules out the even-length shortcut
  auto with_pres = euler_genus(m, coxeter_plus(4, 3, {Word("abc").pow(3)}));
  CHECK(with_pres.orientable == false);
}

TEST_CASE("minimal cover presentations")
{
  auto p5 = minimal_cover_presentation(Family::prism, 5);
  CHECK(p5 == coxeter_plus(20, 3, {prism_relator()}));
  auto a3 = minimal_cover_presentation(Family::antiprism, 3);
  CHECK(a3 == coxeter_plus(3, 4, {antiprism_relator()}));
  CHECK(todd_coxeter(a3).coset_count == 48);
  CHECK(todd_coxeter(minimal_cover_presentation(Family::prism, 4)).coset_count == 48);
  CHECK_THROWS(minimal_cover_presentation(Family::platonic, 4));
  CHECK_THROWS(minimal_cover_presentation(Family::prism, 2));
}

TEST_CASE("minimal cover verification")
{
  for (int n = 3; n <= 12; ++n) {
    auto r = verify_minimal_cover(prism(n), Family::prism, n);
    CHECK(r.isomorphic);
    CHECK(r.presented_order == closed_form(Family::prism, n).order);
  }
  for (int n = 3; n <= 8; ++n) {
    auto r = verify_minimal_cover(antiprism(n), Family::antiprism, n);
    CHECK(r.isomorphic);
  }
  auto p7 = verify_minimal_cover(prism(7), Family::prism, 7);
  CHECK(p7.presented_order == 16464);
  CHECK(p7.group_order == 16464);
}

TEST_CASE("closed forms")
{
  auto p3 = closed_form(Family::prism, 3);
  CHECK(p3.m == 3);
  CHECK(p3.order == 1296);
  CHECK(p3.genus == 28);
  CHECK(p3.euler_characteristic == -54);
  auto p4 = closed_form(Family::prism, 4);
  CHECK(p4.order == 48);
  CHECK(p4.genus == 0);
  auto a4 = closed_form(Family::antiprism, 4);
  CHECK(a4.order == 12288);
  CHECK(a4.genus == 513);
  CHECK(closed_form(Family::prism, 8).f_vector == fv(64, 96, 24));
  CHECK(closed_form(Family::antiprism, 6).f_vector == fv(96, 192, 64));
  CHECK_THROWS(closed_form(Family::platonic, 5));
}

TEST_CASE("closed forms match the computed covers")
{
  for (int n = 3; n <= 12; ++n) {
    auto m = monodromy_group(prism(n));
    auto cf = closed_form(Family::prism, n);
    CHECK(m.order() == cf.order);
    CHECK(cover_f_vector(m) == cf.f_vector);
    auto t = euler_genus(m, minimal_cover_presentation(Family::prism, n));
    CHECK(t.euler_characteristic == cf.euler_characteristic);
    CHECK(t.genus == cf.genus);
    CHECK(t.orientable == true);
    CHECK(cf.euler_characteristic == 2 - 2 * cf.genus);
  }
  for (int n = 3; n <= 8; ++n) {
    auto m = monodromy_group(antiprism(n));
    auto cf = closed_form(Family::antiprism, n);
    CHECK(m.order() == cf.order);
    CHECK(cover_f_vector(m) == cf.f_vector);
    CHECK(cf.euler_characteristic == 2 - 2 * cf.genus);
  }
}

TEST_CASE("relators lie in the core but their square roots do not")
{
  Word pr = prism_relator(), ar = antiprism_relator();
  Word p_root(pr.str().substr(0, 12)), a_root(ar.str().substr(0, 12));
  CHECK(p_root.pow(2) == pr);
  CHECK(a_root.pow(2) == ar);
  for (int n = 3; n <= 12; ++n) {
    auto fs = prism(n);
    CHECK(evaluate(pr, fs).is_identity());
    if (n != 4)
      CHECK_FALSE(evaluate(p_root, fs).is_identity());
  }
  for (int n = 3; n <= 8; ++n) {
    auto fs = antiprism(n);
    CHECK(evaluate(ar, fs).is_identity());
    if (n != 3)
      CHECK_FALSE(evaluate(a_root, fs).is_identity());
  }
}

TEST_CASE("normal subgroup structure")
{
  auto p8 = prism_structure(8);
  CHECK(p8.all_pass());
  CHECK(p8.subgroup_order == 8);
  CHECK(p8.quotient_order == 48);
  CHECK(p8.central_ok == true);
  auto p4 = prism_structure(4);
  CHECK(p4.all_pass());
  CHECK(p4.subgroup_order == 1);
  CHECK(p4.group_order == 48);
  auto a6 = antiprism_structure(6);
  CHECK(a6.all_pass());
  CHECK(a6.subgroup_order == 16);
  CHECK(a6.quotient_order == 48);
  CHECK_FALSE(a6.central_ok);
  for (int m = 1; m <= 4; ++m) {
    auto r = prism_structure(4 * m);
    CHECK(r.all_pass());
    CHECK(r.quotient_order * r.subgroup_order == r.group_order);
  }
  for (int m = 1; m <= 3; ++m)
    CHECK(antiprism_structure(3 * m).all_pass());
  CHECK_THROWS(prism_structure(6));
  CHECK_THROWS(antiprism_structure(4));
}

TEST_CASE("coincident covers")
{
  auto p5 = coincidence_check(Family::prism, 5);
  CHECK(p5.pass);
  REQUIRE(p5.members.size() == 3);
  for (auto const &m : p5.members) {
    CHECK(m.group_order == 6000);
    CHECK(m.match.isomorphic);
  }
  CHECK(p5.members[2].n == 20);
  auto p6 = coincidence_check(Family::prism, 6);
  CHECK(p6.pass);
  CHECK(p6.presented_order == 1296);
  CHECK(p6.members.size() == 2);
  auto a4 = coincidence_check(Family::antiprism, 4);
  CHECK(a4.pass);
  CHECK(a4.members[1].n == 12);
  CHECK(a4.members[1].group_order == 12288);
  CHECK(coincidence_check(Family::antiprism, 5).pass);
  CHECK_THROWS(coincidence_check(Family::prism, 8));
  CHECK_THROWS(coincidence_check(Family::antiprism, 6));

  // beyond the flag bound only the shared presentation is checked
  auto big = coincidence_check(Family::prism, 5, default_coset_cap, 100);
  CHECK(big.pass);
  CHECK(big.members[2].group_order == 0);
}
