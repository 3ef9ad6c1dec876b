#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "flag_system.hpp"
#include "monodromy.hpp"
#include "presentation.hpp"
#include "stabilizer_trees.hpp"
#include "todd_coxeter.hpp"

namespace monocover {

/// Counts of the regular cover: cosets of <r1,r2>, <r0,r2>, <r0,r1>.
inline FVector cover_f_vector(MonodromyGroup const &m)
{
  auto const order = m.order();
  return {order / m.parabolic({1, 2}).order(), order / m.parabolic({0, 2}).order(),
          order / m.parabolic({0, 1}).order()};
}

/**
 * The regular cover as an unlabelled flag system whose flags are the group
 * elements; flag g is i-adjacent to r_i g. Throws CapExceeded above `cap`.
 */
inline FlagSystem cayley_cover(MonodromyGroup const &m, std::uint64_t cap = default_enumeration_cap)
{
  auto elems = m.group().elements(cap);
  std::unordered_map<Perm, Point, PermHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i)
    index.emplace(elems[i], static_cast<Point>(i));
  std::array<std::vector<Point>, 3> img;
  for (int k = 0; k < 3; ++k) {
    img[static_cast<std::size_t>(k)].resize(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
      img[static_cast<std::size_t>(k)][i] = index.at(m.r(k) * elems[i]);
  }
  return FlagSystem(Perm(std::move(img[0])), Perm(std::move(img[1])), Perm(std::move(img[2])));
}

/// Proper 2-colouring of the flag graph exists.
inline bool flag_graph_bipartite(FlagSystem const &fs)
{
  std::vector<int> colour(fs.flag_count(), -1);
  for (Point s = 0; s < fs.flag_count(); ++s) {
    if (colour[s] >= 0)
      continue;
    colour[s] = 0;
    std::vector<Point> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Point x = queue[i];
      for (int k = 0; k < 3; ++k) {
        Point y = fs.r(k)[x];
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

struct Topology
{
  std::int64_t euler_characteristic = 0;
  std::optional<bool> orientable; // nullopt: undetermined within the cap
  std::optional<std::int64_t> genus; // orientable genus, or non-orientable genus 2 - chi
  std::string orientability_method;
};

/**
 * chi = v - e + f of the regular cover. A matched presentation whose
 * relators all have even length makes the cover orientable; otherwise the
 * Cayley graph is 2-coloured when the group has at most `cap` elements.
 */
inline Topology euler_genus(MonodromyGroup const &m, std::optional<Presentation> const &matched,
                            std::uint64_t cap = default_enumeration_cap)
{
  Topology t;
  t.euler_characteristic = cover_f_vector(m).euler_characteristic();
  if (matched) {
    auto rels = matched->relators();
    bool even = std::all_of(rels.begin(), rels.end(), [](Word const &w) { return w.size() % 2 == 0; });
    if (even) {
      t.orientable = true;
      t.orientability_method = "even-length relators";
    }
  }
  if (!t.orientable) {
    if (m.order() <= cap) {
      t.orientable = flag_graph_bipartite(cayley_cover(m, cap));
      t.orientability_method = "Cayley graph 2-colouring";
    } else {
      t.orientability_method = "undetermined: group exceeds enumeration cap";
    }
  }
  if (t.orientable)
    t.genus = *t.orientable ? (2 - t.euler_characteristic) / 2 : 2 - t.euler_characteristic;
  return t;
}

inline Presentation minimal_cover_presentation(Family family, int n)
{
  if (n < 3)
    throw std::invalid_argument("minimal cover presentation needs n >= 3");
  if (family == Family::prism)
    return coxeter_plus(std::lcm(4, n), 3, {prism_relator()});
  if (family == Family::antiprism)
    return coxeter_plus(std::lcm(3, n), 4, {antiprism_relator()});
  throw std::invalid_argument("minimal cover presentation is defined for prisms and antiprisms");
}

inline FlagSystem family_map(Family family, int n)
{
  if (family == Family::prism)
    return prism(n);
  if (family == Family::antiprism)
    return antiprism(n);
  throw std::invalid_argument("family_map needs prism or antiprism");
}

inline MatchReport verify_minimal_cover(FlagSystem const &fs, Family family, int n,
                                        std::size_t coset_cap = default_coset_cap)
{
  return match_presentation(minimal_cover_presentation(family, n), monodromy_group(fs), coset_cap);
}

struct ClosedForm
{
  std::int64_t m = 0;
  std::uint64_t order = 0;
  FVector f_vector; // (v, e, f) of the cover
  std::int64_t euler_characteristic = 0;
  std::int64_t genus = 0;
};

/**
 * Prism, m = lcm(4,n)/4: order 48m^3, (v,e,f) = (8m^3, 12m^3, 6m^2),
 * genus (2m-3)m^2 + 1. Antiprism, m = lcm(3,n)/3: order 48m^4,
 * (v,e,f) = (6m^4, 12m^4, 8m^3), genus 3m^4 - 4m^3 + 1.
 */
inline ClosedForm closed_form(Family family, int n)
{
  if (n < 3)
    throw std::invalid_argument("closed form needs n >= 3");
  ClosedForm c;
  if (family == Family::prism) {
    std::int64_t m = std::lcm(4, n) / 4;
    c.m = m;
    c.order = static_cast<std::uint64_t>(48 * m * m * m);
    c.f_vector = {static_cast<std::uint64_t>(8 * m * m * m), static_cast<std::uint64_t>(12 * m * m * m),
                  static_cast<std::uint64_t>(6 * m * m)};
    c.euler_characteristic = (6 - 4 * m) * m * m;
    c.genus = (2 * m - 3) * m * m + 1;
  } else if (family == Family::antiprism) {
    std::int64_t m = std::lcm(3, n) / 3;
    std::int64_t m3 = m * m * m, m4 = m3 * m;
    c.m = m;
    c.order = static_cast<std::uint64_t>(48 * m4);
    c.f_vector = {static_cast<std::uint64_t>(6 * m4), static_cast<std::uint64_t>(12 * m4),
                  static_cast<std::uint64_t>(8 * m3)};
    c.euler_characteristic = 8 * m3 - 6 * m4;
    c.genus = 3 * m4 - 4 * m3 + 1;
  } else {
    throw std::invalid_argument("closed form is defined for prisms and antiprisms");
  }
  return c;
}

// ---------------------------------------------------------------------------
// normal subgroup and quotient structure

struct StructureReport
{
  Family family = Family::prism;
  int n = 0;
  int m = 0;
  std::uint64_t group_order = 0;
  std::uint64_t subgroup_order = 0;
  bool generator_orders_ok = false; // every listed generator has order m
  bool abelian_ok = false;
  bool independent_ok = false; // any k-1 generators span order m^(k-1)
  bool elementary_orders_ok = false; // subgroup order m^k
  bool normal_subgroup_ok = false;
  std::uint64_t quotient_order = 0;
  bool quotient_is_B3 = false;
  std::optional<bool> central_ok; // prisms only: (abc)^{3m} is central
  std::vector<NamedCheck> details;

  bool all_pass() const
  {
    return generator_orders_ok && abelian_ok && independent_ok && elementary_orders_ok && normal_subgroup_ok &&
           quotient_order == 48 && quotient_is_B3 && central_ok.value_or(true);
  }
};

namespace detail {

// Order of the coset xH in G/H.
inline std::uint64_t coset_order(Perm const &x, PermGroup const &h, std::uint64_t limit)
{
  Perm acc = x;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (h.contains(acc))
      return k;
    acc *= x;
  }
  return 0;
}

inline std::uint64_t ipow(std::uint64_t b, int e)
{
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i)
    r *= b;
  return r;
}

// Shared check of a normal subgroup Z_m^k with quotient B3 = [p,q] where
// {p,q} = {3,4}; p is the order of ab modulo the subgroup.
inline StructureReport structure_report(Family family, int n, int m, std::vector<Word> const &gens_words,
                                        int p, int q)
{
  auto fs = family_map(family, n);
  auto mon = monodromy_group(fs);
  StructureReport rep;
  rep.family = family;
  rep.n = n;
  rep.m = m;
  rep.group_order = mon.order();

  std::vector<Perm> gens;
  for (auto const &w : gens_words)
    gens.push_back(mon.evaluate(w));
  auto h = PermGroup::from_generators(mon.degree(), gens);
  rep.subgroup_order = h.order();
  int const k = static_cast<int>(gens.size());

  rep.generator_orders_ok = std::all_of(gens.begin(), gens.end(),
                                        [&](Perm const &g) { return element_order(g) == static_cast<std::uint64_t>(m); });
  rep.abelian_ok = is_abelian(h);
  rep.elementary_orders_ok = rep.subgroup_order == ipow(static_cast<std::uint64_t>(m), k);
  rep.independent_ok = true;
  for (int drop = 0; drop < k; ++drop) {
    std::vector<Perm> rest;
    for (int i = 0; i < k; ++i)
      if (i != drop)
        rest.push_back(gens[static_cast<std::size_t>(i)]);
    if (PermGroup::from_generators(mon.degree(), rest).order() != ipow(static_cast<std::uint64_t>(m), k - 1))
      rep.independent_ok = false;
  }
  rep.normal_subgroup_ok = is_normal(mon.group(), h);
  rep.quotient_order = rep.group_order / rep.subgroup_order;

  auto ab = mon.evaluate(Word("ab")), bc = mon.evaluate(Word("bc")), ac = mon.evaluate(Word("ac"));
  auto abc = mon.evaluate(Word("abc"));
  auto const lim = rep.quotient_order;
  std::uint64_t o_ab = coset_order(ab, h, lim), o_bc = coset_order(bc, h, lim), o_ac = coset_order(ac, h, lim);
  std::uint64_t o_abc = coset_order(abc, h, lim);
  bool gens_nontrivial = !h.contains(mon.r(0)) && !h.contains(mon.r(1)) && !h.contains(mon.r(2));
  rep.details.push_back({"ab coset order " + std::to_string(p), o_ab == static_cast<std::uint64_t>(p),
                         std::to_string(o_ab)});
  rep.details.push_back({"bc coset order " + std::to_string(q), o_bc == static_cast<std::uint64_t>(q),
                         std::to_string(o_bc)});
  rep.details.push_back({"ac coset order 2", o_ac == 2, std::to_string(o_ac)});
  rep.details.push_back({"abc coset order 6", o_abc == 6, std::to_string(o_abc)});
  rep.details.push_back({"a, b, c outside the subgroup", gens_nontrivial, ""});
  rep.quotient_is_B3 = rep.quotient_order == 48 && o_ab == static_cast<std::uint64_t>(p) &&
                       o_bc == static_cast<std::uint64_t>(q) && o_ac == 2 && o_abc == 6 && gens_nontrivial;

  if (family == Family::prism) {
    auto z = mon.evaluate(Word("abc").pow(3 * m));
    rep.central_ok = is_central(mon.group(), z);
  }
  return rep;
}

} // namespace detail

/// H = <(ab)^4, c(ab)^4 c, bc(ab)^4 cb> in Mon(prism(4m)).
inline StructureReport prism_structure(int n)
{
  if (n < 4 || n % 4 != 0)
    throw std::invalid_argument("prism structure needs n divisible by 4");
  using namespace words;
  Word alpha = ab().pow(4);
  return detail::structure_report(Family::prism, n, n / 4,
                                  {alpha, c() * alpha * c(), b() * c() * alpha * c() * b()}, 4, 3);
}

/// K = <(ab)^3, c(ab)^3 c, bc(ab)^3 cb, cbc(ab)^3 cbc> in Mon(antiprism(3m)).
inline StructureReport antiprism_structure(int n)
{
  if (n < 3 || n % 3 != 0)
    throw std::invalid_argument("antiprism structure needs n divisible by 3");
  using namespace words;
  Word alpha = ab().pow(3);
  return detail::structure_report(
      Family::antiprism, n, n / 3,
      {alpha, c() * alpha * c(), b() * c() * alpha * c() * b(), Word("cbc") * alpha * Word("cbc")}, 3, 4);
}

// ---------------------------------------------------------------------------
// coincident covers

struct CoincidenceMember
{
  int n = 0;
  std::size_t flag_count = 0;
  std::uint64_t group_order = 0;
  MatchReport match;
};

struct CoincidenceReport
{
  Family family = Family::prism;
  int n = 0;
  std::string presentation;
  std::optional<std::uint64_t> presented_order;
  std::vector<CoincidenceMember> members;
  bool pass = false;
};

/// The n-values whose minimal covers coincide with that of `n`.
inline std::vector<int> coincidence_partners(Family family, int n)
{
  if (family == Family::prism) {
    if (n % 2 == 1)
      return {n, 2 * n, 4 * n};
    if (n % 4 == 2)
      return {n, 2 * n};
    throw std::invalid_argument("prism coincidence needs n odd or n = 2 mod 4");
  }
  if (family == Family::antiprism) {
    if (n % 3 != 0)
      return {n, 3 * n};
    throw std::invalid_argument("antiprism coincidence needs n not divisible by 3");
  }
  throw std::invalid_argument("coincidence is defined for prisms and antiprisms");
}

/**
 * All partner maps share one minimal-cover presentation (equal lcm), and
 * each monodromy group matches it. The presented order is enumerated once.
 * Partners with more than `max_flags` flags are checked through the shared
 * presentation only.
 */
inline CoincidenceReport coincidence_check(Family family, int n, std::size_t coset_cap = default_coset_cap,
                                           std::size_t max_flags = 4096)
{
  auto partners = coincidence_partners(family, n);
  CoincidenceReport rep;
  rep.family = family;
  rep.n = n;
  auto pres = minimal_cover_presentation(family, n);
  rep.presentation = pres.describe();
  auto table = todd_coxeter(pres, {}, coset_cap);
  if (table.closed())
    rep.presented_order = table.coset_count;
  rep.pass = table.closed();
  for (int k : partners) {
    if (!(minimal_cover_presentation(family, k) == pres))
      rep.pass = false;
    CoincidenceMember mem;
    mem.n = k;
    mem.flag_count = static_cast<std::size_t>((family == Family::prism ? 12 : 16) * k);
    if (mem.flag_count <= max_flags) {
      auto mon = monodromy_group(family_map(family, k));
      mem.group_order = mon.order();
      mem.match = match_against(pres, table, mon);
      rep.pass = rep.pass && mem.match.isomorphic;
    }
    rep.members.push_back(std::move(mem));
  }
  return rep;
}

} // namespace monocover
