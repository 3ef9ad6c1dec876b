#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flag_system.hpp"
#include "perm_group.hpp"
#include "presentation.hpp"
#include "todd_coxeter.hpp"
#include "words.hpp"

namespace monocover {

/// The permutation group on flags generated by r0, r1, r2, keeping the generator names.
class MonodromyGroup
{
public:
  MonodromyGroup() = default;

  /// No polytope validation; use monodromy_group() for flag systems.
  explicit MonodromyGroup(std::array<Perm, 3> gens)
    : gens_(std::move(gens)), group_(PermGroup::from_generators(gens_[0].degree(), {gens_[0], gens_[1], gens_[2]}))
  {}

  PermGroup const &group() const noexcept { return group_; }
  Perm const &r(int i) const { return gens_.at(static_cast<std::size_t>(i)); }
  std::array<Perm, 3> const &generators() const noexcept { return gens_; }
  std::uint64_t order() const { return group_.order(); }
  std::size_t degree() const noexcept { return group_.degree(); }

  /// Subgroup generated by the listed generators, e.g. {0, 1} for <r0, r1>.
  PermGroup parabolic(std::vector<int> const &which) const
  {
    std::vector<Perm> g;
    for (int i : which)
      g.push_back(r(i));
    return PermGroup::from_generators(degree(), g);
  }

  Perm evaluate(Word const &w) const { return monocover::evaluate(w, gens_); }

private:
  std::array<Perm, 3> gens_;
  PermGroup group_;
};

/// Throws InvalidMap unless the flag system passes validate().
inline MonodromyGroup monodromy_group(FlagSystem const &fs)
{
  auto rep = validate(fs);
  if (!rep.ok()) {
    std::string failed;
    for (auto const &c : rep.checks)
      if (!c.pass)
        failed += (failed.empty() ? "" : "; ") + c.name;
    throw InvalidMap("invalid flag system: " + failed);
  }
  return MonodromyGroup(fs.involutions());
}

struct SchlafliType
{
  std::uint64_t p = 0, q = 0;
  friend bool operator==(SchlafliType const &, SchlafliType const &) = default;
};

inline SchlafliType schlafli_type(FlagSystem const &fs)
{
  return {element_order(fs.r(0) * fs.r(1)), element_order(fs.r(1) * fs.r(2))};
}

inline SchlafliType schlafli_type(MonodromyGroup const &m)
{
  return {element_order(m.r(0) * m.r(1)), element_order(m.r(1) * m.r(2))};
}

/**
 * String C-group test: every generator is an involution, (r0 r2)^2 = id,
 * and for all proper generator subsets I, J the intersection
 * <r_I> ∩ <r_J> equals <r_{I∩J}>. For rank 3 the only non-trivial case
 * beyond distinct generators is <r0,r1> ∩ <r1,r2> = <r1>. Intersections
 * enumerate the smaller dihedral factor.
 */
inline bool string_condition(MonodromyGroup const &m, std::uint64_t cap = default_enumeration_cap)
{
  for (int i = 0; i < 3; ++i)
    if (m.r(i).is_identity() || !(m.r(i) * m.r(i)).is_identity())
      return false;
  Perm r02 = m.r(0) * m.r(2);
  if (!(r02 * r02).is_identity())
    return false;

  std::vector<std::vector<int>> const subsets{{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
  for (std::size_t x = 0; x < subsets.size(); ++x) {
    for (std::size_t y = x + 1; y < subsets.size(); ++y) {
      std::vector<int> common;
      for (int i : subsets[x])
        for (int j : subsets[y])
          if (i == j)
            common.push_back(i);
      auto meet = subgroup_intersection_small(m.parabolic(subsets[x]), m.parabolic(subsets[y]), cap);
      if (meet.order() != m.parabolic(common).order())
        return false;
    }
  }
  return true;
}

inline PermGroup flag_stabilizer(MonodromyGroup const &m, Point flag)
{
  if (flag >= m.degree())
    throw std::out_of_range("flag out of range");
  return m.group().point_stabilizer(flag);
}

struct MatchReport
{
  std::string presentation;
  bool relators_hold = false;
  std::vector<std::string> failing_relators;
  bool order_determined = false;
  std::uint64_t presented_order = 0; // valid when order_determined
  std::uint64_t group_order = 0;
  bool orders_equal = false;
  bool isomorphic = false;
  std::string reason;
};

/// Compares a presentation with a group whose order is already enumerated.
inline MatchReport match_against(Presentation const &p, CosetTable const &table, MonodromyGroup const &m)
{
  MatchReport rep;
  rep.presentation = p.describe();
  rep.group_order = m.order();
  rep.relators_hold = true;
  std::vector<Word> rels{Word("aa"), Word("bb"), Word("cc")};
  for (auto const &r : p.relators())
    rels.push_back(r);
  for (auto const &r : rels) {
    if (!m.evaluate(r).is_identity()) {
      rep.relators_hold = false;
      rep.failing_relators.push_back(r.str());
    }
  }
  rep.order_determined = table.closed();
  if (rep.order_determined) {
    rep.presented_order = table.coset_count;
    rep.orders_equal = rep.presented_order == rep.group_order;
  }
  rep.isomorphic = rep.relators_hold && rep.orders_equal;
  if (!rep.relators_hold)
    rep.reason = "relators fail in the permutation group";
  else if (!rep.order_determined)
    rep.reason = "order undetermined: coset enumeration exceeded its cap";
  else if (!rep.orders_equal)
    rep.reason = "orders differ";
  else
    rep.reason = "relators hold and orders agree";
  return rep;
}

/**
 * If every relator holds in M, M is a quotient of the presented group; a
 * finite presented group of the same order is then isomorphic to M.
 */
inline MatchReport match_presentation(Presentation const &p, MonodromyGroup const &m,
                                      std::size_t coset_cap = default_coset_cap)
{
  return match_against(p, todd_coxeter(p, {}, coset_cap), m);
}

} // namespace monocover
