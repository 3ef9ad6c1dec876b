#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "perm.hpp"

namespace monocover {

/// Raised when an enumeration would exceed its configured element cap.
class CapExceeded : public std::runtime_error
{
public:
  CapExceeded(std::string const &what, std::uint64_t cap)
    : std::runtime_error(what + " exceeds cap " + std::to_string(cap)), cap_(cap)
  {}
  std::uint64_t cap() const noexcept { return cap_; }

private:
  std::uint64_t cap_;
};

inline constexpr std::uint64_t default_enumeration_cap = 100000;

/**
 * A permutation group with a deterministic stabilizer chain.
 *
 * The base is the lexicographically first one: every level stabilizes all
 * points below its base point, so base points appear in strictly
 * increasing order. Schreier generators are processed orbit point by
 * orbit point, generator by generator, so the chain (and everything derived
 * from it) is identical across runs.
 */
class PermGroup
{
public:
  PermGroup() = default;
  explicit PermGroup(std::size_t degree) : degree_(degree) {}

  static PermGroup from_generators(std::size_t degree, std::vector<Perm> const &gens)
  {
    PermGroup g(degree);
    for (auto const &p : gens)
      g.add_generator(p);
    return g;
  }

  std::size_t degree() const noexcept { return degree_; }
  std::vector<Perm> const &generators() const noexcept { return generators_; }
  std::vector<Perm> const &strong_generators() const noexcept { return strong_; }

  std::uint64_t order() const
  {
    std::uint64_t ord = 1;
    for (auto const &lvl : levels_) {
      if (__builtin_mul_overflow(ord, static_cast<std::uint64_t>(lvl.orbit.size()), &ord))
        throw std::overflow_error("group order does not fit in 64 bits");
    }
    return ord;
  }

  std::vector<Point> base() const
  {
    std::vector<Point> b;
    for (auto const &lvl : levels_)
      b.push_back(lvl.base);
    return b;
  }

  std::vector<std::size_t> basic_orbit_sizes() const
  {
    std::vector<std::size_t> s;
    for (auto const &lvl : levels_)
      s.push_back(lvl.orbit.size());
    return s;
  }

  bool contains(Perm const &p) const
  {
    check_degree(p);
    return strip(p, 0).first.is_identity();
  }

  /// Appends a generator; returns true when the group grew.
  bool add_generator(Perm const &p)
  {
    check_degree(p);
    generators_.push_back(p);
    auto residue = strip(p, 0).first;
    if (residue.is_identity())
      return false;
    close(insert_strong(std::move(residue)));
    return true;
  }

  /// Orbit of x under the generators, in breadth-first discovery order.
  std::vector<Point> orbit(Point x) const
  {
    if (x >= degree_)
      throw std::out_of_range("point out of range");
    std::vector<Point> orb{x};
    std::vector<char> seen(degree_, 0);
    seen[x] = 1;
    for (std::size_t i = 0; i < orb.size(); ++i) {
      for (auto const &g : generators_) {
        Point y = g[orb[i]];
        if (!seen[y]) {
          seen[y] = 1;
          orb.push_back(y);
        }
      }
    }
    return orb;
  }

  bool is_transitive() const { return degree_ == 0 || orbit(0).size() == degree_; }

  PermGroup point_stabilizer(Point x) const
  {
    if (x >= degree_)
      throw std::out_of_range("point out of range");
    PermGroup stab(degree_);
    std::vector<Point> orb{x};
    std::vector<std::ptrdiff_t> pos(degree_, -1);
    std::vector<Perm> trans{Perm::identity(degree_)};
    pos[x] = 0;
    for (std::size_t i = 0; i < orb.size(); ++i) {
      for (auto const &g : generators_) {
        Point y = g[orb[i]];
        if (pos[y] < 0) {
          pos[y] = static_cast<std::ptrdiff_t>(orb.size());
          orb.push_back(y);
          trans.push_back(trans[i] * g);
        }
      }
    }
    std::uint64_t const target = order() / orb.size();
    for (std::size_t i = 0; i < orb.size() && stab.order() < target; ++i) {
      for (auto const &g : generators_) {
        Perm h = trans[i] * g * trans[static_cast<std::size_t>(pos[g[orb[i]]])].inverse();
        if (!h.is_identity() && stab.add_generator(h) && stab.order() == target)
          break;
      }
    }
    return stab;
  }

  /// All elements by closure under right multiplication; throws CapExceeded.
  std::vector<Perm> elements(std::uint64_t cap = default_enumeration_cap) const
  {
    if (order() > cap)
      throw CapExceeded("group of order " + std::to_string(order()), cap);
    return enumerate_by_closure(degree_, generators_, cap);
  }

  /// Closure enumeration that does not consult the chain; used as an oracle.
  static std::vector<Perm> enumerate_by_closure(std::size_t degree, std::vector<Perm> const &gens,
                                                std::uint64_t cap)
  {
    std::vector<Perm> elems{Perm::identity(degree)};
    std::unordered_set<Perm, PermHash> seen{elems.front()};
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (auto const &g : gens) {
        Perm h = elems[i] * g;
        if (seen.insert(h).second) {
          if (elems.size() >= cap)
            throw CapExceeded("element enumeration", cap);
          elems.push_back(std::move(h));
        }
      }
    }
    return elems;
  }

private:
  struct Level
  {
    Point base = 0;
    std::vector<std::size_t> gens; // indices into strong_, ascending
    std::vector<Point> orbit;
    std::vector<std::ptrdiff_t> pos; // point -> index in orbit, -1 if absent
    std::vector<Perm> trans;         // trans[i] maps base to orbit[i]
    std::vector<Perm> inv_trans;
    std::vector<std::size_t> checked; // gens already tested per orbit point
  };

  void check_degree(Perm const &p) const
  {
    if (p.degree() != degree_)
      throw DegreeMismatch(degree_, p.degree());
  }

  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const
  {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      auto const &lvl = levels_[i];
      Point y = g[lvl.base];
      if (y == lvl.base)
        continue;
      auto p = lvl.pos[y];
      if (p < 0)
        return {std::move(g), i};
      g *= lvl.inv_trans[static_cast<std::size_t>(p)];
    }
    return {std::move(g), levels_.size()};
  }

  // Registers a new strong generator and returns the index of the level
  // keyed by its first moved point.
  std::size_t insert_strong(Perm r)
  {
    std::size_t const idx = strong_.size();
    Point const q = r.first_moved();
    strong_.push_back(std::move(r));

    std::size_t at = 0;
    while (at < levels_.size() && levels_[at].base < q)
      ++at;
    if (at == levels_.size() || levels_[at].base != q) {
      Level lvl;
      lvl.base = q;
      lvl.pos.assign(degree_, -1);
      lvl.pos[q] = 0;
      lvl.orbit.push_back(q);
      lvl.trans.push_back(Perm::identity(degree_));
      lvl.inv_trans.push_back(Perm::identity(degree_));
      lvl.checked.push_back(0);
      for (std::size_t k = 0; k < idx; ++k)
        if (strong_[k].first_moved() >= q)
          lvl.gens.push_back(k);
      levels_.insert(levels_.begin() + static_cast<std::ptrdiff_t>(at), std::move(lvl));
    }
    for (std::size_t i = 0; i <= at; ++i)
      levels_[i].gens.push_back(idx);
    return at;
  }

  void extend_orbit(Level &lvl)
  {
    for (std::size_t i = 0; i < lvl.orbit.size(); ++i) {
      for (std::size_t k : lvl.gens) {
        Perm const &s = strong_[k];
        Point y = s[lvl.orbit[i]];
        if (lvl.pos[y] >= 0)
          continue;
        lvl.pos[y] = static_cast<std::ptrdiff_t>(lvl.orbit.size());
        lvl.orbit.push_back(y);
        lvl.trans.push_back(lvl.trans[i] * s);
        lvl.inv_trans.push_back(lvl.trans.back().inverse());
        lvl.checked.push_back(0);
      }
    }
  }

  // Schreier-Sims closure; levels deeper than `start` are already complete.
  void close(std::size_t start)
  {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start);
    while (i >= 0) {
      auto const li = static_cast<std::size_t>(i);
      extend_orbit(levels_[li]);
      bool restarted = false;
      for (std::size_t y = 0; y < levels_[li].orbit.size() && !restarted; ++y) {
        while (levels_[li].checked[y] < levels_[li].gens.size()) {
          Level const &lvl = levels_[li];
          std::size_t k = lvl.checked[y];
          Perm const &s = strong_[lvl.gens[k]];
          Point z = s[lvl.orbit[y]];
          Perm h = lvl.trans[y] * s * lvl.inv_trans[static_cast<std::size_t>(lvl.pos[z])];
          levels_[li].checked[y] = k + 1;
          if (h.is_identity())
            continue;
          auto residue = strip(std::move(h), li + 1).first;
          if (!residue.is_identity()) {
            i = static_cast<std::ptrdiff_t>(insert_strong(std::move(residue)));
            restarted = true;
            break;
          }
        }
      }
      if (!restarted)
        --i;
    }
  }

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;
};

inline PermGroup from_generators(std::size_t degree, std::vector<Perm> const &gens)
{
  return PermGroup::from_generators(degree, gens);
}

inline std::uint64_t group_order(PermGroup const &g) { return g.order(); }

inline bool contains(PermGroup const &g, Perm const &p) { return g.contains(p); }

inline PermGroup point_stabilizer(PermGroup const &g, Point x) { return g.point_stabilizer(x); }

inline bool is_abelian(PermGroup const &h)
{
  auto const &gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!commute(gens[i], gens[j]))
        return false;
  return true;
}

/// H is normal in G iff every conjugate of an H-generator by a G-generator lies in H.
inline bool is_normal(PermGroup const &g, PermGroup const &h)
{
  if (g.degree() != h.degree())
    throw DegreeMismatch(g.degree(), h.degree());
  for (auto const &x : g.generators())
    for (auto const &y : h.generators())
      if (!h.contains(y.conjugate_by(x)))
        return false;
  return true;
}

inline bool is_central(PermGroup const &g, Perm const &p)
{
  if (g.degree() != p.degree())
    throw DegreeMismatch(g.degree(), p.degree());
  for (auto const &x : g.generators())
    if (!commute(x, p))
      return false;
  return true;
}

inline std::vector<Perm> small_subgroup_elements(PermGroup const &h,
                                                 std::uint64_t cap = default_enumeration_cap)
{
  return h.elements(cap);
}

/// Intersection by enumerating the smaller group and filtering by membership in the larger.
inline PermGroup subgroup_intersection_small(PermGroup const &h1, PermGroup const &h2,
                                             std::uint64_t cap = default_enumeration_cap)
{
  if (h1.degree() != h2.degree())
    throw DegreeMismatch(h1.degree(), h2.degree());
  bool const first_smaller = h1.order() <= h2.order();
  PermGroup const &small = first_smaller ? h1 : h2;
  PermGroup const &large = first_smaller ? h2 : h1;
  PermGroup out(h1.degree());
  for (auto const &e : small.elements(cap))
    if (!e.is_identity() && large.contains(e))
      out.add_generator(e);
  return out;
}

} // namespace monocover
