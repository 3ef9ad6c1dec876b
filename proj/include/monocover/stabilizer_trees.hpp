#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flag_system.hpp"
#include "monodromy.hpp"
#include "words.hpp"

namespace monocover {

enum class TreeStrategy { bfs, dfs, prism_paper, antiprism_paper };

inline char const *strategy_name(TreeStrategy s)
{
  switch (s) {
    case TreeStrategy::bfs: return "bfs";
    case TreeStrategy::dfs: return "dfs";
    case TreeStrategy::prism_paper: return "prism_paper";
    default: return "antiprism_paper";
  }
}

/// A spanning tree of the flag graph, stored as parent links towards the root.
struct SpanningTree
{
  Point root = 0;
  std::vector<std::ptrdiff_t> parent; // -1 at the root
  std::vector<int> parent_label;      // label i of the edge to the parent
  TreeStrategy strategy = TreeStrategy::bfs;

  std::size_t flag_count() const noexcept { return parent.size(); }
  std::size_t edge_count() const noexcept { return parent.empty() ? 0 : parent.size() - 1; }

  bool is_tree_edge(Point x, int label, Point y) const
  {
    return (parent[y] == static_cast<std::ptrdiff_t>(x) && parent_label[y] == label) ||
           (parent[x] == static_cast<std::ptrdiff_t>(y) && parent_label[x] == label);
  }

  /// Word of the tree path from the root to `flag`.
  Word path_to(Point flag) const
  {
    std::string rev;
    for (Point x = flag; parent[x] >= 0; x = static_cast<Point>(parent[x]))
      rev.push_back(static_cast<char>('a' + parent_label[x]));
    std::reverse(rev.begin(), rev.end());
    return Word(rev);
  }
};

namespace detail {

inline void bfs_complete(FlagSystem const &fs, SpanningTree &t, std::vector<Point> queue)
{
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Point x = queue[i];
    for (int k = 0; k < 3; ++k) {
      Point y = fs.r(k)[x];
      if (y != t.root && t.parent[y] < 0) {
        t.parent[y] = static_cast<std::ptrdiff_t>(x);
        t.parent_label[y] = k;
        queue.push_back(y);
      }
    }
  }
}

// Adds the walk of `stem` from the root as tree edges; fails if the walk
// revisits a flag off its own tree path.
inline void insert_stem(FlagSystem const &fs, SpanningTree &t, Word const &stem, std::vector<Point> &order)
{
  Point x = t.root;
  for (std::size_t i = 0; i < stem.size(); ++i) {
    int k = stem.gen(i);
    Point y = fs.r(k)[x];
    if (y == t.root || (t.parent[y] >= 0 && !(t.parent[y] == static_cast<std::ptrdiff_t>(x) && t.parent_label[y] == k)))
      throw std::logic_error("stem " + stem.str() + " does not embed in the tree");
    if (t.parent[y] < 0) {
      t.parent[y] = static_cast<std::ptrdiff_t>(x);
      t.parent_label[y] = k;
      order.push_back(y);
    }
    x = y;
  }
}

} // namespace detail

/// Stem words seeded into the prism tree: one per square and one to the top n-gon.
inline std::vector<Word> prism_tree_stems(int n)
{
  using namespace words;
  std::vector<Word> stems{c()};
  for (int k = 0; k <= n - 2; ++k)
    stems.push_back(c() * b() * ab().pow(k) * c());
  stems.push_back(Word("babc"));
  return stems;
}

/// Stem words seeded into the antiprism tree: two per triangle pair, plus the top n-gon.
inline std::vector<Word> antiprism_tree_stems(int n)
{
  using namespace words;
  std::vector<Word> stems{c(), Word("bc")};
  for (int k = 0; k <= n - 2; ++k) {
    stems.push_back(c() * b() * ab().pow(k) * c());
    stems.push_back(c() * b() * ab().pow(k) * Word("cabc"));
  }
  stems.push_back(Word("bcbabc"));
  return stems;
}

/**
 * bfs / dfs explore neighbours in label order r0, r1, r2. The paper-style
 * strategies first lay down the stems of the square (triangle) and base
 * lollipops from the canonical type-A root, then complete breadth-first.
 */
inline SpanningTree spanning_tree(FlagSystem const &fs, Point root, TreeStrategy strategy)
{
  auto const n = fs.flag_count();
  if (root >= n)
    throw std::out_of_range("root flag out of range");
  SpanningTree t;
  t.root = root;
  t.strategy = strategy;
  t.parent.assign(n, -1);
  t.parent_label.assign(n, -1);

  switch (strategy) {
    case TreeStrategy::bfs:
      detail::bfs_complete(fs, t, {root});
      break;
    case TreeStrategy::dfs: {
      std::vector<char> seen(n, 0);
      std::vector<std::pair<Point, int>> stack{{root, 0}};
      seen[root] = 1;
      while (!stack.empty()) {
        auto &[x, k] = stack.back();
        if (k == 3) {
          stack.pop_back();
          continue;
        }
        Point y = fs.r(k)[x];
        int label = k++;
        if (!seen[y]) {
          seen[y] = 1;
          t.parent[y] = static_cast<std::ptrdiff_t>(x);
          t.parent_label[y] = label;
          stack.emplace_back(y, 0);
        }
      }
      break;
    }
    case TreeStrategy::prism_paper:
    case TreeStrategy::antiprism_paper: {
      Family fam = strategy == TreeStrategy::prism_paper ? Family::prism : Family::antiprism;
      require_canonical(fs, fam);
      if (root != base_flag(fs, fam))
        throw std::invalid_argument("paper trees are rooted at the canonical type-A flag");
      auto stems = fam == Family::prism ? prism_tree_stems(fs.family_n()) : antiprism_tree_stems(fs.family_n());
      std::vector<Point> order{root};
      for (auto const &s : stems)
        detail::insert_stem(fs, t, s, order);
      detail::bfs_complete(fs, t, order);
      break;
    }
  }

  for (Point x = 0; x < n; ++x)
    if (x != root && t.parent[x] < 0)
      throw std::invalid_argument("flag graph is disconnected");
  return t;
}

/// One word per non-tree edge {x, x r_i} with x < x r_i: path(x) * r_i * path(x r_i)^-1.
inline std::vector<Word> schreier_generators(FlagSystem const &fs, SpanningTree const &t)
{
  if (t.flag_count() != fs.flag_count())
    throw std::invalid_argument("tree does not span this flag system");
  std::vector<Word> out;
  for (Point x = 0; x < fs.flag_count(); ++x) {
    for (int k = 0; k < 3; ++k) {
      Point y = fs.r(k)[x];
      if (y <= x || t.is_tree_edge(x, k, y))
        continue;
      out.push_back(t.path_to(x) * Word(std::string(1, static_cast<char>('a' + k))) * t.path_to(y).inverse());
    }
  }
  return out;
}

enum class CellKind { face, vertex };

struct LollipopGenerator
{
  CellKind kind = CellKind::face;
  Point entry = 0;   // least flag on the cell
  std::uint64_t q = 0; // face co-degree or vertex degree
  Word word;
};

/**
 * One lollipop per face and per vertex: w (r0 r1)^q w^-1 for a face,
 * w (r1 r2)^q w^-1 for a vertex, with w the tree path to the least flag of
 * the cell. Only for spherical maps.
 */
inline std::vector<LollipopGenerator> lollipop_generators(FlagSystem const &fs, SpanningTree const &t)
{
  if (fs.f_vector().euler_characteristic() != 2)
    throw std::invalid_argument("lollipop generators need a spherical map (Euler characteristic 2)");
  std::vector<LollipopGenerator> out;
  for (auto kind : {CellKind::face, CellKind::vertex}) {
    int const i = kind == CellKind::face ? 0 : 1;
    std::vector<char> seen(fs.flag_count(), 0);
    for (Point s = 0; s < fs.flag_count(); ++s) {
      if (seen[s])
        continue;
      std::uint64_t len = 0;
      Point x = s;
      do {
        seen[x] = 1;
        ++len;
        x = fs.r(len % 2 ? i : i + 1)[x];
      } while (x != s || len % 2);
      // s is the least flag of its cell because cells are scanned in flag order
      LollipopGenerator g;
      g.kind = kind;
      g.entry = s;
      g.q = len / 2;
      Word stem = t.path_to(s);
      Word loop = Word(kind == CellKind::face ? "ab" : "bc").pow(static_cast<int>(g.q));
      g.word = stem * loop * stem.inverse();
      out.push_back(std::move(g));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// explicit word families

struct NamedWord
{
  std::string name;
  Word word;
};

struct StabilizerWordFamily
{
  Family family = Family::prism;
  int n = 0;
  std::vector<NamedWord> words;

  Word const &get(std::string const &name) const
  {
    for (auto const &w : words)
      if (w.name == name)
        return w.word;
    throw std::out_of_range("no word named " + name);
  }
  Word const &g(int k) const { return get("g_" + std::to_string(k)); }
  Word const &h(int k) const { return get("h_" + std::to_string(k)); }
  Word const &h_n() const { return h(n); }

  std::vector<Word> plain() const
  {
    std::vector<Word> out;
    for (auto const &w : words)
      out.push_back(w.word);
    return out;
  }

  StabilizerWordFamily without(std::string const &name) const
  {
    StabilizerWordFamily f = *this;
    std::erase_if(f.words, [&](NamedWord const &w) { return w.name == name; });
    return f;
  }
};

/// g_-1 = (ba)^4, g_k = cb(ab)^k c(ab)^4 c(ba)^k bc for k = 0..n-2, h_n = c(ab)^n c.
inline StabilizerWordFamily prism_family(int n)
{
  if (n < 3)
    throw std::invalid_argument("prism family needs n >= 3");
  using namespace words;
  StabilizerWordFamily f{Family::prism, n, {}};
  f.words.push_back({"g_-1", ba().pow(4)});
  for (int k = 0; k <= n - 2; ++k)
    f.words.push_back({"g_" + std::to_string(k),
                       c() * b() * ab().pow(k) * c() * ab().pow(4) * c() * ba().pow(k) * b() * c()});
  f.words.push_back({"h_" + std::to_string(n), c() * ab().pow(n) * c()});
  return f;
}

/**
 * g_-1 = (ba)^3, h_-1 = bc(ab)^3 cb, and for k = 0..n-2
 * g_k = cb(ab)^k c(ab)^3 c(ba)^k bc, h_k = cb(ab)^k cabc(ab)^3 cbac(ba)^k bc;
 * h_n = c(ab)^n c.
 */
inline StabilizerWordFamily antiprism_family(int n)
{
  if (n < 3)
    throw std::invalid_argument("antiprism family needs n >= 3");
  using namespace words;
  StabilizerWordFamily f{Family::antiprism, n, {}};
  f.words.push_back({"g_-1", ba().pow(3)});
  f.words.push_back({"h_-1", b() * c() * ab().pow(3) * c() * b()});
  for (int k = 0; k <= n - 2; ++k) {
    Word in = c() * b() * ab().pow(k);
    Word out = ba().pow(k) * b() * c();
    f.words.push_back({"g_" + std::to_string(k), in * c() * ab().pow(3) * c() * out});
    f.words.push_back({"h_" + std::to_string(k), in * Word("cabc") * ab().pow(3) * Word("cbac") * out});
  }
  f.words.push_back({"h_" + std::to_string(n), c() * ab().pow(n) * c()});
  return f;
}

struct VerificationVerdict
{
  bool generates = false;
  std::uint64_t generated_order = 0;
  std::uint64_t expected_order = 0;
  std::optional<std::string> offending_word; // a word that moves the base flag
};

/// Whether the evaluated words generate the full stabilizer of `base` in M.
inline VerificationVerdict verify_generates_stabilizer(MonodromyGroup const &m, std::vector<Word> const &ws,
                                                       Point base)
{
  VerificationVerdict v;
  v.expected_order = m.order() / m.group().orbit(base).size();
  PermGroup h(m.degree());
  for (auto const &w : ws) {
    Perm p = m.evaluate(w);
    if (p[base] != base) {
      v.offending_word = w.str();
      return v;
    }
    h.add_generator(p);
  }
  v.generated_order = h.order();
  v.generates = v.generated_order == v.expected_order;
  return v;
}

// ---------------------------------------------------------------------------
// reductions and flag-type actions

struct NamedCheck
{
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckList
{
  std::vector<NamedCheck> checks;

  bool ok() const
  {
    return std::all_of(checks.begin(), checks.end(), [](auto const &c) { return c.pass; });
  }
  void add(std::string name, bool pass, std::string detail = {})
  {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
};

using ReductionReport = CheckList;

/**
 * Word identities that hold once the extra relator is imposed, checked as
 * equalities of flag permutations. Prisms: g_k = g_{k-2}^-1 (k = 1..n-2),
 * g_-1 and g_0 commute when 4 | n. Antiprisms: g_k = h_{k-2} = g_{k-3}
 * (k = 2..n-2), g_-1, g_0, h_-1 pairwise commute when 3 | n. Both: h_n is
 * trivial exactly when 4 | n (3 | n).
 */
inline ReductionReport reduction_checks(FlagSystem const &fs, Family family)
{
  require_canonical(fs, family);
  int const n = fs.family_n();
  ReductionReport rep;
  auto ev = [&](Word const &w) { return evaluate(w, fs); };
  if (family == Family::prism) {
    auto fam = prism_family(n);
    for (int k = 1; k <= n - 2; ++k)
      rep.add("g_" + std::to_string(k) + " = g_" + std::to_string(k - 2) + "^-1",
              ev(fam.g(k)) == ev(fam.g(k - 2)).inverse());
    if (n % 4 == 0)
      rep.add("g_-1 g_0 = g_0 g_-1", commute(ev(fam.g(-1)), ev(fam.g(0))));
    bool trivial = ev(fam.h_n()).is_identity();
    rep.add("h_" + std::to_string(n) + (n % 4 == 0 ? " trivial" : " non-trivial"), trivial == (n % 4 == 0));
  } else {
    auto fam = antiprism_family(n);
    for (int k = 2; k <= n - 2; ++k) {
      auto gk = ev(fam.g(k)), hk2 = ev(fam.h(k - 2)), gk3 = ev(fam.g(k - 3));
      rep.add("g_" + std::to_string(k) + " = h_" + std::to_string(k - 2), gk == hk2);
      rep.add("h_" + std::to_string(k - 2) + " = g_" + std::to_string(k - 3), hk2 == gk3);
    }
    if (n % 3 == 0) {
      auto g1 = ev(fam.g(-1)), g0 = ev(fam.g(0)), h1 = ev(fam.h(-1));
      rep.add("g_-1 h_-1 = h_-1 g_-1", commute(g1, h1));
      rep.add("g_-1 g_0 = g_0 g_-1", commute(g1, g0));
      rep.add("h_-1 g_0 = g_0 h_-1", commute(h1, g0));
    }
    bool trivial = ev(fam.h_n()).is_identity();
    rep.add("h_" + std::to_string(n) + (n % 3 == 0 ? " trivial" : " non-trivial"), trivial == (n % 3 == 0));
  }
  return rep;
}

namespace detail {

inline bool fixes_all(Perm const &p, std::vector<Point> const &flags)
{
  return std::all_of(flags.begin(), flags.end(), [&](Point x) { return p[x] == x; });
}

// Per-flag comparison with the k-step rotation and its inverse. Flags of
// opposite handedness on one face turn in opposite senses, so each flag may
// match either. Returns the (forward, backward) match counts, or nullopt if
// some flag matches neither.
inline std::optional<std::pair<std::size_t, std::size_t>> rotation_match(FlagSystem const &fs, Perm const &p, int k,
                                                                         std::vector<Point> const &flags)
{
  auto fwd = rotation(fs, k), bwd = rotation(fs, -k);
  std::size_t nf = 0, nb = 0;
  for (Point x : flags) {
    if (p[x] == fwd[x])
      ++nf;
    else if (p[x] == bwd[x])
      ++nb;
    else
      return std::nullopt;
  }
  return std::make_pair(nf, nb);
}

} // namespace detail

/**
 * Action of the reduced stabilizer generators on the other flag types.
 * 4m-prisms: g_-1 fixes type B and rotates type C by 4 steps, g_0 fixes C
 * and rotates B. 3m-antiprisms: g_-1 fixes B and C, g_0 fixes B and D,
 * h_-1 fixes C and D; each rotates its remaining type by 3 steps. Each
 * flag may match the rotation or its inverse; the detail records how many
 * flags matched each.
 */
inline CheckList flag_type_action_checks(FlagSystem const &fs, Family family)
{
  require_canonical(fs, family);
  int const n = fs.family_n();
  auto cls = classify_flags(fs, family);
  CheckList rep;
  auto ev = [&](Word const &w) { return evaluate(w, fs); };
  auto rot = [&](std::string const &name, Perm const &p, int k, FlagType t) {
    auto m = detail::rotation_match(fs, p, k, cls.flags_of(t));
    rep.add(name + " rotates type " + static_cast<char>(t) + " by " + std::to_string(k) + " steps", m.has_value(),
            m ? "+" + std::to_string(k) + " on " + std::to_string(m->first) + " flags, -" + std::to_string(k) +
                    " on " + std::to_string(m->second)
              : "no match");
  };
  auto fix = [&](std::string const &name, Perm const &p, FlagType t) {
    rep.add(name + " fixes type " + static_cast<char>(t), detail::fixes_all(p, cls.flags_of(t)));
  };
  if (family == Family::prism) {
    if (n % 4 != 0)
      throw std::invalid_argument("flag-type action checks apply to 4m-prisms");
    auto fam = prism_family(n);
    auto g1 = ev(fam.g(-1)), g0 = ev(fam.g(0));
    fix("g_-1", g1, FlagType::B);
    rot("g_-1", g1, 4, FlagType::C);
    fix("g_0", g0, FlagType::C);
    rot("g_0", g0, 4, FlagType::B);
  } else {
    if (n % 3 != 0)
      throw std::invalid_argument("flag-type action checks apply to 3m-antiprisms");
    auto fam = antiprism_family(n);
    auto g1 = ev(fam.g(-1)), g0 = ev(fam.g(0)), h1 = ev(fam.h(-1));
    fix("g_-1", g1, FlagType::B);
    fix("g_-1", g1, FlagType::C);
    rot("g_-1", g1, 3, FlagType::D);
    fix("g_0", g0, FlagType::B);
    fix("g_0", g0, FlagType::D);
    rot("g_0", g0, 3, FlagType::C);
    fix("h_-1", h1, FlagType::C);
    fix("h_-1", h1, FlagType::D);
    rot("h_-1", h1, 3, FlagType::B);
  }
  return rep;
}

} // namespace monocover
