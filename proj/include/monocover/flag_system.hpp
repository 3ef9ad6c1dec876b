#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "perm.hpp"
#include "perm_group.hpp"

namespace monocover {

/// Input map rejected: a face, edge or vertex neighbourhood is not polyhedral.
class InvalidMap : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

enum class Family { none, prism, antiprism, platonic };

inline char const *family_name(Family f)
{
  switch (f) {
    case Family::prism: return "prism";
    case Family::antiprism: return "antiprism";
    case Family::platonic: return "platonic";
    default: return "map";
  }
}

struct FaceListMap
{
  std::vector<std::vector<int>> faces;
};

struct FVector
{
  std::uint64_t v = 0, e = 0, f = 0;

  std::int64_t euler_characteristic() const
  {
    return static_cast<std::int64_t>(v) - static_cast<std::int64_t>(e) + static_cast<std::int64_t>(f);
  }
  friend bool operator==(FVector const &, FVector const &) = default;
};

struct FlagLabel
{
  int vertex = 0;
  int edge = 0; // index into FlagSystem::edges()
  int face = 0; // index into FlagSystem::faces()

  friend auto operator<=>(FlagLabel const &, FlagLabel const &) = default;
};

using Edge = std::pair<int, int>; // sorted vertex pair

/**
 * A rank-3 map given by its flags and the three adjacency involutions.
 *
 * Systems built from face lists carry (vertex, edge, face) labels; systems
 * built directly from permutations (e.g. a Cayley-graph cover) do not.
 */
class FlagSystem
{
public:
  FlagSystem() = default;

  FlagSystem(Perm r0, Perm r1, Perm r2) : r_{std::move(r0), std::move(r1), std::move(r2)}
  {
    if (r_[1].degree() != r_[0].degree())
      throw DegreeMismatch(r_[0].degree(), r_[1].degree());
    if (r_[2].degree() != r_[0].degree())
      throw DegreeMismatch(r_[0].degree(), r_[2].degree());
  }

  std::size_t flag_count() const noexcept { return r_[0].degree(); }
  Perm const &r(int i) const { return r_.at(static_cast<std::size_t>(i)); }
  std::array<Perm, 3> const &involutions() const noexcept { return r_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::vector<FlagLabel> const &labels() const noexcept { return labels_; }
  FlagLabel const &label(Point flag) const { return labels_.at(flag); }
  std::vector<Edge> const &edges() const noexcept { return edges_; }
  std::vector<std::vector<int>> const &faces() const noexcept { return faces_; }

  Family family() const noexcept { return family_; }
  int family_n() const noexcept { return n_; }
  std::string const &name() const noexcept { return name_; }

  /// Flag index for a label triple, if present.
  std::optional<Point> find_flag(FlagLabel const &l) const
  {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || *it != l)
      return std::nullopt;
    return static_cast<Point>(it - labels_.begin());
  }

  std::optional<int> find_edge(int u, int v) const
  {
    Edge e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
      return std::nullopt;
    return static_cast<int>(it - edges_.begin());
  }

  /// Counts of orbits of <r1,r2>, <r0,r2>, <r0,r1>.
  FVector f_vector() const
  {
    return {count_orbits(1, 2), count_orbits(0, 2), count_orbits(0, 1)};
  }

  std::uint64_t count_orbits(int i, int j) const
  {
    std::vector<char> seen(flag_count(), 0);
    std::uint64_t n = 0;
    for (Point s = 0; s < flag_count(); ++s) {
      if (seen[s])
        continue;
      ++n;
      std::vector<Point> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        Point x = stack.back();
        stack.pop_back();
        for (int k : {i, j}) {
          Point y = r(k)[x];
          if (!seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
        }
      }
    }
    return n;
  }

  void set_family(Family f, int n, std::string name)
  {
    family_ = f;
    n_ = n;
    name_ = std::move(name);
  }

  friend FlagSystem from_face_list(FaceListMap const &m);

private:
  std::array<Perm, 3> r_;
  std::vector<FlagLabel> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> faces_;
  Family family_ = Family::none;
  int n_ = 0;
  std::string name_ = "map";
};

inline std::string edge_str(int u, int v)
{
  return "{" + std::to_string(std::min(u, v)) + "," + std::to_string(std::max(u, v)) + "}";
}

/**
 * Builds the flag system of a polyhedral face list.
 *
 * Flags are the incident (vertex, edge, face) triples, indexed in
 * lexicographic order of the triple; edges are indexed by their sorted
 * vertex pair. Throws InvalidMap for faces with fewer than three or
 * repeated vertices, edges not on exactly two faces, and vertices whose
 * neighbourhood is not a single cycle of at least three faces.
 */
inline FlagSystem from_face_list(FaceListMap const &m)
{
  if (m.faces.empty())
    throw InvalidMap("face list is empty");

  FlagSystem fs;
  fs.faces_ = m.faces;

  std::map<Edge, std::vector<std::pair<int, int>>> edge_faces; // edge -> (face, position)
  for (std::size_t f = 0; f < m.faces.size(); ++f) {
    auto const &face = m.faces[f];
    if (face.size() < 3)
      throw InvalidMap("face " + std::to_string(f) + " has fewer than 3 vertices");
    for (int v : face)
      if (v < 0)
        throw InvalidMap("face " + std::to_string(f) + " has a negative vertex");
    auto sorted = face;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidMap("face " + std::to_string(f) + " repeats a vertex");
    for (std::size_t i = 0; i < face.size(); ++i) {
      int u = face[i], v = face[(i + 1) % face.size()];
      edge_faces[{std::min(u, v), std::max(u, v)}].emplace_back(static_cast<int>(f), static_cast<int>(i));
    }
  }

  for (auto const &[e, fl] : edge_faces) {
    if (fl.size() != 2 || fl[0].first == fl[1].first)
      throw InvalidMap("edge " + edge_str(e.first, e.second) + " lies on " + std::to_string(fl.size()) +
                       " face(s); expected exactly 2 distinct faces");
    fs.edges_.push_back(e);
  }

  // edges_ is sorted because std::map iterates in key order
  for (std::size_t f = 0; f < m.faces.size(); ++f) {
    auto const &face = m.faces[f];
    for (std::size_t i = 0; i < face.size(); ++i) {
      int u = face[i], v = face[(i + 1) % face.size()];
      int e = *fs.find_edge(u, v);
      fs.labels_.push_back({u, e, static_cast<int>(f)});
      fs.labels_.push_back({v, e, static_cast<int>(f)});
    }
  }
  std::sort(fs.labels_.begin(), fs.labels_.end());

  std::size_t const nflags = fs.labels_.size();
  std::vector<Point> r0(nflags), r1(nflags), r2(nflags);
  for (std::size_t x = 0; x < nflags; ++x) {
    auto const &l = fs.labels_[x];
    auto const &[eu, ev] = fs.edges_[static_cast<std::size_t>(l.edge)];
    int other_v = l.vertex == eu ? ev : eu;
    r0[x] = *fs.find_flag({other_v, l.edge, l.face});

    auto const &face = m.faces[static_cast<std::size_t>(l.face)];
    auto pos = static_cast<std::size_t>(std::find(face.begin(), face.end(), l.vertex) - face.begin());
    int prev = face[(pos + face.size() - 1) % face.size()];
    int next = face[(pos + 1) % face.size()];
    int e_prev = *fs.find_edge(prev, l.vertex), e_next = *fs.find_edge(l.vertex, next);
    r1[x] = *fs.find_flag({l.vertex, l.edge == e_prev ? e_next : e_prev, l.face});

    auto const &fl = edge_faces.at(fs.edges_[static_cast<std::size_t>(l.edge)]);
    int other_f = fl[0].first == l.face ? fl[1].first : fl[0].first;
    r2[x] = *fs.find_flag({l.vertex, l.edge, other_f});
  }
  fs.r_ = {Perm(std::move(r0)), Perm(std::move(r1)), Perm(std::move(r2))};

  // each vertex neighbourhood must be one <r1,r2>-cycle through >= 3 faces
  std::map<int, std::size_t> flags_at_vertex;
  for (auto const &l : fs.labels_)
    ++flags_at_vertex[l.vertex];
  std::vector<char> seen(nflags, 0);
  for (Point s = 0; s < nflags; ++s) {
    if (seen[s])
      continue;
    std::size_t len = 0;
    for (Point x = s; !seen[x];) {
      seen[x] = 1;
      ++len;
      x = fs.r_[1][x];
      if (!seen[x]) {
        seen[x] = 1;
        ++len;
        x = fs.r_[2][x];
      }
    }
    int v = fs.labels_[s].vertex;
    if (len != flags_at_vertex[v])
      throw InvalidMap("vertex figure of vertex " + std::to_string(v) + " splits into multiple cycles");
    if (len < 6)
      throw InvalidMap("vertex " + std::to_string(v) + " lies on fewer than 3 faces");
  }
  return fs;
}

inline FaceListMap prism_faces(int n)
{
  if (n < 3)
    throw std::invalid_argument("prism needs n >= 3");
  FaceListMap m;
  std::vector<int> bottom, top;
  for (int i = 0; i < n; ++i) {
    bottom.push_back(i);
    top.push_back(n + i);
  }
  m.faces.push_back(bottom);
  m.faces.push_back(top);
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    m.faces.push_back({i, j, n + j, n + i});
  }
  return m;
}

/// Top vertex n+i sits above bottom vertices i and i+1.
inline FaceListMap antiprism_faces(int n)
{
  if (n < 3)
    throw std::invalid_argument("antiprism needs n >= 3");
  FaceListMap m;
  std::vector<int> bottom, top;
  for (int i = 0; i < n; ++i) {
    bottom.push_back(i);
    top.push_back(n + i);
  }
  m.faces.push_back(bottom);
  m.faces.push_back(top);
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    m.faces.push_back({i, j, n + i});
    m.faces.push_back({n + i, j, n + j});
  }
  return m;
}

inline FlagSystem prism(int n)
{
  auto fs = from_face_list(prism_faces(n));
  fs.set_family(Family::prism, n, "prism(" + std::to_string(n) + ")");
  return fs;
}

inline FlagSystem antiprism(int n)
{
  auto fs = from_face_list(antiprism_faces(n));
  fs.set_family(Family::antiprism, n, "antiprism(" + std::to_string(n) + ")");
  return fs;
}

/// Face list of the dual map: one face per vertex, listing the faces around it in cyclic order.
inline FaceListMap dual_face_list(FlagSystem const &fs)
{
  if (!fs.has_labels())
    throw std::invalid_argument("dual_face_list needs a labelled flag system");
  FaceListMap d;
  std::vector<char> seen(fs.flag_count(), 0);
  for (Point s = 0; s < fs.flag_count(); ++s) {
    if (seen[s])
      continue;
    std::vector<int> cyc;
    Point x = s;
    do {
      seen[x] = 1;
      seen[fs.r(1)[x]] = 1;
      cyc.push_back(fs.label(x).face);
      x = fs.r(2)[fs.r(1)[x]];
    } while (x != s);
    d.faces.push_back(std::move(cyc));
  }
  return d;
}

inline std::vector<std::string> const &platonic_names()
{
  static std::vector<std::string> const names{"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"};
  return names;
}

inline FaceListMap platonic_faces(std::string const &name)
{
  if (name == "tetrahedron")
    return {{{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}}};
  if (name == "cube")
    return prism_faces(4);
  if (name == "octahedron")
    return antiprism_faces(3);
  if (name == "icosahedron") {
    // pentagonal antiprism capped by two pyramids (apexes 10 and 11)
    auto m = antiprism_faces(5);
    m.faces.erase(m.faces.begin(), m.faces.begin() + 2);
    for (int i = 0; i < 5; ++i) {
      int j = (i + 1) % 5;
      m.faces.push_back({10, j, i});
      m.faces.push_back({11, 5 + i, 5 + j});
    }
    return m;
  }
  if (name == "dodecahedron")
    return dual_face_list(from_face_list(platonic_faces("icosahedron")));
  throw std::invalid_argument("unknown Platonic solid: " + name);
}

inline FlagSystem platonic(std::string const &name)
{
  auto fs = from_face_list(platonic_faces(name));
  fs.set_family(Family::platonic, 0, name);
  return fs;
}

// ---------------------------------------------------------------------------
// validation

struct ValidationCheck
{
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport
{
  std::vector<ValidationCheck> checks;

  bool ok() const
  {
    return std::all_of(checks.begin(), checks.end(), [](auto const &c) { return c.pass; });
  }
  bool passed(std::string const &name) const
  {
    for (auto const &c : checks)
      if (c.name == name)
        return c.pass;
    throw std::out_of_range("no validation check named " + name);
  }
};

inline ValidationReport validate(FlagSystem const &fs)
{
  ValidationReport rep;
  auto const n = fs.flag_count();

  bool invol = true;
  std::string detail;
  for (int i = 0; i < 3; ++i) {
    auto const &r = fs.r(i);
    if (!(r * r).is_identity() || r.fixed_point_count() != 0) {
      invol = false;
      detail += "r" + std::to_string(i) + " ";
    }
  }
  rep.checks.push_back({"fixed-point-free involution", invol, detail});

  Perm r02 = fs.r(0) * fs.r(2);
  bool diamond = (r02 * r02).is_identity() && r02.fixed_point_count() == 0;
  rep.checks.push_back({"(r0 r2)^2 = id, fixed-point free", diamond, ""});

  bool transitive = true;
  if (n > 0) {
    std::vector<Perm> gens{fs.r(0), fs.r(1), fs.r(2)};
    std::vector<char> seen(n, 0);
    std::vector<Point> q{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (auto const &r : gens)
        if (!seen[r[q[i]]]) {
          seen[r[q[i]]] = 1;
          q.push_back(r[q[i]]);
        }
    transitive = q.size() == n;
  }
  rep.checks.push_back({"transitive", transitive, ""});

  bool cells = true;
  bool labels_ok = true;
  if (fs.has_labels()) {
    // flags sharing a vertex (face) label must form a single <r1,r2> (<r0,r1>) orbit
    auto single_orbit = [&](int i, int j, auto key) {
      std::map<int, std::size_t> total, orbits;
      for (auto const &l : fs.labels())
        ++total[key(l)];
      std::vector<char> seen(n, 0);
      for (Point s = 0; s < n; ++s) {
        if (seen[s])
          continue;
        ++orbits[key(fs.label(s))];
        std::vector<Point> st{s};
        seen[s] = 1;
        while (!st.empty()) {
          Point x = st.back();
          st.pop_back();
          for (int k : {i, j})
            if (!seen[fs.r(k)[x]]) {
              seen[fs.r(k)[x]] = 1;
              st.push_back(fs.r(k)[x]);
            }
        }
      }
      for (auto const &[k, c] : orbits)
        if (c != 1)
          return false;
      return true;
    };
    cells = single_orbit(1, 2, [](FlagLabel const &l) { return l.vertex; }) &&
            single_orbit(0, 1, [](FlagLabel const &l) { return l.face; });

    for (Point x = 0; x < n && labels_ok; ++x) {
      auto const &l = fs.label(x);
      auto const &l0 = fs.label(fs.r(0)[x]);
      auto const &l1 = fs.label(fs.r(1)[x]);
      auto const &l2 = fs.label(fs.r(2)[x]);
      labels_ok = l0.vertex != l.vertex && l0.edge == l.edge && l0.face == l.face && l1.vertex == l.vertex &&
                  l1.edge != l.edge && l1.face == l.face && l2.vertex == l.vertex && l2.edge == l.edge &&
                  l2.face != l.face;
    }
  }
  rep.checks.push_back({"single-cycle vertex figures and faces", cells, fs.has_labels() ? "" : "unlabelled"});
  rep.checks.push_back({"adjacency changes exactly one rank", labels_ok, fs.has_labels() ? "" : "unlabelled"});
  return rep;
}

// ---------------------------------------------------------------------------
// isomorphism of flag graphs

/// Whether two flag systems are isomorphic as edge-labelled graphs (both must be connected).
inline bool is_isomorphic(FlagSystem const &a, FlagSystem const &b)
{
  if (a.flag_count() != b.flag_count())
    return false;
  auto const n = a.flag_count();
  if (n == 0)
    return true;
  for (Point target = 0; target < n; ++target) {
    std::vector<std::ptrdiff_t> map(n, -1);
    std::vector<Point> q{0};
    map[0] = target;
    bool ok = true;
    for (std::size_t i = 0; i < q.size() && ok; ++i) {
      Point x = q[i];
      for (int k = 0; k < 3 && ok; ++k) {
        Point y = a.r(k)[x];
        Point img = b.r(k)[static_cast<Point>(map[x])];
        if (map[y] < 0) {
          map[y] = img;
          q.push_back(y);
        } else if (static_cast<Point>(map[y]) != img) {
          ok = false;
        }
      }
    }
    if (ok && q.size() == n) {
      std::vector<char> hit(n, 0);
      for (auto m : map)
        hit[static_cast<std::size_t>(m)] = 1;
      if (std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; }))
        return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// prism / antiprism structure

enum class FlagType : char { A = 'A', B = 'B', C = 'C', D = 'D' };

struct FlagTypeClassification
{
  std::vector<FlagType> type_of;

  std::vector<Point> flags_of(FlagType t) const
  {
    std::vector<Point> out;
    for (std::size_t i = 0; i < type_of.size(); ++i)
      if (type_of[i] == t)
        out.push_back(static_cast<Point>(i));
    return out;
  }
  std::size_t count(FlagType t) const
  {
    return static_cast<std::size_t>(std::count(type_of.begin(), type_of.end(), t));
  }
};

inline void require_canonical(FlagSystem const &fs, Family family)
{
  if (fs.family() != family || !fs.has_labels())
    throw std::invalid_argument(std::string("flag system is not a canonical ") + family_name(family));
}

/**
 * Prism: A = square face with an edge on an n-gon, B = edge between two
 * squares, C = flag on an n-gon. Antiprism: A = triangle with an edge on an
 * n-gon, B = its 1-adjacent flags, C = 2-adjacent to B, D = flags on an n-gon.
 */
inline FlagTypeClassification classify_flags(FlagSystem const &fs, Family family)
{
  require_canonical(fs, family);
  int const n = fs.family_n();
  auto is_base_edge = [&](int e) {
    auto const &[u, v] = fs.edges()[static_cast<std::size_t>(e)];
    return (u < n) == (v < n);
  };
  FlagTypeClassification cls;
  cls.type_of.resize(fs.flag_count());
  for (Point x = 0; x < fs.flag_count(); ++x) {
    auto const &l = fs.label(x);
    FlagType t;
    if (family == Family::prism) {
      if (l.face < 2)
        t = FlagType::C;
      else
        t = is_base_edge(l.edge) ? FlagType::A : FlagType::B;
    } else {
      if (l.face < 2) {
        t = FlagType::D;
      } else if (is_base_edge(l.edge)) {
        t = FlagType::A;
      } else {
        // B when the flag's vertex lies on the triangle's base edge, C at the apex
        auto const &tri = fs.faces()[static_cast<std::size_t>(l.face)];
        int apex_side = 0;
        for (int v : tri)
          apex_side += v < n ? 1 : -1;
        bool apex_is_bottom = apex_side < 0; // two top vertices, one bottom
        bool vertex_is_bottom = l.vertex < n;
        t = vertex_is_bottom == apex_is_bottom ? FlagType::C : FlagType::B;
      }
    }
    cls.type_of[x] = t;
  }
  return cls;
}

inline Point base_flag(FlagSystem const &fs, Family family)
{
  auto a = classify_flags(fs, family).flags_of(FlagType::A);
  return a.front();
}

/// Flag permutation induced by a vertex relabelling that is a map automorphism.
inline Perm induced_flag_perm(FlagSystem const &fs, std::vector<int> const &vertex_map)
{
  std::map<std::vector<int>, int> face_index;
  for (std::size_t f = 0; f < fs.faces().size(); ++f) {
    auto key = fs.faces()[f];
    std::sort(key.begin(), key.end());
    face_index[key] = static_cast<int>(f);
  }
  auto vmap = [&](int v) { return vertex_map.at(static_cast<std::size_t>(v)); };
  std::vector<Point> img(fs.flag_count());
  for (Point x = 0; x < fs.flag_count(); ++x) {
    auto const &l = fs.label(x);
    auto const &[u, v] = fs.edges()[static_cast<std::size_t>(l.edge)];
    auto e = fs.find_edge(vmap(u), vmap(v));
    std::vector<int> key;
    for (int w : fs.faces()[static_cast<std::size_t>(l.face)])
      key.push_back(vmap(w));
    std::sort(key.begin(), key.end());
    auto f = face_index.find(key);
    if (!e || f == face_index.end())
      throw std::invalid_argument("vertex map is not an automorphism");
    auto y = fs.find_flag({vmap(l.vertex), *e, f->second});
    if (!y)
      throw std::invalid_argument("vertex map is not an automorphism");
    img[x] = *y;
  }
  return Perm(std::move(img));
}

/// Rotation by k steps about the axis; bottom vertex i goes to i+k mod n.
inline Perm rotation(FlagSystem const &fs, int k)
{
  if (!fs.has_labels() || (fs.family() != Family::prism && fs.family() != Family::antiprism))
    throw std::invalid_argument("rotation needs a canonical prism or antiprism");
  int const n = fs.family_n();
  int const s = ((k % n) + n) % n;
  std::vector<int> vm(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    vm[static_cast<std::size_t>(i)] = (i + s) % n;
    vm[static_cast<std::size_t>(n + i)] = n + (i + s) % n;
  }
  return induced_flag_perm(fs, vm);
}

} // namespace monocover
