#pragma once

#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "covers.hpp"
#include "json_io.hpp"
#include "monodromy.hpp"
#include "stabilizer_trees.hpp"

namespace monocover {

inline constexpr char const *tool_version = "0.1.0";
inline constexpr int report_schema = 1;

struct RunConfig
{
  std::size_t coset_cap = default_coset_cap;
  std::uint64_t enum_cap = default_enumeration_cap;
};

enum class Verdict { pass, fail, cap };

inline char const *verdict_name(Verdict v)
{
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "cap_exceeded";
  }
}

/// One check. A null `expected` marks an informational value that always passes.
struct Record
{
  std::string name;
  std::string anchor;
  ordered_json expected;
  ordered_json computed;
  Verdict verdict = Verdict::pass;
};

struct ReportDocument
{
  std::string command;
  ordered_json input;
  RunConfig config;
  ordered_json summary = ordered_json::object();
  std::vector<Record> records;
  ordered_json data = ordered_json::object();

  /// Compares computed with expected.
  void add(std::string name, std::string anchor, ordered_json expected, ordered_json computed)
  {
    Verdict v = expected.is_null() || expected == computed ? Verdict::pass : Verdict::fail;
    records.push_back({std::move(name), std::move(anchor), std::move(expected), std::move(computed), v});
  }
  void check(std::string name, std::string anchor, bool ok) { add(std::move(name), std::move(anchor), true, ok); }
  void cap(std::string name, std::string anchor, ordered_json expected)
  {
    records.push_back({std::move(name), std::move(anchor), std::move(expected), nullptr, Verdict::cap});
  }

  bool any(Verdict v) const
  {
    return std::any_of(records.begin(), records.end(), [v](Record const &r) { return r.verdict == v; });
  }
  /// pass iff every record passes; fail outranks cap_exceeded.
  Verdict overall() const { return any(Verdict::fail) ? Verdict::fail : any(Verdict::cap) ? Verdict::cap : Verdict::pass; }
  int exit_code() const
  {
    switch (overall()) {
      case Verdict::pass: return 0;
      case Verdict::fail: return 1;
      default: return 3;
    }
  }
};

inline ordered_json to_json(ReportDocument const &doc)
{
  ordered_json j;
  j["schema"] = report_schema;
  j["tool"] = "monocover";
  j["version"] = tool_version;
  j["command"] = doc.command;
  j["input"] = doc.input;
  j["config"] = {{"coset_cap", doc.config.coset_cap}, {"enum_cap", doc.config.enum_cap}};
  j["summary"] = doc.summary;
  j["records"] = ordered_json::array();
  for (auto const &r : doc.records)
    j["records"].push_back({{"name", r.name},
                            {"anchor", r.anchor},
                            {"expected", r.expected},
                            {"computed", r.computed},
                            {"verdict", verdict_name(r.verdict)}});
  if (!doc.data.empty())
    j["data"] = doc.data;
  j["verdict"] = verdict_name(doc.overall());
  return j;
}

inline std::string render_text(ReportDocument const &doc)
{
  std::ostringstream os;
  os << "monocover " << tool_version << " " << doc.command << " " << doc.input.value("name", std::string("map"))
     << "\n";
  for (auto const &[k, v] : doc.summary.items())
    os << "  " << k << " = " << v.dump() << "\n";
  for (auto const &r : doc.records) {
    std::string tag = r.verdict == Verdict::pass ? "PASS" : r.verdict == Verdict::fail ? "FAIL" : "CAP ";
    os << tag << "  " << r.name << ": " << r.computed.dump();
    if (!r.expected.is_null() && r.expected != true)
      os << " (expected " << r.expected.dump() << ")";
    os << "  [" << r.anchor << "]\n";
  }
  if (doc.data.contains("words")) {
    os << "words:\n";
    for (auto const &w : doc.data["words"])
      os << "  " << w.get<std::string>() << "\n";
  }
  if (doc.data.contains("lollipops")) {
    os << "lollipops:\n";
    for (auto const &l : doc.data["lollipops"])
      os << "  " << l["cell"].get<std::string>() << " q=" << l["q"].get<std::uint64_t>() << " "
         << l["word"].get<std::string>() << "\n";
  }
  if (doc.data.contains("family")) {
    os << "family words:\n";
    for (auto const &w : doc.data["family"])
      os << "  " << w["name"].get<std::string>() << " = " << w["word"].get<std::string>() << "\n";
  }
  os << "overall: " << verdict_name(doc.overall()) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// shared analysis

namespace detail {

inline bool is_family(FlagSystem const &fs)
{
  return fs.family() == Family::prism || fs.family() == Family::antiprism;
}

inline ordered_json input_json(FlagSystem const &fs)
{
  ordered_json j;
  j["kind"] = fs.family() == Family::none ? "map" : family_name(fs.family());
  if (is_family(fs))
    j["n"] = fs.family_n();
  j["name"] = fs.name();
  j["flag_count"] = fs.flag_count();
  return j;
}

inline ReportDocument new_document(std::string command, FlagSystem const &fs, RunConfig const &cfg)
{
  ReportDocument doc;
  doc.command = std::move(command);
  doc.input = input_json(fs);
  doc.config = cfg;
  return doc;
}

/// The presentation Mon should match: the minimal cover for prisms and antiprisms, [p,q] for Platonic solids.
inline std::optional<Presentation> expected_presentation(FlagSystem const &fs, SchlafliType st)
{
  if (is_family(fs))
    return minimal_cover_presentation(fs.family(), fs.family_n());
  if (fs.family() == Family::platonic)
    return coxeter_plus(static_cast<int>(st.p), static_cast<int>(st.q));
  return std::nullopt;
}

inline std::string family_word(Family f) { return f == Family::prism ? "prism" : "antiprism"; }

inline std::string anchor_order(Family f)
{
  return f == Family::prism ? "minimal regular cover of the n-prism has order 48m^3, m = lcm(4,n)/4"
                            : "minimal regular cover of the n-antiprism has order 48m^4, m = lcm(3,n)/3";
}

inline std::string anchor_presentation(Family f)
{
  return f == Family::prism ? "minimal cover is [lcm(4,n),3] subject to (c(ab)^2c(ab)^3)^2 = id"
                            : "minimal cover is [lcm(3,n),4] subject to (c(ab)^2cbc(ab)^2)^2 = id";
}

inline std::string anchor_topology(Family f)
{
  return f == Family::prism ? "prism cover lies on an orientable surface of genus (2m-3)m^2+1"
                            : "antiprism cover lies on an orientable surface of genus 3m^4-4m^3+1";
}

struct Analysis
{
  MonodromyGroup mon;
  SchlafliType schlafli;
  std::optional<Presentation> presentation;
  std::optional<MatchReport> match;
  Topology topology;
  FVector cover;
};

inline Analysis analyse(FlagSystem const &fs, RunConfig const &cfg)
{
  Analysis a;
  a.mon = monodromy_group(fs);
  a.schlafli = schlafli_type(a.mon);
  a.presentation = expected_presentation(fs, a.schlafli);
  if (a.presentation)
    a.match = match_presentation(*a.presentation, a.mon, cfg.coset_cap);
  bool matched = a.match && a.match->isomorphic;
  a.topology = euler_genus(a.mon, matched ? a.presentation : std::nullopt, cfg.enum_cap);
  a.cover = cover_f_vector(a.mon);
  return a;
}

inline void add_summary(ReportDocument &doc, FlagSystem const &fs, Analysis const &a)
{
  doc.summary["flag_count"] = fs.flag_count();
  doc.summary["group_order"] = a.mon.order();
  doc.summary["schlafli_type"] = {a.schlafli.p, a.schlafli.q};
}

inline void add_topology(ReportDocument &doc, FlagSystem const &fs, Analysis const &a)
{
  std::optional<ClosedForm> cf;
  if (is_family(fs))
    cf = closed_form(fs.family(), fs.family_n());
  bool const platonic = fs.family() == Family::platonic;
  std::string const anchor = cf ? anchor_topology(fs.family()) : "regular map of a polyhedron lies on the sphere";

  ordered_json exp_f = cf ? to_json(cf->f_vector) : platonic ? to_json(fs.f_vector()) : ordered_json();
  doc.add("cover_f_vector", cf ? "cover f-vector counts cosets of the parabolic subgroups" : anchor, exp_f,
          to_json(a.cover));
  ordered_json exp_chi = cf ? ordered_json(cf->euler_characteristic) : platonic ? ordered_json(2) : ordered_json();
  doc.add("euler_characteristic", anchor, exp_chi, a.topology.euler_characteristic);

  ordered_json exp_or = cf || platonic ? ordered_json(true) : ordered_json();
  if (a.topology.orientable)
    doc.add("orientable", anchor, exp_or, *a.topology.orientable);
  else
    doc.cap("orientable", anchor, exp_or);
  ordered_json exp_genus = cf ? ordered_json(cf->genus) : platonic ? ordered_json(0) : ordered_json();
  if (a.topology.genus)
    doc.add(*a.topology.orientable ? "genus" : "nonorientable_genus", anchor,
            *a.topology.orientable ? exp_genus : ordered_json(), *a.topology.genus);
  else
    doc.cap("genus", anchor, exp_genus);
  doc.data["orientability_method"] = a.topology.orientability_method;
}

inline void add_match(ReportDocument &doc, FlagSystem const &fs, Analysis const &a)
{
  if (!a.match)
    return;
  std::string const anchor = is_family(fs) ? anchor_presentation(fs.family())
                                           : "monodromy group of a regular polyhedron is the Coxeter group [p,q]";
  doc.data["presentation"] = to_json(*a.presentation);
  doc.check("relators_hold", anchor, a.match->relators_hold);
  if (a.match->order_determined)
    doc.add("presented_order", anchor, a.mon.order(), a.match->presented_order);
  else
    doc.cap("presented_order", anchor, a.mon.order());
}

inline void add_stabilizer_generators(ReportDocument &doc, FlagSystem const &fs, MonodromyGroup const &mon,
                                      Point root, TreeStrategy strategy, bool keep_words)
{
  auto t = spanning_tree(fs, root, strategy);
  std::string const s = strategy_name(strategy);
  doc.add("tree_edges[" + s + "]", "spanning tree of the flag graph has one edge fewer than flags",
          fs.flag_count() - 1, t.edge_count());
  auto sg = schreier_generators(fs, t);
  auto v = verify_generates_stabilizer(mon, sg, root);
  doc.add("schreier_generators[" + s + "]", "non-tree edges of a spanning tree give stabilizer generators",
          v.expected_order, v.offending_word ? ordered_json(*v.offending_word) : ordered_json(v.generated_order));
  if (keep_words) {
    doc.data["words"] = ordered_json::array();
    for (auto const &w : sg)
      doc.data["words"].push_back(w.str());
  }
  if (fs.f_vector().euler_characteristic() != 2)
    return;
  auto lp = lollipop_generators(fs, t);
  std::vector<Word> lw;
  for (auto const &g : lp)
    lw.push_back(g.word);
  auto lv = verify_generates_stabilizer(mon, lw, root);
  doc.add("lollipop_generators[" + s + "]", "lollipops around faces and vertices generate the stabilizer of a sphere map",
          lv.expected_order, lv.offending_word ? ordered_json(*lv.offending_word) : ordered_json(lv.generated_order));
  if (keep_words) {
    doc.data["lollipops"] = ordered_json::array();
    for (auto const &g : lp)
      doc.data["lollipops"].push_back({{"cell", g.kind == CellKind::face ? "face" : "vertex"},
                                       {"entry", g.entry},
                                       {"q", g.q},
                                       {"word", g.word.str()}});
  }
}

} // namespace detail

/// Orders, f-vectors, Euler characteristic, genus and the closed-form comparison.
inline ReportDocument report_document(FlagSystem const &fs, RunConfig const &cfg = {})
{
  auto doc = detail::new_document("report", fs, cfg);
  auto a = detail::analyse(fs, cfg);
  detail::add_summary(doc, fs, a);
  bool const fam = detail::is_family(fs);
  Family const f = fs.family();
  int const n = fs.family_n();

  doc.add("flag_count", "four flags per edge", 4 * fs.f_vector().e, fs.flag_count());
  ordered_json exp_map_f;
  if (f == Family::prism)
    exp_map_f = ordered_json::array({2 * n, 3 * n, n + 2});
  else if (f == Family::antiprism)
    exp_map_f = ordered_json::array({2 * n, 4 * n, 2 * n + 2});
  doc.add("map_f_vector", "vertices, edges and faces of the map", exp_map_f, to_json(fs.f_vector()));

  ordered_json exp_order;
  std::string anchor_order = "monodromy group of a regular map acts regularly on flags";
  if (fam) {
    exp_order = closed_form(f, n).order;
    anchor_order = detail::anchor_order(f);
  } else if (f == Family::platonic) {
    exp_order = fs.flag_count();
  }
  doc.add("group_order", anchor_order, exp_order, a.mon.order());

  ordered_json exp_type;
  if (f == Family::prism)
    exp_type = ordered_json::array({std::lcm(4, n), 3});
  else if (f == Family::antiprism)
    exp_type = ordered_json::array({std::lcm(3, n), 4});
  doc.add("schlafli_type", "Schlafli type of the cover is the lcm of co-degrees and degrees", exp_type,
          ordered_json::array({a.schlafli.p, a.schlafli.q}));
  doc.check("string_condition", "monodromy group of a polyhedron is a string C-group",
            string_condition(a.mon, cfg.enum_cap));
  detail::add_topology(doc, fs, a);
  return doc;
}

/// The full verification suite for the map.
inline ReportDocument verify_document(FlagSystem const &fs, RunConfig const &cfg = {})
{
  auto doc = detail::new_document("verify", fs, cfg);
  auto a = detail::analyse(fs, cfg);
  detail::add_summary(doc, fs, a);
  bool const fam = detail::is_family(fs);
  Family const f = fs.family();
  int const n = fs.family_n();

  for (auto const &c : validate(fs).checks)
    doc.check("valid: " + c.name, "flag graph of a polyhedron", c.pass);
  doc.check("transitive_order", "monodromy group acts transitively on flags", a.mon.order() % fs.flag_count() == 0);
  doc.check("string_condition", "monodromy group of a polyhedron is a string C-group",
            string_condition(a.mon, cfg.enum_cap));
  FVector const &cv = a.cover;
  doc.check("cover_regularity", "2e = p f = q v on the regular cover",
            2 * cv.e == a.schlafli.p * cv.f && 2 * cv.e == a.schlafli.q * cv.v);

  if (fam) {
    Word rel = f == Family::prism ? prism_relator() : antiprism_relator();
    std::string const anchor = detail::anchor_presentation(f);
    doc.check("relator_is_identity", anchor, evaluate(rel, fs).is_identity());
    if (a.mon.order() != fs.flag_count()) {
      Word root(rel.str().substr(0, rel.size() / 2));
      doc.check("unsquared_relator_nontrivial", "relator lies in the core but its square root does not",
                !evaluate(root, fs).is_identity());
    }
    doc.add("group_order", detail::anchor_order(f), closed_form(f, n).order, a.mon.order());
  }
  detail::add_match(doc, fs, a);
  detail::add_topology(doc, fs, a);

  Point base = fam ? base_flag(fs, f) : 0;
  detail::add_stabilizer_generators(doc, fs, a.mon, base, TreeStrategy::bfs, false);
  if (!fam)
    return doc;

  // explicit word families and their identities
  auto family = f == Family::prism ? prism_family(n) : antiprism_family(n);
  auto v = verify_generates_stabilizer(a.mon, family.plain(), base);
  doc.add(detail::family_word(f) + "_family_generates",
          f == Family::prism ? "flag stabilizer of a type-A flag is generated by g_k and h_n"
                             : "flag stabilizer of a type-A flag is generated by g_k, h_k and h_n",
          v.expected_order, v.offending_word ? ordered_json(*v.offending_word) : ordered_json(v.generated_order));
  std::string const red_anchor =
      f == Family::prism ? "g_k Cl* = g_{k-2}^-1 Cl*" : "g_k Cl* = h_{k-2} Cl* = g_{k-3} Cl*";
  for (auto const &c : reduction_checks(fs, f).checks)
    doc.check("reduction: " + c.name, red_anchor, c.pass);
  int const d = f == Family::prism ? 4 : 3;
  if (n % d == 0) {
    for (auto const &c : flag_type_action_checks(fs, f).checks)
      doc.add("flag_type: " + c.name, "action of the stabilizer words on flag types", true,
              c.pass ? ordered_json(true) : ordered_json(c.detail));
    auto s = f == Family::prism ? prism_structure(n) : antiprism_structure(n);
    std::string const anchor = f == Family::prism ? "normal subgroup Z_m^3 with quotient B3"
                                                  : "normal subgroup Z_m^4 with quotient B3";
    int const k = f == Family::prism ? 3 : 4;
    doc.check("structure: generators have order m", anchor, s.generator_orders_ok);
    doc.check("structure: abelian", anchor, s.abelian_ok);
    doc.add("structure: subgroup order", anchor, detail::ipow(static_cast<std::uint64_t>(s.m), k), s.subgroup_order);
    doc.check("structure: generators independent", anchor, s.independent_ok);
    doc.check("structure: normal", anchor, s.normal_subgroup_ok);
    doc.add("structure: quotient order", anchor, 48, s.quotient_order);
    doc.check("structure: quotient is B3", anchor, s.quotient_is_B3);
    if (s.central_ok)
      doc.check("structure: (abc)^{3m} central", "(abc)^{3m} lies in the centre", *s.central_ok);
  }
  bool coincides = f == Family::prism ? n % 4 != 0 : n % 3 != 0;
  if (coincides) {
    auto c = coincidence_check(f, n, cfg.coset_cap);
    std::vector<int> ns;
    for (auto const &m : c.members)
      ns.push_back(m.n);
    std::string const anchor = f == Family::prism ? "minimal covers of the n-prism and 2n-prism coincide"
                                                  : "minimal covers of the n-antiprism and 3n-antiprism coincide";
    if (!c.presented_order) {
      doc.cap("coincidence", anchor, ordered_json(ns));
    } else {
      ordered_json comp = ordered_json::array();
      for (auto const &m : c.members)
        comp.push_back({{"n", m.n}, {"group_order", m.group_order}, {"isomorphic", m.match.isomorphic}});
      doc.add("coincidence", anchor, true, c.pass);
      doc.data["coincidence"] = {{"presentation", c.presentation}, {"order", *c.presented_order}, {"members", comp}};
    }
  }
  return doc;
}

inline TreeStrategy paper_strategy(FlagSystem const &fs)
{
  if (fs.family() == Family::prism)
    return TreeStrategy::prism_paper;
  if (fs.family() == Family::antiprism)
    return TreeStrategy::antiprism_paper;
  throw std::invalid_argument("the paper tree exists only for prisms and antiprisms");
}

/// Generator words for the stabilizer of the base flag and their verdicts.
inline ReportDocument stabilizer_document(FlagSystem const &fs, TreeStrategy strategy, RunConfig const &cfg = {})
{
  auto doc = detail::new_document("stabilizer", fs, cfg);
  auto mon = monodromy_group(fs);
  doc.summary["flag_count"] = fs.flag_count();
  doc.summary["group_order"] = mon.order();
  bool const fam = detail::is_family(fs);
  Point base = fam ? base_flag(fs, fs.family()) : 0;
  doc.summary["base_flag"] = base;
  doc.summary["stabilizer_order"] = mon.order() / fs.flag_count();
  doc.data["tree"] = strategy_name(strategy);
  detail::add_stabilizer_generators(doc, fs, mon, base, strategy, true);
  if (fam) {
    auto family = fs.family() == Family::prism ? prism_family(fs.family_n()) : antiprism_family(fs.family_n());
    auto v = verify_generates_stabilizer(mon, family.plain(), base);
    doc.add(detail::family_word(fs.family()) + "_family_generates",
            "flag stabilizer of a type-A flag is generated by the explicit words", v.expected_order,
            v.offending_word ? ordered_json(*v.offending_word) : ordered_json(v.generated_order));
    doc.data["family"] = ordered_json::array();
    for (auto const &w : family.words)
      doc.data["family"].push_back({{"name", w.name}, {"word", w.word.str()}});
  }
  return doc;
}

} // namespace monocover
