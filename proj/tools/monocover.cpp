#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <monocover/report.hpp>

using namespace monocover;

namespace {

enum Exit { ok = 0, verification_failed = 1, invalid_input = 2, cap_hit = 3 };

struct Options
{
  RunConfig cfg;
  bool json = false;
  std::string tree = "bfs";
  int n = 0;
  std::string name;
  std::string file;
};

FlagSystem load_subject(std::string const &kind, Options const &o)
{
  if (kind == "prism")
    return prism(o.n);
  if (kind == "antiprism")
    return antiprism(o.n);
  if (kind == "platonic")
    return platonic(o.name);
  auto fs = from_face_list(load_face_list(o.file));
  fs.set_family(Family::none, 0, o.file);
  return fs;
}

TreeStrategy tree_strategy(std::string const &t, FlagSystem const &fs)
{
  if (t == "bfs")
    return TreeStrategy::bfs;
  if (t == "dfs")
    return TreeStrategy::dfs;
  return paper_strategy(fs);
}

int run(std::string const &kind, std::string const &verb, Options const &o)
{
  auto fs = load_subject(kind, o);
  ReportDocument doc;
  if (verb == "report")
    doc = report_document(fs, o.cfg);
  else if (verb == "verify")
    doc = verify_document(fs, o.cfg);
  else
    doc = stabilizer_document(fs, tree_strategy(o.tree, fs), o.cfg);
  if (kind == "map")
    doc.input["file"] = o.file;
  if (o.json)
    std::cout << to_json(doc).dump(2) << "\n";
  else
    std::cout << render_text(doc);
  return doc.exit_code();
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Monodromy groups and minimal regular covers of polyhedra", "monocover"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version);
  Options o;
  app.add_flag("--json", o.json, "Write the report as JSON")->configurable(false);
  app.add_option("--coset-cap", o.cfg.coset_cap, "Live coset limit for coset enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--enum-cap", o.cfg.enum_cap, "Element limit for explicit group enumeration")
      ->check(CLI::PositiveNumber);

  std::string kind, verb;
  auto add_subject = [&](std::string const &name, std::string const &desc) {
    auto *sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    sub->require_subcommand(1);
    if (name == "prism" || name == "antiprism")
      sub->add_option("n", o.n, "Number of sides of the base polygon")->required()->check(CLI::Range(3, 100000));
    else if (name == "platonic")
      sub->add_option("name", o.name, "Platonic solid")->required()->check(CLI::IsMember(platonic_names()));
    else
      sub->add_option("file", o.file, "JSON face list {\"faces\": [[v, ...], ...]}")->required();
    for (auto const &[v, vdesc] : {std::pair{"report", "Orders, f-vectors, Euler characteristic and genus"},
                                   std::pair{"verify", "Run the full verification suite"},
                                   std::pair{"stabilizer", "Generators of the base-flag stabilizer"}}) {
      auto *vs = sub->add_subcommand(v, vdesc);
      vs->fallthrough();
      if (std::string(v) == "stabilizer")
        vs->add_option("--tree", o.tree, "Spanning tree strategy")->check(CLI::IsMember({"bfs", "dfs", "paper"}));
      vs->callback([&kind, &verb, name, v] {
        kind = name;
        verb = v;
      });
    }
  };
  add_subject("prism", "The n-prism");
  add_subject("antiprism", "The n-antiprism");
  add_subject("platonic", "A Platonic solid");
  add_subject("map", "A polyhedron read from a JSON face list");

  try {
    app.parse(argc, argv);
  } catch (CLI::Success const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return invalid_input;
  }

  try {
    return run(kind, verb, o);
  } catch (CapExceeded const &e) {
    std::cerr << "monocover: " << e.what() << "\n";
    return cap_hit;
  } catch (std::invalid_argument const &e) {
    std::cerr << "monocover: invalid input: " << e.what() << "\n";
    return invalid_input;
  }
}
