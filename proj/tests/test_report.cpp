#include <catch_amalgamated.hpp>

#include <monocover/report.hpp>

using namespace monocover;

namespace {

Record const &find(ReportDocument const &doc, std::string const &name)
{
  for (auto const &r : doc.records)
    if (r.name == name)
      return r;
  throw std::out_of_range("no record " + name);
}

} // namespace

TEST_CASE("face list JSON")
{
  auto m = face_list_from_json(nlohmann::json::parse(R"({"faces": [[0,1,2],[0,2,3],[0,3,1],[1,3,2]]})"));
  CHECK(m.faces.size() == 4);
  CHECK(from_face_list(m).f_vector().v == 4);
  CHECK(to_json(m).dump() == R"({"faces":[[0,1,2],[0,2,3],[0,3,1],[1,3,2]]})");
  CHECK_THROWS_AS(face_list_from_json(nlohmann::json::parse("[1,2]")), InvalidMap);
  CHECK_THROWS_AS(face_list_from_json(nlohmann::json::parse(R"({"faces": 3})")), InvalidMap);
  CHECK_THROWS_AS(face_list_from_json(nlohmann::json::parse(R"({"faces": [[0,1,-2]]})")), InvalidMap);
  CHECK_THROWS_AS(face_list_from_json(nlohmann::json::parse(R"({"faces": [[0,1,"x"]]})")), InvalidMap);
  CHECK_THROWS_AS(load_face_list("/nonexistent/map.json"), InvalidMap);
}

TEST_CASE("presentation JSON round trip")
{
  auto p = minimal_cover_presentation(Family::prism, 5);
  auto j = to_json(p);
  CHECK(j["p"] == 20);
  CHECK(j["q"] == 3);
  CHECK(j["extra_relators"][0] == prism_relator().str());
  CHECK(presentation_from_json(j) == p);
  Presentation bare;
  bare.extra_relators.push_back(Word("abab"));
  CHECK(to_json(bare)["p"].is_null());
  CHECK(presentation_from_json(to_json(bare)) == bare);
  CHECK_THROWS(presentation_from_json(nlohmann::json::parse(R"({"p": 4})")));
}

TEST_CASE("overall verdict and exit code")
{
  ReportDocument doc;
  doc.add("info", "anchor", nullptr, 5);
  doc.add("same", "anchor", 5, 5);
  CHECK(doc.overall() == Verdict::pass);
  CHECK(doc.exit_code() == 0);
  doc.cap("big", "anchor", 7);
  CHECK(doc.overall() == Verdict::cap);
  CHECK(doc.exit_code() == 3);
  doc.add("differs", "anchor", 5, 6);
  CHECK(doc.overall() == Verdict::fail);
  CHECK(doc.exit_code() == 1);
  CHECK(to_json(doc)["verdict"] == "fail");
}

TEST_CASE("prism verify report")
{
  auto doc = verify_document(prism(5));
  CHECK(doc.overall() == Verdict::pass);
  auto j = to_json(doc);
  CHECK(j["schema"] == 1);
  CHECK(j["summary"]["group_order"] == 6000);
  CHECK(find(doc, "group_order").computed == 6000);
  CHECK(find(doc, "coincidence").verdict == Verdict::pass);
  for (auto const &r : doc.records) {
    INFO(r.name);
    CHECK_FALSE(r.anchor.empty());
    CHECK(r.verdict == Verdict::pass);
  }
  CHECK(to_json(verify_document(prism(5))).dump() == j.dump());
  auto text = render_text(doc);
  CHECK(text.find("overall: pass") != std::string::npos);
  CHECK(text.find("group_order: 6000") != std::string::npos);
}

TEST_CASE("antiprism report")
{
  auto doc = report_document(antiprism(3));
  CHECK(doc.overall() == Verdict::pass);
  CHECK(find(doc, "genus").computed == 0);
  CHECK(find(doc, "group_order").computed == 48);
}

TEST_CASE("structure records on divisible n")
{
  auto doc = verify_document(prism(8));
  CHECK(doc.overall() == Verdict::pass);
  CHECK(find(doc, "structure: subgroup order").computed == 8);
  CHECK(find(doc, "structure: (abc)^{3m} central").verdict == Verdict::pass);
  auto anti = verify_document(antiprism(6));
  CHECK(anti.overall() == Verdict::pass);
  CHECK(find(anti, "structure: subgroup order").computed == 16);
}

TEST_CASE("caps are reported, not thrown")
{
  RunConfig cfg;
  cfg.coset_cap = 1000;
  auto doc = verify_document(antiprism(4), cfg);
  CHECK(find(doc, "presented_order").verdict == Verdict::cap);
  CHECK(doc.exit_code() == 3);
}

TEST_CASE("maps without a family")
{
  auto m = prism_faces(5);
  for (auto &face : m.faces)
    std::reverse(face.begin(), face.end());
  auto fs = from_face_list(m);
  auto doc = report_document(fs);
  CHECK(doc.overall() == Verdict::pass);
  CHECK(find(doc, "group_order").computed == 6000);
  CHECK(find(doc, "group_order").expected.is_null());
  CHECK(find(doc, "orientable").computed == true);
  CHECK(doc.data["orientability_method"] == "Cayley graph 2-colouring");
  CHECK(verify_document(fs).overall() == Verdict::pass);
  RunConfig small;
  small.enum_cap = 100;
  CHECK(report_document(fs, small).exit_code() == 3);
}

TEST_CASE("stabilizer report")
{
  auto doc = stabilizer_document(prism(5), TreeStrategy::bfs);
  CHECK(doc.overall() == Verdict::pass);
  CHECK(doc.data["words"].size() == 31);
  CHECK(doc.data["lollipops"].size() == 17);
  CHECK(doc.data["family"].size() == 6);
  CHECK(doc.summary["stabilizer_order"] == 100);
  CHECK(stabilizer_document(antiprism(4), paper_strategy(antiprism(4))).overall() == Verdict::pass);
  CHECK_THROWS(paper_strategy(platonic("cube")));
  CHECK(stabilizer_document(platonic("icosahedron"), TreeStrategy::dfs).overall() == Verdict::pass);
}
