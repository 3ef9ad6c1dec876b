#pragma once

#include <fstream>
#include <limits>
#include <string>

#include <json.hpp>

#include "flag_system.hpp"
#include "presentation.hpp"

namespace monocover {

using ordered_json = nlohmann::ordered_json;

/// Reads {"faces": [[v, ...], ...]}; vertices are non-negative integers.
inline FaceListMap face_list_from_json(nlohmann::json const &doc)
{
  if (!doc.is_object() || !doc.contains("faces"))
    throw InvalidMap("map document must be an object with a \"faces\" array");
  auto const &faces = doc.at("faces");
  if (!faces.is_array())
    throw InvalidMap("\"faces\" must be an array");
  FaceListMap m;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    auto const &face = faces[f];
    if (!face.is_array())
      throw InvalidMap("face " + std::to_string(f) + " is not an array");
    std::vector<int> verts;
    for (auto const &v : face) {
      if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > std::numeric_limits<int>::max())
        throw InvalidMap("face " + std::to_string(f) + " has a vertex that is not a non-negative integer");
      verts.push_back(v.get<int>());
    }
    m.faces.push_back(std::move(verts));
  }
  return m;
}

inline FaceListMap load_face_list(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidMap("cannot open map file " + path);
  auto doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded())
    throw InvalidMap("map file " + path + " is not valid JSON");
  return face_list_from_json(doc);
}

inline ordered_json to_json(FaceListMap const &m)
{
  return ordered_json{{"faces", m.faces}};
}

/// {p, q, extra_relators}; p and q are null without Coxeter data.
inline ordered_json to_json(Presentation const &p)
{
  ordered_json j;
  j["p"] = p.coxeter ? ordered_json(p.coxeter->first) : ordered_json(nullptr);
  j["q"] = p.coxeter ? ordered_json(p.coxeter->second) : ordered_json(nullptr);
  j["extra_relators"] = ordered_json::array();
  for (auto const &w : p.extra_relators)
    j["extra_relators"].push_back(w.str());
  return j;
}

inline Presentation presentation_from_json(nlohmann::json const &j)
{
  Presentation p;
  bool has_p = j.contains("p") && !j.at("p").is_null(), has_q = j.contains("q") && !j.at("q").is_null();
  if (has_p != has_q)
    throw std::invalid_argument("presentation needs both p and q or neither");
  if (has_p)
    p = coxeter_plus(j.at("p").get<int>(), j.at("q").get<int>());
  if (j.contains("extra_relators"))
    for (auto const &w : j.at("extra_relators"))
      p.extra_relators.push_back(Word(w.get<std::string>()).reduced());
  return p;
}

inline ordered_json to_json(FVector const &f)
{
  return ordered_json::array({f.v, f.e, f.f});
}

} // namespace monocover
