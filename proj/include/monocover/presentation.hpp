#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "words.hpp"

namespace monocover {

/**
 * A group on three involutory generators a, b, c.
 *
 * The relators a^2, b^2, c^2 are implicit. With Coxeter data (p, q) the
 * relators (ab)^p, (bc)^q, (ac)^2 precede the extra relators.
 */
struct Presentation
{
  std::optional<std::pair<int, int>> coxeter;
  std::vector<Word> extra_relators;

  std::vector<Word> relators() const
  {
    std::vector<Word> rels;
    if (coxeter) {
      rels.push_back(words::ab().pow(coxeter->first));
      rels.push_back(Word("bc").pow(coxeter->second));
      rels.push_back(Word("acac"));
    }
    for (auto const &w : extra_relators) {
      auto r = w.reduced();
      if (!r.empty())
        rels.push_back(std::move(r));
    }
    return rels;
  }

  std::string describe() const
  {
    std::string s;
    if (coxeter)
      s = "[" + std::to_string(coxeter->first) + "," + std::to_string(coxeter->second) + "]";
    for (auto const &w : extra_relators)
      s += (s.empty() ? "" : " + ") + w.str();
    return s.empty() ? "<a,b,c | a^2, b^2, c^2>" : s;
  }

  friend bool operator==(Presentation const &, Presentation const &) = default;
};

inline Presentation coxeter_plus(int p, int q, std::vector<Word> extras = {})
{
  if (p < 2 || q < 2)
    throw std::invalid_argument("Coxeter exponents must be at least 2");
  Presentation pr;
  pr.coxeter = std::make_pair(p, q);
  for (auto &w : extras)
    pr.extra_relators.push_back(w.reduced());
  return pr;
}

/// (c(ab)^2 c(ab)^3)^2
inline Word prism_relator()
{
  using namespace words;
  return (c() * ab().pow(2) * c() * ab().pow(3)).pow(2);
}

/// (c(ab)^2 cbc (ab)^2)^2
inline Word antiprism_relator()
{
  using namespace words;
  return (c() * ab().pow(2) * Word("cbc") * ab().pow(2)).pow(2);
}

} // namespace monocover
